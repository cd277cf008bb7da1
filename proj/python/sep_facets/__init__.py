"""Facet counts of symmetric edge polytopes."""

import json

from ._core import (
    InvalidParameter,
    ParseError,
    PreconditionError,
    ResourceGuardError,
    count_facets,
    f_same_parity,
    facet_functions,
    family_graph,
    formula,
    m_of_n,
    n_cb,
    sample,
)
from ._core import verify_json as _verify_json

__all__ = [
    "InvalidParameter",
    "ParseError",
    "PreconditionError",
    "ResourceGuardError",
    "count_facets",
    "f_same_parity",
    "facet_functions",
    "family_graph",
    "formula",
    "m_of_n",
    "n_cb",
    "sample",
    "verify",
]


def verify(check_id, n):
    """Run one check and return its report as a dict."""
    return json.loads(_verify_json(check_id, n))
