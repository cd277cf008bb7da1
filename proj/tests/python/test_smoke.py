import math

import pytest

import sep_facets as sf


def test_path_example():
    assert sf.count_facets(3, [(0, 1), (1, 2)]) == 4
    assert sf.count_facets(3, [(0, 1), (1, 2)], method="subgraphs") == 4
    assert sorted(sf.facet_functions(3, [(0, 1), (1, 2)])) == [[0, 1, 0], [0, 1, 2], [1, 0, 1], [2, 1, 0]]


def test_formulas_match_counts():
    for spec in ["cb:4,2,2", "windmill:7,3", "gnij:7,5,3", "cycle:7"]:
        n, edges = sf.family_graph(spec)
        assert sf.formula(spec) == sf.count_facets(n, edges)
    assert sf.m_of_n(7) == 180
    assert sf.f_same_parity([3, 3, 1]) == 18
    assert sf.n_cb([3, 3, 2]) == 126


def test_big_integers_are_exact():
    m = sf.m_of_n(401)
    k = 201
    assert m == k * k * math.comb(k - 1, (k - 1) // 2) ** 2
    assert sf.formula("cycle:201") == 201 * math.comb(200, 100)


def test_verify_report():
    report = sf.verify("nn1", 6)
    assert report["status"] == "verified"
    assert report["max"] == "72"


def test_sample_is_seeded():
    a = sf.sample(7, 9, 5, seed=3)
    b = sf.sample(7, 9, 5, seed=3)
    assert a == b
    assert all(r["facets"] <= 216 for r in a)


def test_errors():
    with pytest.raises(sf.PreconditionError):
        sf.count_facets(4, [(0, 1), (2, 3)])
    with pytest.raises(sf.InvalidParameter):
        sf.formula("bogus:1")
    with pytest.raises(ValueError):
        sf.count_facets(2, [(0, 0)])
