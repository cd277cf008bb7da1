#pragma once

#include "sep_facets/big_count.hpp"
#include "sep_facets/graph.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace sep {

/// Integer vertex labeling f: V -> Z defining one facet of the symmetric
/// edge polytope. Stored normalized so that the minimum value is 0.
struct FacetFunction {
    std::vector<std::int32_t> values;

    auto operator<=>(const FacetFunction&) const = default;
};

// Bit i refers to g.edges()[i].
using EdgeMask = std::uint64_t;

// Edges uv with |f(u) - f(v)| = 1.
EdgeMask unit_edges(const Graph& g, const FacetFunction& f);
FacetFunction negated(const FacetFunction& f);

/// Streams every normalized facet-defining function of a connected graph
/// exactly once, in search order. Throws PreconditionError if g is
/// disconnected or has no edges.
void for_each_facet_function(const Graph& g, const std::function<void(const FacetFunction&)>& visit);

/// All facet-defining functions, sorted lexicographically by value vector.
std::vector<FacetFunction> enumerate_facet_functions(const Graph& g);

/// Number of facets; does not materialize the functions.
BigCount count_facets(const Graph& g);

/// Maximal connected spanning bipartite subgraphs, sorted by edge mask.
/// Requires at most 64 edges.
std::vector<EdgeMask> enumerate_facet_subgraphs(const Graph& g);

/// Independent count: for each facet subgraph H, contract the edges outside
/// H and count labelings with unit steps on every remaining edge.
BigCount count_facets_via_subgraphs(const Graph& g);

} // namespace sep
