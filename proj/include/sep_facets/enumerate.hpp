#pragma once

#include "sep_facets/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace sep {

/// Resource limits for exhaustive and formula sweeps.
struct Guards {
    std::uint32_t exhaustive_n = 7; // largest vertex count for graph enumeration
    std::uint32_t formula_n = 1000; // largest n for closed-form sweeps
    std::uint32_t identity_k = 10000;

    static Guards unlimited();
    // Defaults overridden by SEP_FACETS_GUARD: either "off", or a comma
    // separated list such as "exhaustive=8,formula=2000,identity=20000".
    static Guards from_env();
};

// Representation limit of the canonical code (n(n-1)/2 bits in 64).
inline constexpr std::uint32_t kMaxCanonicalVertices = 11;

/// Canonical code: the minimum adjacency bitstring over all vertex orders
/// that respect an isomorphism-invariant color refinement. Equal codes
/// means isomorphic graphs.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// One representative per isomorphism class of connected simple graphs with
/// n vertices and e edges, in increasing canonical-code order. Throws
/// ResourceGuardError when n exceeds guards.exhaustive_n.
std::vector<Graph> enumerate_connected_graphs(std::uint32_t n, std::uint32_t e, const Guards& guards = {});

/// Connected classes on n vertices for every edge count; index = edge count.
std::vector<std::vector<Graph>> enumerate_connected_graphs_by_edges(std::uint32_t n, const Guards& guards = {});

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

} // namespace sep
