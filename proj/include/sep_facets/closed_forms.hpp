#pragma once

#include "sep_facets/big_count.hpp"
#include "sep_facets/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace sep {

/// binom(a, b) with the convention binom(a, b) = 0 for b < 0 or b > a.
BigCount binom(std::int64_t a, std::int64_t b);

// Facet counts of the graph families, exact.
BigCount n_cycle(std::uint32_t m); // m = 2 uses the two-vertex convention
BigCount n_tree(std::uint32_t n);
BigCount n_wedge(std::span<const BigCount> parts);
BigCount n_cnm(std::uint32_t n, std::uint32_t m);
BigCount n_gnij(std::uint32_t n, std::uint32_t i, std::uint32_t j);
BigCount n_theta(std::uint32_t m, std::uint32_t t);
BigCount n_windmill(std::uint32_t n, std::uint32_t r);
// Wedge of cycles (length 2 allowed) plus `tail` pendant edges.
BigCount n_wedge_of_cycles(std::span<const std::uint32_t> cycle_lengths, std::uint32_t tail);

/// Facet count of the conjectured maximizer among connected graphs with
/// n vertices and n + 1 edges: two near-equal odd cycles wedged, plus a
/// pendant edge when n is even.
BigCount m_of_n(std::uint32_t n);

/// Sum over labelings of the shortest path:
///   sum_{j=0}^{m_t} binom(m_t, j) prod_{k<t} binom(m_k, (m_k - m_t)/2 + j).
/// All entries must share a parity. Entries may be 1 any number of times.
BigCount f_same_parity(const PathVector& m);

/// Facet count of CB(m) for any parity pattern, by formula only.
BigCount n_cb(const PathVector& m);

struct CycleSpec { std::uint32_t m; };
struct TreeSpec { std::uint32_t n; };
struct CnmSpec { std::uint32_t n, m; };
struct GnijSpec { std::uint32_t n, i, j; };
struct CbSpec { PathVector paths; };
struct ThetaSpec { std::uint32_t m, t; };
struct WindmillSpec { std::uint32_t n, r; };
struct WedgeOfCyclesSpec {
    std::vector<std::uint32_t> cycles;
    std::uint32_t tail = 0;
};

using FamilySpec = std::variant<CycleSpec, TreeSpec, CnmSpec, GnijSpec, CbSpec, ThetaSpec,
                                WindmillSpec, WedgeOfCyclesSpec>;

BigCount evaluate(const FamilySpec& spec);

/// Simple-graph realization. Parallel edges (unit CB paths, C2 cycles)
/// collapse to a single edge, which leaves the polytope unchanged.
Graph realize(const FamilySpec& spec);

std::string describe(const FamilySpec& spec);

/// Parses "name:p1,p2,..." (e.g. "cb:4,2,2", "windmill:7,3").
FamilySpec parse_family(const std::string& text);
FamilySpec make_family(const std::string& name, std::span<const std::uint32_t> params);

} // namespace sep
