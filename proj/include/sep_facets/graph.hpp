#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sep {

using Vertex = std::uint32_t;

// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// The edge list is kept sorted and deduplicated, so two graphs with the
/// same edge set compare equal and serialize identically. Construction
/// rejects self-loops, duplicate edges and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool has_edge(Vertex a, Vertex b) const;
    std::vector<std::vector<Vertex>> adjacency() const;
    std::vector<std::size_t> degrees() const;

    bool operator==(const Graph&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// Multiset of path lengths, sorted descending on construction.
class PathVector {
public:
    explicit PathVector(std::vector<std::uint32_t> lengths);

    std::span<const std::uint32_t> lengths() const noexcept { return lengths_; }
    std::size_t size() const noexcept { return lengths_.size(); }
    std::uint32_t operator[](std::size_t i) const { return lengths_[i]; }
    std::uint32_t shortest() const { return lengths_.back(); }
    std::size_t unit_paths() const;
    std::uint64_t total_length() const;

    bool operator==(const PathVector&) const = default;

private:
    std::vector<std::uint32_t> lengths_;
};

// Families. Wedges always identify the lowest-labeled vertex of each part.
Graph cycle(std::uint32_t m);
Graph path(std::uint32_t m);
Graph star(std::uint32_t leaves);
Graph wedge(const Graph& g, const Graph& h, Vertex u, Vertex v);
Graph build_cnm(std::uint32_t n, std::uint32_t m);
Graph build_gnij(std::uint32_t n, std::uint32_t i, std::uint32_t j);
Graph build_cb(const PathVector& m);
Graph build_theta(std::uint32_t m, std::uint32_t t);
Graph build_windmill(std::uint32_t n, std::uint32_t r);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
// Two-coloring with vertex 0 (of each component) colored 0, or nullopt.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);

// Edge-list text: first line n, then "u v" per edge; '#' starts a comment.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
// {"n": int, "edges": [[u, v], ...]}
Graph parse_graph_json(std::string_view text);
std::string serialize_graph_json(const Graph& g);

} // namespace sep
