#include "sep_facets/graph.hpp"

#include "sep_facets/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace sep {

Graph::Graph(std::size_t n) : n_(n) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
{
    for (auto& e : edges_) {
        if (e.u == e.v)
            throw InvalidParameter("self-loop at vertex " + std::to_string(e.u));
        if (e.u >= n_ || e.v >= n_)
            throw InvalidParameter("edge endpoint out of range: " + std::to_string(e.u) + " "
                                   + std::to_string(e.v));
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidParameter("duplicate edge");
}

bool Graph::has_edge(Vertex a, Vertex b) const
{
    if (a > b)
        std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<std::vector<Vertex>> Graph::adjacency() const
{
    std::vector<std::vector<Vertex>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

std::vector<std::size_t> Graph::degrees() const
{
    std::vector<std::size_t> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

PathVector::PathVector(std::vector<std::uint32_t> lengths) : lengths_(std::move(lengths))
{
    if (lengths_.empty())
        throw InvalidParameter("path vector must be nonempty");
    if (std::find(lengths_.begin(), lengths_.end(), 0u) != lengths_.end())
        throw InvalidParameter("path lengths must be positive");
    std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

std::size_t PathVector::unit_paths() const
{
    return static_cast<std::size_t>(std::count(lengths_.begin(), lengths_.end(), 1u));
}

std::uint64_t PathVector::total_length() const
{
    return std::accumulate(lengths_.begin(), lengths_.end(), std::uint64_t{0});
}

Graph cycle(std::uint32_t m)
{
    if (m < 3)
        throw InvalidParameter("cycle length must be at least 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < m; ++i)
        edges.push_back({i, (i + 1) % m});
    return Graph(m, std::move(edges));
}

Graph path(std::uint32_t m)
{
    if (m < 1)
        throw InvalidParameter("path length must be at least 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < m; ++i)
        edges.push_back({i, i + 1});
    return Graph(m + 1, std::move(edges));
}

Graph star(std::uint32_t leaves)
{
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; ++i)
        edges.push_back({0, i});
    return Graph(leaves + 1, std::move(edges));
}

Graph wedge(const Graph& g, const Graph& h, Vertex u, Vertex v)
{
    if (g.num_vertices() == 0 || h.num_vertices() == 0)
        throw InvalidParameter("wedge of an empty graph");
    if (u >= g.num_vertices() || v >= h.num_vertices())
        throw InvalidParameter("wedge identification vertex out of range");

    const auto ng = static_cast<Vertex>(g.num_vertices());
    // h's vertex v becomes u; the rest follow g's vertices in order.
    auto relabel = [&](Vertex x) -> Vertex {
        if (x == v)
            return u;
        return ng + (x < v ? x : x - 1);
    };
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (const auto& e : h.edges())
        edges.push_back({relabel(e.u), relabel(e.v)});
    return Graph(g.num_vertices() + h.num_vertices() - 1, std::move(edges));
}

Graph build_cnm(std::uint32_t n, std::uint32_t m)
{
    if (m < 3 || m > n)
        throw InvalidParameter("C(n,m) requires 3 <= m <= n");
    if (n == m)
        return cycle(m);
    return wedge(cycle(m), path(n - m), 0, 0);
}

Graph build_gnij(std::uint32_t n, std::uint32_t i, std::uint32_t j)
{
    if (i < 3 || j < 3 || i + j > n + 1)
        throw InvalidParameter("G(n,i,j) requires i, j >= 3 and i + j <= n + 1");
    auto g = wedge(cycle(i), cycle(j), 0, 0);
    if (const auto tail = n + 1 - i - j; tail > 0)
        g = wedge(g, path(tail), 0, 0);
    return g;
}

Graph build_cb(const PathVector& m)
{
    if (m.size() < 2)
        throw InvalidParameter("CB needs at least two paths");
    if (m.unit_paths() > 1)
        throw MultigraphError("CB with two or more unit paths is a multigraph");

    // Endpoints are 0 and 1; internal vertices are numbered path by path.
    std::vector<Edge> edges;
    Vertex next = 2;
    for (const auto len : m.lengths()) {
        Vertex prev = 0;
        for (std::uint32_t step = 1; step < len; ++step) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, 1});
    }
    return Graph(next, std::move(edges));
}

Graph build_theta(std::uint32_t m, std::uint32_t t)
{
    if (m == 1 && t >= 2)
        throw MultigraphError("theta graph with unit paths is a multigraph");
    if (m < 2 || t < 2)
        throw InvalidParameter("theta graph requires m >= 2 and t >= 2");
    return build_cb(PathVector(std::vector<std::uint32_t>(t, m)));
}

Graph build_windmill(std::uint32_t n, std::uint32_t r)
{
    if (n < 1 || 2 * r > n - 1)
        throw InvalidParameter("WM(n,r) requires n >= 1 and 0 <= r <= (n-1)/2");
    std::vector<Edge> edges;
    for (Vertex x = 1; x < n; ++x)
        edges.push_back({0, x});
    for (Vertex k = 0; k < r; ++k)
        edges.push_back({2 * k + 1, 2 * k + 2});
    return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g)
{
    const auto n = g.num_vertices();
    if (n <= 1)
        return true;
    const auto adj = g.adjacency();
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (const auto y : adj[x]) {
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g)
{
    const auto n = g.num_vertices();
    const auto adj = g.adjacency();
    constexpr std::uint8_t unset = 2;
    std::vector<std::uint8_t> color(n, unset);
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] != unset)
            continue;
        color[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const auto x = q.front();
            q.pop();
            for (const auto y : adj[x]) {
                if (color[y] == unset) {
                    color[y] = color[x] ^ 1u;
                    q.push(y);
                }
                else if (color[y] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

} // namespace sep
