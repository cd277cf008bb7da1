#include "sep_facets/facet_engine.hpp"

#include "sep_facets/errors.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <queue>

namespace sep {

namespace {

void require_facet_input(const Graph& g)
{
    if (g.num_edges() == 0)
        throw PreconditionError("facet counting needs at least one edge");
    if (!is_connected(g))
        throw PreconditionError("facet counting needs a connected graph");
}

// Breadth-first order from vertex 0, so every vertex after the root has an
// already-ordered neighbor.
std::vector<Vertex> bfs_order(const std::vector<std::vector<Vertex>>& adj)
{
    std::vector<Vertex> order;
    std::vector<bool> seen(adj.size(), false);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        const auto x = q.front();
        q.pop();
        order.push_back(x);
        for (const auto y : adj[x]) {
            if (!seen[y]) {
                seen[y] = true;
                q.push(y);
            }
        }
    }
    return order;
}

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }

    std::vector<std::uint32_t> parent;
};

// Depth-first labeling search. Connectivity of E_f is tracked with a
// rollback union-find; a component whose vertices have no unlabeled
// neighbors left can never grow, so it must already span the graph.
class LabelSearch {
public:
    explicit LabelSearch(const Graph& g) : n_(g.num_vertices())
    {
        const auto adj = g.adjacency();
        order_ = bfs_order(adj);
        std::vector<std::size_t> pos(n_);
        for (std::size_t k = 0; k < n_; ++k)
            pos[order_[k]] = k;

        earlier_.resize(n_);
        closes_at_.resize(n_);
        close_pos_.resize(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            const auto v = order_[k];
            std::size_t last = k;
            for (const auto w : adj[v]) {
                if (pos[w] < k)
                    earlier_[k].push_back(w);
                last = std::max(last, pos[w]);
            }
            close_pos_[v] = last;
            closes_at_[last].push_back(v);
        }

        value_.assign(n_, 0);
        parent_.assign(n_, 0);
        size_.assign(n_, 0);
        open_.assign(n_, 0);
    }

    template <typename Visit>
    void run(Visit&& visit)
    {
        descend(0, visit);
    }

    std::span<const std::int32_t> values() const { return value_; }

private:
    struct Undo {
        enum class Kind { unite, close } kind;
        std::uint32_t child;
        std::uint32_t root;
    };

    std::uint32_t find(std::uint32_t x) const
    {
        while (parent_[x] != x)
            x = parent_[x];
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        open_[a] += open_[b];
        log_.push_back({Undo::Kind::unite, b, a});
    }

    void close(std::uint32_t x)
    {
        const auto r = find(x);
        --open_[r];
        log_.push_back({Undo::Kind::close, x, r});
    }

    void rollback(std::size_t mark)
    {
        while (log_.size() > mark) {
            const auto u = log_.back();
            log_.pop_back();
            if (u.kind == Undo::Kind::unite) {
                parent_[u.child] = u.child;
                size_[u.root] -= size_[u.child];
                open_[u.root] -= open_[u.child];
            }
            else {
                ++open_[u.root];
            }
        }
    }

    bool dead_component(std::uint32_t x) const
    {
        const auto r = find(x);
        return open_[r] == 0 && size_[r] < n_;
    }

    template <typename Visit>
    void descend(std::size_t k, Visit& visit)
    {
        if (k == n_) {
            visit();
            return;
        }
        const auto v = order_[k];
        std::int32_t lo = 0;
        std::int32_t hi = 0;
        if (k > 0) {
            lo = std::numeric_limits<std::int32_t>::min();
            hi = std::numeric_limits<std::int32_t>::max();
            for (const auto w : earlier_[k]) {
                lo = std::max(lo, value_[w] - 1);
                hi = std::min(hi, value_[w] + 1);
            }
        }
        for (std::int32_t x = lo; x <= hi; ++x) {
            assert(std::abs(x) <= static_cast<std::int32_t>(n_) - 1);
            value_[v] = x;
            const auto mark = log_.size();
            parent_[v] = v;
            size_[v] = 1;
            open_[v] = close_pos_[v] > k ? 1 : 0;
            for (const auto w : earlier_[k]) {
                if (std::abs(value_[w] - x) == 1)
                    unite(v, w);
            }
            for (const auto c : closes_at_[k]) {
                if (c != v)
                    close(c);
            }
            const bool alive = std::none_of(closes_at_[k].begin(), closes_at_[k].end(),
                                            [this](Vertex c) { return dead_component(c); });
            if (alive)
                descend(k + 1, visit);
            rollback(mark);
        }
    }

    std::size_t n_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> earlier_;
    std::vector<std::vector<Vertex>> closes_at_;
    std::vector<std::size_t> close_pos_;
    std::vector<std::int32_t> value_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::size_t> size_;
    std::vector<std::int32_t> open_;
    std::vector<Undo> log_;
};

FacetFunction normalized(std::span<const std::int32_t> values)
{
    const auto lowest = *std::min_element(values.begin(), values.end());
    FacetFunction f;
    f.values.reserve(values.size());
    for (const auto x : values)
        f.values.push_back(x - lowest);
    return f;
}

// Counts maps q: classes -> Z with q(0) = 0 and |q(a) - q(b)| = 1 on every
// edge of a connected (quotient) graph.
std::uint64_t count_unit_step_labelings(const std::vector<std::vector<Vertex>>& adj)
{
    const auto order = bfs_order(adj);
    const auto n = adj.size();
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k)
        pos[order[k]] = k;
    std::vector<std::vector<Vertex>> earlier(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto w : adj[order[k]]) {
            if (pos[w] < k)
                earlier[k].push_back(w);
        }
    }

    std::vector<std::int32_t> value(n, 0);
    std::uint64_t total = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            ++total;
            return;
        }
        const auto v = order[k];
        const auto& back = earlier[k];
        const auto base = value[back.front()];
        for (const auto candidate : {base - 1, base + 1}) {
            const bool ok = std::all_of(back.begin(), back.end(),
                                        [&](Vertex w) { return std::abs(value[w] - candidate) == 1; });
            if (ok) {
                value[v] = candidate;
                self(self, k + 1);
            }
        }
    };
    if (n == 1)
        return 1;
    rec(rec, 1);
    return total;
}

} // namespace

EdgeMask unit_edges(const Graph& g, const FacetFunction& f)
{
    EdgeMask mask = 0;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (std::abs(f.values[edges[i].u] - f.values[edges[i].v]) == 1)
            mask |= EdgeMask{1} << i;
    }
    return mask;
}

FacetFunction negated(const FacetFunction& f)
{
    std::vector<std::int32_t> neg;
    neg.reserve(f.values.size());
    for (const auto x : f.values)
        neg.push_back(-x);
    return normalized(neg);
}

void for_each_facet_function(const Graph& g, const std::function<void(const FacetFunction&)>& visit)
{
    require_facet_input(g);
    LabelSearch search(g);
    search.run([&] { visit(normalized(search.values())); });
}

std::vector<FacetFunction> enumerate_facet_functions(const Graph& g)
{
    std::vector<FacetFunction> out;
    for_each_facet_function(g, [&](const FacetFunction& f) { out.push_back(f); });
    std::sort(out.begin(), out.end());
    // Root pinning already makes every function unique.
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BigCount count_facets(const Graph& g)
{
    require_facet_input(g);
    LabelSearch search(g);
    std::uint64_t total = 0;
    search.run([&] { ++total; });
    return BigCount(static_cast<unsigned long>(total));
}

std::vector<EdgeMask> enumerate_facet_subgraphs(const Graph& g)
{
    require_facet_input(g);
    const auto n = g.num_vertices();
    const auto edges = g.edges();
    if (edges.size() > 64)
        throw ResourceGuardError("facet subgraph enumeration supports at most 64 edges");
    if (n > 30)
        throw ResourceGuardError("facet subgraph enumeration supports at most 30 vertices");

    // A connected bipartite subgraph has a unique bipartition, and adding any
    // edge across that bipartition keeps it bipartite. So the maximal ones
    // are among the connected spanning cuts.
    std::vector<EdgeMask> cuts;
    const std::uint64_t colorings = std::uint64_t{1} << (n - 1);
    for (std::uint64_t side = 0; side < colorings; ++side) {
        // Vertex 0 always has color 0; vertex i > 0 takes bit i-1.
        auto color = [&](Vertex x) { return x == 0 ? 0u : static_cast<unsigned>((side >> (x - 1)) & 1u); };
        EdgeMask cut = 0;
        DisjointSets ds(n);
        std::size_t components = n;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (color(edges[i].u) != color(edges[i].v)) {
                cut |= EdgeMask{1} << i;
                if (ds.unite(edges[i].u, edges[i].v))
                    --components;
            }
        }
        if (components == 1)
            cuts.push_back(cut);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<EdgeMask> maximal;
    for (const auto c : cuts) {
        const bool dominated = std::any_of(cuts.begin(), cuts.end(),
                                           [c](EdgeMask d) { return d != c && (c & d) == c; });
        if (!dominated)
            maximal.push_back(c);
    }
    return maximal;
}

BigCount count_facets_via_subgraphs(const Graph& g)
{
    const auto subgraphs = enumerate_facet_subgraphs(g);
    const auto n = g.num_vertices();
    const auto edges = g.edges();
    BigCount total = 0;
    for (const auto h : subgraphs) {
        DisjointSets ds(n);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!(h >> i & 1u))
                ds.unite(edges[i].u, edges[i].v);
        }
        // Renumber classes so that the class of vertex 0 is 0.
        std::vector<std::int64_t> class_id(n, -1);
        std::vector<Vertex> cls(n);
        Vertex next = 0;
        for (Vertex x = 0; x < n; ++x) {
            const auto r = ds.find(x);
            if (class_id[r] < 0)
                class_id[r] = next++;
            cls[x] = static_cast<Vertex>(class_id[r]);
        }
        std::vector<std::vector<Vertex>> quotient(next);
        bool contradictory = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!(h >> i & 1u))
                continue;
            const auto a = cls[edges[i].u];
            const auto b = cls[edges[i].v];
            if (a == b) {
                contradictory = true;
                break;
            }
            if (std::find(quotient[a].begin(), quotient[a].end(), b) == quotient[a].end()) {
                quotient[a].push_back(b);
                quotient[b].push_back(a);
            }
        }
        if (!contradictory)
            total += static_cast<unsigned long>(count_unit_step_labelings(quotient));
    }
    return total;
}

} // namespace sep
