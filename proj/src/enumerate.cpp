#include "sep_facets/enumerate.hpp"

#include "sep_facets/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace sep {

Guards Guards::unlimited()
{
    constexpr auto big = std::numeric_limits<std::uint32_t>::max();
    return Guards{kMaxCanonicalVertices, big, big};
}

Guards Guards::from_env()
{
    Guards g;
    const char* raw = std::getenv("SEP_FACETS_GUARD");
    if (raw == nullptr || *raw == '\0')
        return g;
    const std::string text(raw);
    if (text == "off")
        return unlimited();
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InvalidParameter("SEP_FACETS_GUARD: expected key=value, got '" + item + "'");
        const auto key = item.substr(0, eq);
        std::uint32_t value = 0;
        try {
            value = static_cast<std::uint32_t>(std::stoul(item.substr(eq + 1)));
        }
        catch (const std::exception&) {
            throw InvalidParameter("SEP_FACETS_GUARD: bad value in '" + item + "'");
        }
        if (key == "exhaustive")
            g.exhaustive_n = value;
        else if (key == "formula")
            g.formula_n = value;
        else if (key == "identity")
            g.identity_k = value;
        else
            throw InvalidParameter("SEP_FACETS_GUARD: unknown key '" + key + "'");
    }
    return g;
}

namespace {

using Masks = std::vector<std::uint32_t>;

std::size_t pair_bits(std::size_t n) { return n * (n - 1) / 2; }

std::size_t pair_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; } // i < j

bool connected_masks(const Masks& adj)
{
    const auto n = adj.size();
    if (n <= 1)
        return true;
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (auto f = frontier; f != 0; f &= f - 1)
            next |= adj[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

// Iterated degree refinement; colors are ranks of sorted signatures, so
// the result does not depend on vertex labels.
std::vector<std::uint32_t> refine_colors(const Masks& adj)
{
    const auto n = adj.size();
    std::vector<std::uint32_t> color(n);
    for (std::size_t v = 0; v < n; ++v)
        color[v] = static_cast<std::uint32_t>(std::popcount(adj[v]));

    std::size_t classes = 0;
    while (true) {
        std::vector<std::vector<std::uint32_t>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<std::uint32_t> around;
            for (auto m = adj[v]; m != 0; m &= m - 1)
                around.push_back(color[std::countr_zero(m)]);
            std::sort(around.begin(), around.end());
            sig[v].insert(sig[v].end(), around.begin(), around.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t v = 0; v < n; ++v)
            color[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (sorted.size() == classes)
            break;
        classes = sorted.size();
    }
    return color;
}

class Canonicalizer {
public:
    explicit Canonicalizer(const Masks& adj) : adj_(adj), n_(adj.size()), bits_(pair_bits(adj.size()))
    {
        const auto color = refine_colors(adj);
        std::vector<std::uint32_t> order(n_);
        for (std::uint32_t v = 0; v < n_; ++v)
            order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return color[a] < color[b]; });
        // Cell of each position, and members of that cell.
        for (std::size_t p = 0; p < n_; ++p) {
            if (p == 0 || color[order[p]] != color[order[p - 1]])
                cells_.emplace_back();
            cells_.back().push_back(order[p]);
            cell_at_.push_back(cells_.size() - 1);
        }
        placed_.resize(n_);
    }

    std::uint64_t run()
    {
        if (n_ <= 1)
            return 0;
        descend(0, 0, 0);
        return best_;
    }

private:
    void descend(std::size_t p, std::uint64_t code, std::uint32_t used)
    {
        if (p == n_) {
            best_ = std::min(best_, code);
            return;
        }
        const auto determined = (p + 1) * p / 2;
        for (const auto v : cells_[cell_at_[p]]) {
            if (used >> v & 1u)
                continue;
            auto next = code;
            for (std::size_t i = 0; i < p; ++i) {
                if (adj_[v] >> placed_[i] & 1u)
                    next |= std::uint64_t{1} << (bits_ - 1 - pair_index(i, p));
            }
            if (best_ != kNone && (next >> (bits_ - determined)) > (best_ >> (bits_ - determined)))
                continue;
            placed_[p] = v;
            descend(p + 1, next, used | (1u << v));
        }
    }

    static constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

    const Masks& adj_;
    std::size_t n_;
    std::size_t bits_;
    std::vector<std::vector<std::uint32_t>> cells_;
    std::vector<std::size_t> cell_at_;
    std::vector<std::uint32_t> placed_;
    std::uint64_t best_ = kNone;
};

std::uint64_t canonical_masks(const Masks& adj) { return Canonicalizer(adj).run(); }

Masks masks_from_code(std::size_t n, std::uint64_t code)
{
    Masks adj(n, 0);
    const auto bits = pair_bits(n);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (code >> (bits - 1 - pair_index(i, j)) & 1u) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
        }
    }
    return adj;
}

std::set<std::uint64_t> children(std::size_t n, const std::set<std::uint64_t>& level)
{
    std::set<std::uint64_t> out;
    for (const auto code : level) {
        auto adj = masks_from_code(n, code);
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                if (adj[i] >> j & 1u)
                    continue;
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
                out.insert(canonical_masks(adj));
                adj[i] &= ~(1u << j);
                adj[j] &= ~(1u << i);
            }
        }
    }
    return out;
}

std::set<std::uint64_t> only_connected(std::size_t n, const std::set<std::uint64_t>& level)
{
    std::set<std::uint64_t> out;
    for (const auto code : level) {
        if (connected_masks(masks_from_code(n, code)))
            out.insert(code);
    }
    return out;
}

void check_guard(std::uint32_t n, const Guards& guards)
{
    if (n > kMaxCanonicalVertices)
        throw ResourceGuardError("graph enumeration supports at most " + std::to_string(kMaxCanonicalVertices)
                                 + " vertices");
    if (n > guards.exhaustive_n)
        throw ResourceGuardError("exhaustive search with n = " + std::to_string(n) + " exceeds guard n <= "
                                 + std::to_string(guards.exhaustive_n));
}

std::vector<Graph> decode_all(std::size_t n, const std::set<std::uint64_t>& codes)
{
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (const auto c : codes)
        out.push_back(graph_from_code(n, c));
    return out;
}

// Connected classes are grown edge by edge. Below n - 1 edges every graph
// class is kept (trees grow out of forests); from n - 1 edges on, removing a
// cycle edge keeps a graph connected, so connected classes suffice.
template <typename OnLevel>
void grow_levels(std::uint32_t n, std::uint32_t max_edges, OnLevel&& on_level)
{
    std::set<std::uint64_t> level{0};
    const std::uint32_t tree_edges = n == 0 ? 0 : n - 1;
    for (std::uint32_t e = 0; e <= max_edges; ++e) {
        if (e > 0)
            level = children(n, level);
        if (e == tree_edges)
            level = only_connected(n, level);
        on_level(e, e >= tree_edges ? level : std::set<std::uint64_t>{});
        if (level.empty())
            break;
    }
}

} // namespace

std::uint64_t canonical_code(const Graph& g)
{
    const auto n = g.num_vertices();
    if (n > kMaxCanonicalVertices)
        throw ResourceGuardError("canonical code supports at most " + std::to_string(kMaxCanonicalVertices)
                                 + " vertices");
    Masks adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    return canonical_masks(adj);
}

Graph graph_from_code(std::size_t n, std::uint64_t code)
{
    const auto adj = masks_from_code(n, code);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (adj[i] >> j & 1u)
                edges.push_back({i, j});
        }
    }
    return Graph(n, std::move(edges));
}

std::vector<Graph> enumerate_connected_graphs(std::uint32_t n, std::uint32_t e, const Guards& guards)
{
    check_guard(n, guards);
    const auto max_edges = static_cast<std::uint32_t>(pair_bits(n));
    if (n == 0 || e > max_edges || e + 1 < n)
        return {};
    std::vector<Graph> out;
    grow_levels(n, e, [&](std::uint32_t edges, const std::set<std::uint64_t>& level) {
        if (edges == e)
            out = decode_all(n, level);
    });
    return out;
}

std::vector<std::vector<Graph>> enumerate_connected_graphs_by_edges(std::uint32_t n, const Guards& guards)
{
    check_guard(n, guards);
    const auto max_edges = static_cast<std::uint32_t>(pair_bits(n));
    std::vector<std::vector<Graph>> out(max_edges + 1);
    if (n == 0)
        return out;
    grow_levels(n, max_edges, [&](std::uint32_t edges, const std::set<std::uint64_t>& level) {
        out[edges] = decode_all(n, level);
    });
    return out;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn)
{
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const auto i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    const auto threads = std::min<std::size_t>(jobs, count);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace sep
