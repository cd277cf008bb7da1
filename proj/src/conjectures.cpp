#include "sep_facets/conjectures.hpp"

#include "sep_facets/closed_forms.hpp"
#include "sep_facets/errors.hpp"
#include "sep_facets/facet_engine.hpp"
#include "sep_facets/sampler.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <set>

namespace sep {

namespace {

using Clock = std::chrono::steady_clock;
using Triple = std::array<std::uint32_t, 3>;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string tuple_name(const std::string& prefix, std::span<const std::uint32_t> xs)
{
    std::string out = prefix + "(";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out + ")";
}

void require_formula_guard(std::uint32_t n, const SweepOptions& opts)
{
    if (n > opts.guards.formula_n)
        throw ResourceGuardError("formula sweep at n = " + std::to_string(n) + " exceeds guard n <= "
                                 + std::to_string(opts.guards.formula_n));
}

void fail(ConjectureReport& r, std::string witness, std::string reason)
{
    r.status = Status::counterexample;
    r.witnesses.push_back(std::move(witness));
    r.details["failure"] = std::move(reason);
}

// Triples x1 >= x2 >= x3 >= 1 with the given sum. With same_parity set,
// only triples whose entries share a parity.
std::vector<Triple> triples_with_sum(std::uint32_t sum, bool same_parity)
{
    std::vector<Triple> out;
    for (std::uint32_t x3 = 1; 3 * x3 <= sum; ++x3) {
        for (std::uint32_t x2 = x3; x2 + x2 + x3 <= sum; ++x2) {
            const auto x1 = sum - x2 - x3;
            if (same_parity && (x1 % 2 != x2 % 2 || x2 % 2 != x3 % 2))
                continue;
            out.push_back({x1, x2, x3});
        }
    }
    return out;
}

BigCount f_of(const Triple& t) { return f_same_parity(PathVector({t[0], t[1], t[2]})); }

BigCount cb_of(std::span<const std::uint32_t> xs)
{
    return n_cb(PathVector(std::vector<std::uint32_t>(xs.begin(), xs.end())));
}

// Vertices left after repeatedly stripping leaves.
std::size_t two_core_size(const Graph& g)
{
    auto deg = g.degrees();
    const auto adj = g.adjacency();
    std::vector<bool> removed(g.num_vertices(), false);
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (deg[v] <= 1)
            leaves.push_back(v);
    }
    std::size_t left = g.num_vertices();
    while (!leaves.empty()) {
        const auto v = leaves.back();
        leaves.pop_back();
        if (removed[v])
            continue;
        removed[v] = true;
        --left;
        for (const auto w : adj[v]) {
            if (!removed[w] && --deg[w] == 1)
                leaves.push_back(w);
        }
    }
    return left;
}

bool has_leaf(const Graph& g)
{
    const auto deg = g.degrees();
    return std::find(deg.begin(), deg.end(), std::size_t{1}) != deg.end();
}

std::vector<BigCount> count_all(std::span<const Graph> graphs, unsigned jobs)
{
    std::vector<BigCount> counts(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) { counts[i] = count_facets(graphs[i]); });
    return counts;
}

} // namespace

std::string to_string(Status s)
{
    switch (s) {
    case Status::verified:
        return "verified";
    case Status::partial:
        return "partial";
    case Status::counterexample:
        return "counterexample";
    }
    return "unknown";
}

nlohmann::json ConjectureReport::to_json(bool include_timing) const
{
    nlohmann::json j{{"id", id},
                     {"params", params},
                     {"status", to_string(status)},
                     {"max", to_decimal(max)},
                     {"witnesses", witnesses},
                     {"details", details}};
    if (include_timing)
        j["elapsed_ms"] = elapsed_ms;
    return j;
}

ConjectureReport merge(std::span<const ConjectureReport> reports)
{
    if (reports.empty())
        throw InvalidParameter("nothing to merge");
    ConjectureReport out;
    out.id = reports.front().id;
    out.max = reports.front().max;
    std::set<std::string> seen;
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& r : reports) {
        if (r.id != out.id)
            throw InvalidParameter("cannot merge reports with different ids");
        out.status = std::max(out.status, r.status);
        if (r.max > out.max)
            out.max = r.max;
        for (const auto& w : r.witnesses) {
            if (seen.insert(w).second)
                out.witnesses.push_back(w);
        }
        out.elapsed_ms += r.elapsed_ms;
        runs.push_back(r.params);
        if (r.status == Status::counterexample && !out.details.contains("failure"))
            out.details["failure"] = r.details.value("failure", std::string{});
    }
    out.params = {{"runs", runs}};
    out.details["merged"] = reports.size();
    return out;
}

MaximizerRecord exhaustive_max(std::uint32_t n, std::uint32_t e, const SweepOptions& opts)
{
    MaximizerRecord rec;
    rec.n = n;
    rec.e = e;
    const auto graphs = enumerate_connected_graphs(n, e, opts.guards);
    rec.classes = graphs.size();
    const auto counts = count_all(graphs, opts.jobs);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (counts[i] > rec.max) {
            rec.max = counts[i];
            rec.argmax.clear();
        }
        if (counts[i] == rec.max)
            rec.argmax.push_back(graphs[i]);
    }
    return rec;
}

ConjectureReport check_nn_max(std::uint32_t n, const SweepOptions& opts)
{
    if (n < 3)
        throw InvalidParameter("nnmax requires n >= 3");
    const auto start = Clock::now();
    ConjectureReport r;
    r.id = "nnmax";
    r.params = {{"n", n}};
    const std::uint32_t best_cycle = n % 2 == 1 ? n : n - 1;
    const auto expected = n_cnm(n, best_cycle);
    r.details["expected_maximizer"] = "C(" + std::to_string(n) + "," + std::to_string(best_cycle) + ")";
    r.details["expected_max"] = to_decimal(expected);

    if (n <= opts.guards.exhaustive_n) {
        r.details["mode"] = "exhaustive";
        const auto graphs = enumerate_connected_graphs(n, n, opts.guards);
        const auto counts = count_all(graphs, opts.jobs);
        r.details["classes"] = graphs.size();
        std::vector<Graph> argmax;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            // Unicyclic: the 2-core is the cycle.
            const auto formula = n_cnm(n, static_cast<std::uint32_t>(two_core_size(graphs[i])));
            if (formula != counts[i]) {
                fail(r, serialize_graph(graphs[i]), "count differs from C(n,m) formula");
                r.elapsed_ms = ms_since(start);
                return r;
            }
            if (counts[i] > r.max) {
                r.max = counts[i];
                argmax.clear();
            }
            if (counts[i] == r.max)
                argmax.push_back(graphs[i]);
        }
        for (const auto& g : argmax)
            r.witnesses.push_back(serialize_graph(g));
        const auto target = canonical_code(build_cnm(n, best_cycle));
        const bool found = std::any_of(argmax.begin(), argmax.end(),
                                       [&](const Graph& g) { return canonical_code(g) == target; });
        if (r.max != expected || !found)
            fail(r, r.witnesses.front(), "maximum is not attained by the expected C(n,m)");
        r.elapsed_ms = ms_since(start);
        return r;
    }

    require_formula_guard(n, opts);
    r.details["mode"] = "formula";
    for (std::uint32_t k = 2; 2 * k + 1 <= n; ++k) {
        const auto even = n_cnm(n, 2 * k);
        const auto odd_below = n_cnm(n, 2 * k - 1);
        const auto odd_above = n_cnm(n, 2 * k + 1);
        if (!(even < odd_below && odd_below < odd_above)) {
            fail(r, "k=" + std::to_string(k), "inequality chain fails");
            r.elapsed_ms = ms_since(start);
            return r;
        }
    }
    std::uint32_t argmax = 3;
    for (std::uint32_t m = 3; m <= n; ++m) {
        const auto v = n_cnm(n, m);
        if (v > r.max) {
            r.max = v;
            argmax = m;
        }
    }
    r.witnesses.push_back("C(" + std::to_string(n) + "," + std::to_string(argmax) + ")");
    if (argmax != best_cycle)
        fail(r, r.witnesses.front(), "largest odd cycle is not the maximizer");
    r.elapsed_ms = ms_since(start);
    return r;
}

ConjectureReport check_disjoint_cycle_bound(std::uint32_t n, const SweepOptions& opts)
{
    if (n < 5)
        throw InvalidParameter("disjoint-cycle bound requires n >= 5");
    require_formula_guard(n, opts);
    const auto start = Clock::now();
    ConjectureReport r;
    r.id = "disjoint";
    r.params = {{"n", n}};
    const auto bound = m_of_n(n);
    r.details["M"] = to_decimal(bound);

    std::uint32_t best_i = 0;
    std::uint32_t best_j = 0;
    for (std::uint32_t i = 3; i + 3 <= n + 1; ++i) {
        for (std::uint32_t j = 3; j <= i && i + j <= n + 1; ++j) {
            const auto v = n_gnij(n, i, j);
            if (v > bound) {
                fail(r, tuple_name("G", std::array{n, i, j}), "N(G(n,i,j)) exceeds M(n)");
                r.elapsed_ms = ms_since(start);
                return r;
            }
            if (v > r.max) {
                r.max = v;
                best_i = i;
                best_j = j;
            }
        }
    }
    r.witnesses.push_back(tuple_name("G", std::array{n, best_i, best_j}));
    r.details["attains_M"] = r.max == bound;

    // An even cycle loses to the odd cycle one shorter.
    for (std::uint32_t i = 4; i + 3 <= n + 1; i += 2) {
        for (std::uint32_t j = 3; i + j <= n + 1; ++j) {
            if (!(n_gnij(n, i, j) < n_gnij(n, i - 1, j))) {
                fail(r, tuple_name("G", std::array{n, i, j}), "even cycle does not lose to odd cycle");
                r.elapsed_ms = ms_since(start);
                return r;
            }
        }
    }
    // Balancing two odd cycles with the top sums at this n increases N.
    for (std::uint32_t sum = n; sum <= n + 1; ++sum) {
        if (sum % 2 != 0)
            continue;
        for (std::uint32_t i = 3; i + 2 <= sum - i - 2; i += 2) {
            const auto j = sum - i;
            const BigCount spread = n_cycle(i) * n_cycle(j);
            const BigCount closer = n_cycle(i + 2) * n_cycle(j - 2);
            if (!(spread < closer)) {
                fail(r, tuple_name("C", std::array{i, j}), "evenly distributed cycles inequality fails");
                r.elapsed_ms = ms_since(start);
                return r;
            }
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

ConjectureReport check_f_bounds(std::uint32_t n, const SweepOptions& opts)
{
    if (n < 4)
        throw InvalidParameter("F bounds require n >= 4");
    require_formula_guard(n, opts);
    const auto start = Clock::now();
    ConjectureReport r;
    r.id = "fbounds";
    r.params = {{"n", n}};

    std::map<Triple, BigCount> values;
    for (const auto& t : triples_with_sum(n + 1, true))
        values.emplace(t, f_of(t));
    r.details["triples"] = values.size();
    if (values.empty()) {
        r.status = Status::partial;
        r.details["note"] = "no same-parity triples";
        r.elapsed_ms = ms_since(start);
        return r;
    }

    std::vector<Triple> argmax;
    for (const auto& [t, v] : values) {
        if (v > r.max) {
            r.max = v;
            argmax.clear();
        }
        if (v == r.max)
            argmax.push_back(t);
    }
    for (const auto& t : argmax)
        r.witnesses.push_back(tuple_name("F", t));

    // Even n: the conjectured maximizer is F(n-1,1,1); odd n >= 5: F(n-3,2,2).
    const Triple conjectured = n % 2 == 0 ? Triple{n - 1, 1, 1} : Triple{n - 3, 2, 2};
    r.details["conjectured"] = tuple_name("F", conjectured);
    if (values.at(conjectured) != r.max) {
        fail(r, tuple_name("F", argmax.front()), "conjectured maximizer is not maximal");
        r.elapsed_ms = ms_since(start);
        return r;
    }

    std::size_t shifts = 0;
    for (const auto& [t, v] : values) {
        const auto [x1, x2, x3] = t;
        if (x3 < 3)
            continue;
        // x3 - 2 >= 1 here, and x2 >= x3 - 2 always holds.
        const Triple down3{x1 + 2, x2, x3 - 2};
        ++shifts;
        if (v > values.at(down3)) {
            fail(r, tuple_name("F", t), "F(x1,x2,x3) > F(x1+2,x2,x3-2)");
            break;
        }
        if (x2 - 2 >= x3) {
            const Triple down2{x1 + 2, x2 - 2, x3};
            ++shifts;
            if (v > values.at(down2)) {
                fail(r, tuple_name("F", t), "F(x1,x2,x3) > F(x1+2,x2-2,x3)");
                break;
            }
        }
    }
    r.details["shift_checks"] = shifts;
    r.elapsed_ms = ms_since(start);
    return r;
}

ConjectureReport check_general_f_leq_m(std::uint32_t n, const SweepOptions& opts)
{
    if (n < 4)
        throw InvalidParameter("F <= M requires n >= 4");
    require_formula_guard(n, opts);
    const auto start = Clock::now();
    ConjectureReport r;
    r.id = "f-leq-m";
    r.params = {{"n", n}};
    const auto bound = m_of_n(n);
    r.details["M"] = to_decimal(bound);
    Triple best{};
    std::size_t checked = 0;
    for (const auto& t : triples_with_sum(n + 1, true)) {
        const auto v = f_of(t);
        ++checked;
        if (v > bound) {
            fail(r, tuple_name("F", t), "F exceeds M(n)");
            break;
        }
        if (v > r.max) {
            r.max = v;
            best = t;
        }
    }
    r.details["triples"] = checked;
    if (r.status == Status::verified && checked > 0)
        r.witnesses.push_back(tuple_name("F", best));
    r.elapsed_ms = ms_since(start);
    return r;
}

std::vector<std::uint32_t> conjectured_cb_maximizer(std::uint32_t n)
{
    if (n < 10)
        throw InvalidParameter("conjectured CB maximizer is stated for n >= 10");
    if (n % 2 == 1) {
        const auto k = (n + 1) / 2;
        return k % 2 == 0 ? std::vector<std::uint32_t>{k - 1, k - 1, 2} : std::vector<std::uint32_t>{k, k - 2, 2};
    }
    const auto k = n / 2;
    return k % 2 == 0 ? std::vector<std::uint32_t>{k, k, 1} : std::vector<std::uint32_t>{k + 1, k - 1, 1};
}

ConjectureReport check_mixed_cb(std::uint32_t n, const SweepOptions& opts)
{
    if (n < 10)
        throw InvalidParameter("mixed CB sweep requires n >= 10");
    require_formula_guard(n, opts);
    const auto start = Clock::now();
    ConjectureReport r;
    r.id = "mixed-cb";
    r.params = {{"n", n}};
    const auto bound = m_of_n(n);
    r.details["M"] = to_decimal(bound);

    const auto triples = triples_with_sum(n + 1, false);
    std::vector<Triple> argmax;
    for (const auto& t : triples) {
        const auto v = cb_of(t);
        if (v > bound) {
            fail(r, tuple_name("CB", t), "N(CB) exceeds M(n)");
            r.elapsed_ms = ms_since(start);
            return r;
        }
        if (v > r.max) {
            r.max = v;
            argmax.clear();
        }
        if (v == r.max)
            argmax.push_back(t);
    }
    r.details["triples"] = triples.size();
    for (const auto& t : argmax)
        r.witnesses.push_back(tuple_name("CB", t));

    const auto conj = conjectured_cb_maximizer(n);
    const auto conj_value = cb_of(conj);
    r.details["conjectured"] = tuple_name("CB", conj);
    if (conj_value != r.max) {
        fail(r, r.witnesses.front(), "conjectured CB maximizer is not maximal");
        r.elapsed_ms = ms_since(start);
        return r;
    }

    if (n % 2 == 0) {
        // (k^2 + k) N = (k^2 + 2) M for even k, (k^2 + 1) M for odd k.
        const BigCount k = n / 2;
        const BigCount lhs = (k * k + k) * conj_value;
        const BigCount rhs = (k * k + (n / 2 % 2 == 0 ? 2 : 1)) * bound;
        r.details["cb_ratio_identity"] = lhs == rhs;
        if (lhs != rhs)
            fail(r, tuple_name("CB", conj), "N(CB)/M(2k) ratio identity fails");
    }
    if (conj_value > bound)
        fail(r, tuple_name("CB", conj), "conjectured CB maximizer exceeds M(n)");
    r.elapsed_ms = ms_since(start);
    return r;
}

ConjectureReport check_nn1_exhaustive(std::uint32_t n, const SweepOptions& opts, bool leaf_shortcut)
{
    if (n < 4)
        throw InvalidParameter("nn1 requires n >= 4");
    const auto start = Clock::now();
    ConjectureReport r;
    r.id = "nn1";
    r.params = {{"n", n}, {"leaf_shortcut", leaf_shortcut}};
    const auto bound = m_of_n(n);
    r.details["M"] = to_decimal(bound);

    auto graphs = enumerate_connected_graphs(n, n + 1, opts.guards);
    r.details["classes"] = graphs.size();
    bool skip_leaves = false;
    if (leaf_shortcut && n > 4) {
        // Leaf graphs at n are bounded by 2 M(n-1) <= M(n) once n-1 passes.
        const auto below = check_nn1_exhaustive(n - 1, opts, true);
        skip_leaves = below.status == Status::verified;
    }
    if (skip_leaves) {
        std::erase_if(graphs, has_leaf);
        r.details["skipped_leaf_graphs"] = r.details["classes"].get<std::size_t>() - graphs.size();
    }
    r.details["scanned"] = graphs.size();

    const auto counts = count_all(graphs, opts.jobs);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (counts[i] > bound) {
            r.max = counts[i];
            fail(r, serialize_graph(graphs[i]), "N(G) exceeds M(n)");
            r.elapsed_ms = ms_since(start);
            return r;
        }
        if (counts[i] > r.max) {
            r.max = counts[i];
            r.witnesses.clear();
        }
        if (counts[i] == r.max)
            r.witnesses.push_back(serialize_graph(graphs[i]));
    }
    if (!skip_leaves && r.max != bound)
        fail(r, "M(" + std::to_string(n) + ")", "M(n) is not attained");
    r.elapsed_ms = ms_since(start);
    return r;
}

bool is_triangle_cactus(const Graph& g)
{
    const auto n = g.num_vertices();
    const auto e = g.num_edges();
    if (e == 0 || e % 3 != 0 || !is_connected(g))
        return false;
    // Edge-disjoint triangles covering every edge, as many as the cycle rank,
    // force every block to be a single triangle.
    if (e + 1 != n + e / 3)
        return false;
    const auto adj = g.adjacency();
    for (const auto& edge : g.edges()) {
        std::size_t triangles = 0;
        for (const auto w : adj[edge.u]) {
            if (w != edge.v && g.has_edge(w, edge.v))
                ++triangles;
        }
        if (triangles != 1)
            return false;
    }
    return true;
}

ConjectureReport check_windmill(std::uint32_t n, const SweepOptions& opts, const WindmillSampling& sampling)
{
    if (n < 3 || n % 2 == 0)
        throw InvalidParameter("windmill check requires odd n >= 3");
    const auto start = Clock::now();
    ConjectureReport r;
    r.id = "windmill";
    r.params = {{"n", n}};
    const auto triangles = (n - 1) / 2;
    const auto e = 3 * triangles;
    const auto target = n_windmill(n, triangles);
    r.details["bound"] = to_decimal(target);

    if (n <= opts.guards.exhaustive_n) {
        r.details["mode"] = "exhaustive";
        const auto graphs = enumerate_connected_graphs(n, e, opts.guards);
        const auto counts = count_all(graphs, opts.jobs);
        r.details["classes"] = graphs.size();
        nlohmann::json shapes = nlohmann::json::array();
        std::vector<Graph> argmax;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (counts[i] > r.max) {
                r.max = counts[i];
                argmax.clear();
            }
            if (counts[i] == r.max)
                argmax.push_back(graphs[i]);
            if (is_triangle_cactus(graphs[i])) {
                shapes.push_back({{"graph", serialize_graph(graphs[i])},
                                  {"facets", to_decimal(counts[i])},
                                  {"attains_bound", counts[i] == target}});
            }
        }
        r.details["triangle_join_shapes"] = shapes;
        for (const auto& g : argmax)
            r.witnesses.push_back(serialize_graph(g));
        if (r.max != target)
            fail(r, r.witnesses.front(), "maximum differs from 6^((n-1)/2)");
        else if (!std::all_of(argmax.begin(), argmax.end(), is_triangle_cactus))
            fail(r, r.witnesses.front(), "a maximizer is not a join of triangles");
        else if (!std::all_of(shapes.begin(), shapes.end(), [](const auto& s) { return s["attains_bound"].template get<bool>(); }))
            fail(r, r.witnesses.front(), "a join of triangles misses the maximum");
        r.elapsed_ms = ms_since(start);
        return r;
    }

    r.details["mode"] = "sampled";
    ChainConfig cfg;
    cfg.n = n;
    cfg.e = e;
    cfg.samples = sampling.samples;
    cfg.burn_in = 0;
    cfg.thin = sampling.thin;
    cfg.seed = sampling.seed;
    cfg.initial = build_windmill(n, triangles);
    r.params["samples"] = sampling.samples;
    r.params["seed"] = sampling.seed;

    std::size_t attained = 0;
    std::size_t attained_after_start = 0;
    BigCount runner_up = 0;
    bool exceeded = false;
    run_chain(cfg, [&](const SampleRecord& rec) {
        if (exceeded)
            return;
        if (rec.facets > target) {
            exceeded = true;
            r.max = rec.facets;
            fail(r, serialize_graph(rec.graph), "sampled graph exceeds 6^((n-1)/2)");
            return;
        }
        if (rec.facets == target) {
            ++attained;
            if (rec.step > 0)
                ++attained_after_start;
        }
        else if (rec.facets > runner_up)
            runner_up = rec.facets;
        if (rec.facets > r.max) {
            r.max = rec.facets;
            r.witnesses = {serialize_graph(rec.graph)};
        }
    });
    if (!exceeded) {
        r.status = Status::partial;
        r.details["start"] = "WM(n)";
        r.details["attained"] = attained;
        r.details["attained_after_start"] = attained_after_start;
        r.details["largest_below_bound"] = to_decimal(runner_up);
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

ConjectureReport check_identities(std::uint32_t kmax, const SweepOptions& opts)
{
    if (kmax < 2)
        throw InvalidParameter("identity ledger needs kmax >= 2");
    if (kmax > opts.guards.identity_k)
        throw ResourceGuardError("identity ledger at k = " + std::to_string(kmax) + " exceeds guard k <= "
                                 + std::to_string(opts.guards.identity_k));
    const auto start = Clock::now();
    ConjectureReport r;
    r.id = "identities";
    r.params = {{"kmax", kmax}};

    // M(3) .. M(2 kmax + 1), indexed by n.
    std::vector<BigCount> M(2 * static_cast<std::size_t>(kmax) + 2);
    parallel_for(M.size() - 3, opts.jobs, [&](std::size_t i) {
        const auto n = static_cast<std::uint32_t>(i + 3);
        M[n] = n % 2 == 1 ? m_of_n(n) : BigCount(0);
    });
    for (std::size_t n = 4; n < M.size(); n += 2)
        M[n] = 2 * M[n - 1];

    std::map<std::string, std::size_t> checks;
    auto expect = [&](bool ok, const std::string& name, std::uint64_t at) {
        ++checks[name];
        if (!ok && r.status != Status::counterexample)
            fail(r, name + " at " + std::to_string(at), name + " fails");
    };

    for (std::uint32_t k = 2; k <= kmax && r.status != Status::counterexample; ++k) {
        const BigCount kk = k;
        const bool even = k % 2 == 0;
        if (even)
            expect(4 * M[2 * k] == (kk + 2) * kk * f_same_parity(PathVector({k + 1, k - 1, 1})),
                   "M(2k)=((k+2)/2)(k/2)F(k+1,k-1,1)", k);
        else if (k >= 3)
            expect(4 * M[2 * k] == (kk + 1) * (kk + 1) * f_same_parity(PathVector({k, k, 1})),
                   "M(2k)=((k+1)/2)^2F(k,k,1)", k);
        if (even && k >= 4)
            expect(2 * (kk + 1) * M[2 * k - 2] == kk * M[2 * k - 1], "M(2k-2)=k/(2(k+1))M(2k-1)", k);
        if (!even && k >= 3)
            expect(2 * kk * M[2 * k - 2] == (kk - 1) * M[2 * k - 1], "M(2k-2)=(k-1)/(2k)M(2k-1)", k);
        expect(2 * M[2 * k - 1] == M[2 * k], "M(2k-1)=M(2k)/2", k);
        if (even && k >= 4)
            expect(kk * n_cycle(k) == 4 * n_cycle(k - 1), "N(C_k)=(4/k)N(C_{k-1})", k);

        if (2 * k >= 10) {
            const auto cb = even ? cb_of(std::array{k, k, 1u}) : cb_of(std::array{k + 1, k - 1, 1u});
            const BigCount numerator = kk * kk + (even ? 2 : 1);
            expect((kk * kk + kk) * cb == numerator * M[2 * k], "N(CB)=ratio*M(2k)", k);
            expect(cb <= M[2 * k], "N(CB)<=M(2k)", k);
        }
    }

    for (std::uint32_t n = 3; n <= kmax && r.status != Status::counterexample; ++n) {
        const BigCount doubled = 2 * M[n];
        expect(doubled <= M[n + 1], "2M(n)<=M(n+1)", n);
        expect((doubled == M[n + 1]) == (n % 2 == 1), "2M(n)=M(n+1) iff n odd", n);
    }

    for (std::uint32_t n = 11; n <= kmax && r.status != Status::counterexample; n += 2)
        expect(cb_of(conjectured_cb_maximizer(n)) <= M[n], "odd-n N(CB)<=M(n)", n);

    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [name, c] : checks)
        counts[name] = c;
    r.details["checks"] = counts;
    r.max = M[2 * kmax];
    r.details["max_is"] = "M(2*kmax)";
    r.elapsed_ms = ms_since(start);
    return r;
}

} // namespace sep
