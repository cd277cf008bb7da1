#include "sep_facets/sampler.hpp"

#include "sep_facets/errors.hpp"
#include "sep_facets/facet_engine.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <map>
#include <sstream>

namespace sep {

namespace {

std::uint64_t pairs(std::uint64_t n) { return n * (n - 1) / 2; }

std::string fixed6(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

} // namespace

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw InvalidParameter("Rng::below with zero bound");
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const auto r = engine_();
        if (r >= threshold)
            return r % bound;
    }
}

std::uint64_t ChainConfig::burn_in_steps() const { return burn_in.value_or(10 * e * pairs(n)); }

std::uint64_t ChainConfig::thinning() const { return thin.value_or(std::max<std::uint64_t>(1, e * pairs(n))); }

std::uint64_t ChainConfig::total_steps() const { return burn_in_steps() + (samples - 1) * thinning(); }

void ChainConfig::validate() const
{
    if (n < 2 || e == 0)
        throw InvalidParameter("chain needs at least one edge");
    if (e + 1 < n)
        throw InvalidParameter("no connected graph has fewer than n - 1 edges");
    if (e > pairs(n))
        throw InvalidParameter("more edges than vertex pairs");
    if (samples == 0)
        throw InvalidParameter("chain needs at least one sample");
    if (thinning() == 0)
        throw InvalidParameter("thinning must be at least 1");
    if (initial) {
        if (initial->num_vertices() != n || initial->num_edges() != e)
            throw InvalidParameter("initial graph does not match n and e");
        if (!is_connected(*initial))
            throw InvalidParameter("initial graph must be connected");
    }
}

Graph default_initial_graph(std::uint32_t n, std::uint32_t e)
{
    if (n == 0 || e + 1 < n || e > pairs(n))
        throw InvalidParameter("no connected graph with these n and e");
    if (n == 1)
        return Graph(1);
    if (e == n - 1)
        return path(n - 1);
    auto base = cycle(n);
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    for (Vertex u = 0; u < n && edges.size() < e; ++u) {
        for (Vertex v = u + 1; v < n && edges.size() < e; ++v) {
            if (!base.has_edge(u, v))
                edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

std::uint64_t proposal_count(const Graph& g)
{
    return g.num_edges() * (pairs(g.num_vertices()) - g.num_edges());
}

Graph mcmc_step(const Graph& g, Rng& rng)
{
    const auto n = static_cast<Vertex>(g.num_vertices());
    const auto edges = g.edges();
    if (edges.empty())
        return g;
    std::vector<Edge> non_edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v))
                non_edges.push_back({u, v});
        }
    }
    if (non_edges.empty())
        return g;

    const auto removed = rng.below(edges.size());
    const auto added = non_edges[rng.below(non_edges.size())];
    std::vector<Edge> next;
    next.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i != removed)
            next.push_back(edges[i]);
    }
    next.push_back(added);
    Graph candidate(n, std::move(next));
    return is_connected(candidate) ? candidate : g;
}

double log10_of(const BigCount& x)
{
    if (x <= 0)
        return -INFINITY;
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log10(mantissa) + static_cast<double>(exp2) * std::log10(2.0);
}

void run_chain(const ChainConfig& cfg, const std::function<void(const SampleRecord&)>& emit)
{
    cfg.validate();
    Rng rng(cfg.seed);
    Graph state = cfg.initial ? *cfg.initial : default_initial_graph(cfg.n, cfg.e);
    const auto burn = cfg.burn_in_steps();
    const auto thin = cfg.thinning();
    const auto total = cfg.total_steps();
    for (std::uint64_t step = 0;; ++step) {
        if (step > 0)
            state = mcmc_step(state, rng);
        if (step >= burn && (step - burn) % thin == 0) {
            SampleRecord rec;
            rec.step = step;
            rec.facets = count_facets(state);
            rec.graph = state;
            rec.log10_facets = log10_of(rec.facets);
            emit(rec);
        }
        if (step == total)
            break;
    }
}

std::vector<SampleRecord> run_chain(const ChainConfig& cfg)
{
    std::vector<SampleRecord> out;
    run_chain(cfg, [&](const SampleRecord& r) { out.push_back(r); });
    return out;
}

std::string chain_metadata(const ChainConfig& cfg, bool deterministic)
{
    std::ostringstream os;
    os << "# rng=" << Rng::algorithm << " seed=" << cfg.seed << " n=" << cfg.n << " e=" << cfg.e
       << " samples=" << cfg.samples << " burn_in=" << cfg.burn_in_steps() << " thin=" << cfg.thinning();
    if (!deterministic) {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        os << " generated=" << buf;
    }
    return os.str();
}

std::string emit_figure_data(std::span<const SampleRecord> records, FigureMode mode)
{
    if (records.empty())
        throw InvalidParameter("no records to emit");
    std::ostringstream os;
    if (mode == FigureMode::scatter) {
        const double log6 = std::log10(6.0);
        os << "step,n,facets,log10_facets,reference_log10\n";
        for (const auto& r : records) {
            const auto n = r.graph.num_vertices();
            const double reference = log6 * (static_cast<double>(n) - 1.0) / 2.0;
            os << r.step << ',' << n << ',' << to_decimal(r.facets) << ',' << fixed6(r.log10_facets) << ','
               << fixed6(reference) << '\n';
        }
        return os.str();
    }
    // mpz_class orders numerically; only observed counts get a row.
    std::map<BigCount, std::uint64_t> frequency;
    for (const auto& r : records)
        ++frequency[r.facets];
    os << "facet_count,frequency\n";
    for (const auto& [count, freq] : frequency)
        os << to_decimal(count) << ',' << freq << '\n';
    return os.str();
}

std::string emit_jsonl(std::span<const SampleRecord> records, const ChainConfig& cfg, bool deterministic)
{
    std::ostringstream os;
    nlohmann::json meta{{"rng", Rng::algorithm},      {"seed", cfg.seed},
                        {"n", cfg.n},                 {"e", cfg.e},
                        {"samples", cfg.samples},     {"burn_in", cfg.burn_in_steps()},
                        {"thin", cfg.thinning()}};
    if (!deterministic) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::system_clock::now().time_since_epoch());
        meta["generated_unix_ms"] = ms.count();
    }
    os << nlohmann::json{{"metadata", meta}}.dump() << '\n';
    for (const auto& r : records) {
        os << nlohmann::json{{"step", r.step},
                             {"facets", to_decimal(r.facets)},
                             {"log10_facets", r.log10_facets},
                             {"graph", serialize_graph(r.graph)}}
                  .dump()
           << '\n';
    }
    return os.str();
}

} // namespace sep
