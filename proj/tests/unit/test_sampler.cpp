#include "sep_facets/enumerate.hpp"
#include "sep_facets/errors.hpp"
#include "sep_facets/facet_engine.hpp"
#include "sep_facets/sampler.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

using namespace sep;

namespace {

std::size_t symmetric_difference(const Graph& a, const Graph& b)
{
    std::set<Edge> x(a.edges().begin(), a.edges().end());
    std::size_t diff = 0;
    for (const auto& e : b.edges())
        diff += x.erase(e) == 0;
    return diff + x.size();
}

} // namespace

TEST_CASE("bounded draws are in range and reproducible")
{
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 1000; ++i) {
        const auto x = a.below(7);
        CHECK(x < 7);
        CHECK(x == b.below(7));
    }
    CHECK_THROWS_AS(a.below(0), InvalidParameter);
}

TEST_CASE("chain defaults")
{
    ChainConfig cfg;
    cfg.n = 7;
    cfg.e = 9;
    CHECK(cfg.thinning() == 9 * 21);
    CHECK(cfg.burn_in_steps() == 10 * 9 * 21);
    cfg.samples = 3;
    CHECK(cfg.total_steps() == 10 * 9 * 21 + 2 * 9 * 21);
    CHECK(proposal_count(default_initial_graph(7, 9)) == 108);
    const auto g = default_initial_graph(7, 9);
    CHECK(g.num_edges() == 9);
    CHECK(is_connected(g));
    CHECK(default_initial_graph(5, 4) == path(4));
    CHECK_THROWS_AS(default_initial_graph(5, 3), InvalidParameter);
    cfg.e = 30;
    CHECK_THROWS_AS(cfg.validate(), InvalidParameter);
}

TEST_CASE("three-vertex chain")
{
    Rng rng(1);
    for (int i = 0; i < 20; ++i)
        CHECK(mcmc_step(cycle(3), rng) == cycle(3));
    // With two edges every proposal closes back to a connected path.
    Graph g = path(2);
    std::set<std::vector<Edge>> seen;
    for (int i = 0; i < 200; ++i) {
        const auto h = mcmc_step(g, rng);
        CHECK(h.num_edges() == 2);
        CHECK(is_connected(h));
        CHECK(h != g);
        g = h;
        seen.insert({g.edges().begin(), g.edges().end()});
    }
    CHECK(seen.size() == 3);
}

TEST_CASE("accepted moves are single swaps and reversible")
{
    Rng rng(5);
    Graph g = default_initial_graph(7, 9);
    for (int i = 0; i < 2000; ++i) {
        const auto h = mcmc_step(g, rng);
        CHECK(is_connected(h));
        CHECK(h.num_edges() == 9);
        if (h != g) {
            CHECK(symmetric_difference(g, h) == 2);
            // Undoing the swap is itself a legal proposal from h that lands on g.
            std::vector<Edge> back;
            Edge added{};
            for (const auto& e : h.edges()) {
                if (g.has_edge(e.u, e.v))
                    back.push_back(e);
                else
                    added = e;
            }
            for (const auto& e : g.edges()) {
                if (!h.has_edge(e.u, e.v))
                    back.push_back(e);
            }
            CHECK_FALSE(g.has_edge(added.u, added.v));
            CHECK(Graph(7, back) == g);
            CHECK(is_connected(Graph(7, back)));
        }
        g = h;
    }
}

TEST_CASE("four-vertex chain approaches uniform")
{
    // Every 4-edge graph on 4 vertices is connected: 15 labeled states.
    Rng rng(17);
    Graph g = default_initial_graph(4, 4);
    std::map<std::vector<Edge>, std::uint64_t> visits;
    const std::uint64_t steps = 300000;
    for (std::uint64_t s = 0; s < steps; ++s) {
        g = mcmc_step(g, rng);
        ++visits[{g.edges().begin(), g.edges().end()}];
    }
    CHECK(visits.size() == 15);
    double tv = 0;
    for (const auto& [state, count] : visits)
        tv += std::abs(static_cast<double>(count) / steps - 1.0 / 15);
    CHECK(tv / 2 < 0.02);
}

TEST_CASE("records and determinism")
{
    ChainConfig cfg;
    cfg.n = 7;
    cfg.e = 9;
    cfg.samples = 20;
    cfg.seed = 99;
    const auto a = run_chain(cfg);
    const auto b = run_chain(cfg);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].step == cfg.burn_in_steps() + i * cfg.thinning());
        CHECK(a[i].graph == b[i].graph);
        CHECK(a[i].facets == count_facets(a[i].graph));
        CHECK(a[i].facets <= 216);
    }
    CHECK(emit_figure_data(a, FigureMode::scatter) == emit_figure_data(b, FigureMode::scatter));
    CHECK(chain_metadata(cfg, true) == chain_metadata(cfg, true));
    CHECK(chain_metadata(cfg, true).find("generated") == std::string::npos);
    CHECK(chain_metadata(cfg, false).find("generated") != std::string::npos);

    cfg.seed = 100;
    const auto c = run_chain(cfg);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        differs = differs || a[i].graph != c[i].graph;
    CHECK(differs);
}

TEST_CASE("csv rows")
{
    SampleRecord wm{0, 216, build_windmill(7, 3), log10_of(216)};
    CHECK(std::abs(wm.log10_facets - 2.334454) < 1e-6);
    const std::vector<SampleRecord> records{wm, {5, 144, build_windmill(7, 2), log10_of(144)}, wm};
    const auto scatter = emit_figure_data(records, FigureMode::scatter);
    CHECK(scatter.rfind("step,n,facets,log10_facets,reference_log10\n", 0) == 0);
    CHECK(scatter.find("0,7,216,2.334454,2.334454\n") != std::string::npos);
    const auto hist = emit_figure_data(records, FigureMode::histogram);
    CHECK(hist == "facet_count,frequency\n144,1\n216,2\n");
    CHECK(log10_of(BigCount("1" + std::string(400, '0'))) == doctest::Approx(400.0));
}
