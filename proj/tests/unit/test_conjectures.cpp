#include "sep_facets/closed_forms.hpp"
#include "sep_facets/conjectures.hpp"
#include "sep_facets/errors.hpp"
#include "sep_facets/facet_engine.hpp"

#include <doctest.h>

using namespace sep;

namespace {

SweepOptions defaults()
{
    SweepOptions o;
    o.guards = Guards{};
    return o;
}

} // namespace

TEST_CASE("exhaustive maxima")
{
    const auto o = defaults();
    const auto c55 = exhaustive_max(5, 5, o);
    CHECK(c55.max == 30);
    REQUIRE(c55.argmax.size() == 1);
    CHECK(c55.argmax.front().num_edges() == 5);
    CHECK(count_facets(c55.argmax.front()) == 30);

    const auto m5 = exhaustive_max(5, 6, o);
    CHECK(m5.max == 36);
    CHECK(m5.classes == 5);
}

TEST_CASE("n-edge maximizer")
{
    const auto o = defaults();
    const auto r6 = check_nn_max(6, o);
    CHECK(r6.status == Status::verified);
    CHECK(r6.max == 60);
    const auto r7 = check_nn_max(7, o);
    CHECK(r7.status == Status::verified);
    CHECK(r7.max == 140);
    const auto big = check_nn_max(1000, o);
    CHECK(big.status == Status::verified);
    CHECK(big.max == n_cycle(999) * 2);
}

TEST_CASE("formula sweeps")
{
    const auto o = defaults();
    const auto d7 = check_disjoint_cycle_bound(7, o);
    CHECK(d7.status == Status::verified);
    CHECK(d7.max == 180);
    CHECK(d7.witnesses.front() == "G(7,5,3)");
    const auto d9 = check_disjoint_cycle_bound(9, o);
    CHECK(d9.max == m_of_n(9));
    CHECK(d9.witnesses.front() == "G(9,5,5)");
    CHECK(check_disjoint_cycle_bound(100, o).status == Status::verified);

    const auto f8 = check_f_bounds(8, o);
    CHECK(f8.status == Status::verified);
    CHECK(f8.max == 70);
    const auto f9 = check_f_bounds(9, o);
    CHECK(f9.witnesses.front() == "F(6,2,2)");

    for (std::uint32_t n : {10u, 29u, 200u})
        CHECK(check_general_f_leq_m(n, o).status == Status::verified);

    const auto cb10 = check_mixed_cb(10, o);
    CHECK(cb10.status == Status::verified);
    CHECK(cb10.witnesses == std::vector<std::string>{"CB(6,4,1)"});
    const auto cb11 = check_mixed_cb(11, o);
    CHECK(cb11.witnesses == std::vector<std::string>{"CB(5,5,2)"});

    CHECK_THROWS_AS(check_disjoint_cycle_bound(2000, o), ResourceGuardError);
}

TEST_CASE("conjectured CB maximizers")
{
    CHECK(conjectured_cb_maximizer(10) == std::vector<std::uint32_t>{6, 4, 1});
    CHECK(conjectured_cb_maximizer(11) == std::vector<std::uint32_t>{5, 5, 2});
    CHECK(conjectured_cb_maximizer(12) == std::vector<std::uint32_t>{6, 6, 1});
    CHECK(conjectured_cb_maximizer(13) == std::vector<std::uint32_t>{7, 5, 2});
    CHECK_THROWS_AS(conjectured_cb_maximizer(9), InvalidParameter);
}

TEST_CASE("CB ratio at small k, by direct count")
{
    // (k^2 + k) N(CB) against M(2k): CB(6,4,1) at k = 5, CB(6,6,1) at k = 6.
    CHECK(count_facets(build_cb(PathVector({6, 4, 1}))) * 30 == 26 * m_of_n(10));
    CHECK(count_facets(build_cb(PathVector({6, 6, 1}))) * 42 == 38 * m_of_n(12));
}

TEST_CASE("(n, n+1) exhaustion")
{
    const auto o = defaults();
    CHECK(check_nn1_exhaustive(5, o).max == 36);
    CHECK(check_nn1_exhaustive(6, o).max == 72);
    const auto r7 = check_nn1_exhaustive(7, o);
    CHECK(r7.status == Status::verified);
    CHECK(r7.max == 180);
    const auto shortcut = check_nn1_exhaustive(7, o, true);
    CHECK(shortcut.status == Status::verified);
    CHECK(shortcut.max == 180);
    CHECK_THROWS_AS(check_nn1_exhaustive(3, o), InvalidParameter);
}

TEST_CASE("windmill checks")
{
    const auto o = defaults();
    const auto w5 = check_windmill(5, o);
    CHECK(w5.max == 36);
    CHECK(w5.status == Status::verified);
    CHECK(w5.witnesses.size() == 1);
    const auto w7 = check_windmill(7, o);
    CHECK(w7.max == 216);
    CHECK(w7.status == Status::verified);

    WindmillSampling s;
    s.samples = 10;
    s.seed = 4;
    const auto w9 = check_windmill(9, o, s);
    CHECK(w9.status == Status::partial);
    CHECK(w9.max == 1296);
    CHECK(w9.details["attained"].get<int>() >= 1);
}

TEST_CASE("triangle cacti")
{
    CHECK(is_triangle_cactus(build_windmill(7, 3)));
    CHECK(is_triangle_cactus(cycle(3)));
    CHECK_FALSE(is_triangle_cactus(build_windmill(7, 2)));
    CHECK_FALSE(is_triangle_cactus(build_cb(PathVector({2, 2, 1}))));
    // Three triangles in a chain.
    CHECK(is_triangle_cactus(Graph(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {4, 6}})));
    // K4 has every edge in two triangles.
    CHECK_FALSE(is_triangle_cactus(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
}

TEST_CASE("identity ledger")
{
    const auto o = defaults();
    const auto r = check_identities(300, o);
    CHECK(r.status == Status::verified);
    CHECK(r.max == m_of_n(600));
}

TEST_CASE("report merge")
{
    ConjectureReport a;
    a.id = "x";
    a.max = 5;
    a.witnesses = {"p"};
    a.params = {{"n", 1}};
    ConjectureReport b = a;
    b.max = 9;
    b.status = Status::partial;
    b.witnesses = {"q", "p"};
    b.params = {{"n", 2}};
    const std::vector<ConjectureReport> both{a, b};
    const auto m = merge(both);
    CHECK(m.max == 9);
    CHECK(m.status == Status::partial);
    CHECK(m.witnesses == std::vector<std::string>{"p", "q"});
    CHECK(m.params["runs"].size() == 2);
    const auto j = m.to_json(false);
    CHECK(j["max"] == "9");
    CHECK_FALSE(j.contains("elapsed_ms"));
    b.id = "y";
    const std::vector<ConjectureReport> mixed{a, b};
    CHECK_THROWS_AS(merge(mixed), InvalidParameter);
}
