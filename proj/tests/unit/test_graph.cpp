#include "sep_facets/errors.hpp"
#include "sep_facets/graph.hpp"

#include <doctest.h>

using namespace sep;

namespace {

std::size_t triangles(const Graph& g)
{
    std::size_t t = 0;
    const auto n = static_cast<Vertex>(g.num_vertices());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                t += g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
    return t;
}

} // namespace

TEST_CASE("cycles")
{
    const auto c3 = cycle(3);
    CHECK(c3.num_vertices() == 3);
    CHECK(c3.num_edges() == 3);
    CHECK(c3.has_edge(0, 1));
    CHECK(c3.has_edge(1, 2));
    CHECK(c3.has_edge(0, 2));
    CHECK_FALSE(is_bipartite(cycle(5)));
    CHECK(is_bipartite(cycle(4)));
    CHECK(is_bipartite(cycle(6)));
    CHECK(cycle(5).num_edges() == 5);
    CHECK_THROWS_AS(cycle(2), InvalidParameter);
}

TEST_CASE("paths and stars")
{
    CHECK(path(1).num_vertices() == 2);
    CHECK(path(2).num_edges() == 2);
    CHECK(path(4).num_vertices() == 5);
    CHECK_THROWS_AS(path(0), InvalidParameter);
    CHECK(star(4).num_vertices() == 5);
}

TEST_CASE("wedge")
{
    const auto bowtie = wedge(cycle(3), cycle(3), 0, 0);
    CHECK(bowtie.num_vertices() == 5);
    CHECK(bowtie.num_edges() == 6);
    CHECK(wedge(path(1), path(1), 1, 0) == path(2));
    const auto g = wedge(cycle(5), cycle(3), 2, 1);
    CHECK(g.num_vertices() == 7);
    CHECK(g.num_edges() == 8);
    CHECK(is_connected(g));
    CHECK_THROWS_AS(wedge(cycle(3), cycle(3), 3, 0), InvalidParameter);
}

TEST_CASE("family builders")
{
    const auto c75 = build_cnm(7, 5);
    CHECK(c75.num_vertices() == 7);
    CHECK(c75.num_edges() == 7);
    CHECK(build_cnm(6, 6) == cycle(6));
    CHECK(triangles(build_cnm(5, 3)) == 1);

    CHECK(build_gnij(7, 3, 3).num_vertices() == 7);
    CHECK(build_gnij(7, 3, 3).num_edges() == 8);
    CHECK(build_gnij(7, 5, 3).num_edges() == 8);
    CHECK(build_gnij(9, 3, 3).num_edges() == 10);
    CHECK_THROWS_AS(build_gnij(4, 3, 3), InvalidParameter);

    const auto cb = build_cb(PathVector({4, 2, 2}));
    CHECK(cb.num_vertices() == 7);
    CHECK(cb.num_edges() == 8);
    CHECK(build_cb(PathVector({3, 3, 2})).num_edges() == 8);
    const auto k23 = build_cb(PathVector({2, 2, 2}));
    CHECK(k23.num_vertices() == 5);
    CHECK(k23.num_edges() == 6);
    CHECK(is_bipartite(k23));
    CHECK_THROWS_AS(build_cb(PathVector({3, 1, 1})), MultigraphError);
    CHECK(build_cb(PathVector({3, 1})).num_edges() == 4);

    CHECK(build_theta(2, 3) == k23);
    CHECK(build_theta(3, 3).num_vertices() == 8);
    CHECK(build_theta(3, 3).num_edges() == 9);
    CHECK(build_theta(2, 2).num_edges() == 4);
    CHECK_THROWS_AS(build_theta(1, 2), MultigraphError);

    CHECK(build_windmill(7, 2).num_edges() == 8);
    CHECK(build_windmill(7, 3).num_edges() == 9);
    CHECK(triangles(build_windmill(7, 3)) == 3);
    CHECK(build_windmill(5, 0) == star(4));
    CHECK_THROWS_AS(build_windmill(7, 4), InvalidParameter);
}

TEST_CASE("path vectors")
{
    const PathVector m({2, 4, 1});
    CHECK(m[0] == 4);
    CHECK(m.shortest() == 1);
    CHECK(m.unit_paths() == 1);
    CHECK(m.total_length() == 7);
    CHECK_THROWS_AS(PathVector({}), InvalidParameter);
    CHECK_THROWS_AS(PathVector({2, 0}), InvalidParameter);
}

TEST_CASE("graph construction rejects bad edges")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidParameter);
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("edge list parsing")
{
    CHECK(parse_graph("3\n0 1\n1 2") == path(2));
    CHECK(parse_graph("# header\n3\n\n2 1 # trailing\n1 0\n") == path(2));
    const auto g = build_cb(PathVector({4, 2, 2}));
    CHECK(parse_graph(serialize_graph(g)) == g);
    CHECK(parse_graph_json(serialize_graph_json(g)) == g);

    auto line_of = [](const char* text) {
        try {
            parse_graph(text);
        }
        catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("2\n0 0") == 2);
    CHECK(line_of("3\n0 1\n1 0\n") == 3);
    CHECK(line_of("3\n0 1\n1 5\n") == 3);
    CHECK(line_of("3\n0 x\n") == 2);
    CHECK(line_of("3\n0 1 2\n") == 2);
    CHECK(line_of("abc\n") == 1);
    CHECK_THROWS_AS(parse_graph_json("{\"n\": 2, \"edges\": [[0, 0]]}"), ParseError);
}
