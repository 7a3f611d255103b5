#include <doctest.h>

#include <limits>

#include "mdc/errors.hpp"
#include "mdc/graph.hpp"

using namespace mdc;

TEST_CASE("graph adjacency is deduplicated and sorted") {
    Graph g(4, false);
    g.add_edge(2, 0);
    g.add_edge(0, 2);
    g.add_edge(0, 1);
    g.add_edge(3, 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.neighbors(0) == std::vector<std::size_t>{1, 2});
    CHECK(g.has_edge(2, 0));
    CHECK(g.has_edge(3, 3));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK_THROWS_AS(g.add_edge(0, 4), DimensionMismatch);

    Graph d(3, true);
    d.add_edge(0, 1);
    d.add_edge(1, 0);
    d.add_edge(2, 1);
    CHECK(d.edge_count() == 3);
    CHECK(d.has_edge(0, 1));
    CHECK_FALSE(d.has_edge(1, 2));
    CHECK(d.neighbors(1) == std::vector<std::size_t>{0});
    CHECK(d.in_neighbors(1) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("components and breadth-first distances") {
    // Two squares, one of them directed-cyclic: weak components ignore arrows.
    Graph g(8, true);
    for (std::size_t i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
    for (std::size_t i = 4; i < 8; ++i) g.add_edge(4 + (i + 1) % 4, i);
    auto comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(comps[1] == std::vector<std::size_t>{4, 5, 6, 7});
    CHECK_FALSE(g.is_connected());

    const auto inf = std::numeric_limits<std::size_t>::max();
    auto dist = g.distances_from(0);
    CHECK(dist[0] == 0);
    CHECK(dist[1] == 1);
    CHECK(dist[2] == 2);
    CHECK(dist[3] == 3);
    CHECK(dist[4] == inf);

    Graph path(5, false);
    for (std::size_t i = 0; i + 1 < 5; ++i) path.add_edge(i, i + 1);
    CHECK(path.is_connected());
    CHECK(path.distances_from(2) == std::vector<std::size_t>{2, 1, 0, 1, 2});
}

TEST_CASE("graph JSON round trip") {
    Graph g(3, true);
    g.add_edge(0, 1);
    g.add_edge(2, 0);
    const std::string text = graph_to_json(g);
    CHECK(text == R"({"n_vertices":3,"directed":true,"edges":[[0,1],[2,0]]})");
    Graph back = graph_from_json(text);
    CHECK(back.size() == 3);
    CHECK(back.directed());
    CHECK(back.edge_list() == g.edge_list());

    // Missing "directed" defaults to false.
    Graph u = graph_from_json(R"({"n_vertices":2,"edges":[[0,1]]})");
    CHECK_FALSE(u.directed());
    CHECK(u.has_edge(1, 0));

    CHECK_THROWS_AS(graph_from_json("{"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"edges":[]})"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"n_vertices":2,"edges":[[0,2]]})"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"n_vertices":2,"edges":[[0]]})"), ParseError);
}

TEST_CASE("DOT rendering") {
    Graph g(2, false);
    g.add_edge(0, 1);
    CHECK(graph_to_dot(g) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    CHECK(graph_to_dot(g, {"a", "b"}) ==
          "graph G {\n  0 [label=\"a\"];\n  1 [label=\"b\"];\n  0 -- 1;\n}\n");

    Graph d(2, true);
    d.add_edge(1, 0);
    CHECK(graph_to_dot(d) == "digraph G {\n  0;\n  1;\n  1 -> 0;\n}\n");
}
