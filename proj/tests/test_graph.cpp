#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "dynchroma/errors.hpp"
#include "dynchroma/graph.hpp"
#include "util.hpp"

using namespace dynchroma;

TEST_CASE("graph construction") {
    Graph single(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);
    CHECK(single.degree(0) == 0);

    Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(triangle.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(triangle.degree(v) == 2);
    CHECK(triangle.has_edge(0, 2));
    CHECK(triangle.has_edge(2, 0));

    Graph c5 = cycle_graph(5);
    CHECK(c5.vertex_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    SUBCASE("parallel edges collapse") {
        Graph g(2, {{0, 1}, {1, 0}, {0, 1}});
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("adjacency is symmetric and sorted") {
        Graph g(4, {{2, 0}, {3, 1}, {3, 0}});
        CHECK(g.neighbors(0) == std::vector<int>{2, 3});
        CHECK(g.neighbors(3) == std::vector<int>{0, 1});
        CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});
    }
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_WITH_AS(Graph(3, {{1, 1}}), "self-loop (1, 1)", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph(2, {{0, 2}}), "edge (0, 2) out of range for 2 vertices",
                         std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("dimacs parsing") {
    Graph k2 = parse_dimacs("p edge 2 1 \n e 1 2");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.has_edge(0, 1));

    Graph commented = parse_dimacs("c header comment\np edge 3 2\nc mid\ne 1 2\ne 2 3\n");
    CHECK(commented.edge_count() == 2);

    SUBCASE("errors carry line numbers") {
        try {
            parse_dimacs("p edge 2 1\ne 1 3\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(std::string(e.what()).find("line 2") == 0);
        }
        CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
        CHECK_THROWS_AS(parse_dimacs("p edge 2 2\ne 1 2\n"), ParseError);
        CHECK_THROWS_AS(parse_dimacs("p edge 2 1\nx 1 2\n"), ParseError);
        CHECK_THROWS_AS(parse_dimacs("p edge 2 1\np edge 2 1\ne 1 2\n"), ParseError);
        CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), ParseError);
        CHECK_THROWS_AS(parse_dimacs(""), ParseError);
        CHECK_THROWS_AS(parse_dimacs("p edge a 1\n"), ParseError);
    }
}

TEST_CASE("dimacs writing round trips") {
    Graph k3 = complete_graph(3);
    CHECK(write_dimacs(k3) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        Graph g = testutil::random_graph(1 + testutil::pick(rng, 10), 400, rng);
        CHECK(parse_dimacs(write_dimacs(g)) == g);
    }
}

TEST_CASE("edge list parsing") {
    Graph p3 = parse_edge_list("0 1\n1 2");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(parse_edge_list("").vertex_count() == 0);
    Graph with_comment = parse_edge_list("# a comment\n\n0 3\n");
    CHECK(with_comment.vertex_count() == 4);
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
    try {
        parse_edge_list("0 1\nbad\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("basic generators") {
    CHECK(complete_graph(1).vertex_count() == 1);
    CHECK(complete_graph(4).edge_count() == 6);
    for (int v = 0; v < 5; ++v) CHECK(complete_graph(5).degree(v) == 4);

    CHECK(path_graph(1).vertex_count() == 1);
    CHECK(path_graph(2) == complete_graph(2));
    Graph p6 = path_graph(6);
    CHECK(p6.edge_count() == 5);
    CHECK(p6.degree(0) == 1);
    CHECK(p6.degree(5) == 1);

    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("universal vertices") {
    CHECK(add_universal(complete_graph(1), 1) == complete_graph(2));
    Graph g = add_universal(complete_graph(1), 2);
    CHECK(g == complete_graph(3));  // the added vertices are mutually adjacent

    std::mt19937_64 rng(11);
    Graph base = testutil::random_graph(6, 500, rng);
    Graph aug = add_universal(base, 1);
    CHECK(aug.vertex_count() == 7);
    CHECK(aug.degree(6) == 6);
    CHECK(add_universal(base, 0) == base);
}

TEST_CASE("square graph") {
    CHECK(square(cycle_graph(5)) == complete_graph(5));
    CHECK(square(path_graph(3)) == complete_graph(3));
    Graph edgeless(4, {});
    CHECK(square(edgeless) == edgeless);
    CHECK(square(complete_graph(5)) == complete_graph(5));
    CHECK(square(square(cycle_graph(5))) == square(cycle_graph(5)));

    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        Graph g = testutil::random_graph(2 + testutil::pick(rng, 8), 300, rng);
        Graph sq = square(g);
        for (auto [u, v] : g.edges()) CHECK(sq.has_edge(u, v));
        for (auto [u, v] : sq.edges()) {
            bool close = g.has_edge(u, v);
            for (int w : g.neighbors(u)) close = close || g.has_edge(w, v);
            CHECK(close);
        }
    }
}
