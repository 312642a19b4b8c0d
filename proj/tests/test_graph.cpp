#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "lambdacast/errors.hpp"
#include "lambdacast/generators.hpp"
#include "lambdacast/graph.hpp"

using namespace lambdacast;

TEST_CASE("construction rejects malformed graphs") {
    CHECK_THROWS_AS(Graph(3, {{0, 0, 1}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 1, 1}, {1, 0, 1}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 3, 1}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 1, 0}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 1, 2}}, /*weighted=*/false), ParameterError);
    CHECK_NOTHROW(Graph(3, {{0, 1, 2}}, /*weighted=*/true));
}

TEST_CASE("complete graph K_4") {
    Graph g = make_complete(4);
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("path on 3 nodes") {
    Graph g = make_path(3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("hypercube Q_3") {
    Graph g = make_hypercube(3);
    CHECK(g.node_count() == 8);
    CHECK(g.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("circulant connection set") {
    Graph g = make_circulant(8, 2);
    CHECK(g.node_count() == 8);
    CHECK(g.edge_count() == 16);
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(0, 6));
    CHECK(!g.has_edge(0, 3));
}

TEST_CASE("barbell has a bridge") {
    Graph g = make_barbell(4);
    CHECK(g.node_count() == 8);
    CHECK(g.edge_count() == 13);
    CHECK(g.has_edge(3, 4));
    CHECK(g.min_degree() == 3);
}

TEST_CASE("random regular graphs are simple, connected, regular") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        Graph g = make_random_regular(24, 5, seed);
        CHECK(g.node_count() == 24);
        CHECK(g.edge_count() == 24 * 5 / 2);
        for (int v = 0; v < 24; ++v) CHECK(g.degree(v) == 5);
    }
    CHECK_THROWS_AS(make_random_regular(5, 3, 1), ParameterError);  // odd n*d
    CHECK_THROWS_AS(make_random_regular(4, 4, 1), ParameterError);  // d >= n
}

TEST_CASE("pairing-model rejection keeps the sample distribution seeded") {
    Graph a = make_random_regular(16, 3, 42);
    Graph b = make_random_regular(16, 3, 42);
    REQUIRE(a.edge_count() == b.edge_count());
    for (int i = 0; i < a.edge_count(); ++i) {
        CHECK(a.edge(i).u == b.edge(i).u);
        CHECK(a.edge(i).v == b.edge(i).v);
    }
}

TEST_CASE("text format round trip") {
    Graph g = make_random_regular(20, 4, 7);
    std::stringstream buf;
    write_graph(g, buf);
    Graph h = read_graph(buf);
    REQUIRE(h.node_count() == g.node_count());
    REQUIRE(h.edge_count() == g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        CHECK(g.edge(i).u == h.edge(i).u);
        CHECK(g.edge(i).v == h.edge(i).v);
        CHECK(g.edge(i).w == h.edge(i).w);
    }
}

TEST_CASE("text format with comments and weights") {
    std::stringstream in(
        "# a weighted triangle\n"
        "3 3 weighted\n"
        "0 1 1\n"
        "1 2 1  # inline comment\n"
        "0 2 5\n");
    Graph g = read_graph(in);
    CHECK(g.weighted());
    CHECK(g.edge_count() == 3);
    CHECK(g.edge(2).w == 5);
}

TEST_CASE("text format errors") {
    std::stringstream missing("3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph(missing), FormatError);
    std::stringstream garbage("x y\n");
    CHECK_THROWS_AS(read_graph(garbage), FormatError);
    std::stringstream noweight("2 1 weighted\n0 1\n");
    CHECK_THROWS_AS(read_graph(noweight), FormatError);
}

TEST_CASE("random node identifiers are distinct and bounded") {
    Graph g = make_complete(16);
    g.assign_random_ids(99, 3);
    std::set<std::uint64_t> ids(g.node_ids().begin(), g.node_ids().end());
    CHECK(ids.size() == 16u);
    std::uint64_t bound = 16ull * 16 * 16;
    for (auto id : ids) {
        CHECK(id >= 1);
        CHECK(id <= bound);
    }
    NodeId lead = g.min_id_node();
    for (int v = 0; v < 16; ++v) CHECK(g.node_id(lead) <= g.node_id(v));
}

TEST_CASE("random weights stay in range and mark the graph weighted") {
    Graph g = with_random_weights(make_complete(10), 100, 5);
    CHECK(g.weighted());
    for (const Edge& e : g.edges()) {
        CHECK(e.w >= 1);
        CHECK(e.w <= 100);
    }
}

TEST_CASE("edge subgraph keeps the node set") {
    Graph g = make_complete(5);
    Graph sub = g.edge_subgraph({0, 1, 2});
    CHECK(sub.node_count() == 5);
    CHECK(sub.edge_count() == 3);
    CHECK_THROWS_AS(g.edge_subgraph({99}), ParameterError);
}
