#include <doctest.h>

#include <string>

#include "girth/generate.hpp"
#include "girth/graph.hpp"
#include "girth/rng.hpp"

using namespace girth;

TEST_CASE("parse: plain edge list") {
    EdgeList list = parse_edge_list("0 1\n1 2\n2 0\n");
    CHECK(list.n == 3);
    REQUIRE(list.edges.size() == 3);
    CHECK(list.edges[0] == std::pair<int, int>{0, 1});
    CHECK(list.edges[2] == std::pair<int, int>{2, 0});
}

TEST_CASE("parse: header and comments") {
    EdgeList list = parse_edge_list("# triangle\np 3 3\n0 1\n1 2\n2 0\n");
    CHECK(list.n == 3);
    CHECK(list.edges.size() == 3);
}

TEST_CASE("parse: duplicates survive until build") {
    EdgeList list = parse_edge_list("0 1\n0 1\n");
    CHECK(list.n == 2);
    CHECK(list.edges.size() == 2);
}

TEST_CASE("parse: declared n can exceed seen ids") {
    EdgeList list = parse_edge_list("p 10 1\n0 1\n");
    CHECK(list.n == 10);
}

TEST_CASE("parse: malformed token reports the line") {
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n1 x\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_AS(parse_edge_list("0\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("-1 2\n"), Error);
}

TEST_CASE("parse: header bounds are enforced") {
    CHECK_THROWS_WITH_AS(parse_edge_list("p 3 3\n0 5\n"), doctest::Contains("line 2"), Error);
}

TEST_CASE("build: dedupe and symmetrize") {
    EdgeList list;
    list.n = 2;
    list.edges = {{0, 1}, {1, 0}, {0, 1}};
    Graph g = build_graph(list);
    CHECK(g.num_edges() == 1);
    REQUIRE(g.degree(0) == 1);
    CHECK(g.neighbors(0)[0] == 1);
    validate_graph(g);
}

TEST_CASE("build: self-loop names the vertex") {
    EdgeList list;
    list.n = 5;
    list.edges = {{0, 1}, {3, 3}};
    CHECK_THROWS_WITH_AS(build_graph(list), doctest::Contains("vertex 3"), Error);
}

TEST_CASE("build: C5 structure") {
    Graph g = build_graph(parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 0\n"));
    CHECK(g.num_vertices() == 5);
    CHECK(g.num_edges() == 5);
    for (int u = 0; u < 5; ++u) CHECK(g.degree(u) == 2);
    CHECK(g.neighbors(0)[0] == 1);
    CHECK(g.neighbors(0)[1] == 4);
    validate_graph(g);
}

TEST_CASE("connectivity: path, disjoint triangles, petersen") {
    Graph path = build_graph(parse_edge_list("0 1\n1 2\n2 3\n"));
    auto c1 = connected_and_cyclic(path);
    CHECK(c1.is_connected);
    CHECK_FALSE(c1.has_cycle);

    Graph two = build_graph(parse_edge_list("0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n"));
    auto c2 = connected_and_cyclic(two);
    CHECK_FALSE(c2.is_connected);
    CHECK(c2.has_cycle);

    GeneratorSpec spec;
    spec.model = GraphModel::Named;
    spec.name = "petersen";
    auto c3 = connected_and_cyclic(generate(spec));
    CHECK(c3.is_connected);
    CHECK(c3.has_cycle);

    auto c4 = connected_and_cyclic(Graph{});
    CHECK(c4.is_connected);
    CHECK_FALSE(c4.has_cycle);
}

TEST_CASE("components labels by discovery order") {
    Graph g = build_graph(parse_edge_list("p 5 2\n0 1\n3 4\n"));
    Components c = components(g);
    CHECK(c.count == 3);
    CHECK(c.id[0] == c.id[1]);
    CHECK(c.id[2] == 1);
    CHECK(c.id[3] == c.id[4]);
}

TEST_CASE("parse: empty input yields the empty graph") {
    EdgeList list = parse_edge_list("");
    CHECK(list.n == 0);
    CHECK(list.edges.empty());
    Graph g = build_graph(list);
    CHECK(g.num_vertices() == 0);
    CHECK(serialize_edge_list(g) == "p 0 0\n");
}

TEST_CASE("serialize: canonical form round-trips") {
    Graph g = build_graph(parse_edge_list("2 0\n1 0\n2 1\n"));
    std::string text = serialize_edge_list(g);
    CHECK(text == "p 3 3\n0 1\n0 2\n1 2\n");
    CHECK(build_graph(parse_edge_list(text)) == g);
}

TEST_CASE("serialize: random graphs round-trip bit-exactly") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GeneratorSpec spec;
        spec.model = GraphModel::Gnp;
        spec.n = 40;
        spec.p = 0.15;
        spec.seed = seed;
        Graph g = generate(spec);
        validate_graph(g);
        std::string text = serialize_edge_list(g);
        Graph back = build_graph(parse_edge_list(text));
        CHECK(back == g);
        CHECK(serialize_edge_list(back) == text);
    }
}
