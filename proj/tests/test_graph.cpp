#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "itp/gen.hpp"
#include "itp/graph.hpp"
#include "itp/io.hpp"

using namespace itp;

TEST_CASE("dimacs parsing") {
    auto pg = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::Dimacs);
    CHECK(pg.graph == complete_graph(3));
    CHECK(pg.warnings.empty());

    auto empty = parse_graph("p edge 2 0\n", GraphFormat::Dimacs);
    CHECK(empty.graph.node_count() == 2);
    CHECK(empty.graph.edge_count() == 0);

    auto commented = parse_graph("c a comment\np edge 2 1\ne 1 2\n", GraphFormat::Dimacs);
    CHECK(commented.graph.edge_count() == 1);

    CHECK_THROWS_AS(parse_graph("p vertex 3 3\n", GraphFormat::Dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("e 1 2\n", GraphFormat::Dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 4\n", GraphFormat::Dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 2 2\n", GraphFormat::Dimacs), ParseError);

    auto dup = parse_graph("p edge 3 3\ne 1 2\ne 2 1\ne 1 3\n", GraphFormat::Dimacs);
    CHECK(dup.graph.edge_count() == 2);
    CHECK(dup.warnings.size() >= 1);  // duplicate dropped with a warning
}

TEST_CASE("edgelist parsing") {
    auto p4 = parse_graph("0 1\n1 2\n2 3\n", GraphFormat::EdgeList);
    CHECK(p4.graph == path_graph(4));

    auto iso = parse_graph("n 5\n0 1\n", GraphFormat::EdgeList);
    CHECK(iso.graph.node_count() == 5);
    CHECK(iso.graph.edge_count() == 1);

    CHECK_THROWS_AS(parse_graph("n 2\n0 2\n", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("0 0\n", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("0 x\n", GraphFormat::EdgeList), ParseError);
}

TEST_CASE("json parsing") {
    auto pg = parse_graph(R"({"n": 3, "edges": [[0,1],[1,2]]})", GraphFormat::Json);
    CHECK(pg.graph == path_graph(3));
    CHECK_THROWS_AS(parse_graph("{\"edges\": []}", GraphFormat::Json), ParseError);
    CHECK_THROWS_AS(parse_graph("not json", GraphFormat::Json), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0,0]]})", GraphFormat::Json), ParseError);
}

TEST_CASE("round-trip identity across formats") {
    std::mt19937 seeds(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(seeds() % 12);
        Graph g = random_graph(n, 400000, seeds());
        for (GraphFormat f : {GraphFormat::Dimacs, GraphFormat::EdgeList, GraphFormat::Json}) {
            Graph back = parse_graph(serialize_graph(g, f), f).graph;
            CHECK(back == g);
            CHECK(parse_graph(serialize_graph(back, f), f).graph == back);
        }
    }
}

TEST_CASE("generators") {
    CHECK(complete_graph(4).edge_count() == 6);
    Graph c5 = cycle_graph(5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(complete_bipartite(3, 4).edge_count() == 12);

    CHECK(random_graph(10, 500000, 1) == random_graph(10, 500000, 1));
    CHECK(random_graph(10, 0, 3).edge_count() == 0);
    CHECK(random_graph(6, 1000000, 3).edge_count() == 15);
}

TEST_CASE("is_dominating_set") {
    Graph c4 = cycle_graph(4);
    CHECK(is_dominating_set(c4, {0, 1}));
    CHECK_FALSE(is_dominating_set(c4, {0}));  // node 2 has neighbors 1 and 3 only
    CHECK(is_dominating_set(complete_graph(5), {2}));
    CHECK(is_dominating_set(Graph(0, {}), {}));
}

TEST_CASE("is_vertex_cover") {
    CHECK(is_vertex_cover(complete_bipartite(1, 3), {0}));  // star center
    CHECK(is_vertex_cover(cycle_graph(4), {0, 2}));
    CHECK_FALSE(is_vertex_cover(path_graph(4), {0, 3}));  // edge (1,2) uncovered
}

TEST_CASE("is_proper_coloring") {
    Graph k2 = complete_graph(2);
    CHECK(is_proper_coloring(k2, ColoringAssignment{{{1}, {2}}}));
    CHECK_FALSE(is_proper_coloring(k2, ColoringAssignment{{{1, 2}, {2, 3}}}));
    Graph c5 = cycle_graph(5);
    CHECK(is_proper_coloring(c5, ColoringAssignment{{{0}, {1}, {0}, {1}, {2}}}));
}

TEST_CASE("is_equitable_coloring") {
    Graph c4 = cycle_graph(4);
    CHECK(is_equitable_coloring(c4, ColoringAssignment{{{0}, {1}, {0}, {1}}}, 2));

    Graph star = complete_bipartite(1, 3);
    // any 2-coloring is forced into classes of sizes 1 and 3
    CHECK_FALSE(is_equitable_coloring(star, ColoringAssignment{{{0}, {1}, {1}, {1}}}, 2));
    CHECK(is_equitable_coloring(star, ColoringAssignment{{{2}, {0}, {0}, {1}}}, 3));

    // wrong class count and empty classes are violations
    CHECK_FALSE(is_equitable_coloring(c4, ColoringAssignment{{{0}, {1}, {0}, {1}}}, 3));
    CHECK_FALSE(is_equitable_coloring(c4, ColoringAssignment{{{0}, {0}, {0}, {0}}}, 2));
    // multicolor sets are not a single coloring
    CHECK_FALSE(is_equitable_coloring(c4, ColoringAssignment{{{0, 1}, {1}, {0}, {1}}}, 2));
}

TEST_CASE("complete graphs vs vertex covers, exhaustively") {
    for (int n = 2; n <= 6; ++n) {
        Graph kn = complete_graph(n);
        for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
            NodeSet s;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) s.push_back(v);
            int size = static_cast<int>(s.size());
            if (size >= n - 1) CHECK(is_vertex_cover(kn, s));
            else CHECK_FALSE(is_vertex_cover(kn, s));
        }
    }
}

TEST_CASE("graph construction errors") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParseError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), ParseError);
    Graph dedup(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dedup.edge_count() == 1);
    CHECK(dedup.duplicates_dropped() == 2);
}

TEST_CASE("malformed input never escapes as anything but ParseError") {
    std::mt19937 rng(13);
    const std::string alphabet = "pecn 0123456789\n\t-x[]{},:\"";
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text;
        int len = static_cast<int>(rng() % 40);
        for (int i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
        for (GraphFormat f : {GraphFormat::Dimacs, GraphFormat::EdgeList, GraphFormat::Json}) {
            try {
                parse_graph(text, f);
            } catch (const ParseError&) {
                // fine: rejected with a diagnostic
            }
        }
    }
}

TEST_CASE("components and induced subgraphs") {
    // two triangles
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == NodeSet{0, 1, 2});
    CHECK(comps[1] == NodeSet{3, 4, 5});
    CHECK_FALSE(is_connected(g));
    auto sub = induced_subgraph(g, comps[1]);
    CHECK(sub.graph == complete_graph(3));
    CHECK(sub.original_id == NodeSet{3, 4, 5});
}
