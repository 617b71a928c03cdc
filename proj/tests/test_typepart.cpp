#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "itp/gen.hpp"
#include "itp/typepart.hpp"

using namespace itp;

namespace {

// Reference partition straight from the pairwise relation; shares nothing
// with the hashed implementation.
std::vector<NodeSet> pairwise_partition(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.same_type(u, v)) parent[find(u)] = find(v);
    std::map<int, NodeSet> by_root;
    for (int v = 0; v < n; ++v) by_root[find(v)].push_back(v);
    std::vector<NodeSet> out;
    for (auto& [r, members] : by_root) out.push_back(members);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeSet> class_members(const TypePartition& p) {
    std::vector<NodeSet> out;
    for (const auto& c : p.classes) out.push_back(c.members);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("type partition on named graphs") {
    TypePartition k3 = type_partition(complete_graph(3));
    REQUIRE(k3.class_count() == 1);
    CHECK(k3.classes[0].members == NodeSet{0, 1, 2});
    CHECK(k3.classes[0].kind == ClassKind::Clique);

    TypePartition c4 = type_partition(cycle_graph(4));
    REQUIRE(c4.class_count() == 2);
    CHECK(c4.classes[0].members == NodeSet{0, 2});
    CHECK(c4.classes[1].members == NodeSet{1, 3});
    CHECK(c4.classes[0].kind == ClassKind::Independent);
    CHECK(c4.classes[1].kind == ClassKind::Independent);

    TypePartition p4 = type_partition(path_graph(4));
    CHECK(p4.class_count() == 4);
    for (const auto& c : p4.classes) {
        CHECK(c.members.size() == 1);
        CHECK(c.kind == ClassKind::Clique);  // singletons count as cliques
    }

    // classes ordered by smallest member
    TypePartition star = type_partition(complete_bipartite(1, 3));
    REQUIRE(star.class_count() == 2);
    CHECK(star.classes[0].members == NodeSet{0});
    CHECK(star.classes[1].members == NodeSet{1, 2, 3});
    CHECK(star.classes[1].kind == ClassKind::Independent);
}

TEST_CASE("type graph on named graphs") {
    Graph c4 = cycle_graph(4);
    auto [q, meta] = type_graph(c4, type_partition(c4));
    CHECK(q == complete_graph(2));
    CHECK(meta == std::vector<int>{0, 1});

    Graph k5 = complete_graph(5);
    CHECK(type_graph(k5, type_partition(k5)).first.node_count() == 1);

    Graph c5 = cycle_graph(5);
    CHECK(type_graph(c5, type_partition(c5)).first == c5);  // base graph fixed point
}

TEST_CASE("type sequence on named graphs") {
    TypeSequence c4 = type_sequence(cycle_graph(4));
    REQUIRE(c4.depth() == 2);
    CHECK(c4.levels[0].graph.node_count() == 4);
    CHECK(c4.levels[1].graph == complete_graph(2));
    CHECK(c4.levels[2].graph.node_count() == 1);
    CHECK(c4.itp() == 1);

    TypeSequence k7 = type_sequence(complete_graph(7));
    CHECK(k7.depth() == 1);
    CHECK(k7.itp() == 1);

    TypeSequence c5 = type_sequence(cycle_graph(5));
    CHECK(c5.depth() == 0);
    CHECK(c5.itp() == 5);
}

TEST_CASE("nd, itp, base graph predicates") {
    CHECK(neighborhood_diversity(complete_bipartite(3, 4)) == 2);
    CHECK(iterated_type_partition(complete_bipartite(3, 4)) == 1);
    CHECK(neighborhood_diversity(path_graph(4)) == 4);
    CHECK(iterated_type_partition(path_graph(4)) == 4);
    CHECK(is_base_graph(path_graph(4)));
    for (int n : {2, 5, 9}) {
        CHECK(neighborhood_diversity(complete_graph(n)) == 1);
        CHECK(iterated_type_partition(complete_graph(n)) == 1);
    }
    CHECK(is_base_graph(complete_graph(1)));
    CHECK_FALSE(is_base_graph(complete_graph(2)));
    CHECK_FALSE(is_base_graph(cycle_graph(4)));
    CHECK(is_base_graph(cycle_graph(5)));
}

TEST_CASE("pairwise-definition equivalence on random graphs up to 8 nodes") {
    std::mt19937 seeds(2024);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(seeds() % 8);
        int p = 100000 + static_cast<int>(seeds() % 800000);
        Graph g = random_graph(n, p, seeds());
        TypePartition got = type_partition(g);
        CHECK(class_members(got) == pairwise_partition(g));
        // kinds consistent with membership
        for (const auto& cls : got.classes) {
            for (size_t i = 0; i < cls.members.size(); ++i)
                for (size_t j = i + 1; j < cls.members.size(); ++j)
                    CHECK(g.has_edge(cls.members[i], cls.members[j]) ==
                          (cls.kind == ClassKind::Clique));
            for (int v : cls.members) CHECK(got.class_of[v] == &cls - got.classes.data());
        }
    }
}

TEST_CASE("itp <= nd <= n and monotone shrink on random graphs") {
    std::mt19937 seeds(99);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(seeds() % 16);
        Graph g = random_graph(n, static_cast<int>(seeds() % 1000001), seeds());
        TypeSequence seq = type_sequence(g);
        int nd_val = seq.levels[0].partition.class_count();
        CHECK(seq.itp() <= nd_val);
        CHECK(nd_val <= n);
        for (size_t i = 0; i + 1 < seq.levels.size(); ++i)
            CHECK(seq.levels[i + 1].graph.node_count() < seq.levels[i].graph.node_count());
        if (seq.depth() >= 1)
            CHECK(seq.levels[1].graph.node_count() == nd_val);
        // base level is all singletons
        CHECK(seq.levels.back().partition.class_count() == seq.base().node_count());
    }
}

TEST_CASE("idempotence at the base graph") {
    for (const Graph& base : {cycle_graph(5), path_graph(4), cycle_graph(7)}) {
        REQUIRE(is_base_graph(base));
        auto [q, meta] = type_graph(base, type_partition(base));
        CHECK(q == base);
        for (size_t i = 0; i < meta.size(); ++i) CHECK(meta[i] == static_cast<int>(i));
    }
}

TEST_CASE("quotient soundness is enforced") {
    // hand-built partition that is not all-or-nothing must be rejected
    Graph p3 = path_graph(3);
    TypePartition bogus;
    bogus.classes = {TypeClass{{0, 1}, ClassKind::Clique}, TypeClass{{2}, ClassKind::Clique}};
    bogus.class_of = {0, 0, 1};
    CHECK_THROWS_AS(type_graph(p3, bogus), InvariantViolation);
}

TEST_CASE("disconnected inputs are fine") {
    // two disjoint triangles: each triangle is a clique class
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    TypePartition p = type_partition(g);
    CHECK(p.class_count() == 2);
    TypeSequence seq = type_sequence(g);
    CHECK(seq.itp() == 1);  // quotient: 2 isolated metavertices -> 1 class -> K_1

    Graph edgeless(4, {});
    CHECK(neighborhood_diversity(edgeless) == 1);
    CHECK(iterated_type_partition(edgeless) == 1);
}
