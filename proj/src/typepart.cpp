#include "itp/typepart.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace itp {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

TypePartition type_partition(const Graph& g) {
    const int n = g.node_count();
    const size_t blocks = g.blocks_per_row();
    UnionFind uf(n);

    // Same type <=> equal open neighborhoods (non-adjacent) or equal closed
    // neighborhoods (adjacent), so grouping by both keys and merging groups
    // covers the whole relation.
    std::map<std::vector<uint64_t>, int> open_rep, closed_rep;
    std::vector<uint64_t> key(blocks);
    for (int v = 0; v < n; ++v) {
        key.assign(g.row(v), g.row(v) + blocks);
        auto [it, fresh] = open_rep.try_emplace(key, v);
        if (!fresh) uf.unite(v, it->second);

        key[v / 64] |= uint64_t{1} << (v % 64);
        auto [jt, fresh2] = closed_rep.try_emplace(key, v);
        if (!fresh2) uf.unite(v, jt->second);
    }

    std::vector<int> root_to_class(n, -1);
    TypePartition p;
    p.class_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (root_to_class[r] < 0) {
            root_to_class[r] = p.class_count();
            p.classes.push_back(TypeClass{{}, ClassKind::Clique});
        }
        int c = root_to_class[r];
        p.class_of[v] = c;
        p.classes[c].members.push_back(v);  // ascending v keeps members sorted
    }
    for (auto& cls : p.classes)
        cls.kind = (cls.members.size() < 2 || g.has_edge(cls.members[0], cls.members[1]))
                       ? ClassKind::Clique
                       : ClassKind::Independent;
    return p;
}

std::pair<Graph, std::vector<int>> type_graph(const Graph& g, const TypePartition& p) {
    const int t = p.class_count();
    // Count intra- and cross-class edges to both build the quotient and check
    // the all-or-nothing property in one pass.
    std::map<std::pair<int, int>, long long> cross;
    std::vector<long long> intra(t, 0);
    for (const auto& [u, v] : g.edges()) {
        int x = p.class_of[u], y = p.class_of[v];
        if (x == y) ++intra[x];
        else ++cross[{std::min(x, y), std::max(x, y)}];
    }
    for (int x = 0; x < t; ++x) {
        long long sz = static_cast<long long>(p.classes[x].members.size());
        long long expected = p.classes[x].kind == ClassKind::Clique ? sz * (sz - 1) / 2 : 0;
        check_invariant(intra[x] == expected, "type class " + std::to_string(x) +
                                                  " is neither a clique nor an independent set");
    }
    std::vector<std::pair<int, int>> qedges;
    for (const auto& [xy, cnt] : cross) {
        long long full = static_cast<long long>(p.classes[xy.first].members.size()) *
                         static_cast<long long>(p.classes[xy.second].members.size());
        check_invariant(cnt == full, "classes " + std::to_string(xy.first) + "," +
                                         std::to_string(xy.second) +
                                         " are partially joined (quotient undefined)");
        qedges.push_back(xy);
    }
    std::vector<int> meta(t);
    std::iota(meta.begin(), meta.end(), 0);
    return {Graph(t, std::move(qedges)), std::move(meta)};
}

TypeSequence type_sequence(const Graph& g) {
    TypeSequence seq;
    Graph cur = g;
    while (true) {
        TypePartition p = type_partition(cur);
        bool base = p.class_count() == cur.node_count();
        seq.levels.push_back(TypeLevel{cur, p});
        if (base) break;
        cur = type_graph(cur, seq.levels.back().partition).first;
    }
    return seq;
}

int neighborhood_diversity(const Graph& g) {
    return type_partition(g).class_count();
}

int iterated_type_partition(const Graph& g) {
    return type_sequence(g).itp();
}

bool is_base_graph(const Graph& g) {
    return neighborhood_diversity(g) == g.node_count();
}

std::string kind_name(ClassKind k) {
    return k == ClassKind::Clique ? "clique" : "independent";
}

}  // namespace itp
