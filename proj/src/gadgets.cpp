#include "itp/gadgets.hpp"

#include <algorithm>
#include <random>

#include "itp/typepart.hpp"

namespace itp {

Graph flower(int a, int k) {
    if (a < 1 || k < 1) throw ParseError("flower(a,k) requires a,k >= 1");
    const int n = 1 + (a + 1) * k;
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);  // center joined to everything
    for (int c = 0; c <= a; ++c) {
        int first = 1 + c * k;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) e.emplace_back(first + i, first + j);
    }
    return Graph(n, std::move(e));
}

Graph chain(int k, int l, int B) {
    if (k < 1 || l < 1 || B < 1) throw ParseError("chain(k,l,B) requires k,l,B >= 1");
    // sets S_1..S_k of size B, S_{k+1} of size l+1, numbered consecutively
    std::vector<int> size(k + 2, B);
    size[k + 1] = l + 1;
    std::vector<int> first(k + 2, 0);
    for (int i = 2; i <= k + 1; ++i) first[i] = first[i - 1] + size[i - 1];
    int n = first[k + 1] + size[k + 1];
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i)
        for (int u = 0; u < size[i]; ++u)
            for (int v = 0; v < size[i + 1]; ++v)
                e.emplace_back(first[i] + u, first[i + 1] + v);
    return Graph(n, std::move(e));
}

BinPackingInstance normalize_exact(BinPackingInstance inst) {
    if (inst.bins < 1 || inst.capacity < 1)
        throw ParseError("normalize_exact requires k >= 1 and B >= 1");
    for (int a : inst.items)
        if (a < 1 || a > inst.capacity)
            throw ParseError("item value " + std::to_string(a) + " outside [1,B]");
    long long deficit = static_cast<long long>(inst.bins) * inst.capacity - inst.total();
    if (deficit < 0)
        throw ParseError("items total " + std::to_string(inst.total()) + " exceeds k*B = " +
                         std::to_string(inst.total() + deficit));
    for (long long i = 0; i < deficit; ++i) inst.items.push_back(1);
    return inst;
}

std::string NodeRole::to_string() const {
    switch (tag) {
        case Tag::Chain1: return "chain1:S" + std::to_string(set_index);
        case Tag::Chain2: return "chain2:S" + std::to_string(set_index);
        case Tag::BCenter: return "B_center";
        case Tag::BClique: return "B_clique:" + std::to_string(clique) + ":" + std::to_string(pos);
        case Tag::FlowerCenter: return "flower_center:" + std::to_string(item);
        case Tag::FlowerClique:
            return "flower_clique:" + std::to_string(item) + ":" + std::to_string(clique) + ":" +
                   std::to_string(pos);
    }
    return "?";
}

int ReductionGraph::b_center() const {
    for (size_t v = 0; v < roles.size(); ++v)
        if (roles[v].tag == NodeRole::Tag::BCenter) return static_cast<int>(v);
    throw InvariantViolation("reduction graph without a capacity-flower center");
}

int ReductionGraph::item_center(int j) const {
    for (size_t v = 0; v < roles.size(); ++v)
        if (roles[v].tag == NodeRole::Tag::FlowerCenter && roles[v].item == j)
            return static_cast<int>(v);
    throw InvariantViolation("reduction graph without a center for item " + std::to_string(j));
}

NodeSet ReductionGraph::chain_nodes() const {
    NodeSet out;
    for (size_t v = 0; v < roles.size(); ++v)
        if (roles[v].tag == NodeRole::Tag::Chain1 || roles[v].tag == NodeRole::Tag::Chain2)
            out.push_back(static_cast<int>(v));
    return out;
}

ReductionGraph reduce_binpacking_to_eqc(const BinPackingInstance& inst) {
    const int k = inst.bins, B = inst.capacity, l = inst.item_count();
    if (k < 2) throw ParseError("reduction requires k >= 2");
    if (B < 1 || l < 1) throw ParseError("reduction requires B >= 1 and at least one item");
    for (int a : inst.items)
        if (a < 1 || a > B) throw ParseError("item value " + std::to_string(a) + " outside [1,B]");

    std::vector<NodeRole> roles;
    std::vector<std::pair<int, int>> edges;
    auto add_node = [&](NodeRole r) {
        roles.push_back(r);
        return static_cast<int>(roles.size()) - 1;
    };

    // Two chains: sets S_1..S_k of size B and S_{k+1} of size l+1, consecutive
    // sets completely joined.
    NodeSet chain_all;
    for (int which = 0; which < 2; ++which) {
        std::vector<int> prev;
        for (int i = 1; i <= k + 1; ++i) {
            int size = i <= k ? B : l + 1;
            std::vector<int> cur;
            for (int t = 0; t < size; ++t) {
                NodeRole r;
                r.tag = which == 0 ? NodeRole::Tag::Chain1 : NodeRole::Tag::Chain2;
                r.set_index = i;
                int v = add_node(r);
                cur.push_back(v);
                chain_all.push_back(v);
            }
            for (int u : prev)
                for (int v : cur) edges.emplace_back(u, v);
            prev = std::move(cur);
        }
    }

    // One flower: center plus (count) k-cliques, joined to all chain nodes.
    auto add_flower = [&](int cliques, NodeRole center_role, NodeRole::Tag clique_tag, int item) {
        int center = add_node(center_role);
        for (int c = 0; c < cliques; ++c) {
            std::vector<int> clique_nodes;
            for (int p = 0; p < k; ++p) {
                NodeRole r;
                r.tag = clique_tag;
                r.item = item;
                r.clique = c;
                r.pos = p;
                clique_nodes.push_back(add_node(r));
            }
            for (size_t i = 0; i < clique_nodes.size(); ++i)
                for (size_t j = i + 1; j < clique_nodes.size(); ++j)
                    edges.emplace_back(clique_nodes[i], clique_nodes[j]);
            for (int v : clique_nodes) edges.emplace_back(center, v);
        }
    };

    NodeRole bc;
    bc.tag = NodeRole::Tag::BCenter;
    add_flower(B + 1, bc, NodeRole::Tag::BClique, -1);
    for (int j = 0; j < l; ++j) {
        NodeRole fc;
        fc.tag = NodeRole::Tag::FlowerCenter;
        fc.item = j;
        add_flower(inst.items[j] + 1, fc, NodeRole::Tag::FlowerClique, j);
    }

    // Join every flower node to every chain node.
    int n = static_cast<int>(roles.size());
    int first_flower = static_cast<int>(chain_all.size());
    for (int f = first_flower; f < n; ++f)
        for (int c : chain_all) edges.emplace_back(c, f);

    ReductionGraph out{Graph(n, std::move(edges)), std::move(roles), inst};
    return out;
}

ColoringAssignment coloring_from_packing(const ReductionGraph& r, const Packing& packing) {
    const int k = r.k(), B = r.capacity(), l = r.items();
    if (!r.instance.exact())
        throw ParseError("packings exist only for exact instances; normalize first");
    if (static_cast<int>(packing.size()) != k)
        throw ParseError("packing must have exactly k bins");
    std::vector<int> bin_of(l, -1);
    for (int b = 0; b < k; ++b) {
        long long sum = 0;
        for (int j : packing[b]) {
            if (j < 0 || j >= l) throw ParseError("packing references item " + std::to_string(j));
            if (bin_of[j] >= 0) throw ParseError("item " + std::to_string(j) + " packed twice");
            bin_of[j] = b;
            sum += r.instance.items[j];
        }
        if (sum != B)
            throw ParseError("bin " + std::to_string(b) + " sums to " + std::to_string(sum) +
                             ", expected B = " + std::to_string(B));
    }
    for (int j = 0; j < l; ++j)
        if (bin_of[j] < 0) throw ParseError("item " + std::to_string(j) + " not packed");

    // Colors 0..k-1: bins; k: capacity center; k+1, k+2: the two chain colors.
    ColoringAssignment a;
    a.colors.assign(r.graph.node_count(), {});
    for (int v = 0; v < r.graph.node_count(); ++v) {
        const NodeRole& role = r.roles[v];
        switch (role.tag) {
            case NodeRole::Tag::Chain1:
                a.colors[v] = {role.set_index % 2 == 1 ? k + 2 : k + 1};
                break;
            case NodeRole::Tag::Chain2:
                a.colors[v] = {role.set_index % 2 == 0 ? k + 2 : k + 1};
                break;
            case NodeRole::Tag::BCenter:
                a.colors[v] = {k};
                break;
            case NodeRole::Tag::BClique:
                // the k colors {0..k-1}, one per position
                a.colors[v] = {role.pos};
                break;
            case NodeRole::Tag::FlowerCenter:
                a.colors[v] = {bin_of[role.item]};
                break;
            case NodeRole::Tag::FlowerClique: {
                // the k colors {0..k} minus the center's bin color
                int skip = bin_of[role.item];
                int c = role.pos >= skip ? role.pos + 1 : role.pos;
                a.colors[v] = {c};
                break;
            }
        }
    }
    check_invariant(is_equitable_coloring(r.graph, a, k + 3),
                    "packing-derived coloring failed the equitable validator");
    return a;
}

Packing packing_from_coloring(const ReductionGraph& r, const ColoringAssignment& a) {
    const int k = r.k(), B = r.capacity(), l = r.items();
    if (!is_equitable_coloring(r.graph, a, k + 3))
        throw ParseError("certificate is not an equitable (k+3)-coloring of the reduction graph");

    // The two chain colors never appear on flowers.
    std::vector<int> chain_colors;
    for (int v : r.chain_nodes()) set_insert(chain_colors, a.colors[v][0]);
    check_invariant(chain_colors.size() == 2,
                    "chains used " + std::to_string(chain_colors.size()) + " colors, expected 2");
    for (int v = 0; v < r.graph.node_count(); ++v) {
        const auto tag = r.roles[v].tag;
        if (tag == NodeRole::Tag::Chain1 || tag == NodeRole::Tag::Chain2) continue;
        check_invariant(!set_contains(chain_colors, a.colors[v][0]),
                        "flower node " + std::to_string(v) + " reused a chain color");
    }

    // The capacity center's color is no item center's color. Bin colors are
    // whatever ids remain once the chain and capacity colors are removed, so
    // the extraction is invariant under relabeling.
    const int zc = a.colors[r.b_center()][0];
    std::vector<int> used;
    for (const auto& cs : a.colors) set_insert(used, cs[0]);
    std::vector<int> remaining;
    for (int c : used)
        if (c != zc && !set_contains(chain_colors, c)) remaining.push_back(c);
    check_invariant(static_cast<int>(remaining.size()) == k,
                    "expected k bin colors after removing chain and capacity colors");

    Packing bins(k);
    for (int j = 0; j < l; ++j) {
        int cj = a.colors[r.item_center(j)][0];
        check_invariant(cj != zc, "item center " + std::to_string(j) +
                                      " shares the capacity center's color");
        auto it = std::lower_bound(remaining.begin(), remaining.end(), cj);
        check_invariant(it != remaining.end() && *it == cj,
                        "item center color is not a bin color");
        bins[static_cast<int>(it - remaining.begin())].push_back(j);
    }
    for (int b = 0; b < k; ++b) {
        long long sum = 0;
        for (int j : bins[b]) sum += r.instance.items[j];
        check_invariant(sum == B, "extracted bin " + std::to_string(b) + " sums to " +
                                      std::to_string(sum) + ", expected " + std::to_string(B));
    }
    return bins;
}

Graph expand(const Graph& base, int depth, int mult_min, int mult_max, uint32_t seed) {
    if (depth < 1) throw ParseError("expand requires depth >= 1");
    if (mult_min < 2 || mult_max < mult_min)
        throw ParseError("expand requires multiplicities with 2 <= min <= max");
    if (!is_connected(base)) throw ParseError("expand requires a connected base graph");
    if (!is_base_graph(base))
        throw ParseError("expand requires a base graph (all type classes singletons)");

    std::mt19937 rng(seed);
    auto draw = [&]() {
        return mult_min + static_cast<int>(rng() % static_cast<uint32_t>(mult_max - mult_min + 1));
    };

    Graph cur = base;
    for (int step = 0; step < depth; ++step) {
        const bool independent = step % 2 == 0;  // first replacement is independent sets
        const int n = cur.node_count();
        std::vector<int> first(n + 1, 0);
        for (int v = 0; v < n; ++v) first[v + 1] = first[v] + draw();
        std::vector<std::pair<int, int>> edges;
        if (!independent)
            for (int v = 0; v < n; ++v)
                for (int i = first[v]; i < first[v + 1]; ++i)
                    for (int j = i + 1; j < first[v + 1]; ++j) edges.emplace_back(i, j);
        for (const auto& [u, v] : cur.edges())
            for (int i = first[u]; i < first[u + 1]; ++i)
                for (int j = first[v]; j < first[v + 1]; ++j) edges.emplace_back(i, j);
        cur = Graph(first[n], std::move(edges));
    }
    return cur;
}

bool ReductionInvariantReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.pass; });
}

ReductionInvariantReport verify_reduction_invariants(const ReductionGraph& r) {
    const long long k = r.k(), B = r.capacity(), l = r.items();
    ReductionInvariantReport rep;
    auto add = [&](std::string name, long long expected, long long actual) {
        rep.checks.push_back(InvariantCheck{std::move(name), expected, actual, expected == actual});
    };
    add("node_count_(k+3)(Bk+l+1)", (k + 3) * (B * k + l + 1), r.graph.node_count());
    add("itp_2k+3", 2 * k + 3, iterated_type_partition(r.graph));
    long long nd_expected = 2 * (k + 1) + (B + 2);
    for (int a : r.instance.items) nd_expected += a + 2;
    add("nd_from_first_quotient", nd_expected, neighborhood_diversity(r.graph));
    return rep;
}

}  // namespace itp
