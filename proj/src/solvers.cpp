#include "itp/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "itp/ilp.hpp"
#include "itp/indep.hpp"

namespace itp {

namespace {

bool is_complete(const Graph& g) {
    long long n = g.node_count();
    return 2LL * g.edge_count() == n * (n - 1);
}

std::vector<uint64_t> adjacency_masks64(const Graph& g) {
    if (g.node_count() > 62)
        throw CapExceeded("exact subset search limited to 62 base-graph nodes, got " +
                          std::to_string(g.node_count()));
    std::vector<uint64_t> adj(g.node_count(), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= uint64_t{1} << v;
        adj[v] |= uint64_t{1} << u;
    }
    return adj;
}

// Subsets of fixed size in increasing numeric order (Gosper's hack).
template <typename F>
bool for_each_subset64(int n, int size, F&& f) {
    if (size == 0) return f(uint64_t{0});
    if (size > n) return false;
    uint64_t mask = (uint64_t{1} << size) - 1;
    const uint64_t limit = uint64_t{1} << n;
    while (mask < limit) {
        if (f(mask)) return true;
        uint64_t c = mask & -mask, r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return false;
}

NodeSet mask_to_set64(uint64_t mask) {
    NodeSet s;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) s.push_back(v);
    return s;
}

void note_base(SolveStats* stats, int depth, int base_size) {
    if (!stats) return;
    stats->depth = std::max(stats->depth, depth);
    stats->base_size += base_size;
}

// ---- dominating set ---------------------------------------------------------

// Direct solution on a complete graph. A demanded node needs a neighbor in
// the solution, so Q = V forces two nodes and anything less allows one.
std::optional<NodeSet> stds_complete(const Graph& h, const NodeSet& q) {
    const int n = h.node_count();
    if (static_cast<int>(q.size()) == n) {
        if (n >= 2) return NodeSet{0, 1};
        return std::nullopt;  // single node demanding a neighbor it does not have
    }
    if (q.empty()) return NodeSet{0};
    for (int v = 0; v < n; ++v)
        if (!set_contains(q, v)) return NodeSet{v};
    return std::nullopt;  // unreachable
}

std::optional<NodeSet> stds_bruteforce(const Graph& h, const NodeSet& q) {
    const int n = h.node_count();
    auto adj = adjacency_masks64(h);
    uint64_t qmask = 0;
    for (int v : q) qmask |= uint64_t{1} << v;
    const uint64_t all = n == 0 ? 0 : (uint64_t{1} << n) - 1;
    for (int size = 0; size <= n; ++size) {
        uint64_t found = 0;
        bool ok = for_each_subset64(n, size, [&](uint64_t mask) {
            uint64_t reached = 0;
            for (uint64_t m = mask; m;) {
                int v = __builtin_ctzll(m);
                m &= m - 1;
                reached |= adj[v];
            }
            if (qmask & ~reached) return false;                 // demanded node unreached
            if (~(mask | reached) & ~qmask & all) return false; // undominated bystander
            found = mask;
            return true;
        });
        if (ok) return mask_to_set64(found);
    }
    return std::nullopt;
}

std::optional<NodeSet> stds_connected(const Graph& h, const NodeSet& q, int depth,
                                      SolveStats* stats) {
    if (is_complete(h)) {
        note_base(stats, depth, h.node_count());
        return stds_complete(h, q);
    }
    TypePartition p = type_partition(h);
    if (p.class_count() == h.node_count()) {
        note_base(stats, depth, h.node_count());
        return stds_bruteforce(h, q);
    }
    Graph quotient = type_graph(h, p).first;
    NodeSet demand = ds_demand_lift(p, q);
    auto sub = stds_connected(quotient, demand, depth + 1, stats);
    if (!sub) return std::nullopt;
    NodeSet lifted = ds_solution_lift(p, *sub, q);
    // The lift never selects two nodes from one type class.
    std::vector<int> per_class(p.class_count(), 0);
    for (int v : lifted)
        check_invariant(++per_class[p.class_of[v]] <= 1,
                        "stds lift selected two nodes from one type class");
    return lifted;
}

}  // namespace

NodeSet ds_demand_lift(const TypePartition& p, const NodeSet& demand) {
    NodeSet out;
    for (int x = 0; x < p.class_count(); ++x) {
        const TypeClass& cls = p.classes[x];
        // An independent class never dominates its own members, so it always
        // needs an outside neighbor in the solution. A clique class can serve
        // its demanded members through the one node chosen from it; only when
        // every member is demanded does the chosen node itself need outside
        // help.
        bool demanded = cls.kind == ClassKind::Independent;
        if (!demanded) {
            demanded = true;
            for (int v : cls.members)
                if (!set_contains(demand, v)) {
                    demanded = false;
                    break;
                }
        }
        if (demanded) out.push_back(x);
    }
    return out;
}

NodeSet ds_solution_lift(const TypePartition& p, const NodeSet& quotient_solution,
                         const NodeSet& demand) {
    NodeSet out;
    for (int x : quotient_solution) {
        // Lowest member outside the demand set when one exists: a demanded
        // representative would need a neighbor in the solution that the
        // quotient no longer guarantees.
        const NodeSet& members = p.classes[x].members;
        int pick = members.front();
        for (int v : members)
            if (!set_contains(demand, v)) {
                pick = v;
                break;
            }
        out.push_back(pick);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<NodeSet> stds(const Graph& g, const NodeSet& demand, SolveStats* stats) {
    for (int v : demand)
        if (v < 0 || v >= g.node_count())
            throw std::invalid_argument("demand node " + std::to_string(v) + " out of range");
    NodeSet result;
    for (const NodeSet& comp : connected_components(g)) {
        Subgraph sub = induced_subgraph(g, comp);
        std::vector<int> local_of(g.node_count(), -1);
        for (size_t i = 0; i < comp.size(); ++i) local_of[comp[i]] = static_cast<int>(i);
        NodeSet local_demand;
        for (int v : demand)
            if (local_of[v] >= 0) local_demand.push_back(local_of[v]);
        auto part = stds_connected(sub.graph, local_demand, 0, stats);
        if (!part) return std::nullopt;
        for (int v : *part) result.push_back(sub.original_id[v]);
    }
    std::sort(result.begin(), result.end());
    return result;
}

NodeSet dominating_set(const Graph& g, SolveStats* stats) {
    auto d = stds(g, {}, stats);
    check_invariant(d.has_value(), "dominating set must exist for an empty demand set");
    check_invariant(is_dominating_set(g, *d), "dominating set certificate failed validation");
    return *d;
}

// ---- coloring ---------------------------------------------------------------

namespace {

MulticolorWeights quotient_color_weights(const TypePartition& p, const MulticolorWeights& w) {
    MulticolorWeights out(p.class_count(), 0);
    for (int x = 0; x < p.class_count(); ++x) {
        const TypeClass& cls = p.classes[x];
        if (cls.kind == ClassKind::Clique) {
            for (int v : cls.members) out[x] += w[v];
        } else {
            for (int v : cls.members) out[x] = std::max(out[x], w[v]);
        }
    }
    return out;
}

// Base case: minimize the number of colors, giving each independent set I a
// block of z_I fresh colors. A node takes every color of every chosen set
// containing it; the per-node equality makes that exactly w(u) colors.
ColoringAssignment multicolor_base(const Graph& base, const MulticolorWeights& w,
                                   SolveStats* stats, long long node_budget) {
    const int n = base.node_count();
    ColoringAssignment out;
    out.colors.resize(n);
    std::vector<NodeSet> sets = all_independent_sets(base);
    IlpModel model;
    for (size_t i = 0; i < sets.size(); ++i) {
        long long cap = std::numeric_limits<long long>::max();
        for (int u : sets[i]) cap = std::min(cap, w[u]);
        model.add_var("z_" + std::to_string(i), 0, cap);
    }
    std::vector<LinTerms> per_node(n);
    for (size_t i = 0; i < sets.size(); ++i)
        for (int u : sets[i]) per_node[u].push_back({static_cast<int>(i), 1});
    LinTerms obj;
    for (size_t i = 0; i < sets.size(); ++i) obj.push_back({static_cast<int>(i), 1});
    for (int u = 0; u < n; ++u) model.add_constraint(per_node[u], Rel::Eq, w[u]);
    model.set_objective(obj);
    IlpResult res = solve_min(model, node_budget);
    if (res.status == IlpStatus::BudgetExceeded)
        throw CapExceeded("coloring base-case program exceeded its search budget");
    check_invariant(res.solved(), "multicoloring base case must be feasible");
    if (stats) stats->ilp_nodes += res.nodes_explored;

    int next_color = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
        long long z = res.assignment[i];
        if (z == 0) continue;
        for (int u : sets[i])
            for (long long c = 0; c < z; ++c) out.colors[u].push_back(next_color + static_cast<int>(c));
        next_color += static_cast<int>(z);
    }
    for (int u = 0; u < n; ++u) {
        std::sort(out.colors[u].begin(), out.colors[u].end());
        check_invariant(static_cast<long long>(out.colors[u].size()) == w[u],
                        "base multicoloring assigned a wrong number of colors");
    }
    return out;
}

}  // namespace

ColoringAssignment coloring_lift(const TypePartition& p, const ColoringAssignment& quotient,
                                 const MulticolorWeights& w) {
    ColoringAssignment out;
    out.colors.resize(p.class_of.size());
    for (int x = 0; x < p.class_count(); ++x) {
        const TypeClass& cls = p.classes[x];
        const std::vector<int>& palette = quotient.colors[x];  // sorted ascending
        if (cls.kind == ClassKind::Clique) {
            long long need = 0;
            for (int u : cls.members) need += w[u];
            check_invariant(static_cast<long long>(palette.size()) == need,
                            "clique class palette size does not match the summed weights");
            size_t pos = 0;
            for (int u : cls.members) {
                out.colors[u].assign(palette.begin() + pos, palette.begin() + pos + w[u]);
                pos += w[u];
            }
        } else {
            long long widest = 0;
            for (int u : cls.members) widest = std::max(widest, w[u]);
            check_invariant(static_cast<long long>(palette.size()) == widest,
                            "independent class palette size does not match the max weight");
            for (int u : cls.members)
                out.colors[u].assign(palette.begin(), palette.begin() + w[u]);
            // Every member's set nests inside the widest member's set.
            for (int u : cls.members)
                check_invariant(std::includes(palette.begin(), palette.end(),
                                              out.colors[u].begin(), out.colors[u].end()),
                                "independent class member escaped its class palette");
        }
    }
    return out;
}

ColoringAssignment multicoloring(const Graph& g, const MulticolorWeights& w, SolveStats* stats,
                                 long long node_budget) {
    if (static_cast<int>(w.size()) != g.node_count())
        throw std::invalid_argument("weight vector size mismatch");
    for (long long x : w)
        if (x < 0) throw std::invalid_argument("multicolor weights must be nonnegative");

    TypeSequence seq = type_sequence(g);
    std::vector<MulticolorWeights> level_w;
    level_w.push_back(w);
    for (int lvl = 0; lvl < seq.depth(); ++lvl)
        level_w.push_back(quotient_color_weights(seq.levels[lvl].partition, level_w.back()));

    if (stats) {
        stats->depth = seq.depth();
        stats->base_size = seq.itp();
    }
    ColoringAssignment c = multicolor_base(seq.base(), level_w.back(), stats, node_budget);
    for (int lvl = seq.depth() - 1; lvl >= 0; --lvl)
        c = coloring_lift(seq.levels[lvl].partition, c, level_w[lvl]);
    check_invariant(is_proper_coloring(g, c), "multicoloring certificate failed validation");
    return c;
}

ColoringAssignment coloring(const Graph& g, SolveStats* stats, long long node_budget) {
    ColoringAssignment c = multicoloring(g, MulticolorWeights(g.node_count(), 1), stats, node_budget);
    for (const auto& cs : c.colors)
        check_invariant(cs.size() == 1, "unit-weight coloring must assign one color per node");
    return c;
}

// ---- vertex cover -----------------------------------------------------------

namespace {

long long wvc_cost(const NodeSet& cover, const VcWeights& weights) {
    long long cost = 0;
    std::vector<char> in(weights.w.size(), 0);
    for (int v : cover) in[v] = 1;
    for (size_t v = 0; v < weights.w.size(); ++v) cost += in[v] ? weights.s[v] : weights.w[v];
    return cost;
}

// Member with the largest s(u) - w(u), lowest id on ties: the one node a
// clique class may leave outside the cover.
int spare_member(const TypeClass& cls, const VcWeights& weights) {
    int best = cls.members.front();
    long long gain = weights.s[best] - weights.w[best];
    for (int u : cls.members) {
        long long g = weights.s[u] - weights.w[u];
        if (g > gain) {
            gain = g;
            best = u;
        }
    }
    return best;
}

WvcSolution wvc_bruteforce(const Graph& h, const VcWeights& weights) {
    const int n = h.node_count();
    if (n > 62)
        throw CapExceeded("exact subset search limited to 62 base-graph nodes, got " +
                          std::to_string(n));
    const auto& edges = h.edges();
    bool have = false;
    uint64_t best_mask = 0;
    long long best_cost = 0;
    for (int size = 0; size <= n; ++size) {
        for_each_subset64(n, size, [&](uint64_t mask) {
            for (const auto& [u, v] : edges)
                if (!((mask >> u) & 1) && !((mask >> v) & 1)) return false;
            long long cost = 0;
            for (int v = 0; v < n; ++v) cost += ((mask >> v) & 1) ? weights.s[v] : weights.w[v];
            if (!have || cost < best_cost) {
                have = true;
                best_cost = cost;
                best_mask = mask;
            }
            return false;  // keep scanning; cost is not monotone in subset size
        });
    }
    return WvcSolution{mask_to_set64(best_mask), best_cost};
}

}  // namespace

WvcSolution wvc2(const Graph& g, const VcWeights& weights, SolveStats* stats) {
    const int n = g.node_count();
    if (static_cast<int>(weights.w.size()) != n || static_cast<int>(weights.s.size()) != n)
        throw std::invalid_argument("weight vector size mismatch");
    for (int v = 0; v < n; ++v) {
        if (weights.w[v] < 0) throw std::invalid_argument("weights must be nonnegative");
        if (weights.w[v] > weights.s[v])
            throw std::invalid_argument("w(v) <= s(v) violated at node " + std::to_string(v));
    }

    TypeSequence seq = type_sequence(g);
    std::vector<VcWeights> level_w;
    level_w.push_back(weights);
    for (int lvl = 0; lvl < seq.depth(); ++lvl) {
        const TypePartition& p = seq.levels[lvl].partition;
        const VcWeights& cur = level_w.back();
        VcWeights next;
        next.w.assign(p.class_count(), 0);
        next.s.assign(p.class_count(), 0);
        for (int x = 0; x < p.class_count(); ++x) {
            const TypeClass& cls = p.classes[x];
            long long sum_s = 0, sum_w = 0;
            for (int u : cls.members) {
                sum_s += cur.s[u];
                sum_w += cur.w[u];
            }
            next.s[x] = sum_s;
            if (cls.kind == ClassKind::Clique) {
                int spare = spare_member(cls, cur);
                next.w[x] = sum_s - (cur.s[spare] - cur.w[spare]);
            } else {
                next.w[x] = sum_w;
            }
        }
        level_w.push_back(std::move(next));
    }

    if (stats) {
        stats->depth = seq.depth();
        stats->base_size = seq.itp();
    }
    WvcSolution sol = wvc_bruteforce(seq.base(), level_w.back());
    for (int lvl = seq.depth() - 1; lvl >= 0; --lvl) {
        const TypePartition& p = seq.levels[lvl].partition;
        NodeSet cover;
        std::vector<char> chosen(p.class_count(), 0);
        for (int x : sol.cover) chosen[x] = 1;
        for (int x = 0; x < p.class_count(); ++x) {
            const TypeClass& cls = p.classes[x];
            if (chosen[x]) {
                cover.insert(cover.end(), cls.members.begin(), cls.members.end());
            } else if (cls.kind == ClassKind::Clique) {
                int spare = spare_member(cls, level_w[lvl]);
                for (int u : cls.members)
                    if (u != spare) cover.push_back(u);
            }
        }
        std::sort(cover.begin(), cover.end());
        long long lifted_cost = wvc_cost(cover, level_w[lvl]);
        check_invariant(lifted_cost == sol.cost,
                        "vertex cover lift changed the cost: level " + std::to_string(lvl) +
                            " got " + std::to_string(lifted_cost) + ", expected " +
                            std::to_string(sol.cost));
        sol = WvcSolution{std::move(cover), lifted_cost};
    }
    check_invariant(is_vertex_cover(g, sol.cover), "vertex cover certificate failed validation");
    return sol;
}

NodeSet vertex_cover(const Graph& g, SolveStats* stats) {
    VcWeights weights;
    weights.w.assign(g.node_count(), 0);
    weights.s.assign(g.node_count(), 1);
    WvcSolution sol = wvc2(g, weights, stats);
    check_invariant(sol.cost == static_cast<long long>(sol.cover.size()),
                    "unit vertex cover cost must equal the cover size");
    return sol.cover;
}

}  // namespace itp
