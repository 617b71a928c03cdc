#include "itp/eqc.hpp"

#include <algorithm>

#include "itp/indep.hpp"

namespace itp {

std::vector<NodeSet> enumerate_independent_sets(const Graph& type_graph, int cap) {
    if (type_graph.node_count() > cap)
        throw CapExceeded("independent-set family too large: nd=" +
                          std::to_string(type_graph.node_count()) + " exceeds cap " +
                          std::to_string(cap));
    return all_independent_sets(type_graph);
}

EqcSystem build_system(const Graph& g, int k, int nd_cap) {
    const int n = g.node_count();
    if (k < 1 || k > n)
        throw std::invalid_argument("equitable coloring requires 1 <= k <= n, got k=" +
                                    std::to_string(k));
    EqcSystem sys;
    sys.classes = type_partition(g);
    sys.type_graph = type_graph(g, sys.classes).first;
    sys.independent_sets = enumerate_independent_sets(sys.type_graph, nd_cap);

    const long long size_small = n / k;
    const long long size_large = size_small + 1;
    const long long count_large = n % k;
    const long long count_small = k - count_large;
    if (count_large > 0)
        sys.tiers.push_back(EqcTier{size_large, count_large, {}, {}});
    sys.tiers.push_back(EqcTier{size_small, count_small, {}, {}});

    const auto& sets = sys.independent_sets;
    for (size_t t = 0; t < sys.tiers.size(); ++t) {
        EqcTier& tier = sys.tiers[t];
        std::string suffix = sys.tiers.size() == 1 ? "" : (t == 0 ? "L" : "S");
        tier.z_set.resize(sets.size());
        tier.z_cls.resize(sets.size());
        for (size_t i = 0; i < sets.size(); ++i) {
            // A set can host at most as many colors of this size as its
            // classes have nodes to spend on them.
            long long pool = 0;
            for (int cls : sets[i])
                pool += static_cast<long long>(sys.classes.classes[cls].members.size());
            long long hi_z = std::min(tier.color_count, pool / tier.color_size);
            tier.z_set[i] =
                sys.model.add_var("z" + suffix + "_" + std::to_string(i), 0, hi_z);
            tier.z_cls[i].reserve(sets[i].size());
            for (int cls : sets[i]) {
                long long members = static_cast<long long>(sys.classes.classes[cls].members.size());
                long long hi = sys.classes.classes[cls].kind == ClassKind::Clique
                                   ? std::min(members, tier.color_count)
                                   : members;
                tier.z_cls[i].push_back(sys.model.add_var(
                    "z" + suffix + "_" + std::to_string(i) + "_" + std::to_string(cls), 0, hi));
            }
        }
    }

    for (size_t t = 0; t < sys.tiers.size(); ++t) {
        const EqcTier& tier = sys.tiers[t];
        // Condition 1 per tier: the tier's colors are all spent.
        LinTerms total;
        for (size_t i = 0; i < sets.size(); ++i) total.push_back({tier.z_set[i], 1});
        sys.model.add_constraint(std::move(total), Rel::Eq, tier.color_count);
        for (size_t i = 0; i < sets.size(); ++i) {
            // Condition 3: each of the z_I colors is used exactly color_size times.
            LinTerms fill;
            for (size_t j = 0; j < sets[i].size(); ++j) fill.push_back({tier.z_cls[i][j], 1});
            fill.push_back({tier.z_set[i], -tier.color_size});
            sys.model.add_constraint(std::move(fill), Rel::Eq, 0);
            // Condition 4: a clique class never repeats a color of the set.
            for (size_t j = 0; j < sets[i].size(); ++j)
                if (sys.classes.classes[sets[i][j]].kind == ClassKind::Clique)
                    sys.model.add_constraint({{tier.z_set[i], 1}, {tier.z_cls[i][j], -1}}, Rel::Ge,
                                             0);
        }
    }
    // Condition 2, across tiers: every type class is colored exactly once per node.
    for (int cls = 0; cls < sys.classes.class_count(); ++cls) {
        LinTerms terms;
        for (const EqcTier& tier : sys.tiers)
            for (size_t i = 0; i < sets.size(); ++i)
                for (size_t j = 0; j < sets[i].size(); ++j)
                    if (sets[i][j] == cls) terms.push_back({tier.z_cls[i][j], 1});
        sys.model.add_constraint(std::move(terms), Rel::Eq,
                                 static_cast<long long>(sys.classes.classes[cls].members.size()));
    }
    return sys;
}

namespace {

ColoringAssignment reconstruct(const Graph& g, int k, const EqcSystem& sys,
                               const std::vector<long long>& x) {
    const int n = g.node_count();
    ColoringAssignment out;
    out.colors.assign(n, {});
    std::vector<char> colored(n, 0);
    // Lowest-id uncolored members first, per class.
    auto draw = [&](int cls, int count) {
        NodeSet picked;
        for (int v : sys.classes.classes[cls].members) {
            if (static_cast<int>(picked.size()) == count) break;
            if (!colored[v]) {
                picked.push_back(v);
                colored[v] = 1;
            }
        }
        check_invariant(static_cast<int>(picked.size()) == count,
                        "reconstruction ran out of uncolored nodes in a type class");
        return picked;
    };

    int next_color = 0;
    std::vector<long long> color_use;
    for (const EqcTier& tier : sys.tiers) {
        for (size_t i = 0; i < sys.independent_sets.size(); ++i) {
            const long long z = x[tier.z_set[i]];
            if (z == 0) continue;
            const int first = next_color;
            next_color += static_cast<int>(z);
            color_use.resize(next_color, 0);
            // Walk the cycled color list c_0..c_{z-1} repeated color_size times,
            // handing each class its z_{I,i} consecutive entries.
            long long pos = 0;
            for (size_t j = 0; j < sys.independent_sets[i].size(); ++j) {
                const int cls = sys.independent_sets[i][j];
                const long long take = x[tier.z_cls[i][j]];
                if (take == 0) continue;
                if (sys.classes.classes[cls].kind == ClassKind::Clique)
                    check_invariant(take <= z, "clique class would repeat a cycled color");
                NodeSet nodes = draw(cls, static_cast<int>(take));
                for (int v : nodes) {
                    int color = first + static_cast<int>(pos % z);
                    out.colors[v] = {color};
                    ++color_use[color];
                    ++pos;
                }
            }
            check_invariant(pos == z * tier.color_size,
                            "cycled color list length mismatch in reconstruction");
            for (int c = first; c < next_color; ++c)
                check_invariant(color_use[c] == tier.color_size,
                                "color " + std::to_string(c) + " used " +
                                    std::to_string(color_use[c]) + " times, expected tier size " +
                                    std::to_string(tier.color_size));
        }
    }
    check_invariant(next_color == k, "reconstruction used a wrong number of colors");
    for (int v = 0; v < n; ++v)
        check_invariant(colored[v], "node " + std::to_string(v) + " left uncolored");
    // Clique classes must hold pairwise distinct colors.
    for (const TypeClass& cls : sys.classes.classes) {
        if (cls.kind != ClassKind::Clique) continue;
        std::vector<int> seen;
        for (int v : cls.members) seen.push_back(out.colors[v][0]);
        std::sort(seen.begin(), seen.end());
        check_invariant(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
                        "clique class received a repeated color");
    }
    check_invariant(is_equitable_coloring(g, out, k),
                    "equitable coloring certificate failed validation");
    return out;
}

}  // namespace

EqcOutcome solve_eqc(const Graph& g, int k, int nd_cap, long long node_budget) {
    EqcSystem sys = build_system(g, k, nd_cap);
    EqcOutcome out;
    out.nd = sys.classes.class_count();
    out.independent_set_count = static_cast<int>(sys.independent_sets.size());
    out.ilp_vars = sys.model.var_count();
    IlpResult res = solve_feasible(sys.model, node_budget);
    out.ilp_nodes_explored = res.nodes_explored;
    if (res.status == IlpStatus::BudgetExceeded)
        throw CapExceeded("equitable coloring program exceeded the search budget (" +
                          std::to_string(res.nodes_explored) + " nodes)");
    if (res.status == IlpStatus::Infeasible) {
        out.feasible = false;
        return out;
    }
    out.feasible = true;
    out.certificate = reconstruct(g, k, sys, res.assignment);
    return out;
}

std::map<int, bool> eqc_feasible_range(const Graph& g, int kmin, int kmax, int nd_cap,
                                       long long node_budget) {
    if (kmin < 1 || kmin > kmax || kmax > g.node_count())
        throw std::invalid_argument("range requires 1 <= kmin <= kmax <= n");
    std::map<int, bool> out;
    for (int k = kmin; k <= kmax; ++k) out[k] = solve_eqc(g, k, nd_cap, node_budget).feasible;
    return out;
}

}  // namespace itp
