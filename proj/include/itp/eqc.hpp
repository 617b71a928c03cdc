#pragma once

#include <map>
#include <optional>
#include <vector>

#include "itp/graph.hpp"
#include "itp/ilp.hpp"
#include "itp/typepart.hpp"

namespace itp {

// Equitable k-coloring decided through the type graph: a bounded integer
// program chooses, for every independent set I of the type graph, how many
// color classes live on I (z_I) and how many nodes each type class
// contributes to them (z_{I,i}); a feasible assignment reconstructs an
// explicit coloring by cycling each set's fresh colors.

inline constexpr int kDefaultNdCap = 20;

// All nonempty independent sets of the type graph, by size then lexicographic.
// Refuses when the type graph exceeds the cap, naming nd as the blocker.
std::vector<NodeSet> enumerate_independent_sets(const Graph& type_graph, int cap = kDefaultNdCap);

// One block of equally-sized color classes. With k | n there is a single
// tier of n/k-sized colors and the program is exactly conditions:
//   1. sum_I z_I = k                          (color count)
//   2. sum_{I : i in I} z_{I,i} = |V_i|       (every class fully colored)
//   3. sum_{i in I} z_{I,i} = r * z_I         (each color used r times)
//   4. z_I >= z_{I,i} for clique classes      (no color reuse in a clique)
//   5. all variables nonnegative (bounds)
// Otherwise two tiers split conditions 1 and 3: (n mod k) colors of size
// ceil(n/k) and k - (n mod k) of size floor(n/k). Any equitable coloring
// induces such tier counts, so the split is lossless.
struct EqcTier {
    long long color_size = 0;             // nodes per color in this tier
    long long color_count = 0;            // number of colors in this tier
    std::vector<int> z_set;               // per independent set: variable id of z_I
    std::vector<std::vector<int>> z_cls;  // per set, aligned with its members: z_{I,i}
};

struct EqcSystem {
    Graph type_graph;
    TypePartition classes;
    std::vector<NodeSet> independent_sets;
    std::vector<EqcTier> tiers;  // large tier first; single entry when k | n
    IlpModel model;
};

EqcSystem build_system(const Graph& g, int k, int nd_cap = kDefaultNdCap);

struct EqcOutcome {
    bool feasible = false;
    std::optional<ColoringAssignment> certificate;
    int nd = 0;
    int independent_set_count = 0;
    int ilp_vars = 0;
    long long ilp_nodes_explored = 0;
};

// Decides equitable k-colorability and reconstructs a validated certificate
// on yes. Requires 1 <= k <= n. The nd cap refusal (CapExceeded) is distinct
// from an infeasible answer.
EqcOutcome solve_eqc(const Graph& g, int k, int nd_cap = kDefaultNdCap,
                     long long node_budget = kDefaultIlpBudget);

// Per-k decision over [kmin, kmax]; feasibility is not monotone in k, so a
// scan is the honest minimization interface.
std::map<int, bool> eqc_feasible_range(const Graph& g, int kmin, int kmax,
                                       int nd_cap = kDefaultNdCap,
                                       long long node_budget = kDefaultIlpBudget);

}  // namespace itp
