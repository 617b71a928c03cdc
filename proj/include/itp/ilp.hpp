#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itp/errors.hpp"

namespace itp {

// Bounded integer program: finitely bounded integer variables, sparse linear
// constraints, optional minimization objective. Solved exactly by depth-first
// branch and bound with interval propagation; model sizes here are governed
// by itp/nd, so no external LP machinery is involved.

enum class Rel { Eq, Le, Ge };

using LinTerms = std::vector<std::pair<int, long long>>;  // (variable, coefficient)

class IlpModel {
public:
    int add_var(std::string name, long long lo, long long hi);
    void add_constraint(LinTerms terms, Rel rel, long long rhs);
    void set_objective(LinTerms terms);

    int var_count() const { return static_cast<int>(names_.size()); }
    const std::string& var_name(int v) const { return names_[v]; }
    long long lower(int v) const { return lo_[v]; }
    long long upper(int v) const { return hi_[v]; }

    struct Constraint {
        LinTerms terms;
        Rel rel;
        long long rhs;
    };
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const std::optional<LinTerms>& objective() const { return objective_; }

    // Plain-text LP-style listing for debugging.
    std::string to_lp_string() const;

private:
    std::vector<std::string> names_;
    std::vector<long long> lo_, hi_;
    std::vector<Constraint> constraints_;
    std::optional<LinTerms> objective_;
};

enum class IlpStatus { Solved, Infeasible, BudgetExceeded };

struct IlpResult {
    IlpStatus status = IlpStatus::Infeasible;
    std::vector<long long> assignment;  // valid when status == Solved
    long long objective = 0;            // valid when Solved and a objective was set
    long long nodes_explored = 0;

    bool solved() const { return status == IlpStatus::Solved; }
};

inline constexpr long long kDefaultIlpBudget = 100'000'000;

// First satisfying assignment under lowest-index-first, lowest-value-first
// branching; deterministic for a fixed model.
IlpResult solve_feasible(const IlpModel& model, long long node_budget = kDefaultIlpBudget);

// Provably minimal objective; among optima, the branching-order-first one.
IlpResult solve_min(const IlpModel& model, long long node_budget = kDefaultIlpBudget);

}  // namespace itp
