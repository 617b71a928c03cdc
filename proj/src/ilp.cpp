#include "itp/ilp.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace itp {

int IlpModel::add_var(std::string name, long long lo, long long hi) {
    if (lo > hi)
        throw std::invalid_argument("variable '" + name + "' has empty domain [" +
                                    std::to_string(lo) + "," + std::to_string(hi) + "]");
    names_.push_back(std::move(name));
    lo_.push_back(lo);
    hi_.push_back(hi);
    return var_count() - 1;
}

void IlpModel::add_constraint(LinTerms terms, Rel rel, long long rhs) {
    for (const auto& [v, c] : terms)
        if (v < 0 || v >= var_count())
            throw std::invalid_argument("constraint references unknown variable " + std::to_string(v));
    constraints_.push_back(Constraint{std::move(terms), rel, rhs});
}

void IlpModel::set_objective(LinTerms terms) {
    for (const auto& [v, c] : terms)
        if (v < 0 || v >= var_count())
            throw std::invalid_argument("objective references unknown variable " + std::to_string(v));
    objective_ = std::move(terms);
}

std::string IlpModel::to_lp_string() const {
    std::ostringstream out;
    auto print_terms = [&](const LinTerms& ts) {
        bool first = true;
        for (const auto& [v, c] : ts) {
            if (!first) out << (c >= 0 ? " + " : " - ");
            else if (c < 0) out << "-";
            first = false;
            long long a = c < 0 ? -c : c;
            if (a != 1) out << a << " ";
            out << names_[v];
        }
        if (first) out << "0";
    };
    if (objective_) {
        out << "min ";
        print_terms(*objective_);
        out << "\n";
    }
    out << "subject to\n";
    for (const auto& c : constraints_) {
        out << "  ";
        print_terms(c.terms);
        out << (c.rel == Rel::Eq ? " = " : c.rel == Rel::Le ? " <= " : " >= ") << c.rhs << "\n";
    }
    out << "bounds\n";
    for (int v = 0; v < var_count(); ++v)
        out << "  " << lo_[v] << " <= " << names_[v] << " <= " << hi_[v] << "\n";
    return out.str();
}

namespace {

// Depth-first branch and bound with bounds-consistency propagation, driven
// by a worklist of constraints touching recently tightened variables.
// Variables branch in declaration order, values ascending, so every
// tie-break is pinned and reruns are bit-identical.
class Solver {
public:
    Solver(const IlpModel& model, bool minimize, long long budget)
        : model_(model), minimize_(minimize && model.objective().has_value()), budget_(budget) {
        const int n = model.var_count();
        lo_.resize(n);
        hi_.resize(n);
        for (int v = 0; v < n; ++v) {
            lo_[v] = model.lower(v);
            hi_[v] = model.upper(v);
        }
        watchers_.resize(n);
        var_terms_.resize(n);
        const auto& cons = model.constraints();
        cur_min_.assign(cons.size() + 1, 0);
        cur_max_.assign(cons.size() + 1, 0);
        for (int ci = 0; ci < static_cast<int>(cons.size()); ++ci)
            for (const auto& [v, coef] : cons[ci].terms) {
                if (coef == 0) continue;
                watchers_[v].push_back(ci);
                var_terms_[v].push_back({ci, coef});
                cur_min_[ci] += term_min(coef, v);
                cur_max_[ci] += term_max(coef, v);
            }
        if (minimize_)
            for (const auto& [v, coef] : *model.objective()) {
                if (coef == 0) continue;
                watchers_[v].push_back(cut_id());
                var_terms_[v].push_back({cut_id(), coef});
                cur_min_[cut_id()] += term_min(coef, v);
                cur_max_[cut_id()] += term_max(coef, v);
            }
        queued_.assign(cons.size() + 1, 0);
    }

    IlpResult run() {
        IlpResult res;
        for (int ci = 0; ci < static_cast<int>(model_.constraints().size()); ++ci) enqueue(ci);
        if (!drain()) {
            res.status = IlpStatus::Infeasible;
            res.nodes_explored = nodes_;
            return res;
        }
        bool exhausted = dfs();
        res.nodes_explored = nodes_;
        if (!exhausted) {
            res.status = IlpStatus::BudgetExceeded;
            return res;
        }
        if (!best_) {
            res.status = IlpStatus::Infeasible;
            return res;
        }
        res.status = IlpStatus::Solved;
        res.assignment = *best_;
        res.objective = best_obj_;
        return res;
    }

private:
    int cut_id() const { return static_cast<int>(model_.constraints().size()); }

    long long term_min(long long coef, int v) const { return coef >= 0 ? coef * lo_[v] : coef * hi_[v]; }
    long long term_max(long long coef, int v) const { return coef >= 0 ? coef * hi_[v] : coef * lo_[v]; }

    // Bounds consistency on one constraint; tightened variables land in
    // changed_vars_. Returns false on wipeout. Cached sums make the
    // feasibility test O(1); the tightening scan runs only when some
    // variable's span exceeds the slack.
    bool propagate_constraint(int ci, const IlpModel::Constraint& c) {
        const bool need_le = c.rel != Rel::Ge;  // lhs <= rhs active
        const bool need_ge = c.rel != Rel::Le;  // lhs >= rhs active
        if (need_le && cur_min_[ci] > c.rhs) return false;
        if (need_ge && cur_max_[ci] < c.rhs) return false;
        const long long slack_le = c.rhs - cur_min_[ci];
        const long long slack_ge = cur_max_[ci] - c.rhs;
        long long needed = std::numeric_limits<long long>::max();
        if (need_le) needed = slack_le;
        if (need_ge) needed = std::min(needed, slack_ge);
        bool may_tighten = false;
        for (const auto& [v, coef] : c.terms) {
            long long a = coef < 0 ? -coef : coef;
            if (a * (hi_[v] - lo_[v]) > needed) {
                may_tighten = true;
                break;
            }
        }
        if (!may_tighten) return true;
        for (const auto& [v, coef] : c.terms) {
            if (coef == 0 || lo_[v] == hi_[v]) continue;
            const long long rest_min = cur_min_[ci] - term_min(coef, v);
            const long long rest_max = cur_max_[ci] - term_max(coef, v);
            long long lo = lo_[v], hi = hi_[v];
            if (need_le) {
                // coef * x <= rhs - rest_min
                long long bound = c.rhs - rest_min;
                if (coef > 0) {
                    long long ub = bound >= 0 ? bound / coef : -((-bound + coef - 1) / coef);
                    hi = std::min(hi, ub);
                } else {
                    long long a = -coef;
                    long long lb = bound >= 0 ? -(bound / a) : (-bound + a - 1) / a;
                    lo = std::max(lo, lb);
                }
            }
            if (need_ge) {
                // coef * x >= rhs - rest_max
                long long bound = c.rhs - rest_max;
                if (coef > 0) {
                    long long lb = bound >= 0 ? (bound + coef - 1) / coef : -((-bound) / coef);
                    lo = std::max(lo, lb);
                } else {
                    long long a = -coef;
                    long long ub = bound >= 0 ? -((bound + a - 1) / a) : (-bound) / a;
                    hi = std::min(hi, ub);
                }
            }
            if (lo > hi) return false;
            if (lo != lo_[v] || hi != hi_[v]) {
                set_bounds(v, lo, hi);
                changed_vars_.push_back(v);
            }
        }
        return true;
    }

    // The one write path for bounds; keeps every row's cached sums current.
    void set_bounds(int v, long long lo, long long hi) {
        trail_.emplace_back(v, std::make_pair(lo_[v], hi_[v]));
        apply_bounds(v, lo, hi);
    }

    void apply_bounds(int v, long long lo, long long hi) {
        for (const auto& [ci, coef] : var_terms_[v]) {
            if (coef > 0) {
                cur_min_[ci] += coef * (lo - lo_[v]);
                cur_max_[ci] += coef * (hi - hi_[v]);
            } else {
                cur_min_[ci] += coef * (hi - hi_[v]);
                cur_max_[ci] += coef * (lo - lo_[v]);
            }
        }
        lo_[v] = lo;
        hi_[v] = hi;
    }

    void enqueue(int ci) {
        if (!queued_[ci]) {
            queued_[ci] = 1;
            queue_.push_back(ci);
        }
    }

    void enqueue_watchers(int v) {
        for (int ci : watchers_[v]) enqueue(ci);
    }

    // Processes the worklist to the (unique) bounds-consistency fixpoint.
    bool drain() {
        while (!queue_.empty()) {
            int ci = queue_.back();
            queue_.pop_back();
            queued_[ci] = 0;
            changed_vars_.clear();
            bool ok;
            if (ci == cut_id()) {
                if (!minimize_ || !incumbent_) continue;
                IlpModel::Constraint cut{*model_.objective(), Rel::Le, *incumbent_ - 1};
                ok = propagate_constraint(ci, cut);
            } else {
                ok = propagate_constraint(ci, model_.constraints()[ci]);
            }
            if (!ok) {
                for (int q : queue_) queued_[q] = 0;
                queue_.clear();
                return false;
            }
            for (int v : changed_vars_) enqueue_watchers(v);
        }
        return true;
    }

    long long objective_value(const std::vector<long long>& x) const {
        long long s = 0;
        for (const auto& [v, coef] : *model_.objective()) s += coef * x[v];
        return s;
    }

    bool verify(const std::vector<long long>& x) const {
        for (const auto& c : model_.constraints()) {
            long long s = 0;
            for (const auto& [v, coef] : c.terms) s += coef * x[v];
            bool ok = c.rel == Rel::Eq ? s == c.rhs : c.rel == Rel::Le ? s <= c.rhs : s >= c.rhs;
            if (!ok) return false;
        }
        return true;
    }

    // Returns false iff the node budget ran out.
    bool dfs() {
        int v = -1;
        for (int i = 0; i < model_.var_count(); ++i)
            if (lo_[i] < hi_[i]) {
                v = i;
                break;
            }
        if (v < 0) {
            std::vector<long long> x(lo_.begin(), lo_.end());
            check_invariant(verify(x), "ilp solver produced an assignment violating a constraint");
            if (minimize_) {
                long long obj = objective_value(x);
                if (!incumbent_ || obj < *incumbent_) {
                    incumbent_ = obj;
                    best_ = std::move(x);
                    best_obj_ = obj;
                }
                return true;
            }
            best_ = std::move(x);
            best_obj_ = 0;
            found_ = true;
            return true;
        }
        const long long from = lo_[v], to = hi_[v];
        for (long long val = from; val <= to; ++val) {
            if (++nodes_ > budget_) return false;
            size_t mark = trail_.size();
            set_bounds(v, val, val);
            enqueue_watchers(v);
            // The incumbent may have tightened since this subtree's bounds
            // were last checked, so the cut always re-enters the worklist.
            if (minimize_ && incumbent_) enqueue(cut_id());
            if (drain()) {
                if (!dfs()) return false;
                if (found_ && !minimize_) return true;  // first feasible wins
            }
            unwind(mark);
        }
        return true;
    }

    void unwind(size_t mark) {
        while (trail_.size() > mark) {
            auto [v, bounds] = trail_.back();
            trail_.pop_back();
            apply_bounds(v, bounds.first, bounds.second);
        }
    }

    const IlpModel& model_;
    bool minimize_;
    long long budget_;
    std::vector<long long> lo_, hi_;
    std::vector<std::vector<int>> watchers_;
    std::vector<std::vector<std::pair<int, long long>>> var_terms_;
    std::vector<long long> cur_min_, cur_max_;
    std::vector<char> queued_;
    std::vector<int> queue_;
    std::vector<int> changed_vars_;
    std::vector<std::pair<int, std::pair<long long, long long>>> trail_;
    std::optional<long long> incumbent_;
    std::optional<std::vector<long long>> best_;
    long long best_obj_ = 0;
    bool found_ = false;
    long long nodes_ = 0;
};

}  // namespace

IlpResult solve_feasible(const IlpModel& model, long long node_budget) {
    return Solver(model, /*minimize=*/false, node_budget).run();
}

IlpResult solve_min(const IlpModel& model, long long node_budget) {
    if (!model.objective()) throw std::invalid_argument("solve_min requires an objective");
    return Solver(model, /*minimize=*/true, node_budget).run();
}

}  // namespace itp
