#include "sflow/lp.hpp"


#include "sflow/errors.hpp"

namespace sflow {

namespace {

// Bounded-variable simplex on the equality system [A | I] z = b.  Every row
// gets a slack (ranged by the relation) and an artificial column, and phase
// one drives the artificials to zero.  Nonbasic variables always sit at a
// finite bound, or at zero when free.
class Simplex {
public:
    explicit Simplex(const LinearProgram& lp) : lp_(lp) {
        n_struct_ = static_cast<int>(lp.objective.size());
        m_ = static_cast<int>(lp.constraints.size());
        if (static_cast<int>(lp.bounds.size()) != n_struct_) {
            throw ValidationError("bound count does not match variable count");
        }
        for (const auto& b : lp.bounds) {
            if (b.lower && b.upper && *b.lower > *b.upper) {
                throw ValidationError("variable lower bound exceeds upper bound");
            }
        }
        slack_start_ = n_struct_;
        art_start_ = n_struct_ + m_;
        n_total_ = n_struct_ + 2 * m_;

        lower_.resize(n_total_);
        upper_.resize(n_total_);
        for (int j = 0; j < n_struct_; ++j) {
            lower_[j] = lp.bounds[j].lower;
            upper_[j] = lp.bounds[j].upper;
        }
        for (int i = 0; i < m_; ++i) {
            switch (lp.constraints[i].relation) {
                case Relation::LessEqual:
                    lower_[slack_start_ + i] = Rational(0);
                    break;
                case Relation::GreaterEqual:
                    upper_[slack_start_ + i] = Rational(0);
                    break;
                case Relation::Equal:
                    lower_[slack_start_ + i] = Rational(0);
                    upper_[slack_start_ + i] = Rational(0);
                    break;
            }
        }
        for (int i = 0; i < m_; ++i) lower_[art_start_ + i] = Rational(0);

        value_.assign(n_total_, Rational(0));
        for (int j = 0; j < n_total_; ++j) {
            if (lower_[j]) {
                value_[j] = *lower_[j];
            } else if (upper_[j]) {
                value_[j] = *upper_[j];
            }
        }

        // Residuals at the initial point decide the artificial column signs.
        std::vector<Rational> residual(m_);
        for (int i = 0; i < m_; ++i) {
            const auto& row = lp.constraints[i].coefficients;
            if (static_cast<int>(row.size()) != n_struct_) {
                throw ValidationError("constraint row length mismatch");
            }
            Rational r = lp.constraints[i].rhs;
            for (int j = 0; j < n_struct_; ++j) r -= row[j] * value_[j];
            r -= value_[slack_start_ + i];
            residual[i] = r;
        }

        tab_.assign(m_, std::vector<Rational>(n_total_, Rational(0)));
        basis_.resize(m_);
        is_basic_.assign(n_total_, false);
        for (int i = 0; i < m_; ++i) {
            const int s = residual[i] < 0 ? -1 : 1;
            for (int j = 0; j < n_struct_; ++j) {
                tab_[i][j] = Rational(s) * lp.constraints[i].coefficients[j];
            }
            tab_[i][slack_start_ + i] = Rational(s);
            tab_[i][art_start_ + i] = Rational(1);
            basis_[i] = art_start_ + i;
            is_basic_[art_start_ + i] = true;
            value_[art_start_ + i] = s < 0 ? -residual[i] : residual[i];
        }
    }

    // Runs phase one; true iff the constraints are feasible.
    bool phase_one() {
        cost_.assign(n_total_, Rational(0));
        for (int i = 0; i < m_; ++i) cost_[art_start_ + i] = Rational(-1);
        compute_reduced_costs();
        if (!iterate()) {
            throw Error("phase one cannot be unbounded");  // objective is <= 0
        }
        for (int i = 0; i < m_; ++i) {
            if (value_[art_start_ + i] != 0) return false;
        }
        retire_artificials();
        return true;
    }

    LpSolution phase_two() {
        cost_.assign(n_total_, Rational(0));
        const Rational flip = lp_.sense == Sense::Maximize ? Rational(1) : Rational(-1);
        for (int j = 0; j < n_struct_; ++j) cost_[j] = flip * lp_.objective[j];
        compute_reduced_costs();

        LpSolution out;
        if (!iterate()) {
            out.status = LpStatus::Unbounded;
            out.ray = ray_;
            return out;
        }
        out.status = LpStatus::Optimal;
        out.primal.assign(value_.begin(), value_.begin() + n_struct_);
        out.objective = Rational(0);
        for (int j = 0; j < n_struct_; ++j) out.objective += lp_.objective[j] * out.primal[j];
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < art_start_) out.basis.push_back(basis_[i]);
        }
        return out;
    }

    std::vector<Rational> structural_values() const {
        return {value_.begin(), value_.begin() + n_struct_};
    }

private:
    void compute_reduced_costs() {
        reduced_ = cost_;
        for (int i = 0; i < m_; ++i) {
            const Rational& cb = cost_[basis_[i]];
            if (cb == 0) continue;
            for (int j = 0; j < n_total_; ++j) reduced_[j] -= cb * tab_[i][j];
        }
    }

    bool at_lower(int j) const { return lower_[j] && value_[j] == *lower_[j]; }
    bool at_upper(int j) const { return upper_[j] && value_[j] == *upper_[j]; }
    bool is_fixed(int j) const { return lower_[j] && upper_[j] && *lower_[j] == *upper_[j]; }

    // Returns false when the objective is unbounded (ray_ holds a direction).
    bool iterate() {
        while (true) {
            int enter = -1;
            int dir = 0;
            for (int j = 0; j < n_total_; ++j) {
                if (is_basic_[j] || is_fixed(j)) continue;
                if (at_lower(j)) {
                    if (reduced_[j] > 0) {
                        enter = j;
                        dir = 1;
                        break;
                    }
                } else if (at_upper(j)) {
                    if (reduced_[j] < 0) {
                        enter = j;
                        dir = -1;
                        break;
                    }
                } else if (reduced_[j] != 0) {  // free, sitting at zero
                    enter = j;
                    dir = sign(reduced_[j]);
                    break;
                }
            }
            if (enter < 0) return true;

            // Step length: own opposite bound (a flip) versus the first basic
            // variable to hit one of its bounds.
            std::optional<Rational> flip_t;
            if (dir > 0 && upper_[enter]) flip_t = *upper_[enter] - value_[enter];
            if (dir < 0 && lower_[enter]) flip_t = value_[enter] - *lower_[enter];

            std::optional<Rational> row_t;
            int leave_row = -1;
            for (int i = 0; i < m_; ++i) {
                const Rational& coef = tab_[i][enter];
                if (coef == 0) continue;
                const Rational delta = Rational(dir) * coef;  // basic drops by t*delta
                const int k = basis_[i];
                std::optional<Rational> limit;
                if (delta > 0 && lower_[k]) {
                    limit = (value_[k] - *lower_[k]) / delta;
                } else if (delta < 0 && upper_[k]) {
                    limit = (value_[k] - *upper_[k]) / delta;
                }
                if (!limit) continue;
                if (!row_t || *limit < *row_t ||
                    (*limit == *row_t && basis_[i] < basis_[leave_row])) {
                    row_t = limit;
                    leave_row = i;
                }
            }

            if (!flip_t && !row_t) {
                ray_.assign(n_struct_, Rational(0));
                if (enter < n_struct_) ray_[enter] = Rational(dir);
                for (int i = 0; i < m_; ++i) {
                    if (basis_[i] < n_struct_) {
                        ray_[basis_[i]] = Rational(-dir) * tab_[i][enter];
                    }
                }
                return false;
            }

            const bool pivot = row_t && (!flip_t || *row_t <= *flip_t);
            const Rational step = pivot ? *row_t : *flip_t;
            value_[enter] += Rational(dir) * step;
            if (step != 0) {
                for (int i = 0; i < m_; ++i) {
                    if (tab_[i][enter] != 0) {
                        value_[basis_[i]] -= Rational(dir) * step * tab_[i][enter];
                    }
                }
            }
            if (pivot) do_pivot(leave_row, enter);
        }
    }

    void do_pivot(int row, int enter) {
        const Rational inv = Rational(1) / tab_[row][enter];
        if (inv != 1) {
            for (auto& v : tab_[row]) v *= inv;
        }
        for (int i = 0; i < m_; ++i) {
            if (i == row || tab_[i][enter] == 0) continue;
            const Rational factor = tab_[i][enter];
            for (int j = 0; j < n_total_; ++j) tab_[i][j] -= factor * tab_[row][j];
        }
        if (reduced_[enter] != 0) {
            const Rational factor = reduced_[enter];
            for (int j = 0; j < n_total_; ++j) reduced_[j] -= factor * tab_[row][j];
        }
        is_basic_[basis_[row]] = false;
        is_basic_[enter] = true;
        basis_[row] = enter;
    }

    // After a feasible phase one: degenerate-pivot leftover artificials out of
    // the basis where possible, then pin every artificial at zero.
    void retire_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < art_start_) continue;
            int target = -1;
            for (int j = 0; j < art_start_; ++j) {
                if (!is_basic_[j] && tab_[i][j] != 0) {
                    target = j;
                    break;
                }
            }
            if (target >= 0) do_pivot(i, target);
            // else: the row is redundant; its artificial stays basic at zero.
        }
        for (int i = 0; i < m_; ++i) {
            lower_[art_start_ + i] = Rational(0);
            upper_[art_start_ + i] = Rational(0);
        }
    }

    const LinearProgram& lp_;
    int n_struct_ = 0, m_ = 0, slack_start_ = 0, art_start_ = 0, n_total_ = 0;
    std::vector<std::vector<Rational>> tab_;
    std::vector<std::optional<Rational>> lower_, upper_;
    std::vector<Rational> value_;
    std::vector<Rational> cost_;
    std::vector<Rational> reduced_;
    std::vector<int> basis_;
    std::vector<bool> is_basic_;
    std::vector<Rational> ray_;
};

}  // namespace

LpSolution solve(const LinearProgram& lp) {
    Simplex simplex(lp);
    if (!simplex.phase_one()) {
        LpSolution out;
        out.status = LpStatus::Infeasible;
        return out;
    }
    return simplex.phase_two();
}

std::optional<std::vector<Rational>> feasible_point(
    const std::vector<LinearConstraint>& constraints,
    const std::vector<VariableBounds>& bounds) {
    LinearProgram lp;
    lp.sense = Sense::Maximize;
    lp.objective.assign(bounds.size(), Rational(0));
    lp.constraints = constraints;
    lp.bounds = bounds;
    Simplex simplex(lp);
    if (!simplex.phase_one()) return std::nullopt;
    return simplex.structural_values();
}

}  // namespace sflow
