#include "tinsep/lp.hpp"

#include "tinsep/errors.hpp"

#include <optional>

namespace tinsep {

LinearProgram::LinearProgram(std::vector<Rational> objective_, VarSign sign)
    : objective(std::move(objective_)), signs(objective.size(), sign)
{
}

void LinearProgram::add(std::vector<Rational> coefficients, Relation relation, Rational rhs)
{
    if (static_cast<int>(coefficients.size()) != variables()) {
        throw InputError("constraint has " + std::to_string(coefficients.size()) + " coefficients, expected "
                         + std::to_string(variables()));
    }
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

std::string_view to_string(LpStatus status)
{
    switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::infeasible: return "infeasible";
    }
    return "?";
}

namespace {

// One row of the standard form  A' x' <= b',  x' >= 0.
struct StdRow
{
    std::size_t source;
    int sign;  // +1 or -1 relative to the source constraint
};

// Chvatal-style dictionary. Variable ids: 0 is the phase-one auxiliary,
// 1..n the structural columns, n+1..n+m the slacks. Each basic variable
// satisfies  x_B[i] = beta[i] + sum_j tab[i][j] x_N[j].
class Dictionary
{
public:
    Dictionary(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c)
        : n_(static_cast<int>(c.size())), m_(static_cast<int>(b.size()))
    {
        nonbasic_.resize(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) nonbasic_[static_cast<std::size_t>(j)] = j + 1;
        basic_.resize(static_cast<std::size_t>(m_));
        tab_.resize(static_cast<std::size_t>(m_));
        beta_ = std::move(b);
        for (int i = 0; i < m_; ++i) {
            basic_[static_cast<std::size_t>(i)] = n_ + 1 + i;
            auto& row = tab_[static_cast<std::size_t>(i)];
            row.resize(static_cast<std::size_t>(n_));
            for (int j = 0; j < n_; ++j) row[static_cast<std::size_t>(j)] = -a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        cost_ = std::move(c);
        cost_const_ = 0;
    }

    int pivots() const { return pivots_; }

    bool feasible() const
    {
        for (const auto& b : beta_) {
            if (sgn(b) < 0) return false;
        }
        return true;
    }

    // Phase one: maximize -x0 over A'x - x0 <= b'. Returns false when the
    // optimum is negative, leaving Farkas multipliers in `farkas`.
    bool phase_one(std::vector<Rational>& farkas)
    {
        std::vector<Rational> original_cost = std::move(cost_);
        Rational original_const = cost_const_;

        nonbasic_.push_back(0);
        for (auto& row : tab_) row.emplace_back(1);
        cost_.assign(static_cast<std::size_t>(n_) + 1, Rational(0));
        cost_.back() = -1;
        cost_const_ = 0;

        // Enter x0; leave on the most negative beta (smallest id on ties).
        std::size_t leave = 0;
        for (std::size_t i = 1; i < beta_.size(); ++i) {
            if (beta_[i] < beta_[leave] || (beta_[i] == beta_[leave] && basic_[i] < basic_[leave])) leave = i;
        }
        pivot(leave, nonbasic_.size() - 1);
        run_bland();

        if (sgn(cost_const_) < 0) {
            farkas = slack_multipliers();
            return false;
        }

        // Drive x0 out of the basis if it stayed there at level zero.
        for (std::size_t i = 0; i < basic_.size(); ++i) {
            if (basic_[i] != 0) continue;
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
                if (sgn(tab_[i][j]) != 0) {
                    col = j;
                    break;
                }
            }
            if (col) {
                pivot(i, *col);
            } else {
                // x0 is identically zero on this row; the row is redundant.
                tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(i));
                beta_.erase(beta_.begin() + static_cast<std::ptrdiff_t>(i));
                basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(i));
            }
            break;
        }
        for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
            if (nonbasic_[j] != 0) continue;
            for (auto& row : tab_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(j));
            nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(j));
            break;
        }

        // Re-express the real objective in terms of the current nonbasics.
        cost_.assign(nonbasic_.size(), Rational(0));
        cost_const_ = original_const;
        auto coef_of = [&](int var) -> const Rational* {
            if (var >= 1 && var <= n_) return &original_cost[static_cast<std::size_t>(var - 1)];
            return nullptr;
        };
        for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
            if (const Rational* c = coef_of(nonbasic_[j])) cost_[j] += *c;
        }
        for (std::size_t i = 0; i < basic_.size(); ++i) {
            const Rational* c = coef_of(basic_[i]);
            if (!c || sgn(*c) == 0) continue;
            cost_const_ += *c * beta_[i];
            for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
                if (sgn(tab_[i][j]) != 0) cost_[j] += *c * tab_[i][j];
            }
        }
        return true;
    }

    // Returns false if unbounded.
    bool run_bland()
    {
        while (true) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
                if (sgn(cost_[j]) > 0 && (!enter || nonbasic_[j] < nonbasic_[*enter])) enter = j;
            }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best_ratio;
            for (std::size_t i = 0; i < basic_.size(); ++i) {
                const Rational& t = tab_[i][*enter];
                if (sgn(t) >= 0) continue;
                Rational ratio = beta_[i] / -t;
                if (!leave || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[*leave])) {
                    leave = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }

    const Rational& objective() const { return cost_const_; }

    std::vector<Rational> structural_values() const
    {
        std::vector<Rational> x(static_cast<std::size_t>(n_), Rational(0));
        for (std::size_t i = 0; i < basic_.size(); ++i) {
            int v = basic_[i];
            if (v >= 1 && v <= n_) x[static_cast<std::size_t>(v - 1)] = beta_[i];
        }
        return x;
    }

    // y_i = -(reduced cost of slack i) when the slack is nonbasic, else 0.
    std::vector<Rational> slack_multipliers() const
    {
        std::vector<Rational> y(static_cast<std::size_t>(m_), Rational(0));
        for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
            int v = nonbasic_[j];
            if (v > n_) y[static_cast<std::size_t>(v - n_ - 1)] = -cost_[j];
        }
        return y;
    }

private:
    void pivot(std::size_t r, std::size_t e)
    {
        ++pivots_;
        auto& row = tab_[r];
        Rational inv = 1 / row[e];
        // Solve row r for the entering variable.
        Rational new_beta = -beta_[r] * inv;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j == e) continue;
            if (sgn(row[j]) != 0) row[j] = -row[j] * inv;
        }
        row[e] = inv;
        beta_[r] = new_beta;

        for (std::size_t i = 0; i < tab_.size(); ++i) {
            if (i == r) continue;
            auto& other = tab_[i];
            if (sgn(other[e]) == 0) continue;
            Rational f = other[e];
            beta_[i] += f * beta_[r];
            for (std::size_t j = 0; j < other.size(); ++j) {
                if (j == e) continue;
                if (sgn(row[j]) != 0) other[j] += f * row[j];
            }
            other[e] = f * inv;
        }
        if (sgn(cost_[e]) != 0) {
            Rational f = cost_[e];
            cost_const_ += f * beta_[r];
            for (std::size_t j = 0; j < cost_.size(); ++j) {
                if (j == e) continue;
                if (sgn(row[j]) != 0) cost_[j] += f * row[j];
            }
            cost_[e] = f * inv;
        }
        std::swap(basic_[r], nonbasic_[e]);
    }

    int n_;
    int m_;
    std::vector<int> basic_;
    std::vector<int> nonbasic_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> beta_;
    std::vector<Rational> cost_;
    Rational cost_const_;
    int pivots_ = 0;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

// Column sums  sum_c y_c a_c  over the original constraints.
std::vector<Rational> weighted_columns(const LinearProgram& lp, const std::vector<Rational>& y)
{
    std::vector<Rational> col(static_cast<std::size_t>(lp.variables()), Rational(0));
    for (std::size_t c = 0; c < lp.constraints.size(); ++c) {
        if (sgn(y[c]) == 0) continue;
        const auto& coeffs = lp.constraints[c].coefficients;
        for (std::size_t j = 0; j < col.size(); ++j) {
            if (sgn(coeffs[j]) != 0) col[j] += y[c] * coeffs[j];
        }
    }
    return col;
}

bool dual_signs_ok(const LinearProgram& lp, const std::vector<Rational>& y)
{
    if (y.size() != lp.constraints.size()) return false;
    for (std::size_t c = 0; c < y.size(); ++c) {
        Relation rel = lp.constraints[c].relation;
        if (rel == Relation::less_equal && sgn(y[c]) < 0) return false;
        if (rel == Relation::greater_equal && sgn(y[c]) > 0) return false;
    }
    return true;
}

void validate(const LinearProgram& lp)
{
    if (lp.variables() < 1) throw InputError("a linear program needs at least one variable");
    if (lp.signs.size() != lp.objective.size()) throw InputError("variable sign list does not match the objective");
    for (const auto& c : lp.constraints) {
        if (c.coefficients.size() != lp.objective.size()) throw InputError("constraint width does not match the objective");
    }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp)
{
    validate(lp);

    // Column map: each original variable becomes one (nonnegative) or two
    // (free: x = x+ - x-) standard columns.
    std::vector<std::size_t> first_col(lp.objective.size());
    std::size_t cols = 0;
    for (std::size_t j = 0; j < lp.objective.size(); ++j) {
        first_col[j] = cols;
        cols += lp.signs[j] == VarSign::free ? 2 : 1;
    }
    auto expand = [&](const std::vector<Rational>& coeffs, int sign) {
        std::vector<Rational> row(cols, Rational(0));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            Rational v = sign > 0 ? Rational(coeffs[j]) : Rational(-coeffs[j]);
            row[first_col[j]] = v;
            if (lp.signs[j] == VarSign::free) row[first_col[j] + 1] = -v;
        }
        return row;
    };

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<StdRow> origin;
    for (std::size_t c = 0; c < lp.constraints.size(); ++c) {
        const auto& con = lp.constraints[c];
        if (con.relation != Relation::greater_equal) {
            a.push_back(expand(con.coefficients, +1));
            b.push_back(con.rhs);
            origin.push_back({c, +1});
        }
        if (con.relation != Relation::less_equal) {
            a.push_back(expand(con.coefficients, -1));
            b.emplace_back(-con.rhs);
            origin.push_back({c, -1});
        }
    }
    std::vector<Rational> cost = expand(lp.objective, +1);

    auto to_original = [&](const std::vector<Rational>& y_std) {
        std::vector<Rational> y(lp.constraints.size(), Rational(0));
        for (std::size_t i = 0; i < origin.size(); ++i) {
            if (origin[i].sign > 0) y[origin[i].source] += y_std[i];
            else y[origin[i].source] -= y_std[i];
        }
        return y;
    };

    Dictionary dict(std::move(a), std::move(b), std::move(cost));
    LpSolution sol;

    if (!dict.feasible()) {
        std::vector<Rational> farkas;
        if (!dict.phase_one(farkas)) {
            sol.status = LpStatus::infeasible;
            sol.dual = to_original(farkas);
            sol.pivots = dict.pivots();
            return sol;
        }
    }
    if (!dict.run_bland()) {
        sol.status = LpStatus::unbounded;
        sol.pivots = dict.pivots();
        return sol;
    }

    std::vector<Rational> xs = dict.structural_values();
    sol.point.resize(lp.objective.size());
    for (std::size_t j = 0; j < lp.objective.size(); ++j) {
        sol.point[j] = xs[first_col[j]];
        if (lp.signs[j] == VarSign::free) sol.point[j] -= xs[first_col[j] + 1];
    }
    sol.status = LpStatus::optimal;
    sol.value = dict.objective();
    sol.dual = to_original(dict.slack_multipliers());
    sol.pivots = dict.pivots();
    return sol;
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& point)
{
    if (static_cast<int>(point.size()) != lp.variables()) return false;
    for (std::size_t j = 0; j < point.size(); ++j) {
        if (lp.signs[j] == VarSign::nonnegative && sgn(point[j]) < 0) return false;
    }
    for (const auto& c : lp.constraints) {
        Rational lhs = dot(c.coefficients, point);
        switch (c.relation) {
        case Relation::less_equal:
            if (lhs > c.rhs) return false;
            break;
        case Relation::equal:
            if (lhs != c.rhs) return false;
            break;
        case Relation::greater_equal:
            if (lhs < c.rhs) return false;
            break;
        }
    }
    return true;
}

Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& point)
{
    return dot(lp.objective, point);
}

bool is_dual_feasible(const LinearProgram& lp, const std::vector<Rational>& dual)
{
    if (!dual_signs_ok(lp, dual)) return false;
    auto col = weighted_columns(lp, dual);
    for (std::size_t j = 0; j < col.size(); ++j) {
        if (lp.signs[j] == VarSign::free ? col[j] != lp.objective[j] : col[j] < lp.objective[j]) return false;
    }
    return true;
}

Rational dual_objective(const LinearProgram& lp, const std::vector<Rational>& dual)
{
    Rational s = 0;
    for (std::size_t c = 0; c < lp.constraints.size(); ++c) {
        if (sgn(dual[c]) != 0) s += dual[c] * lp.constraints[c].rhs;
    }
    return s;
}

bool is_farkas_certificate(const LinearProgram& lp, const std::vector<Rational>& dual)
{
    if (!dual_signs_ok(lp, dual)) return false;
    auto col = weighted_columns(lp, dual);
    for (std::size_t j = 0; j < col.size(); ++j) {
        if (lp.signs[j] == VarSign::free ? sgn(col[j]) != 0 : sgn(col[j]) < 0) return false;
    }
    return sgn(dual_objective(lp, dual)) < 0;
}

}  // namespace tinsep
