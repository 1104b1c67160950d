#pragma once

#include "tinsep/rational.hpp"

#include <string_view>
#include <vector>

namespace tinsep {

enum class Relation { less_equal, equal, greater_equal };
enum class VarSign { nonnegative, free };

struct LinearConstraint
{
    std::vector<Rational> coefficients;
    Relation relation;
    Rational rhs;
};

/// maximize objective . x subject to the constraints and per-variable signs.
struct LinearProgram
{
    std::vector<Rational> objective;
    std::vector<LinearConstraint> constraints;
    std::vector<VarSign> signs;

    LinearProgram() = default;
    explicit LinearProgram(std::vector<Rational> objective_, VarSign sign = VarSign::nonnegative);

    int variables() const { return static_cast<int>(objective.size()); }
    void add(std::vector<Rational> coefficients, Relation relation, Rational rhs);
};

enum class LpStatus { optimal, unbounded, infeasible };
std::string_view to_string(LpStatus status);

/// Multipliers in `dual` are indexed by constraint. For an optimal solution
/// they solve the dual program (y >= 0 on <= rows, y <= 0 on >= rows, free on
/// = rows) with equal objective. For an infeasible program they are a Farkas
/// certificate: y^T A >= 0 on nonnegative variables, = 0 on free ones, and
/// y^T b < 0. Empty for unbounded programs.
struct LpSolution
{
    LpStatus status = LpStatus::infeasible;
    Rational value;
    std::vector<Rational> point;
    std::vector<Rational> dual;
    int pivots = 0;
};

/// Exact two-phase simplex over the rationals with Bland's anti-cycling rule.
LpSolution solve_lp(const LinearProgram& lp);

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& point);
Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& point);

bool is_dual_feasible(const LinearProgram& lp, const std::vector<Rational>& dual);
Rational dual_objective(const LinearProgram& lp, const std::vector<Rational>& dual);
bool is_farkas_certificate(const LinearProgram& lp, const std::vector<Rational>& dual);

}  // namespace tinsep
