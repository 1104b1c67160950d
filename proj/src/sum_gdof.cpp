#include "tinsep/sum_gdof.hpp"

#include "tinsep/assignment.hpp"
#include "tinsep/errors.hpp"

#include <stdexcept>

namespace tinsep {

LinearProgram build_lp1(const StrengthMatrix& matrix, bool nonnegative)
{
    const int k_users = matrix.users();
    LinearProgram lp(std::vector<Rational>(static_cast<std::size_t>(k_users), Rational(1)),
                     nonnegative ? VarSign::nonnegative : VarSign::free);
    for (const Cycle& cycle : enumerate_cycles(k_users)) {
        std::vector<Rational> row(static_cast<std::size_t>(k_users), Rational(0));
        Rational rhs = -cycle_weight(cycle, matrix);
        for (int u : cycle.users()) {
            row[static_cast<std::size_t>(u)] = 1;
            rhs += matrix.at(u, u);
        }
        lp.add(std::move(row), Relation::less_equal, std::move(rhs));
    }
    return lp;
}

SumGdofResult sum_gdof(const StrengthMatrix& matrix)
{
    AssignmentResult assigned = best_partition_assignment(matrix);
    SumGdofResult result{assigned.bound.bound, std::nullopt, assigned.bound.bound, std::nullopt,
                         check_tin(matrix).holds, false, assigned.bound, {}, std::nullopt};

    LpSolution lp = solve_lp(build_lp1(matrix, true));
    if (lp.status == LpStatus::optimal) {
        result.lp = lp.value;
        result.lp_point = lp.point;
    }

    if (matrix.users() <= kBruteForceLimit) {
        result.brute_force = optimal_partitions(matrix).front().bound;
    }

    result.methods_agree = result.lp && *result.lp == result.assignment
                           && (!result.brute_force || *result.brute_force == result.assignment);
    result.value = result.assignment;

    if (!result.tin_holds) {
        result.label = "bound-only: TIN condition fails";
    } else if (!result.methods_agree) {
        throw std::logic_error("sum-GDoF methods disagree on a TIN-optimal matrix");
    }
    return result;
}

RedundancyCheck nonnegativity_redundancy_check(const StrengthMatrix& matrix)
{
    TinVerdict tin = check_tin(matrix);
    LpSolution with = solve_lp(build_lp1(matrix, true));
    LpSolution without = solve_lp(build_lp1(matrix, false));
    if (with.status != LpStatus::optimal || without.status != LpStatus::optimal) {
        throw InputError("LP1 has no finite optimum for this matrix (status "
                         + std::string(to_string(with.status)) + " / " + std::string(to_string(without.status)) + ")");
    }
    RedundancyCheck check;
    check.with_nonnegativity = with.value;
    check.without_nonnegativity = without.value;
    check.equal = with.value == without.value;
    if (!tin.strict) check.label = "continuity regime, equality expected in the limit";
    return check;
}

}  // namespace tinsep
