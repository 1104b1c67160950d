#pragma once

#include "tinsep/cycles.hpp"
#include "tinsep/lp.hpp"
#include "tinsep/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tinsep {

/// Brute-force partition enumeration is only run up to this many users.
inline constexpr int kBruteForceLimit = 7;

/// max sum d_k subject to one bound per cycle:
///   sum_{k in cycle} d_k <= sum_{k in cycle} strength(k,k) - weight(cycle),
/// with d >= 0 when `nonnegative` is set (free variables otherwise).
LinearProgram build_lp1(const StrengthMatrix& matrix, bool nonnegative = true);

struct SumGdofResult
{
    /// The common value when TIN holds; otherwise the best partition bound.
    Rational value;
    std::optional<Rational> lp;
    Rational assignment;
    std::optional<Rational> brute_force;
    bool tin_holds = false;
    bool methods_agree = false;
    /// Lexicographically first optimal partition.
    PartitionBound best;
    std::vector<Rational> lp_point;
    std::optional<std::string> label;
};

/// Sum-GDoF (gdof mode) or sum-capacity in levels (deterministic mode) by
/// LP1, by assignment and, for small K, by brute force. On a TIN-optimal
/// matrix any disagreement between the methods throws std::logic_error.
SumGdofResult sum_gdof(const StrengthMatrix& matrix);

struct RedundancyCheck
{
    bool equal = false;
    Rational with_nonnegativity;
    Rational without_nonnegativity;
    std::optional<std::string> label;
};

/// Solves LP1 with and without d >= 0 and compares the optima.
RedundancyCheck nonnegativity_redundancy_check(const StrengthMatrix& matrix);

}  // namespace tinsep
