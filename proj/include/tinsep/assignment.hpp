#pragma once

#include "tinsep/cycles.hpp"
#include "tinsep/model.hpp"
#include "tinsep/rational.hpp"

#include <optional>
#include <vector>

namespace tinsep {

/// Square cost matrix; a disengaged entry is a forbidden pairing.
using CostMatrix = std::vector<std::vector<std::optional<Rational>>>;

/// Minimum-cost perfect matching of rows to columns (Hungarian method with
/// potentials, exact arithmetic). Returns column-of-row, or nothing when
/// the allowed entries admit no perfect matching.
std::optional<std::vector<int>> min_cost_assignment(const CostMatrix& cost);

/// Same, but among all optimal matchings returns the lexicographically
/// smallest column-of-row vector.
std::optional<std::vector<int>> min_cost_assignment_lex(const CostMatrix& cost);

/// sigma[k] is the user paired with k; read as a cyclic partition, sigma[k]
/// is the predecessor of k. Fixed points carry zero weight.
struct Assignment
{
    std::vector<int> permutation;
    Rational weight;
};

struct AssignmentResult
{
    Assignment assignment;
    PartitionBound bound;
};

/// Maximum-weight predecessor assignment, solved as a minimum-cost matching
/// on c(k, p) = -strength(p, k) with zero diagonal. Ties go to the
/// lexicographically smallest predecessor array.
AssignmentResult best_partition_assignment(const StrengthMatrix& matrix);

}  // namespace tinsep
