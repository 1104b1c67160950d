#pragma once

#include "tinsep/cycles.hpp"
#include "tinsep/lp.hpp"
#include "tinsep/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tinsep {

/// sum_{k in cycle} d_k <= rhs, with rhs = own diagonals minus the cycle weight.
struct RegionConstraint
{
    Cycle cycle;
    Rational rhs;
};

/// One constraint per cycle, in enumerate_cycles order.
std::vector<RegionConstraint> region_constraints(const StrengthMatrix& matrix);

struct RegionDescription
{
    std::vector<RegionConstraint> constraints;
    bool tin_holds = false;
    std::string label;
};

RegionDescription describe_region(const StrengthMatrix& matrix);

/// A K-tuple of nonnegative per-user GDoF (or rates, in levels).
class GdofTuple
{
public:
    explicit GdofTuple(std::vector<Rational> values);

    int users() const { return static_cast<int>(values_.size()); }
    const Rational& operator[](int user) const { return values_[static_cast<std::size_t>(user)]; }
    const std::vector<Rational>& values() const { return values_; }
    Rational sum_over(unsigned mask) const;

private:
    std::vector<Rational> values_;
};

/// True iff every constraint holds exactly. The first violated constraint,
/// if any, is reported through `violated`.
bool contains(const std::vector<RegionConstraint>& constraints, const GdofTuple& tuple,
              const RegionConstraint** violated = nullptr);

struct SubsetBound
{
    unsigned mask = 0;
    std::vector<Rational> per_channel;
    Rational total;
};

/// Bounds on sum_{k in S} d_k for every nonempty user subset S, each the sum
/// over sub-channels of that sub-channel's best cyclic-partition bound on S.
struct CombinedSumBounds
{
    int users = 0;
    std::vector<SubsetBound> bounds;
    /// False when some sub-channel is not TIN optimal.
    bool tight = false;
    std::optional<std::string> label;

    const SubsetBound& for_subset(unsigned mask) const;
};

CombinedSumBounds combined_sum_bounds(const ParallelNetwork& network);

bool contains(const CombinedSumBounds& bounds, const GdofTuple& tuple, const SubsetBound** violated = nullptr);

/// Feasibility of splitting a tuple into per-sub-channel tuples, each inside
/// its sub-channel's TIN region. When feasible the most even split is
/// returned (max deviation from tuple/M minimized); otherwise a Farkas
/// certificate over `lp` refutes every split.
struct Decomposition
{
    bool feasible = false;
    /// parts[m][k]
    std::vector<std::vector<Rational>> parts;
    LinearProgram lp;
    std::vector<Rational> farkas;
};

Decomposition separate_tin_decomposable(const ParallelNetwork& network, const GdofTuple& tuple);

/// Human-readable name of row `row` of a decomposition LP.
std::string describe_decomposition_row(const ParallelNetwork& network, std::size_t row);

}  // namespace tinsep
