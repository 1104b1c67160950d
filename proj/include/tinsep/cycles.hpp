#pragma once

#include "tinsep/model.hpp"
#include "tinsep/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace tinsep {

/// Exhaustive cycle/partition enumeration is limited to this many users.
inline constexpr int kEnumerationLimit = 9;

/// A cyclically ordered set of distinct users (0-based). The directed edges
/// run u[l+1] -> u[l]: listing {a, b, c} means a is the cyclic predecessor of
/// b, b of c, and c of a. Stored rotated so the smallest user comes first;
/// {1,2,3} and {3,2,1} are different cycles.
class Cycle
{
public:
    explicit Cycle(std::vector<int> users);

    const std::vector<int>& users() const { return users_; }
    int size() const { return static_cast<int>(users_.size()); }
    bool trivial() const { return users_.size() == 1; }
    bool contains(int user) const;
    /// Bitmask of member users.
    unsigned mask() const;

    /// 1-based text form, e.g. "{1,3,5}".
    std::string str() const;

    friend auto operator<=>(const Cycle&, const Cycle&) = default;

private:
    std::vector<int> users_;
};

/// Disjoint cyclic cover of all K users, held as its predecessor permutation:
/// pred[k] = Pi(k), with pred[k] == k for users in trivial cycles.
class CyclicPartition
{
public:
    static CyclicPartition from_predecessors(std::vector<int> pred);
    static CyclicPartition from_cycles(int users, const std::vector<Cycle>& cycles);
    /// All users in trivial cycles.
    static CyclicPartition identity(int users);

    int users() const { return static_cast<int>(pred_.size()); }
    std::optional<int> predecessor(int user) const;
    const std::vector<int>& permutation() const { return pred_; }

    /// Cycles ordered by their smallest user.
    std::vector<Cycle> cycles() const;
    bool all_trivial() const;

    std::string str() const;

    friend auto operator<=>(const CyclicPartition&, const CyclicPartition&) = default;

private:
    explicit CyclicPartition(std::vector<int> pred) : pred_(std::move(pred)) {}
    std::vector<int> pred_;
};

struct PartitionBound
{
    CyclicPartition partition;
    Rational weight;
    /// Sum of diagonal strengths minus the partition weight.
    Rational bound;
};

/// Number of distinct directed cycles on K users: sum_L C(K,L) (L-1)!.
unsigned long long cycle_count(int users);

/// Every cycle on K users exactly once, by size, then member set, then order.
std::vector<Cycle> enumerate_cycles(int users);

/// Every cycle whose member set is exactly `mask`.
std::vector<Cycle> cycles_on(unsigned mask, int users);

/// Sum of cross-link strengths along the cycle's edges; zero for trivial cycles.
Rational cycle_weight(const Cycle& cycle, const StrengthMatrix& matrix);

/// All K! cyclic partitions, in lexicographic order of predecessor arrays.
std::vector<CyclicPartition> enumerate_partitions(int users);

Rational partition_weight(const CyclicPartition& partition, const StrengthMatrix& matrix);
PartitionBound partition_bound(const CyclicPartition& partition, const StrengthMatrix& matrix);

/// Every partition attaining the best (smallest) partition bound, by brute force.
std::vector<PartitionBound> optimal_partitions(const StrengthMatrix& matrix);

}  // namespace tinsep
