#include "tinsep/cycles.hpp"

#include "tinsep/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tinsep {

namespace {

void check_guard(int users)
{
    if (users < 1) throw InputError("at least one user is required");
    if (users > kEnumerationLimit) {
        throw GuardError("exhaustive enumeration limit: K = " + std::to_string(users) + " exceeds "
                         + std::to_string(kEnumerationLimit));
    }
}

std::string join_users(const std::vector<int>& users)
{
    std::string s = "{";
    for (std::size_t i = 0; i < users.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(users[i] + 1);
    }
    return s + "}";
}

}  // namespace

Cycle::Cycle(std::vector<int> users) : users_(std::move(users))
{
    if (users_.empty()) throw InputError("a cycle needs at least one user");
    std::vector<int> sorted = users_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0) throw InputError("negative user index in cycle");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("cycle repeats a user: " + join_users(users_));
    }
    std::rotate(users_.begin(), std::min_element(users_.begin(), users_.end()), users_.end());
}

bool Cycle::contains(int user) const
{
    return std::find(users_.begin(), users_.end(), user) != users_.end();
}

unsigned Cycle::mask() const
{
    unsigned m = 0;
    for (int u : users_) m |= 1u << u;
    return m;
}

std::string Cycle::str() const
{
    return join_users(users_);
}

CyclicPartition CyclicPartition::from_predecessors(std::vector<int> pred)
{
    const int k = static_cast<int>(pred.size());
    if (k < 1) throw InputError("a partition needs at least one user");
    std::vector<char> seen(pred.size(), 0);
    for (int p : pred) {
        if (p < 0 || p >= k) throw InputError("predecessor out of range");
        if (seen[static_cast<std::size_t>(p)]) throw InputError("predecessor map is not a permutation");
        seen[static_cast<std::size_t>(p)] = 1;
    }
    return CyclicPartition(std::move(pred));
}

CyclicPartition CyclicPartition::from_cycles(int users, const std::vector<Cycle>& cycles)
{
    std::vector<int> pred(static_cast<std::size_t>(users), -1);
    for (const auto& c : cycles) {
        const auto& u = c.users();
        for (std::size_t l = 0; l < u.size(); ++l) {
            int user = u[(l + 1) % u.size()];
            if (user >= users) throw InputError("cycle " + c.str() + " mentions a user beyond K");
            if (pred[static_cast<std::size_t>(user)] != -1) throw InputError("cycles overlap at user " + std::to_string(user + 1));
            pred[static_cast<std::size_t>(user)] = u[l];
        }
    }
    for (int k = 0; k < users; ++k) {
        if (pred[static_cast<std::size_t>(k)] == -1) throw InputError("cycles do not cover user " + std::to_string(k + 1));
    }
    return CyclicPartition(std::move(pred));
}

CyclicPartition CyclicPartition::identity(int users)
{
    std::vector<int> pred(static_cast<std::size_t>(users));
    std::iota(pred.begin(), pred.end(), 0);
    return CyclicPartition(std::move(pred));
}

std::optional<int> CyclicPartition::predecessor(int user) const
{
    int p = pred_.at(static_cast<std::size_t>(user));
    if (p == user) return std::nullopt;
    return p;
}

std::vector<Cycle> CyclicPartition::cycles() const
{
    const std::size_t k = pred_.size();
    std::vector<int> succ(k);
    for (std::size_t i = 0; i < k; ++i) succ[static_cast<std::size_t>(pred_[i])] = static_cast<int>(i);
    std::vector<char> seen(k, 0);
    std::vector<Cycle> out;
    for (std::size_t start = 0; start < k; ++start) {
        if (seen[start]) continue;
        std::vector<int> members;
        int u = static_cast<int>(start);
        while (!seen[static_cast<std::size_t>(u)]) {
            seen[static_cast<std::size_t>(u)] = 1;
            members.push_back(u);
            u = succ[static_cast<std::size_t>(u)];
        }
        out.emplace_back(std::move(members));
    }
    return out;
}

bool CyclicPartition::all_trivial() const
{
    for (std::size_t i = 0; i < pred_.size(); ++i) {
        if (pred_[i] != static_cast<int>(i)) return false;
    }
    return true;
}

std::string CyclicPartition::str() const
{
    std::string s = "{";
    auto cs = cycles();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ",";
        s += cs[i].str();
    }
    return s + "}";
}

unsigned long long cycle_count(int users)
{
    unsigned long long total = 0;
    for (int len = 1; len <= users; ++len) {
        unsigned long long choose = 1;
        for (int i = 0; i < len; ++i) choose = choose * static_cast<unsigned long long>(users - i) / static_cast<unsigned long long>(i + 1);
        unsigned long long orders = 1;
        for (int i = 2; i < len; ++i) orders *= static_cast<unsigned long long>(i);
        total += choose * orders;
    }
    return total;
}

std::vector<Cycle> cycles_on(unsigned mask, int users)
{
    std::vector<int> members;
    for (int u = 0; u < users; ++u) {
        if (mask & (1u << u)) members.push_back(u);
    }
    std::vector<Cycle> out;
    if (members.empty()) return out;
    // Fix the smallest member first; every order of the rest is a distinct cycle.
    std::vector<int> rest(members.begin() + 1, members.end());
    do {
        std::vector<int> c{members.front()};
        c.insert(c.end(), rest.begin(), rest.end());
        out.emplace_back(std::move(c));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

std::vector<Cycle> enumerate_cycles(int users)
{
    check_guard(users);
    std::vector<Cycle> out;
    out.reserve(static_cast<std::size_t>(cycle_count(users)));
    for (int len = 1; len <= users; ++len) {
        // Member sets of size len in lexicographic order.
        std::vector<int> pick(static_cast<std::size_t>(len));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            unsigned mask = 0;
            for (int u : pick) mask |= 1u << u;
            for (auto& c : cycles_on(mask, users)) out.push_back(std::move(c));
            int i = len - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == users - len + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < len; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

Rational cycle_weight(const Cycle& cycle, const StrengthMatrix& matrix)
{
    Rational w = 0;
    if (cycle.trivial()) return w;
    const auto& u = cycle.users();
    for (std::size_t l = 0; l < u.size(); ++l) {
        int rx = u[l];
        int tx = u[(l + 1) % u.size()];
        if (rx >= matrix.users() || tx >= matrix.users()) throw InputError("cycle " + cycle.str() + " exceeds the matrix");
        w += matrix.at(rx, tx);
    }
    return w;
}

std::vector<CyclicPartition> enumerate_partitions(int users)
{
    check_guard(users);
    std::vector<int> pred(static_cast<std::size_t>(users));
    std::iota(pred.begin(), pred.end(), 0);
    std::vector<CyclicPartition> out;
    do {
        out.push_back(CyclicPartition::from_predecessors(pred));
    } while (std::next_permutation(pred.begin(), pred.end()));
    return out;
}

Rational partition_weight(const CyclicPartition& partition, const StrengthMatrix& matrix)
{
    if (partition.users() != matrix.users()) {
        throw InputError("partition covers " + std::to_string(partition.users()) + " users but the matrix has "
                         + std::to_string(matrix.users()));
    }
    Rational w = 0;
    const auto& pred = partition.permutation();
    for (int k = 0; k < matrix.users(); ++k) {
        int p = pred[static_cast<std::size_t>(k)];
        if (p != k) w += matrix.at(p, k);
    }
    return w;
}

PartitionBound partition_bound(const CyclicPartition& partition, const StrengthMatrix& matrix)
{
    Rational w = partition_weight(partition, matrix);
    Rational b = matrix.diagonal_sum() - w;
    return PartitionBound{partition, std::move(w), std::move(b)};
}

std::vector<PartitionBound> optimal_partitions(const StrengthMatrix& matrix)
{
    std::vector<PartitionBound> best;
    for (const auto& p : enumerate_partitions(matrix.users())) {
        PartitionBound b = partition_bound(p, matrix);
        if (best.empty() || b.bound < best.front().bound) {
            best.clear();
            best.push_back(std::move(b));
        } else if (b.bound == best.front().bound) {
            best.push_back(std::move(b));
        }
    }
    return best;
}

}  // namespace tinsep
