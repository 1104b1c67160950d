#include "tinsep/assignment.hpp"

#include "tinsep/errors.hpp"

#include <algorithm>

namespace tinsep {

namespace {

void check_square(const CostMatrix& cost)
{
    for (const auto& row : cost) {
        if (row.size() != cost.size()) throw InputError("assignment cost matrix must be square");
    }
}

// Classic O(n^3) shortest-augmenting-path Hungarian method. Forbidden
// entries get a penalty larger than any spread of allowed costs, so an
// optimum uses one only when no allowed perfect matching exists.
std::vector<int> hungarian(const std::vector<std::vector<Rational>>& a)
{
    const std::size_t n = a.size();
    std::vector<Rational> u(n + 1, Rational(0)), v(n + 1, Rational(0));
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<std::optional<Rational>> minv(n + 1);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            std::size_t i0 = p[j0];
            std::optional<Rational> delta;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                Rational cur = a[i0 - 1][j - 1] - u[i0] - v[j];
                if (!minv[j] || cur < *minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (!delta || *minv[j] < *delta) {
                    delta = *minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += *delta;
                    v[j] -= *delta;
                } else {
                    *minv[j] -= *delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> col_of(n);
    for (std::size_t j = 1; j <= n; ++j) col_of[p[j] - 1] = static_cast<int>(j - 1);
    return col_of;
}

}  // namespace

std::optional<std::vector<int>> min_cost_assignment(const CostMatrix& cost)
{
    check_square(cost);
    const std::size_t n = cost.size();
    if (n == 0) return std::vector<int>{};

    Rational spread = 1;
    for (const auto& row : cost) {
        for (const auto& c : row) {
            if (c) spread += abs(*c);
        }
    }
    Rational penalty = 2 * spread;

    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = cost[i][j] ? *cost[i][j] : penalty;
    }
    std::vector<int> col_of = hungarian(a);
    for (std::size_t i = 0; i < n; ++i) {
        if (!cost[i][static_cast<std::size_t>(col_of[i])]) return std::nullopt;
    }
    return col_of;
}

std::optional<std::vector<int>> min_cost_assignment_lex(const CostMatrix& cost)
{
    auto first = min_cost_assignment(cost);
    if (!first) return std::nullopt;
    const std::size_t n = cost.size();

    auto total = [&](const CostMatrix& c, const std::vector<int>& sigma) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) s += *c[i][static_cast<std::size_t>(sigma[i])];
        return s;
    };
    const Rational optimum = total(cost, *first);

    // Fix rows one at a time to the smallest column that still admits an
    // optimal completion.
    CostMatrix work = cost;
    std::vector<int> chosen = *first;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!work[i][j]) continue;
            CostMatrix trial = work;
            for (std::size_t jj = 0; jj < n; ++jj) {
                if (jj != j) trial[i][jj].reset();
            }
            for (std::size_t ii = i + 1; ii < n; ++ii) trial[ii][j].reset();
            auto sigma = min_cost_assignment(trial);
            if (sigma && total(trial, *sigma) == optimum) {
                work = std::move(trial);
                chosen = *sigma;
                break;
            }
        }
    }
    return chosen;
}

AssignmentResult best_partition_assignment(const StrengthMatrix& matrix)
{
    const int k_users = matrix.users();
    const auto n = static_cast<std::size_t>(k_users);
    // Row k chooses its predecessor p (column).
    CostMatrix cost(n, std::vector<std::optional<Rational>>(n));
    for (int k = 0; k < k_users; ++k) {
        for (int p = 0; p < k_users; ++p) {
            cost[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] =
                p == k ? Rational(0) : Rational(-matrix.at(p, k));
        }
    }
    auto sigma = min_cost_assignment_lex(cost);
    // Every entry is allowed, so a perfect matching always exists.
    Assignment assignment{*sigma, 0};
    for (int k = 0; k < k_users; ++k) {
        int p = assignment.permutation[static_cast<std::size_t>(k)];
        if (p != k) assignment.weight += matrix.at(p, k);
    }
    PartitionBound bound = partition_bound(CyclicPartition::from_predecessors(assignment.permutation), matrix);
    return {std::move(assignment), std::move(bound)};
}

}  // namespace tinsep
