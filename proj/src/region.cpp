#include "tinsep/region.hpp"

#include "tinsep/assignment.hpp"
#include "tinsep/errors.hpp"

#include <algorithm>
#include <bit>

namespace tinsep {

std::vector<RegionConstraint> region_constraints(const StrengthMatrix& matrix)
{
    std::vector<RegionConstraint> out;
    for (Cycle& cycle : enumerate_cycles(matrix.users())) {
        Rational rhs = -cycle_weight(cycle, matrix);
        for (int u : cycle.users()) rhs += matrix.at(u, u);
        out.push_back({std::move(cycle), std::move(rhs)});
    }
    return out;
}

RegionDescription describe_region(const StrengthMatrix& matrix)
{
    RegionDescription d;
    d.constraints = region_constraints(matrix);
    d.tin_holds = check_tin(matrix).holds;
    if (!d.tin_holds) {
        d.label = "TIN-achievable region, not capacity region";
    } else {
        d.label = matrix.deterministic() ? "capacity region" : "GDoF region";
    }
    return d;
}

GdofTuple::GdofTuple(std::vector<Rational> values) : values_(std::move(values))
{
    if (values_.empty()) throw InputError("a GDoF tuple needs at least one entry");
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (sgn(values_[k]) < 0) {
            throw InputError("GDoF tuple entry " + std::to_string(k + 1) + " is negative (" + to_string(values_[k]) + ")");
        }
    }
}

Rational GdofTuple::sum_over(unsigned mask) const
{
    Rational s = 0;
    for (int k = 0; k < users(); ++k) {
        if (mask & (1u << k)) s += values_[static_cast<std::size_t>(k)];
    }
    return s;
}

bool contains(const std::vector<RegionConstraint>& constraints, const GdofTuple& tuple,
              const RegionConstraint** violated)
{
    for (const auto& c : constraints) {
        Rational lhs = 0;
        for (int u : c.cycle.users()) {
            if (u >= tuple.users()) throw InputError("tuple has fewer entries than the network has users");
            lhs += tuple[u];
        }
        if (lhs > c.rhs) {
            if (violated) *violated = &c;
            return false;
        }
    }
    if (violated) *violated = nullptr;
    return true;
}

const SubsetBound& CombinedSumBounds::for_subset(unsigned mask) const
{
    for (const auto& b : bounds) {
        if (b.mask == mask) return b;
    }
    throw InputError("no bound recorded for that user subset");
}

CombinedSumBounds combined_sum_bounds(const ParallelNetwork& network)
{
    const int k_users = network.users();
    if (k_users > 20) throw GuardError("combined bounds enumerate 2^K subsets; K = " + std::to_string(k_users) + " is too large");

    CombinedSumBounds out;
    out.users = k_users;
    out.tight = true;
    for (const auto& ch : network.channels()) {
        if (!check_tin(ch).holds) out.tight = false;
    }
    if (!out.tight) out.label = "not tight: some sub-channel is not TIN optimal";

    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << k_users); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });

    for (unsigned mask : masks) {
        std::vector<int> subset;
        for (int k = 0; k < k_users; ++k) {
            if (mask & (1u << k)) subset.push_back(k);
        }
        SubsetBound sb;
        sb.mask = mask;
        sb.total = 0;
        for (const auto& ch : network.channels()) {
            Rational b = best_partition_assignment(ch.restricted(subset)).bound.bound;
            sb.total += b;
            sb.per_channel.push_back(std::move(b));
        }
        out.bounds.push_back(std::move(sb));
    }
    return out;
}

bool contains(const CombinedSumBounds& bounds, const GdofTuple& tuple, const SubsetBound** violated)
{
    if (tuple.users() != bounds.users) throw InputError("tuple length does not match the user count");
    for (const auto& b : bounds.bounds) {
        if (tuple.sum_over(b.mask) > b.total) {
            if (violated) *violated = &b;
            return false;
        }
    }
    if (violated) *violated = nullptr;
    return true;
}

namespace {

// Row layout of the decomposition LP, shared with describe_decomposition_row.
// Variables: d[m][k] at m*K + k, then the deviation z.
struct DecompositionLayout
{
    int users;
    int channels;
    std::size_t cycles;

    std::size_t region_rows() const { return static_cast<std::size_t>(channels) * cycles; }
    std::size_t sum_rows() const { return static_cast<std::size_t>(users); }
};

}  // namespace

Decomposition separate_tin_decomposable(const ParallelNetwork& network, const GdofTuple& tuple)
{
    const int k_users = network.users();
    const int m_channels = network.subchannels();
    if (tuple.users() != k_users) throw InputError("tuple length does not match the user count");

    const auto vars = static_cast<std::size_t>(k_users * m_channels + 1);
    auto var = [&](int m, int k) { return static_cast<std::size_t>(m * k_users + k); };
    const std::size_t z = vars - 1;

    std::vector<Rational> objective(vars, Rational(0));
    objective[z] = -1;
    Decomposition out;
    out.lp = LinearProgram(std::move(objective));

    for (int m = 0; m < m_channels; ++m) {
        for (const auto& c : region_constraints(network.channel(m))) {
            std::vector<Rational> row(vars, Rational(0));
            for (int u : c.cycle.users()) row[var(m, u)] = 1;
            out.lp.add(std::move(row), Relation::less_equal, c.rhs);
        }
    }
    for (int k = 0; k < k_users; ++k) {
        std::vector<Rational> row(vars, Rational(0));
        for (int m = 0; m < m_channels; ++m) row[var(m, k)] = 1;
        out.lp.add(std::move(row), Relation::equal, tuple[k]);
    }
    for (int m = 0; m < m_channels; ++m) {
        for (int k = 0; k < k_users; ++k) {
            Rational share = tuple[k] / m_channels;
            std::vector<Rational> up(vars, Rational(0));
            up[var(m, k)] = 1;
            up[z] = -1;
            std::vector<Rational> down(vars, Rational(0));
            down[var(m, k)] = -1;
            down[z] = -1;
            out.lp.add(std::move(up), Relation::less_equal, share);
            out.lp.add(std::move(down), Relation::less_equal, -share);
        }
    }

    LpSolution sol = solve_lp(out.lp);
    if (sol.status == LpStatus::optimal) {
        out.feasible = true;
        out.parts.assign(static_cast<std::size_t>(m_channels), std::vector<Rational>(static_cast<std::size_t>(k_users)));
        for (int m = 0; m < m_channels; ++m) {
            for (int k = 0; k < k_users; ++k) {
                out.parts[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = sol.point[var(m, k)];
            }
        }
    } else {
        // The objective is bounded above by 0, so this is infeasibility.
        out.farkas = std::move(sol.dual);
    }
    return out;
}

std::string describe_decomposition_row(const ParallelNetwork& network, std::size_t row)
{
    const int k_users = network.users();
    const auto cycles = enumerate_cycles(k_users);
    DecompositionLayout layout{k_users, network.subchannels(), cycles.size()};
    if (row < layout.region_rows()) {
        const int m = static_cast<int>(row / layout.cycles);
        const Cycle& cycle = cycles[row % layout.cycles];
        std::string lhs;
        for (int u : cycle.users()) {
            if (!lhs.empty()) lhs += " + ";
            lhs += "d" + std::to_string(u + 1);
        }
        Rational rhs = -cycle_weight(cycle, network.channel(m));
        for (int u : cycle.users()) rhs += network.channel(m).at(u, u);
        return "sub-channel " + std::to_string(m + 1) + ", cycle " + cycle.str() + ": " + lhs + " <= " + to_string(rhs);
    }
    row -= layout.region_rows();
    if (row < layout.sum_rows()) {
        return "user " + std::to_string(row + 1) + ": parts sum to the tuple entry";
    }
    row -= layout.sum_rows();
    const int m = static_cast<int>(row / (2 * static_cast<std::size_t>(k_users)));
    const int k = static_cast<int>((row / 2) % static_cast<std::size_t>(k_users));
    return "sub-channel " + std::to_string(m + 1) + ", user " + std::to_string(k + 1) + ": deviation from the even share";
}

}  // namespace tinsep
