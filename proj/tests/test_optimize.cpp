#include "support/generators.hpp"
#include "support/oracles.hpp"

#include "tinsep/assignment.hpp"
#include "tinsep/errors.hpp"
#include "tinsep/fixtures.hpp"
#include "tinsep/lp.hpp"
#include "tinsep/sum_gdof.hpp"

#include <doctest.h>

#include <array>
#include <numeric>

using namespace tinsep;

namespace {

std::vector<Rational> q(std::initializer_list<long> v)
{
    return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("solve_lp: the cautionary LP with and without nonnegativity")
{
    LpSolution with = solve_lp(fixtures::caution_lp(true));
    REQUIRE(with.status == LpStatus::optimal);
    CHECK(with.value == 20);
    CHECK(with.point == q({0, 10, 10}));

    LpSolution without = solve_lp(fixtures::caution_lp(false));
    REQUIRE(without.status == LpStatus::optimal);
    CHECK(without.value == 25);
    CHECK(without.point == q({-5, 15, 15}));

    for (bool nonneg : {true, false}) {
        LinearProgram lp = fixtures::caution_lp(nonneg);
        LpSolution s = solve_lp(lp);
        CHECK(satisfies(lp, s.point));
        CHECK(objective_value(lp, s.point) == s.value);
        CHECK(is_dual_feasible(lp, s.dual));
        CHECK(dual_objective(lp, s.dual) == s.value);
    }
}

TEST_CASE("solve_lp: pinned variable, equality rows, unbounded and infeasible")
{
    LinearProgram pinned(q({1}));
    pinned.add(q({1}), Relation::less_equal, 0);
    pinned.add(q({1}), Relation::greater_equal, 0);
    LpSolution s = solve_lp(pinned);
    CHECK(s.status == LpStatus::optimal);
    CHECK(s.value == 0);

    LinearProgram eq(q({1, 2}));
    eq.add(q({1, 1}), Relation::equal, 3);
    eq.add(q({1, 0}), Relation::greater_equal, 1);
    s = solve_lp(eq);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.value == 5);
    CHECK(s.point == q({1, 2}));
    CHECK(is_dual_feasible(eq, s.dual));
    CHECK(dual_objective(eq, s.dual) == 5);

    LinearProgram unbounded(q({1, 1}));
    unbounded.add(q({1, -1}), Relation::less_equal, 1);
    CHECK(solve_lp(unbounded).status == LpStatus::unbounded);

    LinearProgram infeasible(q({1, 1}));
    infeasible.add(q({1, 1}), Relation::less_equal, 1);
    infeasible.add(q({1, 1}), Relation::greater_equal, 3);
    s = solve_lp(infeasible);
    CHECK(s.status == LpStatus::infeasible);
    CHECK(is_farkas_certificate(infeasible, s.dual));

    LinearProgram free_infeasible(q({0}), VarSign::free);
    free_infeasible.add(q({1}), Relation::equal, 1);
    free_infeasible.add(q({2}), Relation::equal, 3);
    s = solve_lp(free_infeasible);
    CHECK(s.status == LpStatus::infeasible);
    CHECK(is_farkas_certificate(free_infeasible, s.dual));

    CHECK_THROWS_AS(solve_lp(LinearProgram{}), InputError);
    CHECK_THROWS_AS(pinned.add(q({1, 2}), Relation::equal, 0), InputError);
}

TEST_CASE("solve_lp: random small LPs agree with vertex enumeration")
{
    // Two variables, a few <= rows plus x >= 0: the optimum is attained at an
    // intersection of two tight lines, so enumerate them all.
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> coef(-3, 5), rhs(0, 12);
    for (int trial = 0; trial < 300; ++trial) {
        LinearProgram lp(q({coef(rng), coef(rng)}));
        std::vector<std::array<Rational, 3>> lines = {{1, 0, 0}, {0, 1, 0}};
        for (int r = 0; r < 4; ++r) {
            Rational a = coef(rng), b = coef(rng), c = rhs(rng);
            lp.add({a, b}, Relation::less_equal, c);
            lines.push_back({a, b, c});
        }
        LpSolution s = solve_lp(lp);
        std::optional<Rational> best;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                Rational det = lines[i][0] * lines[j][1] - lines[i][1] * lines[j][0];
                if (sgn(det) == 0) continue;
                Rational x = (lines[i][2] * lines[j][1] - lines[i][1] * lines[j][2]) / det;
                Rational y = (lines[i][0] * lines[j][2] - lines[i][2] * lines[j][0]) / det;
                std::vector<Rational> pt{x, y};
                if (!satisfies(lp, pt)) continue;
                Rational v = objective_value(lp, pt);
                if (!best || v > *best) best = v;
            }
        }
        if (s.status == LpStatus::optimal) {
            REQUIRE(best.has_value());
            CHECK(s.value == *best);
            CHECK(satisfies(lp, s.point));
            CHECK(is_dual_feasible(lp, s.dual));
            CHECK(dual_objective(lp, s.dual) == s.value);
        } else {
            // Origin is always feasible here, so only unboundedness is possible.
            CHECK(s.status == LpStatus::unbounded);
        }
    }
}

TEST_CASE("min_cost_assignment matches permutation brute force and respects forbidden entries")
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 6;
        CostMatrix cost(static_cast<std::size_t>(n), std::vector<std::optional<Rational>>(static_cast<std::size_t>(n)));
        for (auto& row : cost) {
            for (auto& e : row) {
                if (c(rng) != 5) e = ratio(c(rng), 3);
            }
        }
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::optional<Rational> best;
        std::optional<std::vector<int>> lex_first;
        do {
            Rational s = 0;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                const auto& e = cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
                if (!e) ok = false;
                else s += *e;
            }
            if (ok && (!best || s < *best)) {
                best = s;
                lex_first = p;
            }
        } while (std::next_permutation(p.begin(), p.end()));

        auto got = min_cost_assignment(cost);
        auto lex = min_cost_assignment_lex(cost);
        CHECK(got.has_value() == best.has_value());
        if (!best) continue;
        Rational s = 0;
        for (int i = 0; i < n; ++i) s += *cost[static_cast<std::size_t>(i)][static_cast<std::size_t>((*got)[static_cast<std::size_t>(i)])];
        CHECK(s == *best);
        CHECK(lex == lex_first);
    }
}

TEST_CASE("best_partition_assignment: identity when there is no interference")
{
    StrengthMatrix m(3, Mode::gdof, {1, 0, 0, 0, 2, 0, 0, 0, 3});
    AssignmentResult r = best_partition_assignment(m);
    CHECK(r.assignment.permutation == std::vector<int>{0, 1, 2});
    CHECK(r.bound.bound == 6);
    CHECK(r.bound.partition.all_trivial());
}

TEST_CASE("best_partition_assignment: first example sub-channels give 6 with the stated partitions")
{
    ParallelNetwork ex = fixtures::example1();
    auto stated = fixtures::example1_partitions();
    for (int m = 0; m < 3; ++m) {
        AssignmentResult r = best_partition_assignment(ex.channel(m));
        CHECK(r.bound.bound == 6);
        CHECK(r.bound.partition == stated[static_cast<std::size_t>(m)]);
    }
}

TEST_CASE("best_partition_assignment equals the partition brute force and bounds every partition")
{
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 150; ++trial) {
        StrengthMatrix m = testgen::random_strict_tin(rng, 5);
        AssignmentResult r = best_partition_assignment(m);
        CHECK(r.bound.bound == oracle::min_partition_bound(m));
        std::vector<int> sorted = r.assignment.permutation;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4});
        for (const auto& p : enumerate_partitions(5)) CHECK(partition_weight(p, m) <= r.assignment.weight);
        // Lexicographic tie-break among all optima.
        CHECK(r.bound.partition == optimal_partitions(m).front().partition);
    }
}

TEST_CASE("sum_gdof: three methods agree exactly")
{
    StrengthMatrix quarter(3, Mode::gdof,
                           {1, Rational(1, 4), Rational(1, 4), Rational(1, 4), 1, Rational(1, 4), Rational(1, 4), Rational(1, 4), 1});
    SumGdofResult r = sum_gdof(quarter);
    CHECK(r.tin_holds);
    CHECK(r.methods_agree);
    CHECK(r.value == oracle::min_partition_bound(quarter));
    CHECK(r.value == Rational(9, 4));
    CHECK(*r.lp == r.value);
    CHECK(*r.brute_force == r.value);

    StrengthMatrix diag(2, Mode::gdof, {Rational(3, 2), 0, 0, 2});
    CHECK(sum_gdof(diag).value == Rational(7, 2));

    ParallelNetwork ex = fixtures::example1();
    for (const auto& ch : ex.channels()) CHECK(sum_gdof(ch).value == 6);
}

TEST_CASE("sum_gdof: non-TIN matrices are labeled bound-only")
{
    StrengthMatrix strong(2, Mode::gdof, {1, 2, 2, 1});
    SumGdofResult r = sum_gdof(strong);
    CHECK_FALSE(r.tin_holds);
    REQUIRE(r.label.has_value());
    CHECK(*r.label == "bound-only: TIN condition fails");
    CHECK(r.value == r.assignment);
}

TEST_CASE("LP1 satisfies weak duality against hand-built cycle multipliers")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        StrengthMatrix m = testgen::random_strict_tin(rng, 3);
        LinearProgram lp = build_lp1(m);
        LpSolution s = solve_lp(lp);
        REQUIRE(s.status == LpStatus::optimal);
        auto cycles = enumerate_cycles(3);

        // lambda = indicator of the cycles of an optimal partition
        std::vector<Rational> y(cycles.size(), Rational(0));
        for (const auto& c : best_partition_assignment(m).bound.partition.cycles()) {
            y[static_cast<std::size_t>(std::find(cycles.begin(), cycles.end(), c) - cycles.begin())] = 1;
        }
        CHECK(is_dual_feasible(lp, y));
        CHECK(dual_objective(lp, y) >= s.value);
        CHECK(dual_objective(lp, y) == s.value);

        // lambda = 1/2 on each 2-cycle
        std::vector<Rational> half(cycles.size(), Rational(0));
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            if (cycles[i].size() == 2) half[i] = Rational(1, 2);
        }
        CHECK(is_dual_feasible(lp, half));
        CHECK(dual_objective(lp, half) >= s.value);

        CHECK(is_dual_feasible(lp, s.dual));
        CHECK(dual_objective(lp, s.dual) == s.value);
    }
}

TEST_CASE("sum_gdof scales linearly with the strengths")
{
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        StrengthMatrix m = testgen::random_strict_tin(rng, 4);
        Rational c = testgen::random_rational(rng, 3, 5);
        if (sgn(c) == 0) c = Rational(2, 3);
        CHECK(sum_gdof(m.scaled(c)).value == c * sum_gdof(m).value);
    }
}

TEST_CASE("nonnegativity is redundant on strictly TIN matrices")
{
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        StrengthMatrix m = testgen::random_strict_tin(rng, 2 + trial % 4);
        RedundancyCheck r = nonnegativity_redundancy_check(m);
        CHECK(r.equal);
        CHECK_FALSE(r.label.has_value());
    }
    StrengthMatrix diag(3, Mode::gdof, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(nonnegativity_redundancy_check(diag).equal);

    RedundancyCheck edge = nonnegativity_redundancy_check(fixtures::example1().channel(0));
    REQUIRE(edge.label.has_value());
    CHECK(*edge.label == "continuity regime, equality expected in the limit");
}
