#include "tinsep/fixtures.hpp"

#include "tinsep/errors.hpp"

namespace tinsep::fixtures {

namespace {

StrengthMatrix levels(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<Rational> entries;
    for (const auto& row : rows) {
        for (long v : row) entries.emplace_back(v);
    }
    return StrengthMatrix(static_cast<int>(rows.size()), Mode::deterministic, std::move(entries));
}

}  // namespace

ParallelNetwork example1()
{
    return ParallelNetwork({
        levels({{3, 2, 2}, {0, 3, 1}, {0, 0, 3}}),
        levels({{3, 0, 0}, {2, 3, 0}, {2, 1, 3}}),
        levels({{3, 1, 0}, {0, 3, 1}, {0, 2, 3}}),
    });
}

std::vector<CyclicPartition> example1_partitions()
{
    return {
        CyclicPartition::from_cycles(3, {Cycle({0, 1, 2})}),
        CyclicPartition::from_cycles(3, {Cycle({2, 1, 0})}),
        CyclicPartition::from_cycles(3, {Cycle({0}), Cycle({1, 2})}),
    };
}

ParallelNetwork example2()
{
    return ParallelNetwork({
        levels({{3, 2, 2}, {0, 3, 1}, {0, 0, 3}}),
        levels({{3, 0, 0}, {2, 3, 0}, {2, 1, 3}}),
        levels({{3, 1, 1}, {1, 3, 1}, {1, 1, 3}}),
    });
}

ParallelNetwork figure5a()
{
    return ParallelNetwork({levels({{3, 1, 0, 0}, {2, 3, 2, 1}, {2, 0, 5, 3}, {2, 0, 1, 5}})});
}

ParallelNetwork figure6()
{
    return ParallelNetwork({levels({{4, 3, 1, 1}, {0, 5, 2, 2}, {0, 2, 5, 3}, {1, 1, 1, 4}})});
}

Rational default_epsilon()
{
    return Rational(1, 10);
}

ParallelNetwork gap(const Rational& epsilon)
{
    if (sgn(epsilon) <= 0 || epsilon >= Rational(1, 2)) {
        throw InputError("epsilon must lie strictly between 0 and 1/2 (got " + to_string(epsilon) + ")");
    }
    const Rational half(1, 2);
    const Rational back = half - epsilon;
    // Forward links 1<-2, 2<-3, 3<-1 at 1/2 in both; sub-channel 2 adds the
    // reverse links at 1/2 - epsilon.
    std::vector<Rational> first = {1, half, 0, 0, 1, half, half, 0, 1};
    std::vector<Rational> second = {1, half, back, back, 1, half, half, back, 1};
    return ParallelNetwork({StrengthMatrix(3, Mode::gdof, std::move(first)), StrengthMatrix(3, Mode::gdof, std::move(second))});
}

LinearProgram caution_lp(bool nonnegative)
{
    LinearProgram lp({1, 1, 1}, nonnegative ? VarSign::nonnegative : VarSign::free);
    lp.add({1, 1, 0}, Relation::less_equal, 10);
    lp.add({1, 0, 1}, Relation::less_equal, 10);
    lp.add({0, 1, 1}, Relation::less_equal, 30);
    return lp;
}

std::vector<std::string> tags()
{
    return {"example1", "example2", "gap-counterexample", "figure5a", "figure6"};
}

std::optional<ParallelNetwork> by_tag(std::string_view tag)
{
    if (tag == "example1") return example1();
    if (tag == "example2") return example2();
    if (tag == "gap-counterexample") return gap(default_epsilon());
    if (tag == "figure5a") return figure5a();
    if (tag == "figure6") return figure6();
    return std::nullopt;
}

}  // namespace tinsep::fixtures
