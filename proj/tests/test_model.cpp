#include "support/generators.hpp"
#include "support/oracles.hpp"

#include "tinsep/errors.hpp"
#include "tinsep/fixtures.hpp"
#include "tinsep/model.hpp"
#include "tinsep/network_io.hpp"

#include <doctest.h>

using namespace tinsep;
using nlohmann::json;

namespace {

StrengthMatrix levels(int k, std::vector<long> v)
{
    return StrengthMatrix(k, Mode::deterministic, std::vector<Rational>(v.begin(), v.end()));
}

StrengthMatrix alphas(int k, std::vector<Rational> v)
{
    return StrengthMatrix(k, Mode::gdof, std::move(v));
}

std::string load_error(const json& doc)
{
    try {
        load_network(doc);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("rationals parse from fractions, integers and decimals")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-0.2") == Rational(-1, 5));
    CHECK(parse_rational("7") == 7);
    CHECK(to_string(ratio(6, 4)) == "3/2");
    CHECK(to_string(ratio(-4, 2)) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK(parse_rational_list("2,1/2,1/2") == std::vector<Rational>{2, Rational(1, 2), Rational(1, 2)});
    CHECK(tinsep::floor(Rational(-1, 3)) == -1);
}

TEST_CASE("matrix construction clamps negatives and validates shape")
{
    StrengthMatrix m = alphas(2, {1, Rational(-1, 5), 0, 1});
    CHECK(m.at(0, 1) == 0);
    CHECK(m.clamped_entries() == 1);
    CHECK_THROWS_AS(alphas(2, {1, 2, 3}), InputError);
    CHECK_THROWS_AS(StrengthMatrix(2, Mode::deterministic, {1, Rational(1, 2), 0, 1}), InputError);
    CHECK_THROWS_AS(StrengthMatrix(0, Mode::gdof, {}), InputError);
    CHECK_THROWS_WITH_AS(ParallelNetwork({}), doctest::Contains("M >= 1 required"), InputError);
    CHECK_THROWS_WITH_AS(ParallelNetwork({alphas(1, {1}), levels(1, {1})}), doctest::Contains("mixed modes"), InputError);
    CHECK_THROWS_AS(ParallelNetwork({alphas(1, {1}), alphas(2, {1, 0, 0, 1})}), InputError);
}

TEST_CASE("check_tin: user 2 of the first example sub-channel meets the condition with equality")
{
    StrengthMatrix m = fixtures::example1().channel(0);
    TinVerdict v = check_tin(m);
    CHECK(v.holds);
    CHECK_FALSE(v.strict);
    CHECK(m.max_outgoing(1) == 2);
    CHECK(m.max_incoming(1) == 1);
    CHECK(m.at(1, 1) == m.max_outgoing(1) + m.max_incoming(1));
}

TEST_CASE("check_tin: diagonal matrix holds strictly; K = 1 is legal")
{
    TinVerdict v = check_tin(alphas(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(v.holds);
    CHECK(v.strict);
    CHECK(check_tin(alphas(1, {0})).holds);
    CHECK_FALSE(check_tin(alphas(1, {0})).strict);
    CHECK(check_tin(alphas(1, {Rational(1, 3)})).strict);
}

TEST_CASE("check_tin: planted violations match the triple-scan oracle")
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        StrengthMatrix base = testgen::random_strict_tin(rng, 4);
        std::vector<Rational> e = base.entries();
        // alpha_11 < alpha_21 + alpha_13
        e[0] = e[4] + e[2] - Rational(1, 7);
        if (sgn(e[0]) < 0) e[0] = 0;
        StrengthMatrix m(4, Mode::gdof, e);
        TinVerdict v = check_tin(m);
        std::vector<int> listed;
        for (const auto& x : v.violations) listed.push_back(x.user);
        CHECK(listed == oracle::tin_violators(m));
        CHECK(v.holds == v.violations.empty());
        if (e[4] + e[2] > Rational(1, 7)) {
            REQUIRE_FALSE(v.violations.empty());
            CHECK(v.violations.front().user == 0);
        }
    }
}

TEST_CASE("check_tin is invariant under simultaneous relabeling")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        StrengthMatrix m = testgen::random_levels(rng, 4, 4);
        auto perm = testgen::random_permutation(rng, 4);
        StrengthMatrix r = m.relabeled(perm);
        TinVerdict a = check_tin(m), b = check_tin(r);
        CHECK(a.holds == b.holds);
        CHECK(a.strict == b.strict);
        std::vector<int> va, vb;
        for (const auto& x : a.violations) va.push_back(x.user);
        for (const auto& x : b.violations) vb.push_back(perm[static_cast<std::size_t>(x.user)]);
        std::sort(vb.begin(), vb.end());
        CHECK(va == vb);
    }
}

TEST_CASE("quantize floors alpha log2P / 2 exactly")
{
    CHECK(quantize(alphas(1, {1}), 6).level(0, 0) == 3);
    CHECK(quantize(alphas(1, {0}), 6).level(0, 0) == 0);
    CHECK(quantize(alphas(1, {Rational(2, 3)}), 10).level(0, 0) == 3);
    CHECK(quantize(alphas(1, {Rational(1, 2)}), Rational(7, 2)).level(0, 0) == 0);
    CHECK_THROWS_AS(quantize(alphas(1, {1}), 0), InputError);
    CHECK_THROWS_AS(quantize(alphas(1, {1}), -3), InputError);
    CHECK_THROWS_AS(quantize(levels(1, {1}), 6), InputError);
}

TEST_CASE("quantization of a strictly TIN matrix is TIN once log2P >= 2 / slack")
{
    // floor loses less than one level per entry, so a strict slack s survives
    // whenever s * log2P / 2 >= 1.
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        StrengthMatrix a = testgen::random_strict_tin(rng, 3);
        Rational slack = -1;
        for (int i = 0; i < 3; ++i) {
            Rational s = a.at(i, i) - a.max_outgoing(i) - a.max_incoming(i);
            if (slack < 0 || s < slack) slack = s;
        }
        Rational threshold = 2 / slack;
        bool all_after = true;
        for (int step = 1; step <= 60; ++step) {
            Rational log2p = ratio(step * 7, 3);
            bool tin = check_tin(quantize(a, log2p)).holds;
            if (log2p >= threshold) all_after = all_after && tin;
        }
        CHECK(all_after);
    }
}

TEST_CASE("load_network: fixture documents parse and match the in-code fixtures")
{
    const std::string dir = std::string(TINSEP_SOURCE_DIR) + "/fixtures/";
    NetworkDocument ex1 = load_network_file(dir + "example1.json");
    CHECK(ex1.network.users() == 3);
    CHECK(ex1.network.subchannels() == 3);
    CHECK(ex1.network == fixtures::example1());
    CHECK(ex1.fixture == "example1");
    CHECK(load_network_file(dir + "example2.json").network == fixtures::example2());
    CHECK(load_network_file(dir + "gap.json").network == fixtures::gap(fixtures::default_epsilon()));
    CHECK(load_network_file(dir + "figure5a.json").network == fixtures::figure5a());
    CHECK(load_network_file(dir + "figure6.json").network == fixtures::figure6());
    for (const auto& tag : fixtures::tags()) CHECK(fixtures::by_tag(tag).has_value());
    CHECK_FALSE(fixtures::by_tag("nope").has_value());
}

TEST_CASE("load_network: each failure has its own diagnostic")
{
    json ok = json::parse(R"({"mode": "gdof", "users": 2, "subchannels": 1, "matrices": [[["1", "0"], ["0", "1"]]]})");
    CHECK(load_error(ok).empty());

    json empty = ok;
    empty["matrices"] = json::array();
    empty["subchannels"] = 0;
    CHECK(load_error(empty).find("M >= 1 required") != std::string::npos);

    json missing = ok;
    missing.erase("users");
    CHECK(load_error(missing).find("malformed network document") != std::string::npos);

    json floats = ok;
    floats["matrices"][0][0][0] = 0.5;
    CHECK(load_error(floats).find("malformed network document") != std::string::npos);

    json ragged = ok;
    ragged["matrices"][0][1] = json::parse(R"(["1"])");
    CHECK(load_error(ragged).find("non-square matrix") != std::string::npos);

    json mixed = ok;
    mixed["subchannels"] = 2;
    mixed["matrices"].push_back(json::parse(R"({"mode": "deterministic", "entries": [1, 0, 0, 1]})"));
    CHECK(load_error(mixed).find("mixed modes") != std::string::npos);

    json fractional = json::parse(R"({"mode": "deterministic", "users": 1, "subchannels": 1, "matrices": [[["3/2"]]]})");
    CHECK(load_error(fractional).find("non-integer deterministic entry") != std::string::npos);

    json flat = ok;
    flat["matrices"] = json::parse(R"([["1", "1/4", "1/4", "1"]])");
    CHECK(load_network(flat).network.channel(0).at(0, 1) == Rational(1, 4));
}

TEST_CASE("load_network clamps negative gdof entries with a warning")
{
    json doc = json::parse(R"({"mode": "gdof", "users": 2, "subchannels": 1, "matrices": [[["1", "-0.2"], ["0", "1"]]]})");
    NetworkDocument d = load_network(doc);
    CHECK(d.network.channel(0).at(0, 1) == 0);
    REQUIRE(d.warnings.size() == 1);
    CHECK(d.warnings[0].find("clamped to 0") != std::string::npos);
}

TEST_CASE("save_network / load_network round-trips exactly")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<StrengthMatrix> chans;
        for (int m = 0; m < 3; ++m) chans.push_back(testgen::random_strict_tin(rng, 3));
        ParallelNetwork net(chans);
        json saved = save_network(net, "x");
        NetworkDocument back = load_network(saved);
        CHECK(back.network == net);
        CHECK(save_network(back.network, "x") == saved);
    }
    ParallelNetwork det = fixtures::example1();
    CHECK(load_network(save_network(det)).network == det);

    // Clamping is idempotent: a saved clamped network reloads identically.
    json neg = json::parse(R"({"mode": "gdof", "users": 1, "subchannels": 1, "matrices": [[["-1"]]]})");
    ParallelNetwork once = load_network(neg).network;
    NetworkDocument twice = load_network(save_network(once));
    CHECK(twice.network == once);
    CHECK(twice.warnings.empty());
}
