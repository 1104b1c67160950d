#pragma once

#include "tinsep/model.hpp"
#include "tinsep/rational.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace tinsep {

/// Predecessor arrays in reports are 1-based; 0 marks a trivial cycle.
std::vector<int> report_partition(const std::vector<int>& zero_based_pred);

struct SchemeSection
{
    std::vector<long> offsets;
    std::vector<long> rates;
    long total = 0;
};

struct SumSection
{
    Rational value;
    std::vector<int> partition;
    /// (method name, value) for each method that ran.
    std::vector<std::pair<std::string, Rational>> methods;
    std::optional<bool> methods_agree;
    std::optional<std::string> label;
    std::vector<Rational> lp_point;
    std::optional<SchemeSection> scheme;
};

struct RegionRow
{
    std::vector<int> users;  // 1-based, in cycle order
    Rational rhs;
};

struct RegionSection
{
    std::vector<RegionRow> constraints;
    std::string label;
};

struct MemberSection
{
    std::vector<Rational> tuple;
    bool inside = false;
    std::optional<std::string> violated;
};

struct CertificateSection
{
    std::vector<int> partition;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    bool invertible = false;
    /// Input bits set in the kernel witness, e.g. "X2(1)".
    std::optional<std::vector<std::string>> kernel;
};

struct InvertibilitySection
{
    bool invertible = false;
    std::string basis;
    std::string detail;
    std::vector<CertificateSection> certificates;
};

struct ChannelSection
{
    int index = 1;
    std::optional<TinVerdict> tin;
    std::optional<SumSection> sum;
    std::optional<RegionSection> region;
    std::optional<MemberSection> member;
    std::optional<InvertibilitySection> invertibility;
};

struct SubsetSection
{
    std::vector<int> users;  // 1-based
    std::vector<Rational> per_channel;
    Rational total;
};

struct CombinedSection
{
    std::vector<SubsetSection> subsets;
    bool tight = false;
    std::optional<std::string> label;
    std::optional<MemberSection> member;
};

struct DecompositionSection
{
    std::vector<Rational> tuple;
    bool feasible = false;
    std::vector<std::vector<Rational>> parts;
    /// Nonzero Farkas multipliers with the constraint each one weights.
    std::vector<std::pair<std::string, Rational>> refutation;
    bool certificate_verified = false;
};

struct SeparabilitySection
{
    bool separable = false;
    std::optional<Rational> total;
    std::string conclusion;
    std::vector<std::string> failing_premises;
};

struct AnalysisReport
{
    std::string command;
    Mode mode = Mode::gdof;
    int users = 0;
    int subchannels = 0;
    std::optional<std::string> fixture;
    std::optional<Rational> epsilon;
    std::optional<Rational> log2_power;
    std::vector<ChannelSection> channels;
    std::optional<CombinedSection> combined;
    std::optional<DecompositionSection> decomposition;
    std::optional<SeparabilitySection> separability;
    std::optional<Rational> total;
    std::vector<std::string> warnings;
};

/// Rationals are written as "p/q" strings; absent optionals are omitted.
nlohmann::ordered_json save_report(const AnalysisReport& report);
AnalysisReport load_report(const nlohmann::ordered_json& document);

void render_text(const AnalysisReport& report, std::ostream& out);

}  // namespace tinsep
