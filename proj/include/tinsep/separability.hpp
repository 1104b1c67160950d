#pragma once

#include "tinsep/cycles.hpp"
#include "tinsep/detmodel.hpp"
#include "tinsep/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tinsep {

struct ChannelSeparability
{
    TinVerdict tin;
    PartitionBound best;
    bool invertible = false;
    /// "exact-gf2", "sufficient-condition" or "not required (M = 1)".
    std::string basis;
    std::string detail;
    /// Present for deterministic networks with M > 1.
    std::optional<InvertibilityVerdict> gf2;
};

struct SeparabilityVerdict
{
    std::vector<ChannelSeparability> channels;
    bool separable = false;
    /// Sum over sub-channels of the per-channel values; set when separable.
    std::optional<Rational> total;
    std::string conclusion;
    std::vector<std::string> failing_premises;
};

/// Separate TIN over the sub-channels is sum-optimal when every sub-channel is
/// TIN optimal and invertible. Deterministic networks are decided by GF(2)
/// rank; gdof networks only through sufficient conditions (a trivial or
/// dominant optimal partition, or the 3-user inequality on the strengths).
SeparabilityVerdict separability_verdict(const ParallelNetwork& network);

}  // namespace tinsep
