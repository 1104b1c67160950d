#pragma once

#include "tinsep/cycles.hpp"
#include "tinsep/lp.hpp"
#include "tinsep/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tinsep::fixtures {

/// Three deterministic 3-user sub-channels, each with diagonal sum 9, best
/// partition weight 3 and a unique, invertible optimal partition.
ParallelNetwork example1();
/// The optimal partitions of example1's sub-channels: {1,2,3}, {3,2,1}, {1}{2,3}.
std::vector<CyclicPartition> example1_partitions();

/// example1 with sub-channel 3 replaced by a symmetric channel (diagonal 3,
/// every cross level 1) whose optimal partitions are all non-invertible.
ParallelNetwork example2();

/// 4-user single-channel fixtures: participating graph acyclic but not
/// dominant (5a), and dominant and invertible with a cyclic graph (6).
ParallelNetwork figure5a();
ParallelNetwork figure6();

Rational default_epsilon();

/// Two 3-user gdof sub-channels where (2, 1/2, 1/2) meets every combined sum
/// bound but cannot be split across the per-channel TIN regions.
/// Requires 0 < epsilon < 1/2.
ParallelNetwork gap(const Rational& epsilon);

/// max R1+R2+R3 s.t. R1+R2 <= 10, R1+R3 <= 10, R2+R3 <= 30.
LinearProgram caution_lp(bool nonnegative);

/// Tags accepted in a document's "fixture" field.
std::vector<std::string> tags();
std::optional<ParallelNetwork> by_tag(std::string_view tag);

}  // namespace tinsep::fixtures
