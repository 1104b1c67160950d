#pragma once

#include "tinsep/cycles.hpp"
#include "tinsep/gf2.hpp"
#include "tinsep/model.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tinsep {

/// Fractional input 0.b1 b2 b3 ...; element 0 holds b1, the most significant bit.
/// For channel outputs the same type holds integer bits, element p being the
/// coefficient of 2^p.
using BitVector = std::vector<std::uint8_t>;

/// Largest level accepted by bit-level evaluation.
inline constexpr long kLevelLimit = 1L << 16;
/// Largest participating-input count accepted by GF(2) elimination.
inline constexpr std::size_t kParticipatingBitLimit = 4096;
/// Largest number of offset vectors best_tin_scheme will visit.
inline constexpr unsigned long long kSchemeSearchLimit = 4'000'000ULL;

/// Y_k = XOR_i floor(2^{n_ki} X_i): input bit b of user i lands at position
/// n_ki - b when b <= n_ki. Returns one output per receiver, sized to the
/// receiver's largest incoming level.
std::vector<BitVector> channel_output(const StrengthMatrix& matrix, const std::vector<BitVector>& inputs);

/// Bit b (1-based, from the top) of user i's input.
struct InputBit
{
    int user;
    int bit;
    friend auto operator<=>(const InputBit&, const InputBit&) = default;
};

struct OutputLevel
{
    long position;
    std::vector<InputBit> contributors;
};

/// Under a cyclic partition user i sends its top n_{Pi(i) i} bits (none in a
/// trivial cycle). Receiver k sees the cross-link superposition of those bits;
/// its occupied positions are listed from the top down.
struct ParticipatingLevels
{
    std::vector<int> input_bits;
    std::vector<std::vector<OutputLevel>> outputs;
};

ParticipatingLevels participating_levels(const StrengthMatrix& matrix, const CyclicPartition& partition);

/// GF(2) map from participating input bits (user ascending, bit ascending)
/// to occupied output positions (receiver ascending, position descending).
struct Gf2System
{
    std::vector<InputBit> columns;
    std::vector<std::pair<int, long>> rows;
    BitMatrix matrix;
    std::size_t rank;
};

Gf2System build_gf2_system(const StrengthMatrix& matrix, const CyclicPartition& partition);

struct InvertibilityCertificate
{
    CyclicPartition partition;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    bool invertible = false;
    std::vector<InputBit> columns;
    /// Nonzero participating input that produces all-zero participating output.
    std::optional<std::vector<std::uint8_t>> kernel;
};

/// Injectivity of the participating-bit map, by GF(2) rank.
InvertibilityCertificate invertible_gf2(const StrengthMatrix& matrix, const CyclicPartition& partition);

/// Checks a kernel witness against the channel law itself: the witness bits
/// are nonzero, and driving them through the cross links cancels everywhere.
bool verify_kernel(const StrengthMatrix& matrix, const InvertibilityCertificate& certificate);

struct InvertibilityVerdict
{
    bool invertible = false;
    /// One certificate per optimal partition, in predecessor-array order.
    std::vector<InvertibilityCertificate> certificates;
    /// Index of the first invertible certificate.
    std::optional<std::size_t> witness;
};

/// Invertible iff some optimal cyclic partition is.
InvertibilityVerdict invertibility_verdict(const StrengthMatrix& matrix);

/// K = 3 only: n12 + n23 + n31 != n21 + n32 + n13. Accepts either mode.
bool check_3user_condition(const StrengthMatrix& matrix);

/// Whether the undirected graph of participating input bits and occupied
/// output positions (edge = cross-link contribution) is a forest.
bool bipartite_acyclic(const StrengthMatrix& matrix, const CyclicPartition& partition);

/// Every user k in a nontrivial cycle reaches its predecessor strictly more
/// strongly than any other receiver. Accepts either mode.
bool dominant_partition_check(const StrengthMatrix& matrix, const CyclicPartition& partition);

/// Transmitter k backs off `offsets[k]` levels from the top and sends
/// `rates[k]` bits directly below that.
struct PowerControlScheme
{
    std::vector<long> offsets;
    std::vector<long> rates;

    long total_rate() const;
};

/// R_k <= n_kk - offset_k and n_kk - offset_k - R_k >= max_{j!=k} max(n_kj - offset_j, 0).
bool tin_feasible(const StrengthMatrix& matrix, const PowerControlScheme& scheme);

/// Exhaustive search over offsets 0..max_j n_jk, each user taking the largest
/// rate its residual interference allows. Ties go to the lexicographically
/// smallest offsets.
PowerControlScheme best_tin_scheme(const StrengthMatrix& matrix);

}  // namespace tinsep
