#pragma once

#include "tinsep/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tinsep {

/// Gaussian networks carry GDoF strength exponents (alpha); deterministic
/// networks carry integer bit-shift levels (n).
enum class Mode { gdof, deterministic };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// K x K channel strengths of one sub-channel. Entry (rx, tx) is the strength
/// of the link from transmitter `tx` to receiver `rx`; users are 0-based.
/// Negative entries are clamped to zero on construction.
class StrengthMatrix
{
public:
    StrengthMatrix(int users, Mode mode, std::vector<Rational> row_major);

    int users() const { return users_; }
    Mode mode() const { return mode_; }
    bool deterministic() const { return mode_ == Mode::deterministic; }

    const Rational& at(int rx, int tx) const { return entries_[index(rx, tx)]; }

    /// Integer level of a deterministic matrix. Throws InputError in gdof mode.
    long level(int rx, int tx) const;

    /// Number of negative inputs that were clamped to zero.
    int clamped_entries() const { return clamped_; }

    Rational diagonal_sum() const;

    /// Strongest interference caused by `user` (max over other receivers).
    Rational max_outgoing(int user) const;
    /// Strongest interference suffered by `user` (max over other transmitters).
    Rational max_incoming(int user) const;

    /// Simultaneous relabeling: new user k is old user perm[k].
    StrengthMatrix relabeled(std::span<const int> perm) const;
    StrengthMatrix scaled(const Rational& factor) const;
    /// Sub-network on the listed users, in the listed order.
    StrengthMatrix restricted(std::span<const int> subset) const;

    const std::vector<Rational>& entries() const { return entries_; }

    /// Compares strengths only; construction history (clamping) is ignored.
    friend bool operator==(const StrengthMatrix& a, const StrengthMatrix& b)
    {
        return a.users_ == b.users_ && a.mode_ == b.mode_ && a.entries_ == b.entries_;
    }

private:
    std::size_t index(int rx, int tx) const
    {
        return static_cast<std::size_t>(rx) * static_cast<std::size_t>(users_) + static_cast<std::size_t>(tx);
    }

    int users_;
    Mode mode_;
    std::vector<Rational> entries_;
    int clamped_ = 0;
};

/// M parallel sub-channels over the same K users and mode.
class ParallelNetwork
{
public:
    explicit ParallelNetwork(std::vector<StrengthMatrix> channels);

    int users() const { return channels_.front().users(); }
    int subchannels() const { return static_cast<int>(channels_.size()); }
    Mode mode() const { return channels_.front().mode(); }

    const StrengthMatrix& channel(int m) const { return channels_.at(static_cast<std::size_t>(m)); }
    const std::vector<StrengthMatrix>& channels() const { return channels_; }

    friend bool operator==(const ParallelNetwork&, const ParallelNetwork&) = default;

private:
    std::vector<StrengthMatrix> channels_;
};

struct TinViolation
{
    int user;
    Rational max_incoming;
    Rational max_outgoing;
    Rational desired;
};

struct TinVerdict
{
    bool holds = true;
    bool strict = true;
    std::vector<TinViolation> violations;
};

/// Per user i: desired(i,i) >= max_{j!=i} (j,i) + max_{k!=i} (i,k).
TinVerdict check_tin(const StrengthMatrix& matrix);

/// Deterministic levels n = floor(alpha * log2P / 2). `log2_power` is log2 of
/// the nominal power and must be positive (P > 1).
StrengthMatrix quantize(const StrengthMatrix& matrix, const Rational& log2_power);
ParallelNetwork quantize(const ParallelNetwork& network, const Rational& log2_power);

}  // namespace tinsep
