#include "tinsep/model.hpp"

#include "tinsep/errors.hpp"

#include <climits>

namespace tinsep {

std::string_view to_string(Mode mode)
{
    return mode == Mode::gdof ? "gdof" : "deterministic";
}

Mode parse_mode(std::string_view text)
{
    if (text == "gdof") return Mode::gdof;
    if (text == "deterministic") return Mode::deterministic;
    throw InputError("unknown mode \"" + std::string(text) + "\" (expected \"gdof\" or \"deterministic\")");
}

StrengthMatrix::StrengthMatrix(int users, Mode mode, std::vector<Rational> row_major)
    : users_(users), mode_(mode), entries_(std::move(row_major))
{
    if (users_ < 1) throw InputError("at least one user is required");
    if (entries_.size() != static_cast<std::size_t>(users_) * static_cast<std::size_t>(users_)) {
        throw InputError("non-square matrix: expected " + std::to_string(users_ * users_) + " entries, got "
                         + std::to_string(entries_.size()));
    }
    for (auto& e : entries_) {
        if (sgn(e) < 0) {
            e = 0;
            ++clamped_;
        }
        if (mode_ == Mode::deterministic && !is_integer(e)) {
            throw InputError("non-integer deterministic entry " + to_string(e));
        }
    }
}

long StrengthMatrix::level(int rx, int tx) const
{
    if (mode_ != Mode::deterministic) throw InputError("integer levels require a deterministic matrix");
    const Rational& e = at(rx, tx);
    if (!e.get_num().fits_slong_p()) throw InputError("level out of range: " + to_string(e));
    return e.get_num().get_si();
}

Rational StrengthMatrix::diagonal_sum() const
{
    Rational s = 0;
    for (int k = 0; k < users_; ++k) s += at(k, k);
    return s;
}

Rational StrengthMatrix::max_outgoing(int user) const
{
    Rational m = 0;
    for (int j = 0; j < users_; ++j) {
        if (j != user && at(j, user) > m) m = at(j, user);
    }
    return m;
}

Rational StrengthMatrix::max_incoming(int user) const
{
    Rational m = 0;
    for (int k = 0; k < users_; ++k) {
        if (k != user && at(user, k) > m) m = at(user, k);
    }
    return m;
}

StrengthMatrix StrengthMatrix::relabeled(std::span<const int> perm) const
{
    if (perm.size() != static_cast<std::size_t>(users_)) throw InputError("relabeling has the wrong size");
    std::vector<Rational> out;
    out.reserve(entries_.size());
    for (int r = 0; r < users_; ++r) {
        for (int c = 0; c < users_; ++c) out.push_back(at(perm[r], perm[c]));
    }
    return StrengthMatrix(users_, mode_, std::move(out));
}

StrengthMatrix StrengthMatrix::scaled(const Rational& factor) const
{
    std::vector<Rational> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.emplace_back(e * factor);
    return StrengthMatrix(users_, mode_, std::move(out));
}

StrengthMatrix StrengthMatrix::restricted(std::span<const int> subset) const
{
    std::vector<Rational> out;
    out.reserve(subset.size() * subset.size());
    for (int r : subset) {
        for (int c : subset) out.push_back(at(r, c));
    }
    return StrengthMatrix(static_cast<int>(subset.size()), mode_, std::move(out));
}

ParallelNetwork::ParallelNetwork(std::vector<StrengthMatrix> channels) : channels_(std::move(channels))
{
    if (channels_.empty()) throw InputError("M >= 1 required: the network has no sub-channels");
    for (std::size_t m = 1; m < channels_.size(); ++m) {
        if (channels_[m].users() != channels_[0].users()) {
            throw InputError("sub-channel " + std::to_string(m + 1) + " has " + std::to_string(channels_[m].users())
                             + " users, expected " + std::to_string(channels_[0].users()));
        }
        if (channels_[m].mode() != channels_[0].mode()) {
            throw InputError("mixed modes: sub-channel " + std::to_string(m + 1) + " is "
                             + std::string(to_string(channels_[m].mode())) + ", sub-channel 1 is "
                             + std::string(to_string(channels_[0].mode())));
        }
    }
}

TinVerdict check_tin(const StrengthMatrix& matrix)
{
    TinVerdict verdict;
    for (int i = 0; i < matrix.users(); ++i) {
        Rational out = matrix.max_outgoing(i);
        Rational in = matrix.max_incoming(i);
        Rational need = out + in;
        const Rational& desired = matrix.at(i, i);
        if (desired < need) {
            verdict.holds = false;
            verdict.violations.push_back({i, in, out, desired});
        }
        if (!(desired > need)) verdict.strict = false;
    }
    return verdict;
}

StrengthMatrix quantize(const StrengthMatrix& matrix, const Rational& log2_power)
{
    if (sgn(log2_power) <= 0) throw InputError("quantization needs P > 1 (log2 P > 0), got log2 P = " + to_string(log2_power));
    if (matrix.mode() != Mode::gdof) throw InputError("only gdof matrices can be quantized");
    std::vector<Rational> levels;
    levels.reserve(matrix.entries().size());
    Rational half_log = log2_power / 2;
    for (const auto& a : matrix.entries()) levels.emplace_back(floor(a * half_log));
    return StrengthMatrix(matrix.users(), Mode::deterministic, std::move(levels));
}

ParallelNetwork quantize(const ParallelNetwork& network, const Rational& log2_power)
{
    std::vector<StrengthMatrix> out;
    for (const auto& ch : network.channels()) out.push_back(quantize(ch, log2_power));
    return ParallelNetwork(std::move(out));
}

}  // namespace tinsep
