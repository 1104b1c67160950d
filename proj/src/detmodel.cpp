#include "tinsep/detmodel.hpp"

#include "tinsep/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tinsep {

namespace {

void require_deterministic(const StrengthMatrix& matrix, const char* what)
{
    if (!matrix.deterministic()) throw InputError(std::string(what) + " needs a deterministic network");
}

void require_partition(const StrengthMatrix& matrix, const CyclicPartition& partition)
{
    if (partition.users() != matrix.users()) {
        throw InputError("partition covers " + std::to_string(partition.users()) + " users, network has "
                         + std::to_string(matrix.users()));
    }
}

long checked_level(const StrengthMatrix& matrix, int rx, int tx)
{
    long n = matrix.level(rx, tx);
    if (n > kLevelLimit) {
        throw GuardError("level " + std::to_string(n) + " exceeds the bit-level limit " + std::to_string(kLevelLimit));
    }
    return n;
}

}  // namespace

std::vector<BitVector> channel_output(const StrengthMatrix& matrix, const std::vector<BitVector>& inputs)
{
    require_deterministic(matrix, "channel evaluation");
    const int k_users = matrix.users();
    if (static_cast<int>(inputs.size()) != k_users) throw InputError("one input bit vector per user is required");

    std::vector<BitVector> out(static_cast<std::size_t>(k_users));
    for (int k = 0; k < k_users; ++k) {
        long width = 0;
        for (int i = 0; i < k_users; ++i) width = std::max(width, checked_level(matrix, k, i));
        BitVector y(static_cast<std::size_t>(width), 0);
        for (int i = 0; i < k_users; ++i) {
            const long n = matrix.level(k, i);
            const auto& x = inputs[static_cast<std::size_t>(i)];
            for (long b = 1; b <= n && b <= static_cast<long>(x.size()); ++b) {
                y[static_cast<std::size_t>(n - b)] ^= x[static_cast<std::size_t>(b - 1)] & 1u;
            }
        }
        out[static_cast<std::size_t>(k)] = std::move(y);
    }
    return out;
}

ParticipatingLevels participating_levels(const StrengthMatrix& matrix, const CyclicPartition& partition)
{
    require_deterministic(matrix, "participating levels");
    require_partition(matrix, partition);
    const int k_users = matrix.users();

    ParticipatingLevels pl;
    pl.input_bits.assign(static_cast<std::size_t>(k_users), 0);
    for (int i = 0; i < k_users; ++i) {
        if (auto p = partition.predecessor(i)) pl.input_bits[static_cast<std::size_t>(i)] = static_cast<int>(checked_level(matrix, *p, i));
    }
    pl.outputs.resize(static_cast<std::size_t>(k_users));
    for (int k = 0; k < k_users; ++k) {
        std::map<long, std::vector<InputBit>, std::greater<>> levels;
        for (int i = 0; i < k_users; ++i) {
            if (i == k) continue;
            const long n = checked_level(matrix, k, i);
            for (int b = 1; b <= pl.input_bits[static_cast<std::size_t>(i)] && b <= n; ++b) {
                levels[n - b].push_back({i, b});
            }
        }
        for (auto& [pos, bits] : levels) pl.outputs[static_cast<std::size_t>(k)].push_back({pos, std::move(bits)});
    }
    return pl;
}

Gf2System build_gf2_system(const StrengthMatrix& matrix, const CyclicPartition& partition)
{
    ParticipatingLevels pl = participating_levels(matrix, partition);
    std::size_t total = 0;
    for (int n : pl.input_bits) total += static_cast<std::size_t>(n);
    if (total > kParticipatingBitLimit) {
        throw GuardError(std::to_string(total) + " participating bits exceed the elimination limit "
                         + std::to_string(kParticipatingBitLimit));
    }

    std::vector<InputBit> columns;
    std::map<InputBit, std::size_t> col_of;
    for (int i = 0; i < matrix.users(); ++i) {
        for (int b = 1; b <= pl.input_bits[static_cast<std::size_t>(i)]; ++b) {
            col_of[{i, b}] = columns.size();
            columns.push_back({i, b});
        }
    }
    std::vector<std::pair<int, long>> rows;
    for (int k = 0; k < matrix.users(); ++k) {
        for (const auto& level : pl.outputs[static_cast<std::size_t>(k)]) rows.emplace_back(k, level.position);
    }

    BitMatrix a(rows.size(), columns.size());
    std::size_t r = 0;
    for (int k = 0; k < matrix.users(); ++k) {
        for (const auto& level : pl.outputs[static_cast<std::size_t>(k)]) {
            for (const auto& bit : level.contributors) a.set(r, col_of.at(bit));
            ++r;
        }
    }
    std::size_t rank = a.rank();
    return {std::move(columns), std::move(rows), std::move(a), rank};
}

InvertibilityCertificate invertible_gf2(const StrengthMatrix& matrix, const CyclicPartition& partition)
{
    Gf2System sys = build_gf2_system(matrix, partition);
    InvertibilityCertificate cert{partition, sys.rows.size(), sys.columns.size(), sys.rank, false, sys.columns, std::nullopt};
    cert.invertible = sys.rank == sys.columns.size();
    if (!cert.invertible) cert.kernel = sys.matrix.kernel_vector();
    return cert;
}

bool verify_kernel(const StrengthMatrix& matrix, const InvertibilityCertificate& certificate)
{
    if (!certificate.kernel || certificate.kernel->size() != certificate.columns.size()) return false;
    const int k_users = matrix.users();
    std::vector<BitVector> inputs(static_cast<std::size_t>(k_users));
    bool any = false;
    for (std::size_t c = 0; c < certificate.columns.size(); ++c) {
        if (!(*certificate.kernel)[c]) continue;
        any = true;
        const auto& bit = certificate.columns[c];
        auto& x = inputs[static_cast<std::size_t>(bit.user)];
        if (x.size() < static_cast<std::size_t>(bit.bit)) x.resize(static_cast<std::size_t>(bit.bit), 0);
        x[static_cast<std::size_t>(bit.bit - 1)] = 1;
    }
    if (!any) return false;

    std::vector<Rational> cross(matrix.entries());
    for (int k = 0; k < k_users; ++k) cross[static_cast<std::size_t>(k * k_users + k)] = 0;
    for (const auto& y : channel_output(StrengthMatrix(k_users, Mode::deterministic, std::move(cross)), inputs)) {
        for (auto b : y) {
            if (b) return false;
        }
    }
    return true;
}

InvertibilityVerdict invertibility_verdict(const StrengthMatrix& matrix)
{
    require_deterministic(matrix, "invertibility");
    InvertibilityVerdict verdict;
    for (const auto& best : optimal_partitions(matrix)) {
        verdict.certificates.push_back(invertible_gf2(matrix, best.partition));
        if (verdict.certificates.back().invertible && !verdict.witness) verdict.witness = verdict.certificates.size() - 1;
    }
    verdict.invertible = verdict.witness.has_value();
    return verdict;
}

bool check_3user_condition(const StrengthMatrix& matrix)
{
    if (matrix.users() != 3) {
        throw InputError("the 3-user condition needs K = 3 (got K = " + std::to_string(matrix.users()) + ")");
    }
    Rational forward = matrix.at(0, 1) + matrix.at(1, 2) + matrix.at(2, 0);
    Rational backward = matrix.at(1, 0) + matrix.at(2, 1) + matrix.at(0, 2);
    return forward != backward;
}

bool bipartite_acyclic(const StrengthMatrix& matrix, const CyclicPartition& partition)
{
    Gf2System sys = build_gf2_system(matrix, partition);
    const std::size_t cols = sys.columns.size();
    std::vector<std::size_t> parent(cols + sys.rows.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (!sys.matrix.get(r, c)) continue;
            std::size_t a = find(c);
            std::size_t b = find(cols + r);
            if (a == b) return false;
            parent[a] = b;
        }
    }
    return true;
}

bool dominant_partition_check(const StrengthMatrix& matrix, const CyclicPartition& partition)
{
    require_partition(matrix, partition);
    for (int k = 0; k < matrix.users(); ++k) {
        auto p = partition.predecessor(k);
        if (!p) continue;
        for (int j = 0; j < matrix.users(); ++j) {
            if (j == k || j == *p) continue;
            if (!(matrix.at(*p, k) > matrix.at(j, k))) return false;
        }
    }
    return true;
}

long PowerControlScheme::total_rate() const
{
    return std::accumulate(rates.begin(), rates.end(), 0L);
}

bool tin_feasible(const StrengthMatrix& matrix, const PowerControlScheme& scheme)
{
    require_deterministic(matrix, "power control");
    const int k_users = matrix.users();
    if (static_cast<int>(scheme.offsets.size()) != k_users || static_cast<int>(scheme.rates.size()) != k_users) {
        throw InputError("power-control scheme needs one offset and one rate per user");
    }
    for (int k = 0; k < k_users; ++k) {
        const long delta = scheme.offsets[static_cast<std::size_t>(k)];
        const long rate = scheme.rates[static_cast<std::size_t>(k)];
        if (delta < 0 || rate < 0) return false;
        const long top = matrix.level(k, k) - delta;
        if (rate > top) return false;
        long interference = 0;
        for (int j = 0; j < k_users; ++j) {
            if (j == k) continue;
            interference = std::max(interference, matrix.level(k, j) - scheme.offsets[static_cast<std::size_t>(j)]);
        }
        if (top - rate < interference) return false;
    }
    return true;
}

PowerControlScheme best_tin_scheme(const StrengthMatrix& matrix)
{
    require_deterministic(matrix, "power control");
    const int k_users = matrix.users();
    const auto n = static_cast<std::size_t>(k_users);

    std::vector<long> limit(n, 0);
    unsigned long long space = 1;
    for (int k = 0; k < k_users; ++k) {
        for (int j = 0; j < k_users; ++j) {
            if (j != k) limit[static_cast<std::size_t>(k)] = std::max(limit[static_cast<std::size_t>(k)], matrix.level(j, k));
        }
        const auto span = static_cast<unsigned long long>(limit[static_cast<std::size_t>(k)]) + 1;
        if (space > kSchemeSearchLimit / span) {
            throw GuardError("power-control search space exceeds " + std::to_string(kSchemeSearchLimit) + " offset vectors");
        }
        space *= span;
    }

    std::optional<PowerControlScheme> best;
    PowerControlScheme cur{std::vector<long>(n, 0), std::vector<long>(n, 0)};
    while (true) {
        bool ok = true;
        for (int k = 0; k < k_users && ok; ++k) {
            long interference = 0;
            for (int j = 0; j < k_users; ++j) {
                if (j != k) interference = std::max(interference, matrix.level(k, j) - cur.offsets[static_cast<std::size_t>(j)]);
            }
            long rate = matrix.level(k, k) - cur.offsets[static_cast<std::size_t>(k)] - interference;
            if (rate < 0) ok = false;
            cur.rates[static_cast<std::size_t>(k)] = rate;
        }
        if (ok && (!best || cur.total_rate() > best->total_rate())) best = cur;

        // Odometer over offsets, last user fastest, so visits are in lexicographic order.
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (cur.offsets[pos] < limit[pos]) {
                ++cur.offsets[pos];
                break;
            }
            cur.offsets[pos] = 0;
            if (pos == 0) {
                pos = n + 1;
                break;
            }
        }
        if (pos == n + 1 || n == 0) break;
    }
    if (!best) throw InputError("no TIN power-control scheme exists for this network; is it TIN optimal?");
    return *best;
}

}  // namespace tinsep
