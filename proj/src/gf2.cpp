#include "tinsep/gf2.hpp"

#include "tinsep/errors.hpp"

namespace tinsep {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * ((cols + 63) / 64), 0)
{
}

bool BitMatrix::get(std::size_t r, std::size_t c) const
{
    return (data_[r * words() + c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value)
{
    std::uint64_t bit = std::uint64_t{1} << (c % 64);
    auto& w = data_[r * words() + c / 64];
    w = value ? (w | bit) : (w & ~bit);
}

void BitMatrix::flip(std::size_t r, std::size_t c)
{
    data_[r * words() + c / 64] ^= std::uint64_t{1} << (c % 64);
}

namespace {

// Row-reduces in place; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(std::vector<std::uint64_t>& d, std::size_t rows, std::size_t cols, std::size_t words)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        const std::size_t wi = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t found = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (d[i * words + wi] & bit) {
                found = i;
                break;
            }
        }
        if (found == rows) continue;
        if (found != r) {
            for (std::size_t w = 0; w < words; ++w) std::swap(d[found * words + w], d[r * words + w]);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && (d[i * words + wi] & bit)) {
                for (std::size_t w = 0; w < words; ++w) d[i * words + w] ^= d[r * words + w];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t BitMatrix::rank() const
{
    auto d = data_;
    return reduce(d, rows_, cols_, words()).size();
}

std::optional<std::vector<std::uint8_t>> BitMatrix::kernel_vector() const
{
    auto d = data_;
    auto pivots = reduce(d, rows_, cols_, words());
    if (pivots.size() == cols_) return std::nullopt;

    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    // Set the first free variable, solve the reduced rows for the pivots.
    std::vector<std::uint8_t> x(cols_, 0);
    x[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if ((d[i * words() + free_col / 64] >> (free_col % 64)) & 1u) x[pivots[i]] = 1;
    }
    return x;
}

std::vector<std::uint8_t> BitMatrix::apply(const std::vector<std::uint8_t>& x) const
{
    if (x.size() != cols_) throw InputError("GF(2) vector length does not match the matrix");
    std::vector<std::uint8_t> y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint8_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (x[c] && get(r, c)) acc ^= 1u;
        }
        y[r] = acc;
    }
    return y;
}

}  // namespace tinsep
