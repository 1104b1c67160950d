#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tinsep {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix
{
public:
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c);

    std::size_t rank() const;

    /// A nonzero x with A x = 0, or nothing when the columns are independent.
    std::optional<std::vector<std::uint8_t>> kernel_vector() const;

    /// A x over GF(2); `x` has one 0/1 entry per column.
    std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& x) const;

private:
    std::size_t words() const { return (cols_ + 63) / 64; }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> data_;
};

}  // namespace tinsep
