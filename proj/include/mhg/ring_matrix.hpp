#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace mhg {

using ResidueVector = std::vector<std::uint32_t>;

/// Dense row-major matrix over Z_d. Entries are stored reduced into [0, d).
class RingMatrix {
   public:
    RingMatrix(std::size_t rows, std::size_t cols, std::uint64_t d);
    /// Entries are reduced mod d; every row must have `cols` entries.
    RingMatrix(std::size_t rows, std::size_t cols, std::uint64_t d, std::vector<std::int64_t> entries);
    RingMatrix(std::uint64_t d, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static RingMatrix identity(std::size_t n, std::uint64_t d);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    std::uint64_t modulus() const {
        return d_;
    }

    std::uint32_t at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::int64_t value);

    std::span<const std::uint32_t> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    std::span<std::uint32_t> row(std::size_t r) {
        return {entries_.data() + r * cols_, cols_};
    }
    const std::vector<std::uint32_t> &entries() const {
        return entries_;
    }

    RingMatrix transpose() const;
    /// Same entries viewed mod a divisor of d.
    RingMatrix reduced(std::uint64_t divisor) const;
    /// [A | b] with b as an extra column.
    RingMatrix augmented(std::span<const std::uint32_t> b) const;

    ResidueVector multiply(std::span<const std::uint32_t> x) const;
    RingMatrix operator*(const RingMatrix &o) const;
    bool operator==(const RingMatrix &) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint64_t d_;
    std::vector<std::uint32_t> entries_;
};

/// Kronecker product a (x) b. Both operands must share a modulus.
RingMatrix kron(const RingMatrix &a, const RingMatrix &b);

}  // namespace mhg
