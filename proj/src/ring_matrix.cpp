#include "mhg/ring_matrix.hpp"

#include <stdexcept>
#include <string>

#include "mhg/errors.hpp"
#include "mhg/residue.hpp"

namespace mhg {

RingMatrix::RingMatrix(std::size_t rows, std::size_t cols, std::uint64_t d)
    : rows_(rows), cols_(cols), d_(Modulus(d).value()), entries_(rows * cols, 0) {
}

RingMatrix::RingMatrix(std::size_t rows, std::size_t cols, std::uint64_t d, std::vector<std::int64_t> entries)
    : RingMatrix(rows, cols, d) {
    if (entries.size() != rows * cols) {
        throw DimensionMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                                std::to_string(entries.size()));
    }
    for (std::size_t i = 0; i < entries.size(); i++) {
        entries_[i] = Residue(entries[i], d).value();
    }
}

RingMatrix::RingMatrix(std::uint64_t d, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : RingMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size(), d) {
    std::size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DimensionMismatch("ragged matrix literal");
        }
        std::size_t c = 0;
        for (auto v : row) {
            set(r, c++, v);
        }
        r++;
    }
}

RingMatrix RingMatrix::identity(std::size_t n, std::uint64_t d) {
    RingMatrix m(n, n, d);
    for (std::size_t i = 0; i < n; i++) {
        m.entries_[i * n + i] = 1;
    }
    return m;
}

void RingMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
    entries_[r * cols_ + c] = Residue(value, d_).value();
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix t(cols_, rows_, d_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            t.entries_[c * rows_ + r] = entries_[r * cols_ + c];
        }
    }
    return t;
}

RingMatrix RingMatrix::reduced(std::uint64_t divisor) const {
    if (divisor < 2 || d_ % divisor != 0) {
        throw std::invalid_argument("reduction modulus must divide " + std::to_string(d_));
    }
    RingMatrix m(rows_, cols_, divisor);
    for (std::size_t i = 0; i < entries_.size(); i++) {
        m.entries_[i] = static_cast<std::uint32_t>(entries_[i] % divisor);
    }
    return m;
}

RingMatrix RingMatrix::augmented(std::span<const std::uint32_t> b) const {
    if (b.size() != rows_) {
        throw DimensionMismatch("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                                std::to_string(rows_) + " rows");
    }
    RingMatrix m(rows_, cols_ + 1, d_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            m.entries_[r * (cols_ + 1) + c] = at(r, c);
        }
        m.entries_[r * (cols_ + 1) + cols_] = static_cast<std::uint32_t>(b[r] % d_);
    }
    return m;
}

ResidueVector RingMatrix::multiply(std::span<const std::uint32_t> x) const {
    if (x.size() != cols_) {
        throw DimensionMismatch("vector length " + std::to_string(x.size()) + " does not match " +
                                std::to_string(cols_) + " columns");
    }
    ResidueVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; r++) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; c++) {
            acc = (acc + std::uint64_t{at(r, c)} * (x[c] % d_)) % d_;
        }
        out[r] = static_cast<std::uint32_t>(acc);
    }
    return out;
}

RingMatrix RingMatrix::operator*(const RingMatrix &o) const {
    if (cols_ != o.rows_ || d_ != o.d_) {
        throw DimensionMismatch("incompatible matrix product");
    }
    RingMatrix m(rows_, o.cols_, d_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < o.cols_; c++) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < cols_; k++) {
                acc = (acc + std::uint64_t{at(r, k)} * o.at(k, c)) % d_;
            }
            m.entries_[r * o.cols_ + c] = static_cast<std::uint32_t>(acc);
        }
    }
    return m;
}

RingMatrix kron(const RingMatrix &a, const RingMatrix &b) {
    if (a.modulus() != b.modulus()) {
        throw DimensionMismatch("Kronecker product of matrices over different moduli");
    }
    const std::uint64_t d = a.modulus();
    RingMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), d);
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            const std::uint64_t s = a.at(ar, ac);
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    out.set(ar * b.rows() + br, ac * b.cols() + bc,
                            static_cast<std::int64_t>((s * b.at(br, bc)) % d));
                }
            }
        }
    }
    return out;
}

}  // namespace mhg
