#pragma once

// Exact linear systems A x = b over GF(q) and Z_d.
//
// Two independent routes: Gauss-Jordan elimination over a prime field, and a
// Smith-style diagonalization U A V = D by unimodular integer transforms that
// works for any modulus. For prime moduli both must produce the same solution set.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mhg/ring_matrix.hpp"

namespace mhg {

using BigCount = boost::multiprecision::cpp_int;

/// One independent direction of the solution coset: steps k * step for k in [0, order).
struct SolutionDirection {
    ResidueVector step;
    std::uint64_t order;
};

/// All solutions of a system: particular + sum_j k_j * nullspace[j].step, k_j in [0, nullspace[j].order).
/// Distinct k tuples give distinct solutions, so solution_count is the product of the orders.
struct SolutionSet {
    std::uint64_t modulus = 2;
    std::size_t unknowns = 0;
    bool consistent = false;
    std::optional<ResidueVector> particular;
    BigCount solution_count = 0;
    std::vector<SolutionDirection> nullspace;

    /// Every solution, ordered lexicographically by the k tuple (first direction most significant).
    /// Throws SizeLimit when solution_count exceeds `cap`.
    std::vector<ResidueVector> enumerate(std::uint64_t cap = 1u << 20) const;
};

/// Gauss-Jordan elimination over GF(q), recording the row transform so many
/// right-hand sides can be solved against one factorization.
class GaussSolver {
   public:
    explicit GaussSolver(const RingMatrix &a);

    std::size_t rank() const {
        return pivot_columns_.size();
    }
    const std::vector<std::size_t> &pivot_columns() const {
        return pivot_columns_;
    }
    /// T with T * A = R, where R is the reduced row echelon form.
    const RingMatrix &transform() const {
        return transform_;
    }
    const RingMatrix &echelon() const {
        return echelon_;
    }

    SolutionSet solve(std::span<const std::uint32_t> b) const;
    std::size_t augmented_rank(std::span<const std::uint32_t> b) const;
    /// Basis of {y : y^T A = 0} in reduced row echelon form.
    std::vector<ResidueVector> left_nullspace() const;

   private:
    ResidueVector transformed_rhs(std::span<const std::uint32_t> b) const;

    std::uint64_t q_;
    RingMatrix echelon_;
    RingMatrix transform_;
    std::vector<std::size_t> pivot_columns_;
};

/// Diagonalization U A V = D (mod d) with U, V invertible over Z_d, built from
/// unimodular integer row and column operations on the lifted entries.
class SmithSolver {
   public:
    explicit SmithSolver(const RingMatrix &a);

    const RingMatrix &left() const {
        return left_;
    }
    const RingMatrix &right() const {
        return right_;
    }
    /// min(rows, cols) diagonal entries of D, reduced mod d.
    const std::vector<std::uint64_t> &diagonal() const {
        return diagonal_;
    }

    SolutionSet solve(std::span<const std::uint32_t> b) const;

   private:
    std::uint64_t d_;
    std::size_t rows_;
    std::size_t cols_;
    RingMatrix left_;
    RingMatrix right_;
    std::vector<std::uint64_t> diagonal_;
};

/// Gaussian elimination over GF(q). Throws NonPrimeModulus for composite q.
SolutionSet solve_prime(const RingMatrix &a, std::span<const std::uint32_t> b);
/// Diagonalization route; valid for every modulus.
SolutionSet solve_residue(const RingMatrix &a, std::span<const std::uint32_t> b);

struct FactorRank {
    std::uint64_t prime;
    unsigned exponent;
    /// Ranks over GF(prime) of A mod prime and [A|b] mod prime.
    std::size_t rank;
    std::size_t augmented_rank;
    /// Solvability over Z_{prime^exponent}.
    bool consistent;
};

struct RankReport {
    std::vector<FactorRank> factors;
    bool consistent;
};

/// Per prime-power factor of d (CRT): GF(p) ranks and Z_{p^e} consistency.
/// The system is consistent over Z_d iff it is consistent for every factor.
RankReport rank_and_consistency(const RingMatrix &a, std::span<const std::uint32_t> b);

/// Basis of the left nullspace over GF(q), in reduced row echelon form.
std::vector<ResidueVector> left_nullspace_prime(const RingMatrix &a);

}  // namespace mhg
