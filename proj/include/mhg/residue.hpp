#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace mhg {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    std::uint64_t value() const;
    bool operator==(const PrimePower &) const = default;
};

/// The ring Z_d. Moduli are restricted to [2, 2^31) so that a sum of two reduced
/// values, and every intermediate of the SIMD kernels, fits an unsigned 32-bit lane.
class Modulus {
   public:
    static constexpr std::uint64_t max_value = (std::uint64_t{1} << 31) - 1;

    explicit Modulus(std::uint64_t d);

    std::uint64_t value() const {
        return d_;
    }
    const std::vector<PrimePower> &factorization() const {
        return factors_;
    }
    bool is_prime() const {
        return factors_.size() == 1 && factors_[0].exponent == 1;
    }

    std::uint32_t reduce(std::int64_t x) const;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t base, std::uint64_t exponent) const;
    std::optional<std::uint32_t> inverse(std::uint32_t a) const;

    bool operator==(const Modulus &other) const {
        return d_ == other.d_;
    }

   private:
    std::uint64_t d_;
    std::vector<PrimePower> factors_;
};

/// An element of Z_d. Arithmetic between residues of different moduli throws DimensionMismatch.
class Residue {
   public:
    Residue(std::int64_t value, std::uint64_t modulus);

    std::uint32_t value() const {
        return value_;
    }
    std::uint64_t modulus() const {
        return d_;
    }

    Residue operator+(const Residue &o) const;
    Residue operator-(const Residue &o) const;
    Residue operator*(const Residue &o) const;
    Residue operator-() const;
    bool operator==(const Residue &) const = default;

   private:
    void require_same(const Residue &o) const;

    std::uint32_t value_;
    std::uint64_t d_;
};

/// b with a*b = 1 (mod d) when gcd(a, d) = 1, otherwise nothing.
std::optional<Residue> mod_inverse(const Residue &a);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Extended Euclid on nonnegative inputs: returns g = gcd(a, b) and s, t with s*a + t*b = g.
/// When a divides b (a != 0) the result is exactly (a, 1, 0).
struct ExtendedGcd {
    std::int64_t g;
    std::int64_t s;
    std::int64_t t;
};
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

/// Trial division.
std::vector<PrimePower> factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// base^exp with an overflow check against `limit`; returns nothing past the limit.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit = UINT64_MAX);

}  // namespace mhg
