#include "mhg/residue.hpp"

#include <stdexcept>
#include <string>

#include "mhg/errors.hpp"

namespace mhg {

std::uint64_t PrimePower::value() const {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exponent; i++) {
        v *= prime;
    }
    return v;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
    if (a != 0 && b % a == 0) {
        return {a, 1, 0};
    }
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    return {old_r, old_s, old_t};
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; p++) {
        if (n % p != 0) {
            continue;
        }
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            e++;
        }
        out.push_back({p, e});
    }
    if (n > 1) {
        out.push_back({n, 1});
    }
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    auto f = factorize(n);
    return f.size() == 1 && f[0].exponent == 1;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; i++) {
        if (base != 0 && v > limit / base) {
            return std::nullopt;
        }
        v *= base;
    }
    if (v > limit) {
        return std::nullopt;
    }
    return v;
}

Modulus::Modulus(std::uint64_t d) : d_(d) {
    if (d < 2 || d > max_value) {
        throw std::invalid_argument("modulus must lie in [2, 2^31), got " + std::to_string(d));
    }
    factors_ = factorize(d);
}

std::uint32_t Modulus::reduce(std::int64_t x) const {
    auto d = static_cast<std::int64_t>(d_);
    std::int64_t r = x % d;
    if (r < 0) {
        r += d;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t Modulus::add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= d_ ? s - d_ : s);
}

std::uint32_t Modulus::sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(d_ - (b - a));
}

std::uint32_t Modulus::mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % d_);
}

std::uint32_t Modulus::neg(std::uint32_t a) const {
    return a == 0 ? 0 : static_cast<std::uint32_t>(d_ - a);
}

std::uint32_t Modulus::pow(std::uint32_t base, std::uint64_t exponent) const {
    std::uint32_t result = static_cast<std::uint32_t>(1 % d_);
    std::uint32_t b = static_cast<std::uint32_t>(base % d_);
    while (exponent > 0) {
        if (exponent & 1) {
            result = mul(result, b);
        }
        b = mul(b, b);
        exponent >>= 1;
    }
    return result;
}

std::optional<std::uint32_t> Modulus::inverse(std::uint32_t a) const {
    auto [g, s, t] = extended_gcd(static_cast<std::int64_t>(a % d_), static_cast<std::int64_t>(d_));
    (void)t;
    if (g != 1) {
        return std::nullopt;
    }
    return reduce(s);
}

Residue::Residue(std::int64_t value, std::uint64_t modulus) : d_(modulus) {
    if (modulus < 2 || modulus > Modulus::max_value) {
        throw std::invalid_argument("modulus must lie in [2, 2^31), got " + std::to_string(modulus));
    }
    auto d = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % d;
    value_ = static_cast<std::uint32_t>(r < 0 ? r + d : r);
}

void Residue::require_same(const Residue &o) const {
    if (d_ != o.d_) {
        throw DimensionMismatch("residues of different moduli " + std::to_string(d_) + " and " +
                                std::to_string(o.d_));
    }
}

Residue Residue::operator+(const Residue &o) const {
    require_same(o);
    return Residue(static_cast<std::int64_t>(value_) + o.value_, d_);
}

Residue Residue::operator-(const Residue &o) const {
    require_same(o);
    return Residue(static_cast<std::int64_t>(value_) - o.value_, d_);
}

Residue Residue::operator*(const Residue &o) const {
    require_same(o);
    return Residue(static_cast<std::int64_t>((std::uint64_t{value_} * o.value_) % d_), d_);
}

Residue Residue::operator-() const {
    return Residue(-static_cast<std::int64_t>(value_), d_);
}

std::optional<Residue> mod_inverse(const Residue &a) {
    auto inv = Modulus(a.modulus()).inverse(a.value());
    if (!inv) {
        return std::nullopt;
    }
    return Residue(*inv, a.modulus());
}

}  // namespace mhg
