#include <immintrin.h>

#include <cstddef>

#include "mhg/kernels.hpp"

namespace mhg::kernels::avx2 {

namespace {

struct ModConsts {
    __m256i d;
    __m256i d_minus_1;
    __m256 inv_d;
    __m256i zero;

    explicit ModConsts(std::uint32_t modulus)
        : d(_mm256_set1_epi32(static_cast<int>(modulus))),
          d_minus_1(_mm256_set1_epi32(static_cast<int>(modulus - 1))),
          inv_d(_mm256_set1_ps(1.0f / static_cast<float>(modulus))),
          zero(_mm256_setzero_si256()) {
    }
};

// p < 2^24, so p is exact in float32 and the quotient estimate is off by at most one.
inline __m256i reduce_product(__m256i p, const ModConsts &c) {
    __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(p), c.inv_d));
    __m256i r = _mm256_sub_epi32(p, _mm256_mullo_epi32(q, c.d));
    r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(c.zero, r), c.d));
    r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, c.d_minus_1), c.d));
    return r;
}

inline __m256i add_reduced(__m256i a, __m256i b, const ModConsts &c) {
    __m256i s = _mm256_add_epi32(a, b);
    return _mm256_sub_epi32(s, _mm256_and_si256(_mm256_cmpgt_epi32(s, c.d_minus_1), c.d));
}

}  // namespace

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t d) {
    if (d > kAvx2MaxModulus) {
        scalar::axpy_mod(y, x, a, d);
        return;
    }
    const ModConsts c(d);
    const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
    const std::size_t n = y.size();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(x.data() + i));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(y.data() + i));
        __m256i r = reduce_product(_mm256_mullo_epi32(va, vx), c);
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(y.data() + i), add_reduced(vy, r, c));
    }
    scalar::axpy_mod(y.subspan(i), x.subspan(i), a, d);
}

void scale_mod(std::span<std::uint32_t> out, std::span<const std::uint32_t> x, std::uint32_t a,
               std::uint32_t d) {
    if (d > kAvx2MaxModulus) {
        scalar::scale_mod(out, x, a, d);
        return;
    }
    const ModConsts c(d);
    const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
    const std::size_t n = out.size();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(x.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(out.data() + i),
                            reduce_product(_mm256_mullo_epi32(va, vx), c));
    }
    scalar::scale_mod(out.subspan(i), x.subspan(i), a, d);
}

void add_scalar_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t d) {
    if (d > kAvx2MaxModulus) {
        scalar::add_scalar_mod(y, c, d);
        return;
    }
    const ModConsts k(d);
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const std::size_t n = y.size();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(y.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(y.data() + i), add_reduced(vy, vc, k));
    }
    scalar::add_scalar_mod(y.subspan(i), c, d);
}

}  // namespace mhg::kernels::avx2
