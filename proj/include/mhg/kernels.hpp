#pragma once

// Modular vector kernels over Z_d with runtime ISA selection.
//
// Every kernel expects its inputs already reduced into [0, d) and d in [2, 2^31).
// The AVX2 variants handle d <= kAvx2MaxModulus; larger moduli route to the
// scalar reference regardless of the selected ISA.

#include <cstdint>
#include <span>
#include <string_view>

namespace mhg::kernels {

enum class Isa { scalar, avx2 };

/// Largest modulus the AVX2 path accepts: products a*x stay below 2^24 and are exact in float32.
inline constexpr std::uint32_t kAvx2MaxModulus = 4096;

/// y[i] = (y[i] + a * x[i]) mod d
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t d);
/// out[i] = (a * x[i]) mod d. `out` and `x` may alias exactly.
void scale_mod(std::span<std::uint32_t> out, std::span<const std::uint32_t> x, std::uint32_t a,
               std::uint32_t d);
/// y[i] = (y[i] + c) mod d
void add_scalar_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t d);

bool isa_available(Isa isa);
Isa active_isa();
/// Overrides the automatically detected ISA. Throws if `isa` is not available.
void force_isa(Isa isa);
/// Restores automatic detection.
void reset_isa();
std::string_view isa_name(Isa isa);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t d);
void scale_mod(std::span<std::uint32_t> out, std::span<const std::uint32_t> x, std::uint32_t a,
               std::uint32_t d);
void add_scalar_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t d);
}  // namespace scalar

#if defined(MHG_HAVE_AVX2)
namespace avx2 {
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t d);
void scale_mod(std::span<std::uint32_t> out, std::span<const std::uint32_t> x, std::uint32_t a,
               std::uint32_t d);
void add_scalar_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t d);
}  // namespace avx2
#endif

}  // namespace mhg::kernels
