#include <atomic>
#include <stdexcept>

#include "mhg/kernels.hpp"

namespace mhg::kernels {

namespace {

Isa detect() {
#if defined(MHG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    if (__builtin_cpu_supports("avx2")) {
        return Isa::avx2;
    }
#endif
    return Isa::scalar;
}

std::atomic<Isa> &selected() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

void require_same_length(std::size_t a, std::size_t b) {
    if (a != b) {
        throw std::invalid_argument("kernel operands differ in length");
    }
}

}  // namespace

bool isa_available(Isa isa) {
    if (isa == Isa::scalar) {
        return true;
    }
    return detect() == Isa::avx2;
}

Isa active_isa() {
    return selected().load(std::memory_order_relaxed);
}

void force_isa(Isa isa) {
    if (!isa_available(isa)) {
        throw std::invalid_argument("requested ISA is not available on this CPU");
    }
    selected().store(isa, std::memory_order_relaxed);
}

void reset_isa() {
    selected().store(detect(), std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
    }
    return "unknown";
}

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t d) {
    require_same_length(y.size(), x.size());
#if defined(MHG_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        avx2::axpy_mod(y, x, a, d);
        return;
    }
#endif
    scalar::axpy_mod(y, x, a, d);
}

void scale_mod(std::span<std::uint32_t> out, std::span<const std::uint32_t> x, std::uint32_t a,
               std::uint32_t d) {
    require_same_length(out.size(), x.size());
#if defined(MHG_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        avx2::scale_mod(out, x, a, d);
        return;
    }
#endif
    scalar::scale_mod(out, x, a, d);
}

void add_scalar_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t d) {
#if defined(MHG_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        avx2::add_scalar_mod(y, c, d);
        return;
    }
#endif
    scalar::add_scalar_mod(y, c, d);
}

}  // namespace mhg::kernels
