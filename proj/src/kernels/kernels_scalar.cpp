#include <cstddef>

#include "mhg/kernels.hpp"

namespace mhg::kernels::scalar {

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t d) {
    const std::size_t n = y.size();
    for (std::size_t i = 0; i < n; i++) {
        std::uint64_t p = (std::uint64_t{a} * x[i]) % d;
        std::uint64_t s = y[i] + p;
        y[i] = static_cast<std::uint32_t>(s >= d ? s - d : s);
    }
}

void scale_mod(std::span<std::uint32_t> out, std::span<const std::uint32_t> x, std::uint32_t a,
               std::uint32_t d) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; i++) {
        out[i] = static_cast<std::uint32_t>((std::uint64_t{a} * x[i]) % d);
    }
}

void add_scalar_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t d) {
    for (auto &v : y) {
        std::uint64_t s = std::uint64_t{v} + c;
        v = static_cast<std::uint32_t>(s >= d ? s - d : s);
    }
}

}  // namespace mhg::kernels::scalar
