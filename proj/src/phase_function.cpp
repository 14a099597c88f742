#include "mhg/phase_function.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "mhg/errors.hpp"
#include "mhg/kernels.hpp"

namespace mhg {

std::uint64_t table_size(std::uint64_t d, std::uint32_t n, std::uint64_t limit) {
    auto size = limit == 0 ? std::nullopt : checked_pow(d, n, limit - 1);
    if (!size) {
        throw SizeLimit(std::to_string(d) + "^" + std::to_string(n) + " table entries reach the limit of " +
                        std::to_string(limit));
    }
    return *size;
}

PhaseFunction::PhaseFunction(std::uint64_t d, std::uint32_t n, std::vector<std::uint32_t> table)
    : d_(Modulus(d).value()), n_(n), table_(std::move(table)) {
    if (n == 0) {
        throw std::invalid_argument("a state needs at least one vertex");
    }
    auto expected = checked_pow(d, n);
    if (!expected || table_.size() != *expected) {
        throw DimensionMismatch("phase table for d=" + std::to_string(d) + ", N=" + std::to_string(n) +
                                " needs d^N entries, got " + std::to_string(table_.size()));
    }
    for (auto v : table_) {
        if (v >= d_) {
            throw std::invalid_argument("phase table entry " + std::to_string(v) + " is not reduced mod " +
                                        std::to_string(d_));
        }
    }
}

PhaseFunction PhaseFunction::canonicalized() const {
    std::vector<std::uint32_t> t = table_;
    const auto d = static_cast<std::uint32_t>(d_);
    kernels::add_scalar_mod(t, Modulus(d_).neg(table_[0]), d);
    return PhaseFunction(d_, n_, std::move(t));
}

std::vector<std::uint32_t> PhaseFunction::digits(std::size_t index) const {
    std::vector<std::uint32_t> out(n_);
    for (std::uint32_t v = n_; v > 0; v--) {
        out[v - 1] = static_cast<std::uint32_t>(index % d_);
        index /= d_;
    }
    return out;
}

std::size_t PhaseFunction::index_of(std::span<const std::uint32_t> digits) const {
    if (digits.size() != n_) {
        throw DimensionMismatch("expected " + std::to_string(n_) + " digits");
    }
    std::size_t index = 0;
    for (auto x : digits) {
        if (x >= d_) {
            throw std::invalid_argument("digit out of range");
        }
        index = index * d_ + x;
    }
    return index;
}

std::size_t PhaseFunction::stride(std::uint32_t vertex) const {
    std::size_t s = 1;
    for (std::uint32_t v = vertex + 1; v < n_; v++) {
        s *= d_;
    }
    return s;
}

DiagonalSpec DiagonalSpec::monomial(std::uint32_t eta) {
    DiagonalSpec spec;
    spec.coefficients.assign(eta + 1, 0);
    spec.coefficients[eta] = 1;
    return spec;
}

std::uint32_t DiagonalSpec::evaluate(std::uint32_t k, const Modulus &mod) const {
    std::uint32_t acc = 0;
    for (std::size_t j = coefficients.size(); j > 0; j--) {
        acc = mod.add(mod.mul(acc, k), static_cast<std::uint32_t>(coefficients[j - 1] % mod.value()));
    }
    return acc;
}

std::vector<std::uint32_t> separable_table(std::uint64_t d, std::span<const std::vector<std::uint32_t>> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("separable table needs at least one factor");
    }
    const auto d32 = static_cast<std::uint32_t>(d);
    std::vector<std::uint32_t> cur = factors.back();
    for (std::size_t v = factors.size() - 1; v > 0; v--) {
        const auto &f = factors[v - 1];
        std::vector<std::uint32_t> next(cur.size() * d);
        for (std::size_t a = 0; a < d; a++) {
            kernels::scale_mod(std::span(next).subspan(a * cur.size(), cur.size()), cur, f[a], d32);
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<std::uint32_t> monomial_table(std::uint64_t d, std::uint32_t n, const MultiHyperedge &e) {
    const Modulus mod(d);
    std::vector<std::vector<std::uint32_t>> factors(n, std::vector<std::uint32_t>(d, 1));
    for (std::size_t j = 0; j < e.size(); j++) {
        auto &f = factors[e.vertices()[j]];
        for (std::uint32_t a = 0; a < d; a++) {
            f[a] = mod.pow(a, e.exponents()[j]);
        }
    }
    return separable_table(d, factors);
}

PhaseFunction plus_state(std::uint32_t n, std::uint64_t d, const EngineConfig &config) {
    return PhaseFunction(d, n, std::vector<std::uint32_t>(table_size(d, n, config.table_limit), 0));
}

PhaseFunction apply_multi_cz(const PhaseFunction &state, const MultiHyperedge &e, const Residue &m) {
    if (m.modulus() != state.modulus()) {
        throw DimensionMismatch("gate power is a residue mod " + std::to_string(m.modulus()) +
                                ", state is mod " + std::to_string(state.modulus()));
    }
    if (e.vertices().back() >= state.vertex_count()) {
        throw VertexOutOfRange("edge " + e.to_string() + " outside " + std::to_string(state.vertex_count()) +
                               " vertices");
    }
    std::vector<std::uint32_t> t = state.table();
    if (m.value() != 0) {
        auto mono = monomial_table(state.modulus(), state.vertex_count(), e);
        kernels::axpy_mod(t, mono, m.value(), static_cast<std::uint32_t>(state.modulus()));
    }
    return PhaseFunction(state.modulus(), state.vertex_count(), std::move(t));
}

PhaseFunction apply_uv(const PhaseFunction &state, std::uint32_t vertex, const DiagonalSpec &spec) {
    if (vertex >= state.vertex_count()) {
        throw VertexOutOfRange("vertex " + std::to_string(vertex) + " outside " +
                               std::to_string(state.vertex_count()) + " vertices");
    }
    const std::uint64_t d = state.modulus();
    const Modulus mod(d);
    std::vector<std::vector<std::uint32_t>> factors(state.vertex_count(), std::vector<std::uint32_t>(d, 1));
    for (std::uint32_t k = 0; k < d; k++) {
        factors[vertex][k] = spec.evaluate(k, mod);
    }
    auto h = separable_table(d, factors);
    std::vector<std::uint32_t> t = state.table();
    kernels::axpy_mod(t, h, 1, static_cast<std::uint32_t>(d));
    return PhaseFunction(d, state.vertex_count(), std::move(t));
}

PhaseFunction build_state(const WeightedEdgeMap &edges, const EngineConfig &config) {
    const std::uint64_t d = edges.modulus();
    const std::uint32_t n = edges.vertex_count();
    std::vector<std::uint32_t> t(table_size(d, n, config.table_limit), 0);
    for (const auto &[e, w] : edges.edges()) {
        auto mono = monomial_table(d, n, e);
        kernels::axpy_mod(t, mono, w, static_cast<std::uint32_t>(d));
    }
    return PhaseFunction(d, n, std::move(t));
}

DenseState to_dense(const PhaseFunction &state) {
    const std::uint64_t d = state.modulus();
    const double norm = std::pow(static_cast<double>(d), -0.5 * state.vertex_count());
    std::vector<std::complex<double>> roots(d);
    for (std::uint64_t k = 0; k < d; k++) {
        roots[k] = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
    }
    DenseState out{d, state.vertex_count(), {}};
    out.amplitudes.reserve(state.size());
    for (auto f : state.table()) {
        out.amplitudes.push_back(roots[f]);
    }
    return out;
}

bool states_equal(const PhaseFunction &a, const PhaseFunction &b) {
    if (a.modulus() != b.modulus() || a.vertex_count() != b.vertex_count()) {
        throw DimensionMismatch("comparing states of different (d, N)");
    }
    return a.canonicalized() == b.canonicalized();
}

void write_dense(std::ostream &out, const DenseState &state) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(17);
    for (std::size_t i = 0; i < state.amplitudes.size(); i++) {
        out << i << ' ' << state.amplitudes[i].real() << ' ' << state.amplitudes[i].imag() << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

}  // namespace mhg
