#include "mhg/stabilizer.hpp"

#include <algorithm>
#include <string>

#include "mhg/errors.hpp"
#include "mhg/kernels.hpp"

namespace mhg {

namespace {

void check_vertex(std::uint32_t k, std::uint32_t n) {
    if (k >= n) {
        throw VertexOutOfRange("vertex " + std::to_string(k) + " outside " + std::to_string(n) + " vertices");
    }
}

std::vector<std::uint32_t> residual_table(std::uint64_t d, std::uint32_t n, const std::optional<MultiHyperedge> &e) {
    if (e) {
        return monomial_table(d, n, *e);
    }
    return std::vector<std::uint32_t>(*checked_pow(d, n), 1);
}

}  // namespace

GeneralState apply_shift(const GeneralState &state, std::uint32_t k, std::uint64_t power) {
    check_vertex(k, state.vertex_count());
    const std::uint64_t d = state.modulus();
    power %= d;
    if (power == 0) {
        return state;
    }
    const std::size_t stride = state.stride(k);
    const std::size_t block = stride * d;
    const auto &f = state.table();
    std::vector<std::uint32_t> g(f.size());
    for (std::size_t base = 0; base < f.size(); base += block) {
        for (std::uint64_t a = 0; a < d; a++) {
            const std::uint64_t from = (a + d - power) % d;
            std::copy_n(f.begin() + static_cast<std::ptrdiff_t>(base + from * stride), stride,
                        g.begin() + static_cast<std::ptrdiff_t>(base + a * stride));
        }
    }
    return GeneralState(d, state.vertex_count(), std::move(g));
}

bool TrailingFactor::exact_edge_gate() const {
    return target_exponent == 1;
}

GeneratorSpec generator(const WeightedEdgeMap &map, std::uint32_t k) {
    check_vertex(k, map.vertex_count());
    const std::uint64_t d = map.modulus();
    const Modulus mod(d);
    GeneratorSpec spec{d, map.vertex_count(), k, d - 1, {}};
    for (const auto &[e, w] : map.edges()) {
        if (!e.contains(k)) {
            continue;
        }
        spec.factors.push_back({e, w, *e.exponent_of(k), e.without(k), mod.mul(w, static_cast<std::uint32_t>(d - 1))});
    }
    return spec;
}

std::vector<std::uint32_t> correction_diagonal(std::uint64_t d, std::uint32_t n, const MultiHyperedge &e,
                                               std::uint32_t m, std::uint32_t k, const EngineConfig &config) {
    check_vertex(e.vertices().back(), n);
    auto s = e.exponent_of(k);
    if (!s) {
        throw VertexOutOfRange("vertex " + std::to_string(k) + " is not in " + e.to_string());
    }
    table_size(d, n, config.table_limit);
    const Modulus mod(d);
    std::vector<std::vector<std::uint32_t>> factors(n, std::vector<std::uint32_t>(d, 1));
    for (std::size_t j = 0; j < e.size(); j++) {
        const std::uint32_t v = e.vertices()[j];
        for (std::uint32_t a = 0; a < d; a++) {
            if (v == k) {
                const auto down = static_cast<std::uint32_t>((a + d - 1) % d);
                factors[v][a] = mod.mul(m, mod.sub(mod.pow(down, *s), mod.pow(a, *s)));
            } else {
                factors[v][a] = mod.pow(a, e.exponents()[j]);
            }
        }
    }
    return separable_table(d, factors);
}

std::vector<std::uint32_t> generator_diagonal(const GeneratorSpec &spec, const EngineConfig &config) {
    std::vector<std::uint32_t> out(table_size(spec.d, spec.n, config.table_limit), 0);
    for (const auto &f : spec.factors) {
        auto t = correction_diagonal(spec.d, spec.n, f.source, f.weight, spec.target, config);
        kernels::axpy_mod(out, t, 1, static_cast<std::uint32_t>(spec.d));
    }
    return out;
}

std::vector<std::uint32_t> edge_deleted_diagonal(const GeneratorSpec &spec, const EngineConfig &config) {
    std::vector<std::uint32_t> out(table_size(spec.d, spec.n, config.table_limit), 0);
    for (const auto &f : spec.factors) {
        kernels::axpy_mod(out, residual_table(spec.d, spec.n, f.residual), f.deleted_power,
                          static_cast<std::uint32_t>(spec.d));
    }
    return out;
}

GeneralState apply_generator(const GeneralState &state, const GeneratorSpec &spec,
                             const std::vector<std::uint32_t> &diagonal) {
    if (state.modulus() != spec.d || state.vertex_count() != spec.n || diagonal.size() != state.size()) {
        throw DimensionMismatch("generator and state disagree on (d, N)");
    }
    std::vector<std::uint32_t> h = state.table();
    kernels::axpy_mod(h, diagonal, 1, static_cast<std::uint32_t>(spec.d));
    return apply_shift(GeneralState(spec.d, spec.n, std::move(h)), spec.target, spec.shift_power);
}

namespace {

template <typename DiagonalFn>
std::vector<StabilizerCheck> check_all(const WeightedEdgeMap &map, const EngineConfig &config, DiagonalFn diagonal) {
    const auto state = build_state(map, config);
    std::vector<StabilizerCheck> out;
    for (std::uint32_t k = 0; k < map.vertex_count(); k++) {
        const auto spec = generator(map, k);
        const auto image = apply_generator(state, spec, diagonal(spec, config));
        StabilizerCheck check{k, true, {}};
        for (std::size_t i = 0; i < state.size(); i++) {
            if (image[i] != state[i]) {
                check.stabilized = false;
                check.mismatch_indices.push_back(i);
            }
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace

std::vector<StabilizerCheck> verify(const WeightedEdgeMap &map, const EngineConfig &config) {
    return check_all(map, config, generator_diagonal);
}

std::vector<StabilizerCheck> verify_edge_deleted(const WeightedEdgeMap &map, const EngineConfig &config) {
    return check_all(map, config, edge_deleted_diagonal);
}

MonomialOperator MonomialOperator::diagonal(std::uint64_t d, std::vector<std::uint32_t> phases) {
    MonomialOperator op{d, std::move(phases), {}};
    op.target.resize(op.phase.size());
    for (std::size_t j = 0; j < op.target.size(); j++) {
        op.target[j] = j;
    }
    return op;
}

MonomialOperator MonomialOperator::shift(std::uint64_t d, std::uint32_t n, std::uint32_t k, std::uint64_t power) {
    check_vertex(k, n);
    const std::size_t size = *checked_pow(d, n);
    std::size_t stride = 1;
    for (std::uint32_t v = k + 1; v < n; v++) {
        stride *= d;
    }
    MonomialOperator op{d, std::vector<std::uint32_t>(size, 0), std::vector<std::size_t>(size)};
    for (std::size_t j = 0; j < size; j++) {
        const std::uint64_t a = (j / stride) % d;
        const std::uint64_t b = (a + power) % d;
        op.target[j] = j - a * stride + b * stride;
    }
    return op;
}

MonomialOperator MonomialOperator::after(const MonomialOperator &first) const {
    if (first.d != d || first.phase.size() != phase.size()) {
        throw DimensionMismatch("composing operators of different shape");
    }
    const Modulus mod(d);
    MonomialOperator out{d, std::vector<std::uint32_t>(phase.size()), std::vector<std::size_t>(phase.size())};
    for (std::size_t j = 0; j < phase.size(); j++) {
        const std::size_t mid = first.target[j];
        out.phase[j] = mod.add(first.phase[j], phase[mid]);
        out.target[j] = target[mid];
    }
    return out;
}

ConjugationReport conjugation_identity(const MultiHyperedge &e, std::uint32_t m, std::uint32_t k, std::uint64_t d,
                                       std::uint32_t n, const EngineConfig &config) {
    check_vertex(e.vertices().back(), n);
    if (!e.contains(k)) {
        throw VertexOutOfRange("vertex " + std::to_string(k) + " is not in " + e.to_string());
    }
    table_size(d, n, config.table_limit);
    const Modulus mod(d);
    m = mod.reduce(m);

    const auto mono = monomial_table(d, n, e);
    std::vector<std::uint32_t> forward(mono.size()), backward(mono.size());
    kernels::scale_mod(forward, mono, m, static_cast<std::uint32_t>(d));
    kernels::scale_mod(backward, mono, mod.neg(m), static_cast<std::uint32_t>(d));
    const auto down = MonomialOperator::shift(d, n, k, d - 1);
    const auto lhs = MonomialOperator::diagonal(d, forward)
                         .after(down)
                         .after(MonomialOperator::diagonal(d, backward));

    std::vector<std::uint32_t> deleted(mono.size());
    kernels::scale_mod(deleted, residual_table(d, n, e.without(k)), mod.mul(m, static_cast<std::uint32_t>(d - 1)),
                       static_cast<std::uint32_t>(d));
    const auto rhs_deleted = down.after(MonomialOperator::diagonal(d, deleted));

    auto correction = correction_diagonal(d, n, e, m, k, config);
    const auto rhs_derived = down.after(MonomialOperator::diagonal(d, correction));

    ConjugationReport report{true, lhs == rhs_derived, std::move(correction), {}};
    for (std::size_t j = 0; j < lhs.phase.size(); j++) {
        if (lhs.phase[j] != rhs_deleted.phase[j] || lhs.target[j] != rhs_deleted.target[j]) {
            report.edge_deleted_form_holds = false;
            report.mismatch_indices.push_back(j);
        }
    }
    return report;
}

}  // namespace mhg
