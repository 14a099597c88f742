#pragma once

// Stabilizer generators of multihypergraph states.
//
// Shift convention: X|a> = |a+1 mod d>, so apply_shift(f, k, p) returns g with
// g(i) = f(i - p e_k). A generator is X_k^{d-1} (one step down) applied after a
// diagonal built from every edge through k. For an edge with s_k = 1 that
// diagonal is the edge-deleted gate CZ_{e\k}^{m(d-1)}; in general it is the exact
// correction m * ((i_k - 1)^{s_k} - i_k^{s_k}) * prod_{v in e, v != k} i_v^{s_v}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mhg/graph_model.hpp"
#include "mhg/phase_function.hpp"

namespace mhg {

/// g(i) = f(i - power * e_k). Throws VertexOutOfRange.
GeneralState apply_shift(const GeneralState &state, std::uint32_t k, std::uint64_t power = 1);

/// One edge of the source map that passes through the target vertex.
struct TrailingFactor {
    MultiHyperedge source;
    std::uint32_t weight;
    std::uint32_t target_exponent;
    /// source minus the target; nothing for a single-vertex edge.
    std::optional<MultiHyperedge> residual;
    /// weight * (d - 1) mod d: the power of the edge-deleted gate.
    std::uint32_t deleted_power;
    /// The target's exponent is 1, so the residual gate alone is exact.
    bool exact_edge_gate() const;
};

struct GeneratorSpec {
    std::uint64_t d;
    std::uint32_t n;
    std::uint32_t target;
    /// Power of X_target applied last; always d - 1.
    std::uint64_t shift_power;
    std::vector<TrailingFactor> factors;
};

/// Throws VertexOutOfRange.
GeneratorSpec generator(const WeightedEdgeMap &map, std::uint32_t k);

/// D(i) = m ((i_k - 1)^{s_k} - i_k^{s_k}) prod_{v in e, v != k} i_v^{s_v} mod d, as a full table.
std::vector<std::uint32_t> correction_diagonal(std::uint64_t d, std::uint32_t n, const MultiHyperedge &e,
                                               std::uint32_t m, std::uint32_t k,
                                               const EngineConfig &config = {});

/// Sum of the exact correction diagonals of every factor.
std::vector<std::uint32_t> generator_diagonal(const GeneratorSpec &spec, const EngineConfig &config = {});
/// Sum of the edge-deleted gates m(d-1) prod_{v != k} i_v^{s_v}, the empty product being 1.
std::vector<std::uint32_t> edge_deleted_diagonal(const GeneratorSpec &spec, const EngineConfig &config = {});

/// Adds `diagonal` to the table, then shifts the target by the spec's shift power.
GeneralState apply_generator(const GeneralState &state, const GeneratorSpec &spec,
                             const std::vector<std::uint32_t> &diagonal);

struct StabilizerCheck {
    std::uint32_t vertex;
    bool stabilized;
    std::vector<std::size_t> mismatch_indices;
};

/// Applies every exact generator to build_state(map) and compares tables entry by entry.
std::vector<StabilizerCheck> verify(const WeightedEdgeMap &map, const EngineConfig &config = {});
/// Same, with the edge-deleted gates in place of the exact correction.
std::vector<StabilizerCheck> verify_edge_deleted(const WeightedEdgeMap &map, const EngineConfig &config = {});

/// |j> -> omega_d^{phase[j]} |target[j]> on the computational basis.
struct MonomialOperator {
    std::uint64_t d;
    std::vector<std::uint32_t> phase;
    std::vector<std::size_t> target;

    static MonomialOperator diagonal(std::uint64_t d, std::vector<std::uint32_t> phases);
    /// X_k^power on N qudits.
    static MonomialOperator shift(std::uint64_t d, std::uint32_t n, std::uint32_t k, std::uint64_t power);

    /// (*this) after `first`: apply `first`, then this.
    MonomialOperator after(const MonomialOperator &first) const;
    bool operator==(const MonomialOperator &) const = default;
};

struct ConjugationReport {
    /// CZ_e^m X_k^{d-1} CZ_e^{d-m} == X_k^{d-1} CZ_{e\k}^{m(d-1)}
    bool edge_deleted_form_holds;
    /// CZ_e^m X_k^{d-1} CZ_e^{d-m} == X_k^{d-1} diag(D)
    bool derived_form_holds;
    std::vector<std::uint32_t> correction;
    /// Basis states where the edge-deleted form differs from the left-hand side.
    std::vector<std::size_t> mismatch_indices;
};

/// Throws VertexOutOfRange when k is not in e or e leaves [0, N), SizeLimit past the table limit.
ConjugationReport conjugation_identity(const MultiHyperedge &e, std::uint32_t m, std::uint32_t k, std::uint64_t d,
                                       std::uint32_t n, const EngineConfig &config = {});

}  // namespace mhg
