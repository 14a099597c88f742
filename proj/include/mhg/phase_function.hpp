#pragma once

// Qudit states of the form d^{-N/2} sum_i omega_d^{f(i)} |i>, stored as their exact
// phase tables f: Z_d^N -> Z_d, and the diagonal gates that act on them.
//
// Index convention: the table index of (i_0, ..., i_{N-1}) is the mixed-radix number
// with i_0 as the most significant digit, matching the ket order |i_0, i_1, ...>.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mhg/graph_model.hpp"
#include "mhg/residue.hpp"

namespace mhg {

struct EngineConfig {
    /// Every table (d^N entries) any operation allocates must stay below this.
    std::uint64_t table_limit = std::uint64_t{1} << 24;
};

/// d^N, or SizeLimit when it reaches `limit`.
std::uint64_t table_size(std::uint64_t d, std::uint32_t n, std::uint64_t limit);

class PhaseFunction {
   public:
    /// Entries must already lie in [0, d) and there must be exactly d^N of them.
    PhaseFunction(std::uint64_t d, std::uint32_t n, std::vector<std::uint32_t> table);

    std::uint64_t modulus() const {
        return d_;
    }
    std::uint32_t vertex_count() const {
        return n_;
    }
    const std::vector<std::uint32_t> &table() const {
        return table_;
    }
    std::size_t size() const {
        return table_.size();
    }
    std::uint32_t operator[](std::size_t index) const {
        return table_[index];
    }

    /// f(0, ..., 0) == 0
    bool is_canonical() const {
        return table_[0] == 0;
    }
    /// Subtracts f(0, ..., 0) everywhere: the same state up to global phase.
    PhaseFunction canonicalized() const;

    std::vector<std::uint32_t> digits(std::size_t index) const;
    std::size_t index_of(std::span<const std::uint32_t> digits) const;
    /// Distance in the table between consecutive values of digit `vertex`.
    std::size_t stride(std::uint32_t vertex) const;

    bool operator==(const PhaseFunction &) const = default;

   private:
    std::uint64_t d_;
    std::uint32_t n_;
    std::vector<std::uint32_t> table_;
};

/// Phase tables that need not be canonical, e.g. after a shift.
using GeneralState = PhaseFunction;

struct DenseState {
    std::uint64_t d;
    std::uint32_t n;
    std::vector<std::complex<double>> amplitudes;
};

/// Single-qudit diagonal gate U = sum_k omega_d^{h_k} |k><k| with h_k = sum_j a_j k^j.
struct DiagonalSpec {
    std::vector<std::uint32_t> coefficients;  // a_0, a_1, ..., a_eta

    /// h_k = k^eta
    static DiagonalSpec monomial(std::uint32_t eta);
    std::uint32_t evaluate(std::uint32_t k, const Modulus &mod) const;
};

/// |+_d>^{(x)N}: the all-zero table.
PhaseFunction plus_state(std::uint32_t n, std::uint64_t d, const EngineConfig &config = {});

/// f'(i) = f(i) + m * prod_j i_{v_j}^{s_j}. Throws VertexOutOfRange.
PhaseFunction apply_multi_cz(const PhaseFunction &state, const MultiHyperedge &e, const Residue &m);

/// f'(i) = f(i) + h(i_vertex). Throws VertexOutOfRange.
PhaseFunction apply_uv(const PhaseFunction &state, std::uint32_t vertex, const DiagonalSpec &spec);

/// f(i) = sum_e m_e prod_{v in e} i_v^{s_v}. Always canonical.
PhaseFunction build_state(const WeightedEdgeMap &edges, const EngineConfig &config = {});

DenseState to_dense(const PhaseFunction &state);

/// Equality up to global phase. Throws DimensionMismatch for different (d, N).
bool states_equal(const PhaseFunction &a, const PhaseFunction &b);

/// "index re im" per line, 17 significant digits.
void write_dense(std::ostream &out, const DenseState &state);

/// Table of prod_v factors[v][i_v] mod d, with one length-d factor per vertex.
std::vector<std::uint32_t> separable_table(std::uint64_t d, std::span<const std::vector<std::uint32_t>> factors);

/// Table of prod_{v in e} i_v^{s_v} mod d over N vertices.
std::vector<std::uint32_t> monomial_table(std::uint64_t d, std::uint32_t n, const MultiHyperedge &e);

}  // namespace mhg
