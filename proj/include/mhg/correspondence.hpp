#pragma once

// Phase tables <-> edge weights.
//
// Every nonzero index tuple i gives one equation
//     f(i) = sum_e m_e prod_{v in e} i_v^{s_v}  (mod d)
// in the unknown weights m_e. Rows follow the mixed-radix order of the table
// (index 1 .. d^N - 1); columns follow the edge enumeration order.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "mhg/graph_model.hpp"
#include "mhg/linear_solve.hpp"
#include "mhg/phase_function.hpp"
#include "mhg/ring_matrix.hpp"

namespace mhg {

enum class Mode { hypergraph, multihypergraph };

std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

/// Columns of the system: 2^N - 1 hyperedges or d^N - 1 multihyperedges.
std::vector<MultiHyperedge> system_variables(std::uint64_t d, std::uint32_t n, Mode mode);

/// (d^N - 1) x #variables matrix of monomial values. Throws SizeLimit.
RingMatrix build_coefficient_matrix(std::uint64_t d, std::uint32_t n, Mode mode, const EngineConfig &config = {});

struct CorrespondenceSystem {
    std::uint64_t d;
    std::uint32_t n;
    Mode mode;
    std::vector<MultiHyperedge> variables;
    /// Table index of each row's tuple.
    std::vector<std::size_t> equations;
    RingMatrix matrix;
    ResidueVector rhs;

    /// FNV-1a over (d, rows, cols, entries).
    std::uint64_t fingerprint() const;
};

std::uint64_t matrix_fingerprint(const RingMatrix &m);

/// Throws NonCanonical when f(0,...,0) != 0.
CorrespondenceSystem build_system(const PhaseFunction &f, Mode mode, const EngineConfig &config = {});

/// The edge map with weights[j] on variables[j].
WeightedEdgeMap weights_to_map(std::uint64_t d, std::uint32_t n, const std::vector<MultiHyperedge> &variables,
                               const ResidueVector &weights);

struct SolveOutcome {
    Mode mode;
    std::vector<MultiHyperedge> variables;
    SolutionSet solutions;
    /// The edge map of the particular solution, when one exists.
    std::optional<WeightedEdgeMap> reconstructed;
    std::uint64_t fingerprint;
};

/// One factorization of a (d, N, mode) system, reused across right-hand sides.
class CorrespondenceSolver {
   public:
    CorrespondenceSolver(std::uint64_t d, std::uint32_t n, Mode mode, const EngineConfig &config = {});

    const std::vector<MultiHyperedge> &variables() const {
        return variables_;
    }
    const RingMatrix &matrix() const {
        return matrix_;
    }

    /// Solution set for the rhs (f at indices 1 .. d^N - 1).
    SolutionSet solve_rhs(std::span<const std::uint32_t> rhs) const;
    /// Checks the particular solution rebuilds f; throws RoundTripFailure otherwise.
    SolveOutcome solve(const PhaseFunction &f) const;

   private:
    std::uint64_t d_;
    std::uint32_t n_;
    Mode mode_;
    EngineConfig config_;
    std::vector<MultiHyperedge> variables_;
    RingMatrix matrix_;
    std::variant<GaussSolver, SmithSolver> solver_;
};

/// Gaussian elimination for prime d, diagonalization otherwise. Throws NonCanonical, RoundTripFailure.
SolveOutcome solve_weights(const PhaseFunction &f, Mode mode, const EngineConfig &config = {});

/// Multihypergraph weights support by support, inverting one Kronecker block per support.
/// Throws NonPrimeModulus, NonCanonical.
SolveOutcome block_solve_prime(const PhaseFunction &f, const EngineConfig &config = {});

/// V^{(x)n} with V[i][s] = i^s mod d for i, s in 1 .. d-1. Throws SizeLimit.
RingMatrix coefficient_block(std::uint64_t d, std::uint32_t n, const EngineConfig &config = {});

/// Left nullspace basis of the coefficient matrix over GF(d). Throws NonPrimeModulus.
std::vector<ResidueVector> representability_constraints(std::uint64_t d, std::uint32_t n, Mode mode,
                                                        const EngineConfig &config = {});

struct CensusOptions {
    std::uint64_t budget = 10'000'000;
    unsigned threads = 1;
    EngineConfig engine;
};

struct CensusReport {
    std::uint64_t d;
    std::uint32_t n;
    Mode mode;
    /// d^{d^N - 1}
    BigCount total_states;
    std::uint64_t solver_calls = 0;
    std::uint64_t hypergraph_reachable = 0;
    std::uint64_t multihypergraph_reachable = 0;
    /// solution count -> number of tables, for `mode`.
    std::map<BigCount, std::uint64_t> histogram;
    /// Sum of multihypergraph solution counts over every table, and its predicted value d^{d^N - 1}.
    BigCount multiplicity_sum = 0;
    BigCount expected_multiplicity_sum = 0;
    /// Same for hypergraph mode; predicted d^{2^N - 1}.
    BigCount hypergraph_sum = 0;
    BigCount expected_hypergraph_sum = 0;

    bool sum_check() const {
        return multiplicity_sum == expected_multiplicity_sum;
    }
};

/// Solves every canonical table in both modes. Throws BudgetExceeded before doing any
/// work when 2 * d^{d^N - 1} solver calls would exceed the budget.
CensusReport census(std::uint64_t d, std::uint32_t n, Mode mode, const CensusOptions &options = {});

}  // namespace mhg
