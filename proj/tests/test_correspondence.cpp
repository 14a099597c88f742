#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mhg/errors.hpp"
#include "mhg/correspondence.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mhg;

namespace {

using Table = std::vector<std::uint32_t>;

/// The qutrit pair table that hyperedges cannot reach.
const Table kQutritTable = {0, 1, 0, 1, 1, 0, 0, 1, 0};

/// Its multihyperedge weights in enumeration order: e(0;1), e(0;2), e(1;1), e(1;2), e(0,1;11), (12), (21), (22).
const ResidueVector kQutritWeights = {2, 2, 2, 2, 0, 1, 0, 1};

PhaseFunction table_of(std::uint64_t index, std::uint64_t d, std::uint32_t n) {
    const auto size = oracle::size_of(d, n);
    auto rest = oracle::digits(index, d, static_cast<std::uint32_t>(size - 1));
    Table f(size, 0);
    std::copy(rest.begin(), rest.end(), f.begin() + 1);
    return PhaseFunction(d, n, f);
}

/// Row of the hypergraph system at tuple (a, b) for two qutrits: [a, b, ab].
oracle::Vec hyper_row(std::uint32_t a, std::uint32_t b) {
    return {a % 3, b % 3, a * b % 3};
}

/// Four reference relations for two qutrits, with f given in table order.
bool reference_relations_hold(const Table &f) {
    auto at = [&](std::uint32_t a, std::uint32_t b) { return f[3 * a + b]; };
    return at(1, 0) == 2 * at(2, 0) % 3 && at(0, 1) == 2 * at(0, 2) % 3 &&
           (2 * at(1, 1) + 2 * at(1, 0)) % 3 == at(1, 2) && (2 * at(2, 2) + at(1, 0)) % 3 == at(2, 1);
}

}  // namespace

TEST(Modes, Names) {
    EXPECT_EQ(mode_name(Mode::hypergraph), "hypergraph");
    EXPECT_EQ(parse_mode("multihypergraph"), Mode::multihypergraph);
    EXPECT_FALSE(parse_mode("graph").has_value());
}

TEST(BuildSystem, QutritPairHypergraphMatrix) {
    const auto sys = build_system(plus_state(2, 3), Mode::hypergraph);
    ASSERT_EQ(sys.matrix.rows(), 8u);
    ASSERT_EQ(sys.matrix.cols(), 3u);
    EXPECT_EQ(sys.variables, enumerate_hyperedges(2));
    // Rows keyed by tuple, single-vertex tuples first.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> tuples = {{1, 0}, {2, 0}, {0, 1}, {0, 2},
                                                                         {1, 1}, {1, 2}, {2, 1}, {2, 2}};
    const oracle::Mat expected = {{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 2, 0},
                                  {1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}};
    const auto rows = support::to_rows(sys.matrix);
    for (std::size_t j = 0; j < tuples.size(); j++) {
        const auto [a, b] = tuples[j];
        const std::size_t r = 3 * a + b - 1;
        EXPECT_EQ(sys.equations[r], 3 * a + b);
        EXPECT_EQ(rows[r], expected[j]) << "tuple (" << a << "," << b << ")";
        EXPECT_EQ(rows[r], hyper_row(a, b));
    }
}

TEST(BuildSystem, QutritPairMultihypergraphBlocks) {
    const PhaseFunction f(3, 2, kQutritTable);
    const auto sys = build_system(f, Mode::multihypergraph);
    ASSERT_EQ(sys.matrix.rows(), 8u);
    ASSERT_EQ(sys.matrix.cols(), 8u);
    EXPECT_EQ(sys.rhs, (ResidueVector{1, 0, 1, 1, 0, 0, 1, 0}));
    // Moving the single-vertex terms to the right turns each two-vertex row into
    // f(a, b) - f(a, 0) - f(0, b) against the pure i_0^s i_1^t block.
    for (std::uint32_t a = 1; a < 3; a++) {
        for (std::uint32_t b = 1; b < 3; b++) {
            const std::size_t r = 3 * a + b - 1;
            std::uint64_t lower = 0;
            for (std::size_t c = 0; c < 4; c++) {
                lower += std::uint64_t{sys.matrix.at(r, c)} * kQutritWeights[c];
            }
            EXPECT_EQ(lower % 3, (f[3 * a] + f[b]) % 3);
            std::size_t c = 4;
            for (std::uint32_t s = 1; s < 3; s++) {
                for (std::uint32_t t = 1; t < 3; t++, c++) {
                    EXPECT_EQ(sys.matrix.at(r, c), oracle::ipow(a, s, 3) * oracle::ipow(b, t, 3) % 3);
                }
            }
        }
    }
    // Rows with one zero coordinate see no two-vertex edge.
    for (std::size_t r : {0u, 1u, 2u, 5u}) {
        for (std::size_t c = 4; c < 8; c++) {
            EXPECT_EQ(sys.matrix.at(r, c), 0u);
        }
    }
}

TEST(BuildSystem, ContainmentAndShape) {
    for (std::uint64_t d = 2; d <= 5; d++) {
        for (std::uint32_t n = 1; n <= 3; n++) {
            for (Mode mode : {Mode::hypergraph, Mode::multihypergraph}) {
                const auto a = build_coefficient_matrix(d, n, mode);
                const auto vars = system_variables(d, n, mode);
                ASSERT_EQ(a.rows(), oracle::size_of(d, n) - 1);
                ASSERT_EQ(a.cols(), mode == Mode::hypergraph ? (1u << n) - 1 : oracle::size_of(d, n) - 1);
                for (std::size_t r = 0; r < a.rows(); r++) {
                    const auto i = oracle::digits(r + 1, d, n);
                    for (std::size_t c = 0; c < vars.size(); c++) {
                        const oracle::Edge e{vars[c].vertices(), vars[c].exponents(), 1};
                        ASSERT_EQ(a.at(r, c), oracle::monomial(e, i, d));
                        bool contained = true;
                        for (auto v : e.vertices) {
                            contained = contained && i[v] != 0;
                        }
                        if (!contained) {
                            ASSERT_EQ(a.at(r, c), 0u);
                        }
                    }
                }
            }
        }
    }
}

TEST(BuildSystem, BinaryModesCoincide) {
    for (std::uint32_t n = 1; n <= 4; n++) {
        EXPECT_EQ(build_coefficient_matrix(2, n, Mode::hypergraph), build_coefficient_matrix(2, n, Mode::multihypergraph));
    }
}

TEST(BuildSystem, RejectsNonCanonicalAndOversized) {
    EXPECT_THROW(build_system(PhaseFunction(3, 1, Table{1, 0, 0}), Mode::hypergraph), NonCanonical);
    EXPECT_THROW(solve_weights(PhaseFunction(3, 1, Table{1, 0, 0}), Mode::hypergraph), NonCanonical);
    EXPECT_THROW(build_coefficient_matrix(3, 8, Mode::multihypergraph), SizeLimit);
}

TEST(SolveWeights, QutritTableNeedsMultihyperedges) {
    const PhaseFunction f(3, 2, kQutritTable);
    const auto hyper = solve_weights(f, Mode::hypergraph);
    EXPECT_FALSE(hyper.solutions.consistent);
    EXPECT_EQ(hyper.solutions.solution_count, 0);
    EXPECT_FALSE(hyper.reconstructed.has_value());
    EXPECT_FALSE(reference_relations_hold(kQutritTable));

    const auto multi = solve_weights(f, Mode::multihypergraph);
    ASSERT_TRUE(multi.solutions.consistent);
    EXPECT_EQ(multi.solutions.solution_count, 1);
    EXPECT_EQ(*multi.solutions.particular, kQutritWeights);
    EXPECT_EQ(build_state(*multi.reconstructed), f);
}

TEST(SolveWeights, QuartCases) {
    const auto none = solve_weights(PhaseFunction(4, 1, Table{0, 1, 1, 2}), Mode::multihypergraph);
    EXPECT_FALSE(none.solutions.consistent);
    EXPECT_EQ(none.solutions.solution_count, 0);

    const auto many = solve_weights(PhaseFunction(4, 1, Table{0, 1, 2, 1}), Mode::multihypergraph);
    ASSERT_TRUE(many.solutions.consistent);
    auto all = many.solutions.enumerate();
    std::sort(all.begin(), all.end());
    // Brute force over all 64 weight triples.
    const oracle::Mat block = {{1, 1, 1}, {2, 0, 0}, {3, 1, 3}};
    EXPECT_EQ(all, oracle::all_solutions(block, {1, 2, 1}, 4, 3));
    EXPECT_EQ(all, (std::vector<ResidueVector>{{1, 1, 3}, {1, 3, 1}, {3, 1, 1}, {3, 3, 3}}));
    for (const auto &w : all) {
        EXPECT_EQ(build_state(weights_to_map(4, 1, many.variables, w)).table(), (Table{0, 1, 2, 1}));
    }
}

TEST(SolveWeights, RoundTripOnRandomMaps) {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 150; t++) {
        const std::uint64_t d = 2 + rng() % 5;
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 2);
        const auto map = support::to_map(oracle::random_edges(rng, d, n, 1 + rng() % 6), d, n);
        const auto f = build_state(map);
        const auto out = solve_weights(f, Mode::multihypergraph);
        ASSERT_TRUE(out.solutions.consistent);
        ASSERT_GE(out.solutions.solution_count, 1);
        ASSERT_EQ(build_state(*out.reconstructed), f);
        if (out.solutions.solution_count <= 256) {
            for (const auto &w : out.solutions.enumerate()) {
                ASSERT_EQ(build_state(weights_to_map(d, n, out.variables, w)), f);
            }
        }
        if (is_prime(d)) {
            ASSERT_EQ(out.solutions.solution_count, 1);
            ASSERT_EQ(*out.reconstructed, map);
        }
    }
}

TEST(SolveWeights, HypergraphRoundTrip) {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 60; t++) {
        const std::uint64_t d = 2 + rng() % 5;
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 3);
        WeightedEdgeMap map(d, n);
        for (const auto &e : enumerate_hyperedges(n)) {
            map.set(e, rng() % d);
        }
        const auto out = solve_weights(build_state(map), Mode::hypergraph);
        ASSERT_TRUE(out.solutions.consistent);
        ASSERT_EQ(build_state(*out.reconstructed), build_state(map));
    }
}

TEST(SolverReuse, MatchesFreshSolves) {
    const CorrespondenceSolver solver(5, 1, Mode::multihypergraph);
    EXPECT_EQ(solver.variables().size(), 4u);
    for (std::uint64_t idx = 0; idx < 625; idx += 7) {
        const auto f = table_of(idx, 5, 1);
        ASSERT_EQ(solver.solve(f).solutions.particular, solve_weights(f, Mode::multihypergraph).solutions.particular);
    }
    EXPECT_THROW(solver.solve(plus_state(1, 7)), DimensionMismatch);
}

TEST(BlockSolve, AgreesWithEliminationOnEveryQutritPairTable) {
    const CorrespondenceSolver solver(3, 2, Mode::multihypergraph);
    for (std::uint64_t idx = 0; idx < 6561; idx++) {
        const auto f = table_of(idx, 3, 2);
        const auto block = block_solve_prime(f);
        const auto full = solver.solve(f);
        ASSERT_EQ(block.solutions.particular, full.solutions.particular) << idx;
        ASSERT_EQ(block.fingerprint, full.fingerprint);
    }
}

TEST(BlockSolve, AgreesOnLargerPrimes) {
    std::mt19937_64 rng(53);
    for (auto [d, n] : {std::pair<std::uint64_t, std::uint32_t>{5, 2}, {7, 2}, {3, 3}, {2, 4}, {5, 3}}) {
        for (int t = 0; t < 10; t++) {
            Table f(oracle::size_of(d, n));
            for (std::size_t i = 1; i < f.size(); i++) {
                f[i] = static_cast<std::uint32_t>(rng() % d);
            }
            const PhaseFunction pf(d, n, f);
            ASSERT_EQ(block_solve_prime(pf).solutions.particular,
                      solve_weights(pf, Mode::multihypergraph).solutions.particular);
        }
    }
    EXPECT_THROW(block_solve_prime(plus_state(1, 4)), NonPrimeModulus);
    EXPECT_THROW(block_solve_prime(PhaseFunction(3, 1, Table{2, 0, 0})), NonCanonical);
}

TEST(CoefficientBlock, Examples) {
    EXPECT_EQ(coefficient_block(4, 1), RingMatrix(4, {{1, 1, 1}, {2, 0, 0}, {3, 1, 3}}));
    EXPECT_EQ(coefficient_block(2, 3), RingMatrix(2, {{1}}));
    EXPECT_EQ(coefficient_block(6, 1),
              RingMatrix(6, {{1, 1, 1, 1, 1}, {2, 4, 2, 4, 2}, {3, 3, 3, 3, 3}, {4, 4, 4, 4, 4}, {5, 1, 5, 1, 5}}));
    const auto five = coefficient_block(5, 1);
    EXPECT_EQ(GaussSolver(five).rank(), 4u);
    for (std::uint32_t i = 1; i < 5; i++) {
        for (std::uint32_t s = 1; s < 5; s++) {
            EXPECT_EQ(five.at(i - 1, s - 1), oracle::ipow(i, s, 5));
        }
    }
    EXPECT_THROW(coefficient_block(256, 3), SizeLimit);
}

TEST(CoefficientBlock, KroneckerPowerMatchesSupportBlock) {
    // The (d-1)^n x (d-1)^n block of the full system on the rows and columns of support {0..n-1}.
    for (std::uint64_t d : {3u, 4u, 5u}) {
        for (std::uint32_t n = 1; n <= 2; n++) {
            const auto block = coefficient_block(d, n);
            const auto full = build_coefficient_matrix(d, n, Mode::multihypergraph);
            const auto vars = system_variables(d, n, Mode::multihypergraph);
            const std::size_t first = vars.size() - block.cols();
            std::size_t r = 0;
            for (std::uint64_t idx = 1; idx < oracle::size_of(d, n); idx++) {
                const auto i = oracle::digits(idx, d, n);
                if (std::count(i.begin(), i.end(), 0u) != 0) {
                    continue;
                }
                for (std::size_t c = 0; c < block.cols(); c++) {
                    ASSERT_EQ(block.at(r, c), full.at(idx - 1, first + c));
                }
                r++;
            }
            ASSERT_EQ(r, block.rows());
        }
    }
}

TEST(Constraints, QutritPairAgainstFourReferenceRelations) {
    const auto basis = representability_constraints(3, 2, Mode::hypergraph);
    EXPECT_EQ(basis.size(), 5u);
    const auto a = build_coefficient_matrix(3, 2, Mode::hypergraph);
    std::size_t accepted = 0, reference = 0, both = 0;
    for (std::uint64_t idx = 0; idx < 6561; idx++) {
        const auto f = table_of(idx, 3, 2).table();
        bool ok = true;
        for (const auto &y : basis) {
            std::uint64_t acc = 0;
            for (std::size_t r = 0; r < 8; r++) {
                acc += std::uint64_t{y[r]} * f[r + 1];
            }
            ok = ok && acc % 3 == 0;
        }
        const bool truth = !oracle::all_solutions(support::to_rows(a), {f.begin() + 1, f.end()}, 3, 3).empty();
        ASSERT_EQ(ok, truth);
        accepted += ok;
        reference += reference_relations_hold(f);
        both += ok && reference_relations_hold(f);
    }
    EXPECT_EQ(accepted, 27u);
    // The four reference relations leave a four-dimensional solution space: every
    // reachable table satisfies them, but so do 54 unreachable ones.
    EXPECT_EQ(both, 27u);
    EXPECT_EQ(reference, 81u);
}

TEST(Constraints, EmptyWhereSystemsAreInvertible) {
    for (std::uint64_t q : {2u, 3u, 5u}) {
        EXPECT_TRUE(representability_constraints(q, 2, Mode::multihypergraph).empty());
    }
    for (std::uint32_t n = 1; n <= 3; n++) {
        EXPECT_TRUE(representability_constraints(2, n, Mode::hypergraph).empty());
    }
    EXPECT_THROW(representability_constraints(4, 1, Mode::multihypergraph), NonPrimeModulus);
}

TEST(Census, QubitPairHypergraph) {
    const auto r = census(2, 2, Mode::hypergraph);
    EXPECT_EQ(r.total_states, 8);
    EXPECT_EQ(r.hypergraph_reachable, 8u);
    EXPECT_EQ(r.histogram, (std::map<BigCount, std::uint64_t>{{1, 8}}));
    EXPECT_EQ(r.solver_calls, 16u);
}

TEST(Census, QutritPairReachability) {
    const auto r = census(3, 2, Mode::hypergraph);
    EXPECT_EQ(r.total_states, 6561);
    EXPECT_EQ(r.hypergraph_reachable, 27u);
    EXPECT_EQ(r.multihypergraph_reachable, 6561u);
    EXPECT_EQ(r.histogram, (std::map<BigCount, std::uint64_t>{{0, 6534}, {1, 27}}));
    EXPECT_EQ(r.hypergraph_sum, r.expected_hypergraph_sum);
    EXPECT_TRUE(r.sum_check());
}

TEST(Census, QuartMultiplicities) {
    const auto r = census(4, 1, Mode::multihypergraph);
    EXPECT_EQ(r.total_states, 64);
    EXPECT_EQ(r.multiplicity_sum, 64);
    EXPECT_TRUE(r.sum_check());
    // Brute force: histogram of how many of the 64 weight triples land on each table.
    std::map<Table, std::uint64_t> hits;
    for (std::uint64_t w = 0; w < 64; w++) {
        const auto ws = oracle::digits(w, 4, 3);
        hits[oracle::phase_table({{{0}, {1}, ws[0]}, {{0}, {2}, ws[1]}, {{0}, {3}, ws[2]}}, 4, 1)]++;
    }
    std::map<BigCount, std::uint64_t> expected;
    expected[0] = 64 - hits.size();
    for (const auto &[table, count] : hits) {
        expected[count]++;
    }
    EXPECT_EQ(r.histogram, expected);
    EXPECT_EQ(hits.count(Table{0, 1, 1, 2}), 0u);
    EXPECT_EQ(hits.at(Table{0, 1, 2, 1}), 4u);
}

TEST(Census, ConservationAcrossSmallCases) {
    for (auto [d, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {2, 2}, {3, 1}, {5, 1}, {6, 1}}) {
        const auto r = census(d, n, Mode::multihypergraph);
        EXPECT_TRUE(r.sum_check()) << d << "," << n;
        EXPECT_EQ(r.hypergraph_sum, r.expected_hypergraph_sum);
        BigCount tables = 0;
        for (const auto &[count, number] : r.histogram) {
            tables += number;
        }
        EXPECT_EQ(tables, r.total_states);
        EXPECT_LE(r.hypergraph_reachable, r.expected_hypergraph_sum);
    }
}

TEST(Census, BudgetAndThreads) {
    EXPECT_THROW(census(3, 3, Mode::hypergraph), BudgetExceeded);
    EXPECT_THROW(census(2, 2, Mode::hypergraph, CensusOptions{15, 1, {}}), BudgetExceeded);
    EXPECT_NO_THROW(census(2, 2, Mode::hypergraph, CensusOptions{16, 1, {}}));
    const auto one = census(4, 1, Mode::multihypergraph);
    const auto many = census(4, 1, Mode::multihypergraph, CensusOptions{10'000'000, 5, {}});
    EXPECT_EQ(one.histogram, many.histogram);
    EXPECT_EQ(one.multiplicity_sum, many.multiplicity_sum);
    EXPECT_EQ(one.hypergraph_reachable, many.hypergraph_reachable);
}

TEST(Fingerprint, StableAndSensitive) {
    const auto a = build_coefficient_matrix(3, 2, Mode::hypergraph);
    EXPECT_EQ(matrix_fingerprint(a), matrix_fingerprint(build_coefficient_matrix(3, 2, Mode::hypergraph)));
    EXPECT_NE(matrix_fingerprint(a), matrix_fingerprint(build_coefficient_matrix(3, 2, Mode::multihypergraph)));
    auto b = a;
    b.set(7, 2, 0);
    EXPECT_NE(matrix_fingerprint(a), matrix_fingerprint(b));
    // FNV-1a of the empty 0 x 0 matrix over Z_2, computed by hand from the byte stream.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t word : {2ull, 0ull, 0ull}) {
        for (int i = 0; i < 8; i++) {
            h ^= (word >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    }
    EXPECT_EQ(matrix_fingerprint(RingMatrix(0, 0, 2)), h);
}
