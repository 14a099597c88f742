// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail 2,4]
//
// Without flags the exit status is 0 only if every criterion passes. With
// --expect-fail the run succeeds only if exactly the listed criteria fail, so a
// known negative result keeps the suite green while a fix (or a new failure)
// still turns it red.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mhg/correspondence.hpp"
#include "mhg/phase_function.hpp"
#include "mhg/stabilizer.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mhg;

namespace {

using Table = std::vector<std::uint32_t>;

struct Verdict {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    const char *name;
    double budget_ms;
    std::function<Verdict()> run;
};

PhaseFunction table_of(std::uint64_t index, std::uint64_t d, std::uint32_t n) {
    const auto size = oracle::size_of(d, n);
    const auto rest = oracle::digits(index, d, static_cast<std::uint32_t>(size - 1));
    Table f(size, 0);
    std::copy(rest.begin(), rest.end(), f.begin() + 1);
    return PhaseFunction(d, n, f);
}

std::string str(const BigCount &c) {
    return c.str();
}

const Table kQutritTable = {0, 1, 0, 1, 1, 0, 0, 1, 0};

Verdict hypergraph_matrix() {
    const auto sys = build_system(plus_state(2, 3), Mode::hypergraph);
    // Coefficients [i0, i1, i0*i1] for tuples (1,0) (2,0) (0,1) (0,2) (1,1) (1,2) (2,1) (2,2).
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> tuples = {{1, 0}, {2, 0}, {0, 1}, {0, 2},
                                                                         {1, 1}, {1, 2}, {2, 1}, {2, 2}};
    const oracle::Mat expected = {{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 2, 0},
                                  {1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}};
    if (sys.matrix.rows() != 8 || sys.matrix.cols() != 3 || sys.variables != enumerate_hyperedges(2)) {
        return {false, "wrong shape or variable order"};
    }
    const auto rows = support::to_rows(sys.matrix);
    for (std::size_t j = 0; j < tuples.size(); j++) {
        const std::size_t r = 3 * tuples[j].first + tuples[j].second - 1;
        if (rows[r] != expected[j] || sys.equations[r] != r + 1) {
            return {false, "row " + std::to_string(r) + " differs"};
        }
    }
    return {true, "8x3 matrix identical"};
}

Verdict reference_relations() {
    const auto basis = representability_constraints(3, 2, Mode::hypergraph);
    std::size_t computed = 0, reference = 0, agree = 0;
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
        auto at = [&](std::uint32_t a, std::uint32_t b) { return f[3 * a + b]; };
        const bool rel = at(1, 0) == 2 * at(2, 0) % 3 && at(0, 1) == 2 * at(0, 2) % 3 &&
                         (2 * at(1, 1) + 2 * at(1, 0)) % 3 == at(1, 2) && (2 * at(2, 2) + at(1, 0)) % 3 == at(2, 1);
        computed += ok;
        reference += rel;
        agree += ok == rel;
    }
    std::ostringstream out;
    out << basis.size() << " computed constraints accept " << computed << " vectors, the four relations accept "
        << reference << ", agreement on " << agree << "/6561";
    return {agree == 6561, out.str()};
}

Verdict qutrit_obstruction() {
    const PhaseFunction f(3, 2, kQutritTable);
    const auto hyper = solve_weights(f, Mode::hypergraph);
    const auto multi = solve_weights(f, Mode::multihypergraph);
    const ResidueVector weights = {2, 2, 2, 2, 0, 1, 0, 1};
    const bool ok = !hyper.solutions.consistent && hyper.solutions.solution_count == 0 &&
                    multi.solutions.solution_count == 1 && *multi.solutions.particular == weights &&
                    build_state(*multi.reconstructed) == f;
    return {ok, "hypergraph count " + str(hyper.solutions.solution_count) + ", multihypergraph count " +
                    str(multi.solutions.solution_count)};
}

Verdict quart_cases() {
    const auto none = solve_weights(PhaseFunction(4, 1, Table{0, 1, 1, 2}), Mode::multihypergraph);
    const auto many = solve_weights(PhaseFunction(4, 1, Table{0, 1, 2, 1}), Mode::multihypergraph);
    auto all = many.solutions.enumerate();
    std::sort(all.begin(), all.end());
    const std::vector<ResidueVector> claimed = {{1, 3, 1}, {3, 1, 1}};
    std::ostringstream out;
    out << "(0,1,1,2) count " << str(none.solutions.solution_count) << "; (0,1,2,1) count "
        << str(many.solutions.solution_count) << ":";
    for (const auto &w : all) {
        out << " (" << w[0] << "," << w[1] << "," << w[2] << ")";
    }
    return {none.solutions.solution_count == 0 && many.solutions.solution_count == 2 && all == claimed, out.str()};
}

Verdict binary_census() {
    std::ostringstream out;
    bool ok = true;
    for (std::uint32_t n = 1; n <= 3; n++) {
        const auto r = census(2, n, Mode::hypergraph);
        const std::uint64_t expected = std::uint64_t{1} << ((1u << n) - 1);
        const bool good = r.total_states == expected && r.hypergraph_reachable == expected &&
                          r.histogram.size() == 1 && r.histogram.begin()->first == 1;
        ok = ok && good;
        out << (n > 1 ? "; " : "") << "N=" << n << ": " << r.hypergraph_reachable << "/" << str(r.total_states)
            << " unique";
    }
    return {ok, out.str()};
}

Verdict qutrit_census() {
    const auto r = census(3, 2, Mode::multihypergraph);
    const bool ok = r.total_states == 6561 && r.multihypergraph_reachable == 6561 && r.histogram.size() == 1 &&
                    r.histogram.begin()->first == 1 && r.hypergraph_reachable == 27;
    return {ok, std::to_string(r.multihypergraph_reachable) + " multihypergraph-reachable with multiplicity 1, " +
                    std::to_string(r.hypergraph_reachable) + " hypergraph-reachable"};
}

Verdict conservation() {
    const auto four = census(4, 1, Mode::multihypergraph);
    const auto six = census(6, 1, Mode::multihypergraph);
    BigCount weighted4 = 0, weighted6 = 0;
    for (const auto &[count, states] : four.histogram) {
        weighted4 += count * states;
    }
    for (const auto &[count, states] : six.histogram) {
        weighted6 += count * states;
    }
    const bool ok = weighted4 == 64 && four.sum_check() && weighted6 == 7776 && six.sum_check();
    return {ok, "d=4 sum " + str(weighted4) + ", d=6 sum " + str(weighted6)};
}

Verdict stabilizers() {
    std::size_t maps = 0;
    auto all_true = [](const WeightedEdgeMap &m) {
        for (const auto &c : verify(m)) {
            if (!c.stabilized) {
                return false;
            }
        }
        return true;
    };
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 200; t++, maps++) {
        const std::uint64_t d = 2 + rng() % 4;
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 3);
        if (!all_true(support::to_map(oracle::random_edges(rng, d, n, 1 + rng() % 6), d, n))) {
            return {false, "random map " + std::to_string(t) + " not stabilized"};
        }
    }
    for (auto [d, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 2}, {3, 1}}) {
        const auto edges = enumerate_multihyperedges(n, d);
        const auto count = oracle::size_of(d, static_cast<std::uint32_t>(edges.size()));
        for (std::uint64_t code = 0; code < count; code++, maps++) {
            const auto ws = oracle::digits(code, d, static_cast<std::uint32_t>(edges.size()));
            WeightedEdgeMap m(d, n);
            for (std::size_t j = 0; j < edges.size(); j++) {
                m.set(edges[j], ws[j]);
            }
            if (!all_true(m)) {
                return {false, "exhaustive map " + std::to_string(code) + " not stabilized"};
            }
        }
    }
    return {true, std::to_string(maps) + " maps stabilized at every vertex"};
}

Verdict conjugation() {
    std::size_t cases = 0, findings = 0, linear_failures = 0, derived_failures = 0;
    for (std::uint64_t d = 2; d <= 4; d++) {
        for (std::uint32_t n = 1; n <= 2; n++) {
            for (const auto &e : enumerate_multihyperedges(n, d)) {
                for (std::uint32_t m = 0; m < d; m++) {
                    for (auto k : e.vertices()) {
                        const auto r = conjugation_identity(e, m, k, d, n);
                        cases++;
                        derived_failures += !r.derived_form_holds;
                        if (!r.edge_deleted_form_holds) {
                            findings++;
                            linear_failures += *e.exponent_of(k) == 1;
                        }
                    }
                }
            }
        }
    }
    std::ostringstream out;
    out << cases << " cases; edge-deleted form fails in " << findings
        << " (" << linear_failures << " with target exponent 1), exact correction holds in " << cases - derived_failures;
    return {linear_failures == 0 && derived_failures == 0, out.str()};
}

Verdict dense_oracle() {
    std::mt19937_64 rng(77);
    double worst = 0;
    for (int t = 0; t < 100; t++) {
        const std::uint64_t d = 2 + rng() % 3;
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 3);
        const auto edges = oracle::random_edges(rng, d, n, 1 + rng() % 6);
        const auto dense = to_dense(build_state(support::to_map(edges, d, n)));
        const auto size = oracle::size_of(d, n);
        std::vector<oracle::Cplx> psi(size, 1.0 / std::sqrt(static_cast<double>(size)));
        for (const auto &e : edges) {
            psi = oracle::apply(oracle::cz_matrix(e, e.weight, d, n), psi);
        }
        for (std::size_t i = 0; i < size; i++) {
            worst = std::max(worst, std::abs(dense.amplitudes[i] - psi[i]));
        }
    }
    std::ostringstream out;
    out << "max amplitude error " << worst;
    return {worst < 1e-10, out.str()};
}

Verdict coefficient_blocks() {
    const auto four = coefficient_block(4, 1);
    const auto six = coefficient_block(6, 1);
    RingMatrix direct(5, 5, 6);
    for (std::uint32_t i = 1; i < 6; i++) {
        for (std::uint32_t s = 1; s < 6; s++) {
            direct.set(i - 1, s - 1, oracle::ipow(i, s, 6));
        }
    }
    const auto row = support::to_rows(six)[1];
    const bool ok = four == RingMatrix(4, {{1, 1, 1}, {2, 0, 0}, {3, 1, 3}}) && six == direct &&
                    row == oracle::Vec{2, 4, 2, 4, 2} && row != oracle::Vec{2, 4, 4, 4, 2};
    return {ok, "d=6 row for i=2 is (2,4,2,4,2), reference row (2,4,4,4,2) differs"};
}

std::set<int> parse_list(const char *text) {
    std::set<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.insert(std::stoi(item));
        }
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    std::set<int> expected_failures;
    for (int i = 1; i < argc; i++) {
        if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
            expected_failures = parse_list(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--expect-fail N,M,...]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "hypergraph system matrix, two qutrits", 1, hypergraph_matrix},
        {2, "computed constraints match the four reference relations", 1000, reference_relations},
        {3, "qutrit table unreachable by hyperedges, unique multihyperedge weights", 10, qutrit_obstruction},
        {4, "d=4 single-qudit tables: counts 0 and 2", 10, quart_cases},
        {5, "qubit census: every table has one hypergraph solution", 5000, binary_census},
        {6, "qutrit pair census: bijection and 27 hypergraph-reachable", 60000, qutrit_census},
        {7, "multiplicity conservation at d=4 and d=6", 60000, conservation},
        {8, "stabilizer generators fix the state", 120000, stabilizers},
        {9, "conjugation identity, exhaustive", 120000, conjugation},
        {10, "phase tables agree with dense matrix simulation", 60000, dense_oracle},
        {11, "coefficient blocks for d=4 and d=6", 1, coefficient_blocks},
    };

    std::set<int> failed;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception &e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (ms > c.budget_ms) {
            v.pass = false;
            v.detail += "; over time budget";
        }
        if (!v.pass) {
            failed.insert(c.id);
        }
        std::printf("criterion %2d: %s  %s (%s; %.2f ms)%s\n", c.id, v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str(),
                    ms, !v.pass && expected_failures.count(c.id) ? " [expected]" : "");
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
    if (failed != expected_failures) {
        for (int id : expected_failures) {
            if (!failed.count(id)) {
                std::printf("criterion %d was expected to fail but passed\n", id);
            }
        }
        return 1;
    }
    return 0;
}
