#include "mhg/correspondence.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "mhg/errors.hpp"
#include "mhg/kernels.hpp"
#include "mhg/residue.hpp"

namespace mhg {

std::string_view mode_name(Mode mode) {
    return mode == Mode::hypergraph ? "hypergraph" : "multihypergraph";
}

std::optional<Mode> parse_mode(std::string_view name) {
    if (name == "hypergraph") {
        return Mode::hypergraph;
    }
    if (name == "multihypergraph") {
        return Mode::multihypergraph;
    }
    return std::nullopt;
}

std::vector<MultiHyperedge> system_variables(std::uint64_t d, std::uint32_t n, Mode mode) {
    return mode == Mode::hypergraph ? enumerate_hyperedges(n) : enumerate_multihyperedges(n, d);
}

RingMatrix build_coefficient_matrix(std::uint64_t d, std::uint32_t n, Mode mode, const EngineConfig &config) {
    const std::uint64_t size = table_size(d, n, config.table_limit);
    const auto vars = system_variables(d, n, mode);
    const std::size_t rows = size - 1;
    if (rows * vars.size() >= config.table_limit) {
        throw SizeLimit("coefficient matrix would have " + std::to_string(rows * vars.size()) + " entries");
    }
    RingMatrix a(rows, vars.size(), d);
    for (std::size_t c = 0; c < vars.size(); c++) {
        const auto column = monomial_table(d, n, vars[c]);
        for (std::size_t r = 0; r < rows; r++) {
            a.set(r, c, column[r + 1]);
        }
    }
    return a;
}

std::uint64_t matrix_fingerprint(const RingMatrix &m) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t value, int bytes) {
        for (int i = 0; i < bytes; i++) {
            h ^= (value >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    mix(m.modulus(), 8);
    mix(m.rows(), 8);
    mix(m.cols(), 8);
    for (auto v : m.entries()) {
        mix(v, 4);
    }
    return h;
}

std::uint64_t CorrespondenceSystem::fingerprint() const {
    return matrix_fingerprint(matrix);
}

namespace {

void require_canonical(const PhaseFunction &f) {
    if (!f.is_canonical()) {
        throw NonCanonical("phase table has f(0,...,0) = " + std::to_string(f[0]) + ", expected 0");
    }
}

std::span<const std::uint32_t> rhs_of(const PhaseFunction &f) {
    return std::span(f.table()).subspan(1);
}

void check_round_trip(const PhaseFunction &f, const WeightedEdgeMap &map, const EngineConfig &config) {
    if (build_state(map, config) != f) {
        throw RoundTripFailure("reconstructed edge map does not rebuild the input phase table");
    }
}

std::variant<GaussSolver, SmithSolver> make_solver(const RingMatrix &a) {
    if (is_prime(a.modulus())) {
        return GaussSolver(a);
    }
    return SmithSolver(a);
}

}  // namespace

CorrespondenceSystem build_system(const PhaseFunction &f, Mode mode, const EngineConfig &config) {
    require_canonical(f);
    const std::uint64_t d = f.modulus();
    const std::uint32_t n = f.vertex_count();
    CorrespondenceSystem sys{d, n, mode, system_variables(d, n, mode), {}, build_coefficient_matrix(d, n, mode, config),
                             ResidueVector(rhs_of(f).begin(), rhs_of(f).end())};
    sys.equations.resize(f.size() - 1);
    for (std::size_t r = 0; r < sys.equations.size(); r++) {
        sys.equations[r] = r + 1;
    }
    return sys;
}

WeightedEdgeMap weights_to_map(std::uint64_t d, std::uint32_t n, const std::vector<MultiHyperedge> &variables,
                               const ResidueVector &weights) {
    if (weights.size() != variables.size()) {
        throw DimensionMismatch("expected " + std::to_string(variables.size()) + " weights, got " +
                                std::to_string(weights.size()));
    }
    WeightedEdgeMap map(d, n);
    for (std::size_t j = 0; j < variables.size(); j++) {
        map.set(variables[j], weights[j]);
    }
    return map;
}

CorrespondenceSolver::CorrespondenceSolver(std::uint64_t d, std::uint32_t n, Mode mode, const EngineConfig &config)
    : d_(d),
      n_(n),
      mode_(mode),
      config_(config),
      variables_(system_variables(d, n, mode)),
      matrix_(build_coefficient_matrix(d, n, mode, config)),
      solver_(make_solver(matrix_)) {
}

SolutionSet CorrespondenceSolver::solve_rhs(std::span<const std::uint32_t> rhs) const {
    return std::visit([&](const auto &s) { return s.solve(rhs); }, solver_);
}

SolveOutcome CorrespondenceSolver::solve(const PhaseFunction &f) const {
    require_canonical(f);
    if (f.modulus() != d_ || f.vertex_count() != n_) {
        throw DimensionMismatch("solver built for a different (d, N)");
    }
    SolveOutcome out{mode_, variables_, solve_rhs(rhs_of(f)), std::nullopt, matrix_fingerprint(matrix_)};
    if (out.solutions.consistent) {
        out.reconstructed = weights_to_map(d_, n_, variables_, *out.solutions.particular);
        check_round_trip(f, *out.reconstructed, config_);
    }
    return out;
}

SolveOutcome solve_weights(const PhaseFunction &f, Mode mode, const EngineConfig &config) {
    require_canonical(f);
    return CorrespondenceSolver(f.modulus(), f.vertex_count(), mode, config).solve(f);
}

RingMatrix coefficient_block(std::uint64_t d, std::uint32_t n, const EngineConfig &config) {
    const Modulus mod(d);
    if (n == 0) {
        throw std::invalid_argument("block size must be at least 1");
    }
    auto side = checked_pow(d - 1, n, config.table_limit);
    if (!side || !checked_pow(*side, 2, config.table_limit - 1)) {
        throw SizeLimit("coefficient block (" + std::to_string(d - 1) + "^" + std::to_string(n) +
                        ")^2 reaches the limit of " + std::to_string(config.table_limit));
    }
    RingMatrix v(d - 1, d - 1, d);
    for (std::uint32_t i = 1; i < d; i++) {
        for (std::uint32_t s = 1; s < d; s++) {
            v.set(i - 1, s - 1, mod.pow(i, s));
        }
    }
    RingMatrix out = v;
    for (std::uint32_t j = 1; j < n; j++) {
        out = kron(out, v);
    }
    return out;
}

namespace {

/// x <- (M (x) M (x) ... (x) M) x for a `rank`-fold tensor with axis length M.rows().
void kron_apply(const RingMatrix &m, std::vector<std::uint32_t> &x, std::size_t rank) {
    const std::size_t len = m.rows();
    const Modulus mod(m.modulus());
    std::vector<std::uint32_t> fibre(len);
    std::size_t stride = 1;
    for (std::size_t axis = 0; axis < rank; axis++, stride *= len) {
        for (std::size_t base = 0; base < x.size(); base++) {
            if ((base / stride) % len != 0) {
                continue;
            }
            for (std::size_t a = 0; a < len; a++) {
                std::uint32_t acc = 0;
                for (std::size_t b = 0; b < len; b++) {
                    acc = mod.add(acc, mod.mul(m.at(a, b), x[base + b * stride]));
                }
                fibre[a] = acc;
            }
            for (std::size_t a = 0; a < len; a++) {
                x[base + a * stride] = fibre[a];
            }
        }
    }
}

}  // namespace

SolveOutcome block_solve_prime(const PhaseFunction &f, const EngineConfig &config) {
    const std::uint64_t d = f.modulus();
    if (!is_prime(d)) {
        throw NonPrimeModulus("block solver needs a prime modulus, got " + std::to_string(d));
    }
    require_canonical(f);
    const std::uint32_t n = f.vertex_count();
    const Modulus mod(d);

    // Subset Moebius transform: b(i) = sum over T within supp(i) of (-1)^{|supp(i)| - |T|} f(i restricted to T).
    std::vector<std::uint32_t> b = f.table();
    for (std::uint32_t v = 0; v < n; v++) {
        const std::size_t stride = f.stride(v);
        for (std::size_t base = 0; base < b.size(); base += stride * d) {
            for (std::size_t off = 0; off < stride; off++) {
                const std::uint32_t zero = b[base + off];
                for (std::uint64_t a = 1; a < d; a++) {
                    auto &x = b[base + a * stride + off];
                    x = mod.sub(x, zero);
                }
            }
        }
    }

    RingMatrix v(d - 1, d - 1, d);
    for (std::uint32_t i = 1; i < d; i++) {
        for (std::uint32_t s = 1; s < d; s++) {
            v.set(i - 1, s - 1, mod.pow(i, s));
        }
    }
    const GaussSolver gauss(v);
    const RingMatrix &v_inverse = gauss.transform();

    const auto variables = system_variables(d, n, Mode::multihypergraph);
    ResidueVector weights;
    weights.reserve(variables.size());
    std::size_t j = 0;
    while (j < variables.size()) {
        const auto &support = variables[j].vertices();
        const std::size_t t = support.size();
        const std::size_t count = *checked_pow(d - 1, t);
        // Tuples with support exactly `support`, last vertex fastest, digits 1 .. d-1.
        std::vector<std::uint32_t> block(count);
        std::vector<std::uint32_t> digits(n, 0);
        for (std::size_t r = 0; r < count; r++) {
            std::size_t rest = r;
            for (std::size_t q = t; q > 0; q--) {
                digits[support[q - 1]] = static_cast<std::uint32_t>(rest % (d - 1)) + 1;
                rest /= d - 1;
            }
            block[r] = b[f.index_of(digits)];
        }
        kron_apply(v_inverse, block, t);
        for (std::size_t r = 0; r < count; r++) {
            weights.push_back(block[r]);
        }
        j += count;
    }

    SolveOutcome out{Mode::multihypergraph,
                     variables,
                     SolutionSet{d, variables.size(), true, weights, 1, {}},
                     weights_to_map(d, n, variables, weights),
                     matrix_fingerprint(build_coefficient_matrix(d, n, Mode::multihypergraph, config))};
    check_round_trip(f, *out.reconstructed, config);
    return out;
}

std::vector<ResidueVector> representability_constraints(std::uint64_t d, std::uint32_t n, Mode mode,
                                                        const EngineConfig &config) {
    if (!is_prime(d)) {
        throw NonPrimeModulus("representability constraints need a prime modulus, got " + std::to_string(d));
    }
    return left_nullspace_prime(build_coefficient_matrix(d, n, mode, config));
}

namespace {

struct CensusTally {
    std::uint64_t hyper_reachable = 0;
    std::uint64_t multi_reachable = 0;
    std::map<BigCount, std::uint64_t> histogram;
    BigCount multi_sum = 0;
    BigCount hyper_sum = 0;

    void merge(const CensusTally &o) {
        hyper_reachable += o.hyper_reachable;
        multi_reachable += o.multi_reachable;
        for (const auto &[k, v] : o.histogram) {
            histogram[k] += v;
        }
        multi_sum += o.multi_sum;
        hyper_sum += o.hyper_sum;
    }
};

CensusTally census_range(std::uint64_t d, std::size_t unknowns, Mode mode, const CorrespondenceSolver &hyper,
                         const CorrespondenceSolver &multi, std::uint64_t begin, std::uint64_t end) {
    CensusTally tally;
    std::vector<std::uint32_t> rhs(unknowns, 0);
    std::uint64_t rest = begin;
    for (std::size_t i = unknowns; i > 0; i--) {
        rhs[i - 1] = static_cast<std::uint32_t>(rest % d);
        rest /= d;
    }
    for (std::uint64_t idx = begin; idx < end; idx++) {
        const auto h = hyper.solve_rhs(rhs);
        const auto m = multi.solve_rhs(rhs);
        tally.hyper_reachable += h.consistent ? 1 : 0;
        tally.multi_reachable += m.consistent ? 1 : 0;
        tally.hyper_sum += h.solution_count;
        tally.multi_sum += m.solution_count;
        tally.histogram[mode == Mode::hypergraph ? h.solution_count : m.solution_count]++;
        for (std::size_t i = unknowns; i > 0; i--) {
            if (++rhs[i - 1] < d) {
                break;
            }
            rhs[i - 1] = 0;
        }
    }
    return tally;
}

}  // namespace

CensusReport census(std::uint64_t d, std::uint32_t n, Mode mode, const CensusOptions &options) {
    const std::uint64_t size = table_size(d, n, options.engine.table_limit);
    const std::size_t unknowns = size - 1;
    const auto states = checked_pow(d, unknowns, options.budget);
    if (!states || *states > options.budget / 2) {
        throw BudgetExceeded("census over d=" + std::to_string(d) + ", N=" + std::to_string(n) + " needs 2 * " +
                             std::to_string(d) + "^" + std::to_string(unknowns) +
                             " solver calls, budget is " + std::to_string(options.budget));
    }

    const CorrespondenceSolver hyper(d, n, Mode::hypergraph, options.engine);
    const CorrespondenceSolver multi(d, n, Mode::multihypergraph, options.engine);

    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(*states)));
    std::vector<CensusTally> parts(workers);
    auto range = [&](unsigned w) {
        const std::uint64_t begin = *states * w / workers;
        const std::uint64_t end = *states * (w + 1) / workers;
        parts[w] = census_range(d, unknowns, mode, hyper, multi, begin, end);
    };
    if (workers == 1) {
        range(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back(range, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    CensusTally total;
    for (const auto &p : parts) {
        total.merge(p);
    }

    CensusReport report;
    report.d = d;
    report.n = n;
    report.mode = mode;
    report.total_states = *states;
    report.solver_calls = 2 * *states;
    report.hypergraph_reachable = total.hyper_reachable;
    report.multihypergraph_reachable = total.multi_reachable;
    report.histogram = std::move(total.histogram);
    report.multiplicity_sum = total.multi_sum;
    report.expected_multiplicity_sum = boost::multiprecision::pow(BigCount(d), static_cast<unsigned>(unknowns));
    report.hypergraph_sum = total.hyper_sum;
    report.expected_hypergraph_sum =
        boost::multiprecision::pow(BigCount(d), static_cast<unsigned>((std::uint64_t{1} << n) - 1));
    return report;
}

}  // namespace mhg
