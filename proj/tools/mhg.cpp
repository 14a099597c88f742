// mhg: multihypergraph states from the command line.
//
// Exit codes: 0 success, 1 negative mathematical result, 2 usage or schema
// error, 3 size or budget limit, 4 internal invariant violation.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mhg/correspondence.hpp"
#include "mhg/errors.hpp"
#include "mhg/json_io.hpp"
#include "mhg/phase_function.hpp"
#include "mhg/stabilizer.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kLimit = 3;
constexpr int kInternal = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const mhg::json::Json &doc) {
    std::cout << doc.dump() << '\n';
}

mhg::Mode mode_from(const std::string &name) {
    auto mode = mhg::parse_mode(name);
    if (!mode) {
        throw UsageError("unknown mode '" + name + "', expected hypergraph or multihypergraph");
    }
    return *mode;
}

struct Options {
    std::uint64_t table_limit = mhg::EngineConfig{}.table_limit;

    std::string graph;
    bool from_stdin = false;
    bool dense = false;

    std::string phases;
    std::string mode = "multihypergraph";
    bool all_solutions = false;
    std::uint64_t cap = 1u << 16;

    std::uint64_t d = 0;
    std::uint32_t n = 0;
    std::uint32_t block = 0;
    std::uint64_t budget = mhg::CensusOptions{}.budget;
    unsigned threads = 1;
    bool exhaustive = false;

    mhg::EngineConfig engine() const {
        return {table_limit};
    }
    std::string graph_source() const {
        if (from_stdin == !graph.empty()) {
            throw UsageError("give exactly one of --graph FILE or --stdin");
        }
        return from_stdin ? "-" : graph;
    }
};

int build_state_cmd(const Options &o) {
    const auto map = mhg::json::deserialize(read_input(o.graph_source()));
    const auto state = mhg::build_state(map, o.engine());
    if (o.dense) {
        mhg::write_dense(std::cout, mhg::to_dense(state));
    } else {
        emit(mhg::json::to_json(state));
    }
    return kOk;
}

int solve_cmd(const Options &o) {
    const auto f = mhg::json::phases_from_json(mhg::json::parse(read_input(o.phases)), o.engine());
    const auto outcome = mhg::solve_weights(f, mode_from(o.mode), o.engine());
    if (o.all_solutions) {
        auto all = outcome.solutions.enumerate(o.cap);
        std::sort(all.begin(), all.end());
        emit(mhg::json::to_json(outcome, &all));
    } else {
        emit(mhg::json::to_json(outcome));
    }
    return outcome.solutions.consistent ? kOk : kNegative;
}

int verify_cmd(const Options &o) {
    const auto map = mhg::json::deserialize(read_input(o.graph_source()));
    const auto checks = mhg::verify(map, o.engine());
    emit(mhg::json::to_json(checks));
    for (const auto &c : checks) {
        if (!c.stabilized) {
            return kNegative;
        }
    }
    return kOk;
}

int census_cmd(const Options &o) {
    mhg::CensusOptions opts;
    opts.budget = o.budget;
    opts.threads = o.threads;
    opts.engine = o.engine();
    const auto report = mhg::census(o.d, o.n, mode_from(o.mode), opts);
    emit(mhg::json::to_json(report));
    return report.sum_check() ? kOk : kNegative;
}

int identity_cmd(const Options &o) {
    const auto edges = mhg::enumerate_multihyperedges(o.n, o.d);
    std::map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> by_exponent;  // s_k -> (cases, edge-deleted failures)
    mhg::json::Json findings = mhg::json::Json::array();
    std::uint64_t cases = 0;
    bool derived = true;
    for (const auto &e : edges) {
        if (!o.exhaustive && e.size() != o.n) {
            continue;
        }
        for (std::uint32_t m = 0; m < o.d; m++) {
            for (auto k : e.vertices()) {
                const auto r = mhg::conjugation_identity(e, m, k, o.d, o.n, o.engine());
                const auto s = *e.exponent_of(k);
                cases++;
                by_exponent[s].first++;
                derived = derived && r.derived_form_holds;
                if (!r.edge_deleted_form_holds) {
                    by_exponent[s].second++;
                    mhg::json::Json f;
                    f["edge"] = e.to_string();
                    f["m"] = m;
                    f["k"] = k;
                    f["mismatch_indices"] = r.mismatch_indices;
                    f["correction"] = r.correction;
                    findings.push_back(std::move(f));
                }
            }
        }
    }
    bool deleted_ok = true;
    mhg::json::Json summary = mhg::json::Json::array();
    for (const auto &[s, tally] : by_exponent) {
        mhg::json::Json row;
        row["target_exponent"] = s;
        row["cases"] = tally.first;
        row["edge_deleted_failures"] = tally.second;
        summary.push_back(std::move(row));
        deleted_ok = deleted_ok && tally.second == 0;
    }
    mhg::json::Json out;
    out["d"] = o.d;
    out["n"] = o.n;
    out["exhaustive"] = o.exhaustive;
    out["cases"] = cases;
    out["edge_deleted_form_holds"] = deleted_ok;
    out["derived_form_holds"] = derived;
    out["by_target_exponent"] = std::move(summary);
    out["findings"] = std::move(findings);
    emit(out);
    return deleted_ok && derived ? kOk : kNegative;
}

int matrix_cmd(const Options &o) {
    emit(mhg::json::to_json(mhg::coefficient_block(o.d, o.block, o.engine())));
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Multihypergraph states: build, solve, verify, count"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--table-limit", o.table_limit, "Phase tables (d^N entries) must stay below this size");

    auto *build = app.add_subcommand("build-state", "Phase table of an edge map");
    build->add_option("--graph", o.graph, "Edge map JSON file");
    build->add_flag("--stdin", o.from_stdin, "Read the edge map from standard input");
    build->add_flag("--dense", o.dense, "Print amplitudes as 'index re im' lines instead of JSON");

    auto *solve = app.add_subcommand("solve", "Edge weights realizing a phase table");
    solve->add_option("--phases", o.phases, "Phase table JSON file, or - for standard input")->required();
    solve->add_option("--mode", o.mode, "hypergraph or multihypergraph");
    solve->add_flag("--all-solutions", o.all_solutions, "List every solution in lexicographic order");
    solve->add_option("--cap", o.cap, "Refuse to list more solutions than this");

    auto *verify = app.add_subcommand("verify-stabilizers", "Check every stabilizer generator");
    verify->add_option("--graph", o.graph, "Edge map JSON file");
    verify->add_flag("--stdin", o.from_stdin, "Read the edge map from standard input");

    auto *census = app.add_subcommand("census", "Classify every canonical phase table");
    census->add_option("--d", o.d, "Qudit dimension")->required();
    census->add_option("--n", o.n, "Number of qudits")->required();
    census->add_option("--mode", o.mode, "Mode whose multiplicities form the histogram");
    census->add_option("--budget", o.budget, "Maximum number of solver calls");
    census->add_option("--threads", o.threads, "Worker threads");

    auto *identity = app.add_subcommand("identity-check", "Check the edge-deletion conjugation identity");
    identity->add_option("--d", o.d, "Qudit dimension")->required();
    identity->add_option("--n", o.n, "Number of qudits")->required();
    identity->add_flag("--exhaustive", o.exhaustive, "Every edge, not only those spanning all qudits");

    auto *matrix = app.add_subcommand("matrix", "Coefficient block V^(x)n with V[i][s] = i^s mod d");
    matrix->add_option("--d", o.d, "Modulus")->required();
    matrix->add_option("--block", o.block, "Support size n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*build) {
            return build_state_cmd(o);
        }
        if (*solve) {
            return solve_cmd(o);
        }
        if (*verify) {
            return verify_cmd(o);
        }
        if (*census) {
            return census_cmd(o);
        }
        if (*identity) {
            return identity_cmd(o);
        }
        return matrix_cmd(o);
    } catch (const mhg::SchemaError &e) {
        std::cerr << "mhg: schema error: " << e.what() << '\n';
        return kUsage;
    } catch (const mhg::SizeLimit &e) {
        std::cerr << "mhg: size limit: " << e.what() << '\n';
        return kLimit;
    } catch (const mhg::BudgetExceeded &e) {
        std::cerr << "mhg: budget exceeded: " << e.what() << '\n';
        return kLimit;
    } catch (const mhg::RoundTripFailure &e) {
        std::cerr << "mhg: internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const mhg::Error &e) {
        std::cerr << "mhg: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError &e) {
        std::cerr << "mhg: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "mhg: invalid input: " << e.what() << '\n';
        return kUsage;
    }
}
