#include "mhg/json_io.hpp"

#include <cstdio>
#include <limits>

#include "mhg/errors.hpp"
#include "mhg/residue.hpp"

namespace mhg::json {

namespace {

void require_object(const nlohmann::json &j, const std::string &path, std::initializer_list<const char *> keys) {
    if (!j.is_object()) {
        throw SchemaError(path.empty() ? "/" : path, "expected an object");
    }
    for (const char *k : keys) {
        if (!j.contains(k)) {
            throw SchemaError(path + "/" + k, "missing required field");
        }
    }
    for (const auto &item : j.items()) {
        bool known = false;
        for (const char *k : keys) {
            known = known || item.key() == k;
        }
        if (!known) {
            throw SchemaError(path + "/" + item.key(), "unknown field");
        }
    }
}

std::int64_t get_int(const nlohmann::json &j, const std::string &path, std::int64_t lo, std::int64_t hi) {
    if (!j.is_number_integer()) {
        throw SchemaError(path, "expected an integer");
    }
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(hi)) {
        throw SchemaError(path, "value out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    const auto v = j.get<std::int64_t>();
    if (v < lo || v > hi) {
        throw SchemaError(path, "value " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    }
    return v;
}

const nlohmann::json &get_array(const nlohmann::json &j, const std::string &path) {
    if (!j.is_array()) {
        throw SchemaError(path, "expected an array");
    }
    return j;
}

constexpr std::int64_t kMaxModulus = static_cast<std::int64_t>(Modulus::max_value);
constexpr std::int64_t kMaxVertices = 64;

}  // namespace

nlohmann::json parse(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw SchemaError("", std::string("malformed JSON: ") + e.what());
    }
}

Json edge_list(const WeightedEdgeMap &map) {
    Json edges = Json::array();
    for (const auto &[e, w] : map.edges()) {
        Json item;
        item["vertices"] = e.vertices();
        item["exponents"] = e.exponents();
        item["weight"] = w;
        edges.push_back(std::move(item));
    }
    return edges;
}

Json to_json(const WeightedEdgeMap &map) {
    Json out;
    out["d"] = map.modulus();
    out["n"] = map.vertex_count();
    out["edges"] = edge_list(map);
    return out;
}

WeightedEdgeMap graph_from_json(const nlohmann::json &doc) {
    require_object(doc, "", {"d", "n", "edges"});
    const auto d = get_int(doc["d"], "/d", 2, kMaxModulus);
    const auto n = get_int(doc["n"], "/n", 1, kMaxVertices);
    WeightedEdgeMap map(static_cast<std::uint64_t>(d), static_cast<std::uint32_t>(n));
    const auto &edges = get_array(doc["edges"], "/edges");
    for (std::size_t i = 0; i < edges.size(); i++) {
        const std::string at = "/edges/" + std::to_string(i);
        require_object(edges[i], at, {"vertices", "exponents", "weight"});
        const auto &vs = get_array(edges[i]["vertices"], at + "/vertices");
        const auto &ss = get_array(edges[i]["exponents"], at + "/exponents");
        if (vs.empty()) {
            throw SchemaError(at + "/vertices", "an edge needs at least one vertex");
        }
        if (ss.size() != vs.size()) {
            throw SchemaError(at + "/exponents", "expected one exponent per vertex");
        }
        std::vector<std::uint32_t> vertices, exponents;
        for (std::size_t j = 0; j < vs.size(); j++) {
            const std::string vp = at + "/vertices/" + std::to_string(j);
            const auto v = static_cast<std::uint32_t>(get_int(vs[j], vp, 0, n - 1));
            if (!vertices.empty() && v <= vertices.back()) {
                throw SchemaError(vp, "vertices must be strictly increasing");
            }
            vertices.push_back(v);
            exponents.push_back(
                static_cast<std::uint32_t>(get_int(ss[j], at + "/exponents/" + std::to_string(j), 1, d - 1)));
        }
        const auto w = get_int(edges[i]["weight"], at + "/weight", std::numeric_limits<std::int64_t>::min(),
                               std::numeric_limits<std::int64_t>::max());
        map.add(MultiHyperedge(std::move(vertices), std::move(exponents)), w);
    }
    return map;
}

Json to_json(const PhaseFunction &f) {
    Json out;
    out["d"] = f.modulus();
    out["n"] = f.vertex_count();
    out["phases"] = f.table();
    return out;
}

PhaseFunction phases_from_json(const nlohmann::json &doc, const EngineConfig &config) {
    require_object(doc, "", {"d", "n", "phases"});
    const auto d = get_int(doc["d"], "/d", 2, kMaxModulus);
    const auto n = get_int(doc["n"], "/n", 1, kMaxVertices);
    const std::uint64_t size = table_size(static_cast<std::uint64_t>(d), static_cast<std::uint32_t>(n),
                                          config.table_limit);
    const auto &phases = get_array(doc["phases"], "/phases");
    if (phases.size() != size) {
        throw SchemaError("/phases", "expected d^n = " + std::to_string(size) + " entries, got " +
                                         std::to_string(phases.size()));
    }
    std::vector<std::uint32_t> table(size);
    for (std::size_t i = 0; i < size; i++) {
        table[i] = static_cast<std::uint32_t>(get_int(phases[i], "/phases/" + std::to_string(i), 0, d - 1));
    }
    return PhaseFunction(static_cast<std::uint64_t>(d), static_cast<std::uint32_t>(n), std::move(table));
}

Json to_json(const RingMatrix &m) {
    Json out;
    out["d"] = m.modulus();
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); r++) {
        entries.push_back(std::vector<std::uint32_t>(m.row(r).begin(), m.row(r).end()));
    }
    out["entries"] = std::move(entries);
    return out;
}

Json count_to_json(const BigCount &count) {
    if (count <= std::numeric_limits<std::uint64_t>::max()) {
        return Json(count.convert_to<std::uint64_t>());
    }
    return Json(count.str());
}

Json to_json(const SolveOutcome &outcome, const std::vector<ResidueVector> *all_solutions) {
    Json out;
    out["mode"] = mode_name(outcome.mode);
    out["consistent"] = outcome.solutions.consistent;
    out["count"] = count_to_json(outcome.solutions.solution_count);
    if (outcome.reconstructed) {
        Json sol;
        sol["d"] = outcome.reconstructed->modulus();
        sol["n"] = outcome.reconstructed->vertex_count();
        sol["edges"] = edge_list(*outcome.reconstructed);
        out["solution"] = std::move(sol);
    } else {
        out["solution"] = nullptr;
    }
    if (all_solutions) {
        out["solutions"] = *all_solutions;
    }
    Json vars = Json::array();
    for (const auto &e : outcome.variables) {
        vars.push_back(e.to_string());
    }
    out["variables"] = std::move(vars);
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(outcome.fingerprint));
    out["fingerprint"] = hex;
    return out;
}

Json to_json(const CensusReport &report) {
    Json out;
    out["d"] = report.d;
    out["n"] = report.n;
    out["mode"] = mode_name(report.mode);
    out["total_states"] = count_to_json(report.total_states);
    out["solver_calls"] = report.solver_calls;
    out["hypergraph_reachable"] = report.hypergraph_reachable;
    out["multihypergraph_reachable"] = report.multihypergraph_reachable;
    Json hist = Json::array();
    for (const auto &[count, states] : report.histogram) {
        Json bin;
        bin["solutions"] = count_to_json(count);
        bin["states"] = states;
        hist.push_back(std::move(bin));
    }
    out["histogram"] = std::move(hist);
    out["multiplicity_sum"] = count_to_json(report.multiplicity_sum);
    out["expected_multiplicity_sum"] = count_to_json(report.expected_multiplicity_sum);
    out["hypergraph_sum"] = count_to_json(report.hypergraph_sum);
    out["expected_hypergraph_sum"] = count_to_json(report.expected_hypergraph_sum);
    out["sum_check"] = report.sum_check();
    return out;
}

Json to_json(const std::vector<StabilizerCheck> &checks) {
    Json out = Json::array();
    for (const auto &c : checks) {
        Json item;
        item["vertex"] = c.vertex;
        item["stabilized"] = c.stabilized;
        item["mismatch_indices"] = c.mismatch_indices;
        out.push_back(std::move(item));
    }
    return out;
}

std::string serialize(const WeightedEdgeMap &map) {
    return to_json(map).dump();
}

WeightedEdgeMap deserialize(std::string_view text) {
    return graph_from_json(parse(text));
}

}  // namespace mhg::json
