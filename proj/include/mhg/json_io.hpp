#pragma once

// JSON encodings of edge maps, phase tables, matrices and reports.
// Field order is fixed and every number is a decimal integer; counts too
// large for 64 bits are written as decimal strings.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mhg/correspondence.hpp"
#include "mhg/graph_model.hpp"
#include "mhg/phase_function.hpp"
#include "mhg/ring_matrix.hpp"
#include "mhg/stabilizer.hpp"

namespace mhg::json {

using Json = nlohmann::ordered_json;

/// Parses text, turning syntax errors into SchemaError at the document root.
nlohmann::json parse(std::string_view text);

Json to_json(const WeightedEdgeMap &map);
/// {"d","n","edges":[{"vertices","exponents","weight"}]}. Repeated edges add their weights.
/// Throws SchemaError with a JSON pointer to the offending field.
WeightedEdgeMap graph_from_json(const nlohmann::json &doc);

Json to_json(const PhaseFunction &f);
/// {"d","n","phases"}. Throws SchemaError, or SizeLimit when d^n exceeds `config`.
PhaseFunction phases_from_json(const nlohmann::json &doc, const EngineConfig &config = {});

Json to_json(const RingMatrix &m);
Json count_to_json(const BigCount &count);

Json edge_list(const WeightedEdgeMap &map);
/// consistent, count, solution, fingerprint, and optionally every solution.
Json to_json(const SolveOutcome &outcome, const std::vector<ResidueVector> *all_solutions = nullptr);
Json to_json(const CensusReport &report);
Json to_json(const std::vector<StabilizerCheck> &checks);

std::string serialize(const WeightedEdgeMap &map);
WeightedEdgeMap deserialize(std::string_view text);

}  // namespace mhg::json
