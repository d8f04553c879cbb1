#pragma once

// JSON forms of every exchanged object. Parsers validate as they go and
// report failures with a JSON pointer to the offending field; emit -> parse
// -> emit is a fixed point.

#include <string>

#include <json.hpp>

#include "linsds/cut.hpp"
#include "linsds/field.hpp"
#include "linsds/graph.hpp"
#include "linsds/matrix.hpp"
#include "linsds/phase.hpp"
#include "linsds/poset.hpp"
#include "linsds/sds.hpp"

namespace linsds {

using nlohmann::json;

// {"field": {"prime": 2}} or {"field": "rational"}
json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const json& j, const std::string& pointer = "");

// Prime scalars are integers; rationals are integers when integral and small
// enough, "num/den" strings otherwise.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& field, const json& j, const std::string& pointer = "");

// {"field": ..., "matrix": [[...], ...]} row-major
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const std::string& pointer = "");

// {"n": 4, "edges": [[0,1], ...]}
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j, const std::string& pointer = "");

// {"n": 4, "strict_pairs": [[1,0], ...]}; closure computed on load
json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j, const std::string& pointer = "");

// Schedules are arrays of vertex indices; digit strings like "013120321"
// are accepted when every vertex index is a single digit.
json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(std::size_t vertex_count, const json& j,
                            const std::string& pointer = "");

// {"field": ..., "graph": ..., "matrix": ..., "schedule": ...}
json system_to_json(const LinearSDS& sds);
LinearSDS system_from_json(const json& j, const std::string& pointer = "");

// {"field": ..., "poset": ..., "chains": [[...], ...], "cut": [h_1, ...]}
json cut_instance_to_json(const Cut& cut, const FieldSpec& field);
std::pair<Cut, FieldSpec> cut_instance_from_json(const json& j, const std::string& pointer = "");

json cut_report_to_json(const CutReport& report);

// Cycle inventory with lengths and counts.
json phase_space_to_json(const PhaseSpace& ps);

json lu_factors_to_json(const LUFactors& lu);

} // namespace linsds
