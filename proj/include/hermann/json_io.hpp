#pragma once

#include <string>

#include <json.hpp>

#include "hermann/report.hpp"
#include "hermann/svg.hpp"

namespace hermann {

using Json = nlohmann::ordered_json;

/// {"pi_rational": [p, q]} or {"radians": x}
Json angle_to_json(const Angle& a);
Angle angle_from_json(const Json& j);

/// Exact angles as "p/q*pi" strings, numeric ones as plain numbers.
Json point_to_json(const CellPoint& z);
CellPoint point_from_json(const Json& j);

/// {"a": "p/q", "b": "p/q", "sqrt": 3}, "infinite", or a plain number.
Json value_to_json(const ExactValue& v);
ExactValue value_from_json(const Json& j);

Json triad_to_json(const SymmetricTriad& t);
/// Throws ParseError when the document does not follow the triad schema.
SymmetricTriad triad_from_json(const Json& j);
SymmetricTriad load_triad_file(const std::string& path);

Json report_to_json(const OrbitReport& r);
OrbitReport report_from_json(const Json& j);

Json minimal_set_to_json(const MinimalOrbitSet& s, const SymmetricTriad& t, bool verbose);
Json table_report_to_json(const TableReport& r);
Json prop41_to_json(const std::vector<Prop41Result>& r);
Json examples_to_json(const std::vector<ExampleResult>& r);

}  // namespace hermann
