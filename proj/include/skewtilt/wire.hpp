#pragma once

#include "skewtilt/graph.hpp"

#include <json.hpp>

#include <string>

namespace skewtilt::wire {

using json = nlohmann::json;

json parse(const std::string& text);

json to_json(const SkewCurve& g);
SkewCurve curve_from_json(const json& j, int n);

json to_json(const PseudoTri& t);
// The arcs exactly as listed, so duplicates survive for validation.
std::vector<SkewCurve> arcs_from_json(const json& j, int& n);
PseudoTri tri_from_json(const json& j);

json to_json(const ValidationReport& r, size_t arc_count);
json to_json(const FlipResult& r);
json to_json(const FlipStep& s);
json to_json(const FlipSequence& steps);

} // namespace skewtilt::wire
