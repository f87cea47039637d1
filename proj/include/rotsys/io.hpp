#pragma once

#include <string>

#include <json.hpp>

#include "rotsys/drawing.hpp"
#include "rotsys/map.hpp"
#include "rotsys/rotation.hpp"

namespace rotsys {

using json = nlohmann::json;

// Parses text, wrapping syntax errors as input_error.
json parse_json(const std::string& text);

// Stable formatting: sorted object keys (the json object type is map-backed), arrays kept in
// construction order, two-space indent, trailing newline. dump(from_json(to_json(x))) is
// byte-identical to dump(to_json(x)).
std::string canonical_dump(const json& j);

// Schema mismatches throw input_error citing the offending location as a JSON pointer.
json drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const json& j);

json map_to_json(const CombinatorialMap& m);
CombinatorialMap map_from_json(const json& j);

json system_to_json(const RotationSystem& s);
RotationSystem system_from_json(const json& j);

// Undirected DOT graph of a map. Crossing vertices are drawn as white-filled boxes, real vertices
// with default styling.
std::string to_dot(const CombinatorialMap& m);

}  // namespace rotsys
