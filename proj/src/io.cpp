#include "rotsys/io.hpp"

#include <algorithm>
#include <sstream>

#include "rotsys/base.hpp"

namespace rotsys {

namespace {

[[noreturn]] void bad(const std::string& ptr, const std::string& what) {
  throw input_error((ptr.empty() ? std::string("/") : ptr) + ": " + what);
}

const json& member(const json& j, const std::string& ptr, const std::string& key) {
  if (!j.is_object()) bad(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(ptr, "missing key \"" + key + "\"");
  return *it;
}

std::string get_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) bad(ptr, "expected a string");
  return j.get<std::string>();
}

int get_dart(const json& j, const std::string& ptr) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(ptr, "expected a nonnegative integer");
  return j.get<int>();
}

const json& get_array(const json& j, const std::string& ptr) {
  if (!j.is_array()) bad(ptr, "expected an array");
  return j;
}

std::vector<std::string> string_list(const json& j, const std::string& ptr) {
  get_array(j, ptr);
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(get_string(j[i], ptr + "/" + std::to_string(i)));
  return out;
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json drawing_to_json(const Drawing& d) {
  json j;
  j["vertices"] = d.vertices;
  j["edges"] = json::array();
  for (const DrawingEdge& e : d.edges)
    j["edges"].push_back({{"id", e.id}, {"ends", {e.end1, e.end2}}});
  j["rotations"] = json::object();
  for (const auto& [v, rot] : d.rotations) j["rotations"][v] = rot;
  j["crossings"] = json::array();
  for (const CrossingRecord& c : d.crossings)
    j["crossings"].push_back({{"id", c.id},
                              {"edges", {c.edge_a, c.edge_b}},
                              {"interleave", c.interleave == Interleave::POS ? "POS" : "NEG"}});
  j["schedule"] = json::object();
  for (const auto& [e, s] : d.schedule) j["schedule"][e] = s;
  return j;
}

Drawing drawing_from_json(const json& j) {
  Drawing d;
  d.vertices = string_list(member(j, "", "vertices"), "/vertices");
  const json& edges = get_array(member(j, "", "edges"), "/edges");
  for (size_t i = 0; i < edges.size(); ++i) {
    std::string ptr = "/edges/" + std::to_string(i);
    DrawingEdge e;
    e.id = get_string(member(edges[i], ptr, "id"), ptr + "/id");
    const json& ends = get_array(member(edges[i], ptr, "ends"), ptr + "/ends");
    if (ends.size() != 2) bad(ptr + "/ends", "expected exactly two endpoints");
    e.end1 = get_string(ends[0], ptr + "/ends/0");
    e.end2 = get_string(ends[1], ptr + "/ends/1");
    d.edges.push_back(std::move(e));
  }
  const json& rots = member(j, "", "rotations");
  if (!rots.is_object()) bad("/rotations", "expected an object");
  for (auto it = rots.begin(); it != rots.end(); ++it)
    d.rotations[it.key()] = string_list(it.value(), "/rotations/" + it.key());
  const json& xs = get_array(member(j, "", "crossings"), "/crossings");
  for (size_t i = 0; i < xs.size(); ++i) {
    std::string ptr = "/crossings/" + std::to_string(i);
    CrossingRecord c;
    c.id = get_string(member(xs[i], ptr, "id"), ptr + "/id");
    const json& ce = get_array(member(xs[i], ptr, "edges"), ptr + "/edges");
    if (ce.size() != 2) bad(ptr + "/edges", "expected exactly two edges");
    c.edge_a = get_string(ce[0], ptr + "/edges/0");
    c.edge_b = get_string(ce[1], ptr + "/edges/1");
    std::string tag = get_string(member(xs[i], ptr, "interleave"), ptr + "/interleave");
    if (tag != "POS" && tag != "NEG") bad(ptr + "/interleave", "expected \"POS\" or \"NEG\"");
    c.interleave = tag == "POS" ? Interleave::POS : Interleave::NEG;
    d.crossings.push_back(std::move(c));
  }
  const json& sch = member(j, "", "schedule");
  if (!sch.is_object()) bad("/schedule", "expected an object");
  for (auto it = sch.begin(); it != sch.end(); ++it)
    d.schedule[it.key()] = string_list(it.value(), "/schedule/" + it.key());
  validate_drawing(d);
  return d;
}

json map_to_json(const CombinatorialMap& m) {
  json j;
  j["vertices"] = json::array();
  for (const MapVertex& v : m.vertices)
    j["vertices"].push_back({{"name", v.name},
                             {"kind", v.kind == VertexKind::real ? "real" : "crossing"},
                             {"rotation", v.rotation}});
  j["alpha"] = json::array();
  for (Dart d = 0; d < static_cast<Dart>(m.alpha.size()); ++d)
    if (m.dart_used(d) && d < m.alpha[d]) j["alpha"].push_back({d, m.alpha[d]});
  return j;
}

CombinatorialMap map_from_json(const json& j) {
  CombinatorialMap m;
  const json& vs = get_array(member(j, "", "vertices"), "/vertices");
  Dart top = -1;
  for (size_t i = 0; i < vs.size(); ++i) {
    std::string ptr = "/vertices/" + std::to_string(i);
    MapVertex v;
    v.name = get_string(member(vs[i], ptr, "name"), ptr + "/name");
    std::string kind = get_string(member(vs[i], ptr, "kind"), ptr + "/kind");
    if (kind != "real" && kind != "crossing") bad(ptr + "/kind", "expected \"real\" or \"crossing\"");
    v.kind = kind == "real" ? VertexKind::real : VertexKind::crossing;
    const json& rot = get_array(member(vs[i], ptr, "rotation"), ptr + "/rotation");
    for (size_t p = 0; p < rot.size(); ++p) {
      Dart d = get_dart(rot[p], ptr + "/rotation/" + std::to_string(p));
      v.rotation.push_back(d);
      top = std::max(top, d);
    }
    m.vertices.push_back(std::move(v));
  }
  const json& al = get_array(member(j, "", "alpha"), "/alpha");
  for (size_t i = 0; i < al.size(); ++i) {
    std::string ptr = "/alpha/" + std::to_string(i);
    const json& pr = get_array(al[i], ptr);
    if (pr.size() != 2) bad(ptr, "expected a dart pair");
    Dart a = get_dart(pr[0], ptr + "/0"), b = get_dart(pr[1], ptr + "/1");
    if (a == b) bad(ptr, "a dart cannot pair with itself");
    top = std::max({top, a, b});
    if (static_cast<Dart>(m.alpha.size()) <= top) m.alpha.resize(top + 1, -1);
    if (m.alpha[a] >= 0) bad(ptr + "/0", "dart " + std::to_string(a) + " paired twice");
    if (m.alpha[b] >= 0) bad(ptr + "/1", "dart " + std::to_string(b) + " paired twice");
    m.alpha[a] = b;
    m.alpha[b] = a;
  }
  if (static_cast<Dart>(m.alpha.size()) <= top) m.alpha.resize(top + 1, -1);
  validate_map(m);
  return m;
}

json system_to_json(const RotationSystem& s) {
  json j;
  j["elements"] = s.elements;
  j["pi"] = json::object();
  for (const auto& [el, rot] : s.pi) j["pi"][el] = rot;
  return j;
}

RotationSystem system_from_json(const json& j) {
  RotationSystem s;
  s.elements = string_list(member(j, "", "elements"), "/elements");
  const json& pi = member(j, "", "pi");
  if (!pi.is_object()) bad("/pi", "expected an object");
  for (auto it = pi.begin(); it != pi.end(); ++it)
    s.pi[it.key()] = string_list(it.value(), "/pi/" + it.key());
  validate_system(s);
  return s;
}

std::string to_dot(const CombinatorialMap& m) {
  validate_map(m);
  DartIndex ix(m);
  std::ostringstream o;
  o << "graph map {\n";
  for (const MapVertex& v : m.vertices) {
    o << "  \"" << v.name << "\"";
    if (v.kind == VertexKind::crossing) o << " [shape=box, style=filled, fillcolor=white]";
    o << ";\n";
  }
  for (Dart d = 0; d < static_cast<Dart>(m.alpha.size()); ++d)
    if (m.dart_used(d) && d < m.alpha[d])
      o << "  \"" << m.vertices[ix.vertex_of[d]].name << "\" -- \""
        << m.vertices[ix.vertex_of[m.alpha[d]]].name << "\";\n";
  o << "}\n";
  return o.str();
}

}  // namespace rotsys
