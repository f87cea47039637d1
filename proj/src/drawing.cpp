#include "rotsys/drawing.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "rotsys/base.hpp"

namespace rotsys {

namespace {

struct Index {
  std::map<std::string, int> vertex_pos;
  std::map<std::string, int> edge_pos;
  std::map<std::string, int> crossing_pos;
};

Index build_index(const Drawing& d) {
  Index ix;
  for (int i = 0; i < static_cast<int>(d.vertices.size()); ++i)
    if (!ix.vertex_pos.emplace(d.vertices[i], i).second)
      throw structural_error("duplicate vertex name " + d.vertices[i]);
  for (int i = 0; i < static_cast<int>(d.edges.size()); ++i)
    if (!ix.edge_pos.emplace(d.edges[i].id, i).second)
      throw structural_error("duplicate edge id " + d.edges[i].id);
  for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i)
    if (!ix.crossing_pos.emplace(d.crossings[i].id, i).second)
      throw structural_error("duplicate crossing id " + d.crossings[i].id);
  return ix;
}

// Numeral vertex name, or -1.
int parse_index(const std::string& s) {
  if (s.empty() || s.size() > 7) return -1;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
  if (s.size() > 1 && s[0] == '0') return -1;
  return std::stoi(s);
}

Interleave flipped(Interleave x) { return x == Interleave::POS ? Interleave::NEG : Interleave::POS; }

const std::vector<std::string>& schedule_of(const Drawing& d, const std::string& edge_id) {
  static const std::vector<std::string> empty;
  auto it = d.schedule.find(edge_id);
  return it == d.schedule.end() ? empty : it->second;
}

const std::vector<std::string>& rotation_of(const Drawing& d, const std::string& v) {
  static const std::vector<std::string> empty;
  auto it = d.rotations.find(v);
  return it == d.rotations.end() ? empty : it->second;
}

bool strictly_increasing(const std::vector<int>& s) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

bool strictly_decreasing(const std::vector<int>& s) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] <= s[i]) return false;
  return true;
}

Monotone single_monotone(const std::vector<int>& s) {
  if (s.size() <= 1) return Monotone::increasing;
  if (strictly_increasing(s)) return Monotone::increasing;
  if (strictly_decreasing(s)) return Monotone::decreasing;
  return Monotone::non_monotone;
}

// Blue index and red index of a blue x red crossing.
std::pair<int, int> blue_red_of(const Drawing& d, const Index& ix, const CrossingRecord& c) {
  const DrawingEdge& ea = d.edges[ix.edge_pos.at(c.edge_a)];
  const DrawingEdge& eb = d.edges[ix.edge_pos.at(c.edge_b)];
  const DrawingEdge* blue = nullptr;
  const DrawingEdge* red = nullptr;
  for (const DrawingEdge* e : {&ea, &eb}) {
    if (e->end1 == "b") blue = e;
    else if (e->end1 == "r") red = e;
  }
  if (!blue || !red)
    throw input_error("crossing " + c.id + " does not pair a blue edge with a red edge");
  return {parse_index(blue->end2), parse_index(red->end2)};
}

}  // namespace

void validate_drawing(const Drawing& d) {
  Index ix = build_index(d);
  std::set<std::pair<std::string, std::string>> endpoint_pairs;
  for (const DrawingEdge& e : d.edges) {
    if (!ix.vertex_pos.count(e.end1) || !ix.vertex_pos.count(e.end2))
      throw structural_error("edge " + e.id + " references an unknown vertex");
    if (e.end1 == e.end2) throw structural_error("edge " + e.id + " is a loop");
    auto key = std::minmax(e.end1, e.end2);
    if (!endpoint_pairs.insert({key.first, key.second}).second)
      throw structural_error("parallel edge " + e.id);
  }
  for (const auto& [v, rot] : d.rotations)
    if (!ix.vertex_pos.count(v))
      throw structural_error("rotation listed for unknown vertex " + v);
  // Rotation at each vertex is a permutation of its incident edges.
  std::map<std::string, std::set<std::string>> incident;
  for (const DrawingEdge& e : d.edges) {
    incident[e.end1].insert(e.id);
    incident[e.end2].insert(e.id);
  }
  for (const std::string& v : d.vertices) {
    const auto& rot = rotation_of(d, v);
    std::set<std::string> seen;
    for (const std::string& eid : rot) {
      if (!ix.edge_pos.count(eid))
        throw structural_error("rotation at " + v + " references unknown edge " + eid);
      if (!incident[v].count(eid))
        throw structural_error("rotation at " + v + " lists non-incident edge " + eid);
      if (!seen.insert(eid).second)
        throw structural_error("rotation at " + v + " repeats edge " + eid);
    }
    if (seen.size() != incident[v].size())
      throw structural_error("rotation at " + v + " misses an incident edge");
  }
  for (const auto& [eid, sched] : d.schedule) {
    if (!ix.edge_pos.count(eid)) throw structural_error("schedule for unknown edge " + eid);
    for (const std::string& cid : sched) {
      if (!ix.crossing_pos.count(cid))
        throw structural_error("schedule of " + eid + " references unknown crossing " + cid);
      const CrossingRecord& c = d.crossings[ix.crossing_pos.at(cid)];
      if (c.edge_a != eid && c.edge_b != eid)
        throw input_error("crossing " + cid + " scheduled on edge " + eid + " it does not involve");
    }
  }
  for (const CrossingRecord& c : d.crossings) {
    if (!ix.edge_pos.count(c.edge_a) || !ix.edge_pos.count(c.edge_b))
      throw structural_error("crossing " + c.id + " references an unknown edge");
    auto count_in = [&](const std::string& eid) {
      const auto& sched = schedule_of(d, eid);
      return static_cast<int>(std::count(sched.begin(), sched.end(), c.id));
    };
    if (c.edge_a == c.edge_b) {
      if (count_in(c.edge_a) != 2)
        throw input_error("crossing " + c.id + " must appear twice in the schedule of " + c.edge_a);
    } else if (count_in(c.edge_a) != 1 || count_in(c.edge_b) != 1) {
      throw input_error("crossing " + c.id + " must appear exactly once in each of its edges' schedules");
    }
  }
}

std::vector<Violation> validate_simple(const Drawing& d) {
  validate_drawing(d);
  Index ix = build_index(d);
  std::vector<Violation> out;
  std::map<std::pair<std::string, std::string>, int> pair_count;
  for (const CrossingRecord& c : d.crossings) {
    if (c.edge_a == c.edge_b) {
      out.push_back({"self-crossing", "edge " + c.edge_a + " crosses itself at " + c.id});
      continue;
    }
    const DrawingEdge& ea = d.edges[ix.edge_pos.at(c.edge_a)];
    const DrawingEdge& eb = d.edges[ix.edge_pos.at(c.edge_b)];
    if (ea.end1 == eb.end1 || ea.end1 == eb.end2 || ea.end2 == eb.end1 || ea.end2 == eb.end2)
      out.push_back({"adjacent-crossing",
                     "adjacent edges " + c.edge_a + " and " + c.edge_b + " cross at " + c.id});
    auto key = std::minmax(c.edge_a, c.edge_b);
    pair_count[{key.first, key.second}]++;
  }
  for (const auto& [key, cnt] : pair_count)
    if (cnt > 1)
      out.push_back({"double-crossing",
                     "pair " + key.first + ", " + key.second + " crosses " + std::to_string(cnt) + " times"});
  return out;
}

Planarization planarize_full(const Drawing& d) {
  auto violations = validate_simple(d);
  if (!violations.empty())
    throw input_error("not a simple drawing: " + violations.front().message);
  Index ix = build_index(d);

  Planarization p;
  for (const std::string& v : d.vertices) {
    p.vertex_id[v] = static_cast<VertexId>(p.map.vertices.size());
    p.map.vertices.push_back({v, VertexKind::real, {}});
  }
  for (const CrossingRecord& c : d.crossings) {
    p.crossing_vertex_id[c.id] = static_cast<VertexId>(p.map.vertices.size());
    p.map.vertices.push_back({c.id, VertexKind::crossing, {}});
  }

  Dart next = 0;
  for (const DrawingEdge& e : d.edges) {
    auto& segs = p.segments[e.id];
    int k = static_cast<int>(schedule_of(d, e.id).size());
    for (int s = 0; s <= k; ++s) {
      Dart a = next++, b = next++;
      segs.push_back({a, b});
    }
  }
  p.map.alpha.assign(next, -1);
  for (const auto& [eid, segs] : p.segments)
    for (auto [a, b] : segs) {
      p.map.alpha[a] = b;
      p.map.alpha[b] = a;
    }

  for (const std::string& v : d.vertices) {
    auto& rot = p.map.vertices[p.vertex_id[v]].rotation;
    for (const std::string& eid : rotation_of(d, v)) {
      const DrawingEdge& e = d.edges[ix.edge_pos.at(eid)];
      const auto& segs = p.segments.at(eid);
      rot.push_back(v == e.end1 ? segs.front().first : segs.back().second);
    }
  }
  for (const CrossingRecord& c : d.crossings) {
    auto pos_in = [&](const std::string& eid) {
      const auto& sched = schedule_of(d, eid);
      return static_cast<int>(std::find(sched.begin(), sched.end(), c.id) - sched.begin());
    };
    int pa = pos_in(c.edge_a), pb = pos_in(c.edge_b);
    const auto& sa = p.segments.at(c.edge_a);
    const auto& sb = p.segments.at(c.edge_b);
    Dart am = sa[pa].second, ap = sa[pa + 1].first;
    Dart bm = sb[pb].second, bp = sb[pb + 1].first;
    auto& rot = p.map.vertices[p.crossing_vertex_id[c.id]].rotation;
    if (c.interleave == Interleave::POS) rot = {am, bm, ap, bp};
    else rot = {am, bp, ap, bm};
  }
  validate_map(p.map);
  return p;
}

CombinatorialMap planarize(const Drawing& d) { return planarize_full(d).map; }

RotationSystem induced_rotation_system(const Drawing& d) {
  validate_drawing(d);
  Index ix = build_index(d);
  RotationSystem s;
  s.elements = d.vertices;
  for (const std::string& v : d.vertices) {
    std::vector<std::string> nb;
    for (const std::string& eid : rotation_of(d, v)) {
      const DrawingEdge& e = d.edges[ix.edge_pos.at(eid)];
      nb.push_back(v == e.end1 ? e.end2 : e.end1);
    }
    s.pi[v] = std::move(nb);
  }
  return s;
}

bool realizes(const Drawing& d, const RotationSystem& s) {
  RotationSystem got = induced_rotation_system(d);
  std::set<std::string> a(got.elements.begin(), got.elements.end());
  std::set<std::string> b(s.elements.begin(), s.elements.end());
  if (a != b) throw input_error("drawing and rotation system have different element sets");
  for (const std::string& v : s.elements)
    if (!cyclic_equal(got.pi.at(v), s.pi.at(v))) return false;
  return true;
}

HubView detect_hub(const Drawing& d) {
  validate_drawing(d);
  bool has_b = false, has_r = false;
  std::set<int> numerals;
  for (const std::string& v : d.vertices) {
    if (v == "b") has_b = true;
    else if (v == "r") has_r = true;
    else {
      int k = parse_index(v);
      if (k < 1) throw input_error("not a hub drawing: unexpected vertex " + v);
      numerals.insert(k);
    }
  }
  if (!has_b || !has_r) throw input_error("not a hub drawing: missing vertex b or r");
  int n = static_cast<int>(numerals.size());
  for (int k = 1; k <= n; ++k)
    if (!numerals.count(k)) throw input_error("not a hub drawing: vertex labels are not 1..n");

  HubView h;
  h.n = n;
  h.blue.assign(n + 1, -1);
  h.red.assign(n + 1, -1);
  h.green.assign(n + 1, std::vector<int>(n + 1, -1));
  int greens = 0;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    const DrawingEdge& ed = d.edges[e];
    if (ed.end2 == "b" || ed.end2 == "r")
      throw input_error("hub edge " + ed.id + " must have the hub vertex as end1");
    if (ed.end1 == "b") h.blue[parse_index(ed.end2)] = e;
    else if (ed.end1 == "r") h.red[parse_index(ed.end2)] = e;
    else {
      int u = parse_index(ed.end1), v = parse_index(ed.end2);
      h.green[u][v] = h.green[v][u] = e;
      ++greens;
    }
  }
  for (int k = 1; k <= n; ++k)
    if (h.blue[k] < 0 || h.red[k] < 0)
      throw input_error("not a hub drawing: missing blue or red edge at vertex " + std::to_string(k));
  if (greens != 0 && greens != n * (n - 1) / 2)
    throw input_error("not a hub drawing: green edges must be absent or complete");
  h.has_greens = greens != 0;
  return h;
}

int canonical_cycle_self_crossings(const Drawing& d, int i, int j) {
  HubView h = detect_hub(d);
  if (i == j || i < 1 || j < 1 || i > h.n || j > h.n)
    throw input_error("canonical cycle needs two distinct indices in range");
  std::set<std::string> cycle_edges = {
      d.edges[h.blue[i]].id, d.edges[h.blue[j]].id, d.edges[h.red[i]].id, d.edges[h.red[j]].id};
  int count = 0;
  for (const CrossingRecord& c : d.crossings)
    if (cycle_edges.count(c.edge_a) && cycle_edges.count(c.edge_b)) ++count;
  return count;
}

namespace {

// Exact clockwise match against the hub rotation system the drawing is supposed to realize.
bool realizes_hub_system(const Drawing& d, const HubView& h) {
  int n = h.n;
  auto id_of = [&](int e) { return d.edges[e].id; };
  std::vector<std::string> at_b, at_r;
  for (int k = n; k >= 1; --k) at_b.push_back(id_of(h.blue[k]));
  for (int k = 1; k <= n; ++k) at_r.push_back(id_of(h.red[k]));
  if (!cyclic_equal(rotation_of(d, "b"), at_b)) return false;
  if (!cyclic_equal(rotation_of(d, "r"), at_r)) return false;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::string> at_i;
    at_i.push_back(id_of(h.blue[i]));
    if (h.has_greens)
      for (int j = 1; j <= n; ++j)
        if (j != i) at_i.push_back(id_of(h.green[i][j]));
    at_i.push_back(id_of(h.red[i]));
    if (!cyclic_equal(rotation_of(d, std::to_string(i)), at_i)) return false;
  }
  return true;
}

}  // namespace

std::optional<int> classify_ell(const Drawing& d) {
  HubView h = detect_hub(d);
  if (!realizes_hub_system(d, h))
    throw input_error("drawing does not realize the hub rotation system");
  std::optional<int> ell;
  for (int i = 1; i <= h.n; ++i)
    for (int j = i + 1; j <= h.n; ++j) {
      int c = canonical_cycle_self_crossings(d, i, j);
      if (!ell) ell = c;
      else if (*ell != c) return std::nullopt;
    }
  if (!ell) ell = 0;  // n <= 1: no canonical cycles
  return ell;
}

Sign crossing_sign(const Drawing& d, const std::string& crossing_id) {
  Index ix = build_index(d);
  auto it = ix.crossing_pos.find(crossing_id);
  if (it == ix.crossing_pos.end()) throw input_error("unknown crossing " + crossing_id);
  const CrossingRecord& c = d.crossings[it->second];
  blue_red_of(d, ix, c);  // validates the blue x red pairing
  bool a_is_blue = d.edges[ix.edge_pos.at(c.edge_a)].end1 == "b";
  Interleave tag = a_is_blue ? c.interleave : flipped(c.interleave);
  return tag == Interleave::POS ? Sign::positive : Sign::negative;
}

std::vector<int> crossing_sequence(const Drawing& d, const std::string& edge_id) {
  Index ix = build_index(d);
  if (!ix.edge_pos.count(edge_id)) throw input_error("unknown edge " + edge_id);
  std::vector<int> out;
  for (const std::string& cid : schedule_of(d, edge_id)) {
    const CrossingRecord& c = d.crossings[ix.crossing_pos.at(cid)];
    const std::string& other = c.edge_a == edge_id ? c.edge_b : c.edge_a;
    const DrawingEdge& oe = d.edges[ix.edge_pos.at(other)];
    if (oe.end1 != "b" && oe.end1 != "r")
      throw input_error("crossing " + cid + " partner is not a blue or red edge");
    out.push_back(parse_index(oe.end2));
  }
  return out;
}

OneDrawingProfile classify_1(const Drawing& d) {
  HubView h = detect_hub(d);
  if (h.has_greens) throw input_error("profile classification requires a drawing without green edges");
  Index ix = build_index(d);

  OneDrawingProfile p;
  bool any = false, all_pos = true, all_neg = true, all_fwd = true, all_bwd = true;
  for (const CrossingRecord& c : d.crossings) {
    auto [bi, rj] = blue_red_of(d, ix, c);
    Sign s = crossing_sign(d, c.id);
    (s == Sign::positive ? all_neg : all_pos) = false;
    (bi < rj ? all_bwd : all_fwd) = false;
    any = true;
  }
  p.sign = !any || all_pos ? UniformSign::positive
                           : all_neg ? UniformSign::negative : UniformSign::mixed;
  p.direction = !any || all_fwd ? UniformDirection::forward
                                : all_bwd ? UniformDirection::backward : UniformDirection::mixed;

  auto aggregate = [&](const std::vector<int>& edge_rows, Monotone& out, bool& vacuous) {
    bool inc = true, dec = true, nontrivial = false;
    for (int k = 1; k <= h.n; ++k) {
      auto seq = crossing_sequence(d, d.edges[edge_rows[k]].id);
      if (seq.size() >= 2) nontrivial = true;
      inc = inc && strictly_increasing(seq);
      dec = dec && strictly_decreasing(seq);
    }
    out = inc ? Monotone::increasing : dec ? Monotone::decreasing : Monotone::non_monotone;
    vacuous = !nontrivial;
  };
  aggregate(h.blue, p.blue, p.blue_vacuous);
  aggregate(h.red, p.red, p.red_vacuous);
  return p;
}

TwoDrawingProfile classify_2(const Drawing& d) {
  HubView h = detect_hub(d);
  if (h.has_greens) throw input_error("profile classification requires a drawing without green edges");
  int n = h.n;
  if (static_cast<int>(d.crossings.size()) != n * (n - 1))
    throw input_error("not a 2-drawing: expected " + std::to_string(n * (n - 1)) + " crossings");

  std::vector<std::vector<int>> red_seq(n + 1);
  for (int i = 1; i <= n; ++i) {
    red_seq[i] = crossing_sequence(d, d.edges[h.red[i]].id);
    std::set<int> want;
    for (int j = 1; j <= n; ++j)
      if (j != i) want.insert(j);
    if (std::set<int>(red_seq[i].begin(), red_seq[i].end()) != want ||
        red_seq[i].size() != want.size())
      throw input_error("not a 2-drawing: r" + std::to_string(i) +
                        " does not cross every other blue edge exactly once");
  }

  TwoDrawingProfile p;
  p.ahead_first = true;
  bool a_inc = true, a_dec = true, a_trivial = true;
  bool b_inc = true, b_dec = true, b_trivial = true;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> ahead, behind;
    int last_ahead = -1, first_behind = static_cast<int>(red_seq[i].size());
    for (int pos = 0; pos < static_cast<int>(red_seq[i].size()); ++pos) {
      int j = red_seq[i][pos];
      if (j > i) {
        ahead.push_back(j);
        last_ahead = pos;
      } else {
        behind.push_back(j);
        first_behind = std::min(first_behind, pos);
      }
    }
    if (last_ahead > first_behind) p.ahead_first = false;
    if (ahead.size() >= 2) a_trivial = false;
    if (behind.size() >= 2) b_trivial = false;
    a_inc = a_inc && strictly_increasing(ahead);
    a_dec = a_dec && strictly_decreasing(ahead);
    b_inc = b_inc && strictly_increasing(behind);
    b_dec = b_dec && strictly_decreasing(behind);
  }
  p.ahead_order = a_inc ? Monotone::increasing : a_dec ? Monotone::decreasing : Monotone::non_monotone;
  p.behind_order = b_inc ? Monotone::increasing : b_dec ? Monotone::decreasing : Monotone::non_monotone;
  if (a_trivial) p.ahead_order = Monotone::increasing;
  if (b_trivial) p.behind_order = Monotone::increasing;

  Index ix = build_index(d);
  bool ap = true, an = true, bp = true, bn = true, any_a = false, any_b = false;
  for (const CrossingRecord& c : d.crossings) {
    auto [bi, rj] = blue_red_of(d, ix, c);
    Sign s = crossing_sign(d, c.id);
    if (bi > rj) {  // ahead crossing of r_{rj}
      any_a = true;
      (s == Sign::positive ? an : ap) = false;
    } else {
      any_b = true;
      (s == Sign::positive ? bn : bp) = false;
    }
  }
  p.ahead_sign = !any_a || ap ? UniformSign::positive
                              : an ? UniformSign::negative : UniformSign::mixed;
  p.behind_sign = !any_b || bp ? UniformSign::positive
                               : bn ? UniformSign::negative : UniformSign::mixed;

  p.b1_order = single_monotone(crossing_sequence(d, d.edges[h.blue[1]].id));
  p.bn_order = single_monotone(crossing_sequence(d, d.edges[h.blue[n]].id));
  return p;
}

bool main_cycle_good(const Drawing& d, int i) {
  HubView h = detect_hub(d);
  int n = h.n;
  if (i < 1 || i > n) throw input_error("main cycle index out of range");
  if (n < 2) throw input_error("main cycles need n >= 2");
  int j = i % n + 1;
  if (canonical_cycle_self_crossings(d, i, j) != 0)
    throw input_error("main cycle " + std::to_string(i) + " carries a self-crossing");

  Planarization p = planarize_full(d);
  std::vector<Dart> walk;
  auto forward = [&](int e) {
    for (auto [a, b] : p.segments.at(d.edges[e].id)) walk.push_back(a);
  };
  auto backward = [&](int e) {
    const auto& segs = p.segments.at(d.edges[e].id);
    for (auto it = segs.rbegin(); it != segs.rend(); ++it) walk.push_back(it->second);
  };
  forward(h.blue[i]);   // b -> i
  backward(h.red[i]);   // i -> r
  forward(h.red[j]);    // r -> j
  backward(h.blue[j]);  // j -> b
  return cut_along_cycle(p.map, walk).disk_side_exists;
}

namespace {

// Shared restriction postlude: drop what the deletions isolated, smooth the degree-2 former
// crossing points back into plain edges, and renumber.
CombinatorialMap prune_after_delete(const CombinatorialMap& base, const std::vector<Dart>& doomed,
                                    const std::set<std::string>& crossing_names) {
  CombinatorialMap m = delete_edges(base, doomed);

  std::vector<VertexId> isolated;
  for (VertexId v = 0; v < static_cast<VertexId>(m.vertices.size()); ++v)
    if (m.vertices[v].rotation.empty()) isolated.push_back(v);
  m = delete_vertices(m, isolated);

  for (bool again = true; again;) {
    again = false;
    for (VertexId v = 0; v < static_cast<VertexId>(m.vertices.size()); ++v)
      if (crossing_names.count(m.vertices[v].name) && m.vertices[v].rotation.size() == 2) {
        m = suppress_degree2(m, v);
        again = true;
        break;
      }
  }
  return compact(m, true);
}

}  // namespace

CombinatorialMap restrict_drawing(const Drawing& d, const std::vector<std::string>& keep_edges) {
  Planarization p = planarize_full(d);
  std::set<std::string> keep(keep_edges.begin(), keep_edges.end());
  for (const std::string& k : keep)
    if (!p.segments.count(k)) throw input_error("restrict: unknown edge " + k);
  bool drop_any = false;
  for (const DrawingEdge& e : d.edges)
    if (!keep.count(e.id)) drop_any = true;
  if (!drop_any) return p.map;

  std::vector<Dart> doomed;
  for (const DrawingEdge& e : d.edges)
    if (!keep.count(e.id))
      for (auto [a, b] : p.segments.at(e.id)) doomed.push_back(a);
  std::set<std::string> crossing_names;
  for (const CrossingRecord& c : d.crossings) crossing_names.insert(c.id);
  return prune_after_delete(p.map, doomed, crossing_names);
}

CombinatorialMap restrict_segments(const Drawing& d,
                                   const std::set<std::pair<std::string, int>>& keep) {
  Planarization p = planarize_full(d);
  for (const auto& [eid, seg] : keep) {
    auto it = p.segments.find(eid);
    if (it == p.segments.end() || seg < 0 || seg >= static_cast<int>(it->second.size()))
      throw input_error("restrict: unknown segment " + eid + ":" + std::to_string(seg));
  }
  std::vector<Dart> doomed;
  for (const auto& [eid, segs] : p.segments)
    for (int t = 0; t < static_cast<int>(segs.size()); ++t)
      if (!keep.count({eid, t})) doomed.push_back(segs[t].first);
  if (doomed.empty()) return p.map;

  std::set<std::string> crossing_names;
  for (const CrossingRecord& c : d.crossings) crossing_names.insert(c.id);
  return prune_after_delete(p.map, doomed, crossing_names);
}

Drawing mirror_drawing(const Drawing& d) {
  Drawing out = d;
  for (auto& [v, rot] : out.rotations) std::reverse(rot.begin(), rot.end());
  for (CrossingRecord& c : out.crossings) c.interleave = flipped(c.interleave);
  return out;
}

Drawing relabel_drawing(const Drawing& d, const std::map<std::string, std::string>& to) {
  std::set<std::string> images;
  for (const std::string& v : d.vertices) {
    auto it = to.find(v);
    if (it == to.end()) throw input_error("relabel: no image for vertex " + v);
    if (!images.insert(it->second).second)
      throw input_error("relabel: duplicate image " + it->second);
  }
  Drawing out = d;
  for (std::string& v : out.vertices) v = to.at(v);
  for (DrawingEdge& e : out.edges) {
    e.end1 = to.at(e.end1);
    e.end2 = to.at(e.end2);
  }
  std::map<std::string, std::vector<std::string>> rot;
  for (const auto& [v, r] : d.rotations) rot[to.at(v)] = r;
  out.rotations = std::move(rot);
  return out;
}

Drawing canonicalize_hub_ids(const Drawing& d) {
  HubView h = detect_hub(d);
  int n = h.n;

  std::map<std::string, std::string> edge_to;   // old id -> new id
  std::set<std::string> reversed;               // old green ids stored with the larger end first
  Drawing out;
  out.vertices.push_back("b");
  out.vertices.push_back("r");
  for (int k = 1; k <= n; ++k) out.vertices.push_back(std::to_string(k));

  for (int k = 1; k <= n; ++k) {
    const DrawingEdge& e = d.edges[h.blue[k]];
    std::string id = "b" + std::to_string(k);
    edge_to[e.id] = id;
    out.edges.push_back({id, "b", std::to_string(k)});
  }
  for (int k = 1; k <= n; ++k) {
    const DrawingEdge& e = d.edges[h.red[k]];
    std::string id = "r" + std::to_string(k);
    edge_to[e.id] = id;
    out.edges.push_back({id, "r", std::to_string(k)});
  }
  if (h.has_greens)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const DrawingEdge& e = d.edges[h.green[i][j]];
        std::string id = "g" + std::to_string(i) + "_" + std::to_string(j);
        edge_to[e.id] = id;
        if (parse_index(e.end1) > parse_index(e.end2)) reversed.insert(e.id);
        out.edges.push_back({id, std::to_string(i), std::to_string(j)});
      }

  for (const std::string& v : d.vertices) {
    std::vector<std::string> rot;
    for (const std::string& eid : rotation_of(d, v)) rot.push_back(edge_to.at(eid));
    out.rotations[v] = std::move(rot);
  }

  std::map<std::string, int> edge_rank;
  for (int e = 0; e < static_cast<int>(out.edges.size()); ++e) edge_rank[out.edges[e].id] = e;
  std::map<std::string, std::string> crossing_to;
  for (const CrossingRecord& c : d.crossings) {
    std::string na = edge_to.at(c.edge_a), nb = edge_to.at(c.edge_b);
    Interleave tag = c.interleave;
    if (reversed.count(c.edge_a)) tag = flipped(tag);
    if (reversed.count(c.edge_b)) tag = flipped(tag);
    if (edge_rank[na] > edge_rank[nb]) {
      std::swap(na, nb);
      tag = flipped(tag);
    }
    std::string id = "x_" + na + "_" + nb;
    if (!crossing_to.emplace(c.id, id).second || std::any_of(out.crossings.begin(), out.crossings.end(),
            [&](const CrossingRecord& r) { return r.id == id; }))
      throw input_error("canonical ids need a simple drawing: pair " + na + ", " + nb + " repeats");
    out.crossings.push_back({id, na, nb, tag});
  }

  for (const auto& [eid, sched] : d.schedule) {
    std::vector<std::string> ns;
    for (const std::string& cid : sched) ns.push_back(crossing_to.at(cid));
    if (reversed.count(eid)) std::reverse(ns.begin(), ns.end());
    out.schedule[edge_to.at(eid)] = std::move(ns);
  }
  validate_drawing(out);
  return out;
}

namespace {

std::string hub_edge(const char* color, int k) { return std::string(color) + std::to_string(k); }

std::string cross_id(int bi, int rj) {
  return "x_b" + std::to_string(bi) + "_r" + std::to_string(rj);
}

// Shared skeleton of the two reduction cases. survive(k, i) says whether the crossing of b_k
// with r_i persists; cut_partner is the blue edge whose crossing marks the start of the kept
// red suffix; shift relabels the surviving numerals.
Drawing build_reduced(const Drawing& d, const HubView& h, int n, int cut_partner,
                      const std::function<bool(int, int)>& survive, int shift) {
  Index ix = build_index(d);
  int m = n - 1;
  Drawing out;
  out.vertices = {"b", "r"};
  for (int k = 1; k <= m; ++k) out.vertices.push_back(std::to_string(k));
  for (int k = 1; k <= m; ++k)
    out.edges.push_back({hub_edge("b", k), "b", std::to_string(k)});
  for (int k = 1; k <= m; ++k)
    out.edges.push_back({hub_edge("r", k), "r", std::to_string(k)});

  auto old_partner = [&](const CrossingRecord& c, const std::string& self) {
    const std::string& other = c.edge_a == self ? c.edge_b : c.edge_a;
    return d.edges[ix.edge_pos.at(other)];
  };

  for (int k = 1; k <= n; ++k) {
    int nk = k - shift;
    if (nk < 1 || nk > m) continue;
    const std::string& old_id = d.edges[h.blue[k]].id;
    std::vector<std::string> sched;
    for (const std::string& cid : schedule_of(d, old_id)) {
      const CrossingRecord& c = d.crossings[ix.crossing_pos.at(cid)];
      int i = parse_index(old_partner(c, old_id).end2);
      if (!survive(k, i)) continue;
      std::string nid = cross_id(nk, i - shift);
      Interleave tag = c.edge_a == old_id ? c.interleave : flipped(c.interleave);
      out.crossings.push_back({nid, hub_edge("b", nk), hub_edge("r", i - shift), tag});
      sched.push_back(nid);
    }
    out.schedule[hub_edge("b", nk)] = std::move(sched);
  }

  for (int i = 1; i <= n; ++i) {
    int ni = i - shift;
    if (ni < 1 || ni > m) continue;
    const std::string& old_id = d.edges[h.red[i]].id;
    const auto& old_sched = schedule_of(d, old_id);
    int cut_pos = -1;
    for (int pos = 0; pos < static_cast<int>(old_sched.size()); ++pos) {
      const CrossingRecord& c = d.crossings[ix.crossing_pos.at(old_sched[pos])];
      if (parse_index(old_partner(c, old_id).end2) == cut_partner) cut_pos = pos;
    }
    std::vector<std::string> sched;
    for (int pos = cut_pos + 1; pos < static_cast<int>(old_sched.size()); ++pos) {
      const CrossingRecord& c = d.crossings[ix.crossing_pos.at(old_sched[pos])];
      int k = parse_index(old_partner(c, old_id).end2);
      sched.push_back(cross_id(k - shift, ni));
    }
    out.schedule[hub_edge("r", ni)] = std::move(sched);
  }

  std::vector<std::string> at_b, at_r;
  for (int k = m; k >= 1; --k) at_b.push_back(hub_edge("b", k));
  for (int k = 1; k <= m; ++k) at_r.push_back(hub_edge("r", k));
  out.rotations["b"] = at_b;
  out.rotations["r"] = at_r;
  for (int k = 1; k <= m; ++k)
    out.rotations[std::to_string(k)] = {hub_edge("b", k), hub_edge("r", k)};
  validate_drawing(out);
  return out;
}

}  // namespace

Drawing reduce_2drawing_to_1drawing(const Drawing& d, ReduceCase which) {
  HubView h = detect_hub(d);
  if (h.has_greens) throw input_error("reduction requires a drawing without green edges");
  int n = h.n;
  if (n < 3) throw input_error("reduction needs n >= 3");
  TwoDrawingProfile p = classify_2(d);

  auto failures_high = [&] {
    std::vector<std::string> f;
    if (!p.ahead_first) f.push_back("ahead-first");
    if (p.ahead_order != Monotone::increasing) f.push_back("ahead-increasing");
    if (p.ahead_sign != UniformSign::negative) f.push_back("ahead-negative");
    if (p.bn_order != Monotone::increasing) f.push_back("bn-increasing");
    return f;
  }();
  auto failures_low = [&] {
    std::vector<std::string> f;
    if (!p.ahead_first) f.push_back("ahead-first");
    if (p.behind_order != Monotone::increasing) f.push_back("behind-increasing");
    if (p.behind_sign != UniformSign::negative) f.push_back("behind-negative");
    if (p.b1_order != Monotone::increasing) f.push_back("b1-increasing");
    return f;
  }();

  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const std::string& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
  };

  bool high_ok = failures_high.empty(), low_ok = failures_low.empty();
  ReduceCase pick = which;
  if (pick == ReduceCase::auto_pick) {
    if (high_ok) pick = ReduceCase::spine_high;
    else if (low_ok) pick = ReduceCase::spine_low;
    else
      throw input_error("profile fits neither reduction case: high spine needs " +
                        join(failures_high) + "; low spine needs " + join(failures_low));
  }
  if (pick == ReduceCase::spine_high && !high_ok)
    throw input_error("high spine reduction unmet: " + join(failures_high));
  if (pick == ReduceCase::spine_low && !low_ok)
    throw input_error("low spine reduction unmet: " + join(failures_low));

  if (pick == ReduceCase::spine_high)
    return build_reduced(d, h, n, n, [&](int k, int i) { return i <= n - 1 && k < i; }, 0);
  return build_reduced(d, h, n, 1, [&](int k, int i) { return k >= 2 && k < i; }, 1);
}

}  // namespace rotsys
