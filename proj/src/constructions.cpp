#include "rotsys/constructions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "rotsys/base.hpp"

namespace rotsys {

namespace {

std::string num(int k) { return std::to_string(k); }

// b, then r, then numerals ascending, then everything else by name.
std::tuple<int, long, std::string> hub_rank(const std::string& name) {
  if (name == "b") return {0, 0, ""};
  if (name == "r") return {1, 0, ""};
  if (!name.empty() && name.find_first_not_of("0123456789") == std::string::npos &&
      (name.size() == 1 || name[0] != '0'))
    return {2, std::stol(name), ""};
  return {3, 0, name};
}

std::string xid(int blue_index, int red_index) {
  return "x_b" + num(blue_index) + "_r" + num(red_index);
}

std::vector<int> ordered(std::vector<int> v, Monotone m) {
  std::sort(v.begin(), v.end());
  if (m == Monotone::decreasing) std::reverse(v.begin(), v.end());
  return v;
}

// Shared skeleton of the witness builders: vertices, star edges, hub rotations.
Drawing star_skeleton(int n) {
  Drawing d;
  d.vertices = {"b", "r"};
  for (int i = 1; i <= n; ++i) d.vertices.push_back(num(i));
  for (int i = 1; i <= n; ++i) d.edges.push_back({"b" + num(i), "b", num(i)});
  for (int i = 1; i <= n; ++i) d.edges.push_back({"r" + num(i), "r", num(i)});
  auto& pb = d.rotations["b"];
  for (int i = n; i >= 1; --i) pb.push_back("b" + num(i));
  auto& pr = d.rotations["r"];
  for (int i = 1; i <= n; ++i) pr.push_back("r" + num(i));
  for (int i = 1; i <= n; ++i) d.rotations[num(i)] = {"b" + num(i), "r" + num(i)};
  for (const auto& e : d.edges) d.schedule[e.id];
  return d;
}

}  // namespace

RotationSystem pi_n(int n) {
  if (n < 1) throw input_error("pi_n: n must be >= 1");
  RotationSystem s;
  s.elements = {"b", "r"};
  for (int i = 1; i <= n; ++i) s.elements.push_back(num(i));
  auto& pb = s.pi["b"];
  for (int i = n; i >= 1; --i) pb.push_back(num(i));
  auto& pr = s.pi["r"];
  for (int i = 1; i <= n; ++i) pr.push_back(num(i));
  for (int i = 1; i <= n; ++i) {
    auto& p = s.pi[num(i)];
    p.push_back("b");
    for (int j = 1; j <= n; ++j)
      if (j != i) p.push_back(num(j));
    p.push_back("r");
  }
  validate_system(s);
  return s;
}

RotationSystem k2n_restriction(int n) {
  if (n < 1) throw input_error("k2n_restriction: n must be >= 1");
  RotationSystem s;
  s.elements = {"b", "r"};
  for (int i = 1; i <= n; ++i) s.elements.push_back(num(i));
  auto& pb = s.pi["b"];
  for (int i = n; i >= 1; --i) pb.push_back(num(i));
  auto& pr = s.pi["r"];
  for (int i = 1; i <= n; ++i) pr.push_back(num(i));
  for (int i = 1; i <= n; ++i) s.pi[num(i)] = {"b", "r"};
  validate_system(s);
  return s;
}

RotationSystem fig1_system() {
  RotationSystem s;
  s.elements = {"1", "2", "3", "4"};
  s.pi["1"] = {"2", "3", "4"};
  s.pi["2"] = {"1", "3", "4"};
  s.pi["3"] = {"1", "4", "2"};
  s.pi["4"] = {"1", "2", "3"};
  validate_system(s);
  return s;
}

Drawing zero_drawing_embedding(const RotationSystem& s) {
  validate_system(s);
  if (s.elements.empty()) throw input_error("zero_drawing_embedding: empty system");

  std::set<std::string> seen{s.elements.front()};
  std::queue<std::string> frontier;
  frontier.push(s.elements.front());
  while (!frontier.empty()) {
    auto u = frontier.front();
    frontier.pop();
    for (const auto& v : s.pi.at(u))
      if (seen.insert(v).second) frontier.push(v);
  }
  if (seen.size() != s.elements.size())
    throw input_error("zero_drawing_embedding: underlying graph is disconnected");

  Drawing d;
  d.vertices = s.elements;
  std::map<std::pair<std::string, std::string>, std::string> edge_of;
  for (const auto& u : s.elements) {
    for (const auto& v : s.pi.at(u)) {
      auto key = hub_rank(u) <= hub_rank(v) ? std::make_pair(u, v) : std::make_pair(v, u);
      if (edge_of.count(key)) continue;
      std::string id = key.first + "-" + key.second;
      edge_of[key] = id;
      d.edges.push_back({id, key.first, key.second});
      d.schedule[id];
    }
  }
  for (const auto& u : s.elements) {
    auto& rot = d.rotations[u];
    for (const auto& v : s.pi.at(u)) {
      auto key = hub_rank(u) <= hub_rank(v) ? std::make_pair(u, v) : std::make_pair(v, u);
      rot.push_back(edge_of.at(key));
    }
  }
  validate_drawing(d);
  return d;
}

CombinatorialMap star_restriction(int n, Spine spine, SpineOrder order, SpineSign sign) {
  if (n < 3) throw input_error("star_restriction: n must be >= 3");
  Interleave tag = sign == SpineSign::pos ? Interleave::POS : Interleave::NEG;
  Drawing d;
  d.vertices = {"b", "r"};
  for (int i = 1; i <= n; ++i) d.vertices.push_back(num(i));

  if (spine == Spine::blue) {
    d.edges.push_back({"B", "b", "1"});
    for (int j = 2; j <= n; ++j) d.edges.push_back({"R" + num(j), "r", num(j)});
    d.rotations["b"] = {"B"};
    d.rotations["1"] = {"B"};
    auto& pr = d.rotations["r"];
    for (int j = 2; j <= n; ++j) pr.push_back("R" + num(j));
    for (int j = 2; j <= n; ++j) d.rotations[num(j)] = {"R" + num(j)};
    auto& sched = d.schedule["B"];
    for (int j = 2; j <= n; ++j) {
      int t = order == SpineOrder::inc ? j : n + 2 - j;
      d.crossings.push_back({"x" + num(t), "B", "R" + num(t), tag});
      sched.push_back("x" + num(t));
      d.schedule["R" + num(t)] = {"x" + num(t)};
    }
  } else {
    d.edges.push_back({"S", "r", num(n)});
    for (int i = 1; i < n; ++i) d.edges.push_back({"B" + num(i), "b", num(i)});
    d.rotations["r"] = {"S"};
    d.rotations[num(n)] = {"S"};
    auto& pb = d.rotations["b"];
    for (int i = n - 1; i >= 1; --i) pb.push_back("B" + num(i));
    for (int i = 1; i < n; ++i) d.rotations[num(i)] = {"B" + num(i)};
    auto& sched = d.schedule["S"];
    for (int i = 1; i < n; ++i) {
      int t = order == SpineOrder::inc ? i : n - i;
      d.crossings.push_back({"x" + num(t), "B" + num(t), "S", tag});
      sched.push_back("x" + num(t));
      d.schedule["B" + num(t)] = {"x" + num(t)};
    }
  }
  return planarize(d);
}

CombinatorialMap gadget_claim52(int n) {
  if (n < 3) throw input_error("gadget_claim52: n must be >= 3");
  Drawing d;
  d.vertices = {"b", "r"};
  for (int i = 1; i < n; ++i) d.vertices.push_back(num(i));
  for (int i = 3; i <= n; ++i) d.vertices.push_back("c" + num(i));
  for (int i = 3; i < n; ++i) d.vertices.push_back("y" + num(i));

  // Path of the first blue edge: b, y_(n-1), .., y_3, 1; the last piece carries the crossing.
  std::vector<std::string> path{"b"};
  for (int i = n - 1; i >= 3; --i) path.push_back("y" + num(i));
  path.push_back("1");
  std::vector<std::string> b1;
  for (size_t t = 0; t + 1 < path.size(); ++t) {
    b1.push_back("b1_" + num(t));
    d.edges.push_back({b1.back(), path[t], path[t + 1]});
  }
  for (int j = 2; j < n; ++j) {
    d.edges.push_back({"b" + num(j) + "_0", "b", "c" + num(j + 1)});
    d.edges.push_back({"b" + num(j) + "_1", "c" + num(j + 1), num(j)});
  }
  d.edges.push_back({"r2", "r", "2"});
  for (int i = 3; i <= n; ++i) d.edges.push_back({"s" + num(i), "r", "c" + num(i)});
  for (int i = 3; i < n; ++i) d.edges.push_back({"t" + num(i), "y" + num(i), num(i)});

  d.crossings.push_back({"x_b1_r2", b1.back(), "r2", Interleave::POS});
  for (const auto& e : d.edges) d.schedule[e.id];
  d.schedule[b1.back()] = {"x_b1_r2"};
  d.schedule["r2"] = {"x_b1_r2"};

  auto& pb = d.rotations["b"];
  for (int j = n - 1; j >= 2; --j) pb.push_back("b" + num(j) + "_0");
  pb.push_back(b1.front());
  auto& pr = d.rotations["r"];
  pr.push_back("r2");
  for (int i = 3; i <= n; ++i) pr.push_back("s" + num(i));
  d.rotations["1"] = {b1.back()};
  d.rotations["2"] = {"b2_1", "r2"};
  for (int j = 3; j < n; ++j) d.rotations[num(j)] = {"b" + num(j) + "_1", "t" + num(j)};
  for (int i = 3; i <= n; ++i)
    d.rotations["c" + num(i)] = {"b" + num(i - 1) + "_0", "s" + num(i), "b" + num(i - 1) + "_1"};
  for (int i = 3; i < n; ++i) {
    size_t pos = n - 1 - i;  // y_i sits after pos pieces of the b_1 path
    d.rotations["y" + num(i)] = {b1[pos], b1[pos + 1], "t" + num(i)};
  }
  return planarize(d);
}

CombinatorialMap gadget_claim73(int n) {
  if (n < 4 || n % 3 != 1)
    throw input_error("gadget_claim73: n must be 4, 7, 10, ... (n = 1 mod 3)");
  Drawing d;
  d.vertices = {"b"};
  for (int i = 1; i <= n; ++i) d.vertices.push_back(num(i));
  std::vector<int> junctions;  // {3, 6, .., n-1}
  for (int i = 3; i < n; i += 3) junctions.push_back(i);
  for (int i : junctions) {
    d.vertices.push_back("p" + num(i));
    d.vertices.push_back("m" + num(i));
    d.vertices.push_back("w" + num(i));
  }

  std::vector<std::string> path{"b"};
  for (auto it = junctions.rbegin(); it != junctions.rend(); ++it)
    path.push_back("w" + num(*it));
  path.push_back("1");
  std::vector<std::string> b1;
  for (size_t t = 0; t + 1 < path.size(); ++t) {
    b1.push_back("b1_" + num(t));
    d.edges.push_back({b1.back(), path[t], path[t + 1]});
  }
  auto first_piece = [&](int j) -> std::string {
    if (j == 1) return b1.front();
    if (j % 3 == 0) return "b" + num(j);
    return "b" + num(j) + "_0";
  };
  for (int j = 2; j <= n; ++j) {
    if (j % 3 == 0) {
      d.edges.push_back({"b" + num(j), "b", num(j)});
    } else if (j % 3 == 1) {
      d.edges.push_back({"b" + num(j) + "_0", "b", "p" + num(j - 1)});
      d.edges.push_back({"b" + num(j) + "_1", "p" + num(j - 1), num(j)});
    } else {
      d.edges.push_back({"b" + num(j) + "_0", "b", "m" + num(j + 1)});
      d.edges.push_back({"b" + num(j) + "_1", "m" + num(j + 1), num(j)});
    }
  }
  for (int i : junctions) d.edges.push_back({"s" + num(i), "p" + num(i), "m" + num(i)});
  for (int i : junctions) d.edges.push_back({"t" + num(i), "w" + num(i), num(i)});

  auto& pb = d.rotations["b"];
  for (int j = n; j >= 1; --j) pb.push_back(first_piece(j));
  d.rotations["1"] = {b1.back()};
  for (int j = 2; j <= n; ++j) {
    if (j % 3 == 0)
      d.rotations[num(j)] = {"b" + num(j), "t" + num(j)};
    else
      d.rotations[num(j)] = {"b" + num(j) + "_1"};
  }
  for (int i : junctions) {
    d.rotations["p" + num(i)] = {"b" + num(i + 1) + "_0", "b" + num(i + 1) + "_1", "s" + num(i)};
    d.rotations["m" + num(i)] = {"b" + num(i - 1) + "_0", "s" + num(i), "b" + num(i - 1) + "_1"};
    size_t pos = (n - 1 - i) / 3;  // w_i sits after pos pieces of the b_1 path
    d.rotations["w" + num(i)] = {b1[pos], b1[pos + 1], "t" + num(i)};
  }
  for (const auto& e : d.edges) d.schedule[e.id];
  return planarize(d);
}

Drawing witness_1drawing(int n, Sign sign, UniformDirection direction, Monotone blue_order,
                         Monotone red_order) {
  if (n < 1) throw input_error("witness_1drawing: n must be >= 1");
  if (direction == UniformDirection::mixed || blue_order == Monotone::non_monotone ||
      red_order == Monotone::non_monotone)
    throw input_error("witness_1drawing: parameters must be definite");
  bool fwd = direction == UniformDirection::forward;
  Interleave tag = sign == Sign::positive ? Interleave::POS : Interleave::NEG;

  Drawing d = star_skeleton(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      d.crossings.push_back(fwd ? CrossingRecord{xid(i, j), "b" + num(i), "r" + num(j), tag}
                                : CrossingRecord{xid(j, i), "b" + num(j), "r" + num(i), tag});
  for (int i = 1; i <= n; ++i) {
    std::vector<int> partners;
    for (int j = 1; j <= n; ++j)
      if (fwd ? j > i : j < i) partners.push_back(j);
    for (int j : ordered(partners, blue_order)) d.schedule["b" + num(i)].push_back(xid(i, j));
  }
  for (int j = 1; j <= n; ++j) {
    std::vector<int> partners;
    for (int i = 1; i <= n; ++i)
      if (fwd ? i < j : i > j) partners.push_back(i);
    for (int i : ordered(partners, red_order)) d.schedule["r" + num(j)].push_back(xid(i, j));
  }
  validate_drawing(d);
  return d;
}

Drawing witness_2drawing(int n, const TwoDrawingProfile& p) {
  if (n < 3) throw input_error("witness_2drawing: n must be >= 3");
  if (p.ahead_order == Monotone::non_monotone || p.behind_order == Monotone::non_monotone ||
      p.b1_order == Monotone::non_monotone || p.bn_order == Monotone::non_monotone ||
      p.ahead_sign == UniformSign::mixed || p.behind_sign == UniformSign::mixed)
    throw input_error("witness_2drawing: profile fields must be definite");

  Drawing d = star_skeleton(n);
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i) {
      if (k == i) continue;
      UniformSign s = k > i ? p.ahead_sign : p.behind_sign;
      d.crossings.push_back({xid(k, i), "b" + num(k), "r" + num(i),
                             s == UniformSign::positive ? Interleave::POS : Interleave::NEG});
    }
  for (int i = 1; i <= n; ++i) {
    std::vector<int> ahead, behind;
    for (int j = i + 1; j <= n; ++j) ahead.push_back(j);
    for (int j = 1; j < i; ++j) behind.push_back(j);
    ahead = ordered(ahead, p.ahead_order);
    behind = ordered(behind, p.behind_order);
    auto& sched = d.schedule["r" + num(i)];
    const auto& one = p.ahead_first ? ahead : behind;
    const auto& two = p.ahead_first ? behind : ahead;
    for (int j : one) sched.push_back(xid(j, i));
    for (int j : two) sched.push_back(xid(j, i));
  }
  for (int k = 1; k <= n; ++k) {
    std::vector<int> partners;
    for (int i = 1; i <= n; ++i)
      if (i != k) partners.push_back(i);
    Monotone m = k == 1 ? p.b1_order : k == n ? p.bn_order : Monotone::increasing;
    for (int i : ordered(partners, m)) d.schedule["b" + num(k)].push_back(xid(k, i));
  }
  validate_drawing(d);
  return d;
}

TwoDrawingProfile uniform_profile() {
  TwoDrawingProfile p;
  p.ahead_first = true;
  p.ahead_order = p.behind_order = p.b1_order = p.bn_order = Monotone::increasing;
  p.ahead_sign = p.behind_sign = UniformSign::positive;
  return p;
}

GadgetSpec gadget_spec(const std::string& claim, int n, const std::string& variant) {
  GadgetSpec g;
  g.claim = claim;
  g.n = n;
  g.variant = variant;
  if (claim == "5.1" || claim == "7.1") {
    if (n < 4 || n % 2 != 0)
      throw input_error("gadget_spec: claim " + claim + " needs even n >= 4");
    if (claim == "5.1" && variant != "blue" && variant != "red")
      throw input_error("gadget_spec: claim 5.1 variant must be blue or red");
    static const std::set<std::string> cases{"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
    if (claim == "7.1" && !cases.count(variant))
      throw input_error("gadget_spec: claim 7.1 variant must be i..viii");
    g.vertices = 2 * n + 1;
    g.edges = 3 * n - 2;
    g.faces = 1;
    g.genus = (n - 2) / 2;
  } else if (claim == "5.2") {
    if (n < 3) throw input_error("gadget_spec: claim 5.2 needs n >= 3");
    g.vertices = 3 * n - 3;
    g.edges = 5 * n - 8;
    g.faces = 1;
    g.genus = n - 2;
  } else if (claim == "7.3") {
    if (n < 4 || n % 3 != 1) throw input_error("gadget_spec: claim 7.3 needs n = 1 mod 3, n >= 4");
    g.vertices = 2 * n;
    g.edges = (8 * n - 5) / 3;
    g.faces = 1;
    g.genus = (n - 1) / 3;
  } else {
    throw input_error("gadget_spec: unknown claim id " + claim);
  }
  return g;
}

RestrictionCase claim71_case(int k, int n) {
  if (k < 1 || k > 8) throw input_error("claim71_case: case index must be 1..8");
  if (n < 3) throw input_error("claim71_case: n must be >= 3");
  RestrictionCase c;
  c.ambient = uniform_profile();
  auto keep_blue_spine = [&](int spine_index) {
    c.keep.push_back("b" + num(spine_index));
    for (int i = 1; i <= n; ++i)
      if (i != spine_index) c.keep.push_back("r" + num(i));
  };
  auto keep_red_spine = [&](int spine_index) {
    c.keep.push_back("r" + num(spine_index));
    for (int i = 1; i <= n; ++i)
      if (i != spine_index) c.keep.push_back("b" + num(i));
  };
  switch (k) {
    case 1:  // behind positive, b_1 increasing
      c = {c.ambient, Spine::blue, SpineOrder::inc, SpineSign::pos, {}};
      keep_blue_spine(1);
      break;
    case 2:  // behind negative, b_1 decreasing
      c.ambient.behind_sign = UniformSign::negative;
      c.ambient.b1_order = Monotone::decreasing;
      c.spine = Spine::blue;
      c.order = SpineOrder::dec;
      c.sign = SpineSign::neg;
      keep_blue_spine(1);
      break;
    case 3:  // ahead positive, b_n increasing
      c = {c.ambient, Spine::blue, SpineOrder::inc, SpineSign::pos, {}};
      keep_blue_spine(n);
      break;
    case 4:  // ahead negative, b_n decreasing
      c.ambient.ahead_sign = UniformSign::negative;
      c.ambient.bn_order = Monotone::decreasing;
      c.spine = Spine::blue;
      c.order = SpineOrder::dec;
      c.sign = SpineSign::neg;
      keep_blue_spine(n);
      break;
    case 5:  // ahead increasing, ahead positive
      c = {c.ambient, Spine::red, SpineOrder::inc, SpineSign::pos, {}};
      keep_red_spine(1);
      break;
    case 6:  // ahead decreasing, ahead negative
      c.ambient.ahead_order = Monotone::decreasing;
      c.ambient.ahead_sign = UniformSign::negative;
      c.spine = Spine::red;
      c.order = SpineOrder::dec;
      c.sign = SpineSign::neg;
      keep_red_spine(1);
      break;
    case 7:  // behind increasing, behind positive
      c = {c.ambient, Spine::red, SpineOrder::inc, SpineSign::pos, {}};
      keep_red_spine(n);
      break;
    default:  // behind decreasing, behind negative
      c.ambient.behind_order = Monotone::decreasing;
      c.ambient.behind_sign = UniformSign::negative;
      c.spine = Spine::red;
      c.order = SpineOrder::dec;
      c.sign = SpineSign::neg;
      keep_red_spine(n);
      break;
  }
  return c;
}

}  // namespace rotsys
