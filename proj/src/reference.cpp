#include "rotsys/reference.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "rotsys/base.hpp"

namespace rotsys::reference {

namespace {

bool better(const std::vector<int>& a, int ca, const std::vector<int>& b, int cb) {
  if (a.size() != b.size()) return a.size() > b.size();
  if (a != b) return a < b;
  return ca < cb;
}

}  // namespace

int face_count_naive(const CombinatorialMap& m) {
  validate_map(m);
  auto locate = [&](Dart d) -> std::pair<int, int> {
    for (size_t v = 0; v < m.vertices.size(); ++v) {
      const std::vector<Dart>& rot = m.vertices[v].rotation;
      for (size_t p = 0; p < rot.size(); ++p)
        if (rot[p] == d) return {static_cast<int>(v), static_cast<int>(p)};
    }
    throw structural_error("dart " + std::to_string(d) + " is in no rotation");
  };
  std::set<Dart> visited;
  int faces = 0;
  for (Dart start = 0; start < static_cast<int>(m.alpha.size()); ++start) {
    if (!m.dart_used(start) || visited.count(start)) continue;
    ++faces;
    Dart cur = start;
    do {
      visited.insert(cur);
      auto [v, p] = locate(m.alpha[cur]);
      const std::vector<Dart>& rot = m.vertices[v].rotation;
      cur = rot[(p + 1) % rot.size()];
    } while (cur != start);
  }
  return faces;
}

long long count_drawings_naive(const RotationSystem& s, std::optional<int> max_crossings,
                               std::optional<int> ell) {
  validate_system(s);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const std::string& u : s.elements)
    for (const std::string& v : s.pi.at(u))
      if (u < v) edges.push_back({u, v});
  int m = static_cast<int>(edges.size());
  if (m > 6) throw resource_error("naive drawing count is capped at 6 edges");

  int n = 0;
  std::map<std::pair<int, int>, int> pair_index;
  if (ell) {
    if (*ell < 0) throw input_error("ell must be nonnegative");
    std::set<std::string> elems(s.elements.begin(), s.elements.end());
    if (!elems.count("b") || !elems.count("r"))
      throw input_error("the ell filter needs a hub system (elements b, r, 1..n)");
    n = static_cast<int>(s.elements.size()) - 2;
    int next = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pair_index[{i, j}] = next++;
  }
  auto spoke = [](const std::pair<std::string, std::string>& e,
                  const std::string& hub) -> int {
    if (e.first == hub) return std::stoi(e.second);
    if (e.second == hub) return std::stoi(e.first);
    return 0;
  };

  std::vector<std::pair<int, int>> all_pairs;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) all_pairs.push_back({a, b});
  int np = static_cast<int>(all_pairs.size());

  std::vector<long long> fact(m + 1, 1);
  for (int i = 1; i <= m; ++i) fact[i] = fact[i - 1] * i;

  long long total = 0;
  for (unsigned mask = 0; mask < (1u << np); ++mask) {
    std::vector<int> deg(m, 0);
    std::vector<int> slot(pair_index.size(), 0);
    bool ok = true;
    int chosen = 0;
    for (int t = 0; t < np && ok; ++t) {
      if (!(mask >> t & 1u)) continue;
      auto [a, b] = all_pairs[t];
      const auto &ea = edges[a], &eb = edges[b];
      if (ea.first == eb.first || ea.first == eb.second || ea.second == eb.first ||
          ea.second == eb.second) {
        ok = false;
        break;
      }
      ++deg[a];
      ++deg[b];
      ++chosen;
      if (ell) {
        int bi = spoke(ea, "b") ? spoke(ea, "b") : spoke(eb, "b");
        int ri = spoke(ea, "r") ? spoke(ea, "r") : spoke(eb, "r");
        if (bi && ri && bi != ri) ++slot[pair_index.at({std::min(bi, ri), std::max(bi, ri)})];
      }
    }
    if (!ok) continue;
    if (max_crossings && chosen > *max_crossings) continue;
    if (ell && !std::all_of(slot.begin(), slot.end(), [&](int c) { return c == *ell; })) continue;
    long long ways = 1;
    for (int e = 0; e < m; ++e) ways *= fact[deg[e]];
    total += ways << chosen;
  }
  return total;
}

Sign crossing_sign_naive(const Drawing& d, const std::string& crossing_id) {
  Planarization p = planarize_full(d);
  const CrossingRecord* rec = nullptr;
  for (const CrossingRecord& c : d.crossings)
    if (c.id == crossing_id) rec = &c;
  if (!rec) throw input_error("unknown crossing " + crossing_id);
  auto end1_of = [&](const std::string& eid) -> std::string {
    for (const DrawingEdge& e : d.edges)
      if (e.id == eid) return e.end1;
    throw input_error("unknown edge " + eid);
  };
  std::string blue = end1_of(rec->edge_a) == "b" ? rec->edge_a : rec->edge_b;
  std::string red = blue == rec->edge_a ? rec->edge_b : rec->edge_a;
  if (end1_of(blue) != "b" || end1_of(red) != "r")
    throw input_error("crossing " + crossing_id + " is not a blue x red crossing");

  VertexId v = p.crossing_vertex_id.at(crossing_id);
  DartIndex ix(p.map);
  auto darts_at = [&](const std::string& eid) -> std::pair<Dart, Dart> {
    Dart in = -1, out = -1;
    for (const auto& [from, to] : p.segments.at(eid)) {
      if (ix.vertex_of[to] == v) in = to;
      if (ix.vertex_of[from] == v) out = from;
    }
    if (in < 0 || out < 0)
      throw structural_error("edge " + eid + " does not pass through " + crossing_id);
    return {in, out};
  };
  auto [b_in, b_out] = darts_at(blue);
  auto [r_in, r_out] = darts_at(red);

  const std::vector<Dart>& rot = p.map.vertices[v].rotation;
  int pos = static_cast<int>(std::find(rot.begin(), rot.end(), b_in) - rot.begin());
  if (rot.size() != 4 || pos == 4) throw structural_error("malformed crossing " + crossing_id);
  if (rot[(pos + 1) % 4] == r_in && rot[(pos + 2) % 4] == b_out && rot[(pos + 3) % 4] == r_out)
    return Sign::positive;
  if (rot[(pos + 1) % 4] == r_out && rot[(pos + 2) % 4] == b_out && rot[(pos + 3) % 4] == r_in)
    return Sign::negative;
  throw structural_error("crossing " + crossing_id + " rotation matches neither sign");
}

CliqueResult max_clique_naive(const PairColoring& c) {
  std::vector<int> domain = c.domain;
  std::sort(domain.begin(), domain.end());
  int n = static_cast<int>(domain.size());
  if (n > 20) throw resource_error("naive clique scan is capped at 20 indices");

  std::set<int> colors;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) colors.insert(c.at(domain[a], domain[b]));
  if (colors.empty()) colors.insert(0);

  bool have = false;
  CliqueResult best;
  for (int col : colors)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> members;
      for (int t = 0; t < n; ++t)
        if (mask >> t & 1u) members.push_back(domain[t]);
      bool mono = true;
      for (size_t a = 0; a < members.size() && mono; ++a)
        for (size_t b = a + 1; b < members.size() && mono; ++b)
          mono = c.at(members[a], members[b]) == col;
      if (!mono) continue;
      if (!have || better(members, col, best.members, best.color)) {
        best = {col, members};
        have = true;
      }
    }
  return best;
}

TripleSetResult max_triples_naive(const TripleColoring& c) {
  if (c.n > 20) throw resource_error("naive triple scan is capped at 20 indices");
  bool have = false;
  TripleSetResult best;
  for (bool target : {true, false})
    for (unsigned mask = 0; mask < (1u << c.n); ++mask) {
      std::vector<int> members;
      for (int t = 0; t < c.n; ++t)
        if (mask >> t & 1u) members.push_back(t + 1);
      bool mono = true;
      for (size_t a = 0; a < members.size() && mono; ++a)
        for (size_t b = a + 1; b < members.size() && mono; ++b)
          for (size_t e = b + 1; e < members.size() && mono; ++e)
            mono = c.at(members[a], members[b], members[e]) == target;
      if (!mono) continue;
      if (!have ||
          better(members, target ? 0 : 1, best.members, best.black ? 0 : 1)) {
        best = {target, members};
        have = true;
      }
    }
  return best;
}

}  // namespace rotsys::reference
