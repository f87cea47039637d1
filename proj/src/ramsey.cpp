#include "rotsys/ramsey.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rotsys/base.hpp"
#include "rotsys/constructions.hpp"

namespace rotsys {

namespace {

std::string num(int i) { return std::to_string(i); }

// Edge id -> role ('b', 'r', 'g') and index; (blue, red) -> crossing id.
struct hub_ctx {
  HubView h;
  std::map<std::string, std::pair<char, int>> role;
  std::map<std::pair<int, int>, std::string> cross;
};

hub_ctx make_ctx(const Drawing& d) {
  hub_ctx c{detect_hub(d), {}, {}};
  for (int i = 1; i <= c.h.n; ++i) {
    c.role[d.edges[c.h.blue[i]].id] = {'b', i};
    c.role[d.edges[c.h.red[i]].id] = {'r', i};
  }
  if (c.h.has_greens)
    for (int i = 1; i <= c.h.n; ++i)
      for (int j = i + 1; j <= c.h.n; ++j)
        if (c.h.green[i][j] >= 0) c.role[d.edges[c.h.green[i][j]].id] = {'g', i};
  for (const CrossingRecord& r : d.crossings) {
    auto a = c.role.at(r.edge_a), b = c.role.at(r.edge_b);
    if (a.first == 'b' && b.first == 'r')
      c.cross[{a.second, b.second}] = r.id;
    else if (a.first == 'r' && b.first == 'b')
      c.cross[{b.second, a.second}] = r.id;
  }
  return c;
}

std::vector<int> full_domain(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

int pos_in(const std::vector<int>& seq, int v, const std::string& where) {
  auto it = std::find(seq.begin(), seq.end(), v);
  if (it == seq.end())
    throw input_error(where + ": partner " + num(v) + " missing from crossing sequence");
  return static_cast<int>(it - seq.begin());
}

void require_no_greens(const HubView& h, const std::string& op) {
  if (h.has_greens) throw input_error(op + ": requires a drawing without green edges");
}

void require_ell(const Drawing& d, int ell, const std::string& op) {
  auto got = classify_ell(d);
  if (!got || *got != ell)
    throw input_error(op + ": input is not a " + num(ell) + "-drawing");
}

}  // namespace

int PairColoring::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = color.find({i, j});
  if (it == color.end())
    throw input_error("pair {" + num(i) + "," + num(j) + "} is not colored");
  return it->second;
}

bool TripleColoring::at(int p, int q, int s) const {
  int a[3] = {p, q, s};
  std::sort(a, a + 3);
  auto it = black.find({a[0], a[1], a[2]});
  if (it == black.end())
    throw input_error("triple {" + num(a[0]) + "," + num(a[1]) + "," + num(a[2]) +
                      "} is not colored");
  return it->second;
}

PairColoring color_cycles(const Drawing& d) {
  auto viols = validate_simple(d);
  if (!viols.empty())
    throw input_error("color_cycles: " + viols.front().code + ": " + viols.front().message);
  HubView h = detect_hub(d);
  RotationSystem want = h.has_greens ? pi_n(h.n) : k2n_restriction(h.n);
  if (!realizes(d, want))
    throw input_error("color_cycles: drawing does not realize the hub system of size " + num(h.n));
  PairColoring c;
  c.n = h.n;
  c.domain = full_domain(h.n);
  for (int i = 1; i <= h.n; ++i)
    for (int j = i + 1; j <= h.n; ++j) c.color[{i, j}] = canonical_cycle_self_crossings(d, i, j);
  return c;
}

PairColoring color_signs(const Drawing& d) {
  hub_ctx x = make_ctx(d);
  require_no_greens(x.h, "color_signs");
  PairColoring c;
  c.n = x.h.n;
  c.domain = full_domain(c.n);
  for (int i = 1; i <= c.n; ++i)
    for (int j = i + 1; j <= c.n; ++j) {
      bool fwd = x.cross.count({i, j}), bwd = x.cross.count({j, i});
      if (fwd == bwd)
        throw input_error("color_signs: pair {" + num(i) + "," + num(j) +
                          "} does not cross exactly once");
      const std::string& id = fwd ? x.cross[{i, j}] : x.cross[{j, i}];
      c.color[{i, j}] = crossing_sign(d, id) == Sign::positive ? 1 : 0;
    }
  return c;
}

PairColoring color_directions(const Drawing& d) {
  hub_ctx x = make_ctx(d);
  require_no_greens(x.h, "color_directions");
  PairColoring c;
  c.n = x.h.n;
  c.domain = full_domain(c.n);
  for (int i = 1; i <= c.n; ++i)
    for (int j = i + 1; j <= c.n; ++j) {
      bool fwd = x.cross.count({i, j}), bwd = x.cross.count({j, i});
      if (fwd == bwd)
        throw input_error("color_directions: pair {" + num(i) + "," + num(j) +
                          "} does not cross exactly once");
      c.color[{i, j}] = fwd ? 1 : 0;
    }
  return c;
}

namespace {

// Black when the smaller of the two partners comes first along the given edge's sequence.
TripleColoring order_triples(const Drawing& d, bool along_blue, const std::string& op) {
  HubView h = detect_hub(d);
  require_no_greens(h, op);
  require_ell(d, 1, op);
  int n = h.n;
  std::vector<std::vector<int>> seq(n + 1);
  for (int k = 1; k <= n; ++k) {
    seq[k] = crossing_sequence(d, d.edges[(along_blue ? h.blue : h.red)[k]].id);
    for (int v : seq[k])
      if (along_blue ? v < k : v > k)
        throw input_error(op + ": needs a forward drawing");
  }
  TripleColoring c;
  c.n = n;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      for (int s = q + 1; s <= n; ++s) {
        // Forward: b_p carries both larger partners, r_s both smaller ones.
        const std::vector<int>& sq = along_blue ? seq[p] : seq[s];
        int u = along_blue ? q : p, w = along_blue ? s : q;
        c.black[{p, q, s}] = pos_in(sq, u, op) < pos_in(sq, w, op);
      }
  return c;
}

std::vector<std::vector<int>> red_sequences(const Drawing& d, const std::string& op) {
  HubView h = detect_hub(d);
  require_no_greens(h, op);
  int n = h.n;
  if (static_cast<int>(d.crossings.size()) != n * (n - 1))
    throw input_error(op + ": input is not a 2-drawing");
  std::vector<std::vector<int>> seq(n + 1);
  for (int i = 1; i <= n; ++i) seq[i] = crossing_sequence(d, d.edges[h.red[i]].id);
  return seq;
}

}  // namespace

TripleColoring color_blue_order(const Drawing& d) { return order_triples(d, true, "color_blue_order"); }

TripleColoring color_red_order(const Drawing& d) { return order_triples(d, false, "color_red_order"); }

TripleColoring color_ahead_first(const Drawing& d) {
  auto seq = red_sequences(d, "color_ahead_first");
  TripleColoring c;
  c.n = static_cast<int>(seq.size()) - 1;
  for (int p = 1; p <= c.n; ++p)
    for (int q = p + 1; q <= c.n; ++q)
      for (int s = q + 1; s <= c.n; ++s)
        c.black[{p, q, s}] = pos_in(seq[q], s, "color_ahead_first") <
                             pos_in(seq[q], p, "color_ahead_first");
  return c;
}

TripleColoring color_ahead_order(const Drawing& d) {
  auto seq = red_sequences(d, "color_ahead_order");
  TripleColoring c;
  c.n = static_cast<int>(seq.size()) - 1;
  for (int p = 1; p <= c.n; ++p)
    for (int q = p + 1; q <= c.n; ++q)
      for (int s = q + 1; s <= c.n; ++s)
        c.black[{p, q, s}] = pos_in(seq[p], q, "color_ahead_order") <
                             pos_in(seq[p], s, "color_ahead_order");
  return c;
}

TripleColoring color_behind_order(const Drawing& d) {
  auto seq = red_sequences(d, "color_behind_order");
  TripleColoring c;
  c.n = static_cast<int>(seq.size()) - 1;
  for (int p = 1; p <= c.n; ++p)
    for (int q = p + 1; q <= c.n; ++q)
      for (int s = q + 1; s <= c.n; ++s)
        c.black[{p, q, s}] = pos_in(seq[s], p, "color_behind_order") <
                             pos_in(seq[s], q, "color_behind_order");
  return c;
}

namespace {

PairColoring sign_pairs_2(const Drawing& d, bool ahead, const std::string& op) {
  hub_ctx x = make_ctx(d);
  require_no_greens(x.h, op);
  int n = x.h.n;
  if (static_cast<int>(d.crossings.size()) != n * (n - 1))
    throw input_error(op + ": input is not a 2-drawing");
  PairColoring c;
  c.n = n;
  c.domain = full_domain(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      // The ahead crossing of r_i is with b_j; the behind crossing of r_j is with b_i.
      auto key = ahead ? std::make_pair(j, i) : std::make_pair(i, j);
      auto it = x.cross.find(key);
      if (it == x.cross.end())
        throw input_error(op + ": pair {" + num(i) + "," + num(j) + "} lacks its crossing");
      c.color[{i, j}] = crossing_sign(d, it->second) == Sign::positive ? 1 : 0;
    }
  return c;
}

}  // namespace

PairColoring color_ahead_signs(const Drawing& d) { return sign_pairs_2(d, true, "color_ahead_signs"); }

PairColoring color_behind_signs(const Drawing& d) { return sign_pairs_2(d, false, "color_behind_signs"); }

PairColoring color_spine_order(const Drawing& d, int k) {
  HubView h = detect_hub(d);
  require_no_greens(h, "color_spine_order");
  if (k < 1 || k > h.n) throw input_error("color_spine_order: index out of range");
  std::vector<int> seq = crossing_sequence(d, d.edges[h.blue[k]].id);
  std::set<int> seen(seq.begin(), seq.end());
  if (seen.size() != seq.size())
    throw input_error("color_spine_order: b" + num(k) + " crosses a partner twice");
  PairColoring c;
  c.n = h.n;
  c.domain.assign(seen.begin(), seen.end());
  for (size_t a = 0; a < seq.size(); ++a)
    for (size_t b = 0; b < seq.size(); ++b) {
      int q = seq[a], s = seq[b];
      if (q < s) c.color[{q, s}] = a < b ? 1 : 0;
    }
  return c;
}

namespace {

// Ascending-candidate DFS; the first maximum found is the lexicographically smallest one, and the
// bound only prunes subtrees that cannot beat it strictly.
struct pair_dfs {
  const PairColoring* c = nullptr;
  int target = 0;
  std::vector<int> cands, best, cur;
  void run(size_t from) {
    if (cur.size() > best.size()) best = cur;
    for (size_t t = from; t < cands.size(); ++t) {
      if (cur.size() + (cands.size() - t) <= best.size()) break;
      int v = cands[t];
      bool ok = true;
      for (int u : cur)
        if (c->at(u, v) != target) {
          ok = false;
          break;
        }
      if (ok) {
        cur.push_back(v);
        run(t + 1);
        cur.pop_back();
      }
    }
  }
};

bool better(const std::vector<int>& a, int ca, const std::vector<int>& b, int cb) {
  if (a.size() != b.size()) return a.size() > b.size();
  if (a != b) return a < b;
  return ca < cb;
}

}  // namespace

CliqueResult max_monochromatic_clique(const PairColoring& c) {
  return max_monochromatic_clique(c, c.domain, {});
}

CliqueResult max_monochromatic_clique(const PairColoring& c, const std::vector<int>& domain_in,
                                      const std::vector<int>& forced) {
  std::vector<int> domain = domain_in;
  std::sort(domain.begin(), domain.end());
  if (domain.size() > 25) throw resource_error("monochromatic clique search is capped at 25 indices");
  std::set<int> ds(domain.begin(), domain.end());
  for (int f : forced)
    if (!ds.count(f)) throw input_error("forced index " + num(f) + " outside the colored domain");

  std::set<int> colors;
  for (int i : domain)
    for (int j : domain)
      if (i < j) colors.insert(c.at(i, j));
  if (colors.empty()) colors.insert(0);

  bool have = false;
  CliqueResult best;
  for (int col : colors) {
    bool feasible = true;
    for (size_t a = 0; a < forced.size() && feasible; ++a)
      for (size_t b = a + 1; b < forced.size() && feasible; ++b)
        feasible = c.at(forced[a], forced[b]) == col;
    if (!feasible) continue;
    pair_dfs dfs;
    dfs.c = &c;
    dfs.target = col;
    for (int v : domain) {
      if (std::find(forced.begin(), forced.end(), v) != forced.end()) continue;
      bool ok = true;
      for (int f : forced)
        if (c.at(f, v) != col) {
          ok = false;
          break;
        }
      if (ok) dfs.cands.push_back(v);
    }
    dfs.run(0);
    std::vector<int> members = forced;
    members.insert(members.end(), dfs.best.begin(), dfs.best.end());
    std::sort(members.begin(), members.end());
    if (!have || better(members, col, best.members, best.color)) {
      best = {col, members};
      have = true;
    }
  }
  if (!have) throw input_error("no color admits the forced set");
  return best;
}

TripleSetResult max_monochromatic_triples(const TripleColoring& c) {
  if (c.n > 25) throw resource_error("monochromatic triple search is capped at 25 indices");
  TripleSetResult best;
  bool have = false;
  for (bool target : {true, false}) {
    std::vector<int> cur, loc;
    std::vector<int> cands = full_domain(c.n);
    // Same ascending DFS as the pair search, compatibility now checked over pairs in cur.
    std::function<void(size_t)> run = [&](size_t from) {
      if (cur.size() > loc.size()) loc = cur;
      for (size_t t = from; t < cands.size(); ++t) {
        if (cur.size() + (cands.size() - t) <= loc.size()) break;
        int v = cands[t];
        bool ok = true;
        for (size_t a = 0; a < cur.size() && ok; ++a)
          for (size_t b = a + 1; b < cur.size() && ok; ++b)
            ok = c.at(cur[a], cur[b], v) == target;
        if (ok) {
          cur.push_back(v);
          run(t + 1);
          cur.pop_back();
        }
      }
    };
    run(0);
    if (!have || better(loc, target ? 0 : 1, best.members, best.black ? 0 : 1)) {
      best = {target, loc};
      have = true;
    }
  }
  return best;
}

Drawing extract_subdrawing(const Drawing& d, const std::vector<int>& keep_in) {
  HubView h = detect_hub(d);
  std::vector<int> keep = keep_in;
  std::sort(keep.begin(), keep.end());
  for (size_t t = 0; t < keep.size(); ++t) {
    if (keep[t] < 1 || keep[t] > h.n)
      throw input_error("extract_subdrawing: index " + num(keep[t]) + " out of range");
    if (t && keep[t] == keep[t - 1])
      throw input_error("extract_subdrawing: duplicate index " + num(keep[t]));
  }

  std::set<int> ks(keep.begin(), keep.end());
  std::map<std::string, std::pair<char, int>> role;
  for (int i = 1; i <= h.n; ++i) {
    role[d.edges[h.blue[i]].id] = {'b', i};
    role[d.edges[h.red[i]].id] = {'r', i};
  }
  std::map<std::string, std::pair<int, int>> green_of;
  if (h.has_greens)
    for (int i = 1; i <= h.n; ++i)
      for (int j = i + 1; j <= h.n; ++j)
        if (h.green[i][j] >= 0) green_of[d.edges[h.green[i][j]].id] = {i, j};

  auto edge_survives = [&](const std::string& id) -> bool {
    auto g = green_of.find(id);
    if (g != green_of.end()) return ks.count(g->second.first) && ks.count(g->second.second);
    return ks.count(role.at(id).second) > 0;
  };

  Drawing nd;
  nd.vertices = {"b", "r"};
  for (int i : keep) nd.vertices.push_back(num(i));
  std::set<std::string> live_edges;
  for (const DrawingEdge& e : d.edges)
    if (edge_survives(e.id)) {
      nd.edges.push_back(e);
      live_edges.insert(e.id);
    }
  for (const std::string& v : nd.vertices) {
    auto it = d.rotations.find(v);
    std::vector<std::string> rot;
    if (it != d.rotations.end())
      for (const std::string& eid : it->second)
        if (live_edges.count(eid)) rot.push_back(eid);
    nd.rotations[v] = rot;
  }
  std::set<std::string> live_cross;
  for (const CrossingRecord& r : d.crossings)
    if (live_edges.count(r.edge_a) && live_edges.count(r.edge_b)) {
      nd.crossings.push_back(r);
      live_cross.insert(r.id);
    }
  for (const std::string& eid : live_edges) {
    auto it = d.schedule.find(eid);
    std::vector<std::string> sched;
    if (it != d.schedule.end())
      for (const std::string& cid : it->second)
        if (live_cross.count(cid)) sched.push_back(cid);
    nd.schedule[eid] = sched;
  }
  if (keep.empty()) return nd;

  std::map<std::string, std::string> to{{"b", "b"}, {"r", "r"}};
  for (size_t t = 0; t < keep.size(); ++t) to[num(keep[t])] = num(static_cast<int>(t) + 1);
  return canonicalize_hub_ids(relabel_drawing(nd, to));
}

Drawing flip_labels(const Drawing& d) {
  HubView h = detect_hub(d);
  std::map<std::string, std::string> to{{"b", "r"}, {"r", "b"}};
  for (int i = 1; i <= h.n; ++i) to[num(i)] = num(h.n + 1 - i);
  return canonicalize_hub_ids(relabel_drawing(d, to));
}

Drawing reflect_drawing(const Drawing& d) {
  HubView h = detect_hub(d);
  std::map<std::string, std::string> to{{"b", "r"}, {"r", "b"}};
  for (int i = 1; i <= h.n; ++i) to[num(i)] = num(i);
  return canonicalize_hub_ids(relabel_drawing(mirror_drawing(d), to));
}

Drawing normalize_positive(const Drawing& d) {
  if (classify_1(d).sign != UniformSign::negative)
    throw input_error("normalize_positive: input does not classify negative");
  return flip_labels(d);
}

Drawing normalize_forward(const Drawing& d) {
  if (classify_1(d).direction != UniformDirection::backward)
    throw input_error("normalize_forward: input does not classify backward");
  return reflect_drawing(d);
}

Drawing extract_blue_monotone(const Drawing& d) {
  OneDrawingProfile p = classify_1(d);
  if (p.sign != UniformSign::positive || p.direction != UniformDirection::forward)
    throw input_error("extract_blue_monotone: needs a positive forward drawing");
  auto t = max_monochromatic_triples(color_blue_order(d));
  return extract_subdrawing(d, t.members);
}

namespace {

std::string kept_line(const std::string& what, size_t kept, int from, const std::string& desc) {
  return what + ": kept " + num(static_cast<int>(kept)) + " of " + num(from) + " (" + desc + ")";
}

}  // namespace

Pipeline1Result pipeline_1(const Drawing& d0) {
  require_ell(d0, 1, "pipeline_1");
  require_no_greens(detect_hub(d0), "pipeline_1");
  Pipeline1Result r;
  Drawing d = canonicalize_hub_ids(d0);

  {
    int n0 = detect_hub(d).n;
    auto best = max_monochromatic_clique(color_signs(d));
    d = extract_subdrawing(d, best.members);
    r.log.push_back(kept_line("sign pairs", best.members.size(), n0,
                              best.color ? "positive" : "negative"));
  }
  if (classify_1(d).sign == UniformSign::negative) {
    d = normalize_positive(d);
    r.log.push_back("relabelled to positive");
  }
  {
    int n0 = detect_hub(d).n;
    auto best = max_monochromatic_clique(color_directions(d));
    d = extract_subdrawing(d, best.members);
    r.log.push_back(kept_line("direction pairs", best.members.size(), n0,
                              best.color ? "forward" : "backward"));
  }
  if (classify_1(d).direction == UniformDirection::backward) {
    d = normalize_forward(d);
    r.log.push_back("reflected to forward");
  }
  {
    int n0 = detect_hub(d).n;
    auto t = max_monochromatic_triples(color_blue_order(d));
    d = extract_subdrawing(d, t.members);
    r.log.push_back(kept_line("blue order triples", t.members.size(), n0,
                              t.black ? "increasing" : "decreasing"));
  }
  {
    int n0 = detect_hub(d).n;
    auto t = max_monochromatic_triples(color_red_order(d));
    d = extract_subdrawing(d, t.members);
    r.log.push_back(kept_line("red order triples", t.members.size(), n0,
                              t.black ? "increasing" : "decreasing"));
  }
  r.drawing = d;
  r.profile = classify_1(d);
  return r;
}

Pipeline2Result pipeline_2(const Drawing& d0) {
  require_ell(d0, 2, "pipeline_2");
  require_no_greens(detect_hub(d0), "pipeline_2");
  Pipeline2Result r;
  Drawing d = canonicalize_hub_ids(d0);

  auto triple_stage = [&](TripleColoring (*col)(const Drawing&), const char* what,
                          const char* black_desc, const char* green_desc) {
    int n0 = detect_hub(d).n;
    auto t = max_monochromatic_triples(col(d));
    d = extract_subdrawing(d, t.members);
    r.log.push_back(kept_line(what, t.members.size(), n0, t.black ? black_desc : green_desc));
  };
  auto sign_stage = [&](PairColoring (*col)(const Drawing&), const char* what) {
    int n0 = detect_hub(d).n;
    auto best = max_monochromatic_clique(col(d));
    d = extract_subdrawing(d, best.members);
    r.log.push_back(kept_line(what, best.members.size(), n0,
                              best.color ? "positive" : "negative"));
  };

  triple_stage(color_ahead_first, "ahead-first triples", "ahead first", "behind first");
  triple_stage(color_ahead_order, "ahead order triples", "increasing", "decreasing");
  triple_stage(color_behind_order, "behind order triples", "increasing", "decreasing");
  sign_stage(color_ahead_signs, "ahead sign pairs");
  sign_stage(color_behind_signs, "behind sign pairs");

  {
    int m = detect_hub(d).n;
    auto c = color_spine_order(d, 1);
    auto best = max_monochromatic_clique(c, c.domain, {});
    std::vector<int> keep = best.members;
    keep.push_back(1);
    std::sort(keep.begin(), keep.end());
    d = extract_subdrawing(d, keep);
    r.log.push_back(kept_line("b1 order pairs", keep.size(), m,
                              best.color ? "increasing" : "decreasing"));
  }
  {
    int m = detect_hub(d).n;
    if (m >= 2) {
      auto c = color_spine_order(d, m);
      auto best = max_monochromatic_clique(c, c.domain, {1});
      std::vector<int> keep = best.members;
      keep.push_back(m);
      std::sort(keep.begin(), keep.end());
      d = extract_subdrawing(d, keep);
      r.log.push_back(kept_line("bn order pairs", keep.size(), m,
                                best.color ? "increasing" : "decreasing"));
    }
  }
  r.drawing = d;
  r.profile = classify_2(d);
  return r;
}

}  // namespace rotsys
