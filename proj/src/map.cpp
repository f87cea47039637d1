#include "rotsys/map.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace rotsys {

int CombinatorialMap::dart_count() const {
  int n = 0;
  for (Dart p : alpha)
    if (p >= 0) ++n;
  return n;
}

DartIndex::DartIndex(const CombinatorialMap& m) {
  size_t n = m.alpha.size();
  for (const auto& v : m.vertices)
    for (Dart d : v.rotation) n = std::max(n, (size_t)d + 1);
  vertex_of.assign(n, -1);
  pos_of.assign(n, -1);
  for (VertexId v = 0; v < (VertexId)m.vertices.size(); ++v) {
    const auto& rot = m.vertices[v].rotation;
    for (std::int32_t i = 0; i < (std::int32_t)rot.size(); ++i) {
      Dart d = rot[i];
      if (d < 0) throw structural_error("negative dart id in rotation of vertex " + m.vertices[v].name);
      if (vertex_of[d] != -1)
        throw structural_error("dart " + std::to_string(d) + " appears in more than one rotation slot");
      vertex_of[d] = v;
      pos_of[d] = i;
    }
  }
}

Dart DartIndex::sigma_next(const CombinatorialMap& m, Dart d) const {
  const auto& rot = m.vertices[vertex_of[d]].rotation;
  return rot[(pos_of[d] + 1) % rot.size()];
}

Dart DartIndex::sigma_prev(const CombinatorialMap& m, Dart d) const {
  const auto& rot = m.vertices[vertex_of[d]].rotation;
  return rot[(pos_of[d] + rot.size() - 1) % rot.size()];
}

void validate_map(const CombinatorialMap& m) {
  DartIndex idx(m);  // throws on duplicated darts
  for (size_t v = 0; v < m.vertices.size(); ++v) {
    const auto& vx = m.vertices[v];
    if (vx.kind == VertexKind::crossing && vx.rotation.size() != 4)
      throw structural_error("crossing vertex " + vx.name + " has degree " +
                             std::to_string(vx.rotation.size()) + ", expected 4");
    for (Dart d : vx.rotation) {
      if (d >= (Dart)m.alpha.size() || m.alpha[d] < 0)
        throw structural_error("dart " + std::to_string(d) + " has no alpha partner");
    }
  }
  for (Dart d = 0; d < (Dart)m.alpha.size(); ++d) {
    Dart p = m.alpha[d];
    if (p < 0) continue;
    if (p == d) throw structural_error("alpha fixes dart " + std::to_string(d));
    if (p >= (Dart)m.alpha.size() || m.alpha[p] != d)
      throw structural_error("alpha is not an involution at dart " + std::to_string(d));
    if ((size_t)d >= idx.vertex_of.size() || idx.vertex_of[d] < 0)
      throw structural_error("dart " + std::to_string(d) + " missing from every rotation");
  }
}

FacialWalkSet trace_facial_walks(const CombinatorialMap& m) {
  validate_map(m);
  DartIndex idx(m);
  std::vector<char> seen(m.alpha.size(), 0);
  FacialWalkSet out;
  for (Dart d0 = 0; d0 < (Dart)m.alpha.size(); ++d0) {
    if (m.alpha[d0] < 0 || seen[d0]) continue;
    std::vector<Dart> walk;
    Dart d = d0;
    do {
      seen[d] = 1;
      walk.push_back(d);
      d = idx.sigma_next(m, m.alpha[d]);
    } while (d != d0);
    out.walks.push_back(std::move(walk));
  }
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const CombinatorialMap& m) {
  DartIndex idx(m);
  std::vector<int> parent(m.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (Dart d = 0; d < (Dart)m.alpha.size(); ++d)
    if (m.alpha[d] >= 0) unite(idx.vertex_of[d], idx.vertex_of[m.alpha[d]]);
  std::vector<std::vector<VertexId>> comps;
  std::vector<int> slot(m.vertices.size(), -1);
  for (VertexId v = 0; v < (VertexId)m.vertices.size(); ++v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = (int)comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

int euler_genus(const CombinatorialMap& m) {
  validate_map(m);
  DartIndex idx(m);
  auto comps = connected_components(m);
  std::vector<int> comp_of_vertex(m.vertices.size(), -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (VertexId v : comps[c]) comp_of_vertex[v] = (int)c;

  std::vector<int> nv(comps.size(), 0), ne(comps.size(), 0), nf(comps.size(), 0);
  for (size_t c = 0; c < comps.size(); ++c) nv[c] = (int)comps[c].size();
  for (Dart d = 0; d < (Dart)m.alpha.size(); ++d)
    if (m.alpha[d] >= 0 && d < m.alpha[d]) ne[comp_of_vertex[idx.vertex_of[d]]]++;
  for (const auto& w : trace_facial_walks(m).walks) nf[comp_of_vertex[idx.vertex_of[w[0]]]]++;

  int total = 0;
  for (size_t c = 0; c < comps.size(); ++c) {
    int f = ne[c] == 0 ? 1 : nf[c];  // a dartless component is a lone vertex on a sphere
    int num = 2 - nv[c] + ne[c] - f;
    if (num % 2 != 0)
      throw structural_error("odd euler characteristic defect in component of vertex " +
                             m.vertices[comps[c][0]].name);
    total += num / 2;
  }
  return total;
}

CombinatorialMap reverse_orientation(const CombinatorialMap& m) {
  CombinatorialMap out = m;
  for (auto& v : out.vertices) std::reverse(v.rotation.begin(), v.rotation.end());
  return out;
}

namespace {

// Relabels crossing vertices whose degree is no longer 4; map values keep the degree-4 invariant.
void demote_partial_crossings(CombinatorialMap& m) {
  for (auto& v : m.vertices)
    if (v.kind == VertexKind::crossing && v.rotation.size() != 4) v.kind = VertexKind::real;
}

}  // namespace

CutResult cut_along_cycle(const CombinatorialMap& m, const std::vector<Dart>& walk) {
  validate_map(m);
  if (walk.empty()) throw input_error("cut cycle is empty");
  DartIndex idx(m);
  const int k = (int)walk.size();

  std::vector<VertexId> vs(k);
  std::unordered_set<int> vert_seen, edge_seen;
  for (int i = 0; i < k; ++i) {
    Dart d = walk[i];
    if (!m.dart_used(d)) throw input_error("cycle dart " + std::to_string(d) + " not in map");
    vs[i] = idx.vertex_of[d];
    if (!vert_seen.insert(vs[i]).second)
      throw input_error("cycle revisits vertex " + m.vertices[vs[i]].name);
    if (!edge_seen.insert(std::min(d, m.alpha[d])).second)
      throw input_error("cycle reuses the edge of dart " + std::to_string(d));
  }
  for (int i = 0; i < k; ++i) {
    if (idx.vertex_of[m.alpha[walk[i]]] != vs[(i + 1) % k])
      throw input_error("cycle does not close at dart " + std::to_string(walk[i]));
  }

  CombinatorialMap out = m;
  // Fresh darts for the R copy of each cycle edge.
  Dart next_dart = (Dart)m.alpha.size();
  std::vector<Dart> aR(k), bR(k);
  for (int i = 0; i < k; ++i) {
    aR[i] = next_dart++;
    bR[i] = next_dart++;
  }
  out.alpha.resize(next_dart, -1);
  for (int i = 0; i < k; ++i) {
    out.alpha[aR[i]] = bR[i];
    out.alpha[bR[i]] = aR[i];
  }

  std::vector<VertexId> left_copy(k), right_copy(k);
  for (int i = 0; i < k; ++i) {
    VertexId v = vs[i];
    Dart leave = walk[i];                       // toward v_{i+1}
    Dart enter = m.alpha[walk[(i + k - 1) % k]];  // back toward v_{i-1}
    const auto& rot = m.vertices[v].rotation;
    auto pos = [&](Dart d) {
      return (int)(std::find(rot.begin(), rot.end(), d) - rot.begin());
    };
    int pa = pos(leave), pb = pos(enter);
    std::vector<Dart> lefts, rights;
    for (int p = (pa + 1) % (int)rot.size(); p != pb; p = (p + 1) % (int)rot.size())
      lefts.push_back(rot[p]);
    for (int p = (pb + 1) % (int)rot.size(); p != pa; p = (p + 1) % (int)rot.size())
      rights.push_back(rot[p]);

    MapVertex vl, vr;
    vl.name = m.vertices[v].name + "#L";
    vr.name = m.vertices[v].name + "#R";
    vl.kind = vr.kind = m.vertices[v].kind;
    vl.rotation.push_back(walk[i]);
    vl.rotation.insert(vl.rotation.end(), lefts.begin(), lefts.end());
    vl.rotation.push_back(m.alpha[walk[(i + k - 1) % k]]);
    vr.rotation.push_back(bR[(i + k - 1) % k]);  // R copy of the entering dart
    vr.rotation.insert(vr.rotation.end(), rights.begin(), rights.end());
    vr.rotation.push_back(aR[i]);  // R copy of the leaving dart

    left_copy[i] = v;  // reuse the original slot for the L copy
    out.vertices[v] = vl;
    right_copy[i] = (VertexId)out.vertices.size();
    out.vertices.push_back(vr);
  }
  demote_partial_crossings(out);
  validate_map(out);

  auto comps = connected_components(out);
  std::vector<int> comp_of_vertex(out.vertices.size(), -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (VertexId v : comps[c]) comp_of_vertex[v] = (int)c;

  int cl = comp_of_vertex[left_copy[0]];
  int cr = comp_of_vertex[right_copy[0]];
  std::vector<int> host_comps{cl};
  if (cr != cl) host_comps.push_back(cr);

  DartIndex oidx(out);
  auto faces = trace_facial_walks(out);
  CutResult res;
  res.separating = (cl != cr);
  res.cut_map = out;
  for (int c : host_comps) {
    CutComponent cc;
    cc.vertex_count = (int)comps[c].size();
    for (Dart d = 0; d < (Dart)out.alpha.size(); ++d)
      if (out.alpha[d] >= 0 && d < out.alpha[d] && comp_of_vertex[oidx.vertex_of[d]] == c)
        cc.edge_count++;
    for (const auto& w : faces.walks)
      if (comp_of_vertex[oidx.vertex_of[w[0]]] == c) cc.facial_walk_count++;
    cc.boundary_count = (comp_of_vertex[left_copy[0]] == c ? 1 : 0) +
                        (comp_of_vertex[right_copy[0]] == c ? 1 : 0);
    int num = 2 - cc.vertex_count + cc.edge_count - cc.facial_walk_count;
    if (num % 2 != 0) throw structural_error("odd euler characteristic defect after cut");
    cc.genus = num / 2;
    res.components.push_back(cc);
  }
  res.disk_side_exists = false;
  if (res.separating)
    for (const auto& cc : res.components)
      if (cc.genus == 0) res.disk_side_exists = true;
  return res;
}

CombinatorialMap delete_vertices(const CombinatorialMap& m, const std::vector<VertexId>& victims) {
  validate_map(m);
  std::vector<char> gone_vertex(m.vertices.size(), 0);
  for (VertexId v : victims) {
    if (v < 0 || v >= (VertexId)m.vertices.size())
      throw input_error("delete_vertices: vertex id " + std::to_string(v) + " out of range");
    gone_vertex[v] = 1;
  }
  std::vector<char> gone_dart(m.alpha.size(), 0);
  for (VertexId v = 0; v < (VertexId)m.vertices.size(); ++v)
    if (gone_vertex[v])
      for (Dart d : m.vertices[v].rotation) {
        gone_dart[d] = 1;
        gone_dart[m.alpha[d]] = 1;  // the whole edge goes
      }
  CombinatorialMap out;
  out.alpha.assign(m.alpha.size(), -1);
  for (Dart d = 0; d < (Dart)m.alpha.size(); ++d)
    if (m.alpha[d] >= 0 && !gone_dart[d]) out.alpha[d] = m.alpha[d];
  for (VertexId v = 0; v < (VertexId)m.vertices.size(); ++v) {
    if (gone_vertex[v]) continue;
    MapVertex nv{m.vertices[v].name, m.vertices[v].kind, {}};
    for (Dart d : m.vertices[v].rotation)
      if (!gone_dart[d]) nv.rotation.push_back(d);
    out.vertices.push_back(std::move(nv));
  }
  demote_partial_crossings(out);
  return out;
}

CombinatorialMap delete_edges(const CombinatorialMap& m, const std::vector<Dart>& edge_darts) {
  validate_map(m);
  std::vector<char> gone(m.alpha.size(), 0);
  for (Dart d : edge_darts) {
    if (!m.dart_used(d)) throw input_error("delete_edges: dart " + std::to_string(d) + " not in map");
    gone[d] = gone[m.alpha[d]] = 1;
  }
  CombinatorialMap out;
  out.alpha.assign(m.alpha.size(), -1);
  for (Dart d = 0; d < (Dart)m.alpha.size(); ++d)
    if (m.alpha[d] >= 0 && !gone[d]) out.alpha[d] = m.alpha[d];
  out.vertices = m.vertices;
  for (auto& v : out.vertices) {
    std::vector<Dart> rot;
    for (Dart d : v.rotation)
      if (!gone[d]) rot.push_back(d);
    v.rotation = std::move(rot);
  }
  demote_partial_crossings(out);
  return out;
}

CombinatorialMap suppress_degree2(const CombinatorialMap& m, VertexId v) {
  validate_map(m);
  if (v < 0 || v >= (VertexId)m.vertices.size()) throw input_error("suppress: vertex out of range");
  const auto& rot = m.vertices[v].rotation;
  if (rot.size() != 2)
    throw input_error("suppress: vertex " + m.vertices[v].name + " has degree " +
                      std::to_string(rot.size()) + ", expected 2");
  Dart d1 = rot[0], d2 = rot[1];
  if (m.alpha[d1] == d2)
    throw input_error("suppress: vertex " + m.vertices[v].name +
                      " carries a free-standing loop; no vertexless edge exists");
  Dart e1 = m.alpha[d1], e2 = m.alpha[d2];
  CombinatorialMap out = m;
  out.alpha[d1] = out.alpha[d2] = -1;
  out.alpha[e1] = e2;
  out.alpha[e2] = e1;
  out.vertices.erase(out.vertices.begin() + v);
  return out;
}

CombinatorialMap contract_path(const CombinatorialMap& m, const std::vector<Dart>& walk,
                               const std::string& new_name) {
  validate_map(m);
  if (walk.empty()) throw input_error("contract_path: empty path");
  DartIndex idx(m);
  std::vector<VertexId> vs;
  vs.push_back(idx.vertex_of[walk[0]]);
  for (Dart d : walk) {
    if (!m.dart_used(d)) throw input_error("contract_path: dart " + std::to_string(d) + " not in map");
    vs.push_back(idx.vertex_of[m.alpha[d]]);
  }
  for (size_t i = 0; i < walk.size(); ++i)
    if (idx.vertex_of[walk[i]] != vs[i])
      throw input_error("contract_path: darts do not chain at step " + std::to_string(i));
  std::unordered_set<int> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) throw input_error("contract_path: path revisits a vertex");

  std::vector<Dart> merged = m.vertices[vs[0]].rotation;
  std::vector<char> gone(m.alpha.size(), 0);
  for (size_t i = 0; i < walk.size(); ++i) {
    Dart d = walk[i], dp = m.alpha[d];
    const auto& rot = m.vertices[vs[i + 1]].rotation;
    auto at = std::find(rot.begin(), rot.end(), dp);
    std::vector<Dart> tail;
    for (size_t s = 1; s < rot.size(); ++s) tail.push_back(rot[(at - rot.begin() + s) % rot.size()]);
    auto slot = std::find(merged.begin(), merged.end(), d);
    if (slot == merged.end()) throw structural_error("contract_path: lost path dart");
    slot = merged.erase(slot);
    merged.insert(slot, tail.begin(), tail.end());
    gone[d] = gone[dp] = 1;
  }
  // Path darts other than the contracted ones cannot remain; filter defensively.
  std::vector<Dart> rot;
  for (Dart d : merged)
    if (!gone[d]) rot.push_back(d);

  CombinatorialMap out;
  out.alpha.assign(m.alpha.size(), -1);
  for (Dart d = 0; d < (Dart)m.alpha.size(); ++d)
    if (m.alpha[d] >= 0 && !gone[d]) out.alpha[d] = m.alpha[d];
  std::vector<char> on_path(m.vertices.size(), 0);
  for (VertexId v : vs) on_path[v] = 1;
  for (VertexId v = 0; v < (VertexId)m.vertices.size(); ++v) {
    if (v == vs[0]) {
      out.vertices.push_back(MapVertex{new_name, VertexKind::real, rot});
    } else if (!on_path[v]) {
      out.vertices.push_back(m.vertices[v]);
    }
  }
  return out;
}

CombinatorialMap compact(const CombinatorialMap& m, bool drop_isolated) {
  CombinatorialMap out;
  std::vector<Dart> renum(m.alpha.size(), -1);
  Dart next = 0;
  for (const auto& v : m.vertices)
    for (Dart d : v.rotation)
      if (renum[d] < 0) renum[d] = next++;
  out.alpha.assign(next, -1);
  for (Dart d = 0; d < (Dart)m.alpha.size(); ++d)
    if (m.alpha[d] >= 0) out.alpha[renum[d]] = renum[m.alpha[d]];
  for (const auto& v : m.vertices) {
    if (drop_isolated && v.rotation.empty()) continue;
    MapVertex nv{v.name, v.kind, {}};
    for (Dart d : v.rotation) nv.rotation.push_back(renum[d]);
    out.vertices.push_back(std::move(nv));
  }
  return out;
}

namespace {

std::vector<std::int64_t> signature_from(const CombinatorialMap& m, const DartIndex& idx, Dart start,
                                         const std::vector<Dart>& darts) {
  std::vector<std::int32_t> num(m.alpha.size(), -1);
  std::vector<Dart> order;
  order.reserve(darts.size());
  num[start] = 0;
  order.push_back(start);
  for (size_t i = 0; i < order.size(); ++i) {
    Dart d = order[i];
    for (Dart n : {idx.sigma_next(m, d), m.alpha[d]}) {
      if (num[n] < 0) {
        num[n] = (std::int32_t)order.size();
        order.push_back(n);
      }
    }
  }
  std::vector<std::int64_t> sig;
  sig.reserve(order.size() * 3);
  for (Dart d : order) {
    sig.push_back(num[idx.sigma_next(m, d)]);
    sig.push_back(num[m.alpha[d]]);
    sig.push_back(m.vertices[idx.vertex_of[d]].kind == VertexKind::crossing ? 1 : 0);
  }
  return sig;
}

}  // namespace

std::vector<std::int64_t> canonical_signature(const CombinatorialMap& m) {
  validate_map(m);
  DartIndex idx(m);
  std::vector<Dart> darts;
  for (Dart d = 0; d < (Dart)m.alpha.size(); ++d)
    if (m.alpha[d] >= 0) darts.push_back(d);
  if (darts.empty()) return {};
  if (connected_components(compact(m, true)).size() > 1)
    throw input_error("canonical_signature: map must be connected");
  std::vector<std::int64_t> best;
  for (Dart s : darts) {
    auto sig = signature_from(m, idx, s, darts);
    if (best.empty() || sig < best) best = std::move(sig);
  }
  return best;
}

bool same_map(const CombinatorialMap& a, const CombinatorialMap& b) {
  if (a.alpha != b.alpha || a.vertices.size() != b.vertices.size()) return false;
  auto cyclic = [](const std::vector<Dart>& x, const std::vector<Dart>& y) {
    if (x.size() != y.size()) return false;
    if (x.empty()) return true;
    auto at = std::find(y.begin(), y.end(), x.front());
    if (at == y.end()) return false;
    size_t off = at - y.begin();
    for (size_t i = 0; i < x.size(); ++i)
      if (x[i] != y[(off + i) % y.size()]) return false;
    return true;
  };
  for (size_t i = 0; i < a.vertices.size(); ++i) {
    if (a.vertices[i].name != b.vertices[i].name || a.vertices[i].kind != b.vertices[i].kind ||
        !cyclic(a.vertices[i].rotation, b.vertices[i].rotation))
      return false;
  }
  return true;
}

bool isomorphic(const CombinatorialMap& a, const CombinatorialMap& b) {
  if (a.dart_count() != b.dart_count()) return false;
  if (a.vertices.size() != b.vertices.size()) return false;
  return canonical_signature(a) == canonical_signature(b);
}

VertexId find_vertex(const CombinatorialMap& m, const std::string& name) {
  for (VertexId v = 0; v < (VertexId)m.vertices.size(); ++v)
    if (m.vertices[v].name == name) return v;
  return -1;
}

}  // namespace rotsys
