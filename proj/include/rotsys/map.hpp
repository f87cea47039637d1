#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotsys/base.hpp"

namespace rotsys {

// A dart is half an edge segment. Darts carry dense non-negative ids local to one map.
using Dart = std::int32_t;
using VertexId = std::int32_t;

enum class VertexKind { real, crossing };

struct MapVertex {
  std::string name;
  VertexKind kind = VertexKind::real;
  std::vector<Dart> rotation;  // clockwise cyclic order of incident darts
};

// Orientable combinatorial map: sigma is the vertex rotation (clockwise), alpha the edge involution.
// Each dart appears in exactly one rotation; alpha is fixed-point-free. Vertices with empty rotations
// (isolated) are allowed. Degenerate rotations of length 1 or 2 are allowed.
struct CombinatorialMap {
  std::vector<MapVertex> vertices;
  std::vector<Dart> alpha;  // alpha[d] = partner dart; -1 marks an unused dart id

  int dart_count() const;
  bool dart_used(Dart d) const { return d >= 0 && d < (int)alpha.size() && alpha[d] >= 0; }

  bool operator==(const CombinatorialMap& o) const {
    return alpha == o.alpha && vertices.size() == o.vertices.size() && [&] {
      for (size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].name != o.vertices[i].name || vertices[i].kind != o.vertices[i].kind ||
            vertices[i].rotation != o.vertices[i].rotation)
          return false;
      }
      return true;
    }();
  }
};

// Dense per-dart lookup tables derived from a map.
struct DartIndex {
  std::vector<VertexId> vertex_of;    // -1 for unused dart ids
  std::vector<std::int32_t> pos_of;   // position within the rotation
  explicit DartIndex(const CombinatorialMap& m);
  Dart sigma_next(const CombinatorialMap& m, Dart d) const;  // next dart clockwise at the same vertex
  Dart sigma_prev(const CombinatorialMap& m, Dart d) const;
};

struct FacialWalkSet {
  std::vector<std::vector<Dart>> walks;  // each walk lists darts in face-successor order
  int count() const { return (int)walks.size(); }
};

struct CutComponent {
  int vertex_count = 0;
  int edge_count = 0;
  int facial_walk_count = 0;
  int boundary_count = 0;  // boundary circles of the cut lying in this component (1 or 2)
  int genus = 0;           // genus of the component with each boundary circle capped by a disk
};

struct CutResult {
  std::vector<CutComponent> components;  // components of the cut host surface
  bool separating = false;
  bool disk_side_exists = false;
  CombinatorialMap cut_map;  // the surgered map (boundary circles are faces)
};

// Throws structural_error when the map is malformed, naming an offending dart.
void validate_map(const CombinatorialMap& m);

// Orbits of the face successor d -> sigma(alpha(d)).
FacialWalkSet trace_facial_walks(const CombinatorialMap& m);

// Sum of per-component (2 - v + e - f) / 2; dartless components count one face.
int euler_genus(const CombinatorialMap& m);

// Reverses every rotation cycle; alpha and labels unchanged. Involution; preserves faces count and genus.
CombinatorialMap reverse_orientation(const CombinatorialMap& m);

// Connected components (vertices sharing darts via sigma/alpha); isolated vertices are singletons.
std::vector<std::vector<VertexId>> connected_components(const CombinatorialMap& m);

// Cuts the surface along a simple closed walk given as a dart sequence: walk[i] leaves vertex v_i and
// alpha(walk[i]) sits at v_{i+1}; the walk must close up and visit distinct vertices and distinct edges.
// Loops (length-1 walks) are allowed. Each walk vertex splits into two copies and each walk edge doubles;
// the two boundary circles become faces of the cut map.
CutResult cut_along_cycle(const CombinatorialMap& m, const std::vector<Dart>& walk);

// Removes the vertices, all their darts, and every edge incident to them. Other endpoints may
// become isolated; they are kept.
CombinatorialMap delete_vertices(const CombinatorialMap& m, const std::vector<VertexId>& victims);

// Removes whole edges given by one dart each (the partner dart goes too). Vertices are kept.
// Former crossing vertices left with degree != 4 are relabeled kind=real (name retained).
CombinatorialMap delete_edges(const CombinatorialMap& m, const std::vector<Dart>& edge_darts);

// Removes a degree-2 vertex, merging its two incident segments into one edge.
// Rejects a vertex whose two darts pair with each other (a free-standing loop has no vertexless form).
CombinatorialMap suppress_degree2(const CombinatorialMap& m, VertexId v);

// Contracts a simple path given as a dart sequence (walk[i] leaves v_i toward v_{i+1}; vertices distinct,
// no loops). All path vertices merge into one vertex whose rotation is the boundary walk of the contracted
// path; the merged vertex gets the given name and kind=real.
CombinatorialMap contract_path(const CombinatorialMap& m, const std::vector<Dart>& walk,
                               const std::string& new_name);

// Drops isolated vertices and renumbers darts densely (vertex order kept; dart order by first use).
CombinatorialMap compact(const CombinatorialMap& m, bool drop_isolated);

// Equality up to the starting point of each rotation vector: same vertex names, kinds and order,
// same alpha, rotations cyclically equal. The strict operator== also pins the starting darts.
bool same_map(const CombinatorialMap& a, const CombinatorialMap& b);

// Orientation-preserving isomorphism respecting vertex kinds (names ignored). Connected maps only.
bool isomorphic(const CombinatorialMap& a, const CombinatorialMap& b);

// Canonical traversal signature used by isomorphic(); exposed for dedup/debugging.
std::vector<std::int64_t> canonical_signature(const CombinatorialMap& m);

VertexId find_vertex(const CombinatorialMap& m, const std::string& name);

}  // namespace rotsys
