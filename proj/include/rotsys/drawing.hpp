#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rotsys/map.hpp"
#include "rotsys/rotation.hpp"

namespace rotsys {

enum class Interleave { POS, NEG };

// POS means the clockwise strand order at the crossing is (A-, B-, A+, B+), where X- points toward
// X.end1 and X+ toward X.end2; NEG means (A-, B+, A+, B-). Swapping the roles of A and B flips the tag.
struct CrossingRecord {
  std::string id;
  std::string edge_a;
  std::string edge_b;
  Interleave interleave = Interleave::POS;
  bool operator==(const CrossingRecord&) const = default;
};

struct DrawingEdge {
  std::string id;
  std::string end1;
  std::string end2;
  bool operator==(const DrawingEdge&) const = default;
};

// Abstract encoding of a drawing of a graph on some orientable surface: clockwise edge rotations at
// vertices, and for each edge the ordered crossings met while traversing it from end1 to end2.
struct Drawing {
  std::vector<std::string> vertices;
  std::vector<DrawingEdge> edges;
  std::map<std::string, std::vector<std::string>> rotations;  // vertex -> clockwise edge ids
  std::vector<CrossingRecord> crossings;
  std::map<std::string, std::vector<std::string>> schedule;   // edge id -> crossing ids, end1 to end2
  bool operator==(const Drawing&) const = default;
};

struct Violation {
  std::string code;     // "self-crossing" | "adjacent-crossing" | "double-crossing"
  std::string message;
};

enum class Sign { positive, negative };
enum class UniformSign { positive, negative, mixed };
enum class UniformDirection { forward, backward, mixed };
enum class Monotone { increasing, decreasing, non_monotone };

struct OneDrawingProfile {
  UniformSign sign = UniformSign::mixed;
  UniformDirection direction = UniformDirection::mixed;
  Monotone blue = Monotone::non_monotone;
  Monotone red = Monotone::non_monotone;
  bool blue_vacuous = false;  // no blue edge carries two or more crossings
  bool red_vacuous = false;
  bool operator==(const OneDrawingProfile&) const = default;
};

struct TwoDrawingProfile {
  bool ahead_first = false;
  Monotone ahead_order = Monotone::non_monotone;
  Monotone behind_order = Monotone::non_monotone;
  UniformSign ahead_sign = UniformSign::mixed;
  UniformSign behind_sign = UniformSign::mixed;
  Monotone b1_order = Monotone::non_monotone;
  Monotone bn_order = Monotone::non_monotone;
  bool operator==(const TwoDrawingProfile&) const = default;
};

// Hub-structured drawings: vertices {b, r, 1..n}, blue edges b->i, red edges r->i (end1 is the hub),
// optionally all green edges i-j. Classification and reduction operations require this shape.
struct HubView {
  int n = 0;
  bool has_greens = false;
  std::vector<int> blue;               // blue[i] = edge index of b->i (1-based, slot 0 unused)
  std::vector<int> red;
  std::vector<std::vector<int>> green; // green[i][j] = edge index of i-j for i<j, else -1
};

// Planarized map plus the bookkeeping needed to walk it.
struct Planarization {
  CombinatorialMap map;
  std::map<std::string, VertexId> vertex_id;           // real vertices by name
  std::map<std::string, VertexId> crossing_vertex_id;  // crossing vertices by crossing id
  // For each edge: its segments end1->end2 as (dart at the from-node, dart at the to-node).
  std::map<std::string, std::vector<std::pair<Dart, Dart>>> segments;
};

// Structural well-formedness (ids resolve, rotations cover incident edges exactly, each crossing sits
// in exactly the schedules of its two edges, once each). Throws naming the offending object.
void validate_drawing(const Drawing& d);

// Simplicity violations: an edge crossing itself, two adjacent edges crossing, a pair crossing twice.
std::vector<Violation> validate_simple(const Drawing& d);

// Splits edges at crossings; crossing vertices get degree 4 with the interleave-given rotation.
// Requires validate_simple to pass.
Planarization planarize_full(const Drawing& d);
CombinatorialMap planarize(const Drawing& d);

RotationSystem induced_rotation_system(const Drawing& d);

// Exact clockwise cyclic equality against the system (reflections do not count).
bool realizes(const Drawing& d, const RotationSystem& s);

HubView detect_hub(const Drawing& d);

// Number of crossings between the four edges of the cycle b-i-r-j (only the two independent pairs
// blue_i x red_j and blue_j x red_i can cross in a simple drawing).
int canonical_cycle_self_crossings(const Drawing& d, int i, int j);

// The common self-crossing count of all canonical cycles, or nullopt when they disagree.
std::optional<int> classify_ell(const Drawing& d);

// Positive means the red edge crosses the blue edge from the blue edge's left-hand side
// (blue oriented b->i, red r->j). Requires the crossing to pair a blue with a red edge.
Sign crossing_sign(const Drawing& d, const std::string& crossing_id);

// Partner indices met along the edge from end1. Requires every crossing on the edge to pair
// a blue edge with a red edge.
std::vector<int> crossing_sequence(const Drawing& d, const std::string& edge_id);

OneDrawingProfile classify_1(const Drawing& d);
TwoDrawingProfile classify_2(const Drawing& d);

// Whether the 4-cycle through b, i, r, i+1 (indices mod n) bounds a disk in the drawing's surface.
// Requires the cycle to be free of self-crossings; crossings of other edges on its edges are allowed
// and are routed through.
bool main_cycle_good(const Drawing& d, int i);

// Planarizes, deletes the darts of all non-kept edges, drops isolated vertices, suppresses the
// degree-2 former crossing vertices, and compacts.
CombinatorialMap restrict_drawing(const Drawing& d, const std::vector<std::string>& keep_edges);

// Same surgery at segment granularity: keeps only the listed (edge id, segment index) pieces of
// the planarization. For a restriction that cuts an edge partway along its crossing sequence.
CombinatorialMap restrict_segments(const Drawing& d,
                                   const std::set<std::pair<std::string, int>>& keep);

// Mirror image: all rotations reversed, every interleave flipped. planarize(mirror(d)) is
// reverse_orientation(planarize(d)) in the same_map sense.
Drawing mirror_drawing(const Drawing& d);

// Renames vertices (edge/crossing ids untouched). Mapping must cover all vertices injectively.
Drawing relabel_drawing(const Drawing& d, const std::map<std::string, std::string>& to);

// Rebuilds a hub drawing with canonical ids (b1.., r1.., g1_2.., x_b1_r2..) and list order;
// blue-red crossing records are normalized to A=blue (flipping the interleave tag as needed).
Drawing canonicalize_hub_ids(const Drawing& d);

enum class ReduceCase { auto_pick, spine_high, spine_low };

// Collapses a 2-drawing into a 1-drawing of the next smaller hub graph. spine_high consumes the
// b->n edge (needs ahead-first, ahead-increasing, ahead-negative, bn-increasing); spine_low consumes
// b->1 (needs ahead-first, behind-increasing, behind-negative, b1-increasing) and relabels i -> i-1.
Drawing reduce_2drawing_to_1drawing(const Drawing& d, ReduceCase which = ReduceCase::auto_pick);

}  // namespace rotsys
