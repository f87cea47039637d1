#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rotsys/drawing.hpp"
#include "rotsys/rotation.hpp"

namespace rotsys {

// Caps and filters for the configuration search. The space (crossing subset of independent edge
// pairs x per-edge schedules x per-crossing interleave) is finite even uncapped; uncapped runs
// refuse instances with more than 10 edges.
struct SearchConfig {
  std::optional<int> max_crossings;
  std::optional<int> genus_budget;
  // Every canonical cycle of the hub family must carry exactly this many self-crossings; enforced
  // structurally during the search, so it also prunes. Requires a hub-shaped system.
  std::optional<int> ell;
  std::function<bool(const Drawing&)> predicate;  // extra filter on complete drawings
  bool canonicalize = false;  // dedupe seed states under the system's automorphisms
  std::optional<long long> max_nodes;
  int jobs = 1;
};

struct EnumResult {
  long long emitted = 0;
  long long explored = 0;
  bool truncated = false;
};

// Streams every simple drawing realizing the system within the caps, exactly once (canonicalize
// may merge automorphic seed states and is off by default). Rotations at real vertices are pinned
// to the system; adjacent edges never cross and independent pairs cross at most once by
// construction. Return false from the visitor to stop early.
EnumResult enumerate_drawings(const RotationSystem& s, const SearchConfig& cfg,
                              const std::function<bool(const Drawing&)>& visit);

struct CrgResult {
  std::optional<int> genus;      // empty when nothing admissible was found
  bool exceeds_budget = false;   // a genus_budget was set and no drawing meets it
  bool upper_bound_only = false; // capped or truncated search: genus is only an upper bound
  bool truncated = false;
  long long explored = 0;
  std::optional<Drawing> witness;
};

// Minimum planarized-map genus over all simple drawings realizing the system (and passing the
// configured filters). Exact when uncapped. The genus and witness are independent of the worker
// count: candidates are ranked by (genus, seed branch, discovery order within the seed) and
// pruning never removes a subtree that could still tie the best genus.
CrgResult crossing_genus(const RotationSystem& s, const SearchConfig& cfg = {});

// All complete rotation systems on {1..size}: one cyclic order choice per element, (size-2)!
// each. Deterministic order: per element the ascending neighbor list is either kept or has its
// tail reversed, enumerated as a bitmask (element 1 = least significant bit).
std::vector<RotationSystem> complete_systems(int size);

struct F0Report {
  std::vector<int> size3;  // crg per complete system of size 3
  std::vector<int> size4;  // crg per complete system of size 4, complete_systems order
  int size4_crg0 = 0;
  int size4_crg1 = 0;
  bool f0_is_4 = false;  // size-3 minimum is 0 and some size-4 system needs genus >= 1
};

F0Report verify_f0(int jobs = 1);

}  // namespace rotsys
