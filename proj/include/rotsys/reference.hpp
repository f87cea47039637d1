#pragma once

#include <optional>
#include <string>

#include "rotsys/drawing.hpp"
#include "rotsys/map.hpp"
#include "rotsys/ramsey.hpp"
#include "rotsys/rotation.hpp"

// Slow, transparent re-implementations kept solely to cross-check the main code paths in tests.
// Each one takes a route independent of the implementation it shadows.
namespace rotsys::reference {

// Repeated walks d -> sigma(alpha(d)) from unvisited darts, with linear scans instead of the
// dart index. Matches trace_facial_walks(m).count().
int face_count_naive(const CombinatorialMap& m);

// Counts simple drawings over a system by closed form instead of search: every subset of edge
// pairs is generated (adjacent ones included) and filtered for independence; a surviving set S
// contributes 2^|S| * prod_e deg_S(e)!. With ell set, only hub systems are accepted and each
// index pair must carry exactly ell crossings over its two blue x red slots.
long long count_drawings_naive(const RotationSystem& s, std::optional<int> max_crossings,
                               std::optional<int> ell);

// Reads the sign of a blue x red crossing off the planarized rotation: positive exactly when the
// crossing vertex reads (blue toward b, red toward r, blue away, red away) clockwise.
Sign crossing_sign_naive(const Drawing& d, const std::string& crossing_id);

// Full subset scan with the same tie-break as the search (size desc, members lex asc, color asc).
CliqueResult max_clique_naive(const PairColoring& c);
TripleSetResult max_triples_naive(const TripleColoring& c);

}  // namespace rotsys::reference
