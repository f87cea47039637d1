#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rotsys/drawing.hpp"

namespace rotsys {

// Total coloring of the unordered pairs over a domain of indices (all of [n] unless a stage
// colors only the partners of one edge).
struct PairColoring {
  int n = 0;
  std::vector<int> domain;
  std::map<std::pair<int, int>, int> color;  // key (i, j) with i < j
  int at(int i, int j) const;
};

// Total black/green coloring of the triples over [n].
struct TripleColoring {
  int n = 0;
  std::map<std::tuple<int, int, int>, bool> black;  // key (p, q, s) with p < q < s
  bool at(int p, int q, int s) const;
};

// color{i,j} = self-crossing count of the 4-cycle through b, i, r, j. Requires a simple drawing
// realizing the hub system (greens or not) of its size.
PairColoring color_cycles(const Drawing& d);

// 1-drawing pair colorings: the sign (1 positive, 0 negative) and the direction (1 forward,
// 0 backward) of each pair's single crossing.
PairColoring color_signs(const Drawing& d);
PairColoring color_directions(const Drawing& d);

// Forward 1-drawing triple colorings: {p<q<s} is black when the smaller partner comes first
// along b_p (resp. along r_s).
TripleColoring color_blue_order(const Drawing& d);
TripleColoring color_red_order(const Drawing& d);

// 2-drawing colorings. ahead_first: black when r_q meets its ahead partner s before its behind
// partner p. Orders: black when the smaller partner comes first along r_p's ahead block (resp.
// r_s's behind block). Signs: the ahead (behind) crossing of each pair. spine_order colors the
// partner pairs of b_k by their order along b_k; its domain excludes k.
TripleColoring color_ahead_first(const Drawing& d);
TripleColoring color_ahead_order(const Drawing& d);
TripleColoring color_behind_order(const Drawing& d);
PairColoring color_ahead_signs(const Drawing& d);
PairColoring color_behind_signs(const Drawing& d);
PairColoring color_spine_order(const Drawing& d, int k);

struct CliqueResult {
  int color = 0;
  std::vector<int> members;  // ascending
};

// Exact maximum one-color set; among maxima the lexicographically smallest member list, then the
// smallest color. forced vertices must all be taken (their pairs constrain the color choice).
// Domain size capped at 25.
CliqueResult max_monochromatic_clique(const PairColoring& c);
CliqueResult max_monochromatic_clique(const PairColoring& c, const std::vector<int>& domain,
                                      const std::vector<int>& forced);

struct TripleSetResult {
  bool black = true;
  std::vector<int> members;  // ascending
};

// Exact maximum set whose triples are all black or all green; same tie-breaking (black first).
TripleSetResult max_monochromatic_triples(const TripleColoring& c);

// Deletes [n] minus keep with incident edges and crossings, relabels the survivors
// order-preservingly onto 1..|keep|, and canonicalizes ids.
Drawing extract_subdrawing(const Drawing& d, const std::vector<int>& keep);

// Relabel b <-> r, i -> n+1-i. Involution; flips every crossing sign, keeps directions.
Drawing flip_labels(const Drawing& d);

// Mirror composed with the b/r exchange. Involution; keeps signs, flips directions; the
// underlying planarized map is orientation-reversed.
Drawing reflect_drawing(const Drawing& d);

// flip_labels with the sign precondition: input must classify negative, output positive.
Drawing normalize_positive(const Drawing& d);

// reflect_drawing with the direction precondition: input must classify backward, output forward.
Drawing normalize_forward(const Drawing& d);

// Largest subdrawing of a positive forward 1-drawing whose blue sequences are monotone.
Drawing extract_blue_monotone(const Drawing& d);

struct Pipeline1Result {
  Drawing drawing;
  OneDrawingProfile profile;
  std::vector<std::string> log;  // provenance, one line per stage
};

// 1-drawings: sign pairs, relabel if negative, direction pairs, reflect if backward, blue order
// triples, red order triples. Every stage is an exact maximum extraction.
Pipeline1Result pipeline_1(const Drawing& d);

struct Pipeline2Result {
  Drawing drawing;
  TwoDrawingProfile profile;
  std::vector<std::string> log;
};

// 2-drawings: ahead-first triples, ahead order triples, behind order triples, ahead sign pairs,
// behind sign pairs, b_1 order pairs (keeping the least index), b_n order pairs (keeping both
// extremes). Later stages preserve earlier stage properties.
Pipeline2Result pipeline_2(const Drawing& d);

}  // namespace rotsys
