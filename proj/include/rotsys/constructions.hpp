#pragma once

#include <string>
#include <vector>

#include "rotsys/drawing.hpp"
#include "rotsys/map.hpp"
#include "rotsys/rotation.hpp"

namespace rotsys {

// Hub-and-spoke system on {b, r, 1..n}: pi(b) = (n..1), pi(r) = (1..n),
// pi(i) = (b, 1,..,i-1, i+1,..,n, r). b and r are not adjacent.
RotationSystem pi_n(int n);

// pi_n cut down to the two stars: pi(i) = (b, r), hub rotations unchanged.
RotationSystem k2n_restriction(int n);

// Complete system on four elements with one rotation reversed; it has no crossing-free
// drawing in the sphere.
RotationSystem fig1_system();

// Crossing-free drawing whose induced rotation system is s. Edge ids are "u-v" with the
// hub-ranked endpoint first (b, then r, then numerals ascending, then other names).
Drawing zero_drawing_embedding(const RotationSystem& s);

enum class Spine { blue, red };
enum class SpineOrder { inc, dec };
enum class SpineSign { pos, neg };

// One spine edge crossed once by each of n-1 strands, planarized. Blue spine: b->1 crossed by
// the red strands r->2 .. r->n; red spine: r->n crossed by the blue strands b->1 .. b->(n-1).
// order fixes the strand sequence along the spine from its hub end; sign fixes every interleave.
// 2n+1 vertices, 3n-2 edges.
CombinatorialMap star_restriction(int n, Spine spine, SpineOrder order, SpineSign sign);

// Chain gadget: blues b_1..b_(n-1), red stubs hanging into the chain junctions, one genuine
// crossing next to vertex 1. 3n-3 vertices, 5n-8 edges, one facial walk.
CombinatorialMap gadget_claim52(int n);

// Sparse chain gadget for n = 1 (mod 3): a triple of degree-3 junctions per index in
// {3, 6, .., n-1}, no r vertex. 2n vertices, (8n-5)/3 edges, one facial walk.
CombinatorialMap gadget_claim73(int n);

// Uniform 1-drawing of the b/r star on [n]: forward crosses b_i with r_j exactly when i < j,
// backward when i > j; the two orders fix each edge's partner sequence from its hub; every
// crossing gets the sign. Parameters must be definite (no mixed / non-monotone).
Drawing witness_1drawing(int n, Sign sign, UniformDirection direction, Monotone blue_order,
                         Monotone red_order);

// Uniform 2-drawing of the b/r star on [n] with all n(n-1) crossings, built so classify_2
// echoes the requested profile. All profile fields must be definite; n >= 3.
Drawing witness_2drawing(int n, const TwoDrawingProfile& profile);

// All-default profile: ahead first, every order increasing, every sign positive.
TwoDrawingProfile uniform_profile();

// Frozen expected shape of a gadget family member.
struct GadgetSpec {
  std::string claim;    // "5.1" | "5.2" | "7.1" | "7.3"
  int n = 0;
  std::string variant;  // 5.1: "blue" | "red"; 7.1: "i" .. "viii"
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;
};

// Count formulas with the parity / residue preconditions enforced.
GadgetSpec gadget_spec(const std::string& claim, int n, const std::string& variant = "");

// One of the eight uniform-ambient restriction cases: the ambient 2-drawing profile, the edges
// kept, and the star_restriction parameters the restriction collapses to.
struct RestrictionCase {
  TwoDrawingProfile ambient;
  Spine spine = Spine::blue;
  SpineOrder order = SpineOrder::inc;
  SpineSign sign = SpineSign::pos;
  std::vector<std::string> keep;  // edge ids within witness_2drawing(n, ambient)
};
RestrictionCase claim71_case(int k, int n);  // k in 1..8

}  // namespace rotsys
