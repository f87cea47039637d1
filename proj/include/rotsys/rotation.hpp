#pragma once

#include <map>
#include <string>
#include <vector>

#include "rotsys/base.hpp"

namespace rotsys {

// A rotation system: for each element, the clockwise cyclic order of its neighbors.
// The underlying graph is simple; adjacency must be symmetric.
struct RotationSystem {
  std::vector<std::string> elements;                       // declaration order
  std::map<std::string, std::vector<std::string>> pi;      // element -> clockwise neighbor sequence

  bool operator==(const RotationSystem& o) const = default;
};

// Structural checks: pi keyed exactly by elements, neighbors are elements, no self entries,
// no repeats, adjacency symmetric.
void validate_system(const RotationSystem& s);

// True when every rotation covers all other elements (the underlying graph is complete).
bool is_complete(const RotationSystem& s);

// Cyclic sequence equality (same clockwise order up to starting point; reflection does not count).
bool cyclic_equal(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Keeps only the given elements, preserving rotation order.
RotationSystem restrict_system(const RotationSystem& s, const std::vector<std::string>& keep);

// Renames elements; mapping must be a bijection over the element set.
RotationSystem relabel_system(const RotationSystem& s, const std::map<std::string, std::string>& to);

// Element permutations that fix the system exactly (identity included). Bounded brute force.
std::vector<std::map<std::string, std::string>> automorphisms(const RotationSystem& s);

}  // namespace rotsys
