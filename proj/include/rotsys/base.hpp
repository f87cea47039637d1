#pragma once

#include <stdexcept>
#include <string>

namespace rotsys {

// Thrown when a value violates its own structural invariants (corrupt map, inconsistent schedule).
struct structural_error : std::runtime_error {
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an argument is outside an operation's domain.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation would exceed a documented resource bound.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rotsys
