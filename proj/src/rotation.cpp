#include "rotsys/rotation.hpp"

#include <algorithm>
#include <set>

namespace rotsys {

void validate_system(const RotationSystem& s) {
  std::set<std::string> elems(s.elements.begin(), s.elements.end());
  if (elems.size() != s.elements.size()) throw structural_error("duplicate element name");
  if (s.pi.size() != s.elements.size()) throw structural_error("pi keys do not match element list");
  for (const auto& [v, rot] : s.pi) {
    if (!elems.count(v)) throw structural_error("rotation for unknown element " + v);
    std::set<std::string> seen;
    for (const auto& u : rot) {
      if (u == v) throw structural_error("element " + v + " lists itself");
      if (!elems.count(u)) throw structural_error("element " + v + " lists unknown neighbor " + u);
      if (!seen.insert(u).second) throw structural_error("element " + v + " repeats neighbor " + u);
    }
  }
  for (const auto& [v, rot] : s.pi)
    for (const auto& u : rot) {
      const auto& back = s.pi.at(u);
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw structural_error("adjacency not symmetric between " + v + " and " + u);
    }
}

bool is_complete(const RotationSystem& s) {
  for (const auto& [v, rot] : s.pi)
    if (rot.size() != s.elements.size() - 1) return false;
  return true;
}

bool cyclic_equal(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  size_t off = it - b.begin();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(off + i) % b.size()]) return false;
  return true;
}

RotationSystem restrict_system(const RotationSystem& s, const std::vector<std::string>& keep) {
  validate_system(s);
  std::set<std::string> ks(keep.begin(), keep.end());
  for (const auto& k : keep)
    if (!s.pi.count(k)) throw input_error("restrict_system: unknown element " + k);
  RotationSystem out;
  for (const auto& e : s.elements)
    if (ks.count(e)) out.elements.push_back(e);
  for (const auto& e : out.elements) {
    std::vector<std::string> rot;
    for (const auto& u : s.pi.at(e))
      if (ks.count(u)) rot.push_back(u);
    out.pi[e] = std::move(rot);
  }
  return out;
}

RotationSystem relabel_system(const RotationSystem& s, const std::map<std::string, std::string>& to) {
  std::set<std::string> images;
  for (const auto& e : s.elements) {
    if (!to.count(e)) throw input_error("relabel_system: no image for " + e);
    images.insert(to.at(e));
  }
  if (images.size() != s.elements.size()) throw input_error("relabel_system: mapping not injective");
  RotationSystem out;
  for (const auto& e : s.elements) out.elements.push_back(to.at(e));
  for (const auto& [v, rot] : s.pi) {
    std::vector<std::string> r;
    for (const auto& u : rot) r.push_back(to.at(u));
    out.pi[to.at(v)] = std::move(r);
  }
  return out;
}

std::vector<std::map<std::string, std::string>> automorphisms(const RotationSystem& s) {
  validate_system(s);
  if (s.elements.size() > 8)
    throw resource_error("automorphisms: brute force limited to 8 elements");
  std::vector<std::string> perm = s.elements;
  std::vector<std::string> sorted = s.elements;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::map<std::string, std::string>> out;
  std::vector<std::string> p = sorted;
  do {
    std::map<std::string, std::string> to;
    for (size_t i = 0; i < sorted.size(); ++i) to[sorted[i]] = p[i];
    bool ok = true;
    for (const auto& [v, rot] : s.pi) {
      std::vector<std::string> mapped;
      for (const auto& u : rot) mapped.push_back(to.at(u));
      if (!cyclic_equal(mapped, s.pi.at(to.at(v)))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(to));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace rotsys
