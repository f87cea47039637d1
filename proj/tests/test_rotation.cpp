#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotsys/constructions.hpp"
#include "rotsys/rotation.hpp"
#include "rotsys/solver.hpp"

using namespace rotsys;

namespace {

RotationSystem square() {
  RotationSystem s;
  s.elements = {"a", "b", "c", "d"};
  s.pi = {{"a", {"b", "d"}}, {"b", {"c", "a"}}, {"c", {"d", "b"}}, {"d", {"a", "c"}}};
  return s;
}

}  // namespace

TEST_CASE("validate_system accepts builtins and the hand fixture") {
  for (const RotationSystem& s :
       {square(), pi_n(3), pi_n(5), k2n_restriction(2), k2n_restriction(6), fig1_system()})
    CHECK_NOTHROW(validate_system(s));
}

TEST_CASE("validate_system rejects malformed systems") {
  RotationSystem s = square();
  s.pi["a"] = {"b"};
  CHECK_THROWS_AS(validate_system(s), structural_error);  // asymmetric adjacency

  s = square();
  s.pi["a"] = {"b", "d", "a"};
  CHECK_THROWS_AS(validate_system(s), structural_error);  // self entry

  s = square();
  s.pi["a"] = {"b", "d", "b"};
  CHECK_THROWS_AS(validate_system(s), structural_error);  // repeat

  s = square();
  s.pi["a"] = {"b", "z"};
  CHECK_THROWS_AS(validate_system(s), structural_error);  // unknown neighbor

  s = square();
  s.pi.erase("d");
  CHECK_THROWS_AS(validate_system(s), structural_error);  // missing rotation

  s = square();
  s.pi["extra"] = {};
  CHECK_THROWS_AS(validate_system(s), structural_error);  // rotation for non-element
}

TEST_CASE("cyclic_equal compares up to rotation, not reflection") {
  std::vector<std::string> a = {"x", "y", "z"};
  CHECK(cyclic_equal(a, {"y", "z", "x"}));
  CHECK(cyclic_equal(a, a));
  CHECK_FALSE(cyclic_equal(a, {"x", "z", "y"}));
  CHECK_FALSE(cyclic_equal(a, {"x", "y"}));
  CHECK(cyclic_equal({}, {}));
}

TEST_CASE("is_complete") {
  CHECK(is_complete(fig1_system()));
  CHECK_FALSE(is_complete(pi_n(3)));
  CHECK_FALSE(is_complete(k2n_restriction(3)));
  CHECK_FALSE(is_complete(square()));
}

TEST_CASE("builtin system shapes") {
  for (int n : {3, 4, 6}) {
    RotationSystem p = pi_n(n);
    CHECK((int)p.elements.size() == n + 2);
    CHECK((int)p.pi.at("b").size() == n);
    CHECK((int)p.pi.at("r").size() == n);
    CHECK((int)p.pi.at("1").size() == n + 1);  // b, r and the other indices

    RotationSystem k = k2n_restriction(n);
    CHECK((int)k.elements.size() == n + 2);
    CHECK((int)k.pi.at("1").size() == 2);
  }
  CHECK((int)fig1_system().elements.size() == 4);
  CHECK_THROWS_AS(pi_n(0), input_error);
  CHECK_THROWS_AS(k2n_restriction(0), input_error);
}

TEST_CASE("restrict_system keeps rotation order") {
  RotationSystem s = restrict_system(pi_n(4), {"b", "r", "1", "2"});
  validate_system(s);
  CHECK(s.elements == std::vector<std::string>{"b", "r", "1", "2"});
  CHECK(s.pi.at("b") == std::vector<std::string>{"2", "1"});  // hub order descends
  CHECK(s.pi.at("1").size() == 3);  // b, r, green to 2 survive
}

TEST_CASE("relabel_system demands a bijection and round-trips") {
  std::map<std::string, std::string> to = {{"a", "p"}, {"b", "q"}, {"c", "r"}, {"d", "s"}};
  RotationSystem s = relabel_system(square(), to);
  validate_system(s);
  CHECK(s.elements == std::vector<std::string>{"p", "q", "r", "s"});
  std::map<std::string, std::string> back = {{"p", "a"}, {"q", "b"}, {"r", "c"}, {"s", "d"}};
  CHECK(relabel_system(s, back) == square());

  std::map<std::string, std::string> collapse = {{"a", "p"}, {"b", "p"}, {"c", "r"}, {"d", "s"}};
  CHECK_THROWS_AS(relabel_system(square(), collapse), input_error);
  std::map<std::string, std::string> partial = {{"a", "p"}};
  CHECK_THROWS_AS(relabel_system(square(), partial), input_error);
}

TEST_CASE("automorphism groups of the named systems") {
  CHECK(automorphisms(k2n_restriction(2)).size() == 8);
  CHECK(automorphisms(pi_n(3)).size() == 1);
  CHECK(automorphisms(fig1_system()).size() == 3);
  CHECK(automorphisms(complete_systems(3)[0]).size() == 6);
  // Applying an automorphism leaves every rotation cyclically unchanged.
  for (const auto& a : automorphisms(fig1_system())) {
    RotationSystem re = relabel_system(fig1_system(), a);
    for (const std::string& e : re.elements)
      CHECK(cyclic_equal(re.pi.at(e), fig1_system().pi.at(e)));
  }
}

TEST_CASE("complete_systems enumeration") {
  CHECK(complete_systems(3).size() == 1);
  CHECK(complete_systems(4).size() == 16);
  CHECK(complete_systems(5).size() == 7776);
  CHECK(complete_systems(4)[4] == fig1_system());
  for (const RotationSystem& s : complete_systems(4)) {
    validate_system(s);
    CHECK(is_complete(s));
  }
  // Distinct indices give distinct systems.
  auto all = complete_systems(4);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
  CHECK_THROWS_AS(complete_systems(2), input_error);
  CHECK_THROWS_AS(complete_systems(6), resource_error);
}
