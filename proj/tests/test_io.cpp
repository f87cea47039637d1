#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "rotsys/constructions.hpp"
#include "rotsys/drawing.hpp"
#include "rotsys/io.hpp"
#include "rotsys/map.hpp"
#include "rotsys/solver.hpp"

using namespace rotsys;

namespace {

Drawing sample_drawing() {
  Drawing d;
  SearchConfig c;
  c.ell = 1;
  c.max_crossings = 5;
  enumerate_drawings(pi_n(3), c, [&](const Drawing& x) {
    d = x;
    return false;
  });
  return d;
}

std::string drawing_error(const char* txt) {
  try {
    drawing_from_json(parse_json(txt));
    return "NOERR";
  } catch (const input_error& e) {
    return e.what();
  }
}

}  // namespace

TEST_CASE("system round trip is byte-stable") {
  RotationSystem s = pi_n(3);
  std::string t1 = canonical_dump(system_to_json(s));
  RotationSystem back = system_from_json(parse_json(t1));
  CHECK(back == s);
  CHECK(canonical_dump(system_to_json(back)) == t1);
  CHECK(t1.back() == '\n');
}

TEST_CASE("drawing round trip is byte-stable and exact") {
  Drawing d = sample_drawing();
  REQUIRE_FALSE(d.edges.empty());
  std::string t1 = canonical_dump(drawing_to_json(d));
  Drawing back = drawing_from_json(parse_json(t1));
  CHECK(back == d);
  CHECK(canonical_dump(drawing_to_json(back)) == t1);
}

TEST_CASE("map round trip preserves structure and genus") {
  CombinatorialMap m = planarize(sample_drawing());
  std::string t1 = canonical_dump(map_to_json(m));
  CombinatorialMap back = map_from_json(parse_json(t1));
  CHECK(back == m);
  CHECK(canonical_dump(map_to_json(back)) == t1);
  CHECK(euler_genus(back) == euler_genus(m));
}

TEST_CASE("parse_json wraps syntax errors as input errors") {
  CHECK_THROWS_AS(parse_json("{nope"), input_error);
  CHECK_THROWS_AS(parse_json(""), input_error);
  CHECK_NOTHROW(parse_json("{}"));
}

TEST_CASE("diagnostics carry json pointers") {
  CHECK(drawing_error("{}") == "/: missing key \"vertices\"");
  CHECK(drawing_error(R"({"vertices":[1],"edges":[],"rotations":{},"crossings":[],"schedule":{}})") ==
        "/vertices/0: expected a string");
  CHECK(drawing_error(
            R"({"vertices":["a","b"],"edges":[{"id":"e","ends":["a"]}],"rotations":{},"crossings":[],"schedule":{}})") ==
        "/edges/0/ends: expected exactly two endpoints");
  CHECK(drawing_error(
            R"({"vertices":["a","b"],"edges":[{"id":"e","ends":["a","b"]}],"rotations":{"a":["e"],"b":["e"]},"crossings":[{"id":"x","edges":["e","e"],"interleave":"pos"}],"schedule":{}})") ==
        "/crossings/0/interleave: expected \"POS\" or \"NEG\"");
  try {
    map_from_json(parse_json(
        R"({"vertices":[{"name":"v","kind":"real","rotation":[0,1]}],"alpha":[[0,1],[1,0]]})"));
    CHECK(false);
  } catch (const input_error& e) {
    CHECK(std::string(e.what()) == "/alpha/1/0: dart 1 paired twice");
  }
}

TEST_CASE("from_json validates semantics, not just shape") {
  // Structurally well-formed JSON whose drawing breaks validation.
  Drawing d = sample_drawing();
  json j = drawing_to_json(d);
  j["rotations"]["b"] = json::array();
  CHECK_THROWS_AS(drawing_from_json(j), structural_error);

  json sys = system_to_json(pi_n(3));
  sys["pi"]["b"] = {"1"};
  CHECK_THROWS_AS(system_from_json(sys), structural_error);  // asymmetric
}

TEST_CASE("alpha serialization pairs each dart once") {
  CombinatorialMap m = planarize(sample_drawing());
  json j = map_to_json(m);
  REQUIRE(j.contains("alpha"));
  CHECK((int)j["alpha"].size() * 2 == m.dart_count());
  for (const json& pair : j["alpha"]) CHECK(pair[0].get<int>() < pair[1].get<int>());
}

TEST_CASE("dot export shapes crossing vertices") {
  std::string dot = to_dot(star_restriction(4, Spine::blue, SpineOrder::inc, SpineSign::pos));
  int stmts = 0, edges = 0;
  for (size_t p = dot.find(";\n"); p != std::string::npos; p = dot.find(";\n", p + 2)) ++stmts;
  for (size_t p = dot.find(" -- "); p != std::string::npos; p = dot.find(" -- ", p + 4)) ++edges;
  CHECK(edges == 10);
  CHECK(stmts - edges == 9);  // one node statement per vertex
  CHECK(dot.find("fillcolor=white") != std::string::npos);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.rfind("graph map {", 0) == 0);

  std::string plain = to_dot(planarize(zero_drawing_embedding(k2n_restriction(2))));
  CHECK(plain.find("shape=box") == std::string::npos);  // no crossing vertices
}

TEST_CASE("canonical_dump is deterministic and sorted") {
  json j;
  j["zeta"] = 1;
  j["alpha"] = 2;
  std::string s = canonical_dump(j);
  CHECK(s == "{\n  \"alpha\": 2,\n  \"zeta\": 1\n}\n");
}
