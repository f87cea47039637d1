#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "rotsys/constructions.hpp"
#include "rotsys/map.hpp"

using namespace rotsys;

namespace {

struct Quad {
  int v, e, f, g;
};

Quad quad(const CombinatorialMap& m) {
  return {(int)m.vertices.size(), m.dart_count() / 2, trace_facial_walks(m).count(),
          euler_genus(m)};
}

bool operator==(const Quad& a, const Quad& b) {
  return a.v == b.v && a.e == b.e && a.f == b.f && a.g == b.g;
}

doctest::String toString(const Quad& q) {
  return (std::string("(") + std::to_string(q.v) + "," + std::to_string(q.e) + "," +
          std::to_string(q.f) + "," + std::to_string(q.g) + ")")
      .c_str();
}

std::string num(int k) { return std::to_string(k); }

}  // namespace

TEST_CASE("star restriction counts") {
  CHECK(quad(star_restriction(4, Spine::blue, SpineOrder::inc, SpineSign::pos)) ==
        Quad{9, 10, 1, 1});
  CHECK(quad(star_restriction(5, Spine::blue, SpineOrder::inc, SpineSign::pos)) ==
        Quad{11, 13, 2, 1});
  CHECK(quad(star_restriction(6, Spine::red, SpineOrder::inc, SpineSign::pos)) ==
        Quad{13, 16, 1, 2});
  CHECK(quad(star_restriction(3, Spine::blue, SpineOrder::inc, SpineSign::pos)) ==
        Quad{7, 7, 2, 0});
  // v and e follow 2n+1 and 3n-2 for every parameter combination.
  for (int n : {3, 4, 5, 6})
    for (Spine sp : {Spine::blue, Spine::red})
      for (SpineOrder o : {SpineOrder::inc, SpineOrder::dec})
        for (SpineSign sg : {SpineSign::pos, SpineSign::neg}) {
          CombinatorialMap m = star_restriction(n, sp, o, sg);
          validate_map(m);
          Quad q = quad(m);
          CHECK(q.v == 2 * n + 1);
          CHECK(q.e == 3 * n - 2);
          CHECK((q.v - q.e + q.f) % 2 == 0);
        }
}

TEST_CASE("chain gadget counts") {
  CHECK(quad(gadget_claim52(3)) == Quad{6, 7, 1, 1});
  CHECK(quad(gadget_claim52(4)) == Quad{9, 12, 1, 2});
  CHECK(quad(gadget_claim52(8)) == Quad{21, 32, 1, 6});
  for (int n = 3; n <= 8; ++n) {
    CombinatorialMap m = gadget_claim52(n);
    validate_map(m);
    CHECK(quad(m) == Quad{3 * n - 3, 5 * n - 8, 1, n - 2});
  }
}

TEST_CASE("sparse chain gadget counts") {
  CHECK(quad(gadget_claim73(4)) == Quad{8, 9, 1, 1});
  CHECK(quad(gadget_claim73(7)) == Quad{14, 17, 1, 2});
  CHECK(quad(gadget_claim73(10)) == Quad{20, 25, 1, 3});
  for (int n : {4, 7, 10, 13}) {
    CombinatorialMap m = gadget_claim73(n);
    validate_map(m);
    CHECK(quad(m) == Quad{2 * n, (8 * n - 5) / 3, 1, (n - 1) / 3});
  }
  CHECK_THROWS_AS(gadget_claim73(5), input_error);  // needs n = 1 mod 3
  CHECK_THROWS_AS(gadget_claim52(2), input_error);
}

TEST_CASE("embeddings and witnesses planarize to the frozen quads") {
  CHECK(quad(planarize(zero_drawing_embedding(pi_n(3)))) == Quad{5, 9, 2, 2});
  CHECK(quad(planarize(zero_drawing_embedding(pi_n(4)))) == Quad{6, 14, 2, 4});
  CHECK(quad(planarize(zero_drawing_embedding(k2n_restriction(5)))) == Quad{7, 10, 5, 0});
  CHECK(quad(planarize(zero_drawing_embedding(fig1_system()))) == Quad{4, 6, 2, 1});
  CHECK(quad(planarize(witness_1drawing(4, Sign::positive, UniformDirection::forward,
                                        Monotone::increasing, Monotone::increasing))) ==
        Quad{12, 20, 4, 3});
  CHECK(quad(planarize(witness_2drawing(4, uniform_profile()))) == Quad{18, 32, 4, 6});
}

TEST_CASE("gadget_spec formulas are Euler-consistent and guarded") {
  for (int n : {4, 6, 8, 10})
    for (const char* variant : {"blue", "red"}) {
      GadgetSpec g = gadget_spec("5.1", n, variant);
      CHECK(g.vertices - g.edges + g.faces == 2 - 2 * g.genus);
      CHECK(g.vertices == 2 * n + 1);
      CHECK(g.edges == 3 * n - 2);
      CHECK(g.faces == 1);
      CHECK(g.genus == (n - 2) / 2);
    }
  for (int n = 3; n <= 8; ++n) {
    GadgetSpec g = gadget_spec("5.2", n);
    CHECK(quad(gadget_claim52(n)) == Quad{g.vertices, g.edges, g.faces, g.genus});
  }
  for (int k = 1; k <= 8; ++k) {
    static const char* romans[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
    GadgetSpec g = gadget_spec("7.1", 6, romans[k - 1]);
    CHECK(Quad{g.vertices, g.edges, g.faces, g.genus} == Quad{13, 16, 1, 2});
  }
  for (int n : {4, 7, 10}) {
    GadgetSpec g = gadget_spec("7.3", n);
    CHECK(quad(gadget_claim73(n)) == Quad{g.vertices, g.edges, g.faces, g.genus});
  }
  CHECK_THROWS_AS(gadget_spec("5.1", 5, "blue"), input_error);  // odd n
  CHECK_THROWS_AS(gadget_spec("5.1", 6), input_error);          // variant required
  CHECK_THROWS_AS(gadget_spec("7.1", 5, "i"), input_error);
  CHECK_THROWS_AS(gadget_spec("7.1", 6, "ix"), input_error);
  CHECK_THROWS_AS(gadget_spec("7.3", 6), input_error);
  CHECK_THROWS_AS(gadget_spec("9.9", 4), input_error);
}

TEST_CASE("eight restriction cases collapse to the spine gadgets") {
  for (int n : {4, 6})
    for (int k = 1; k <= 8; ++k) {
      RestrictionCase c = claim71_case(k, n);
      Drawing ambient = witness_2drawing(n, c.ambient);
      CombinatorialMap left = restrict_drawing(ambient, c.keep);
      CombinatorialMap right = star_restriction(n, c.spine, c.order, c.sign);
      CHECK(isomorphic(left, right));
    }
  CHECK_THROWS_AS(claim71_case(0, 4), input_error);
  CHECK_THROWS_AS(claim71_case(9, 4), input_error);
}

TEST_CASE("segment surgery rebuilds the chain gadget") {
  for (int n : {3, 4, 5, 6}) {
    Drawing amb = witness_1drawing(n, Sign::positive, UniformDirection::forward,
                                   Monotone::decreasing, Monotone::decreasing);
    std::set<std::pair<std::string, int>> keep;
    for (int j = 1; j < n; ++j)
      for (int t = 0; t <= n - j; ++t) keep.insert({"b" + num(j), t});
    for (int i = 2; i <= n; ++i) keep.insert({"r" + num(i), 0});
    for (int i = 2; i < n; ++i) keep.insert({"r" + num(i), i - 1});
    CHECK(isomorphic(restrict_segments(amb, keep), gadget_claim52(n)));
  }
}

TEST_CASE("segment surgery rebuilds the sparse chain gadget") {
  for (int n : {4, 7}) {
    TwoDrawingProfile p = uniform_profile();
    p.ahead_order = Monotone::decreasing;
    p.behind_order = Monotone::decreasing;
    p.b1_order = Monotone::decreasing;
    Drawing amb = witness_2drawing(n, p);
    std::set<std::pair<std::string, int>> keep;
    for (int j = 1; j <= n; ++j)
      for (int t = 0; t <= n - 1; ++t) keep.insert({"b" + num(j), t});
    for (int i = 3; i < n; i += 3) {
      keep.insert({"r" + num(i), n - i});
      keep.insert({"r" + num(i), n - 1});
    }
    CHECK(isomorphic(restrict_segments(amb, keep), gadget_claim73(n)));
  }
}

TEST_CASE("restrict_segments rejects unknown pieces") {
  Drawing amb = witness_1drawing(3, Sign::positive, UniformDirection::forward,
                                 Monotone::increasing, Monotone::increasing);
  CHECK_THROWS_AS(restrict_segments(amb, {{std::string("b1"), 99}}), input_error);
  CHECK_THROWS_AS(restrict_segments(amb, {{std::string("zz"), 0}}), input_error);
}

TEST_CASE("zero_drawing_embedding pins rotations and stays crossing-free") {
  Drawing d = zero_drawing_embedding(pi_n(4));
  CHECK(d.crossings.empty());
  CHECK(realizes(d, pi_n(4)));
  for (const auto& [eid, sched] : d.schedule) CHECK(sched.empty());
}
