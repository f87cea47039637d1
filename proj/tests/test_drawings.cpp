#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "rotsys/constructions.hpp"
#include "rotsys/drawing.hpp"
#include "rotsys/map.hpp"
#include "rotsys/reference.hpp"
#include "rotsys/solver.hpp"

using namespace rotsys;
namespace ref = rotsys::reference;

namespace {

Drawing uniform_w1(int n) {
  return witness_1drawing(n, Sign::positive, UniformDirection::forward, Monotone::increasing,
                          Monotone::increasing);
}

// Drops one crossing record and its schedule entries.
Drawing drop_crossing(Drawing d, const std::string& cid) {
  for (auto it = d.crossings.begin(); it != d.crossings.end(); ++it)
    if (it->id == cid) {
      d.crossings.erase(it);
      break;
    }
  for (auto& [eid, sched] : d.schedule)
    for (auto it = sched.begin(); it != sched.end(); ++it)
      if (*it == cid) {
        sched.erase(it);
        break;
      }
  return d;
}

}  // namespace

TEST_CASE("validate_drawing structural errors") {
  Drawing d = uniform_w1(3);
  CHECK_NOTHROW(validate_drawing(d));

  Drawing dup = d;
  dup.crossings.push_back(dup.crossings[0]);
  CHECK_THROWS_AS(validate_drawing(dup), structural_error);  // duplicate crossing id

  Drawing unknown = d;
  unknown.crossings[0].edge_a = "nope";  // schedule cross-check fires first
  CHECK_THROWS_AS(validate_drawing(unknown), input_error);

  Drawing missing = d;
  missing.schedule["b1"].clear();
  CHECK_THROWS_AS(validate_drawing(missing), input_error);  // crossing absent from schedule

  Drawing rot = d;
  rot.rotations["b"] = {"b1", "b2"};
  CHECK_THROWS_AS(validate_drawing(rot), structural_error);  // rotation misses b3
}

TEST_CASE("validate_simple violation codes") {
  // Embedding edge ids are endpoint pairs: b-1, b-2, r-1, r-2.
  Drawing base = zero_drawing_embedding(k2n_restriction(2));
  CHECK(validate_simple(base).empty());

  Drawing adj = base;
  adj.crossings.push_back({"x", "b-1", "b-2", Interleave::POS});
  adj.schedule["b-1"] = {"x"};
  adj.schedule["b-2"] = {"x"};
  validate_drawing(adj);
  auto v = validate_simple(adj);
  REQUIRE(v.size() == 1);
  CHECK(v[0].code == "adjacent-crossing");
  CHECK_THROWS_AS(planarize(adj), input_error);

  Drawing dbl = base;
  dbl.crossings.push_back({"x1", "b-1", "r-2", Interleave::POS});
  dbl.crossings.push_back({"x2", "b-1", "r-2", Interleave::NEG});
  dbl.schedule["b-1"] = {"x1", "x2"};
  dbl.schedule["r-2"] = {"x2", "x1"};
  validate_drawing(dbl);
  v = validate_simple(dbl);
  REQUIRE(v.size() == 1);
  CHECK(v[0].code == "double-crossing");

  Drawing self = base;
  self.crossings.push_back({"x", "b-1", "b-1", Interleave::POS});
  self.schedule["b-1"] = {"x", "x"};
  validate_drawing(self);
  v = validate_simple(self);
  REQUIRE(v.size() == 1);
  CHECK(v[0].code == "self-crossing");
}

TEST_CASE("witness drawings realize their systems") {
  CHECK(realizes(uniform_w1(4), k2n_restriction(4)));
  CHECK(realizes(witness_2drawing(4, uniform_profile()), k2n_restriction(4)));
  CHECK(realizes(zero_drawing_embedding(pi_n(3)), pi_n(3)));
  CHECK(realizes(zero_drawing_embedding(fig1_system()), fig1_system()));
  CHECK_FALSE(realizes(uniform_w1(4), pi_n(4)));  // same elements, no green edges
}

TEST_CASE("classify_1 echoes every witness parameter combination") {
  for (int n : {3, 5})
    for (Sign sg : {Sign::positive, Sign::negative})
      for (UniformDirection dir : {UniformDirection::forward, UniformDirection::backward})
        for (Monotone bo : {Monotone::increasing, Monotone::decreasing})
          for (Monotone ro : {Monotone::increasing, Monotone::decreasing}) {
            Drawing d = witness_1drawing(n, sg, dir, bo, ro);
            CHECK(validate_simple(d).empty());
            OneDrawingProfile p = classify_1(d);
            CHECK(p.sign ==
                  (sg == Sign::positive ? UniformSign::positive : UniformSign::negative));
            CHECK(p.direction == dir);
            CHECK(p.blue == bo);
            CHECK(p.red == ro);
            CHECK_FALSE(p.blue_vacuous);
            CHECK_FALSE(p.red_vacuous);
          }
}

TEST_CASE("classify_2 echoes definite two-drawing profiles") {
  for (int n : {3, 5})
    for (bool af : {true, false})
      for (Monotone ao : {Monotone::increasing, Monotone::decreasing})
        for (Monotone bo : {Monotone::increasing, Monotone::decreasing})
          for (UniformSign as : {UniformSign::positive, UniformSign::negative})
            for (Monotone b1 : {Monotone::increasing, Monotone::decreasing}) {
              TwoDrawingProfile p = uniform_profile();
              p.ahead_first = af;
              p.ahead_order = ao;
              p.behind_order = bo;
              p.ahead_sign = as;
              p.b1_order = b1;
              Drawing d = witness_2drawing(n, p);
              CHECK(validate_simple(d).empty());
              CHECK(classify_2(d) == p);
            }
}

TEST_CASE("witness parameters must be definite") {
  CHECK_THROWS_AS(witness_1drawing(4, Sign::positive, UniformDirection::mixed,
                                   Monotone::increasing, Monotone::increasing),
                  input_error);
  CHECK_THROWS_AS(witness_1drawing(4, Sign::positive, UniformDirection::forward,
                                   Monotone::non_monotone, Monotone::increasing),
                  input_error);
  TwoDrawingProfile p = uniform_profile();
  p.behind_sign = UniformSign::mixed;
  CHECK_THROWS_AS(witness_2drawing(4, p), input_error);
  CHECK_THROWS_AS(witness_2drawing(2, uniform_profile()), input_error);
}

TEST_CASE("classify_ell on the named drawings") {
  CHECK(classify_ell(uniform_w1(4)) == 1);
  CHECK(classify_ell(witness_2drawing(4, uniform_profile())) == 2);
  CHECK(classify_ell(zero_drawing_embedding(k2n_restriction(5))) == 0);
  CHECK(classify_ell(zero_drawing_embedding(pi_n(3))) == 0);
  // Removing one crossing makes the cycle counts disagree.
  CHECK_FALSE(classify_ell(drop_crossing(uniform_w1(3), "x_b1_r2")).has_value());
}

TEST_CASE("canonical cycle self-crossing counts") {
  Drawing w2 = witness_2drawing(4, uniform_profile());
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) CHECK(canonical_cycle_self_crossings(w2, i, j) == 2);
  CHECK_THROWS_AS(canonical_cycle_self_crossings(w2, 2, 2), input_error);
  CHECK_THROWS_AS(canonical_cycle_self_crossings(w2, 0, 3), input_error);
}

TEST_CASE("crossing_sign matches the planarized-rotation oracle") {
  // Uniform witnesses read back their sign on every crossing.
  Drawing wn = witness_1drawing(3, Sign::negative, UniformDirection::forward,
                                Monotone::increasing, Monotone::increasing);
  for (const CrossingRecord& c : wn.crossings) {
    CHECK(crossing_sign(wn, c.id) == Sign::negative);
    CHECK(ref::crossing_sign_naive(wn, c.id) == Sign::negative);
  }
  // Dual route across enumerated drawings.
  int checked = 0;
  SearchConfig cfg;
  cfg.max_crossings = 3;
  enumerate_drawings(k2n_restriction(3), cfg, [&](const Drawing& d) {
    for (const CrossingRecord& c : d.crossings) {
      ++checked;
      CHECK(crossing_sign(d, c.id) == ref::crossing_sign_naive(d, c.id));
    }
    return checked < 400;
  });
  CHECK(checked >= 400);
  CHECK_THROWS_AS(crossing_sign(wn, "missing"), input_error);
}

TEST_CASE("crossing_sequence lists partners from the hub end") {
  Drawing w = uniform_w1(4);
  CHECK(crossing_sequence(w, "b1") == std::vector<int>{2, 3, 4});
  CHECK(crossing_sequence(w, "r4") == std::vector<int>{1, 2, 3});
  CHECK(crossing_sequence(w, "b4").empty());  // forward: b4 only crosses larger partners
  Drawing v = witness_1drawing(4, Sign::positive, UniformDirection::forward,
                               Monotone::decreasing, Monotone::increasing);
  CHECK(crossing_sequence(v, "b1") == std::vector<int>{4, 3, 2});
}

TEST_CASE("mirror_drawing reverses orientation") {
  Drawing w = witness_2drawing(4, uniform_profile());
  CHECK(same_map(planarize(mirror_drawing(w)), reverse_orientation(planarize(w))));
  Drawing w1 = uniform_w1(3);
  CHECK(same_map(planarize(mirror_drawing(w1)), reverse_orientation(planarize(w1))));
  // Mirroring twice restores the drawing exactly.
  CHECK(mirror_drawing(mirror_drawing(w)) == w);
}

TEST_CASE("canonicalize_hub_ids normalizes crossing roles") {
  Drawing w = uniform_w1(3);
  Drawing c = canonicalize_hub_ids(w);
  CHECK(canonicalize_hub_ids(c) == c);
  // Swapping a record's roles and flipping its tag is the same crossing.
  Drawing swapped = w;
  std::swap(swapped.crossings[0].edge_a, swapped.crossings[0].edge_b);
  swapped.crossings[0].interleave = swapped.crossings[0].interleave == Interleave::POS
                                        ? Interleave::NEG
                                        : Interleave::POS;
  validate_drawing(swapped);
  CHECK(canonicalize_hub_ids(swapped) == c);
  CHECK(same_map(planarize(swapped), planarize(w)));
}

TEST_CASE("relabel_drawing round-trips") {
  Drawing w = uniform_w1(3);
  std::map<std::string, std::string> to = {{"b", "B"}, {"r", "R"}, {"1", "one"},
                                           {"2", "two"}, {"3", "three"}};
  Drawing re = relabel_drawing(w, to);
  validate_drawing(re);
  std::map<std::string, std::string> back;
  for (const auto& [k, v] : to) back[v] = k;
  CHECK(relabel_drawing(re, back) == w);
  std::map<std::string, std::string> partial = {{"b", "B"}};
  CHECK_THROWS_AS(relabel_drawing(w, partial), input_error);
}

TEST_CASE("main cycles: good on the two-star embedding, bad on the full one") {
  Drawing k25 = zero_drawing_embedding(k2n_restriction(5));
  for (int i = 1; i <= 5; ++i) CHECK(main_cycle_good(k25, i));
  Drawing p3 = zero_drawing_embedding(pi_n(3));
  for (int i = 1; i <= 3; ++i) CHECK_FALSE(main_cycle_good(p3, i));
  // A self-crossing main cycle has no disk question to answer.
  CHECK_THROWS_AS(main_cycle_good(uniform_w1(3), 1), input_error);
  CHECK_THROWS_AS(main_cycle_good(k25, 6), input_error);
}

TEST_CASE("restrict_drawing with every edge kept planarizes") {
  Drawing w = uniform_w1(3);
  std::vector<std::string> all;
  for (const DrawingEdge& e : w.edges) all.push_back(e.id);
  CHECK(isomorphic(restrict_drawing(w, all), planarize(w)));
  CHECK_THROWS_AS(restrict_drawing(w, {"nope"}), input_error);
}

TEST_CASE("reduction collapses a 2-drawing to a 1-drawing of the smaller star") {
  struct Expect {
    int n, gin_high, gout_high, gin_low, gout_low;
  };
  // Frozen planarized genus of input and output per case.
  const Expect table[] = {{3, 3, 0, 4, 0}, {4, 4, 2, 6, 1}, {5, 6, 3, 9, 2}};
  for (const Expect& e : table) {
    TwoDrawingProfile hi = uniform_profile();
    hi.ahead_sign = UniformSign::negative;
    TwoDrawingProfile lo = uniform_profile();
    lo.behind_sign = UniformSign::negative;
    struct Side {
      TwoDrawingProfile prof;
      ReduceCase which;
      int gin, gout;
    };
    for (const Side& s : {Side{hi, ReduceCase::spine_high, e.gin_high, e.gout_high},
                          Side{lo, ReduceCase::spine_low, e.gin_low, e.gout_low}}) {
      Drawing in = witness_2drawing(e.n, s.prof);
      Drawing out = reduce_2drawing_to_1drawing(in, s.which);
      CHECK(validate_simple(out).empty());
      CHECK(realizes(out, k2n_restriction(e.n - 1)));
      CHECK(classify_ell(out) == 1);
      CHECK((int)out.crossings.size() == (e.n - 1) * (e.n - 2) / 2);
      CHECK(euler_genus(planarize(in)) == s.gin);
      CHECK(euler_genus(planarize(out)) == s.gout);
    }
  }
}

TEST_CASE("reduction auto_pick matches the profile and rejects misfits") {
  TwoDrawingProfile hi = uniform_profile();
  hi.ahead_sign = UniformSign::negative;
  Drawing d = witness_2drawing(4, hi);
  CHECK(reduce_2drawing_to_1drawing(d) == reduce_2drawing_to_1drawing(d, ReduceCase::spine_high));

  Drawing uniform = witness_2drawing(4, uniform_profile());
  CHECK_THROWS_WITH_AS(reduce_2drawing_to_1drawing(uniform),
                       "profile fits neither reduction case: high spine needs ahead-negative; "
                       "low spine needs behind-negative",
                       input_error);
  // Asking for the low case on a high-profile drawing names the unmet preconditions.
  CHECK_THROWS_AS(reduce_2drawing_to_1drawing(d, ReduceCase::spine_low), input_error);
}

TEST_CASE("planarize rejects green-less hub drawings with missing schedules gracefully") {
  // Schedule keys may be absent entirely; validation tolerates and planarize treats as empty.
  Drawing d = zero_drawing_embedding(k2n_restriction(3));
  d.schedule.clear();
  CHECK_NOTHROW(validate_drawing(d));
  CHECK(euler_genus(planarize(d)) == 0);
}
