#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotsys/constructions.hpp"
#include "rotsys/map.hpp"
#include "rotsys/reference.hpp"

using namespace rotsys;
namespace ref = rotsys::reference;

namespace {

// a --0|1-- b --2|3-- c
CombinatorialMap path3() {
  CombinatorialMap m;
  m.vertices = {{"a", VertexKind::real, {0}},
                {"b", VertexKind::real, {1, 2}},
                {"c", VertexKind::real, {3}}};
  m.alpha = {1, 0, 3, 2};
  return m;
}

// One vertex, two loops interleaved: rotation (a, b, a', b').
CombinatorialMap torus_bouquet() {
  CombinatorialMap m;
  m.vertices = {{"v", VertexKind::real, {0, 1, 2, 3}}};
  m.alpha = {2, 3, 0, 1};
  return m;
}

// One vertex, two loops nested: rotation (a, a', b, b').
CombinatorialMap plane_bouquet() {
  CombinatorialMap m;
  m.vertices = {{"v", VertexKind::real, {0, 2, 1, 3}}};
  m.alpha = {2, 3, 0, 1};
  return m;
}

CombinatorialMap triangle() {
  CombinatorialMap m;
  m.vertices = {{"a", VertexKind::real, {0, 5}},
                {"b", VertexKind::real, {2, 1}},
                {"c", VertexKind::real, {4, 3}}};
  m.alpha = {1, 0, 3, 2, 5, 4};
  return m;
}

int faces(const CombinatorialMap& m) { return trace_facial_walks(m).count(); }

}  // namespace

TEST_CASE("validate_map accepts the hand fixtures") {
  for (const CombinatorialMap& m : {path3(), torus_bouquet(), plane_bouquet(), triangle()})
    CHECK_NOTHROW(validate_map(m));
}

TEST_CASE("validate_map rejects malformed maps") {
  CombinatorialMap m = path3();
  m.alpha[0] = 0;
  CHECK_THROWS_AS(validate_map(m), structural_error);  // alpha fixed point

  m = path3();
  m.alpha[1] = 2;
  CHECK_THROWS_AS(validate_map(m), structural_error);  // not an involution

  m = path3();
  m.vertices[2].rotation.clear();
  CHECK_THROWS_AS(validate_map(m), structural_error);  // dart 3 unplaced

  m = path3();
  m.vertices[0].rotation.push_back(3);
  CHECK_THROWS_AS(validate_map(m), structural_error);  // dart 3 placed twice

  m = path3();
  m.vertices[1].kind = VertexKind::crossing;
  CHECK_THROWS_AS(validate_map(m), structural_error);  // crossing vertex degree != 4
}

TEST_CASE("facial walks and euler genus on hand fixtures") {
  CHECK(faces(path3()) == 1);
  CHECK(euler_genus(path3()) == 0);

  CHECK(faces(torus_bouquet()) == 1);
  CHECK(euler_genus(torus_bouquet()) == 1);

  CHECK(faces(plane_bouquet()) == 3);
  CHECK(euler_genus(plane_bouquet()) == 0);

  CHECK(faces(triangle()) == 2);
  CHECK(euler_genus(triangle()) == 0);
}

TEST_CASE("euler genus sums over components, dartless vertices count one face") {
  CombinatorialMap m = torus_bouquet();
  CombinatorialMap t = triangle();
  int base = (int)m.alpha.size();
  for (const MapVertex& v : t.vertices) {
    MapVertex copy = v;
    for (Dart& d : copy.rotation) d += base;
    m.vertices.push_back(copy);
  }
  for (Dart d : t.alpha) m.alpha.push_back(d + base);
  m.vertices.push_back({"isolated", VertexKind::real, {}});
  validate_map(m);
  CHECK(connected_components(m).size() == 3);
  CHECK(euler_genus(m) == 1);
  CHECK(faces(m) == 1 + 2);  // isolated vertices contribute no walk
}

TEST_CASE("reverse_orientation is an involution preserving faces and genus") {
  CombinatorialMap m = planarize(witness_2drawing(4, uniform_profile()));
  CombinatorialMap r = reverse_orientation(m);
  CHECK(reverse_orientation(r) == m);
  CHECK(faces(r) == faces(m));
  CHECK(euler_genus(r) == euler_genus(m));
  CHECK_FALSE(r == m);
}

TEST_CASE("same_map ignores rotation starting points only") {
  CombinatorialMap m = triangle();
  CombinatorialMap rotated = m;
  rotated.vertices[0].rotation = {5, 0};
  CHECK_FALSE(rotated == m);
  CHECK(same_map(rotated, m));

  CombinatorialMap renamed = m;
  renamed.vertices[0].name = "z";
  CHECK_FALSE(same_map(renamed, m));

  // Reflection is not a rotation (needs degree > 2 to tell apart).
  CombinatorialMap t = torus_bouquet();
  CombinatorialMap reflected = t;
  reflected.vertices[0].rotation = {0, 3, 2, 1};
  CHECK_FALSE(same_map(reflected, t));
  CHECK(same_map(reflected, reverse_orientation(t)));
}

TEST_CASE("isomorphic ignores names, separates genus") {
  CombinatorialMap m = triangle();
  CombinatorialMap renamed = m;
  renamed.vertices[0].name = "x";
  renamed.vertices[1].name = "y";
  renamed.vertices[2].name = "z";
  CHECK(isomorphic(m, renamed));
  CHECK(canonical_signature(m) == canonical_signature(renamed));
  CHECK_FALSE(isomorphic(torus_bouquet(), plane_bouquet()));

  // Two dart-bearing components; a lone isolated vertex would be compacted away.
  CombinatorialMap disconnected = path3();
  disconnected.vertices.push_back({"lone", VertexKind::real, {4, 5}});
  disconnected.alpha.push_back(5);
  disconnected.alpha.push_back(4);
  CHECK_THROWS_AS(canonical_signature(disconnected), input_error);
}

TEST_CASE("cut_along_cycle distinguishes separating from non-separating") {
  // Non-separating loop on the torus: one component, two boundary circles, capped genus 0.
  CutResult c = cut_along_cycle(torus_bouquet(), {0});
  CHECK_FALSE(c.separating);
  CHECK_FALSE(c.disk_side_exists);
  REQUIRE(c.components.size() == 1);
  CHECK(c.components[0].boundary_count == 2);
  CHECK(c.components[0].genus == 0);

  // The same loop on the plane bouquet separates off a disk.
  CutResult p = cut_along_cycle(plane_bouquet(), {0});
  CHECK(p.separating);
  CHECK(p.disk_side_exists);
  CHECK(p.components.size() == 2);

  // Triangle cut along its own cycle: two disks.
  CutResult t = cut_along_cycle(triangle(), {0, 2, 4});
  CHECK(t.separating);
  CHECK(t.disk_side_exists);
  REQUIRE(t.components.size() == 2);
  for (const CutComponent& comp : t.components) {
    CHECK(comp.boundary_count == 1);
    CHECK(comp.genus == 0);
  }

  CHECK_THROWS_AS(cut_along_cycle(triangle(), {0, 2}), input_error);     // does not close
  CHECK_THROWS_AS(cut_along_cycle(triangle(), {0, 3}), input_error);     // does not chain
  CHECK_THROWS_AS(cut_along_cycle(triangle(), std::vector<Dart>{}), input_error);
}

TEST_CASE("delete, suppress, contract, compact") {
  CombinatorialMap m = path3();

  CombinatorialMap no_b = delete_vertices(m, {1});
  CHECK(no_b.vertices.size() == 2);
  CHECK(no_b.dart_count() == 0);
  CHECK(compact(no_b, true).vertices.empty());
  CHECK(euler_genus(no_b) == 0);

  CombinatorialMap no_ab = delete_edges(m, {0});
  CHECK(no_ab.vertices.size() == 3);
  CHECK(no_ab.dart_count() == 2);
  CHECK(faces(no_ab) == 1);

  CombinatorialMap merged = suppress_degree2(m, 1);
  CHECK(merged.vertices.size() == 2);
  CHECK(merged.dart_count() == 2);
  CHECK(euler_genus(merged) == 0);
  CHECK_THROWS_AS(suppress_degree2(m, 0), input_error);  // degree 1

  CombinatorialMap contracted = contract_path(m, {0}, "ab");
  CHECK(contracted.vertices.size() == 2);
  CHECK(contracted.dart_count() == 2);
  CHECK(find_vertex(contracted, "ab") >= 0);
  CHECK_THROWS_AS(contract_path(m, {0, 1}, "bad"), input_error);  // revisits a

  // Free-standing loop has no vertexless form.
  CombinatorialMap loop;
  loop.vertices = {{"v", VertexKind::real, {0, 1}}};
  loop.alpha = {1, 0};
  CHECK_THROWS_AS(suppress_degree2(loop, 0), input_error);
}

TEST_CASE("face count oracle agrees across the corpus") {
  std::vector<CombinatorialMap> corpus = {path3(), torus_bouquet(), plane_bouquet(), triangle()};
  corpus.push_back(planarize(zero_drawing_embedding(fig1_system())));
  corpus.push_back(planarize(zero_drawing_embedding(pi_n(3))));
  corpus.push_back(planarize(zero_drawing_embedding(k2n_restriction(4))));
  corpus.push_back(planarize(witness_1drawing(4, Sign::positive, UniformDirection::forward,
                                              Monotone::increasing, Monotone::increasing)));
  corpus.push_back(planarize(witness_2drawing(4, uniform_profile())));
  corpus.push_back(gadget_claim52(5));
  corpus.push_back(gadget_claim73(7));
  corpus.push_back(star_restriction(5, Spine::blue, SpineOrder::inc, SpineSign::pos));
  for (const CombinatorialMap& m : corpus) CHECK(ref::face_count_naive(m) == faces(m));
}
