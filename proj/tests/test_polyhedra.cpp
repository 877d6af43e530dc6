// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "errors.hpp"
#include "polyhedra.hpp"

using namespace tchow;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RatVec rv(std::initializer_list<const char*> xs) {
  RatVec v;
  for (const char* x : xs) {
    Rat q(x);
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

Polyhedron random_polytope(std::mt19937& rng, std::size_t d, bool with_rays) {
  std::uniform_int_distribution<int> c(-3, 3), n(1, 4);
  std::vector<RatVec> pts;
  for (int i = 0, e = n(rng); i < e; ++i) {
    RatVec p(d);
    for (Rat& x : p) x = Rat(c(rng), 1 + rng() % 2), x.canonicalize();
    pts.push_back(p);
  }
  std::vector<IntVec> rays;
  if (with_rays)
    for (int i = 0, e = rng() % 3; i < e; ++i) {
      IntVec r(d);
      for (std::size_t k = 0; k < d; ++k) r[k] = static_cast<int>(rng() % 3);
      rays.push_back(r);
    }
  return Polyhedron::from_generators(d, pts, rays);
}

// Brute-force check of a claimed inequality list against generators.
bool valid_and_tight(const Cone& c, const IntVec& a) {
  std::size_t tight = 0;
  for (const IntVec& g : c.generators()) {
    Int v = dot(a, g);
    if (v < 0) return false;
    if (v == 0) ++tight;
  }
  return tight > 0 || c.dim() == 1;
}

}  // namespace

TEST_CASE("dual_and_faces of the positive quadrant") {
  DualAndFaces df = dual_and_faces(Cone(2, {iv({1, 0}), iv({0, 1})}));
  std::set<IntVec> normals(df.facet_normals.begin(), df.facet_normals.end());
  CHECK(normals == std::set<IntVec>{iv({1, 0}), iv({0, 1})});
  CHECK(df.faces_by_dim[0].size() == 1);
  CHECK(df.faces_by_dim[1].size() == 2);
  CHECK(df.faces_by_dim[2].size() == 1);
}

TEST_CASE("dual_and_faces of a skew cone") {
  Cone c(2, {iv({1, 2}), iv({1, -2})});
  std::set<IntVec> normals(c.facet_normals().begin(), c.facet_normals().end());
  CHECK(normals == std::set<IntVec>{iv({2, -1}), iv({2, 1})});
  for (const IntVec& a : c.facet_normals()) CHECK(valid_and_tight(c, a));
}

TEST_CASE("dual_and_faces of the zero cone") {
  DualAndFaces df = dual_and_faces(Cone(3));
  CHECK(df.facet_normals.empty());
  CHECK(df.faces_by_dim.size() == 1);
  CHECK(df.faces_by_dim[0].size() == 1);
}

TEST_CASE("cone canonical form drops redundant generators") {
  Cone c(2, {iv({2, 0}), iv({1, 1}), iv({0, 3}), iv({1, 0})});
  CHECK(c.generators() == std::vector<IntVec>{iv({0, 1}), iv({1, 0})});
  CHECK(c.dim() == 2);
  CHECK(c.is_pointed());
  Cone half(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})});
  CHECK_FALSE(half.is_pointed());
  CHECK(half.facet_normals() == std::vector<IntVec>{iv({0, 1})});
}

TEST_CASE("double description round trip") {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    std::vector<IntVec> gens;
    for (int i = 0, e = 2 + rng() % 5; i < e; ++i) {
      IntVec g(3);
      for (Int& x : g) x = static_cast<int>(rng() % 7) - 2;
      gens.push_back(g);
    }
    Cone c(3, gens);
    std::vector<RatVec> ineqs, eqs;
    for (const IntVec& a : c.facet_normals()) ineqs.push_back(to_rat(a));
    for (const IntVec& e : c.equations()) eqs.push_back(to_rat(e));
    Cone back = Cone::from_inequalities(3, ineqs, eqs);
    if (c.is_pointed()) CHECK(back == c);
    CHECK(back.contains(c));
    CHECK(c.contains(back));
    for (const IntVec& a : c.facet_normals())
      for (const IntVec& g : c.generators()) CHECK(dot(a, g) >= 0);
  }
}

TEST_CASE("tailcone") {
  Polyhedron p = Polyhedron::from_inequalities(
      2, {{rv({"1", "0"}), Rat(1, 2)}, {rv({"-1", "1"}), Rat(0)}});
  CHECK(tailcone(p) == Cone(2, {iv({0, 1}), iv({1, 1})}));
  CHECK(p.vertices() == std::vector<RatVec>{rv({"1/2", "1/2"})});
  Polyhedron seg = Polyhedron::from_generators(2, {rv({"0", "0"}), rv({"1", "3"})}, {});
  CHECK(tailcone(seg).is_zero());
  Cone c(2, {iv({1, 2}), iv({1, -2})});
  CHECK(tailcone(Polyhedron::from_cone(c)) == c);
  CHECK_THROWS_AS(tailcone(Polyhedron::empty(2)), Error);
}

TEST_CASE("minkowski_sum examples") {
  Polyhedron seg = Polyhedron::from_generators(2, {rv({"0", "0"}), rv({"1", "0"})}, {});
  Polyhedron ray = Polyhedron::from_generators(2, {rv({"0", "0"})}, {iv({0, 1})});
  Polyhedron strip = minkowski_sum(seg, ray);
  CHECK(strip.vertices() == std::vector<RatVec>{rv({"0", "0"}), rv({"1", "0"})});
  CHECK(strip.tail() == Cone(2, {iv({0, 1})}));
  Polyhedron origin = Polyhedron::from_generators(2, {rv({"0", "0"})}, {});
  CHECK(minkowski_sum(strip, origin) == strip);
  CHECK(minkowski_sum(strip, Polyhedron::empty(2)).is_empty());

  // three independent-ish edges in rank 3
  Polyhedron a = Polyhedron::from_generators(3, {rv({"0", "0", "0"}), rv({"-1", "-1", "0"})}, {});
  Polyhedron b = Polyhedron::from_generators(3, {rv({"0", "0", "0"}), rv({"-1", "0", "-1"})}, {});
  Polyhedron c = Polyhedron::from_generators(3, {rv({"1", "1", "1"}), rv({"1", "0", "0"})}, {});
  Polyhedron s = minkowski_sum(minkowski_sum(a, b), c);
  CHECK(s.is_bounded());
  // every vertex is one of the 8 vertex sums, and each sum lies in s
  std::set<RatVec> sums;
  for (const RatVec& x : a.vertices())
    for (const RatVec& y : b.vertices())
      for (const RatVec& z : c.vertices()) {
        RatVec v(3);
        for (int i = 0; i < 3; ++i) v[i] = x[i] + y[i] + z[i];
        sums.insert(v);
        CHECK(s.contains(v));
      }
  for (const RatVec& v : s.vertices()) CHECK(sums.count(v) == 1);
  CHECK(s.vertices().size() <= sums.size());
}

TEST_CASE("minkowski_sum is commutative and associative; tails join") {
  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    Polyhedron a = random_polytope(rng, 2, true);
    Polyhedron b = random_polytope(rng, 2, true);
    Polyhedron c = random_polytope(rng, 2, false);
    CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
    CHECK(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)));
    CHECK(tailcone(minkowski_sum(a, b)) == a.tail().join(b.tail()));
  }
}

TEST_CASE("vertices are exactly the extreme points") {
  Polyhedron p = Polyhedron::from_generators(
      2, {rv({"0", "0"}), rv({"2", "0"}), rv({"1", "0"}), rv({"0", "2"}), rv({"1/2", "1/2"})}, {});
  CHECK(p.vertices() == std::vector<RatVec>{rv({"0", "0"}), rv({"0", "2"}), rv({"2", "0"})});
  CHECK(p.faces().size() == 7);
}

TEST_CASE("complex_faces of the P1 fan") {
  Fan f(1, {Cone(1, {iv({1})}), Cone(1, {iv({-1})})});
  CHECK(f.is_complete());
  PolyhedralComplex s = PolyhedralComplex::from_fan(f);
  CHECK(s.is_valid());
  std::vector<ComplexFace> v = complex_faces(s, 0);
  REQUIRE(v.size() == 1);
  CHECK(v[0].face.vertices() == std::vector<RatVec>{rv({"0"})});
  CHECK(v[0].cells.size() == 2);
}

TEST_CASE("complex faces are closed under taking faces") {
  Fan f(2, {Cone(2, {iv({1, 0}), iv({0, 1})}), Cone(2, {iv({0, 1}), iv({-1, -1})}),
            Cone(2, {iv({-1, -1}), iv({1, 0})})});
  PolyhedralComplex s = PolyhedralComplex::from_fan(f).translate(rv({"1/2", "-1/3"}));
  CHECK(s.is_valid());
  std::set<Polyhedron> all;
  for (const ComplexFace& cf : s.faces()) all.insert(cf.face);
  for (const ComplexFace& cf : s.faces())
    for (const Polyhedron& g : cf.face.faces()) CHECK(all.count(g) == 1);
}

TEST_CASE("tailfan") {
  Fan f(2, {Cone(2, {iv({1, 0}), iv({0, 1})}), Cone(2, {iv({0, 1}), iv({-1, 0})}),
            Cone(2, {iv({-1, 0}), iv({0, -1})}), Cone(2, {iv({0, -1}), iv({1, 0})})});
  PolyhedralComplex s = PolyhedralComplex::from_fan(f);
  CHECK(tailfan(s) == f);
  CHECK(tailfan(s.translate(rv({"3/2", "-7"}))) == f);
  CHECK(f.cones(1).size() == f.maximal_cones().size());
}

TEST_CASE("complex with a bounded cell") {
  // unit square subdivided with its four corner quadrants and four strips
  std::vector<Polyhedron> cells;
  auto P = [](std::vector<RatVec> v, std::vector<IntVec> r) { return Polyhedron::from_generators(2, v, r); };
  cells.push_back(P({rv({"0", "0"}), rv({"1", "0"}), rv({"0", "1"}), rv({"1", "1"})}, {}));
  cells.push_back(P({rv({"1", "1"})}, {iv({1, 0}), iv({0, 1})}));
  cells.push_back(P({rv({"0", "1"})}, {iv({-1, 0}), iv({0, 1})}));
  cells.push_back(P({rv({"0", "0"})}, {iv({-1, 0}), iv({0, -1})}));
  cells.push_back(P({rv({"1", "0"})}, {iv({1, 0}), iv({0, -1})}));
  cells.push_back(P({rv({"0", "1"}), rv({"1", "1"})}, {iv({0, 1})}));
  cells.push_back(P({rv({"0", "0"}), rv({"1", "0"})}, {iv({0, -1})}));
  cells.push_back(P({rv({"0", "0"}), rv({"0", "1"})}, {iv({-1, 0})}));
  cells.push_back(P({rv({"1", "0"}), rv({"1", "1"})}, {iv({1, 0})}));
  PolyhedralComplex s(2, cells);
  CHECK(s.violations().empty());
  CHECK(complex_faces(s, 0).size() == 4);
  CHECK(complex_faces(s, 1).size() == 12);
  CHECK(tailfan(s).maximal_cones().size() == 4);

  // drop one strip: completeness is violated
  std::vector<Polyhedron> holes(cells.begin(), cells.end() - 1);
  CHECK_FALSE(PolyhedralComplex(2, holes).is_valid());

  // overlapping cell: common-face axiom is violated
  std::vector<Polyhedron> bad = cells;
  bad.push_back(P({rv({"1/2", "1/2"})}, {iv({1, 0}), iv({0, 1})}));
  CHECK_THROWS_AS(complex_faces(PolyhedralComplex(2, bad), 0), Error);
}

TEST_CASE("polyhedron intersection") {
  Polyhedron a = Polyhedron::from_generators(2, {rv({"0", "0"})}, {iv({1, 0}), iv({0, 1})});
  Polyhedron b = Polyhedron::from_generators(2, {rv({"1", "1"})}, {iv({-1, 0}), iv({0, -1})});
  Polyhedron i = a.intersect(b);
  CHECK(i.vertices().size() == 4);
  CHECK(i.is_bounded());
  Polyhedron c = Polyhedron::from_generators(2, {rv({"-1", "-1"})}, {iv({-1, 0}), iv({0, -1})});
  CHECK(a.intersect(c).is_empty());
  CHECK(Polyhedron::from_generators(2, {rv({"0", "0"})}, {}).is_face_of(a));
}
