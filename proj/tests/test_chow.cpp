// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "build.hpp"
#include "chow.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "support.hpp"

using namespace tchow;
using tchow::testing::ivec;
using tchow::testing::rvec;

namespace {

bool same_smith(const ChowPresentation& a, const ChowPresentation& b) {
  return a.smith.free_rank == b.smith.free_rank && a.smith.invariants == b.smith.invariants;
}

std::size_t column(const ChowPresentation& p, const CycleGenerator& g) {
  auto it = std::find(p.generators.begin(), p.generators.end(), g);
  REQUIRE(it != p.generators.end());
  return static_cast<std::size_t>(it - p.generators.begin());
}

CycleGenerator t_ray(std::initializer_list<long> r) {
  return {GeneratorKind::T, Cone(3, {ivec(r)}), 0, Polyhedron()};
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
}

}  // namespace

TEST_CASE("gr24 divisors of characters on the vertex over 0") {
  MarkedFansyDivisor x = fixture("gr24");
  const std::size_t p0 = x.point_index("0");
  Polyhedron vertex = Polyhedron::from_generators(3, {rvec({0, 0, 0})}, {});
  CycleGenerator f{GeneratorKind::V, Cone(3), p0, vertex};
  RelationBlock b = relation_block_V(x, 2, f);
  REQUIRE(b.rows.size() == 3);  // basis e1, e2, e3 of M

  ChowPresentation pres = presentation(x, 2);
  Polyhedron edge;
  for (const ComplexFace& f : x.complex(p0).faces_of_dim(1))
    if (f.face.is_bounded()) edge = f.face;
  const std::size_t w = column(pres, {GeneratorKind::V, Cone(3), p0, edge});
  const std::size_t e1_plus = column(pres, t_ray({1, 0, 0}));
  const std::size_t e0_minus = column(pres, t_ray({1, 1, 1}));
  const std::size_t e3_minus = column(pres, t_ray({0, 0, -1}));

  IntVec expected(pres.generators.size());
  expected[e1_plus] = 1;
  expected[e0_minus] = 1;
  expected[w] = -1;
  CHECK(b.rows[0] == expected);

  // m = e3: E_3^- - E_0^- up to the overall sign.
  IntVec third(pres.generators.size());
  third[e3_minus] = 1;
  third[e0_minus] = -1;
  IntVec neg = third;
  for (Int& c : neg) c = -c;
  CHECK((b.rows[2] == third || b.rows[2] == neg));
}

TEST_CASE("gr24 Chow groups") {
  MarkedFansyDivisor x = fixture("gr24");
  const std::vector<std::size_t> ranks{1, 1, 2, 1, 1};
  for (int k = 0; k <= 4; ++k) {
    ChowPresentation p = presentation(x, k);
    CHECK(p.smith.free_rank == ranks[static_cast<std::size_t>(k)]);
    CHECK(p.smith.invariants.empty());
  }
}

TEST_CASE("gr24 A_2 is generated by E+, E- and W with W = E+ + E-") {
  MarkedFansyDivisor x = fixture("gr24");
  ChowPresentation p = presentation(x, 2);
  IntVec plus, minus, w;
  for (std::size_t j = 0; j < p.generators.size(); ++j) {
    const CycleGenerator& g = p.generators[j];
    if (g.kind == GeneratorKind::V) {
      if (w.empty()) w = p.class_map[j];
      CHECK(p.class_map[j] == w);
      continue;
    }
    // Rays e1, e2, e3, e0 = -(1,1,1) are the E+ side.
    const IntVec& r = g.cone.generators()[0];
    bool positive = r == ivec({1, 0, 0}) || r == ivec({0, 1, 0}) || r == ivec({0, 0, 1}) || r == ivec({-1, -1, -1});
    IntVec& slot = positive ? plus : minus;
    if (slot.empty()) slot = p.class_map[j];
    CHECK(p.class_map[j] == slot);
  }
  IntVec sum(plus.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = plus[i] + minus[i];
  CHECK(sum == w);
  CHECK(plus != minus);
}

TEST_CASE("gr24 contracted surfaces give one class in A_1 and A_0") {
  MarkedFansyDivisor x = fixture("gr24");
  for (int k : {0, 1}) {
    ChowPresentation p = presentation(x, k);
    for (const IntVec& c : p.class_map) CHECK(c == p.class_map.front());
  }
}

TEST_CASE("relations at k = n: point rows and character rows") {
  MarkedFansyDivisor x = fixture("p1p1_bundle");
  const int n = static_cast<int>(x.rank());
  GeneratorSets up = enumerate_generators(x, n + 1);
  REQUIRE(up.r.size() == 1);
  CHECK(up.v.empty());
  CHECK(up.t.empty());
  RelationBlock b = relation_block_R(x, n, up.r[0]);
  CHECK(b.point_rows == x.points().size() - 1);
  CHECK(b.rows.size() == b.point_rows + n);

  ChowPresentation p = presentation(x, n);
  const std::size_t inf = x.basepoint();
  for (std::size_t i = 0; i < b.point_rows; ++i)
    for (std::size_t j = 0; j < p.generators.size(); ++j) {
      const CycleGenerator& g = p.generators[j];
      if (g.kind != GeneratorKind::V) {
        CHECK(b.rows[i][j] == 0);
      } else if (g.point == inf) {
        CHECK(b.rows[i][j] == -mu_of_face(g.face));
      } else if (b.rows[i][j] != 0) {
        CHECK(b.rows[i][j] == mu_of_face(g.face));
      }
    }
  // Characters: <m, rho> on the uncontracted rays; M has the standard basis.
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    for (std::size_t j = 0; j < p.generators.size(); ++j)
      if (p.generators[j].kind == GeneratorKind::R)
        CHECK(b.rows[b.point_rows + i][j] == p.generators[j].cone.generators()[0][i]);
}

TEST_CASE("top degree is a single free generator") {
  for (const std::string& name : fixture_names()) {
    MarkedFansyDivisor x = fixture(name);
    const int n = static_cast<int>(x.rank());
    ChowPresentation top = presentation(x, n + 1);
    CHECK(top.generators.size() == 1);
    CHECK(top.relations.rows() == 0);
    CHECK(top.smith.free_rank == 1);
    ChowPresentation zero = presentation(x, 0);
    CHECK(zero.smith.free_rank == 1);
    CHECK(zero.smith.invariants.empty());
  }
}

TEST_CASE("every relation row is zero in the quotient") {
  std::mt19937 rng(17);
  std::vector<MarkedFansyDivisor> xs;
  for (const std::string& name : fixture_names()) xs.push_back(fixture(name));
  for (int i = 0; i < 3; ++i) xs.push_back(downgrade(testing::random_complete_fan(rng)));
  for (const MarkedFansyDivisor& x : xs)
    for (int k = 0; k <= static_cast<int>(x.rank()); ++k) {
      ChowPresentation p = presentation(x, k);
      CHECK(p.relations.cols() == p.generators.size());
      for (const RelationBlock& b : p.blocks)
        for (const IntVec& r : b.rows) CHECK(is_zero(p.class_of(r)));
    }
}

TEST_CASE("toric oracle on P^2") {
  Fan p2 = fan_from_rays(2, {ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})}, {{0, 1}, {1, 2}, {2, 0}});
  for (int k : {0, 1, 2}) {
    ChowPresentation p = fulton_sturmfels(p2, k);
    CHECK(p.smith.free_rank == 1);
    CHECK(p.smith.invariants.empty());
  }
  Fan half = fan_from_rays(2, {ivec({1, 0}), ivec({0, 1})}, {{0, 1}});
  CHECK_THROWS_AS(fulton_sturmfels(half, 1), Error);
}

TEST_CASE("toric oracle sees torsion of a weighted projective plane") {
  // P(1,1,2): rays (1,0), (0,1), (-1,-2) gives A_1 = Z. Rays (1,0), (-1,3),
  // (-1,-3) give A_1 = Z + Z/3.
  Fan w = fan_from_rays(2, {ivec({1, 0}), ivec({0, 1}), ivec({-1, -2})}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(fulton_sturmfels(w, 1).smith.invariants.empty());
  Fan fake = fan_from_rays(2, {ivec({1, 0}), ivec({-1, 3}), ivec({-1, -3})}, {{0, 1}, {1, 2}, {2, 0}});
  ChowPresentation p = fulton_sturmfels(fake, 1);
  CHECK(p.smith.free_rank == 1);
  CHECK(p.smith.invariants == std::vector<Int>{3});
}

TEST_CASE("downgrades agree with the toric oracle") {
  std::mt19937 rng(29);
  std::vector<Fan> fans{fixture_fan("p2_E"), fixture_fan("p2_F"),
                        fan_from_rays(2, {ivec({1, 0}), ivec({0, 1}), ivec({-1, 0}), ivec({0, -1})},
                                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
                        fan_from_rays(2, {ivec({1, 0}), ivec({-1, 3}), ivec({-1, -3})}, {{0, 1}, {1, 2}, {2, 0}})};
  for (int i = 0; i < 4; ++i) fans.push_back(testing::random_complete_fan(rng));
  for (const Fan& f : fans) {
    MarkedFansyDivisor x = downgrade(f);
    for (int k = 0; k <= static_cast<int>(f.ambient_rank()); ++k) CHECK(same_smith(presentation(x, k), fulton_sturmfels(f, k)));
  }
}

TEST_CASE("basepoint and generic points do not change the groups") {
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    MarkedFansyDivisor x = fixture(name);
    for (int k = 0; k <= static_cast<int>(x.rank()) + 1; ++k) {
      ChowPresentation p = presentation(x, k);
      for (const std::string& label : x.points()) CHECK(same_smith(p, presentation(x.with_basepoint(label), k)));
      CHECK(same_smith(p, presentation(x.with_generic_point("q"), k)));
    }
  }
}

TEST_CASE("nested faces satisfy mu(G) v_GH = mu(H) v_tau_sigma") {
  std::mt19937 rng(31);
  std::vector<MarkedFansyDivisor> xs;
  for (const std::string& name : fixture_names()) xs.push_back(fixture(name));
  for (int i = 0; i < 3; ++i) xs.push_back(downgrade(testing::random_complete_fan(rng)));
  for (const MarkedFansyDivisor& x : xs) {
    std::vector<NestedFacePair> pairs = nested_face_pairs(x);
    CHECK_FALSE(pairs.empty());
    for (const NestedFacePair& pr : pairs) CHECK(pr.holds);
  }
}

TEST_CASE("redirect multiplier on the half-shift example") {
  // Quadrant fan with fibers shifted by (0, 1/2) and (1, -1/2): s = 2 on e1 and
  // the faces over e1 have mu = 2, so the redirect is integral.
  std::vector<Cone> quadrants;
  for (long a : {1, -1})
    for (long b : {1, -1}) quadrants.emplace_back(2, std::vector<IntVec>{ivec({a, 0}), ivec({0, b})});
  auto shifted = [&](RatVec v) {
    std::vector<Polyhedron> cells;
    for (const Cone& q : quadrants) cells.push_back(Polyhedron::from_generators(2, {v}, q.generators()));
    return PolyhedralComplex(2, cells);
  };
  std::vector<Cone> marked{Cone(2, {ivec({1, 0})}), Cone(2, {ivec({1, 0}), ivec({0, 1})}),
                           Cone(2, {ivec({1, 0}), ivec({0, -1})})};
  MarkedFansyDivisor x(Fan(2, quadrants), {"0", "∞"},
                       {shifted({Rat(0), Rat(1, 2)}), shifted({Rat(1), Rat(-1, 2)})}, marked);
  for (int k = 0; k <= 3; ++k) CHECK_NOTHROW(presentation(x, k));
  CHECK(presentation(x, 0).smith.free_rank == 1);
}

TEST_CASE("relation blocks reject foreign sources") {
  MarkedFansyDivisor x = fixture("gr24");
  CycleGenerator bogus{GeneratorKind::T, Cone(3), 0, Polyhedron()};
  CHECK_THROWS_AS(relation_block_T(x, 2, bogus), Error);
  CHECK_THROWS_AS(presentation(x, 5), Error);
}
