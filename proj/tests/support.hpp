// SPDX-License-Identifier: Apache-2.0

// Random inputs shared by the unit tests and the acceptance runner.

#ifndef TCHOW_TESTS_SUPPORT_HPP
#define TCHOW_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "build.hpp"

namespace tchow::testing {

inline IntVec ivec(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RatVec rvec(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Face fan of the convex hull of random integer points around the origin
/// (the cross-polytope vertices keep the origin interior), with at most
/// max_rays rays, then a random unimodular shear.
inline Fan random_complete_fan(std::mt19937& rng, std::size_t max_rays = 12) {
  std::uniform_int_distribution<long> coord(-3, 3), extra(0, static_cast<long>(max_rays) - 6);
  for (;;) {
    std::vector<RatVec> pts{rvec({1, 0, 0}), rvec({-1, 0, 0}), rvec({0, 1, 0}),
                            rvec({0, -1, 0}), rvec({0, 0, 1}), rvec({0, 0, -1})};
    for (long i = extra(rng); i > 0; --i) pts.push_back(rvec({coord(rng), coord(rng), coord(rng)}));
    Polyhedron poly = Polyhedron::from_generators(3, pts, {});
    std::vector<Cone> cones;
    std::set<IntVec> rays;
    for (const Polyhedron& f : poly.faces()) {
      if (f.dim() != 2) continue;
      std::vector<IntVec> gens;
      for (const RatVec& v : f.vertices()) {
        IntVec g;
        for (const Rat& c : v) g.push_back(c.get_num());
        gens.push_back(primitive_direction(g));
        rays.insert(gens.back());
      }
      cones.emplace_back(3, gens);
    }
    if (rays.size() > max_rays) continue;
    std::uniform_int_distribution<long> s(-2, 2);
    IntMatrix shear = IntMatrix::identity(3);
    shear(0, 2) = s(rng);
    shear(1, 2) = s(rng);
    shear(2, 0) = s(rng);
    if (shear(2, 0) != 0) shear(0, 2) = 0, shear(1, 2) = 0;
    std::vector<Cone> sheared;
    for (const Cone& c : cones) {
      std::vector<IntVec> gens;
      for (const IntVec& g : c.generators()) {
        IntVec h(3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) h[i] += shear(i, j) * g[j];
        gens.push_back(h);
      }
      sheared.emplace_back(3, gens);
    }
    return Fan(3, sheared);
  }
}

/// A rank-two bundle over P^2 (even seeds) or P^1 x P^1 (odd seeds) with
/// random filtrations over up to four line labels.
inline KlyachkoBundle random_bundle(std::mt19937& rng, bool over_p2) {
  std::vector<IntVec> rays;
  std::vector<std::vector<std::size_t>> cones;
  if (over_p2) {
    rays = {ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})};
    cones = {{0, 1}, {1, 2}, {2, 0}};
  } else {
    rays = {ivec({1, 0}), ivec({0, 1}), ivec({-1, 0}), ivec({0, -1})};
    cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  }
  const std::vector<std::string> labels{"a", "b", "c", "d"};
  std::uniform_int_distribution<long> jump(-2, 2), len(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size());
  KlyachkoBundle b;
  b.base = fan_from_rays(2, rays, cones);
  for (const IntVec& r : rays) {
    RayFiltration f{r, {{jump(rng), "E"}}};
    std::size_t l = pick(rng);
    if (l < labels.size()) f.steps.push_back({f.steps[0].j + len(rng), labels[l]});
    b.filtrations.push_back(f);
  }
  return b;
}

}  // namespace tchow::testing

#endif
