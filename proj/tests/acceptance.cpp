// SPDX-License-Identifier: Apache-2.0

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "build.hpp"
#include "chow.hpp"
#include "support.hpp"

using namespace tchow;
using tchow::testing::ivec;

namespace {

struct Check {
  std::ostringstream why;
  bool ok = true;

  template <class T>
  void expect(bool cond, const T& what) {
    if (cond) return;
    if (ok) why << what;
    ok = false;
  }
};

std::string show(const Counts& c) {
  return "(" + std::to_string(c.r) + "," + std::to_string(c.v) + "," + std::to_string(c.t) + ")";
}

bool same_smith(const ChowPresentation& a, const ChowPresentation& b) {
  return a.smith.free_rank == b.smith.free_rank && a.smith.invariants == b.smith.invariants;
}

bool free_of_rank_one(const ChowPresentation& p) { return p.smith.free_rank == 1 && p.smith.invariants.empty(); }

void expect_counts(Check& c, const MarkedFansyDivisor& x, const std::string& name, int k, Counts want) {
  Counts got = counts_of(enumerate_generators(x, k));
  c.expect(got == want, name + " k=" + std::to_string(k) + ": " + show(got) + " != " + show(want));
}

void gr24_counts(Check& c) {
  MarkedFansyDivisor x = fixture("gr24");
  expect_counts(c, x, "gr24", 3, {0, 6, 0});
  expect_counts(c, x, "gr24", 2, {0, 3, 8});
  expect_counts(c, x, "gr24", 1, {0, 0, 12});
  expect_counts(c, x, "gr24", 0, {0, 0, 6});
}

void gr24_groups(Check& c) {
  MarkedFansyDivisor x = fixture("gr24");
  const std::size_t ranks[] = {1, 1, 2, 1, 1};
  for (int k = 0; k <= 4; ++k) {
    ChowPresentation p = presentation(x, k);
    c.expect(p.smith.free_rank == ranks[k] && p.smith.invariants.empty(), "A_" + std::to_string(k) + " has wrong shape");
  }
  // A_2: the four E+ rays share one class, the four E- rays another, the
  // compact edges a third equal to their sum.
  ChowPresentation p = presentation(x, 2);
  std::map<int, std::vector<IntVec>> seen;  // 1 = E+, -1 = E-, 0 = W
  for (std::size_t j = 0; j < p.generators.size(); ++j) {
    const CycleGenerator& g = p.generators[j];
    int side = 0;
    if (g.kind != GeneratorKind::V) {
      const IntVec& r = g.cone.generators()[0];
      side = (r == ivec({1, 0, 0}) || r == ivec({0, 1, 0}) || r == ivec({0, 0, 1}) || r == ivec({-1, -1, -1})) ? 1 : -1;
    }
    seen[side].push_back(p.class_map[j]);
  }
  c.expect(seen[1].size() == 4 && seen[-1].size() == 4 && seen[0].size() == 3, "A_2 generators are not 4 + 4 + 3");
  for (auto& [side, classes] : seen)
    c.expect(std::all_of(classes.begin(), classes.end(), [&](const IntVec& v) { return v == classes.front(); }),
             "A_2 side " + std::to_string(side) + " has several classes");
  if (!c.ok) return;
  IntVec sum(seen[1].front().size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = seen[1].front()[i] + seen[-1].front()[i];
  c.expect(sum == seen[0].front(), "W != E+ + E-");
  c.expect(seen[1].front() != seen[-1].front(), "E+ == E-");
}

void table_counts(Check& c) {
  const std::map<std::string, std::vector<Counts>> table{
      {"p2_E", {{0, 4, 2}, {1, 7, 1}, {2, 3, 0}}},
      {"p2_F", {{0, 1, 5}, {0, 4, 5}, {0, 5, 0}}},
  };
  const std::size_t sums[] = {6, 9, 5};
  for (const auto& [name, rows] : table) {
    MarkedFansyDivisor x = fixture(name);
    for (int k = 0; k <= 2; ++k) {
      expect_counts(c, x, name, k, rows[k]);
      const Counts& w = rows[k];
      c.expect(w.r + w.v + w.t == sums[k], name + " row sum at k=" + std::to_string(k));
    }
  }
}

void oracle_equivalence(Check& c) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(20);
  std::vector<Fan> fans{fixture_fan("p2_E"), fixture_fan("p2_F")};
  for (int i = 0; i < 20; ++i) fans.push_back(testing::random_complete_fan(rng));
  std::size_t torsion = 0;
  for (std::size_t i = 0; i < fans.size(); ++i) {
    MarkedFansyDivisor x = downgrade(fans[i]);
    for (int k = 0; k <= 3; ++k) {
      ChowPresentation ours = presentation(x, k), oracle = fulton_sturmfels(fans[i], k);
      torsion += !oracle.smith.invariants.empty();
      c.expect(same_smith(ours, oracle), "fan " + std::to_string(i) + " disagrees at k=" + std::to_string(k));
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 60.0, "took " + std::to_string(secs) + " s");
  if (c.ok) c.why << fans.size() << " fans, " << torsion << " groups with torsion, " << static_cast<int>(secs) << " s";
}

std::map<HIJClass, std::size_t> tally(const KlyachkoBundle& b, int dim) {
  std::map<HIJClass, std::size_t> t;
  if (dim >= 0 && dim <= 2)
    for (const Cone& s : b.base.cones(static_cast<std::size_t>(dim))) ++t[classify_HIJ(b, s)];
  return t;
}

void bundle_counts(Check& c) {
  std::mt19937 rng(5);
  std::vector<std::pair<std::string, KlyachkoBundle>> bundles{{"p1p1_bundle", fixture_bundle("p1p1_bundle")}};
  for (int i = 0; i < 12; ++i) bundles.push_back({"random " + std::to_string(i), testing::random_bundle(rng, i % 2 == 0)});
  std::size_t literal = 0;
  for (const auto& [name, b] : bundles) {
    MarkedFansyDivisor x = bundle_rank2(b);
    c.expect(validate(x).ok(), name + " does not validate");
    const std::size_t points = x.points().size();
    for (int k = 0; k <= 2; ++k) {
      Counts got = counts_of(enumerate_generators(x, k));
      c.expect(predicted_counts(b, k) == got, name + " k=" + std::to_string(k) + ": predicted " +
                                                  show(predicted_counts(b, k)) + ", found " + show(got));
      auto hi = tally(b, 3 - k), lo = tally(b, 2 - k);
      Counts general{hi[HIJClass::H], hi[HIJClass::J] + lo[HIJClass::J] + points * lo[HIJClass::H],
                     hi[HIJClass::I] + lo[HIJClass::J] + 2 * lo[HIJClass::I]};
      c.expect(general == got, name + " k=" + std::to_string(k) + ": H/I/J tally " + show(general));
      if (points == 2) {
        Counts two{hi[HIJClass::H], hi[HIJClass::J] + lo[HIJClass::J] + 2 * lo[HIJClass::H],
                   hi[HIJClass::I] + lo[HIJClass::J] + 2 * lo[HIJClass::I]};
        c.expect(two == got, name + " k=" + std::to_string(k) + ": two-point identity " + show(two));
        literal += k == 0;
      }
    }
    // k = n: the V-generators are the J rays plus one vertex per point.
    c.expect(enumerate_generators(x, 2).v.size() == tally(b, 1)[HIJClass::J] + points, name + " k=n variant");
  }
  c.expect(literal > 0, "no bundle with two points");
  if (c.ok) c.why << bundles.size() << " bundles, " << literal << " with two points";
}

void p1p1_marking(Check& c) {
  MarkedFansyDivisor x = fixture("p1p1_bundle");
  for (const Cone& s : x.tailfan().maximal_cones()) c.expect(x.is_marked(s), "a maximal cone is unmarked");
  for (const Cone& r : x.tailfan().cones(1))
    c.expect(x.is_marked(r) == (r.generators()[0] != ivec({0, -1})), "ray marking is wrong");
  c.expect(!x.is_marked(Cone(2)), "the zero cone is marked");
}

void nested_faces(Check& c) {
  for (const std::string& name : fixture_names()) {
    std::vector<NestedFacePair> pairs = nested_face_pairs(fixture(name));
    c.expect(!pairs.empty(), name + " has no nested pairs");
    for (const NestedFacePair& p : pairs) c.expect(p.holds, name + " violates the identity");
  }
}

void structure(Check& c) {
  for (const std::string& name : fixture_names()) {
    MarkedFansyDivisor x = fixture(name);
    const int n = static_cast<int>(x.rank());
    c.expect(enumerate_generators(x, n).t.empty(), name + ": T_n is not empty");
    c.expect(free_of_rank_one(presentation(x, 0)), name + ": A_0 is not Z");
    c.expect(free_of_rank_one(presentation(x, n + 1)), name + ": A_{n+1} is not Z");
    MarkedFansyDivisor aux = x.with_generic_point("q");
    for (int k = 0; k <= n + 1; ++k) {
      ChowPresentation p = presentation(x, k);
      for (const std::string& label : x.points())
        c.expect(same_smith(p, presentation(x.with_basepoint(label), k)), name + ": basepoint " + label + " changes A_" + std::to_string(k));
      c.expect(same_smith(p, presentation(aux, k)), name + ": extra point changes A_" + std::to_string(k));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"gr24 generator counts", gr24_counts},
      {"gr24 Chow groups and A_2 structure", gr24_groups},
      {"p2_E and p2_F generator counts", table_counts},
      {"downgrade agrees with the toric oracle", oracle_equivalence},
      {"bundle counts from H/I/J classes", bundle_counts},
      {"P1 x P1 bundle marking", p1p1_marking},
      {"nested face identity", nested_faces},
      {"structural invariants", structure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << "exception: " << e.what();
    }
    failed += !c.ok;
    std::string why = c.why.str();
    std::printf("%s %zu %s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), why.empty() ? "" : ": ",
                why.c_str());
  }
  return failed == 0 ? 0 : 1;
}
