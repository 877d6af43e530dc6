// SPDX-License-Identifier: Apache-2.0

// Generators of the pseudoeffective cones and their classes in A_k (x) Q.

#ifndef TCHOW_EFFCONE_HPP
#define TCHOW_EFFCONE_HPP

#include <vector>

#include "chow.hpp"

namespace tchow {

/// Generators sharing one class; `members` index into EffConeReport::generators.
struct EffClass {
  IntVec cls;
  std::vector<std::size_t> members;
};

struct EffConeReport {
  int k = 0;
  /// B_tau (R), Z_{y,F} (V) and W_sigma (T), in presentation order.
  std::vector<CycleGenerator> generators;
  /// Free coordinates of each generator; torsion vanishes after tensoring with Q.
  std::vector<IntVec> classes;
  /// Distinct classes in order of first appearance.
  std::vector<EffClass> distinct;
  /// Distinct rays spanned by nonzero classes, same grouping.
  std::vector<EffClass> rays;
};

EffConeReport eff_generators(const MarkedFansyDivisor& x, int k);
EffConeReport eff_generators(const ChowPresentation& pres);

}  // namespace tchow

#endif
