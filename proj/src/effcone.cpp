// SPDX-License-Identifier: Apache-2.0

#include "effcone.hpp"

namespace tchow {

namespace {

void group(std::vector<EffClass>& out, const IntVec& key, std::size_t member) {
  for (EffClass& c : out)
    if (c.cls == key) {
      c.members.push_back(member);
      return;
    }
  out.push_back({key, {member}});
}

}  // namespace

EffConeReport eff_generators(const ChowPresentation& pres) {
  EffConeReport out;
  out.k = pres.k;
  out.generators = pres.generators;
  const std::size_t tors = pres.smith.invariants.size();
  for (std::size_t j = 0; j < pres.generators.size(); ++j) {
    const IntVec& full = pres.class_map.at(j);
    IntVec cls(full.begin() + static_cast<std::ptrdiff_t>(tors), full.end());
    group(out.distinct, cls, j);
    bool zero = true;
    for (const Int& c : cls) zero = zero && c == 0;
    if (!zero) group(out.rays, primitive_direction(cls), j);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

EffConeReport eff_generators(const MarkedFansyDivisor& x, int k) { return eff_generators(presentation(x, k)); }

}  // namespace tchow
