// SPDX-License-Identifier: Apache-2.0

// Constructors for marked fansy divisors: toric downgrades, projectivized
// rank-two toric vector bundles, and the bundled fixtures.

#ifndef TCHOW_BUILD_HPP
#define TCHOW_BUILD_HPP

#include <optional>
#include <string>
#include <vector>

#include "fansy.hpp"

namespace tchow {

/// Downgrade along the last coordinate after the optional unimodular basis
/// change (applied to generators as column vectors). Points are "0" and "∞".
MarkedFansyDivisor downgrade(const Fan& fan, const std::optional<IntMatrix>& basis_change = std::nullopt);

/// One jump of a ray filtration: the space is `label` for j up to `j`
/// (and above the previous step). "E" is the whole fiber; any other label
/// names a line. Zero follows the last step.
struct FiltrationStep {
  long j = 0;
  std::string label;
};

struct RayFiltration {
  IntVec ray;
  std::vector<FiltrationStep> steps;
};

struct KlyachkoBundle {
  Fan base;
  std::vector<RayFiltration> filtrations;
};

enum class HIJClass { H, I, J };
std::string hij_name(HIJClass c);

/// Line labels in order of first appearance.
std::vector<std::string> bundle_points(const KlyachkoBundle& b);
/// Any cone of the base fan.
HIJClass classify_HIJ(const KlyachkoBundle& b, const Cone& sigma);
MarkedFansyDivisor bundle_rank2(const KlyachkoBundle& b);
/// Counts of (R_k, V_k, T_k) read off from the H/I/J classes; 0 <= k <= n.
Counts predicted_counts(const KlyachkoBundle& b, int k);

std::vector<std::string> fixture_names();
MarkedFansyDivisor fixture(const std::string& name);
/// The toric fans behind p2_E and p2_F.
Fan fixture_fan(const std::string& name);
/// The bundle behind p1p1_bundle.
KlyachkoBundle fixture_bundle(const std::string& name);

/// Fan from rays and cones given as ray index lists.
Fan fan_from_rays(std::size_t rank, const std::vector<IntVec>& rays,
                  const std::vector<std::vector<std::size_t>>& cones);

}  // namespace tchow

#endif
