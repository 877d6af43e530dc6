// SPDX-License-Identifier: Apache-2.0

// Presentations of the Chow groups A_k(X) of a complete complexity-one
// T-variety, and the toric presentation used as an oracle on downgrades.

#ifndef TCHOW_CHOW_HPP
#define TCHOW_CHOW_HPP

#include <vector>

#include "fansy.hpp"

namespace tchow {

/// Rows contributed by one invariant (k+1)-cycle. For an R source the first
/// `point_rows` rows are the [p] - [inf] rows, the rest are character rows.
struct RelationBlock {
  CycleGenerator source;
  std::size_t point_rows = 0;
  std::vector<IntVec> rows;
};

struct ChowPresentation {
  int k = 0;
  std::vector<CycleGenerator> generators;
  std::vector<RelationBlock> blocks;
  IntMatrix relations;
  SmithResult smith;
  /// Per generator: coordinates modulo smith.invariants, then free coordinates.
  std::vector<IntVec> class_map;

  /// Class of an integer combination of the generators, reduced.
  IntVec class_of(const IntVec& cycle) const;
};

/// v_{F,G} for F a facet of G: a representative in N_Q of the primitive
/// generator of the quotient lattice, on the G side.
RatVec face_step(const Polyhedron& f, const Polyhedron& g);
/// v_{tau,sigma} for tau a facet of sigma, primitive modulo span tau.
RatVec cone_step(const Cone& tau, const Cone& sigma);

/// Columns follow enumerate_generators(x, k).ordered().
RelationBlock relation_block_V(const MarkedFansyDivisor& x, int k, const CycleGenerator& f);
RelationBlock relation_block_R(const MarkedFansyDivisor& x, int k, const CycleGenerator& tau);
RelationBlock relation_block_T(const MarkedFansyDivisor& x, int k, const CycleGenerator& tau);

ChowPresentation presentation(const MarkedFansyDivisor& x, int k);

/// Orbit closures of a complete fan modulo divisors of characters.
ChowPresentation fulton_sturmfels(const Fan& fan, int k);

/// One nested pair G < H in S_p over tau < sigma with dim G = dim tau and
/// dim H = dim sigma; lhs = mu(G) v_{G,H}, rhs = mu(H) v_{tau,sigma}.
struct NestedFacePair {
  std::size_t point = 0;
  Polyhedron g, h;
  RatVec lhs, rhs;
  /// lhs - rhs lies in span tau.
  bool holds = false;
};

std::vector<NestedFacePair> nested_face_pairs(const MarkedFansyDivisor& x);

}  // namespace tchow

#endif
