// SPDX-License-Identifier: Apache-2.0

// Exact rational cones, polyhedra, fans and complete polyhedral complexes.
//
// The V-representation is primary. H-representations come from a
// brute-force double description that is fine at desk scale (ambient rank
// at most 4, a few dozen generators). A polyhedron is handled through its
// homogenization cone(P x {1}) in one dimension more, so faces, vertices,
// tailcones and intersections all reduce to cone computations.

#ifndef TCHOW_POLYHEDRA_HPP
#define TCHOW_POLYHEDRA_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exactlin.hpp"

namespace tchow {

/// A rational polyhedral cone with primitive integer generators.
///
/// Canonical form: primitive, deduplicated, reduced to extreme rays (pointed
/// cones only) and sorted lexicographically, so equality is structural.
class Cone {
 public:
  Cone() = default;
  /// The zero cone.
  explicit Cone(std::size_t ambient_rank);
  Cone(std::size_t ambient_rank, const std::vector<IntVec>& generators);
  /// {x : <a, x> >= 0 for a in ineqs, <e, x> = 0 for e in eqs}.
  static Cone from_inequalities(std::size_t ambient_rank, const std::vector<RatVec>& ineqs,
                                const std::vector<RatVec>& eqs = {});

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<IntVec>& generators() const { return generators_; }
  std::size_t dim() const { return dim_; }
  bool is_pointed() const { return pointed_; }
  bool is_zero() const { return generators_.empty(); }

  /// Integer basis of the orthogonal complement of the linear span.
  const std::vector<IntVec>& equations() const { return equations_; }
  /// Primitive inward facet normals, taken inside the linear span.
  const std::vector<IntVec>& facet_normals() const { return facets_; }

  bool contains(const RatVec& x) const;
  bool contains(const Cone& other) const;
  bool contains_in_relint(const RatVec& x) const;
  std::vector<RatVec> span_basis() const;
  /// Sum of generators; lies in the relative interior.
  RatVec relint_point() const;

  /// Every face including the origin and the cone itself, sorted by
  /// dimension then canonical order. Requires a pointed cone.
  std::vector<Cone> faces() const;
  std::map<std::size_t, std::vector<Cone>> faces_by_dim() const;
  bool is_face_of(const Cone& big) const;

  Cone intersect(const Cone& other) const;
  Cone join(const Cone& other) const;

  bool operator==(const Cone& o) const {
    return ambient_rank_ == o.ambient_rank_ && generators_ == o.generators_;
  }
  bool operator<(const Cone& o) const;

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVec> generators_;
  std::size_t dim_ = 0;
  bool pointed_ = true;
  std::vector<IntVec> equations_;
  std::vector<IntVec> facets_;
};

struct DualAndFaces {
  std::vector<IntVec> facet_normals;
  std::map<std::size_t, std::vector<Cone>> faces_by_dim;
};

DualAndFaces dual_and_faces(const Cone& c);

/// A rational polyhedron conv(vertices) + tail, or the distinguished empty
/// polyhedron.
class Polyhedron {
 public:
  Polyhedron() = default;
  static Polyhedron empty(std::size_t ambient_rank);
  static Polyhedron from_generators(std::size_t ambient_rank, const std::vector<RatVec>& points,
                                    const std::vector<IntVec>& rays);
  static Polyhedron from_cone(const Cone& c);
  /// {x : <a, x> >= b for (a, b) in ineqs, <a, x> = b for (a, b) in eqs}.
  static Polyhedron from_inequalities(std::size_t ambient_rank,
                                      const std::vector<std::pair<RatVec, Rat>>& ineqs,
                                      const std::vector<std::pair<RatVec, Rat>>& eqs = {});

  bool is_empty() const { return empty_; }
  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  /// Recession cone; the zero cone for the empty polyhedron.
  const Cone& tail() const { return tail_; }
  const Cone& homogenization() const { return hom_; }
  /// -1 for the empty polyhedron.
  int dim() const;
  bool is_bounded() const { return tail_.is_zero(); }

  bool contains(const RatVec& x) const;
  bool contains(const Polyhedron& other) const;
  /// Inequalities (a, b) meaning <a, x> >= b.
  std::vector<std::pair<RatVec, Rat>> inequalities() const;
  std::vector<std::pair<RatVec, Rat>> equations() const;

  /// Non-empty faces including the polyhedron itself.
  std::vector<Polyhedron> faces() const;
  bool is_face_of(const Polyhedron& big) const;

  Polyhedron intersect(const Polyhedron& other) const;
  Polyhedron translate(const RatVec& shift) const;
  RatVec relint_point() const;
  /// Basis of the linear space parallel to the affine hull.
  std::vector<RatVec> direction_span() const;

  bool operator==(const Polyhedron& o) const;
  bool operator<(const Polyhedron& o) const;

 private:
  static Polyhedron from_homogenization(std::size_t ambient_rank, const Cone& hom);

  bool empty_ = true;
  std::size_t ambient_rank_ = 0;
  std::vector<RatVec> vertices_;
  Cone tail_;
  Cone hom_;
};

Cone tailcone(const Polyhedron& p);
Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b);

/// A fan given by its inclusion-maximal cones.
class Fan {
 public:
  Fan() = default;
  Fan(std::size_t ambient_rank, const std::vector<Cone>& cones);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  /// All cones sorted by dimension then canonical order.
  const std::vector<Cone>& all_cones() const { return all_; }
  std::vector<Cone> cones(std::size_t dim) const;
  bool contains(const Cone& c) const;
  /// Violations of pointedness and the common-face axiom.
  std::vector<std::string> violations() const;
  bool is_complete() const;

  bool operator==(const Fan& o) const { return ambient_rank_ == o.ambient_rank_ && all_ == o.all_; }

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<Cone> maximal_;
  std::vector<Cone> all_;
};

struct ComplexFace {
  Polyhedron face;
  std::vector<std::size_t> cells;  // indices of maximal cells containing it
};

/// A polyhedral subdivision of N_Q given by its maximal cells.
class PolyhedralComplex {
 public:
  PolyhedralComplex() = default;
  PolyhedralComplex(std::size_t ambient_rank, const std::vector<Polyhedron>& cells);
  /// The complex whose cells are the cones of a fan.
  static PolyhedralComplex from_fan(const Fan& fan);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<Polyhedron>& cells() const { return cells_; }
  /// Every face once, sorted by dimension then canonical order.
  const std::vector<ComplexFace>& faces() const { return faces_; }
  std::vector<ComplexFace> faces_of_dim(int d) const;
  /// Common-face axiom and completeness violations; empty when valid.
  std::vector<std::string> violations() const;
  bool is_valid() const { return violations().empty(); }
  /// Throws NonFanTails when the tailcones do not form a fan.
  Fan tailfan() const;
  PolyhedralComplex translate(const RatVec& shift) const;

  bool operator==(const PolyhedralComplex& o) const {
    return ambient_rank_ == o.ambient_rank_ && cells_ == o.cells_;
  }
  bool operator<(const PolyhedralComplex& o) const { return cells_ < o.cells_; }

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<Polyhedron> cells_;
  std::vector<ComplexFace> faces_;
};

/// d-faces of a valid complex; throws InvalidComplex on a common-face violation.
std::vector<ComplexFace> complex_faces(const PolyhedralComplex& s, int d);
Fan tailfan(const PolyhedralComplex& s);

std::string to_string(const Cone& c);
std::string to_string(const Polyhedron& p);

}  // namespace tchow

#endif
