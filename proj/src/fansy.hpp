// SPDX-License-Identifier: Apache-2.0

// Marked fansy divisors over the projective line: the data model, its
// validation, the cycle generator sets and the contraction combinatorics.

#ifndef TCHOW_FANSY_HPP
#define TCHOW_FANSY_HPP

#include <string>
#include <vector>

#include "polyhedra.hpp"

namespace tchow {

/// Tailfan Sigma, one complete subdivision S_p per point label and the marked
/// set K. The last label is the basepoint used as infinity.
class MarkedFansyDivisor {
 public:
  MarkedFansyDivisor() = default;
  /// Fewer than two points are padded with generic points "aux1", "aux2"
  /// whose subdivision is the tailfan itself.
  MarkedFansyDivisor(Fan tailfan, std::vector<std::string> points,
                     std::vector<PolyhedralComplex> complexes, std::vector<Cone> marked);
  /// Tailfan taken from the first complex.
  MarkedFansyDivisor(std::size_t rank, std::vector<std::string> points,
                     std::vector<PolyhedralComplex> complexes, std::vector<Cone> marked);

  std::size_t rank() const { return rank_; }
  const Fan& tailfan() const { return tailfan_; }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<PolyhedralComplex>& complexes() const { return complexes_; }
  const PolyhedralComplex& complex(std::size_t p) const { return complexes_.at(p); }
  /// Sorted by dimension then canonical order.
  const std::vector<Cone>& marked() const { return marked_; }
  bool is_marked(const Cone& c) const;
  std::size_t point_index(const std::string& label) const;
  std::size_t basepoint() const { return points_.size() - 1; }
  /// Number of labels given before padding.
  std::size_t given_points() const { return given_points_; }
  /// Labels whose subdivision differs from the tailfan.
  std::vector<std::string> special_points() const;

  /// Same data with `label` moved to the basepoint position.
  MarkedFansyDivisor with_basepoint(const std::string& label) const;
  /// Same data with one more generic point, inserted before the basepoint.
  MarkedFansyDivisor with_generic_point(const std::string& label) const;

 private:
  std::size_t rank_ = 0;
  Fan tailfan_;
  std::vector<std::string> points_;
  std::vector<PolyhedralComplex> complexes_;
  std::vector<Cone> marked_;
  std::size_t given_points_ = 0;
};

struct Violation {
  int condition;  // 1 subdivisions/tailfan, 2 p-divisor slices, 3 marking vs degree, 4 upward closure; 0 other
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const MarkedFansyDivisor& x);

enum class GeneratorKind { V, R, T };

/// One invariant cycle. R and T carry a cone of the tailfan; V carries a
/// point index and a face of that point's subdivision (cone = its tail).
struct CycleGenerator {
  GeneratorKind kind = GeneratorKind::R;
  Cone cone;
  std::size_t point = 0;
  Polyhedron face;

  bool operator==(const CycleGenerator& o) const;
  bool operator<(const CycleGenerator& o) const;
};

std::string kind_name(GeneratorKind k);
std::string describe(const CycleGenerator& g, const MarkedFansyDivisor& x);

struct GeneratorSets {
  std::vector<CycleGenerator> v, r, t;
  /// V, then R, then T.
  std::vector<CycleGenerator> ordered() const;
};

GeneratorSets enumerate_generators(const MarkedFansyDivisor& x, int k);

struct Counts {
  std::size_t r = 0, v = 0, t = 0;
  bool operator==(const Counts& o) const = default;
};

inline Counts counts_of(const GeneratorSets& g) { return {g.r.size(), g.v.size(), g.t.size()}; }

/// Faces of S_p whose tailcone is exactly tau.
std::vector<Polyhedron> faces_over(const MarkedFansyDivisor& x, const Cone& tau, std::size_t p);
/// The single face of S_p with tail sigma, sigma marked.
Polyhedron unique_face_over(const MarkedFansyDivisor& x, const Cone& sigma, std::size_t p);

/// mu of the image of the first vertex of f in N_Q / span(tail f).
Int mu_of_face(const Polyhedron& f);
Int s_sigma(const MarkedFansyDivisor& x, const Cone& sigma);
/// {m in M(sigma) : <m, v_p> integral for the vertices over sigma}; index s_sigma in M(sigma).
Sublattice contracted_character_lattice(const MarkedFansyDivisor& x, const Cone& sigma);

struct DegreePiece {
  Cone sigma;
  Polyhedron degree;
};

/// Minkowski sum of the slice coefficients for every full-dimensional marked cone.
std::vector<DegreePiece> deg_xi(const MarkedFansyDivisor& x);
/// Marked set implied by the degree: faces of full-dimensional marked cones meeting deg.
std::vector<Cone> derived_marking(const MarkedFansyDivisor& x);

}  // namespace tchow

#endif
