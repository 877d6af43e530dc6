// SPDX-License-Identifier: Apache-2.0

// Exact integer and rational linear algebra over GMP.
//
// Every lattice-theoretic quantity in the library (perp lattices, orbit
// character lattices, quotient generators, relation matrices and their
// Smith forms) is computed here without any rounding.

#ifndef TCHOW_EXACTLIN_HPP
#define TCHOW_EXACTLIN_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace tchow {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  std::vector<IntVec> row_list() const;
  void append_row(const IntVec& r);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& factor);
  void add_col(std::size_t dst, std::size_t src, const Int& factor);

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Determinant of a square matrix (fraction-free Bareiss).
Int determinant(const IntMatrix& m);

struct HnfResult {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
};

/// Row Hermite normal form: pivots positive, strictly increasing pivot
/// columns, entries above a pivot reduced into [0, pivot), zero rows last.
HnfResult hnf(const IntMatrix& m);

struct SmithResult {
  std::vector<Int> invariants;  // d_1 | d_2 | ..., all > 1
  std::size_t free_rank = 0;    // cols - rank
  std::size_t rank = 0;
};

struct SmithDecomposition {
  std::vector<Int> diagonal;  // length rank, positive, successive divisibility
  IntMatrix u;                // rows x rows unimodular
  IntMatrix v;                // cols x cols unimodular, u * m * v = diag
};

SmithDecomposition smith_decompose(const IntMatrix& m);
SmithResult snf(const IntMatrix& m);

struct Primitive {
  IntVec w;
  Int mu;
};

/// Smallest mu > 0 with mu * v integral, and w = mu * v. Zero maps to (0, 1).
Primitive primitive(const RatVec& v);

/// The primitive lattice vector on the ray through v (v != 0).
IntVec primitive_direction(const RatVec& v);
IntVec primitive_direction(const IntVec& v);

Int gcd_of(const IntVec& v);
/// gcd of rationals: the largest positive g with every entry in g*Z. Zero vector gives 0.
Rat rational_gcd(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
RatVec to_rat(const IntVec& v);

/// Rank of a list of rational vectors.
std::size_t rank_of(const std::vector<RatVec>& rows);
/// A rational basis of {x : <r, x> = 0 for all rows r}.
std::vector<RatVec> rational_nullspace(const std::vector<RatVec>& rows, std::size_t dim);
/// A basis of the integer kernel {x in Z^cols : a x = 0}, saturated.
std::vector<IntVec> integer_kernel(const IntMatrix& a);

/// Solve x * basis = target over Q where basis rows are independent.
/// Returns false when target is outside the row span.
bool solve_in_span(const std::vector<RatVec>& basis, const RatVec& target, RatVec& x);

/// A full-rank sublattice of Z^ambient_rank's subspace, canonicalised by HNF.
class Sublattice {
 public:
  Sublattice() = default;
  Sublattice(std::size_t ambient_rank, const std::vector<IntVec>& generators);
  static Sublattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVec>& basis() const { return basis_; }
  bool contains(const IntVec& v) const;
  bool contains(const Sublattice& other) const;
  /// Coordinates of v (in the rational span) in this basis.
  bool coordinates(const RatVec& v, RatVec& out) const;

  bool operator==(const Sublattice& o) const = default;
  auto operator<=>(const Sublattice& o) const = default;

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVec> basis_;
};

/// {m integral : <m, v> = 0 for all v in span_basis}.
Sublattice perp_lattice(const std::vector<RatVec>& span_basis, std::size_t ambient_rank);

struct QuotientGenerator {
  IntVec v;
  Int index;  // torsion order of outer / (inner + Z v)
};

/// Requires inner subset of outer and rank(outer) = rank(inner) + 1.
QuotientGenerator quotient_generator(const Sublattice& inner, const Sublattice& outer);

/// [outer : inner] for equal ranks.
Int lattice_index(const Sublattice& inner, const Sublattice& outer);

/// {m in span^perp cap Z^n : <m, point> in Z}. Index in the perp lattice is mu
/// of the image of point modulo span.
Sublattice face_character_lattice(const std::vector<RatVec>& span, const RatVec& point,
                                  std::size_t ambient_rank);
/// {m in span^perp cap Z^n : <m, p> in Z for every p}.
Sublattice orbit_character_lattice(const std::vector<RatVec>& span, const std::vector<RatVec>& points,
                                   std::size_t ambient_rank);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace tchow

#endif
