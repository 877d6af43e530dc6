// SPDX-License-Identifier: Apache-2.0

#include "exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "errors.hpp"

namespace tchow {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntVec> IntMatrix::row_list() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void IntMatrix::append_row(const IntVec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  const std::size_t r = m.rows();
  std::size_t pr = 0;
  for (std::size_t j = 0; j < m.cols() && pr < r; ++j) {
    while (true) {
      std::size_t best = r;
      for (std::size_t i = pr; i < r; ++i)
        if (h(i, j) != 0 && (best == r || abs(h(i, j)) < abs(h(best, j)))) best = i;
      if (best == r) break;
      h.swap_rows(pr, best);
      u.swap_rows(pr, best);
      bool clean = true;
      for (std::size_t i = pr + 1; i < r; ++i) {
        if (h(i, j) == 0) continue;
        Int q = floor_div(h(i, j), h(pr, j));
        h.add_row(i, pr, -q);
        u.add_row(i, pr, -q);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(pr, j) == 0) continue;
    if (h(pr, j) < 0) {
      negate_row(h, pr);
      negate_row(u, pr);
    }
    for (std::size_t i = 0; i < pr; ++i) {
      Int q = floor_div(h(i, j), h(pr, j));
      h.add_row(i, pr, -q);
      u.add_row(i, pr, -q);
    }
    ++pr;
  }
  return {std::move(h), std::move(u)};
}

SmithDecomposition smith_decompose(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  std::vector<Int> diag;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t bi = r, bj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (a(i, j) != 0 && (bi == r || abs(a(i, j)) < abs(a(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == r) break;
    a.swap_rows(t, bi);
    u.swap_rows(t, bi);
    a.swap_cols(t, bj);
    v.swap_cols(t, bj);
    while (true) {
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        a.add_row(i, t, -q);
        u.add_row(i, t, -q);
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
      }
      std::size_t pi = t, pj = t;
      for (std::size_t i = t + 1; i < r; ++i)
        if (a(i, t) != 0 && abs(a(i, t)) < abs(a(pi, pj))) {
          pi = i;
          pj = t;
        }
      for (std::size_t j = t + 1; j < c; ++j)
        if (a(t, j) != 0 && abs(a(t, j)) < abs(a(pi, pj))) {
          pi = t;
          pj = j;
        }
      if (pi != t || pj != t) {
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        continue;
      }
      bool row_col_clear = true;
      for (std::size_t i = t + 1; i < r && row_col_clear; ++i) row_col_clear = a(i, t) == 0;
      for (std::size_t j = t + 1; j < c && row_col_clear; ++j) row_col_clear = a(t, j) == 0;
      if (!row_col_clear) continue;
      std::size_t di = r;
      for (std::size_t i = t + 1; i < r && di == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            di = i;
            break;
          }
      if (di == r) break;
      a.add_row(t, di, 1);
      u.add_row(t, di, 1);
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(u, t);
    }
    diag.push_back(a(t, t));
  }
  return {std::move(diag), std::move(u), std::move(v)};
}

SmithResult snf(const IntMatrix& m) {
  SmithDecomposition d = smith_decompose(m);
  SmithResult out;
  out.rank = d.diagonal.size();
  out.free_rank = m.cols() - out.rank;
  for (const Int& x : d.diagonal)
    if (x > 1) out.invariants.push_back(x);
  return out;
}

Primitive primitive(const RatVec& v) {
  Primitive p;
  p.mu = 1;
  for (const Rat& x : v) mpz_lcm(p.mu.get_mpz_t(), p.mu.get_mpz_t(), x.get_den_mpz_t());
  p.w.reserve(v.size());
  for (const Rat& x : v) {
    Rat y = x * p.mu;
    p.w.push_back(y.get_num());
  }
  return p;
}

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVec primitive_direction(const IntVec& v) {
  Int g = gcd_of(v);
  if (g == 0) throw Error(ErrorCode::InvalidArgument, "primitive direction of zero vector");
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
  return w;
}

IntVec primitive_direction(const RatVec& v) { return primitive_direction(primitive(v).w); }

Rat rational_gcd(const RatVec& v) {
  Int num = 0, den = 1;
  for (const Rat& x : v) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  Rat g(num, den);
  g.canonicalize();
  return g;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec to_rat(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const Int& x : v) r.emplace_back(x);
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVec>& rows, std::size_t dim) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t j = 0; j < dim && pr < rows.size(); ++j) {
    std::size_t p = pr;
    while (p < rows.size() && rows[p][j] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[pr], rows[p]);
    Rat inv = 1 / rows[pr][j];
    for (Rat& x : rows[pr]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pr || rows[i][j] == 0) continue;
      Rat f = rows[i][j];
      for (std::size_t k = 0; k < dim; ++k) rows[i][k] -= f * rows[pr][k];
    }
    pivots.push_back(j);
    ++pr;
  }
  rows.resize(pr);
  return pivots;
}

}  // namespace

std::size_t rank_of(const std::vector<RatVec>& rows) {
  if (rows.empty()) return 0;
  std::vector<RatVec> work = rows;
  return rref(work, rows.front().size()).size();
}

std::vector<RatVec> rational_nullspace(const std::vector<RatVec>& rows, std::size_t dim) {
  std::vector<RatVec> work = rows;
  std::vector<std::size_t> pivots = rref(work, dim);
  std::vector<bool> is_pivot(dim, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(dim);
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -work[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<IntVec> integer_kernel(const IntMatrix& a) {
  HnfResult r = hnf(a.transpose());
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < r.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < r.h.cols() && zero; ++j) zero = r.h(i, j) == 0;
    if (zero) out.push_back(r.u.row(i));
  }
  return out;
}

bool solve_in_span(const std::vector<RatVec>& basis, const RatVec& target, RatVec& x) {
  const std::size_t k = basis.size();
  const std::size_t n = target.size();
  // Transposed system: columns are basis vectors, augmented with target.
  std::vector<RatVec> rows(n, RatVec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = basis[j][i];
    rows[i][k] = target[i];
  }
  std::vector<std::size_t> piv = rref(rows, k + 1);
  if (!piv.empty() && piv.back() == k) return false;
  if (piv.size() != k) throw Error(ErrorCode::InvalidArgument, "basis vectors are dependent");
  x.assign(k, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = rows[i][k];
  return true;
}

Sublattice::Sublattice(std::size_t ambient_rank, const std::vector<IntVec>& generators)
    : ambient_rank_(ambient_rank) {
  if (generators.empty()) return;
  IntMatrix m = IntMatrix::from_rows(generators, ambient_rank);
  HnfResult r = hnf(m);
  for (std::size_t i = 0; i < r.h.rows(); ++i) {
    IntVec row = r.h.row(i);
    if (gcd_of(row) != 0) basis_.push_back(std::move(row));
  }
}

Sublattice Sublattice::full(std::size_t ambient_rank) {
  std::vector<IntVec> gens;
  IntMatrix id = IntMatrix::identity(ambient_rank);
  return Sublattice(ambient_rank, id.row_list());
}

bool Sublattice::coordinates(const RatVec& v, RatVec& out) const {
  std::vector<RatVec> b;
  for (const IntVec& r : basis_) b.push_back(to_rat(r));
  return solve_in_span(b, v, out);
}

bool Sublattice::contains(const IntVec& v) const {
  RatVec c;
  if (!coordinates(to_rat(v), c)) return false;
  return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x.get_den() == 1; });
}

bool Sublattice::contains(const Sublattice& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const IntVec& v) { return contains(v); });
}

Sublattice perp_lattice(const std::vector<RatVec>& span_basis, std::size_t ambient_rank) {
  std::vector<IntVec> rows;
  for (const RatVec& v : span_basis) {
    IntVec w = primitive(v).w;
    if (gcd_of(w) != 0) rows.push_back(std::move(w));
  }
  if (rows.empty()) return Sublattice::full(ambient_rank);
  return Sublattice(ambient_rank, integer_kernel(IntMatrix::from_rows(rows, ambient_rank)));
}

namespace {

// Integer coordinates of inner's basis in outer's basis; throws if not contained.
IntMatrix coordinates_in(const Sublattice& inner, const Sublattice& outer) {
  IntMatrix c(inner.rank(), outer.rank());
  for (std::size_t i = 0; i < inner.rank(); ++i) {
    RatVec x;
    if (!outer.coordinates(to_rat(inner.basis()[i]), x))
      throw Error(ErrorCode::NotContained, "inner lattice not contained in outer span");
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j].get_den() != 1) throw Error(ErrorCode::NotContained, "inner lattice not contained in outer");
      c(i, j) = x[j].get_num();
    }
  }
  return c;
}

}  // namespace

QuotientGenerator quotient_generator(const Sublattice& inner, const Sublattice& outer) {
  if (inner.ambient_rank() != outer.ambient_rank() || outer.rank() != inner.rank() + 1)
    throw Error(ErrorCode::RankMismatch, "quotient_generator needs rank(outer) = rank(inner) + 1");
  IntMatrix c = coordinates_in(inner, outer);
  const std::size_t k1 = outer.rank();
  IntVec lambda;
  if (inner.rank() == 0) {
    lambda = IntVec{1};
  } else {
    std::vector<IntVec> ker = integer_kernel(c);
    if (ker.size() != 1) throw Error(ErrorCode::RankMismatch, "inner basis degenerate");
    lambda = ker.front();
  }
  // x with <lambda, x> = 1: first row of the HNF transform of lambda as a column.
  IntMatrix col(k1, 1);
  for (std::size_t i = 0; i < k1; ++i) col(i, 0) = lambda[i];
  HnfResult hr = hnf(col);
  IntVec x = hr.u.row(0);
  IntVec v(outer.ambient_rank());
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += x[i] * outer.basis()[i][j];
  IntMatrix full = c;
  full.append_row(x);
  Int idx = abs(determinant(full));
  return {std::move(v), idx};
}

Int lattice_index(const Sublattice& inner, const Sublattice& outer) {
  if (inner.ambient_rank() != outer.ambient_rank() || inner.rank() != outer.rank())
    throw Error(ErrorCode::RankMismatch, "lattice_index needs equal ranks");
  return abs(determinant(coordinates_in(inner, outer)));
}

namespace {

// {m in lat : <m, point> integral}
Sublattice restrict_integral(const Sublattice& lat, const RatVec& point) {
  const std::size_t r = lat.rank();
  const std::size_t n = lat.ambient_rank();
  if (r == 0) return lat;
  RatVec values(r);
  Int den = 1;
  for (std::size_t i = 0; i < r; ++i) {
    values[i] = dot(lat.basis()[i], point);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), values[i].get_den_mpz_t());
  }
  if (den == 1) return lat;
  // sum x_i a_i + y den = 0  <=>  sum x_i <b_i, point> integral
  IntMatrix row(1, r + 1);
  for (std::size_t i = 0; i < r; ++i) row(0, i) = Rat(values[i] * den).get_num();
  row(0, r) = den;
  std::vector<IntVec> gens;
  for (const IntVec& kv : integer_kernel(row)) {
    IntVec m(n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) m[j] += kv[i] * lat.basis()[i][j];
    gens.push_back(std::move(m));
  }
  return Sublattice(n, gens);
}

}  // namespace

Sublattice face_character_lattice(const std::vector<RatVec>& span, const RatVec& point,
                                  std::size_t ambient_rank) {
  return restrict_integral(perp_lattice(span, ambient_rank), point);
}

Sublattice orbit_character_lattice(const std::vector<RatVec>& span, const std::vector<RatVec>& points,
                                   std::size_t ambient_rank) {
  Sublattice lat = perp_lattice(span, ambient_rank);
  for (const RatVec& p : points) lat = restrict_integral(lat, p);
  return lat;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace tchow
