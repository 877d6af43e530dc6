// SPDX-License-Identifier: Apache-2.0

#include "polyhedra.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace tchow {

namespace {

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<RatVec> rows_to_rat(const std::vector<IntVec>& rows) {
  std::vector<RatVec> out;
  out.reserve(rows.size());
  for (const IntVec& r : rows) out.push_back(to_rat(r));
  return out;
}

// Row space basis of the given vectors.
std::vector<RatVec> span_of(const std::vector<RatVec>& vecs, std::size_t d) {
  if (vecs.empty()) return {};
  // nullspace of the nullspace is the span
  std::vector<RatVec> perp = rational_nullspace(vecs, d);
  return rational_nullspace(perp, d);
}

std::vector<IntVec> compute_facets(const std::vector<IntVec>& gens, const std::vector<RatVec>& span) {
  const std::size_t s = span.size();
  std::set<IntVec> found;
  if (s == 0) return {};
  std::vector<RatVec> g = rows_to_rat(gens);
  for_each_combination(g.size(), s - 1, [&](const std::vector<std::size_t>& sub) {
    std::vector<RatVec> m;
    for (std::size_t i : sub) {
      RatVec row(s);
      for (std::size_t j = 0; j < s; ++j) row[j] = dot(span[j], g[i]);
      m.push_back(std::move(row));
    }
    std::vector<RatVec> ns = rational_nullspace(m, s);
    if (ns.size() != 1) return;
    RatVec a(g.front().size());
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t c = 0; c < a.size(); ++c) a[c] += ns[0][j] * span[j][c];
    bool pos = false, neg = false;
    for (const RatVec& x : g) {
      int sg = sgn(dot(a, x));
      pos |= sg > 0;
      neg |= sg < 0;
    }
    if (pos && neg) return;
    if (neg)
      for (Rat& x : a) x = -x;
    found.insert(primitive_direction(a));
  });
  return {found.begin(), found.end()};
}

std::size_t rank_int(const std::vector<IntVec>& rows) { return rank_of(rows_to_rat(rows)); }

}  // namespace

// ---------------------------------------------------------------------------
// Cone

Cone::Cone(std::size_t ambient_rank) : ambient_rank_(ambient_rank) {
  equations_ = IntMatrix::identity(ambient_rank).row_list();
}

Cone::Cone(std::size_t ambient_rank, const std::vector<IntVec>& generators)
    : ambient_rank_(ambient_rank) {
  std::set<IntVec> uniq;
  for (const IntVec& g : generators) {
    if (g.size() != ambient_rank) throw Error(ErrorCode::InvalidArgument, "cone generator has wrong rank");
    if (gcd_of(g) == 0) continue;
    uniq.insert(primitive_direction(g));
  }
  std::vector<IntVec> gens(uniq.begin(), uniq.end());
  std::vector<RatVec> span = span_of(rows_to_rat(gens), ambient_rank);
  dim_ = span.size();
  equations_ = perp_lattice(span, ambient_rank).basis();
  facets_ = compute_facets(gens, span);
  std::vector<IntVec> all = equations_;
  all.insert(all.end(), facets_.begin(), facets_.end());
  pointed_ = rank_int(all) == ambient_rank;
  if (pointed_) {
    std::vector<IntVec> extreme;
    for (const IntVec& g : gens) {
      std::vector<IntVec> tight = equations_;
      for (const IntVec& a : facets_)
        if (dot(a, g) == 0) tight.push_back(a);
      if (rank_int(tight) + 1 == ambient_rank) extreme.push_back(g);
    }
    gens = std::move(extreme);
  }
  generators_ = std::move(gens);
}

Cone Cone::from_inequalities(std::size_t ambient_rank, const std::vector<RatVec>& ineqs,
                             const std::vector<RatVec>& eqs) {
  std::vector<RatVec> all = ineqs;
  all.insert(all.end(), eqs.begin(), eqs.end());
  std::vector<RatVec> lineality = rational_nullspace(all, ambient_rank);
  std::vector<RatVec> e = eqs;
  e.insert(e.end(), lineality.begin(), lineality.end());
  const std::size_t re = rank_of(e);
  std::vector<IntVec> gens;
  for (const RatVec& l : lineality) {
    IntVec p = primitive(l).w;
    gens.push_back(p);
    for (Int& x : p) x = -x;
    gens.push_back(p);
  }
  if (re + 1 <= ambient_rank) {
    const std::size_t need = ambient_rank - 1 - re;
    for_each_combination(ineqs.size(), need, [&](const std::vector<std::size_t>& sub) {
      std::vector<RatVec> sys = e;
      for (std::size_t i : sub) sys.push_back(ineqs[i]);
      std::vector<RatVec> ns = rational_nullspace(sys, ambient_rank);
      if (ns.size() != 1) return;
      bool pos = false, neg = false;
      for (const RatVec& a : ineqs) {
        int sg = sgn(dot(a, ns[0]));
        pos |= sg > 0;
        neg |= sg < 0;
      }
      if (pos && neg) return;
      IntVec r = primitive(ns[0]).w;
      if (!neg) gens.push_back(r);
      if (!pos) {
        for (Int& x : r) x = -x;
        gens.push_back(r);
      }
    });
  }
  return Cone(ambient_rank, gens);
}

bool Cone::contains(const RatVec& x) const {
  for (const IntVec& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const IntVec& a : facets_)
    if (dot(a, x) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](const IntVec& g) { return contains(to_rat(g)); });
}

bool Cone::contains_in_relint(const RatVec& x) const {
  for (const IntVec& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const IntVec& a : facets_)
    if (dot(a, x) <= 0) return false;
  return true;
}

std::vector<RatVec> Cone::span_basis() const { return span_of(rows_to_rat(generators_), ambient_rank_); }

RatVec Cone::relint_point() const {
  RatVec p(ambient_rank_);
  for (const IntVec& g : generators_)
    for (std::size_t i = 0; i < ambient_rank_; ++i) p[i] += g[i];
  return p;
}

std::vector<Cone> Cone::faces() const {
  if (!pointed_) throw Error(ErrorCode::InvalidArgument, "face enumeration needs a pointed cone");
  const std::size_t n = generators_.size();
  if (n >= 63) throw Error(ErrorCode::InvalidArgument, "too many generators for face enumeration");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> zero_sets;
  for (const IntVec& a : facets_) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (dot(a, generators_[i]) == 0) m |= std::uint64_t{1} << i;
    zero_sets.push_back(m);
  }
  std::set<std::uint64_t> seen{full};
  std::vector<std::uint64_t> queue{full};
  while (!queue.empty()) {
    std::uint64_t m = queue.back();
    queue.pop_back();
    for (std::uint64_t z : zero_sets) {
      std::uint64_t f = m & z;
      if (seen.insert(f).second) queue.push_back(f);
    }
  }
  std::vector<Cone> out;
  for (std::uint64_t m : seen) {
    std::vector<IntVec> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) sub.push_back(generators_[i]);
    out.emplace_back(ambient_rank_, sub);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::size_t, std::vector<Cone>> Cone::faces_by_dim() const {
  std::map<std::size_t, std::vector<Cone>> out;
  for (Cone& f : faces()) out[f.dim()].push_back(std::move(f));
  return out;
}

bool Cone::is_face_of(const Cone& big) const {
  if (!big.contains(*this)) return false;
  std::vector<Cone> fs = big.faces();
  return std::find(fs.begin(), fs.end(), *this) != fs.end();
}

Cone Cone::intersect(const Cone& other) const {
  std::vector<RatVec> ineqs = rows_to_rat(facets_);
  std::vector<RatVec> more = rows_to_rat(other.facets_);
  ineqs.insert(ineqs.end(), more.begin(), more.end());
  std::vector<RatVec> eqs = rows_to_rat(equations_);
  more = rows_to_rat(other.equations_);
  eqs.insert(eqs.end(), more.begin(), more.end());
  return from_inequalities(ambient_rank_, ineqs, eqs);
}

Cone Cone::join(const Cone& other) const {
  std::vector<IntVec> g = generators_;
  g.insert(g.end(), other.generators_.begin(), other.generators_.end());
  return Cone(ambient_rank_, g);
}

bool Cone::operator<(const Cone& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  if (ambient_rank_ != o.ambient_rank_) return ambient_rank_ < o.ambient_rank_;
  return generators_ < o.generators_;
}

DualAndFaces dual_and_faces(const Cone& c) { return {c.facet_normals(), c.faces_by_dim()}; }

// ---------------------------------------------------------------------------
// Polyhedron

Polyhedron Polyhedron::empty(std::size_t ambient_rank) {
  Polyhedron p;
  p.empty_ = true;
  p.ambient_rank_ = ambient_rank;
  p.tail_ = Cone(ambient_rank);
  p.hom_ = Cone(ambient_rank + 1);
  return p;
}

Polyhedron Polyhedron::from_generators(std::size_t ambient_rank, const std::vector<RatVec>& points,
                                       const std::vector<IntVec>& rays) {
  if (points.empty()) return empty(ambient_rank);
  std::vector<IntVec> gens;
  for (const RatVec& p : points) {
    if (p.size() != ambient_rank) throw Error(ErrorCode::InvalidArgument, "vertex has wrong rank");
    RatVec h = p;
    h.emplace_back(1);
    gens.push_back(primitive(h).w);
  }
  for (const IntVec& r : rays) {
    if (r.size() != ambient_rank) throw Error(ErrorCode::InvalidArgument, "ray has wrong rank");
    IntVec h = r;
    h.emplace_back(0);
    gens.push_back(std::move(h));
  }
  return from_homogenization(ambient_rank, Cone(ambient_rank + 1, gens));
}

Polyhedron Polyhedron::from_cone(const Cone& c) {
  return from_generators(c.ambient_rank(), {RatVec(c.ambient_rank())}, c.generators());
}

Polyhedron Polyhedron::from_inequalities(std::size_t ambient_rank,
                                         const std::vector<std::pair<RatVec, Rat>>& ineqs,
                                         const std::vector<std::pair<RatVec, Rat>>& eqs) {
  auto lift = [](const std::pair<RatVec, Rat>& ab) {
    RatVec h = ab.first;
    h.push_back(-ab.second);
    return h;
  };
  std::vector<RatVec> hi, he;
  for (const auto& ab : ineqs) hi.push_back(lift(ab));
  RatVec t(ambient_rank + 1);
  t.back() = 1;
  hi.push_back(t);
  for (const auto& ab : eqs) he.push_back(lift(ab));
  return from_homogenization(ambient_rank, Cone::from_inequalities(ambient_rank + 1, hi, he));
}

Polyhedron Polyhedron::from_homogenization(std::size_t ambient_rank, const Cone& hom) {
  std::vector<RatVec> verts;
  std::vector<IntVec> rays;
  for (const IntVec& g : hom.generators()) {
    const Int& t = g.back();
    if (t > 0) {
      RatVec v(ambient_rank);
      for (std::size_t i = 0; i < ambient_rank; ++i) v[i] = Rat(g[i], t);
      for (Rat& x : v) x.canonicalize();
      verts.push_back(std::move(v));
    } else if (t == 0) {
      rays.emplace_back(g.begin(), g.end() - 1);
    } else {
      throw Error(ErrorCode::InvalidArgument, "homogenization leaves the half-space t >= 0");
    }
  }
  if (verts.empty()) return empty(ambient_rank);
  Polyhedron p;
  p.empty_ = false;
  p.ambient_rank_ = ambient_rank;
  std::sort(verts.begin(), verts.end());
  p.vertices_ = std::move(verts);
  p.tail_ = Cone(ambient_rank, rays);
  p.hom_ = hom;
  return p;
}

int Polyhedron::dim() const { return empty_ ? -1 : static_cast<int>(hom_.dim()) - 1; }

bool Polyhedron::contains(const RatVec& x) const {
  if (empty_) return false;
  RatVec h = x;
  h.emplace_back(1);
  return hom_.contains(h);
}

bool Polyhedron::contains(const Polyhedron& other) const {
  if (other.empty_) return true;
  if (empty_) return false;
  for (const RatVec& v : other.vertices_)
    if (!contains(v)) return false;
  return tail_.contains(other.tail_);
}

std::vector<std::pair<RatVec, Rat>> Polyhedron::inequalities() const {
  std::vector<std::pair<RatVec, Rat>> out;
  for (const IntVec& a : hom_.facet_normals()) {
    RatVec n(a.begin(), a.end() - 1);
    if (std::all_of(n.begin(), n.end(), [](const Rat& x) { return x == 0; })) continue;
    out.emplace_back(std::move(n), Rat(-a.back()));
  }
  return out;
}

std::vector<std::pair<RatVec, Rat>> Polyhedron::equations() const {
  std::vector<std::pair<RatVec, Rat>> out;
  for (const IntVec& a : hom_.equations()) {
    RatVec n(a.begin(), a.end() - 1);
    if (std::all_of(n.begin(), n.end(), [](const Rat& x) { return x == 0; })) continue;
    out.emplace_back(std::move(n), Rat(-a.back()));
  }
  return out;
}

std::vector<Polyhedron> Polyhedron::faces() const {
  std::vector<Polyhedron> out;
  if (empty_) return out;
  for (const Cone& f : hom_.faces()) {
    bool has_vertex = std::any_of(f.generators().begin(), f.generators().end(),
                                  [](const IntVec& g) { return g.back() > 0; });
    if (has_vertex) out.push_back(from_homogenization(ambient_rank_, f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Polyhedron::is_face_of(const Polyhedron& big) const {
  if (empty_) return true;
  if (!big.contains(*this)) return false;
  std::vector<Polyhedron> fs = big.faces();
  return std::find(fs.begin(), fs.end(), *this) != fs.end();
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  if (empty_ || other.empty_) return empty(ambient_rank_);
  std::vector<RatVec> ineqs, eqs;
  for (const Polyhedron* p : {this, &other}) {
    for (const IntVec& a : p->hom_.facet_normals()) ineqs.push_back(to_rat(a));
    for (const IntVec& e : p->hom_.equations()) eqs.push_back(to_rat(e));
  }
  RatVec t(ambient_rank_ + 1);
  t.back() = 1;
  ineqs.push_back(t);
  return from_homogenization(ambient_rank_, Cone::from_inequalities(ambient_rank_ + 1, ineqs, eqs));
}

Polyhedron Polyhedron::translate(const RatVec& shift) const {
  if (empty_) return *this;
  std::vector<RatVec> pts = vertices_;
  for (RatVec& v : pts)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift[i];
  return from_generators(ambient_rank_, pts, tail_.generators());
}

RatVec Polyhedron::relint_point() const {
  if (empty_) throw Error(ErrorCode::EmptyPolyhedron, "relative interior of the empty polyhedron");
  RatVec p(ambient_rank_);
  for (const RatVec& v : vertices_)
    for (std::size_t i = 0; i < ambient_rank_; ++i) p[i] += v[i];
  for (Rat& x : p) x /= static_cast<long>(vertices_.size());
  for (const IntVec& r : tail_.generators())
    for (std::size_t i = 0; i < ambient_rank_; ++i) p[i] += r[i];
  return p;
}

std::vector<RatVec> Polyhedron::direction_span() const {
  std::vector<RatVec> dirs;
  if (empty_) return dirs;
  for (std::size_t k = 1; k < vertices_.size(); ++k) {
    RatVec d(ambient_rank_);
    for (std::size_t i = 0; i < ambient_rank_; ++i) d[i] = vertices_[k][i] - vertices_[0][i];
    dirs.push_back(std::move(d));
  }
  for (const IntVec& r : tail_.generators()) dirs.push_back(to_rat(r));
  return span_of(dirs, ambient_rank_);
}

bool Polyhedron::operator==(const Polyhedron& o) const {
  if (empty_ || o.empty_) return empty_ == o.empty_ && ambient_rank_ == o.ambient_rank_;
  return vertices_ == o.vertices_ && tail_ == o.tail_;
}

bool Polyhedron::operator<(const Polyhedron& o) const {
  if (empty_ != o.empty_) return empty_;
  if (dim() != o.dim()) return dim() < o.dim();
  if (vertices_ != o.vertices_) return vertices_ < o.vertices_;
  return tail_.generators() < o.tail_.generators();
}

Cone tailcone(const Polyhedron& p) {
  if (p.is_empty()) throw Error(ErrorCode::EmptyPolyhedron, "tailcone of the empty polyhedron");
  return p.tail();
}

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw Error(ErrorCode::RankMismatch, "minkowski_sum of polyhedra of different rank");
  if (a.is_empty() || b.is_empty()) return Polyhedron::empty(a.ambient_rank());
  std::vector<RatVec> pts;
  for (const RatVec& x : a.vertices())
    for (const RatVec& y : b.vertices()) {
      RatVec s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      pts.push_back(std::move(s));
    }
  std::vector<IntVec> rays = a.tail().generators();
  rays.insert(rays.end(), b.tail().generators().begin(), b.tail().generators().end());
  return Polyhedron::from_generators(a.ambient_rank(), pts, rays);
}

// ---------------------------------------------------------------------------
// Fan

Fan::Fan(std::size_t ambient_rank, const std::vector<Cone>& cones) : ambient_rank_(ambient_rank) {
  std::vector<Cone> uniq(cones);
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  for (const Cone& c : uniq) {
    bool dominated = std::any_of(uniq.begin(), uniq.end(), [&](const Cone& o) {
      return !(o == c) && o.dim() > c.dim() && o.contains(c);
    });
    if (!dominated) maximal_.push_back(c);
  }
  std::set<Cone> all;
  for (const Cone& m : maximal_) {
    if (!m.is_pointed()) {
      all.insert(m);
      continue;
    }
    for (Cone& f : m.faces()) all.insert(std::move(f));
  }
  all_.assign(all.begin(), all.end());
}

std::vector<Cone> Fan::cones(std::size_t dim) const {
  std::vector<Cone> out;
  for (const Cone& c : all_)
    if (c.dim() == dim) out.push_back(c);
  return out;
}

bool Fan::contains(const Cone& c) const { return std::binary_search(all_.begin(), all_.end(), c); }

std::vector<std::string> Fan::violations() const {
  std::vector<std::string> out;
  for (const Cone& c : maximal_)
    if (!c.is_pointed()) out.push_back("cone " + to_string(c) + " is not pointed");
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < maximal_.size(); ++i)
    for (std::size_t j = i + 1; j < maximal_.size(); ++j) {
      Cone inter = maximal_[i].intersect(maximal_[j]);
      if (!inter.is_face_of(maximal_[i]) || !inter.is_face_of(maximal_[j]))
        out.push_back("cones " + to_string(maximal_[i]) + " and " + to_string(maximal_[j]) +
                      " do not meet in a common face");
    }
  return out;
}

bool Fan::is_complete() const {
  if (maximal_.empty()) return false;
  for (const Cone& c : maximal_)
    if (c.dim() != ambient_rank_) return false;
  if (ambient_rank_ == 0) return true;
  std::map<Cone, int> facet_count;
  for (const Cone& c : maximal_)
    for (const Cone& f : c.faces())
      if (f.dim() + 1 == ambient_rank_) ++facet_count[f];
  return std::all_of(facet_count.begin(), facet_count.end(),
                     [](const auto& kv) { return kv.second == 2; });
}

// ---------------------------------------------------------------------------
// PolyhedralComplex

PolyhedralComplex::PolyhedralComplex(std::size_t ambient_rank, const std::vector<Polyhedron>& cells)
    : ambient_rank_(ambient_rank), cells_(cells) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  std::map<Polyhedron, std::vector<std::size_t>> incidence;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].is_empty()) throw Error(ErrorCode::InvalidComplex, "empty cell in complex");
    if (cells_[i].ambient_rank() != ambient_rank)
      throw Error(ErrorCode::RankMismatch, "cell rank differs from complex rank");
    for (Polyhedron& f : cells_[i].faces()) incidence[std::move(f)].push_back(i);
  }
  for (auto& [face, cs] : incidence) faces_.push_back({face, cs});
}

PolyhedralComplex PolyhedralComplex::from_fan(const Fan& fan) {
  std::vector<Polyhedron> cells;
  for (const Cone& c : fan.maximal_cones()) cells.push_back(Polyhedron::from_cone(c));
  return PolyhedralComplex(fan.ambient_rank(), cells);
}

std::vector<ComplexFace> PolyhedralComplex::faces_of_dim(int d) const {
  std::vector<ComplexFace> out;
  for (const ComplexFace& f : faces_)
    if (f.face.dim() == d) out.push_back(f);
  return out;
}

std::vector<std::string> PolyhedralComplex::violations() const {
  std::vector<std::string> out;
  if (cells_.empty()) {
    out.push_back("complex has no cells");
    return out;
  }
  for (const Polyhedron& c : cells_) {
    if (c.dim() != static_cast<int>(ambient_rank_))
      out.push_back("cell " + to_string(c) + " is not full-dimensional");
    if (!c.tail().is_pointed()) out.push_back("cell " + to_string(c) + " has a non-pointed tailcone");
  }
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    for (std::size_t j = i + 1; j < cells_.size(); ++j) {
      Polyhedron inter = cells_[i].intersect(cells_[j]);
      if (inter.is_empty()) continue;
      if (!inter.is_face_of(cells_[i]) || !inter.is_face_of(cells_[j]))
        out.push_back("cells " + to_string(cells_[i]) + " and " + to_string(cells_[j]) +
                      " do not meet in a common face");
    }
  if (ambient_rank_ > 0)
    for (const ComplexFace& f : faces_)
      if (f.face.dim() + 1 == static_cast<int>(ambient_rank_) && f.cells.size() != 2)
        out.push_back("facet " + to_string(f.face) + " lies in " + std::to_string(f.cells.size()) +
                      " maximal cells (complex is not complete)");
  return out;
}

Fan PolyhedralComplex::tailfan() const {
  std::vector<Cone> tails;
  for (const ComplexFace& f : faces_) tails.push_back(f.face.tail());
  Fan fan(ambient_rank_, tails);
  std::vector<std::string> bad = fan.violations();
  if (!bad.empty()) throw Error(ErrorCode::NonFanTails, bad.front());
  for (const Cone& t : tails)
    if (!fan.contains(t)) throw Error(ErrorCode::NonFanTails, "tailcone " + to_string(t) + " is not a cone of the tail fan");
  return fan;
}

PolyhedralComplex PolyhedralComplex::translate(const RatVec& shift) const {
  std::vector<Polyhedron> cells;
  for (const Polyhedron& c : cells_) cells.push_back(c.translate(shift));
  return PolyhedralComplex(ambient_rank_, cells);
}

std::vector<ComplexFace> complex_faces(const PolyhedralComplex& s, int d) {
  std::vector<std::string> bad = s.violations();
  for (const std::string& b : bad)
    if (b.find("common face") != std::string::npos) throw Error(ErrorCode::InvalidComplex, b);
  return s.faces_of_dim(d);
}

Fan tailfan(const PolyhedralComplex& s) { return s.tailfan(); }

std::string to_string(const Cone& c) {
  std::ostringstream os;
  os << "Cone[";
  for (std::size_t i = 0; i < c.generators().size(); ++i) os << (i ? "," : "") << to_string(c.generators()[i]);
  os << ']';
  return os.str();
}

std::string to_string(const Polyhedron& p) {
  if (p.is_empty()) return "Empty";
  std::ostringstream os;
  os << "conv[";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) os << (i ? "," : "") << to_string(p.vertices()[i]);
  os << "]+" << to_string(p.tail());
  return os.str();
}

}  // namespace tchow
