// SPDX-License-Identifier: Apache-2.0

#include "fansy.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace tchow {

namespace {

void pad_points(const Fan& sigma, std::vector<std::string>& points,
                std::vector<PolyhedralComplex>& complexes) {
  int next = 1;
  while (points.size() < 2) {
    std::string label = "aux" + std::to_string(next++);
    if (std::find(points.begin(), points.end(), label) != points.end()) continue;
    points.push_back(label);
    complexes.push_back(PolyhedralComplex::from_fan(sigma));
  }
}

Fan fan_of_tails(const PolyhedralComplex& s) {
  std::vector<Cone> tails;
  for (const ComplexFace& f : s.faces()) tails.push_back(f.face.tail());
  return Fan(s.ambient_rank(), tails);
}

}  // namespace

MarkedFansyDivisor::MarkedFansyDivisor(Fan tailfan, std::vector<std::string> points,
                                       std::vector<PolyhedralComplex> complexes, std::vector<Cone> marked)
    : rank_(tailfan.ambient_rank()),
      tailfan_(std::move(tailfan)),
      points_(std::move(points)),
      complexes_(std::move(complexes)),
      marked_(std::move(marked)),
      given_points_(points_.size()) {
  if (points_.size() != complexes_.size())
    throw Error(ErrorCode::InvalidArgument, "one subdivision per point label is required");
  std::set<std::string> seen(points_.begin(), points_.end());
  if (seen.size() != points_.size()) throw Error(ErrorCode::InvalidArgument, "duplicate point label");
  for (const PolyhedralComplex& s : complexes_)
    if (s.ambient_rank() != rank_) throw Error(ErrorCode::RankMismatch, "subdivision rank differs from tailfan rank");
  for (const Cone& c : marked_)
    if (c.ambient_rank() != rank_) throw Error(ErrorCode::RankMismatch, "marked cone rank differs from tailfan rank");
  pad_points(tailfan_, points_, complexes_);
  std::sort(marked_.begin(), marked_.end());
  marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
}

MarkedFansyDivisor::MarkedFansyDivisor(std::size_t rank, std::vector<std::string> points,
                                       std::vector<PolyhedralComplex> complexes, std::vector<Cone> marked)
    : MarkedFansyDivisor(complexes.empty() ? throw Error(ErrorCode::InvalidArgument,
                                                         "at least one subdivision is needed to fix the tailfan")
                                           : fan_of_tails(complexes.front()),
                         std::move(points), complexes, std::move(marked)) {
  if (rank != rank_) throw Error(ErrorCode::RankMismatch, "declared rank differs from subdivision rank");
}

bool MarkedFansyDivisor::is_marked(const Cone& c) const {
  return std::binary_search(marked_.begin(), marked_.end(), c);
}

std::size_t MarkedFansyDivisor::point_index(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) throw Error(ErrorCode::OutOfRange, "unknown point label " + label);
  return static_cast<std::size_t>(it - points_.begin());
}

std::vector<std::string> MarkedFansyDivisor::special_points() const {
  PolyhedralComplex trivial = PolyhedralComplex::from_fan(tailfan_);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!(complexes_[i] == trivial)) out.push_back(points_[i]);
  return out;
}

MarkedFansyDivisor MarkedFansyDivisor::with_basepoint(const std::string& label) const {
  MarkedFansyDivisor out = *this;
  std::size_t i = point_index(label);
  std::rotate(out.points_.begin() + i, out.points_.begin() + i + 1, out.points_.end());
  std::rotate(out.complexes_.begin() + i, out.complexes_.begin() + i + 1, out.complexes_.end());
  return out;
}

MarkedFansyDivisor MarkedFansyDivisor::with_generic_point(const std::string& label) const {
  if (std::find(points_.begin(), points_.end(), label) != points_.end())
    throw Error(ErrorCode::InvalidArgument, "point label already present: " + label);
  MarkedFansyDivisor out = *this;
  out.points_.insert(out.points_.end() - 1, label);
  out.complexes_.insert(out.complexes_.end() - 1, PolyhedralComplex::from_fan(tailfan_));
  return out;
}

ValidationReport validate(const MarkedFansyDivisor& x) {
  ValidationReport rep;
  auto add = [&rep](int c, std::string d) { rep.violations.push_back({c, std::move(d)}); };
  const Fan& sigma = x.tailfan();
  const std::size_t n = x.rank();

  for (const std::string& v : sigma.violations()) add(1, "tailfan: " + v);
  if (!sigma.is_complete()) add(1, "tailfan is not complete");
  for (std::size_t p = 0; p < x.points().size(); ++p) {
    const std::string& label = x.points()[p];
    std::vector<std::string> bad = x.complex(p).violations();
    for (const std::string& v : bad) add(1, "subdivision over " + label + ": " + v);
    if (!bad.empty()) continue;
    try {
      if (!(x.complex(p).tailfan() == sigma))
        add(1, "subdivision over " + label + " has a different tailfan");
    } catch (const Error& e) {
      add(1, "subdivision over " + label + ": " + e.what());
    }
  }
  if (!rep.ok()) return rep;

  for (const Cone& tau : x.marked()) {
    if (!sigma.contains(tau)) {
      add(0, "marked cone " + to_string(tau) + " is not a cone of the tailfan");
      continue;
    }
    for (const Cone& s : sigma.all_cones())
      if (s.dim() > tau.dim() && s.contains(tau) && !x.is_marked(s))
        add(4, "marked cone " + to_string(tau) + " lies in unmarked cone " + to_string(s));
    for (std::size_t p = 0; p < x.points().size(); ++p) {
      std::size_t count = faces_over(x, tau, p).size();
      if (count != 1)
        add(0, "marked cone " + to_string(tau) + " has " + std::to_string(count) + " faces over " +
                   x.points()[p]);
    }
  }
  if (!rep.ok()) return rep;

  for (const DegreePiece& piece : deg_xi(x)) {
    const Cone& s = piece.sigma;
    bool inside = s.contains(piece.degree.tail());
    for (const RatVec& v : piece.degree.vertices()) inside = inside && s.contains(v);
    // the same test through minimum evaluations on the dual generators
    bool by_min = true;
    for (const IntVec& u : s.facet_normals()) {
      Rat total = 0;
      for (std::size_t p = 0; p < x.points().size(); ++p) {
        Polyhedron f = unique_face_over(x, s, p);
        Rat lo = dot(u, f.vertices().front());
        for (const RatVec& v : f.vertices()) lo = std::min(lo, dot(u, v));
        total += lo;
      }
      by_min = by_min && total >= 0;
    }
    if (inside != by_min) add(0, "degree containment tests disagree on " + to_string(s));
    if (!inside) add(2, "degree over " + to_string(s) + " is not contained in the cone");
    if (piece.degree.contains(RatVec(n)))
      add(2, "degree over " + to_string(s) + " contains the origin");
    for (const Cone& tau : s.faces()) {
      bool meets = !piece.degree.intersect(Polyhedron::from_cone(tau)).is_empty();
      if (meets != x.is_marked(tau))
        add(3, "face " + to_string(tau) + " of " + to_string(s) + (meets ? " meets" : " misses") +
                   " the degree but is " + (x.is_marked(tau) ? "marked" : "unmarked"));
    }
  }
  return rep;
}

bool CycleGenerator::operator==(const CycleGenerator& o) const {
  return kind == o.kind && cone == o.cone && point == o.point && face == o.face;
}

bool CycleGenerator::operator<(const CycleGenerator& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (kind == GeneratorKind::V) {
    if (point != o.point) return point < o.point;
    return face < o.face;
  }
  return cone < o.cone;
}

std::string kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::V: return "V";
    case GeneratorKind::R: return "R";
    case GeneratorKind::T: return "T";
  }
  return "?";
}

std::string describe(const CycleGenerator& g, const MarkedFansyDivisor& x) {
  if (g.kind == GeneratorKind::V) return "V[" + x.points().at(g.point) + "]" + to_string(g.face);
  return kind_name(g.kind) + to_string(g.cone);
}

std::vector<CycleGenerator> GeneratorSets::ordered() const {
  std::vector<CycleGenerator> out = v;
  out.insert(out.end(), r.begin(), r.end());
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

GeneratorSets enumerate_generators(const MarkedFansyDivisor& x, int k) {
  const int n = static_cast<int>(x.rank());
  if (k < 0 || k > n + 1) throw Error(ErrorCode::OutOfRange, "k must lie in [0, n+1]");
  GeneratorSets out;
  const int rdim = n + 1 - k, fdim = n - k;
  for (const Cone& c : x.tailfan().all_cones()) {
    if (static_cast<int>(c.dim()) == rdim && !x.is_marked(c))
      out.r.push_back({GeneratorKind::R, c, 0, Polyhedron()});
    if (static_cast<int>(c.dim()) == fdim && x.is_marked(c))
      out.t.push_back({GeneratorKind::T, c, 0, Polyhedron()});
  }
  if (fdim >= 0)
    for (std::size_t p = 0; p < x.points().size(); ++p)
      for (const ComplexFace& f : x.complex(p).faces_of_dim(fdim))
        if (!x.is_marked(f.face.tail())) out.v.push_back({GeneratorKind::V, f.face.tail(), p, f.face});
  std::sort(out.v.begin(), out.v.end());
  std::sort(out.r.begin(), out.r.end());
  std::sort(out.t.begin(), out.t.end());
  return out;
}

std::vector<Polyhedron> faces_over(const MarkedFansyDivisor& x, const Cone& tau, std::size_t p) {
  std::vector<Polyhedron> out;
  for (const ComplexFace& f : x.complex(p).faces())
    if (f.face.tail() == tau) out.push_back(f.face);
  return out;
}

Polyhedron unique_face_over(const MarkedFansyDivisor& x, const Cone& sigma, std::size_t p) {
  if (!x.is_marked(sigma)) throw Error(ErrorCode::NotMarked, "cone " + to_string(sigma) + " is not marked");
  std::vector<Polyhedron> fs = faces_over(x, sigma, p);
  if (fs.size() != 1)
    throw Error(ErrorCode::NonUniqueFace, std::to_string(fs.size()) + " faces over " + to_string(sigma) +
                                              " in the subdivision over " + x.points().at(p));
  return fs.front();
}

Int mu_of_face(const Polyhedron& f) {
  if (f.is_empty()) throw Error(ErrorCode::EmptyPolyhedron, "mu of the empty face");
  std::vector<RatVec> span = f.tail().span_basis();
  Sublattice m = perp_lattice(span, f.ambient_rank());
  return lattice_index(face_character_lattice(span, f.vertices().front(), f.ambient_rank()), m);
}

Sublattice contracted_character_lattice(const MarkedFansyDivisor& x, const Cone& sigma) {
  std::vector<RatVec> verts;
  for (std::size_t p = 0; p < x.points().size(); ++p)
    verts.push_back(unique_face_over(x, sigma, p).vertices().front());
  return orbit_character_lattice(sigma.span_basis(), verts, x.rank());
}

Int s_sigma(const MarkedFansyDivisor& x, const Cone& sigma) {
  Sublattice w = contracted_character_lattice(x, sigma);
  return lattice_index(w, perp_lattice(sigma.span_basis(), x.rank()));
}

std::vector<DegreePiece> deg_xi(const MarkedFansyDivisor& x) {
  std::vector<DegreePiece> out;
  for (const Cone& s : x.marked()) {
    if (s.dim() != x.rank()) continue;
    Polyhedron deg = Polyhedron::from_generators(x.rank(), {RatVec(x.rank())}, {});
    for (std::size_t p = 0; p < x.points().size(); ++p) deg = minkowski_sum(deg, unique_face_over(x, s, p));
    out.push_back({s, deg});
  }
  return out;
}

std::vector<Cone> derived_marking(const MarkedFansyDivisor& x) {
  std::set<Cone> out;
  for (const DegreePiece& piece : deg_xi(x))
    for (const Cone& tau : piece.sigma.faces())
      if (!piece.degree.intersect(Polyhedron::from_cone(tau)).is_empty()) out.insert(tau);
  return {out.begin(), out.end()};
}

}  // namespace tchow
