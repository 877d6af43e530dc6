// SPDX-License-Identifier: Apache-2.0

#include "chow.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace tchow {

namespace {

// The primitive vector of the dual of `lat` on the ray through w, as a
// representative in N_Q: the pairings with the basis of `lat` have gcd 1.
RatVec dual_step(const Sublattice& lat, const RatVec& w) {
  RatVec vals;
  for (const IntVec& m : lat.basis()) vals.push_back(dot(m, w));
  Rat g = rational_gcd(vals);
  if (g == 0) throw Error(ErrorCode::InvalidArgument, "step direction lies in the face span");
  RatVec out = w;
  for (Rat& c : out) c /= g;
  return out;
}

bool outside_span(const std::vector<RatVec>& span, const RatVec& w) {
  std::vector<RatVec> rows = span;
  rows.push_back(w);
  return rank_of(rows) > rank_of(span);
}

RatVec difference(const RatVec& a, const RatVec& b) {
  RatVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// A vector of G pointing away from F and outside the affine hull of F.
RatVec outward_direction(const Polyhedron& f, const Polyhedron& g) {
  const std::vector<RatVec> span = f.direction_span();
  const RatVec& v = f.vertices().front();
  for (const RatVec& q : g.vertices()) {
    RatVec w = difference(q, v);
    if (outside_span(span, w)) return w;
  }
  for (const IntVec& r : g.tail().generators())
    if (outside_span(span, to_rat(r))) return to_rat(r);
  throw Error(ErrorCode::InvalidArgument, to_string(f) + " is not a facet of " + to_string(g));
}

RatVec outward_direction(const Cone& tau, const Cone& sigma) {
  const std::vector<RatVec> span = tau.span_basis();
  for (const IntVec& r : sigma.generators())
    if (outside_span(span, to_rat(r))) return to_rat(r);
  throw Error(ErrorCode::InvalidArgument, to_string(tau) + " is not a facet of " + to_string(sigma));
}

IntVec pairings(const Sublattice& lat, const RatVec& step) {
  IntVec out;
  for (const IntVec& m : lat.basis()) {
    Rat c = dot(m, step);
    if (c.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "non-integral pairing with a quotient generator");
    out.push_back(c.get_num());
  }
  return out;
}

// Generators of A_k with their column indices.
struct Columns {
  std::vector<CycleGenerator> gens;
  std::map<CycleGenerator, std::size_t> index;

  Columns(const MarkedFansyDivisor& x, int k) : gens(enumerate_generators(x, k).ordered()) {
    for (std::size_t i = 0; i < gens.size(); ++i) index.emplace(gens[i], i);
  }
  std::size_t of(const CycleGenerator& g) const {
    auto it = index.find(g);
    if (it == index.end()) throw Error(ErrorCode::InvalidArgument, "cycle is not a generator in this degree");
    return it->second;
  }
  std::size_t v(std::size_t p, const Polyhedron& f) const { return of({GeneratorKind::V, f.tail(), p, f}); }
  std::size_t r(const Cone& c) const { return of({GeneratorKind::R, c, 0, Polyhedron()}); }
  std::size_t t(const Cone& c) const { return of({GeneratorKind::T, c, 0, Polyhedron()}); }
};

void check_source(const MarkedFansyDivisor& x, int k, const CycleGenerator& src, GeneratorKind kind) {
  if (k < 0 || k > static_cast<int>(x.rank())) throw Error(ErrorCode::OutOfRange, "relations need 0 <= k <= n");
  GeneratorSets up = enumerate_generators(x, k + 1);
  const std::vector<CycleGenerator>& pool = kind == GeneratorKind::V ? up.v : kind == GeneratorKind::R ? up.r : up.t;
  if (src.kind != kind || std::find(pool.begin(), pool.end(), src) == pool.end())
    throw Error(ErrorCode::InvalidArgument, describe(src, x) + " is not a " + kind_name(kind) +
                                                " generator in degree " + std::to_string(k + 1));
}

// Faces of S_p of dimension d containing f.
std::vector<Polyhedron> cofaces(const MarkedFansyDivisor& x, std::size_t p, const Polyhedron& f, int d) {
  std::vector<Polyhedron> out;
  for (const ComplexFace& g : x.complex(p).faces_of_dim(d))
    if (g.face.contains(f)) out.push_back(g.face);
  return out;
}

std::vector<Polyhedron> vertices_over(const MarkedFansyDivisor& x, const Cone& tau, std::size_t p) {
  std::vector<Polyhedron> out;
  for (const Polyhedron& f : faces_over(x, tau, p))
    if (f.dim() == static_cast<int>(tau.dim())) out.push_back(f);
  return out;
}

RelationBlock block_V(const MarkedFansyDivisor& x, const Columns& cols, const CycleGenerator& src) {
  const Polyhedron& f = src.face;
  const std::size_t n = x.rank();
  Sublattice lat = face_character_lattice(f.direction_span(), f.vertices().front(), n);
  RelationBlock b{src, 0, std::vector<IntVec>(lat.rank(), IntVec(cols.gens.size()))};
  for (const Polyhedron& g : cofaces(x, src.point, f, f.dim() + 1)) {
    IntVec c = pairings(lat, dual_step(lat, outward_direction(f, g)));
    std::size_t col;
    Int mult = 1;
    if (x.is_marked(g.tail())) {
      Int s = s_sigma(x, g.tail()), mu = mu_of_face(g);
      if (s % mu != 0)
        throw Error(ErrorCode::NonIntegralRedirect, "s = " + s.get_str() + " is not divisible by mu = " +
                                                        mu.get_str() + " for " + to_string(g));
      mult = s / mu;
      col = cols.t(g.tail());
    } else {
      col = cols.v(src.point, g);
    }
    for (std::size_t i = 0; i < c.size(); ++i) b.rows[i][col] += c[i] * mult;
  }
  return b;
}

RelationBlock block_R(const MarkedFansyDivisor& x, const Columns& cols, const CycleGenerator& src) {
  const Cone& tau = src.cone;
  const std::size_t n = x.rank(), np = x.points().size(), inf = x.basepoint();
  RelationBlock b{src, np - 1, {}};

  std::vector<std::vector<Polyhedron>> over(np);
  for (std::size_t p = 0; p < np; ++p) over[p] = vertices_over(x, tau, p);

  for (std::size_t p = 0; p < np; ++p) {
    if (p == inf) continue;
    IntVec row(cols.gens.size());
    for (const Polyhedron& f : over[p]) row[cols.v(p, f)] += mu_of_face(f);
    for (const Polyhedron& f : over[inf]) row[cols.v(inf, f)] -= mu_of_face(f);
    b.rows.push_back(row);
  }

  Sublattice lat = perp_lattice(tau.span_basis(), n);
  std::vector<IntVec> chars(lat.rank(), IntVec(cols.gens.size()));
  for (std::size_t p = 0; p < np; ++p)
    for (const Polyhedron& f : over[p]) {
      Int mu = mu_of_face(f);
      const std::size_t col = cols.v(p, f);
      for (std::size_t i = 0; i < lat.rank(); ++i) {
        Rat c = dot(lat.basis()[i], f.vertices().front()) * mu;
        chars[i][col] += c.get_num();
      }
    }
  for (const Cone& sigma : x.tailfan().cones(tau.dim() + 1)) {
    if (!tau.is_face_of(sigma) || x.is_marked(sigma)) continue;
    IntVec c = pairings(lat, dual_step(lat, outward_direction(tau, sigma)));
    const std::size_t col = cols.r(sigma);
    for (std::size_t i = 0; i < c.size(); ++i) chars[i][col] += c[i];
  }
  b.rows.insert(b.rows.end(), chars.begin(), chars.end());
  return b;
}

RelationBlock block_T(const MarkedFansyDivisor& x, const Columns& cols, const CycleGenerator& src) {
  const Cone& tau = src.cone;
  Sublattice lat = contracted_character_lattice(x, tau);
  RelationBlock b{src, 0, std::vector<IntVec>(lat.rank(), IntVec(cols.gens.size()))};
  for (const Cone& sigma : x.tailfan().cones(tau.dim() + 1)) {
    if (!tau.is_face_of(sigma)) continue;
    IntVec c = pairings(lat, dual_step(lat, outward_direction(tau, sigma)));
    const std::size_t col = cols.t(sigma);
    for (std::size_t i = 0; i < c.size(); ++i) b.rows[i][col] += c[i];
  }
  return b;
}

ChowPresentation assemble(int k, std::vector<CycleGenerator> gens, std::vector<RelationBlock> blocks) {
  ChowPresentation out;
  out.k = k;
  out.generators = std::move(gens);
  out.blocks = std::move(blocks);
  const std::size_t g = out.generators.size();
  out.relations = IntMatrix(0, g);
  for (const RelationBlock& b : out.blocks)
    for (const IntVec& r : b.rows) out.relations.append_row(r);

  SmithDecomposition sd = smith_decompose(out.relations);
  out.smith.rank = sd.diagonal.size();
  out.smith.free_rank = g - sd.diagonal.size();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < sd.diagonal.size(); ++i)
    if (sd.diagonal[i] != 1) {
      out.smith.invariants.push_back(sd.diagonal[i]);
      keep.push_back(i);
    }
  for (std::size_t i = sd.diagonal.size(); i < g; ++i) keep.push_back(i);
  for (std::size_t j = 0; j < g; ++j) {
    IntVec cls;
    for (std::size_t i : keep) cls.push_back(sd.v(j, i));
    for (std::size_t i = 0; i < out.smith.invariants.size(); ++i)
      mpz_fdiv_r(cls[i].get_mpz_t(), cls[i].get_mpz_t(), out.smith.invariants[i].get_mpz_t());
    out.class_map.push_back(std::move(cls));
  }
  return out;
}

}  // namespace

IntVec ChowPresentation::class_of(const IntVec& cycle) const {
  if (cycle.size() != generators.size()) throw Error(ErrorCode::RankMismatch, "cycle length differs from generator count");
  const std::size_t width = smith.invariants.size() + smith.free_rank;
  IntVec out(width);
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    if (cycle[j] == 0) continue;
    if (j >= class_map.size() || class_map[j].size() != width)
      throw Error(ErrorCode::InvalidArgument, "class map is incomplete");
    for (std::size_t i = 0; i < width; ++i) out[i] += cycle[j] * class_map[j][i];
  }
  for (std::size_t i = 0; i < smith.invariants.size(); ++i) {
    mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), smith.invariants[i].get_mpz_t());
  }
  return out;
}

RatVec face_step(const Polyhedron& f, const Polyhedron& g) {
  Sublattice lat = face_character_lattice(f.direction_span(), f.vertices().front(), f.ambient_rank());
  return dual_step(lat, outward_direction(f, g));
}

RatVec cone_step(const Cone& tau, const Cone& sigma) {
  Sublattice lat = perp_lattice(tau.span_basis(), tau.ambient_rank());
  return dual_step(lat, outward_direction(tau, sigma));
}

RelationBlock relation_block_V(const MarkedFansyDivisor& x, int k, const CycleGenerator& f) {
  check_source(x, k, f, GeneratorKind::V);
  return block_V(x, Columns(x, k), f);
}

RelationBlock relation_block_R(const MarkedFansyDivisor& x, int k, const CycleGenerator& tau) {
  check_source(x, k, tau, GeneratorKind::R);
  return block_R(x, Columns(x, k), tau);
}

RelationBlock relation_block_T(const MarkedFansyDivisor& x, int k, const CycleGenerator& tau) {
  check_source(x, k, tau, GeneratorKind::T);
  return block_T(x, Columns(x, k), tau);
}

ChowPresentation presentation(const MarkedFansyDivisor& x, int k) {
  const int n = static_cast<int>(x.rank());
  if (k < 0 || k > n + 1) throw Error(ErrorCode::OutOfRange, "k must lie in [0, n+1]");
  Columns cols(x, k);
  std::vector<RelationBlock> blocks;
  if (k <= n) {
    GeneratorSets up = enumerate_generators(x, k + 1);
    for (const CycleGenerator& g : up.v) blocks.push_back(block_V(x, cols, g));
    for (const CycleGenerator& g : up.r) blocks.push_back(block_R(x, cols, g));
    for (const CycleGenerator& g : up.t) blocks.push_back(block_T(x, cols, g));
  }
  return assemble(k, cols.gens, std::move(blocks));
}

ChowPresentation fulton_sturmfels(const Fan& fan, int k) {
  if (!fan.is_complete()) throw Error(ErrorCode::IncompleteFan, "the toric presentation needs a complete fan");
  const int d = static_cast<int>(fan.ambient_rank());
  if (k < 0 || k > d) throw Error(ErrorCode::OutOfRange, "k must lie in [0, rank]");
  std::vector<CycleGenerator> gens;
  std::map<Cone, std::size_t> index;
  for (const Cone& c : fan.cones(d - k)) {
    index.emplace(c, gens.size());
    gens.push_back({GeneratorKind::R, c, 0, Polyhedron()});
  }
  std::vector<RelationBlock> blocks;
  if (k < d)
    for (const Cone& tau : fan.cones(d - k - 1)) {
      Sublattice lat = perp_lattice(tau.span_basis(), d);
      RelationBlock b{{GeneratorKind::R, tau, 0, Polyhedron()}, 0, std::vector<IntVec>(lat.rank(), IntVec(gens.size()))};
      for (const Cone& sigma : fan.cones(d - k)) {
        if (!tau.is_face_of(sigma)) continue;
        IntVec c = pairings(lat, dual_step(lat, outward_direction(tau, sigma)));
        for (std::size_t i = 0; i < c.size(); ++i) b.rows[i][index.at(sigma)] += c[i];
      }
      blocks.push_back(std::move(b));
    }
  return assemble(k, std::move(gens), std::move(blocks));
}

std::vector<NestedFacePair> nested_face_pairs(const MarkedFansyDivisor& x) {
  std::vector<NestedFacePair> out;
  for (std::size_t p = 0; p < x.points().size(); ++p) {
    const auto& faces = x.complex(p).faces();
    for (const ComplexFace& g : faces) {
      const Cone& tau = g.face.tail();
      if (g.face.dim() != static_cast<int>(tau.dim())) continue;
      for (const ComplexFace& h : faces) {
        const Cone& sigma = h.face.tail();
        if (h.face.dim() != g.face.dim() + 1 || h.face.dim() != static_cast<int>(sigma.dim())) continue;
        if (!h.face.contains(g.face)) continue;
        NestedFacePair pr{p, g.face, h.face, face_step(g.face, h.face), cone_step(tau, sigma), false};
        const Int mg = mu_of_face(g.face), mh = mu_of_face(h.face);
        for (Rat& c : pr.lhs) c *= mg;
        for (Rat& c : pr.rhs) c *= mh;
        std::vector<RatVec> span = tau.span_basis();
        RatVec diff = difference(pr.lhs, pr.rhs);
        pr.holds = !outside_span(span, diff);
        out.push_back(std::move(pr));
      }
    }
  }
  return out;
}

}  // namespace tchow
