// SPDX-License-Identifier: Apache-2.0

#include "build.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "errors.hpp"

namespace tchow {

namespace {

const char* const kInfinity = "∞";

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// s(c cap {t = level}) for a cone c in rank n+1 with t the last coordinate.
Polyhedron slice(const Cone& c, std::size_t n, long level) {
  std::vector<std::pair<RatVec, Rat>> ineqs, eqs;
  auto split = [&](const IntVec& a) {
    RatVec head(a.begin(), a.begin() + n);
    return std::make_pair(head, Rat(-a[n] * level));
  };
  for (const IntVec& a : c.facet_normals()) ineqs.push_back(split(a));
  for (const IntVec& e : c.equations()) eqs.push_back(split(e));
  return Polyhedron::from_inequalities(n, ineqs, eqs);
}

Cone section_at_zero(const Cone& c, std::size_t n) {
  std::vector<RatVec> ineqs, eqs;
  for (const IntVec& a : c.facet_normals()) ineqs.emplace_back(a.begin(), a.begin() + n);
  for (const IntVec& e : c.equations()) eqs.emplace_back(e.begin(), e.begin() + n);
  return Cone::from_inequalities(n, ineqs, eqs);
}

struct RayData {
  long a = 0;        // whole fiber up to a
  long b = 0;        // line up to b (when line is set)
  std::string line;  // empty when the filtration jumps straight to zero
};

RayData parse_filtration(const RayFiltration& f) {
  if (f.steps.empty() || f.steps.size() > 2 || f.steps[0].label != "E")
    throw Error(ErrorCode::InvalidArgument,
                "filtration on " + to_string(f.ray) + " must be [[j,\"E\"]] or [[j,\"E\"],[j2,line]]");
  RayData d;
  d.a = f.steps[0].j;
  if (f.steps.size() == 2) {
    d.line = f.steps[1].label;
    d.b = f.steps[1].j;
    if (d.line == "E" || d.line.empty())
      throw Error(ErrorCode::InvalidArgument, "second filtration step must name a line");
    if (d.b <= d.a) throw Error(ErrorCode::InvalidArgument, "filtration steps must increase");
  }
  return d;
}

struct LocalSplit {
  Cone sigma;
  std::string l1, l2;
  IntVec u1, u2;
};

class BundleData {
 public:
  explicit BundleData(const KlyachkoBundle& b) : n_(b.base.ambient_rank()) {
    if (!b.base.violations().empty() || !b.base.is_complete())
      throw Error(ErrorCode::IncompleteFan, "base fan must be a complete fan");
    for (const RayFiltration& f : b.filtrations) {
      if (f.ray.size() != n_) throw Error(ErrorCode::RankMismatch, "filtration ray has wrong rank");
      IntVec r = primitive_direction(f.ray);
      if (!rays_.emplace(r, parse_filtration(f)).second)
        throw Error(ErrorCode::InvalidArgument, "two filtrations on ray " + to_string(r));
      const std::string& l = rays_[r].line;
      if (!l.empty() && std::find(points_.begin(), points_.end(), l) == points_.end()) points_.push_back(l);
    }
    for (const Cone& c : b.base.cones(1))
      if (!rays_.count(c.generators().front()))
        throw Error(ErrorCode::InvalidArgument, "missing filtration for ray " + to_string(c.generators().front()));
    for (const Cone& s : b.base.maximal_cones()) splits_.push_back(split(s));
  }

  const std::vector<std::string>& points() const { return points_; }
  const std::vector<LocalSplit>& splits() const { return splits_; }
  const RayData& ray(const IntVec& r) const { return rays_.at(r); }
  std::size_t rank() const { return n_; }

  std::size_t order(const std::string& label) const {
    return static_cast<std::size_t>(std::find(points_.begin(), points_.end(), label) - points_.begin());
  }

 private:
  LocalSplit split(const Cone& s) const {
    const std::vector<IntVec>& rays = s.generators();
    if (rays.size() != n_) throw Error(ErrorCode::NonSmoothBase, "cone " + to_string(s) + " is not simplicial");
    if (abs(determinant(IntMatrix::from_rows(rays, n_))) != 1)
      throw Error(ErrorCode::NonSmoothBase, "cone " + to_string(s) + " is not unimodular");
    std::vector<std::string> lines;
    for (const IntVec& r : rays) {
      const std::string& l = rays_.at(r).line;
      if (!l.empty() && std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
    }
    if (lines.size() > 2)
      throw Error(ErrorCode::InconsistentFiltrations,
                  "more than two lines appear on the rays of " + to_string(s));
    std::sort(lines.begin(), lines.end(),
              [this](const std::string& x, const std::string& y) { return order(x) < order(y); });
    LocalSplit out;
    out.sigma = s;
    if (!lines.empty()) out.l1 = lines[0];
    if (lines.size() == 2) out.l2 = lines[1];
    RatVec c1, c2;
    for (const IntVec& r : rays) {
      const RayData& d = rays_.at(r);
      bool first = !d.line.empty() && d.line == out.l1;
      bool second = !d.line.empty() && d.line == out.l2;
      c1.emplace_back(first ? d.b : d.a);
      c2.emplace_back(second ? d.b : d.a);
    }
    // <u, r_i> = c_i: solve against the columns of the ray matrix
    std::vector<RatVec> cols(n_, RatVec(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) cols[j][i] = rays[i][j];
    RatVec x1, x2;
    if (!solve_in_span(cols, c1, x1) || !solve_in_span(cols, c2, x2))
      throw Error(ErrorCode::InconsistentFiltrations, "no characters fit the filtrations on " + to_string(s));
    out.u1 = primitive(x1).w;
    out.u2 = primitive(x2).w;
    if (primitive(x1).mu != 1 || primitive(x2).mu != 1)
      throw Error(ErrorCode::InconsistentFiltrations, "non-integral characters on " + to_string(s));
    return out;
  }

  std::size_t n_;
  std::map<IntVec, RayData> rays_;
  std::vector<std::string> points_;
  std::vector<LocalSplit> splits_;
};

IntVec difference(const IntVec& a, const IntVec& b) {
  IntVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

HIJClass class_on(const IntVec& w, const Cone& tau) {
  bool pos = false, neg = false;
  for (const IntVec& g : tau.generators()) {
    int s = sgn(dot(w, g));
    pos |= s > 0;
    neg |= s < 0;
  }
  if (pos && neg) return HIJClass::I;
  if (pos || neg) return HIJClass::J;
  return HIJClass::H;
}

// sigma cap {<sign * w, v> >= level}
Polyhedron cut(const Cone& sigma, const IntVec& w, int sign, long level) {
  std::vector<std::pair<RatVec, Rat>> ineqs;
  for (const IntVec& a : sigma.facet_normals()) ineqs.emplace_back(to_rat(a), Rat(0));
  RatVec ww = to_rat(w);
  for (Rat& x : ww) x *= sign;
  ineqs.emplace_back(ww, Rat(level));
  return Polyhedron::from_inequalities(sigma.ambient_rank(), ineqs);
}

}  // namespace

Fan fan_from_rays(std::size_t rank, const std::vector<IntVec>& rays,
                  const std::vector<std::vector<std::size_t>>& cones) {
  std::vector<Cone> cs;
  for (const auto& idx : cones) {
    std::vector<IntVec> g;
    for (std::size_t i : idx) {
      if (i >= rays.size()) throw Error(ErrorCode::OutOfRange, "cone refers to a missing ray");
      g.push_back(rays[i]);
    }
    cs.emplace_back(rank, g);
  }
  return Fan(rank, cs);
}

MarkedFansyDivisor downgrade(const Fan& input, const std::optional<IntMatrix>& basis_change) {
  const std::size_t d = input.ambient_rank();
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "downgrade needs a fan of rank at least 2");
  Fan fan = input;
  if (basis_change) {
    const IntMatrix& b = *basis_change;
    if (b.rows() != d || b.cols() != d || abs(determinant(b)) != 1)
      throw Error(ErrorCode::InvalidArgument, "basis change must be a unimodular square matrix");
    std::vector<Cone> moved;
    for (const Cone& c : input.maximal_cones()) {
      std::vector<IntVec> g;
      for (const IntVec& x : c.generators()) {
        IntVec y(d);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) y[i] += b(i, j) * x[j];
        g.push_back(y);
      }
      moved.emplace_back(d, g);
    }
    fan = Fan(d, moved);
  }
  if (!fan.violations().empty() || !fan.is_complete())
    throw Error(ErrorCode::IncompleteFan, "downgrade needs a complete fan");
  const std::size_t n = d - 1;
  std::vector<Polyhedron> zero, inf;
  for (const Cone& c : fan.maximal_cones()) {
    bool pos = false, neg = false;
    for (const IntVec& g : c.generators()) {
      pos |= g[n] > 0;
      neg |= g[n] < 0;
    }
    if (pos) zero.push_back(slice(c, n, 1));
    if (neg) inf.push_back(slice(c, n, -1));
  }
  std::vector<Cone> marked;
  for (const Cone& c : fan.all_cones()) {
    bool pos = false, neg = false;
    for (const IntVec& g : c.generators()) {
      pos |= g[n] > 0;
      neg |= g[n] < 0;
    }
    if (pos && neg) marked.push_back(section_at_zero(c, n));
  }
  std::vector<PolyhedralComplex> complexes{PolyhedralComplex(n, zero), PolyhedralComplex(n, inf)};
  return MarkedFansyDivisor(n, {"0", kInfinity}, complexes, marked);
}

std::string hij_name(HIJClass c) {
  switch (c) {
    case HIJClass::H: return "H";
    case HIJClass::I: return "I";
    case HIJClass::J: return "J";
  }
  return "?";
}

std::vector<std::string> bundle_points(const KlyachkoBundle& b) { return BundleData(b).points(); }

HIJClass classify_HIJ(const KlyachkoBundle& b, const Cone& tau) {
  BundleData data(b);
  if (!b.base.contains(tau)) throw Error(ErrorCode::OutOfRange, "cone " + to_string(tau) + " is not in the base fan");
  std::optional<HIJClass> found;
  for (const LocalSplit& s : data.splits()) {
    if (!s.sigma.contains(tau)) continue;
    HIJClass c = class_on(difference(s.u1, s.u2), tau);
    if (found && *found != c)
      throw Error(ErrorCode::InconsistentFiltrations, "H/I/J class of " + to_string(tau) + " depends on the chart");
    found = c;
  }
  return *found;
}

MarkedFansyDivisor bundle_rank2(const KlyachkoBundle& b) {
  BundleData data(b);
  const std::size_t n = data.rank();
  const std::vector<std::string>& pts = data.points();
  std::vector<std::vector<Polyhedron>> cells(pts.size());
  std::vector<Cone> tails;
  for (const LocalSplit& s : data.splits()) {
    IntVec w = difference(s.u1, s.u2);
    Polyhedron delta1 = cut(s.sigma, w, 1, 1), nabla1 = cut(s.sigma, w, -1, -1);
    Polyhedron delta2 = cut(s.sigma, w, -1, 1), nabla2 = cut(s.sigma, w, 1, -1);
    Polyhedron half1 = cut(s.sigma, w, 1, 0), half2 = cut(s.sigma, w, -1, 0);
    for (const Polyhedron* h : {&half1, &half2})
      if (h->dim() == static_cast<int>(n)) tails.push_back(h->tail());
    for (std::size_t p = 0; p < pts.size(); ++p) {
      std::vector<const Polyhedron*> mine;
      if (pts[p] == s.l1)
        mine = {&delta1, &nabla1};
      else if (pts[p] == s.l2)
        mine = {&delta2, &nabla2};
      else
        mine = {&half1, &half2};
      for (const Polyhedron* c : mine)
        if (c->dim() == static_cast<int>(n)) cells[p].push_back(*c);
    }
  }
  Fan refined(n, tails);
  std::vector<PolyhedralComplex> complexes;
  for (const auto& cs : cells) complexes.emplace_back(n, cs);
  std::vector<Cone> marked;
  for (const Cone& tau : refined.all_cones()) {
    bool kept = b.base.contains(tau);
    for (const IntVec& r : tau.generators()) kept = kept && data.ray(r).line.empty();
    if (!kept) marked.push_back(tau);
  }
  return MarkedFansyDivisor(refined, pts, complexes, marked);
}

Counts predicted_counts(const KlyachkoBundle& b, int k) {
  BundleData data(b);
  const int n = static_cast<int>(data.rank());
  if (k < 0 || k > n) throw Error(ErrorCode::OutOfRange, "predicted counts need 0 <= k <= n");
  auto tally = [&](int dim) {
    std::map<HIJClass, std::size_t> t;
    if (dim > n) return t;
    for (const Cone& c : b.base.cones(static_cast<std::size_t>(dim))) ++t[classify_HIJ(b, c)];
    return t;
  };
  std::map<HIJClass, std::size_t> hi = tally(n - k + 1), lo = tally(n - k);
  const std::size_t p = std::max<std::size_t>(data.points().size(), 2);
  Counts c;
  c.r = hi[HIJClass::H];
  c.v = hi[HIJClass::J] + lo[HIJClass::J] + p * lo[HIJClass::H];
  c.t = hi[HIJClass::I] + lo[HIJClass::J] + 2 * lo[HIJClass::I];
  return c;
}

std::vector<std::string> fixture_names() { return {"gr24", "p1p1_bundle", "p2_E", "p2_F"}; }

Fan fixture_fan(const std::string& name) {
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t up : {3, 4}) cones.push_back({i, (i + 1) % 3, up});
  if (name == "p2_E")
    return fan_from_rays(3, {iv({1, 0, 1}), iv({0, 1, 0}), iv({-1, -1, 0}), iv({0, 0, 1}), iv({0, 0, -1})}, cones);
  if (name == "p2_F")
    return fan_from_rays(3, {iv({1, 0, 1}), iv({0, 1, 1}), iv({-1, -1, -1}), iv({0, 0, 1}), iv({0, 0, -1})}, cones);
  throw Error(ErrorCode::UnknownFixture, "no toric fan for fixture " + name);
}

KlyachkoBundle fixture_bundle(const std::string& name) {
  if (name != "p1p1_bundle") throw Error(ErrorCode::UnknownFixture, "no bundle for fixture " + name);
  std::vector<IntVec> rays{iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})};
  KlyachkoBundle b;
  b.base = fan_from_rays(2, rays, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  b.filtrations = {{rays[0], {{0, "E"}, {1, "0"}}},
                   {rays[1], {{0, "E"}, {1, "1"}}},
                   {rays[2], {{0, "E"}, {1, kInfinity}}},
                   {rays[3], {{0, "E"}}}};
  return b;
}

namespace {

// Coordinates e1, e2, e3 with e0 = -e1 - e2 - e3; maximal cones pick two
// indices with a plus sign and the other two with a minus sign.
MarkedFansyDivisor grassmannian_fixture() {
  const std::vector<IntVec> e{iv({-1, -1, -1}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})};
  std::vector<Cone> maximal;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      std::vector<IntVec> g;
      for (std::size_t x = 0; x < 4; ++x) {
        IntVec v = e[x];
        if (x != i && x != j)
          for (Int& c : v) c = -c;
        g.push_back(v);
      }
      maximal.emplace_back(3, g);
    }
  auto fiber = [&](const RatVec& x, const RatVec& y) {
    RatVec xy(3), yx(3);
    for (int i = 0; i < 3; ++i) xy[i] = y[i] - x[i], yx[i] = x[i] - y[i];
    std::vector<Polyhedron> cells;
    for (const Cone& s : maximal) {
      std::vector<RatVec> base;
      if (s.contains(xy))
        base = {y};
      else if (s.contains(yx))
        base = {x};
      else
        base = {x, y};
      cells.push_back(Polyhedron::from_generators(3, base, s.generators()));
    }
    return PolyhedralComplex(3, cells);
  };
  std::vector<PolyhedralComplex> complexes{fiber(rv({0, 0, 0}), rv({-1, -1, 0})),
                                           fiber(rv({0, 0, 0}), rv({-1, 0, -1})),
                                           fiber(rv({1, 1, 1}), rv({1, 0, 0}))};
  Fan sigma(3, maximal);
  std::vector<Cone> marked;
  for (const Cone& c : sigma.all_cones())
    if (!c.is_zero()) marked.push_back(c);
  return MarkedFansyDivisor(sigma, {"0", "1", kInfinity}, complexes, marked);
}

}  // namespace

MarkedFansyDivisor fixture(const std::string& name) {
  if (name == "gr24") return grassmannian_fixture();
  if (name == "p1p1_bundle") return bundle_rank2(fixture_bundle(name));
  if (name == "p2_E" || name == "p2_F") return downgrade(fixture_fan(name));
  throw Error(ErrorCode::UnknownFixture, "unknown fixture " + name);
}

}  // namespace tchow
