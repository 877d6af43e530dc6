// SPDX-License-Identifier: Apache-2.0

#include "io.hpp"

#include <algorithm>

#include "errors.hpp"

namespace tchow::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& need(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

Int parse_int(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<unsigned long>()) : Int(j.get<long>());
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0) fail("bad integer \"" + j.get<std::string>() + "\"");
    return v;
  }
  fail("expected an integer, got " + j.dump());
}

IntVec parse_int_vec(const Json& j, std::size_t rank) {
  if (!j.is_array() || j.size() != rank) fail("expected an integer vector of length " + std::to_string(rank));
  IntVec v;
  for (const Json& c : j) v.push_back(parse_int(c));
  return v;
}

RatVec parse_rat_vec(const Json& j, std::size_t rank) {
  if (!j.is_array() || j.size() != rank) fail("expected a rational vector of length " + std::to_string(rank));
  RatVec v;
  for (const Json& c : j) v.push_back(parse_rational(c));
  return v;
}

std::size_t parse_rank(const Json& doc) {
  const Json& r = need(doc, "rank");
  if (!r.is_number_integer() || r.get<long>() < 1) fail("rank must be a positive integer");
  return r.get<std::size_t>();
}

void check_version(const Json& doc) {
  if (doc.is_object() && doc.contains("schema_version") && doc.at("schema_version") != kSchemaVersion)
    fail("unsupported schema_version " + doc.at("schema_version").dump());
}

Cone parse_cone(const Json& j, std::size_t rank) {
  if (!j.is_array()) fail("a cone is a list of generator vectors");
  std::vector<IntVec> gens;
  for (const Json& g : j) gens.push_back(parse_int_vec(g, rank));
  return Cone(rank, gens);
}

Json vec_json(const IntVec& v) {
  Json out = Json::array();
  for (const Int& c : v) out.push_back(int_json(c));
  return out;
}

Json vec_json(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& c : v) out.push_back(rational_string(c));
  return out;
}

Json polyhedron_json(const Polyhedron& p) {
  Json out;
  Json verts = Json::array(), rays = Json::array();
  for (const RatVec& v : p.vertices()) verts.push_back(vec_json(v));
  for (const IntVec& r : p.tail().generators()) rays.push_back(vec_json(r));
  out["vertices"] = verts;
  out["rays"] = rays;
  return out;
}

Json smith_json(const SmithResult& s) {
  Json out, tors = Json::array();
  for (const Int& d : s.invariants) tors.push_back(int_json(d));
  out["free_rank"] = s.free_rank;
  out["torsion"] = tors;
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_json(m.row(i)));
  return out;
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Rat parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rat(parse_int(j));
  if (!j.is_string()) fail("expected a rational string, got " + j.dump());
  std::string s = j.get<std::string>();
  Rat q;
  if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos || q.set_str(s, 10) != 0)
    fail("bad rational \"" + s + "\"");
  if (q.get_den() == 0) fail("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::string rational_string(const Rat& q) { return q.get_str(); }

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Fan parse_fan(const Json& doc) {
  check_version(doc);
  if (doc.is_object() && doc.contains("downgrade")) return parse_fan(need(doc.at("downgrade"), "fan"));
  if (doc.is_object() && doc.contains("fan")) return parse_fan(doc.at("fan"));
  const std::size_t rank = parse_rank(doc);
  const Json& rays_j = need(doc, "rays");
  if (!rays_j.is_array()) fail("rays must be a list");
  std::vector<IntVec> rays;
  for (const Json& r : rays_j) rays.push_back(parse_int_vec(r, rank));
  std::vector<std::vector<std::size_t>> cones;
  for (const Json& c : need(doc, "cones")) {
    if (!c.is_array()) fail("a cone is a list of ray indices");
    std::vector<std::size_t> idx;
    for (const Json& i : c) {
      if (!i.is_number_unsigned() || i.get<std::size_t>() >= rays.size()) fail("ray index out of range: " + i.dump());
      idx.push_back(i.get<std::size_t>());
    }
    cones.push_back(idx);
  }
  return fan_from_rays(rank, rays, cones);
}

std::optional<IntMatrix> parse_basis_change(const Json& doc) {
  const Json* stanza = &doc;
  if (doc.is_object() && doc.contains("downgrade")) stanza = &doc.at("downgrade");
  if (!stanza->is_object() || !stanza->contains("basis_change")) return std::nullopt;
  const Json& b = stanza->at("basis_change");
  if (!b.is_array() || b.empty()) fail("basis_change must be a square integer matrix");
  std::vector<IntVec> rows;
  for (const Json& r : b) rows.push_back(parse_int_vec(r, b.size()));
  return IntMatrix::from_rows(rows, b.size());
}

KlyachkoBundle parse_bundle(const Json& stanza) {
  KlyachkoBundle b;
  b.base = parse_fan(need(stanza, "fan"));
  const std::size_t rank = b.base.ambient_rank();
  for (const Json& f : need(stanza, "filtrations")) {
    RayFiltration rf;
    rf.ray = parse_int_vec(need(f, "ray"), rank);
    for (const Json& s : need(f, "steps")) {
      if (!s.is_array() || s.size() != 2 || !s[1].is_string()) fail("a filtration step is [j, label]");
      Int j = parse_int(s[0]);
      if (!j.fits_slong_p()) fail("filtration index out of range");
      rf.steps.push_back({j.get_si(), s[1].get<std::string>()});
    }
    b.filtrations.push_back(rf);
  }
  return b;
}

MarkedFansyDivisor parse_divisor(const Json& doc) {
  check_version(doc);
  if (!doc.is_object()) fail("input document must be a JSON object");
  const bool explicit_data = doc.contains("complexes");
  const int stanzas = doc.contains("downgrade") + doc.contains("bundle");
  if (explicit_data + stanzas != 1) fail("give exactly one of explicit data, \"downgrade\" or \"bundle\"");
  if (doc.contains("downgrade")) return downgrade(parse_fan(doc), parse_basis_change(doc));
  if (doc.contains("bundle")) return bundle_rank2(parse_bundle(doc.at("bundle")));

  const std::size_t rank = parse_rank(doc);
  std::vector<std::string> points;
  for (const Json& p : need(doc, "points")) {
    if (!p.is_string()) fail("point labels are strings");
    points.push_back(p.get<std::string>());
  }
  const Json& cx = need(doc, "complexes");
  if (!cx.is_object()) fail("complexes maps point labels to cell lists");
  std::vector<PolyhedralComplex> complexes;
  for (const std::string& label : points) {
    if (!cx.contains(label)) fail("no subdivision for point \"" + label + "\"");
    std::vector<Polyhedron> cells;
    for (const Json& c : cx.at(label)) {
      std::vector<RatVec> verts;
      std::vector<IntVec> rays;
      for (const Json& v : need(c, "vertices")) verts.push_back(parse_rat_vec(v, rank));
      if (c.contains("rays"))
        for (const Json& r : c.at("rays")) rays.push_back(parse_int_vec(r, rank));
      if (verts.empty()) fail("a cell needs at least one vertex");
      cells.push_back(Polyhedron::from_generators(rank, verts, rays));
    }
    complexes.emplace_back(rank, cells);
  }
  if (cx.size() != points.size()) fail("complexes has labels not listed in points");
  std::vector<Cone> marked;
  if (doc.contains("marked"))
    for (const Json& c : doc.at("marked")) marked.push_back(parse_cone(c, rank));
  if (complexes.empty()) fail("at least one point is required");
  return MarkedFansyDivisor(rank, points, complexes, marked);
}

Json divisor_json(const MarkedFansyDivisor& x) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["rank"] = x.rank();
  const std::size_t shown = x.given_points() < 2 ? x.given_points() : x.points().size();
  Json points = Json::array(), complexes = Json::object(), marked = Json::array();
  for (std::size_t p = 0; p < shown; ++p) {
    points.push_back(x.points()[p]);
    Json cells = Json::array();
    for (const Polyhedron& c : x.complex(p).cells()) cells.push_back(polyhedron_json(c));
    complexes[x.points()[p]] = cells;
  }
  for (const Cone& c : x.marked()) marked.push_back(cone_json(c));
  doc["points"] = points;
  doc["complexes"] = complexes;
  doc["marked"] = marked;
  return doc;
}

Json fan_json(const Fan& f) {
  std::vector<IntVec> rays;
  for (const Cone& r : f.cones(1)) rays.push_back(r.generators().front());
  Json doc, rays_j = Json::array(), cones_j = Json::array();
  doc["schema_version"] = kSchemaVersion;
  doc["rank"] = f.ambient_rank();
  for (const IntVec& r : rays) rays_j.push_back(vec_json(r));
  for (const Cone& c : f.maximal_cones()) {
    Json idx = Json::array();
    for (const IntVec& g : c.generators())
      idx.push_back(static_cast<std::size_t>(std::find(rays.begin(), rays.end(), g) - rays.begin()));
    cones_j.push_back(idx);
  }
  doc["rays"] = rays_j;
  doc["cones"] = cones_j;
  return doc;
}

Json cone_json(const Cone& c) {
  Json out = Json::array();
  for (const IntVec& g : c.generators()) out.push_back(vec_json(g));
  return out;
}

Json generator_json(const CycleGenerator& g, const MarkedFansyDivisor* x) {
  Json out;
  if (!x) {
    out["kind"] = "orbit";
    out["cone"] = cone_json(g.cone);
    return out;
  }
  out["kind"] = kind_name(g.kind);
  if (g.kind == GeneratorKind::V) {
    out["point"] = x->points().at(g.point);
    Json f = polyhedron_json(g.face);
    out["vertices"] = f["vertices"];
    out["rays"] = f["rays"];
  } else {
    out["cone"] = cone_json(g.cone);
  }
  return out;
}

Json counts_json(const Counts& c) {
  Json out;
  out["r"] = c.r;
  out["v"] = c.v;
  out["t"] = c.t;
  return out;
}

Json validation_json(const ValidationReport& r) {
  Json out, vs = Json::array();
  for (const Violation& v : r.violations) {
    Json e;
    e["condition"] = v.condition;
    e["detail"] = v.detail;
    vs.push_back(e);
  }
  out["valid"] = r.ok();
  out["violations"] = vs;
  return out;
}

Json presentation_json(const ChowPresentation& p, const MarkedFansyDivisor* x) {
  Json out, gens = Json::array(), classes = Json::array(), sources = Json::array();
  out["k"] = p.k;
  if (x) {
    Counts c{0, 0, 0};
    for (const CycleGenerator& g : p.generators)
      (g.kind == GeneratorKind::R ? c.r : g.kind == GeneratorKind::V ? c.v : c.t) += 1;
    out["counts"] = counts_json(c);
  }
  for (const CycleGenerator& g : p.generators) gens.push_back(generator_json(g, x));
  for (const RelationBlock& b : p.blocks) {
    Json s;
    s["source"] = generator_json(b.source, x);
    s["rows"] = b.rows.size();
    if (b.point_rows) s["point_rows"] = b.point_rows;
    sources.push_back(s);
  }
  for (const IntVec& c : p.class_map) classes.push_back(vec_json(c));
  out["generators"] = gens;
  out["relations"] = matrix_json(p.relations);
  out["relation_sources"] = sources;
  out["smith"] = smith_json(p.smith);
  out["classes"] = classes;
  return out;
}

Json eff_json(const EffConeReport& r, const MarkedFansyDivisor& x) {
  Json out, gens = Json::array(), distinct = Json::array();
  out["k"] = r.k;
  for (std::size_t j = 0; j < r.generators.size(); ++j) {
    Json g = generator_json(r.generators[j], &x);
    g["class"] = vec_json(r.classes[j]);
    gens.push_back(g);
  }
  for (const EffClass& c : r.distinct) {
    Json e;
    e["class"] = vec_json(c.cls);
    e["members"] = c.members;
    distinct.push_back(e);
  }
  Json rays = Json::array();
  for (const EffClass& c : r.rays) {
    Json e;
    e["ray"] = vec_json(c.cls);
    e["members"] = c.members;
    rays.push_back(e);
  }
  out["generators"] = gens;
  out["distinct_classes"] = distinct;
  out["rays"] = rays;
  return out;
}

Json crosscheck_json(const Fan& f, const std::optional<IntMatrix>& basis_change) {
  MarkedFansyDivisor x = downgrade(f, basis_change);
  Json out, per_k = Json::array();
  bool agree = true;
  for (int k = 0; k <= static_cast<int>(f.ambient_rank()); ++k) {
    ChowPresentation a = presentation(x, k), b = fulton_sturmfels(f, k);
    const bool same = a.smith.free_rank == b.smith.free_rank && a.smith.invariants == b.smith.invariants;
    agree = agree && same;
    Json e;
    e["k"] = k;
    e["pipeline"] = smith_json(a.smith);
    e["oracle"] = smith_json(b.smith);
    e["agree"] = same;
    per_k.push_back(e);
  }
  out["agree"] = agree;
  out["results"] = per_k;
  return out;
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace tchow::io
