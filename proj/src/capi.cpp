// SPDX-License-Identifier: Apache-2.0

#include "tchow/tchow.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "io.hpp"

struct tchow_divisor {
  tchow::MarkedFansyDivisor x;
};

struct tchow_fan {
  tchow::Fan fan;
  std::optional<tchow::IntMatrix> basis_change;
};

namespace {

static_assert(static_cast<int>(tchow::ErrorCode::Parse) == TCHOW_PARSE_ERROR, "status codes follow ErrorCode");

thread_local std::string last_error;

template <class F>
tchow_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return TCHOW_OK;
  } catch (const tchow::Error& e) {
    last_error = e.what();
    return static_cast<tchow_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return TCHOW_INTERNAL_ERROR;
}

void require(const void* p, const char* what) {
  if (!p) throw tchow::Error(tchow::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const tchow::io::Json& j, char** out) {
  require(out, "output pointer");
  *out = copy_out(tchow::io::dump(j));
}

const std::string& fixture_list() {
  static const std::string names = [] {
    std::string s;
    for (const std::string& n : tchow::fixture_names()) s += (s.empty() ? "" : " ") + n;
    return s;
  }();
  return names;
}

}  // namespace

extern "C" {

const char* tchow_version(void) { return "1.0.0"; }

const char* tchow_status_name(tchow_status s) {
  switch (s) {
    case TCHOW_OK: return "ok";
    case TCHOW_INVALID_ARGUMENT: return "invalid_argument";
    case TCHOW_NOT_CONTAINED: return "not_contained";
    case TCHOW_RANK_MISMATCH: return "rank_mismatch";
    case TCHOW_EMPTY_POLYHEDRON: return "empty_polyhedron";
    case TCHOW_NON_FAN_TAILS: return "non_fan_tails";
    case TCHOW_INVALID_COMPLEX: return "invalid_complex";
    case TCHOW_NON_UNIQUE_FACE: return "non_unique_face";
    case TCHOW_NOT_MARKED: return "not_marked";
    case TCHOW_OUT_OF_RANGE: return "out_of_range";
    case TCHOW_NON_INTEGRAL_REDIRECT: return "non_integral_redirect";
    case TCHOW_INCOMPLETE_FAN: return "incomplete_fan";
    case TCHOW_NON_SMOOTH_BASE: return "non_smooth_base";
    case TCHOW_INCONSISTENT_FILTRATIONS: return "inconsistent_filtrations";
    case TCHOW_UNKNOWN_FIXTURE: return "unknown_fixture";
    case TCHOW_PARSE_ERROR: return "parse_error";
    case TCHOW_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

const char* tchow_last_error(void) { return last_error.c_str(); }

void tchow_string_free(char* s) { std::free(s); }

tchow_status tchow_divisor_parse(const char* json, tchow_divisor** out) {
  return guard([&] {
    require(json, "json");
    require(out, "output pointer");
    *out = new tchow_divisor{tchow::io::parse_divisor(tchow::io::parse_text(json))};
  });
}

tchow_status tchow_divisor_fixture(const char* name, tchow_divisor** out) {
  return guard([&] {
    require(name, "name");
    require(out, "output pointer");
    *out = new tchow_divisor{tchow::fixture(name)};
  });
}

void tchow_divisor_free(tchow_divisor* x) { delete x; }

tchow_status tchow_divisor_rank(const tchow_divisor* x, int* rank) {
  return guard([&] {
    require(x, "divisor");
    require(rank, "rank");
    *rank = static_cast<int>(x->x.rank());
  });
}

tchow_status tchow_divisor_to_json(const tchow_divisor* x, char** json) {
  return guard([&] {
    require(x, "divisor");
    emit(tchow::io::divisor_json(x->x), json);
  });
}

const char* tchow_fixture_names(void) { return fixture_list().c_str(); }

tchow_status tchow_validate(const tchow_divisor* x, int* valid, char** report) {
  return guard([&] {
    require(x, "divisor");
    tchow::ValidationReport r = tchow::validate(x->x);
    if (valid) *valid = r.ok() ? 1 : 0;
    if (report) emit(tchow::io::validation_json(r), report);
  });
}

tchow_status tchow_counts(const tchow_divisor* x, int k, size_t* r, size_t* v, size_t* t) {
  return guard([&] {
    require(x, "divisor");
    tchow::Counts c = tchow::counts_of(tchow::enumerate_generators(x->x, k));
    if (r) *r = c.r;
    if (v) *v = c.v;
    if (t) *t = c.t;
  });
}

tchow_status tchow_chow(const tchow_divisor* x, int k, char** json) {
  return guard([&] {
    require(x, "divisor");
    emit(tchow::io::presentation_json(tchow::presentation(x->x, k), &x->x), json);
  });
}

tchow_status tchow_chow_smith(const tchow_divisor* x, int k, size_t* free_rank, size_t* torsion_count) {
  return guard([&] {
    require(x, "divisor");
    tchow::ChowPresentation p = tchow::presentation(x->x, k);
    if (free_rank) *free_rank = p.smith.free_rank;
    if (torsion_count) *torsion_count = p.smith.invariants.size();
  });
}

tchow_status tchow_eff(const tchow_divisor* x, int k, char** json) {
  return guard([&] {
    require(x, "divisor");
    emit(tchow::io::eff_json(tchow::eff_generators(x->x, k), x->x), json);
  });
}

tchow_status tchow_fan_parse(const char* json, tchow_fan** out) {
  return guard([&] {
    require(json, "json");
    require(out, "output pointer");
    tchow::io::Json doc = tchow::io::parse_text(json);
    *out = new tchow_fan{tchow::io::parse_fan(doc), tchow::io::parse_basis_change(doc)};
  });
}

tchow_status tchow_fan_fixture(const char* name, tchow_fan** out) {
  return guard([&] {
    require(name, "name");
    require(out, "output pointer");
    *out = new tchow_fan{tchow::fixture_fan(name), std::nullopt};
  });
}

void tchow_fan_free(tchow_fan* f) { delete f; }

tchow_status tchow_fan_rank(const tchow_fan* f, int* rank) {
  return guard([&] {
    require(f, "fan");
    require(rank, "rank");
    *rank = static_cast<int>(f->fan.ambient_rank());
  });
}

tchow_status tchow_fan_to_json(const tchow_fan* f, char** json) {
  return guard([&] {
    require(f, "fan");
    emit(tchow::io::fan_json(f->fan), json);
  });
}

tchow_status tchow_fan_downgrade(const tchow_fan* f, tchow_divisor** out) {
  return guard([&] {
    require(f, "fan");
    require(out, "output pointer");
    *out = new tchow_divisor{tchow::downgrade(f->fan, f->basis_change)};
  });
}

tchow_status tchow_oracle(const tchow_fan* f, int k, char** json) {
  return guard([&] {
    require(f, "fan");
    emit(tchow::io::presentation_json(tchow::fulton_sturmfels(f->fan, k), nullptr), json);
  });
}

tchow_status tchow_crosscheck(const tchow_fan* f, int* agree, char** json) {
  return guard([&] {
    require(f, "fan");
    tchow::io::Json j = tchow::io::crosscheck_json(f->fan, f->basis_change);
    if (agree) *agree = j["agree"].get<bool>() ? 1 : 0;
    if (json) emit(j, json);
  });
}

}  // extern "C"
