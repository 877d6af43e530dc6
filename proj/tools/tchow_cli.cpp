// SPDX-License-Identifier: Apache-2.0

// Command-line front end over the C interface of libtchow.
//
// Exit codes: 0 success, 1 validation or computation failure, 2 parse or
// usage error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tchow/tchow.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;

struct Failure {
  tchow_status status;
  std::string message;
};

struct Options {
  bool json = false;
  std::string out;
  std::string file = "-";
  std::string name;
  int k = -1;
  bool all = false;
  bool fan = false;
};

void check(tchow_status s) {
  if (s != TCHOW_OK) throw Failure{s, tchow_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  tchow_string_free(s);
  return out;
}

Json take_json(char* s) { return Json::parse(take(s)); }

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{TCHOW_PARSE_ERROR, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

using Divisor = std::unique_ptr<tchow_divisor, decltype(&tchow_divisor_free)>;
using FanHandle = std::unique_ptr<tchow_fan, decltype(&tchow_fan_free)>;

Divisor load_divisor(const std::string& path) {
  tchow_divisor* x = nullptr;
  check(tchow_divisor_parse(read_input(path).c_str(), &x));
  return Divisor(x, tchow_divisor_free);
}

FanHandle load_fan(const std::string& path) {
  tchow_fan* f = nullptr;
  check(tchow_fan_parse(read_input(path).c_str(), &f));
  return FanHandle(f, tchow_fan_free);
}

int rank_of(const tchow_divisor* x) {
  int n = 0;
  check(tchow_divisor_rank(x, &n));
  return n;
}

std::string join_ints(const Json& arr) {
  std::string s;
  for (const Json& v : arr) s += (s.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
  return s;
}

std::string torsion_text(const Json& smith) {
  if (smith["torsion"].empty()) return "-";
  std::string s;
  for (const Json& d : smith["torsion"]) s += (s.empty() ? "Z/" : " + Z/") + (d.is_string() ? d.get<std::string>() : d.dump());
  return s;
}

std::string generator_text(const Json& g) {
  if (g.contains("cone")) {
    std::string s = g["kind"].get<std::string>() + " cone(";
    bool first = true;
    for (const Json& r : g["cone"]) s += (first ? "(" : ",(") + join_ints(r) + ")", first = false;
    return s + ")";
  }
  std::string s = "V[" + g["point"].get<std::string>() + "] conv(";
  bool first = true;
  for (const Json& v : g["vertices"]) s += (first ? "(" : ",(") + join_ints(v) + ")", first = false;
  s += ")";
  if (!g["rays"].empty()) {
    s += " + cone(";
    first = true;
    for (const Json& r : g["rays"]) s += (first ? "(" : ",(") + join_ints(r) + ")", first = false;
    s += ")";
  }
  return s;
}

// Violation classes of a marked fansy divisor.
std::string condition_name(int c) {
  switch (c) {
    case 1: return "condition 1 (complete subdivisions with common tailfan)";
    case 2: return "condition 2 (p-divisor slices over marked cones)";
    case 3: return "condition 3 (marking agrees with the degree)";
    case 4: return "condition 4 (marking is closed upward)";
  }
  return "consistency check";
}

std::string validation_text(const Json& v) {
  if (v["valid"].get<bool>()) return "valid\n";
  std::string s = "invalid\n";
  for (const Json& e : v["violations"])
    s += "  violates " + condition_name(e["condition"].get<int>()) + ": " + e["detail"].get<std::string>() + "\n";
  return s;
}

std::string chow_table(const Json& results) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "k" << std::setw(12) << "generators" << std::setw(11) << "relations"
      << std::setw(11) << "free_rank" << "torsion\n";
  for (const Json& r : results)
    out << std::setw(4) << r["k"].get<int>() << std::setw(12) << r["generators"].size() << std::setw(11)
        << r["relations"].size() << std::setw(11) << r["smith"]["free_rank"].get<std::size_t>()
        << torsion_text(r["smith"]) << "\n";
  return out.str();
}

std::string chow_detail(const Json& r) {
  std::ostringstream out;
  out << "A_" << r["k"].get<int>() << ": free rank " << r["smith"]["free_rank"].get<std::size_t>() << ", torsion "
      << torsion_text(r["smith"]) << "\n";
  for (std::size_t j = 0; j < r["generators"].size(); ++j)
    out << "  " << generator_text(r["generators"][j]) << "  ->  [" << join_ints(r["classes"][j]) << "]\n";
  return out.str();
}

struct Output {
  Json doc;
  std::string text;
  int code = kExitOk;
};

Json envelope(const std::string& command) {
  Json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  return doc;
}

// Validates first; a report replaces the result when the input is invalid.
bool validated(const tchow_divisor* x, const std::string& command, Output& o) {
  int valid = 0;
  char* report = nullptr;
  check(tchow_validate(x, &valid, &report));
  Json v = take_json(report);
  if (valid) return true;
  o.doc = envelope(command);
  o.doc["validation"] = v;
  o.text = validation_text(v);
  o.code = kExitFailure;
  return false;
}

std::vector<int> degrees(const Options& opt, int top) {
  if (opt.k >= 0 && !opt.all) return {opt.k};
  std::vector<int> ks;
  for (int k = 0; k <= top; ++k) ks.push_back(k);
  return ks;
}

Output run_validate(const Options& opt) {
  Divisor x = load_divisor(opt.file);
  Output o;
  if (!validated(x.get(), "validate", o)) return o;
  o.doc = envelope("validate");
  o.doc["validation"] = Json{{"valid", true}, {"violations", Json::array()}};
  o.text = "valid\n";
  return o;
}

Output run_chow(const Options& opt) {
  Divisor x = load_divisor(opt.file);
  Output o;
  if (!validated(x.get(), "chow", o)) return o;
  o.doc = envelope("chow");
  Json results = Json::array();
  for (int k : degrees(opt, rank_of(x.get()) + 1)) {
    char* s = nullptr;
    check(tchow_chow(x.get(), k, &s));
    results.push_back(take_json(s));
  }
  o.doc["results"] = results;
  o.text = results.size() == 1 ? chow_detail(results[0]) : chow_table(results);
  return o;
}

Output run_eff(const Options& opt) {
  Divisor x = load_divisor(opt.file);
  Output o;
  if (!validated(x.get(), "eff", o)) return o;
  char* s = nullptr;
  check(tchow_eff(x.get(), opt.k, &s));
  Json r = take_json(s);
  o.doc = envelope("eff");
  o.doc["results"] = Json::array({r});
  std::ostringstream out;
  out << "Eff_" << opt.k << ": " << r["generators"].size() << " generators, " << r["distinct_classes"].size()
      << " distinct classes, " << r["rays"].size() << " rays\n";
  for (const Json& c : r["distinct_classes"]) {
    out << "  [" << join_ints(c["class"]) << "]\n";
    for (const Json& m : c["members"]) out << "    " << generator_text(r["generators"][m.get<std::size_t>()]) << "\n";
  }
  o.text = out.str();
  return o;
}

Output run_counts(const Options& opt) {
  Divisor x = load_divisor(opt.file);
  Output o;
  if (!validated(x.get(), "counts", o)) return o;
  o.doc = envelope("counts");
  Json results = Json::array();
  std::ostringstream out;
  out << std::left << std::setw(4) << "k" << std::setw(6) << "r" << std::setw(6) << "v" << "t\n";
  const int top = rank_of(x.get()) + 1;
  std::vector<int> ks = degrees(opt, top);
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    std::size_t r = 0, v = 0, t = 0;
    check(tchow_counts(x.get(), *it, &r, &v, &t));
    results.push_back(Json{{"k", *it}, {"counts", Json{{"r", r}, {"v", v}, {"t", t}}}});
    out << std::setw(4) << *it << std::setw(6) << r << std::setw(6) << v << t << "\n";
  }
  o.doc["results"] = results;
  o.text = out.str();
  return o;
}

Output run_oracle(const Options& opt) {
  FanHandle f = load_fan(opt.file);
  int d = 0;
  check(tchow_fan_rank(f.get(), &d));
  Output o;
  o.doc = envelope("oracle");
  Json results = Json::array();
  for (int k : degrees(opt, d)) {
    char* s = nullptr;
    check(tchow_oracle(f.get(), k, &s));
    results.push_back(take_json(s));
  }
  o.doc["results"] = results;
  o.text = results.size() == 1 ? chow_detail(results[0]) : chow_table(results);
  return o;
}

Output run_crosscheck(const Options& opt) {
  FanHandle f = load_fan(opt.file);
  int agree = 0;
  char* s = nullptr;
  check(tchow_crosscheck(f.get(), &agree, &s));
  Json r = take_json(s);
  Output o;
  o.doc = envelope("crosscheck");
  o.doc["agree"] = r["agree"];
  o.doc["results"] = r["results"];
  std::ostringstream out;
  auto group = [](const Json& smith) {
    return "Z^" + std::to_string(smith["free_rank"].get<std::size_t>()) +
           (smith["torsion"].empty() ? "" : " + " + torsion_text(smith));
  };
  out << std::left << std::setw(4) << "k" << std::setw(20) << "pipeline" << std::setw(20) << "oracle" << "agree\n";
  for (const Json& e : r["results"])
    out << std::setw(4) << e["k"].get<int>() << std::setw(20) << group(e["pipeline"]) << std::setw(20)
        << group(e["oracle"]) << (e["agree"].get<bool>() ? "yes" : "NO") << "\n";
  o.text = out.str();
  o.code = agree ? kExitOk : kExitFailure;
  return o;
}

// Always emits the input document itself so it can be piped into the other commands.
Output run_fixture(const Options& opt) {
  Output o;
  char* s = nullptr;
  if (opt.fan) {
    tchow_fan* f = nullptr;
    check(tchow_fan_fixture(opt.name.c_str(), &f));
    FanHandle h(f, tchow_fan_free);
    check(tchow_fan_to_json(h.get(), &s));
  } else {
    tchow_divisor* x = nullptr;
    check(tchow_divisor_fixture(opt.name.c_str(), &x));
    Divisor h(x, tchow_divisor_free);
    check(tchow_divisor_to_json(h.get(), &s));
  }
  o.doc = take_json(s);
  o.text = o.doc.dump(2) + "\n";
  return o;
}

void write(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw Failure{TCHOW_INVALID_ARGUMENT, "cannot write " + opt.out};
  f << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow groups of complete rational complexity-one T-varieties"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit the JSON output document");
  app.add_option("--out", opt.out, "Write the output to this path");

  auto* validate = app.add_subcommand("validate", "Check the marked fansy divisor axioms");
  validate->add_option("file", opt.file, "Input document, - for stdin");
  auto* chow = app.add_subcommand("chow", "Presentation of A_k");
  chow->add_option("file", opt.file, "Input document, - for stdin");
  chow->add_option("--k", opt.k, "Degree")->check(CLI::NonNegativeNumber);
  chow->add_flag("--all", opt.all, "Every degree 0..n+1 (default when --k is absent)");
  auto* eff = app.add_subcommand("eff", "Generators of the pseudoeffective cone in degree k");
  eff->add_option("file", opt.file, "Input document, - for stdin");
  eff->add_option("--k", opt.k, "Degree")->required()->check(CLI::NonNegativeNumber);
  auto* counts = app.add_subcommand("counts", "Sizes of the generator sets R_k, V_k, T_k");
  counts->add_option("file", opt.file, "Input document, - for stdin");
  counts->add_option("--k", opt.k, "Degree")->check(CLI::NonNegativeNumber);
  auto* oracle = app.add_subcommand("oracle", "Toric presentation of a complete fan");
  oracle->add_option("fanfile", opt.file, "Fan document, - for stdin");
  oracle->add_option("--k", opt.k, "Degree")->check(CLI::NonNegativeNumber);
  auto* fixture = app.add_subcommand("fixture", "Print a bundled input document");
  fixture->add_option("name", opt.name, std::string("One of: ") + tchow_fixture_names())->required();
  fixture->add_flag("--fan", opt.fan, "Print the toric fan behind p2_E or p2_F instead");
  auto* crosscheck = app.add_subcommand("crosscheck", "Compare the downgrade pipeline with the toric oracle");
  crosscheck->add_option("fanfile", opt.file, "Fan document, - for stdin");
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    Output o;
    if (*validate) o = run_validate(opt);
    else if (*chow) o = run_chow(opt);
    else if (*eff) o = run_eff(opt);
    else if (*counts) o = run_counts(opt);
    else if (*oracle) o = run_oracle(opt);
    else if (*fixture) o = run_fixture(opt);
    else o = run_crosscheck(opt);
    write(opt, opt.json || *fixture ? o.doc.dump(2) + "\n" : o.text);
    return o.code;
  } catch (const Failure& f) {
    const int code = f.status == TCHOW_PARSE_ERROR ? kExitParse : kExitFailure;
    if (opt.json) {
      Json err;
      err["error"] = Json{{"status", tchow_status_name(f.status)}, {"message", f.message}};
      std::cerr << err.dump() << "\n";
    } else {
      std::cerr << "error (" << tchow_status_name(f.status) << "): " << f.message << "\n";
    }
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
