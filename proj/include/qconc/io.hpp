#pragma once

// Knot specifications, knot files and JSON reports. Reports contain no
// floating-point values: angles are "a/n" strings in turns, polynomials use
// the textual syntax, everything else is an integer, string or boolean.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qconc/cable.hpp"
#include "qconc/homcob.hpp"
#include "qconc/obstruct.hpp"
#include "qconc/seifert.hpp"

namespace qconc {

using json = nlohmann::json;

// Knot file: {"name": ..., "seifert": [[...]]} or
// {"name": ..., "braid": {"strands": n, "word": [...]}}.
inline SeifertMatrix seifert_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("knot file: expected a JSON object");
  const bool has_v = j.contains("seifert"), has_b = j.contains("braid");
  if (has_v == has_b) throw std::invalid_argument("knot file: exactly one of \"seifert\" and \"braid\" is required");
  if (j.contains("name") && !j["name"].is_string()) throw std::invalid_argument("knot file: \"name\" must be a string");
  if (has_v) {
    const json& rows = j["seifert"];
    if (!rows.is_array()) throw std::invalid_argument("knot file: \"seifert\" must be an array of rows");
    IntMatrix v;
    for (const auto& row : rows) {
      if (!row.is_array()) throw std::invalid_argument("knot file: \"seifert\" must be an array of rows");
      std::vector<mpz_class> r;
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw std::invalid_argument("knot file: Seifert entries must be integers");
        r.emplace_back(static_cast<long>(x.get<std::int64_t>()));
      }
      v.push_back(std::move(r));
    }
    return validate(std::move(v));
  }
  const json& b = j["braid"];
  if (!b.is_object() || !b.contains("strands") || !b.contains("word") || !b["strands"].is_number_integer() ||
      !b["word"].is_array())
    throw std::invalid_argument("knot file: \"braid\" needs integer \"strands\" and array \"word\"");
  std::vector<int> word;
  for (const auto& x : b["word"]) {
    if (!x.is_number_integer()) throw std::invalid_argument("knot file: braid letters must be integers");
    word.push_back(x.get<int>());
  }
  return from_braid(word, b["strands"].get<int>());
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

namespace detail {

// Splits "base(a)(b,c)..." into the base and the parenthesized groups.
inline std::pair<std::string, std::vector<std::vector<std::int64_t>>> split_groups(std::string_view s) {
  auto open = s.find('(');
  std::string base(s.substr(0, open));
  std::vector<std::vector<std::int64_t>> groups;
  while (open != std::string_view::npos) {
    auto close = s.find(')', open);
    if (close == std::string_view::npos) throw std::invalid_argument("unbalanced parentheses in " + std::string(s));
    groups.push_back(split_call("x" + std::string(s.substr(open, close - open + 1))).second);
    if (close + 1 < s.size() && s[close + 1] != '(') throw std::invalid_argument("malformed knot spec: " + std::string(s));
    open = close + 1 < s.size() ? close + 1 : std::string_view::npos;
  }
  return {base, groups};
}

inline KnotBundle apply_cables(KnotBundle k, const std::vector<std::vector<std::int64_t>>& groups, std::size_t from) {
  for (std::size_t g = from; g < groups.size(); ++g) {
    if (groups[g].size() != 2) throw std::invalid_argument("cable suffix needs two parameters (p,q)");
    k = cable_bundle(k, groups[g][0], groups[g][1]);
  }
  return k;
}

}  // namespace detail

// A catalog name, optionally followed by cable suffixes "(p,q)" applied left
// to right, or a knot file path, optionally followed by cable suffixes.
inline KnotBundle resolve_knot(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty knot spec");
  namespace fs = std::filesystem;
  if (fs::is_regular_file(spec)) {
    json j = load_json_file(spec);
    return bundle_of(seifert_from_json(j), j.value("name", spec));
  }
  auto [base, groups] = detail::split_groups(spec);
  if (auto arity = catalog_arity(base)) {
    std::string name = base;
    std::size_t used = 0;
    if (*arity > 0) {
      if (groups.empty() || groups[0].size() != *arity)
        throw std::invalid_argument("catalog knot " + base + " takes " + std::to_string(*arity) + " parameter(s)");
      name += "(";
      for (std::size_t i = 0; i < groups[0].size(); ++i) name += (i ? "," : "") + std::to_string(groups[0][i]);
      name += ")";
      used = 1;
    }
    KnotBundle k = bundle_of(catalog(name), name);
    return detail::apply_cables(std::move(k), groups, used);
  }
  // Knot file followed by cable suffixes: the longest prefix naming a file.
  for (auto cut = spec.rfind('('); cut != std::string::npos && cut > 0; cut = spec.rfind('(', cut - 1)) {
    std::string path = spec.substr(0, cut);
    if (!fs::is_regular_file(path)) continue;
    auto rest = detail::split_groups(spec.substr(cut)).second;
    json j = load_json_file(path);
    KnotBundle k = bundle_of(seifert_from_json(j), j.value("name", path));
    k = detail::apply_cables(std::move(k), rest, 0);
    return k;
  }
  throw std::invalid_argument("unknown knot: " + spec + " (not a catalog name or a file)");
}

namespace detail {

inline json integer_json(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(integer_json(x));
    out.push_back(r);
  }
  return out;
}

}  // namespace detail

inline json to_json(const SignatureProfile& p) {
  json singular = json::array();
  for (const auto& s : p.singular) {
    json e;
    e["root"] = s.root ? json(s.root->to_string()) : json(nullptr);
    e["turn_enclosure"] = {s.lo.get_str(), s.hi.get_str()};
    singular.push_back(e);
  }
  json arcs = json::array();
  for (const auto& a : p.arcs)
    arcs.push_back({{"gap", {a.lo.get_str(), a.hi.get_str()}}, {"sample", a.sample.to_string()}, {"signature", a.value}});
  return {{"singular", singular},
          {"arcs", arcs},
          {"root_at_one", p.root_at_one},
          {"root_at_minus_one", p.root_at_half},
          {"vanishes", p.vanishes()}};
}

inline json invariants_report(const KnotBundle& k) {
  json r;
  r["knot"] = k.label;
  r["alexander"] = to_string(k.alexander);
  if (k.source) {
    r["matrix_size"] = k.source->size();
    r["genus_bound"] = k.source->genus();
    r["seifert"] = detail::matrix_json(k.source->entries());
  } else {
    r["matrix_size"] = nullptr;
    r["genus_bound"] = nullptr;
  }
  r["signature_profile"] = to_json(k.profile);
  r["finite_order_test"] = {{"vanishing_signature", k.profile.vanishes()}};
  return r;
}

inline json to_json(const ObstructionReport& rep) {
  json r;
  r["knots"] = {rep.label0, rep.label1};
  r["parameters"] = {{"primes", rep.prime_bound}, {"kmax", rep.kmax}};
  json sig;
  sig["verdict"] = to_string(rep.signature.obstructed() ? Summary::obstructed : Summary::inconclusive);
  sig["primes_scanned"] = rep.signature.primes_scanned;
  sig["angles_compared"] = rep.signature.angles_compared;
  sig["angles_skipped"] = rep.signature.angles_skipped;
  if (rep.signature.witness) {
    const auto& w = *rep.signature.witness;
    sig["witness"] = {{"omega", w.omega.to_string()}, {"signature0", w.value0}, {"signature1", w.value1}};
  } else {
    sig["witness"] = nullptr;
  }
  r["signature"] = sig;
  json fm = json::array();
  for (const auto& v : rep.fm)
    fm.push_back({{"k", v.k},
                  {"verdict", v.pass() ? "PASS" : "FAIL"},
                  {"witness", v.witness ? json(to_string(*v.witness)) : json(nullptr)}});
  r["fox_milnor"] = fm;
  r["summary"] = to_string(rep.summary);
  r["summary_label"] = rep.summary_label();
  if (!rep.timings.empty()) {
    json t = json::array();
    for (const auto& s : rep.timings) t.push_back({{"step", s.step}, {"microseconds", s.microseconds}});
    r["timings"] = t;
  }
  return r;
}

inline json to_json(const CobordismReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"matrix", detail::matrix_json(c.matrix)}});
  return {{"p", rep.p}, {"inverted", rep.at_prime}, {"checks", checks}, {"passed", rep.passed()}};
}

// Stable serialization: keys sorted, two-space indent, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qconc
