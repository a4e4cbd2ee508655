// qconc: invariants, rational-concordance obstructions and the cabling
// cobordism homology checks from the command line.
//
// Exit status: 0 when the computation finished, 2 on input errors, 3 for an
// OBSTRUCTED verdict when --fail-on-obstructed is given.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "qconc/io.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kObstructed = 3;

std::string matrix_text(const qconc::IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? "," : "") + m[i][j].get_str();
    s += "]";
  }
  return s + "]";
}

void print_profile(const qconc::SignatureProfile& p) {
  std::cout << "signature profile (angles in turns, upper half circle):\n";
  if (p.root_at_one) std::cout << "  root at t = 1\n";
  if (p.root_at_half) std::cout << "  root at t = -1\n";
  for (const auto& s : p.singular) {
    std::cout << "  singular angle ";
    if (s.root)
      std::cout << s.root->to_string();
    else
      std::cout << "in [" << s.lo.get_str() << ", " << s.hi.get_str() << "]";
    std::cout << "\n";
  }
  for (const auto& a : p.arcs)
    std::cout << "  arc (" << a.lo.get_str() << ", " << a.hi.get_str() << ") sample " << a.sample.to_string()
              << " signature " << a.value << "\n";
}

int cmd_invariants(const std::string& spec, bool as_json) {
  auto k = qconc::resolve_knot(spec);
  if (as_json) {
    std::cout << qconc::dump(qconc::invariants_report(k));
    return 0;
  }
  std::cout << "knot: " << k.label << "\n";
  std::cout << "alexander: " << qconc::to_string(k.alexander) << "\n";
  if (k.source)
    std::cout << "seifert matrix: " << matrix_text(k.source->entries()) << " (size " << k.source->size()
              << ", genus bound " << k.source->genus() << ")\n";
  else
    std::cout << "seifert matrix: none (cable computed from invariants)\n";
  print_profile(k.profile);
  std::cout << "finite-order test: signature function "
            << (k.profile.vanishes() ? "vanishes identically" : "does not vanish") << "\n";
  return 0;
}

int cmd_obstruct(const std::string& a, const std::string& b, const qconc::ObstructionOptions& opt, bool as_json,
                 bool fail_on_obstructed) {
  auto k0 = qconc::resolve_knot(a);
  auto k1 = qconc::resolve_knot(b);
  auto rep = qconc::obstruct_pair(k0, k1, opt);
  if (as_json) {
    std::cout << qconc::dump(qconc::to_json(rep));
  } else {
    std::cout << rep.label0 << " vs " << rep.label1 << "\n";
    std::cout << "alexander: " << qconc::to_string(k0.alexander) << " | " << qconc::to_string(k1.alexander) << "\n";
    const auto& s = rep.signature;
    std::cout << "signatures (primes <= " << rep.prime_bound << ", " << s.angles_compared << " angles compared, "
              << s.angles_skipped << " skipped): ";
    if (s.witness)
      std::cout << "OBSTRUCTED at omega = " << s.witness->omega.to_string() << " (" << s.witness->value0 << " vs "
                << s.witness->value1 << ")\n";
    else
      std::cout << "INCONCLUSIVE\n";
    for (const auto& v : rep.fm) {
      std::cout << "fox-milnor k=" << v.k << ": ";
      if (v.witness)
        std::cout << "PASS, f = " << qconc::to_string(*v.witness) << "\n";
      else
        std::cout << "FAIL\n";
    }
    std::cout << "summary: " << qconc::to_string(rep.summary) << " (" << rep.summary_label() << ")\n";
    for (const auto& t : rep.timings) std::cout << "time " << t.step << ": " << t.microseconds << " us\n";
  }
  if (fail_on_obstructed && rep.summary == qconc::Summary::obstructed) return kObstructed;
  return 0;
}

int cmd_homology(std::int64_t p, std::optional<std::int64_t> at_prime, bool as_json) {
  auto rep = qconc::verify_paper_cobordism(p, at_prime);
  if (as_json) {
    std::cout << qconc::dump(qconc::to_json(rep));
    return 0;
  }
  std::cout << "H1(W) = <mu, x | mu = " << p << " x>, inverting " << rep.at_prime << "\n";
  for (const auto& c : rep.checks)
    std::cout << (c.passed ? "pass  " : "FAIL  ") << c.name << "\n      matrix " << matrix_text(c.matrix) << "; "
              << c.detail << "\n";
  std::cout << (rep.passed() ? "all checks pass" : "some checks fail") << "\n";
  return 0;
}

int cmd_catalog(bool as_json) {
  qconc::json out = qconc::json::array();
  for (const auto& e : qconc::catalog_entries()) {
    qconc::json row{{"name", e.name}, {"description", e.description}};
    std::string instance = e.name;
    if (e.name == "twist(n)") instance = "twist(3)";
    if (e.name == "torus(p,q)") instance = "torus(2,3)";
    auto v = qconc::catalog(instance);
    row["instance"] = instance;
    row["size"] = v.size();
    row["alexander"] = qconc::to_string(qconc::alexander(v));
    out.push_back(row);
  }
  if (as_json) {
    std::cout << qconc::dump(out);
    return 0;
  }
  for (const auto& row : out) {
    std::string name = row["name"], instance = row["instance"], alex = row["alexander"], desc = row["description"];
    std::cout << name << "  size " << row["size"].get<std::size_t>() << "  alexander " << alex;
    if (instance != name) std::cout << "  (instance " << instance << ")";
    std::cout << "\n    " << desc << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qconc: knot invariants and rational-concordance obstructions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON report");

  std::string knot;
  auto* inv = app.add_subcommand("invariants", "Alexander polynomial, signature profile and finite-order test");
  inv->add_option("knot", knot, "catalog name with optional (p,q) cable suffixes, or a knot JSON file")->required();

  std::string knot0, knot1;
  qconc::ObstructionOptions opt;
  bool fail_on_obstructed = false;
  auto* obs = app.add_subcommand("obstruct", "signature and Fox-Milnor obstructions for a pair of knots");
  obs->add_option("knot0", knot0)->required();
  obs->add_option("knot1", knot1)->required();
  obs->add_option("--primes", opt.prime_bound, "scan roots of unity of prime order up to this bound")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{10000}));
  obs->add_option("--kmax", opt.kmax, "Fox-Milnor complexities 1..kmax")->check(CLI::Range(1, 64));
  obs->add_flag("--timings", opt.timings, "report per-step timings (makes output nondeterministic)");
  obs->add_flag("--fail-on-obstructed", fail_on_obstructed, "exit with status 3 on OBSTRUCTED");

  std::int64_t p = 0;
  std::optional<std::int64_t> at_prime;
  auto* hom = app.add_subcommand("homology", "first-homology checks for the cabling cobordism");
  hom->add_option("--p", p, "cable parameter")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  hom->add_option("--at-prime", at_prime, "invert only this integer instead of p")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));

  auto* cat = app.add_subcommand("catalog", "list the built-in knots");

  // The subcommands accept --json too, so it may follow them.
  for (auto* sub : {inv, obs, hom, cat}) sub->add_flag("--json", as_json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*inv) return cmd_invariants(knot, as_json);
    if (*obs) return cmd_obstruct(knot0, knot1, opt, as_json, fail_on_obstructed);
    if (*hom) return cmd_homology(p, at_prime, as_json);
    if (*cat) return cmd_catalog(as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
