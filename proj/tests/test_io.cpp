#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qconc/io.hpp"

using qconc::json;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& body)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream(path) << body;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

bool round_trips(const json& j) {
  std::string once = qconc::dump(j);
  return qconc::dump(json::parse(once)) == once;
}

}  // namespace

TEST_CASE("knot specs resolve catalog names and cable suffixes", "[io]") {
  CHECK(qconc::to_string(qconc::resolve_knot("twist(3)").alexander) == "3*t^2-7*t+3");
  CHECK(qconc::to_string(qconc::resolve_knot("unknot").alexander) == "1");
  auto trefoil = qconc::resolve_knot("trefoil_rh");
  auto cable = qconc::resolve_knot("trefoil_rh(2,1)");
  CHECK(cable.alexander == qconc::canonical(qconc::inflate(trefoil.alexander, 2)));
  CHECK(cable.label == "trefoil_rh(2,1)");
  CHECK_FALSE(cable.source);
  auto nested = qconc::resolve_knot("torus(2,3)(2,1)(3,1)");
  CHECK(nested.alexander == qconc::canonical(qconc::inflate(trefoil.alexander, 6)));
  CHECK(nested.label == "torus(2,3)(2,1)(3,1)");
  CHECK(qconc::resolve_knot("twist(-2)(3,2)").label == "twist(-2)(3,2)");

  CHECK_THROWS_AS(qconc::resolve_knot(""), std::invalid_argument);
  CHECK_THROWS_AS(qconc::resolve_knot("trefoil"), std::invalid_argument);
  CHECK_THROWS_AS(qconc::resolve_knot("twist"), std::invalid_argument);
  CHECK_THROWS_AS(qconc::resolve_knot("twist(1,2)"), std::invalid_argument);
  CHECK_THROWS_AS(qconc::resolve_knot("unknot(2,4)"), std::invalid_argument);
  CHECK_THROWS_AS(qconc::resolve_knot("unknot(2)"), std::invalid_argument);
  CHECK_THROWS_AS(qconc::resolve_knot("unknot(2,1"), std::invalid_argument);
  CHECK_THROWS_AS(qconc::resolve_knot("unknot(2,1)x"), std::invalid_argument);
  CHECK_THROWS_AS(qconc::resolve_knot("unknot(0,1)"), std::invalid_argument);
}

TEST_CASE("knot files", "[io]") {
  TempFile v("qconc_test_seifert.json", R"({"name": "fig8", "seifert": [[1,1],[0,-1]]})");
  auto k = qconc::resolve_knot(v.path.string());
  CHECK(k.label == "fig8");
  CHECK(qconc::to_string(k.alexander) == "t^2-3*t+1");
  auto kc = qconc::resolve_knot(v.path.string() + "(2,1)");
  CHECK(kc.label == "fig8(2,1)");
  CHECK(qconc::to_string(kc.alexander) == "t^4-3*t^2+1");

  TempFile b("qconc_test_braid.json", R"({"name": "t35", "braid": {"strands": 3, "word": [1,2,1,2,1,2,1,2,1,2]}})");
  CHECK(qconc::resolve_knot(b.path.string()).alexander == qconc::torus_alexander(3, 5));

  TempFile both("qconc_test_both.json", R"({"seifert": [[-1]], "braid": {"strands": 2, "word": [1]}})");
  CHECK_THROWS_AS(qconc::resolve_knot(both.path.string()), std::invalid_argument);
  TempFile none("qconc_test_none.json", R"({"name": "x"})");
  CHECK_THROWS_AS(qconc::resolve_knot(none.path.string()), std::invalid_argument);
  TempFile bad("qconc_test_bad.json", R"({"seifert": [[1,0],[0,1]]})");
  CHECK_THROWS_AS(qconc::resolve_knot(bad.path.string()), qconc::InvalidSeifertMatrix);
  TempFile frac("qconc_test_frac.json", R"({"seifert": [[0.5]]})");
  CHECK_THROWS_AS(qconc::resolve_knot(frac.path.string()), std::invalid_argument);
  TempFile broken("qconc_test_broken.json", R"({"seifert": )");
  CHECK_THROWS_AS(qconc::resolve_knot(broken.path.string()), std::invalid_argument);
  TempFile links("qconc_test_link.json", R"({"braid": {"strands": 2, "word": [1,1]}})");
  CHECK_THROWS_AS(qconc::resolve_knot(links.path.string()), std::invalid_argument);
}

TEST_CASE("reports round-trip and contain no floats", "[io]") {
  std::vector<json> reports;
  for (const char* s : {"unknot", "twist(3)", "trefoil_rh(2,1)", "torus(3,4)", "figure_eight(3,2)"})
    reports.push_back(qconc::invariants_report(qconc::resolve_knot(s)));
  for (auto [a, b] : {std::pair{"trefoil_rh", "trefoil_rh(2,1)"}, std::pair{"figure_eight", "figure_eight(2,1)"}})
    reports.push_back(qconc::to_json(qconc::obstruct_pair(qconc::resolve_knot(a), qconc::resolve_knot(b))));
  reports.push_back(qconc::to_json(qconc::verify_paper_cobordism(6, 2)));

  std::function<bool(const json&)> no_float = [&](const json& j) {
    if (j.is_number_float()) return false;
    if (j.is_structured())
      for (const auto& x : j)
        if (!no_float(x)) return false;
    return true;
  };
  for (const auto& r : reports) {
    CHECK(round_trips(r));
    CHECK(no_float(r));
  }
  const json& obs = reports[5];
  CHECK(obs["summary"] == "OBSTRUCTED");
  CHECK(obs["signature"]["witness"]["omega"] == "1/2");
  CHECK_FALSE(obs.contains("timings"));
  CHECK(reports[6]["fox_milnor"][1]["verdict"] == "PASS");
  CHECK(reports[7]["checks"][0]["detail"].get<std::string>().find("localized cokernel Z/3") != std::string::npos);
}

TEST_CASE("reports are deterministic", "[io]") {
  auto run = [] {
    return qconc::dump(qconc::to_json(
        qconc::obstruct_pair(qconc::resolve_knot("twist(3)"), qconc::resolve_knot("twist(3)(3,1)"))));
  };
  CHECK(run() == run());
  qconc::ObstructionOptions opt;
  opt.timings = true;
  auto timed = qconc::to_json(qconc::obstruct_pair(qconc::resolve_knot("unknot"), qconc::resolve_knot("unknot"), opt));
  REQUIRE(timed.contains("timings"));
  CHECK(timed["timings"].size() == 7);
}
