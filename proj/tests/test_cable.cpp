#include <catch_amalgamated.hpp>

#include <random>

#include "oracles/burau.hpp"
#include "qconc/cable.hpp"

using qconc::KnotBundle;
using qconc::LaurentPoly;
using qconc::parse_laurent;
using qconc::UnitRoot;

namespace {

KnotBundle knot(const std::string& name) { return qconc::bundle_of(qconc::catalog(name), name); }

UnitRoot random_root(std::mt19937_64& rng, int max_den) {
  int n = std::uniform_int_distribution<int>(1, max_den)(rng);
  return UnitRoot(std::uniform_int_distribution<int>(0, n - 1)(rng), n);
}

}  // namespace

TEST_CASE("bundle_of examples", "[cable]") {
  CHECK(knot("trefoil_rh").signature(UnitRoot(1, 2)) == -2);
  auto u = knot("unknot");
  CHECK(u.alexander == LaurentPoly(1));
  CHECK(u.signature(UnitRoot(1, 2)) == 0);
  CHECK(u.signature(UnitRoot(3, 7)) == 0);
  CHECK(qconc::doteq(knot("twist(3)").alexander, parse_laurent("3*t-7+3*t^-1")));
  CHECK(knot("twist(3)").source.has_value());
}

TEST_CASE("torus closed forms agree with the catalog and the quotient formula", "[cable][oracle]") {
  std::mt19937_64 rng(11);
  for (int p = 1; p <= 6; ++p)
    for (int q = -7; q <= 7; ++q) {
      if (q == 0 || std::gcd(p, q) != 1) continue;
      INFO("T(" << p << "," << q << ")");
      auto d = qconc::torus_alexander(p, q);
      if (p > 1 && std::abs(q) > 1) CHECK(qconc::doteq(d, oracle::torus_alexander(p, std::abs(q))));
      auto v = qconc::torus_knot(p, q);
      CHECK(qconc::doteq(d, qconc::alexander(v)));
      if (p * std::abs(q) > 30) continue;
      for (int s = 0; s < 10; ++s) {
        UnitRoot w = random_root(rng, 40);
        INFO("w = " << w);
        CHECK(qconc::torus_signature(p, q, w) == qconc::lt_signature(v, w));
      }
    }
}

TEST_CASE("cable_alexander examples", "[cable]") {
  auto tre = knot("trefoil_rh");
  CHECK(qconc::doteq(qconc::cable_alexander(tre, 2, 1), parse_laurent("t^2-1+t^-2")));
  CHECK(qconc::doteq(qconc::cable_alexander(tre, 1, 1), tre.alexander));
  CHECK(qconc::cable_alexander(knot("unknot"), 5, 1) == LaurentPoly(1));
  CHECK_THROWS_AS(qconc::cable_alexander(tre, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(qconc::cable_alexander(tre, 0, 1), std::invalid_argument);
  // the (3,2)-cable of the unknot is the trefoil
  CHECK(qconc::doteq(qconc::cable_alexander(knot("unknot"), 3, 2), tre.alexander));
  // inflation property, degree multiplies by p
  auto tw = knot("twist(3)");
  for (int p = 1; p <= 6; ++p) {
    CHECK(qconc::cable_alexander(tw, p, 1) == qconc::canonical(qconc::inflate(tw.alexander, p)));
    CHECK(qconc::cable_alexander(tw, p, 1).span() == 2 * p);
  }
}

TEST_CASE("cable_signature examples", "[cable]") {
  auto tre = knot("trefoil_rh");
  CHECK(qconc::cable_signature(tre, 2, 1, UnitRoot(1, 2)) == 0);
  std::mt19937_64 rng(3);
  auto trefoil_matrix = qconc::catalog("torus(2,3)");
  auto fig = knot("figure_eight");
  for (int s = 0; s < 30; ++s) {
    UnitRoot w = random_root(rng, 50);
    INFO("w = " << w);
    CHECK(qconc::cable_signature(knot("unknot"), 3, 2, w) == qconc::lt_signature(trefoil_matrix, w));
    CHECK(qconc::cable_signature(tre, 1, 1, w) == tre.signature(w));
    CHECK(qconc::cable_signature(fig, 3, 1, w) == 0);
  }
}

TEST_CASE("cable signatures depend on w only through w^p", "[cable][property]") {
  std::mt19937_64 rng(17);
  auto tre = knot("trefoil_rh");
  for (int s = 0; s < 40; ++s) {
    int p = std::uniform_int_distribution<int>(2, 5)(rng);
    int n = std::uniform_int_distribution<int>(2, 30)(rng);
    int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
    // a and a + n/gcd(n,p) have the same p-th power
    int b = a + n / std::gcd(n, p);
    UnitRoot w1(a, n), w2(b, n);
    REQUIRE(w1.pow(p) == w2.pow(p));
    REQUIRE(qconc::cable_signature(tre, p, 1, w1) == qconc::cable_signature(tre, p, 1, w2));
  }
}

TEST_CASE("cable_bundle profiles", "[cable]") {
  auto tre2 = qconc::cable_bundle(knot("trefoil_rh"), 2, 1);
  CHECK(tre2.label == "trefoil_rh(2,1)");
  CHECK_FALSE(tre2.source);
  // primitive 12th roots in (0, 1/2): 1/12 and 5/12
  REQUIRE(tre2.profile.singular.size() == 2);
  CHECK(tre2.profile.singular[0].root == UnitRoot(1, 12));
  CHECK(tre2.profile.singular[1].root == UnitRoot(5, 12));
  CHECK(tre2.profile.arcs[0].value == 0);
  CHECK(tre2.profile.arcs[1].value == -2);
  CHECK(tre2.profile.arcs[2].value == 0);

  auto u = qconc::cable_bundle(knot("unknot"), 4, 1);
  CHECK(u.alexander == LaurentPoly(1));
  CHECK(u.profile.vanishes());

  auto f3 = qconc::cable_bundle(knot("figure_eight"), 3, 1);
  CHECK(f3.profile.singular.empty());
  CHECK(f3.profile.vanishes());

  // The singular set is the preimage under w -> w^p of the companion's.
  auto t25 = knot("torus(2,5)");
  auto c = qconc::cable_bundle(t25, 3, 1);
  std::size_t expected = 0;
  for (const auto& s : t25.profile.singular) {
    REQUIRE(s.root);
    for (const auto& t : c.profile.singular) {
      REQUIRE(t.root);
      if (t.root->pow(3) == *s.root || t.root->pow(3) == s.root->conj()) ++expected;
    }
  }
  CHECK(expected == c.profile.singular.size());
  CHECK(c.profile.singular.size() == 6);  // 2 roots in (0,1/2), three preimages each
}

TEST_CASE("iterated cables compose at the invariant level", "[cable][property]") {
  std::mt19937_64 rng(23);
  for (const auto& name : {"trefoil_rh", "figure_eight", "twist(3)"}) {
    auto k = knot(name);
    for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 2}}) {
      auto nested = qconc::cable_bundle(qconc::cable_bundle(k, a, 1), b, 1);
      auto direct = qconc::cable_bundle(k, a * b, 1);
      INFO(name << " " << a << "," << b);
      REQUIRE(nested.alexander == direct.alexander);
      for (int s = 0; s < 20; ++s) {
        UnitRoot w = random_root(rng, 60);
        REQUIRE(nested.signature(w) == direct.signature(w));
      }
    }
  }
}
