#include <catch_amalgamated.hpp>

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <random>

#include "oracles/burau.hpp"
#include "oracles/seifert_float.hpp"
#include "qconc/seifert.hpp"

using qconc::IntMatrix;
using qconc::LaurentPoly;
using qconc::parse_laurent;
using qconc::SeifertMatrix;
using qconc::UnitRoot;

namespace {

using oracle::float_signature;
using oracle::random_seifert;

std::vector<std::vector<long>> to_long(const SeifertMatrix& v) {
  std::vector<std::vector<long>> out(v.size(), std::vector<long>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i][j] = v.at(i, j).get_si();
  return out;
}

std::vector<int> torus_word(int p, int q) {
  std::vector<int> w;
  for (int r = 0; r < q; ++r)
    for (int i = 1; i < p; ++i) w.push_back(i);
  return w;
}

}  // namespace

TEST_CASE("validate examples", "[seifert]") {
  CHECK_NOTHROW(qconc::validate(IntMatrix{{-1, 1}, {0, -1}}));
  CHECK(qconc::validate(IntMatrix{}).size() == 0);
  try {
    qconc::validate(IntMatrix{{1, 0}, {0, 1}});
    FAIL("accepted");
  } catch (const qconc::InvalidSeifertMatrix& e) {
    CHECK(e.determinant() == 0);
  }
  CHECK_THROWS_AS(qconc::validate(IntMatrix{{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(qconc::validate(IntMatrix{{3}}), qconc::InvalidSeifertMatrix);
}

TEST_CASE("alexander examples", "[seifert]") {
  CHECK(qconc::doteq(qconc::alexander(qconc::catalog("trefoil_rh")), parse_laurent("t-1+t^-1")));
  CHECK(qconc::alexander(qconc::catalog("twist(3)")) == parse_laurent("3*t^2-7*t+3"));
  CHECK(qconc::doteq(qconc::alexander(qconc::catalog("twist(3)")), parse_laurent("3*t-7+3*t^-1")));
  CHECK(qconc::alexander(SeifertMatrix{}) == LaurentPoly(1));
  CHECK(qconc::alexander(qconc::catalog("figure_eight")) == parse_laurent("t^2-3*t+1"));
}

TEST_CASE("alexander agrees with Laplace expansion and is symmetric", "[seifert][oracle]") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    auto v = random_seifert(rng, 1 + static_cast<std::size_t>(trial % 4), 3);
    auto d = qconc::alexander(v);
    INFO("trial " << trial);
    REQUIRE(qconc::doteq(d, oracle::seifert_alexander(to_long(v))));
    REQUIRE(qconc::doteq(d, qconc::reciprocal(d)));
    REQUIRE(abs(d.value_at_one()) == 1);
  }
}

TEST_CASE("lt_signature examples", "[seifert]") {
  auto trefoil = qconc::catalog("trefoil_rh");
  CHECK(qconc::lt_signature(trefoil, UnitRoot(1, 2)) == -2);
  CHECK(qconc::lt_signature(trefoil, UnitRoot(0, 1)) == 0);
  CHECK(qconc::lt_signature(qconc::catalog("figure_eight"), UnitRoot(1, 2)) == 0);
  CHECK(qconc::lt_signature(qconc::catalog("trefoil_lh"), UnitRoot(1, 2)) == 2);
  CHECK(qconc::lt_signature(qconc::catalog("torus(2,5)"), UnitRoot(1, 2)) == -4);
  CHECK(qconc::lt_signature(qconc::catalog("twist(3)"), UnitRoot(1, 2)) == 0);
  // T(3,4) and T(3,5) from braids
  CHECK(qconc::lt_signature(qconc::catalog("torus(3,4)"), UnitRoot(1, 2)) == -6);
  CHECK(qconc::lt_signature(qconc::catalog("torus(3,5)"), UnitRoot(1, 2)) == -8);
  CHECK(qconc::lt_signature(qconc::catalog("torus(2,-5)"), UnitRoot(1, 2)) == 4);
}

TEST_CASE("lt_signature symmetry, parity and float oracle", "[seifert][property][oracle]") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> den(2, 40);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto v = random_seifert(rng, 1 + static_cast<std::size_t>(trial % 3), 2);
    int n = den(rng);
    UnitRoot w(std::uniform_int_distribution<int>(1, n - 1)(rng), n);
    int s = qconc::lt_signature(v, w);
    INFO("trial " << trial << " w = " << w);
    REQUIRE(s == qconc::lt_signature(v, w.conj()));
    if (!qconc::eval_at_unit_root(qconc::alexander(v), w).is_zero()) REQUIRE(s % 2 == 0);
    bool clear = false;
    int f = float_signature(v, w, clear);
    if (clear) {
      ++compared;
      REQUIRE(s == f);
    }
  }
  CHECK(compared > 40);
}

TEST_CASE("signature_profile examples", "[seifert]") {
  auto tp = qconc::signature_profile(qconc::catalog("trefoil_rh"));
  REQUIRE(tp.singular.size() == 1);
  CHECK(tp.singular[0].root == UnitRoot(1, 6));
  REQUIRE(tp.arcs.size() == 2);
  CHECK(tp.arcs[0].value == 0);
  CHECK(tp.arcs[1].value == -2);
  CHECK(tp.arcs[1].sample == UnitRoot(1, 3));

  auto up = qconc::signature_profile(SeifertMatrix{});
  CHECK(up.singular.empty());
  REQUIRE(up.arcs.size() == 1);
  CHECK(up.arcs[0].value == 0);

  auto tw = qconc::signature_profile(qconc::catalog("twist(3)"));
  CHECK(tw.singular.empty());
  CHECK(tw.vanishes());

  CHECK_FALSE(qconc::has_vanishing_signature_function(qconc::catalog("trefoil_rh")));
  CHECK(qconc::has_vanishing_signature_function(qconc::catalog("twist(3)")));
  CHECK(qconc::has_vanishing_signature_function(qconc::catalog("figure_eight")));
}

TEST_CASE("signature_profile locates non-cyclotomic unit-circle roots", "[seifert]") {
  // twist(-2) has Alexander polynomial 2t^2-3t+2 (5_2), roots at cos(theta) = 3/4.
  auto v = qconc::catalog("twist(-2)");
  CHECK(qconc::alexander(v) == parse_laurent("2*t^2-3*t+2"));
  auto prof = qconc::signature_profile(v);
  REQUIRE(prof.singular.size() == 1);
  CHECK_FALSE(prof.singular[0].root);
  // acos(3/4)/(2pi) = 0.11502...
  CHECK(prof.singular[0].lo < mpq_class(11503, 100000));
  CHECK(prof.singular[0].hi > mpq_class(11502, 100000));
  REQUIRE(prof.arcs.size() == 2);
  CHECK(prof.arcs[0].value == 0);
  CHECK(prof.arcs[1].value == -2);
}

TEST_CASE("signature_profile arcs agree with sampled signatures", "[seifert][property]") {
  std::mt19937_64 rng(1234);
  std::vector<SeifertMatrix> knots{qconc::catalog("trefoil_rh"), qconc::catalog("torus(2,7)"),
                                   qconc::catalog("torus(3,4)"), qconc::catalog("twist(-2)"),
                                   qconc::catalog("figure_eight")};
  for (int i = 0; i < 6; ++i) knots.push_back(random_seifert(rng, 1 + static_cast<std::size_t>(i % 3), 2));
  for (const auto& v : knots) {
    auto prof = qconc::signature_profile(v);
    REQUIRE(prof.arcs.size() == prof.singular.size() + 1);
    REQUIRE(prof.arcs[0].value == 0);
    for (const auto& arc : prof.arcs) {
      REQUIRE(arc.lo < arc.sample.turn());
      REQUIRE(arc.sample.turn() < arc.hi);
      // 50 random rationals inside the certified gap
      for (int k = 0; k < 50; ++k) {
        long den = std::uniform_int_distribution<long>(2, 60)(rng);
        mpq_class lo = arc.lo * den, hi = arc.hi * den;
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        a += 1;
        if (mpq_class(a) >= hi) continue;
        long num = std::uniform_int_distribution<long>(a.get_si(), mpz_class(hi.get_num() / hi.get_den()).get_si())(rng);
        if (mpq_class(num, den) <= arc.lo || mpq_class(num, den) >= arc.hi) continue;
        REQUIRE(qconc::lt_signature(v, UnitRoot(num, den)) == arc.value);
      }
    }
  }
}

TEST_CASE("from_braid examples", "[seifert][braid]") {
  auto tre = qconc::from_braid({1, 1, 1}, 2);
  CHECK(qconc::doteq(qconc::alexander(tre), parse_laurent("t-1+t^-1")));
  CHECK(qconc::doteq(qconc::alexander(tre), oracle::torus_alexander(2, 3)));
  CHECK(qconc::from_braid({1}, 2).size() == 0);
  auto t34 = qconc::from_braid({1, 2, 1, 2, 1, 2, 1, 2}, 3);
  CHECK(t34.size() == 6);
  CHECK(qconc::doteq(qconc::alexander(t34), oracle::torus_alexander(3, 4)));
  CHECK_THROWS_AS(qconc::from_braid({1, 1}, 2), std::invalid_argument);   // two components
  CHECK_THROWS_AS(qconc::from_braid({1, 3}, 3), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(qconc::from_braid({1, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(qconc::from_braid({}, 1), std::invalid_argument);
}

TEST_CASE("from_braid on torus braids matches the torus formula", "[seifert][braid][oracle]") {
  for (int p = 2; p <= 5; ++p)
    for (int q = 2; q <= 5; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto v = qconc::from_braid(torus_word(p, q), p);
      INFO("T(" << p << "," << q << ")");
      CHECK(v.size() == static_cast<std::size_t>((p - 1) * (q - 1)));
      CHECK(qconc::doteq(qconc::alexander(v), oracle::torus_alexander(p, q)));
    }
}

TEST_CASE("from_braid agrees with the Burau representation on random braids", "[seifert][braid][oracle]") {
  std::mt19937_64 rng(9001);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    int n = 2 + trial % 4;
    std::uniform_int_distribution<int> len(n, 3 * n + 3), letter(1, n - 1), sign(0, 1);
    std::vector<int> w;
    for (int i = len(rng); i > 0; --i) w.push_back(letter(rng) * (sign(rng) ? 1 : -1));
    SeifertMatrix v;
    try {
      v = qconc::from_braid(w, n);
    } catch (const std::invalid_argument&) {
      continue;  // not a knot
    }
    ++checked;
    LaurentPoly sum;
    for (int i = 0; i < n; ++i) sum += LaurentPoly::monomial(1, i);
    INFO("n = " << n << ", trial " << trial);
    REQUIRE(qconc::doteq(qconc::alexander(v) * sum, oracle::burau_alexander_times_sum(w, n)));
  }
  CHECK(checked >= 100);
}

TEST_CASE("catalog", "[seifert]") {
  CHECK(qconc::catalog("twist(3)").entries() == IntMatrix{{-1, 1}, {0, 3}});
  CHECK(qconc::catalog("unknot").size() == 0);
  auto t25 = qconc::catalog("torus(2,5)");
  CHECK(t25.size() == 4);
  CHECK(qconc::lt_signature(t25, UnitRoot(1, 2)) == -4);
  CHECK(qconc::catalog("trefoil_lh") == qconc::catalog("trefoil_rh").mirror());
  CHECK(qconc::catalog("torus(5,1)").size() == 0);
  CHECK_THROWS_AS(qconc::catalog("granny"), std::invalid_argument);
  CHECK_THROWS_AS(qconc::catalog("twist"), std::invalid_argument);
  CHECK_THROWS_AS(qconc::catalog("torus(2,4)"), std::invalid_argument);
  CHECK_THROWS_AS(qconc::catalog("twist(x)"), std::invalid_argument);
  CHECK_THROWS_AS(qconc::catalog("trefoil_rh(1)"), std::invalid_argument);
  // torus(2, 2k+1) from the explicit matrix agrees with the braid route
  for (int q : {3, 5, 7}) {
    auto braid = qconc::from_braid(torus_word(2, q), 2);
    auto expl = qconc::catalog("torus(2," + std::to_string(q) + ")");
    CHECK(qconc::alexander(braid) == qconc::alexander(expl));
    CHECK(qconc::lt_signature(braid, UnitRoot(1, 2)) == qconc::lt_signature(expl, UnitRoot(1, 2)));
  }
  for (const auto& name : {"unknot", "trefoil_rh", "trefoil_lh", "figure_eight", "twist(3)", "twist(-4)", "torus(2,5)",
                           "torus(3,4)", "torus(3,-5)", "torus(4,5)"}) {
    auto d = qconc::alexander(qconc::catalog(name));
    INFO(name);
    CHECK(qconc::doteq(d, qconc::reciprocal(d)));
    CHECK(abs(d.value_at_one()) == 1);
  }
}

TEST_CASE("simplest rational inside an open interval", "[seifert]") {
  using qconc::detail::simplest_between;
  CHECK(simplest_between(0, mpq_class(1, 2)) == mpq_class(1, 3));
  CHECK(simplest_between(mpq_class(1, 6), mpq_class(1, 2)) == mpq_class(1, 3));
  CHECK(simplest_between(0, mpq_class(1, 6)) == mpq_class(1, 7));
  CHECK(simplest_between(mpq_class(1, 3), mpq_class(1, 2)) == mpq_class(2, 5));
  CHECK(simplest_between(mpq_class(3, 10), mpq_class(4, 10)) == mpq_class(1, 3));
  CHECK(simplest_between(1, 3) == 2);
}
