#include <catch_amalgamated.hpp>

#include <random>

#include "oracles/brute_force.hpp"
#include "qconc/factor.hpp"

using qconc::LaurentPoly;
using qconc::parse_laurent;

namespace {

oracle::Coeffs small_coeffs(const LaurentPoly& canonical) {
  oracle::Coeffs c;
  for (const auto& x : canonical.coefficients()) c.push_back(x.get_si());
  return c;
}

// Irreducibility of a primitive polynomial of degree <= 3 by brute force:
// any proper factorization has a linear factor a*t + b with a | lc and b | c0.
bool brute_irreducible_low_degree(const LaurentPoly& g) {
  auto c = small_coeffs(qconc::canonical(g));
  long bound = std::max(std::labs(c.front()), std::labs(c.back()));
  return !oracle::has_proper_factor(c, bound);
}

LaurentPoly random_poly(std::mt19937_64& rng, int max_degree, int coeff) {
  std::uniform_int_distribution<int> c(-coeff, coeff), d(0, max_degree);
  int deg = d(rng);
  std::vector<mpz_class> v(static_cast<std::size_t>(deg) + 1);
  for (auto& x : v) x = c(rng);
  if (v.back() == 0) v.back() = 1;
  return LaurentPoly::from_coeffs(0, v);
}

}  // namespace

TEST_CASE("factor splits t^4-3t^2+1 into two quadratics", "[factor]") {
  auto f = qconc::factor(parse_laurent("t^4-3*t^2+1"));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair{parse_laurent("t^2-t-1"), 1});
  CHECK(f.factors[1] == std::pair{parse_laurent("t^2+t-1"), 1});
  CHECK(f.content == 1);
  CHECK(f.expand() == parse_laurent("t^4-3*t^2+1"));
  // oracle: the product expands back
  CHECK(oracle::multiply({-1, -1, 1}, {-1, 1, 1}) == oracle::Coeffs{1, 0, -3, 0, 1});
}

TEST_CASE("factor recognises irreducible quadratics", "[factor]") {
  CHECK(qconc::factor(parse_laurent("3*t^2-7*t+3")).is_irreducible());
  CHECK(qconc::factor(parse_laurent("t^2-t+1")).is_irreducible());
  CHECK(brute_irreducible_low_degree(parse_laurent("3*t^2-7*t+3")));
  CHECK(brute_irreducible_low_degree(parse_laurent("t^2-t+1")));
}

TEST_CASE("factor tracks units, content and multiplicities", "[factor]") {
  LaurentPoly p = parse_laurent("-6*t^-2") * parse_laurent("t-1") * parse_laurent("t-1") * parse_laurent("t^2+t+1");
  auto f = qconc::factor(p);
  CHECK(f.unit.sign == -1);
  CHECK(f.content == 6);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair{parse_laurent("t-1"), 2});
  CHECK(f.factors[1] == std::pair{parse_laurent("t^2+t+1"), 1});
  CHECK(f.expand() == p);
  CHECK_THROWS_AS(qconc::factor(LaurentPoly{}), std::invalid_argument);
  CHECK(qconc::factor(LaurentPoly(-4)).factors.empty());
}

TEST_CASE("is_irreducible", "[factor]") {
  CHECK(qconc::is_irreducible(parse_laurent("3*t^2-7*t+3")));
  CHECK(qconc::is_irreducible(parse_laurent("3*t^4-7*t^2+3")));
  CHECK_FALSE(qconc::is_irreducible(parse_laurent("t^4-3*t^2+1")));
  CHECK(qconc::is_irreducible(parse_laurent("6*t^2+4")));  // primitive part 3t^2+2
  CHECK_THROWS_AS(qconc::is_irreducible(LaurentPoly(7)), std::invalid_argument);
  CHECK_THROWS_AS(qconc::is_irreducible(LaurentPoly{}), std::invalid_argument);
  CHECK_THROWS_AS(qconc::is_irreducible(parse_laurent("5*t^3")), std::invalid_argument);
}

TEST_CASE("brute-force oracle confirms 3t^4-7t^2+3 is irreducible", "[factor][oracle]") {
  // Quadratic factors a t^2 + b t + c need a | 3, c | 3 and |b| <= 2 * ||f||_2 < 17.
  CHECK_FALSE(oracle::has_proper_factor({3, 0, -7, 0, 3}, 17));
  CHECK(oracle::has_proper_factor({1, 0, -3, 0, 1}, 17));
}

TEST_CASE("hard recombination cases", "[factor]") {
  // Irreducible over Q but reducible modulo every prime.
  CHECK(qconc::is_irreducible(parse_laurent("t^4+1")));
  CHECK(qconc::is_irreducible(parse_laurent("t^8-40*t^6+352*t^4-960*t^2+576")));
  // Two irreducible factors of degree 30.
  auto f = qconc::factor(qconc::inflate(parse_laurent("t^2-3*t+1"), 30));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == parse_laurent("t^30-t^15-1"));
  CHECK(f.factors[1].first == parse_laurent("t^30+t^15-1"));
  // Cyclotomic splitting of t^24 - 1 into Phi_d for d | 24.
  auto g = qconc::factor(parse_laurent("t^24-1"));
  CHECK(g.factors.size() == 8);
  CHECK(g.expand() == parse_laurent("t^24-1"));
}

TEST_CASE("inflations of the twist knot polynomial stay irreducible", "[factor]") {
  auto delta = parse_laurent("3*t-7+3*t^-1");
  for (int k = 1; k <= 12; ++k) {
    INFO("k = " << k);
    CHECK(qconc::is_irreducible(qconc::inflate(delta, k)));
  }
}

TEST_CASE("fox_milnor_check examples", "[factor][fox-milnor]") {
  auto w = qconc::fox_milnor_check(parse_laurent("t^4-3*t^2+1"));
  REQUIRE(w);
  CHECK(*w == parse_laurent("t^2+t-1"));
  CHECK(qconc::doteq(*w * qconc::reciprocal(*w), parse_laurent("t^4-3*t^2+1")));

  CHECK_FALSE(qconc::fox_milnor_check(parse_laurent("t^2-3*t+1")));
  CHECK(qconc::fox_milnor_check(LaurentPoly(1)) == LaurentPoly(1));
  CHECK_FALSE(qconc::fox_milnor_check(parse_laurent("3*t^2-7*t+3") * parse_laurent("3*t^4-7*t^2+3")));
  CHECK(qconc::fox_milnor_check(LaurentPoly(9)) == LaurentPoly(3));
  CHECK(qconc::fox_milnor_check(LaurentPoly(-9)) == LaurentPoly(3));
  CHECK_FALSE(qconc::fox_milnor_check(LaurentPoly(3)));
  CHECK_THROWS_AS(qconc::fox_milnor_check(LaurentPoly{}), std::invalid_argument);

  // (t-1) is self-reciprocal up to a unit: (t-1)(t^-1-1) ≐ (t-1)^2.
  auto sq = qconc::fox_milnor_check(parse_laurent("t^2-2*t+1"));
  REQUIRE(sq);
  CHECK(*sq == parse_laurent("t-1"));
  CHECK_FALSE(qconc::fox_milnor_check(parse_laurent("t-1")));
}

TEST_CASE("fox_milnor_check finds witnesses for norms", "[factor][fox-milnor][property]") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly f = random_poly(rng, 6, 5);
    if (f.is_zero()) continue;
    LaurentPoly norm = f * qconc::reciprocal(f);
    INFO("f = " << f);
    auto w = qconc::fox_milnor_check(norm);
    REQUIRE(w);
    REQUIRE(qconc::doteq(*w * qconc::reciprocal(*w), norm));
  }
}

TEST_CASE("factorization is multiplicative and reconstructs its input", "[factor][property]") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 150; ++trial) {
    LaurentPoly p = random_poly(rng, 5, 4), q = random_poly(rng, 5, 4);
    if (p.is_zero() || q.is_zero()) continue;
    INFO("p = " << p << ", q = " << q);
    auto fpq = qconc::factor(p * q);
    REQUIRE(fpq.expand() == p * q);
    auto merged = qconc::factor_product({p, q});
    REQUIRE(merged.factors == fpq.factors);
    REQUIRE(merged.content == fpq.content);
    REQUIRE(merged.unit == fpq.unit);
    for (const auto& [g, m] : fpq.factors) {
      REQUIRE(g.leading() > 0);
      REQUIRE(g.low() == 0);
      if (g.span() <= 3) REQUIRE(brute_irreducible_low_degree(g));
    }
    for (std::size_t i = 1; i < fpq.factors.size(); ++i)
      REQUIRE(qconc::factor_order(fpq.factors[i - 1].first, fpq.factors[i].first));
  }
}
