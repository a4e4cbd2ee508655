#pragma once

// Factorization of integer Laurent polynomials into irreducibles, and the
// Fox-Milnor norm test p ≐ f(t) f(t^-1).
//
// Square-free parts are factored by the classical Zassenhaus scheme: a prime
// is chosen among several candidates by distinct-degree counts, the modular
// factorization is Hensel lifted past twice the Mignotte bound, and true
// factors are recovered by exhaustive subset recombination. Degree sets from
// all scanned primes prune the recombination.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qconc/detail/modp.hpp"
#include "qconc/detail/zpoly.hpp"
#include "qconc/laurent.hpp"

namespace qconc {

// p == unit * content * prod factors[i].first ^ factors[i].second.
struct Factorization {
  LaurentUnit unit;
  mpz_class content = 1;
  std::vector<std::pair<LaurentPoly, int>> factors;

  LaurentPoly expand() const {
    LaurentPoly r = unit.as_poly() * LaurentPoly(content);
    for (const auto& [g, m] : factors)
      for (int i = 0; i < m; ++i) r *= g;
    return r;
  }
  bool is_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

// Order used for factor lists: degree first, then coefficients from the
// constant term upward.
inline bool factor_order(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.span() != b.span()) return a.span() < b.span();
  return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(),
                                      b.coefficients().begin(), b.coefficients().end());
}

namespace detail {

// Coefficients in [0, m).
inline ZPoly zmod(const ZPoly& a, const mpz_class& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  trim(r);
  return r;
}

inline ZPoly zmulmod(const ZPoly& a, const ZPoly& b, const mpz_class& m) { return zmod(zmul(a, b), m); }

// Division by a monic polynomial modulo m.
inline std::pair<ZPoly, ZPoly> zdivmod_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
  a = zmod(a, m);
  if (a.size() < b.size()) return {{}, a};
  ZPoly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class t = a[k + b.size() - 1];
    q[k] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[k + j] -= t * b[j];
      mpz_fdiv_r(a[k + j].get_mpz_t(), a[k + j].get_mpz_t(), m.get_mpz_t());
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline ZPoly from_fp(const FpPoly& a) { return ZPoly(a.begin(), a.end()); }

inline ZPoly symmetric(const ZPoly& a, const mpz_class& m) {
  ZPoly r = zmod(a, m);
  mpz_class half = m / 2;
  for (auto& c : r)
    if (c > half) c -= m;
  trim(r);
  return r;
}

// Quadratic Hensel lifting of f ≡ g*h (mod p), h monic, to modulus `target`
// (a power p^(2^j)). Returns (G, H) with f ≡ G*H and H monic.
inline std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, const FpPoly& g0, const FpPoly& h0, u64 p,
                                           const mpz_class& target) {
  auto [s0, t0] = fbezout(g0, h0, p);
  ZPoly g = from_fp(g0), h = from_fp(h0), s = from_fp(s0), t = from_fp(t0);
  mpz_class m(static_cast<unsigned long>(p));
  while (m < target) {
    mpz_class m2 = m * m;
    ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
    auto [q, r] = zdivmod_monic(zmul(s, e), h, m2);
    ZPoly g1 = zmod(zadd(zadd(g, zmul(t, e)), zmul(q, g)), m2);
    ZPoly h1 = zmod(zadd(h, r), m2);
    ZPoly b = zmod(zsub(zadd(zmul(s, g1), zmul(t, h1)), ZPoly{1}), m2);
    auto [c, d] = zdivmod_monic(zmul(s, b), h1, m2);
    ZPoly s1 = zmod(zsub(s, d), m2);
    ZPoly t1 = zmod(zsub(zsub(t, zmul(t, b)), zmul(c, g1)), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
    m = m2;
  }
  return {g, h};
}

// Subset sums of local factor degrees reachable for one prime.
inline std::vector<char> degree_sums(const std::vector<std::pair<int, FpPoly>>& ddf, int n) {
  std::vector<char> ok(static_cast<std::size_t>(n) + 1, 0);
  ok[0] = 1;
  for (const auto& [d, g] : ddf) {
    int count = degree(g) / d;
    for (int c = 0; c < count; ++c)
      for (int s = n - d; s >= 0; --s)
        if (ok[s]) ok[s + d] = 1;
  }
  return ok;
}

// Irreducible factors of a squarefree primitive f with positive leading
// coefficient and deg f >= 1.
inline std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  const int n = degree(f);
  if (n <= 1) return {f};
  const mpz_class& lc = f.back();

  constexpr int kMaxPrimes = 24;
  std::vector<char> allowed(static_cast<std::size_t>(n) + 1, 1);
  u64 best_p = 0;
  std::vector<std::pair<int, FpPoly>> best_ddf;
  int best_count = 0;
  int scanned = 0;
  for (u64 p = 3; scanned < kMaxPrimes; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    FpPoly fp = reduce_mod(f, p);
    if (!fsquarefree(fp, p)) continue;
    ++scanned;
    auto ddf = distinct_degree(fmonic(fp, p), p);
    int count = 0;
    for (const auto& [d, g] : ddf) count += degree(g) / d;
    if (count == 1) return {f};
    auto sums = degree_sums(ddf, n);
    int interior = 0;
    for (int k = 0; k <= n; ++k) {
      allowed[k] = allowed[k] && sums[k];
      if (k > 0 && k < n && allowed[k]) ++interior;
    }
    if (interior == 0) return {f};
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_ddf = std::move(ddf);
      best_count = count;
    }
  }

  const u64 p = best_p;
  std::mt19937_64 rng(0x5eed0000ULL ^ p);
  std::vector<FpPoly> local;
  for (const auto& [d, g] : best_ddf) equal_degree(g, d, p, rng, local);
  std::stable_sort(local.begin(), local.end(),
                   [](const FpPoly& a, const FpPoly& b) { return a.size() < b.size(); });

  // Mignotte: coefficients of lc * (monic factor) are bounded by |lc| * 2^n * ||f||_2.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = abs(lc) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  mpz_class target = 2 * bound + 1;
  mpz_class M(static_cast<unsigned long>(p));
  while (M <= target) M *= M;

  // Lift the chain f ≡ lc * u_0 * u_1 * ... * u_{r-1}.
  std::vector<ZPoly> lifted;
  ZPoly F = zmod(f, M);
  for (std::size_t i = 0; i + 1 < local.size(); ++i) {
    FpPoly rest{static_cast<u64>(mpz_fdiv_ui(lc.get_mpz_t(), p))};
    for (std::size_t j = i + 1; j < local.size(); ++j) rest = fmul(rest, local[j], p);
    auto [G, H] = hensel_lift(F, rest, local[i], p, M);
    lifted.push_back(std::move(H));
    F = std::move(G);
  }
  {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    lifted.push_back(zmod(zscale(F, inv), M));
  }

  std::vector<ZPoly> found;
  ZPoly cur = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool hit = false;
    const mpz_class lcur = cur.back();
    const mpz_class target_const = lcur * cur[0];
    for (;;) {
      int dsum = 0;
      for (auto i : idx) dsum += degree(lifted[i]);
      if (allowed[dsum]) {
        mpz_class ct = lcur;
        for (auto i : idx) {
          ct *= lifted[i].empty() ? mpz_class(0) : lifted[i][0];
          mpz_fdiv_r(ct.get_mpz_t(), ct.get_mpz_t(), M.get_mpz_t());
        }
        if (ct > M / 2) ct -= M;
        if (ct != 0 && mpz_divisible_p(target_const.get_mpz_t(), ct.get_mpz_t())) {
          ZPoly G{lcur};
          for (auto i : idx) G = zmulmod(G, lifted[i], M);
          ZPoly g = primitive_part(symmetric(G, M));
          if (auto q = zdivide(cur, g)) {
            found.push_back(g);
            cur = std::move(*q);
            std::vector<ZPoly> keep;
            for (std::size_t i = 0, k = 0; i < r; ++i) {
              if (k < s && idx[k] == i) {
                ++k;
                continue;
              }
              keep.push_back(std::move(lifted[i]));
            }
            lifted = std::move(keep);
            hit = true;
            break;
          }
        }
      }
      // Next combination in lexicographic order.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (degree(cur) >= 1) found.push_back(primitive_part(cur));
  return found;
}

}  // namespace detail

// Complete factorization over Z. Rejects the zero polynomial.
inline Factorization factor(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  Normalized nz = normalize(p);
  detail::ZPoly q = detail::to_zpoly(nz.canonical);
  Factorization out;
  out.unit = nz.unit;
  out.content = detail::content(q);
  q = detail::primitive_part(q);
  for (const auto& [part, mult] : detail::squarefree_decomposition(q))
    for (const auto& g : detail::factor_squarefree(part)) out.factors.emplace_back(detail::from_zpoly(g), mult);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return factor_order(a.first, b.first); });
  return out;
}

// Factorization of a product, assembled from the factorizations of its
// pieces. Equal to factor() of the expanded product.
inline Factorization factor_product(const std::vector<LaurentPoly>& pieces) {
  Factorization out;
  std::vector<std::pair<LaurentPoly, int>> merged;
  for (const auto& piece : pieces) {
    Factorization f = factor(piece);
    out.unit = out.unit * f.unit;
    out.content *= f.content;
    for (auto& [g, m] : f.factors) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& e) { return e.first == g; });
      if (it == merged.end())
        merged.emplace_back(std::move(g), m);
      else
        it->second += m;
    }
  }
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return factor_order(a.first, b.first); });
  out.factors = std::move(merged);
  return out;
}

// True iff the primitive part of p is irreducible over Q. Rejects zero and
// units times constants.
inline bool is_irreducible(const LaurentPoly& p) {
  if (p.is_zero() || p.span() == 0)
    throw std::invalid_argument("is_irreducible: requires a nonconstant polynomial");
  return factor(p).is_irreducible();
}

// Witness f with the factored polynomial ≐ f(t) f(t^-1), if one exists.
// Self-reciprocal irreducibles need even multiplicity; the others must pair
// with their reciprocals at equal multiplicity; |content| must be a square.
// From each reciprocal pair the later factor in factor_order is used.
inline std::optional<LaurentPoly> fox_milnor_witness(const Factorization& fz) {
  if (!mpz_perfect_square_p(fz.content.get_mpz_t())) return std::nullopt;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), fz.content.get_mpz_t());
  LaurentPoly w(root);
  std::map<std::size_t, bool> used;
  for (std::size_t i = 0; i < fz.factors.size(); ++i) {
    if (used[i]) continue;
    const auto& [g, m] = fz.factors[i];
    LaurentPoly r = canonical(reciprocal(g));
    if (r == g) {
      if (m % 2 != 0) return std::nullopt;
      for (int k = 0; k < m / 2; ++k) w *= g;
      used[i] = true;
      continue;
    }
    std::size_t j = 0;
    while (j < fz.factors.size() && fz.factors[j].first != r) ++j;
    if (j == fz.factors.size() || fz.factors[j].second != m) return std::nullopt;
    used[i] = used[j] = true;
    const LaurentPoly& pick = factor_order(g, r) ? r : g;
    for (int k = 0; k < m; ++k) w *= pick;
  }
  return w;
}

inline std::optional<LaurentPoly> fox_milnor_check(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("fox_milnor_check: zero polynomial");
  return fox_milnor_witness(factor(p));
}

inline std::string to_string(const Factorization& f) {
  std::string out = f.unit.sign < 0 ? "-" : "";
  if (f.unit.shift != 0) out += "t^" + std::to_string(f.unit.shift) + "*";
  out += f.content.get_str();
  for (const auto& [g, m] : f.factors) {
    out += "*(" + to_string(g) + ")";
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out;
}

}  // namespace qconc
