#pragma once

// Polynomials over F_p for word-sized odd primes p < 2^31: reduction, gcd,
// distinct-degree and equal-degree (Cantor-Zassenhaus) factorization.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qconc/detail/zpoly.hpp"

namespace qconc::detail {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;

inline u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("invmod: not invertible");
  return powmod(a, p - 2, p);
}

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void ftrim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly reduce_mod(const ZPoly& f, u64 p) {
  FpPoly r(f.size());
  mpz_class t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
    r[i] = t.get_ui();
  }
  ftrim(r);
  return r;
}

inline FpPoly fsub(const FpPoly& a, const FpPoly& b, u64 p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  ftrim(r);
  return r;
}

inline FpPoly fmul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  ftrim(r);
  return r;
}

inline FpPoly fmonic(FpPoly a, u64 p) {
  if (a.empty()) return a;
  u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

inline std::pair<FpPoly, FpPoly> fdivmod(FpPoly a, const FpPoly& b, u64 p) {
  if (b.empty()) throw std::domain_error("fdivmod: division by zero");
  if (a.size() < b.size()) return {{}, a};
  u64 inv = invmod(b.back(), p);
  FpPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    u64 t = mulmod(a[k + b.size() - 1], inv, p);
    q[k] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = (a[k + j] + p - mulmod(t, b[j], p)) % p;
  }
  ftrim(a);
  ftrim(q);
  return {q, a};
}

inline FpPoly fmod(const FpPoly& a, const FpPoly& m, u64 p) { return fdivmod(a, m, p).second; }

inline FpPoly fgcd(FpPoly a, FpPoly b, u64 p) {
  while (!b.empty()) {
    FpPoly r = fmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fmonic(a, p);
}

// Extended gcd for coprime a, b: returns (s, t) with s*a + t*b = 1.
inline std::pair<FpPoly, FpPoly> fbezout(const FpPoly& a, const FpPoly& b, u64 p) {
  FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fdivmod(r0, r1, p);
    FpPoly s2 = fsub(s0, fmul(q, s1, p), p);
    FpPoly t2 = fsub(t0, fmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("fbezout: inputs are not coprime");
  u64 inv = invmod(r0[0], p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  return {s0, t0};
}

inline FpPoly fderivative(const FpPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  ftrim(r);
  return r;
}

// base^e mod m, with e an arbitrary-precision exponent.
inline FpPoly fpowmod(FpPoly base, const mpz_class& e, const FpPoly& m, u64 p) {
  FpPoly r{1};
  r = fmod(r, m, p);
  base = fmod(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = fmod(fmul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fmod(fmul(r, base, p), m, p);
  }
  return r;
}

inline bool fsquarefree(const FpPoly& f, u64 p) {
  FpPoly d = fderivative(f, p);
  if (d.empty()) return false;
  return fgcd(f, d, p).size() == 1;
}

// Distinct-degree factorization of a monic squarefree f: pairs (d, product of
// all irreducible factors of degree d).
inline std::vector<std::pair<int, FpPoly>> distinct_degree(FpPoly f, u64 p) {
  std::vector<std::pair<int, FpPoly>> out;
  FpPoly x{0, 1};
  FpPoly h = fmod(x, f, p);
  const mpz_class pe(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = fpowmod(h, pe, f, p);
    FpPoly g = fgcd(f, fsub(h, x, p), p);
    if (g.size() > 1) {
      out.emplace_back(d, g);
      f = fdivmod(f, g, p).first;
      h = fmod(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(degree(f), fmonic(f, p));
  return out;
}

// Splits a monic product of irreducibles of common degree d into its factors.
inline void equal_degree(const FpPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  int n = degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coeff(0, p - 1);
  for (;;) {
    FpPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coeff(rng);
    ftrim(a);
    if (a.size() <= 1) continue;
    FpPoly b = fpowmod(a, e, g, p);
    b = fsub(b, FpPoly{1}, p);
    FpPoly h = fgcd(g, b, p);
    if (h.size() > 1 && degree(h) < n) {
      equal_degree(h, d, p, rng, out);
      equal_degree(fdivmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace qconc::detail
