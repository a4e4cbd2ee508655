#pragma once

// Dense univariate polynomials over Z and Q, indexed by degree (index 0 is the
// constant term). Internal helpers shared by factorization, root isolation and
// the cyclotomic field.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qconc/laurent.hpp"

namespace qconc::detail {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

template <class P>
inline void trim(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class P>
inline int degree(const P& p) {
  return static_cast<int>(p.size()) - 1;  // -1 for zero
}

inline ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline ZPoly zscale(const ZPoly& a, const mpz_class& c) {
  if (c == 0) return {};
  ZPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Primitive part with positive leading coefficient.
inline ZPoly primitive_part(const ZPoly& p) {
  if (p.empty()) return p;
  mpz_class g = content(p);
  if (p.back() < 0) g = -g;
  ZPoly r(p);
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

inline ZPoly derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

// Exact quotient a / b over Z if b divides a in Z[x], otherwise nullopt.
inline std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("zdivide: division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  // Cheap necessary condition on the constant terms.
  if (b[0] != 0 && a[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
  ZPoly r(a);
  ZPoly q(a.size() - b.size() + 1);
  const mpz_class& lb = b.back();
  mpz_class t;
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = r[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[k] = t;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= t * b[j];
  }
  for (const auto& c : r)
    if (c != 0) return std::nullopt;
  trim(q);
  return q;
}

inline ZPoly zdivexact(const ZPoly& a, const ZPoly& b) {
  auto q = zdivide(a, b);
  if (!q) throw std::logic_error("zdivexact: division is not exact");
  return *q;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    mpz_class lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= lead * b[j];
    trim(a);
  }
  return a;
}

// Greatest common divisor in Z[x]; primitive with positive leading coefficient
// times the gcd of the contents.
inline ZPoly zgcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return b.empty() ? ZPoly{} : zscale(primitive_part(b), content(b));
  if (b.empty()) return zscale(primitive_part(a), content(a));
  mpz_class ca = content(a), cb = content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ZPoly x = primitive_part(a), y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = pseudo_rem(x, y);
    x = std::move(y);
    y = r.empty() ? r : primitive_part(r);
  }
  return zscale(primitive_part(x), c);
}

inline mpz_class zeval(const ZPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

// Square-free decomposition of a primitive polynomial with positive leading
// coefficient (Yun): returns (a_i, i) with p = prod a_i^i, each a_i squarefree
// and pairwise coprime; trivial parts omitted.
inline std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p) {
  std::vector<std::pair<ZPoly, int>> out;
  if (p.size() <= 1) return out;
  ZPoly d = derivative(p);
  ZPoly g = primitive_part(zgcd(p, d));
  ZPoly b = zdivexact(p, g);
  ZPoly c = zdivexact(d, g);
  ZPoly bd = zsub(c, derivative(b));
  int i = 1;
  while (b.size() > 1) {
    ZPoly a = primitive_part(zgcd(b, bd));
    ZPoly nb = zdivexact(b, a);
    ZPoly nc = zdivexact(bd, a);
    if (a.size() > 1) out.emplace_back(a, i);
    b = std::move(nb);
    bd = zsub(nc, derivative(b));
    ++i;
  }
  return out;
}

// Conversion between nonzero canonical Laurent polynomials (low exponent 0) and ZPoly.
inline ZPoly to_zpoly(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  if (p.low() < 0) throw std::invalid_argument("to_zpoly: negative exponents");
  ZPoly r(static_cast<std::size_t>(p.high() + 1));
  for (std::int64_t e = p.low(); e <= p.high(); ++e) r[static_cast<std::size_t>(e)] = p.coeff(e);
  return r;
}

inline LaurentPoly from_zpoly(const ZPoly& p) { return LaurentPoly::from_coeffs(0, p); }

// Rational polynomial helpers.

inline QPoly to_qpoly(const ZPoly& p) { return QPoly(p.begin(), p.end()); }

inline QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("qdivmod: division by zero polynomial");
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpq_class t = a[k + b.size() - 1] / b.back();
    q[k] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= t * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline QPoly qderivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

inline mpq_class qeval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

}  // namespace qconc::detail
