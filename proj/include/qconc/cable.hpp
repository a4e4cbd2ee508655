#pragma once

// (p,q)-cables at the level of invariants. A KnotBundle packages an Alexander
// polynomial with a signature oracle, so cables can stand in for knots without
// constructing their Seifert matrices.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qconc/cyclotomic.hpp"
#include "qconc/laurent.hpp"
#include "qconc/seifert.hpp"

namespace qconc {

struct KnotBundle {
  std::string label;
  LaurentPoly alexander;
  SignatureOracle oracle;
  SignatureProfile profile;
  std::optional<SeifertMatrix> source;  // present for bundles built from a matrix

  int signature(const UnitRoot& w) const { return oracle(w); }
};

inline KnotBundle bundle_of(const SeifertMatrix& v, std::string label) {
  KnotBundle b;
  b.label = std::move(label);
  b.alexander = alexander(v);
  b.oracle = [v](const UnitRoot& w) { return lt_signature(v, w); };
  b.profile = signature_profile(v);
  b.source = v;
  return b;
}

// Torus knot invariants in closed form. T(p,q) with q < 0 is the mirror of
// T(p,-q); T(p,+-1) and T(1,q) are unknotted.
inline LaurentPoly torus_alexander(std::int64_t p, std::int64_t q) {
  if (p < 1 || q == 0 || std::gcd(p, q) != 1) throw std::invalid_argument("torus_alexander: need p >= 1, gcd(p,q) = 1");
  q = std::abs(q);
  // (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) = product of Phi_d, d | pq, d not dividing p or q.
  LaurentPoly r(1);
  for (std::int64_t d = 2; d <= p * q; ++d)
    if ((p * q) % d == 0 && p % d != 0 && q % d != 0) r *= cyclotomic_polynomial(d);
  return r;
}

// Litherland's count: with S = { i/p + j/q : 0 < i < p, 0 < j < q } and x the
// angle of w in turns, sigma = #{s outside [x, x+1]} - #{s in (x, x+1)}.
// Points with s = x or s = x + 1 count for neither side, which gives the
// average of the one-sided limits at roots of the Alexander polynomial.
inline int torus_signature(std::int64_t p, std::int64_t q, const UnitRoot& w) {
  if (p < 1 || q == 0 || std::gcd(p, q) != 1) throw std::invalid_argument("torus_signature: need p >= 1, gcd(p,q) = 1");
  if (q < 0) return -torus_signature(p, -q, w);
  // Compare pq*s = iq + jp against N = pq*x, in units of 1/(pq*n).
  const std::int64_t n = w.den();
  const __int128 x = static_cast<__int128>(w.num()) * p * q;  // pq*x scaled by n
  const __int128 one = static_cast<__int128>(p) * q * n;
  int inside = 0, outside = 0;
  for (std::int64_t i = 1; i < p; ++i)
    for (std::int64_t j = 1; j < q; ++j) {
      __int128 s = (static_cast<__int128>(i) * q + static_cast<__int128>(j) * p) * n;
      if (s > x && s < x + one)
        ++inside;
      else if (s < x || s > x + one)
        ++outside;
    }
  return outside - inside;
}

inline void check_cable_parameters(std::int64_t p, std::int64_t q) {
  if (p < 1) throw std::invalid_argument("cable: p must be positive, got " + std::to_string(p));
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("cable: parameters (" + std::to_string(p) + "," + std::to_string(q) + ") are not coprime");
}

inline LaurentPoly cable_alexander(const KnotBundle& k, std::int64_t p, std::int64_t q) {
  check_cable_parameters(p, q);
  return canonical(inflate(k.alexander, p) * torus_alexander(p, q));
}

inline int cable_signature(const KnotBundle& k, std::int64_t p, std::int64_t q, const UnitRoot& w) {
  check_cable_parameters(p, q);
  return k.signature(w.pow(p)) + torus_signature(p, q, w);
}

inline KnotBundle cable_bundle(const KnotBundle& k, std::int64_t p, std::int64_t q) {
  check_cable_parameters(p, q);
  KnotBundle b;
  b.label = k.label + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  b.alexander = cable_alexander(k, p, q);
  SignatureOracle inner = k.oracle;
  b.oracle = [inner, p, q](const UnitRoot& w) { return inner(w.pow(p)) + torus_signature(p, q, w); };
  b.profile = compute_profile(b.alexander, b.oracle);
  return b;
}

}  // namespace qconc
