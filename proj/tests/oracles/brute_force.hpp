#pragma once

// Test-only oracles that share no code path with the library's factorization.

#include <gmpxx.h>

#include <cstdlib>
#include <vector>

namespace oracle {

using Coeffs = std::vector<long>;  // index = degree

inline Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Long division over Z by a candidate; true iff it divides exactly.
inline bool divides(const Coeffs& d, Coeffs a) {
  const long lead = d.back();
  if (a.size() < d.size()) return false;
  for (std::size_t k = a.size() - 1;; --k) {
    if (a[k] % lead != 0) return false;
    long q = a[k] / lead;
    for (std::size_t j = 0; j < d.size(); ++j) a[k - (d.size() - 1) + j] -= q * d[j];
    if (k == d.size() - 1) break;
  }
  for (long c : a)
    if (c != 0) return false;
  return true;
}

// Searches every integer polynomial of degree 1..deg/2 with coefficients in
// [-bound, bound] for a proper divisor. For primitive inputs, no divisor means
// irreducible provided the bound covers the factor coefficient bound.
inline bool has_proper_factor(const Coeffs& p, long bound) {
  const int n = static_cast<int>(p.size()) - 1;
  for (int d = 1; 2 * d <= n; ++d) {
    Coeffs cand(static_cast<std::size_t>(d) + 1, -bound);
    for (;;) {
      if (cand.back() > 0 && cand[0] != 0 && divides(cand, p)) return true;
      std::size_t i = 0;
      while (i < cand.size() && cand[i] == bound) cand[i++] = -bound;
      if (i == cand.size()) break;
      ++cand[i];
    }
  }
  return false;
}

}  // namespace oracle
