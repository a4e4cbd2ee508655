#pragma once

// Dense integer matrices and fraction-free determinants.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qconc/detail/zpoly.hpp"

namespace qconc {

using IntMatrix = std::vector<std::vector<mpz_class>>;

inline IntMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return IntMatrix(rows, std::vector<mpz_class>(cols));
}

inline IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t = zero_matrix(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline bool is_square(const IntMatrix& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) return false;
  return true;
}

namespace detail {

// Bareiss elimination; every division is exact.
inline mpz_class bareiss_det(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

using PolyMatrix = std::vector<std::vector<ZPoly>>;

// Bareiss over Z[t].
inline ZPoly poly_det(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return {1};
  int sign = 1;
  ZPoly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = zdivexact(zsub(zmul(a[i][j], a[k][k]), zmul(a[i][k], a[k][j])), prev);
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : zscale(a[n - 1][n - 1], -1);
}

}  // namespace detail
}  // namespace qconc
