#pragma once

// Integer Laurent polynomials Z[t, t^-1].
//
// A LaurentPoly is stored densely as a lowest exponent plus a coefficient
// vector whose first and last entries are nonzero. The zero polynomial has
// an empty coefficient vector.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qconc {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(mpz_class(c)) {}  // NOLINT(implicit)
  LaurentPoly(const mpz_class& c) {                   // NOLINT(implicit)
    if (c != 0) coeffs_.push_back(c);
  }

  static LaurentPoly monomial(const mpz_class& c, std::int64_t e) {
    LaurentPoly p(c);
    if (!p.is_zero()) p.low_ = e;
    return p;
  }

  // Coefficients listed from exponent `low` upward; zeros at either end are trimmed.
  static LaurentPoly from_coeffs(std::int64_t low, std::vector<mpz_class> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1 && low_ == 0; }

  // Lowest and highest exponents with nonzero coefficients. Zero for the zero polynomial.
  std::int64_t low() const { return low_; }
  std::int64_t high() const {
    return is_zero() ? 0 : low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  // Width of the exponent range; the degree of the canonical representative.
  std::int64_t span() const { return is_zero() ? 0 : high() - low_; }

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  mpz_class coeff(std::int64_t e) const {
    if (is_zero() || e < low_ || e > high()) return 0;
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }
  const mpz_class& leading() const { return coeffs_.back(); }
  const mpz_class& trailing() const { return coeffs_.front(); }

  // Value at t = 1.
  mpz_class value_at_one() const {
    mpz_class s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  // Value at a nonzero rational point.
  mpq_class evaluate(const mpq_class& t) const {
    if (is_zero()) return 0;
    if (t == 0) throw std::domain_error("LaurentPoly::evaluate: t = 0");
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + mpq_class(*it);
    mpq_class base = low_ >= 0 ? t : mpq_class(1) / t;
    for (std::int64_t i = 0, n = low_ >= 0 ? low_ : -low_; i < n; ++i) acc *= base;
    return acc;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int64_t lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
    std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[a.low_ - lo + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[b.low_ - lo + i] += b.coeffs_[i];
    return from_coeffs(lo, std::move(c));
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return from_coeffs(a.low_ + b.low_, std::move(c));
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly shifted(std::int64_t g) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += g;
    return r;
  }

 private:
  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    if (first > 0 || last < coeffs_.size()) {
      coeffs_ = std::vector<mpz_class>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                       coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
      low_ += static_cast<std::int64_t>(first);
    }
  }

  std::int64_t low_ = 0;
  std::vector<mpz_class> coeffs_;
};

// A unit of Z[t, t^-1]: sign * t^shift.
struct LaurentUnit {
  int sign = 1;
  std::int64_t shift = 0;

  LaurentPoly as_poly() const { return LaurentPoly::monomial(sign, shift); }
  friend LaurentUnit operator*(LaurentUnit a, LaurentUnit b) {
    return {a.sign * b.sign, a.shift + b.shift};
  }
  friend bool operator==(LaurentUnit a, LaurentUnit b) = default;
};

// p == unit * canonical, with canonical having lowest exponent 0 and positive
// leading coefficient. The zero polynomial normalizes to itself with the trivial unit.
struct Normalized {
  LaurentUnit unit;
  LaurentPoly canonical;
};

inline Normalized normalize(const LaurentPoly& p) {
  if (p.is_zero()) return {{}, p};
  LaurentUnit u{p.leading() < 0 ? -1 : 1, p.low()};
  LaurentPoly c = p.shifted(-p.low());
  if (u.sign < 0) c = -c;
  return {u, std::move(c)};
}

inline LaurentPoly canonical(const LaurentPoly& p) { return normalize(p).canonical; }

// a == ±t^g * b for some g.
inline bool doteq(const LaurentPoly& a, const LaurentPoly& b) {
  return canonical(a) == canonical(b);
}

// Equivalence class under multiplication by units; compares by canonical representative.
class DoteqClass {
 public:
  explicit DoteqClass(const LaurentPoly& p) : rep_(canonical(p)) {}
  const LaurentPoly& representative() const { return rep_; }
  friend bool operator==(const DoteqClass& a, const DoteqClass& b) { return a.rep_ == b.rep_; }

 private:
  LaurentPoly rep_;
};

// p(t^k).
inline LaurentPoly inflate(const LaurentPoly& p, std::int64_t k) {
  if (k <= 0) throw std::invalid_argument("inflate: k must be positive, got " + std::to_string(k));
  if (p.is_zero() || k == 1) return p;
  const auto& c = p.coefficients();
  std::vector<mpz_class> out((c.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(k)] = c[i];
  return LaurentPoly::from_coeffs(p.low() * k, std::move(out));
}

// p(t^-1).
inline LaurentPoly reciprocal(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  std::vector<mpz_class> c(p.coefficients().rbegin(), p.coefficients().rend());
  return LaurentPoly::from_coeffs(-p.high(), std::move(c));
}

inline bool is_self_reciprocal(const LaurentPoly& p) { return doteq(p, reciprocal(p)); }

// Textual form: terms in descending exponent order, e.g. "3*t^2-7*t+3" or
// "t-1+t^-1". Unit coefficients are omitted; t^1 prints as t.
inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    const mpz_class& a = c[k];
    if (a == 0) continue;
    std::int64_t e = p.low() + static_cast<std::int64_t>(k);
    mpz_class mag = abs(a);
    if (a < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 't';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

// Parses the textual form. Accepts optional whitespace, "*" between coefficient
// and t, exponents "t^k" with signed k, bare "t", and repeated exponents (summed).
inline LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("parse_laurent: empty polynomial");

  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_laurent: " + why + " in \"" + std::string(text) + "\"");
  };
  auto read_digits = [&](std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };

  LaurentPoly result;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    mpz_class coeff = 1;
    bool have_coeff = false;
    std::string digits = read_digits(i);
    if (!digits.empty()) {
      coeff = mpz_class(digits);
      have_coeff = true;
    }
    std::int64_t exponent = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coeff) fail("'*' without coefficient");
      ++i;
      if (i >= s.size() || s[i] != 't') fail("expected 't' after '*'");
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          esign = s[i] == '-' ? -1 : 1;
          ++i;
        }
        std::string ed = read_digits(i);
        if (ed.empty()) fail("missing exponent");
        exponent = esign * std::stoll(ed);
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    result += LaurentPoly::monomial(sign * coeff, exponent);
  }
  return result;
}

}  // namespace qconc
