#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_n), signs of real elements,
// and signatures of Hermitian matrices over Q(zeta_n).
//
// Elements are residues of rational polynomials modulo Phi_n, stored as an
// integer coordinate vector of length phi(n) over a positive common
// denominator. Zero tests are therefore syntactic.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qconc/detail/interval.hpp"
#include "qconc/detail/zpoly.hpp"
#include "qconc/laurent.hpp"

namespace qconc {

inline constexpr std::int64_t kMaxConductor = 10000;

// omega = exp(2*pi*i * num/den), stored in lowest terms with 0 <= num < den.
class UnitRoot {
 public:
  UnitRoot() = default;
  UnitRoot(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("UnitRoot: denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  mpq_class turn() const { return mpq_class(static_cast<long>(num_), static_cast<unsigned long>(den_)); }

  // omega^k.
  UnitRoot pow(std::int64_t k) const {
    __int128 a = static_cast<__int128>(num_) * k % den_;
    return UnitRoot(static_cast<std::int64_t>(a), den_);
  }
  UnitRoot conj() const { return UnitRoot(den_ - num_, den_); }

  std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend bool operator==(const UnitRoot&, const UnitRoot&) = default;
  friend bool operator<(const UnitRoot& a, const UnitRoot& b) { return a.turn() < b.turn(); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const UnitRoot& w) { return os << w.to_string(); }

inline UnitRoot parse_unit_root(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("missing '/'");
    std::size_t used = 0;
    long long a = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("bad numerator");
    std::string rest = s.substr(slash + 1);
    long long n = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("bad denominator");
    return UnitRoot(a, n);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_unit_root: expected \"a/n\", got \"" + s + "\"");
  }
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

inline int moebius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Phi_n = prod_{d | n} (t^d - 1)^mu(n/d), built with O(n) multiplications and
// exact divisions by binomials.
inline ZPoly cyclotomic_zpoly(std::int64_t n) {
  ZPoly num{1};
  std::vector<std::int64_t> divide_by;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = moebius(n / d);
    if (mu == 1) {
      ZPoly next(num.size() + static_cast<std::size_t>(d));
      for (std::size_t i = 0; i < num.size(); ++i) {
        next[i + static_cast<std::size_t>(d)] += num[i];
        next[i] -= num[i];
      }
      num = std::move(next);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (std::int64_t d : divide_by) {
    // num = q * (t^d - 1)  =>  q_i = q_{i-d} - num_i.
    std::size_t ud = static_cast<std::size_t>(d);
    ZPoly q(num.size() - ud);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = (i >= ud ? q[i - ud] : mpz_class(0)) - num[i];
    num = std::move(q);
  }
  trim(num);
  return num;
}

}  // namespace detail

// The nth cyclotomic polynomial, for 1 <= n <= 10^4.
inline LaurentPoly cyclotomic_polynomial(std::int64_t n) {
  if (n < 1 || n > kMaxConductor)
    throw std::invalid_argument("cyclotomic_polynomial: n must lie in [1, 10000], got " + std::to_string(n));
  return detail::from_zpoly(detail::cyclotomic_zpoly(n));
}

class CyclotomicField {
 public:
  // Shared, immutable field descriptors; construction is cached per conductor.
  static std::shared_ptr<const CyclotomicField> get(std::int64_t n) {
    if (n < 1 || n > kMaxConductor)
      throw std::invalid_argument("CyclotomicField: conductor must lie in [1, 10000], got " + std::to_string(n));
    static std::mutex mu;
    static std::map<std::int64_t, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::shared_ptr<const CyclotomicField>(new CyclotomicField(n));
    return slot;
  }

  std::int64_t conductor() const { return n_; }
  std::size_t degree() const { return phi_; }
  const detail::ZPoly& modulus() const { return modulus_; }

  // Reduces an integer polynomial of any degree in zeta to length phi(n).
  detail::ZPoly reduce(detail::ZPoly p) const {
    // zeta^n = 1 first, then division by the monic Phi_n.
    const std::size_t n = static_cast<std::size_t>(n_);
    if (p.size() > n) {
      for (std::size_t k = n; k < p.size(); ++k) p[k % n] += p[k];
      p.resize(n);
    }
    for (std::size_t k = p.size(); k-- > phi_;) {
      if (p[k] == 0) continue;
      mpz_class c = p[k];
      for (std::size_t j = 0; j <= phi_; ++j) p[k - phi_ + j] -= c * modulus_[j];
    }
    p.resize(phi_);
    return p;
  }

 private:
  explicit CyclotomicField(std::int64_t n)
      : n_(n), phi_(static_cast<std::size_t>(euler_phi(n))), modulus_(detail::cyclotomic_zpoly(n)) {}

  std::int64_t n_;
  std::size_t phi_;
  detail::ZPoly modulus_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

enum class Sign { negative = -1, zero = 0, positive = 1 };

class CycloElem {
 public:
  explicit CycloElem(FieldPtr field) : field_(std::move(field)), num_(field_->degree()), den_(1) {}

  static CycloElem integer(FieldPtr field, const mpz_class& c) {
    CycloElem x(std::move(field));
    x.num_[0] = c;
    return x;
  }
  // zeta^k.
  static CycloElem zeta_power(FieldPtr field, std::int64_t k) {
    std::int64_t n = field->conductor();
    k %= n;
    if (k < 0) k += n;
    detail::ZPoly p(static_cast<std::size_t>(k) + 1);
    p[static_cast<std::size_t>(k)] = 1;
    CycloElem x(field);
    x.num_ = field->reduce(std::move(p));
    return x;
  }
  // Integer polynomial in zeta, reduced.
  static CycloElem from_poly(FieldPtr field, detail::ZPoly p) {
    CycloElem x(field);
    x.num_ = field->reduce(std::move(p));
    return x;
  }

  const FieldPtr& field() const { return field_; }
  std::size_t dimension() const { return num_.size(); }
  mpq_class coord(std::size_t i) const {
    mpq_class q(num_[i], den_);
    q.canonicalize();
    return q;
  }
  const detail::ZPoly& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const {
    for (const auto& c : num_)
      if (c != 0) return false;
    return true;
  }

  // Complex conjugation: the automorphism zeta -> zeta^-1.
  CycloElem conj() const {
    const std::int64_t n = field_->conductor();
    detail::ZPoly p(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < num_.size(); ++k) p[static_cast<std::size_t>((n - static_cast<std::int64_t>(k)) % n)] += num_[k];
    CycloElem x(field_);
    x.num_ = field_->reduce(std::move(p));
    x.den_ = den_;
    return x;
  }

  bool is_real() const { return conj() == *this; }

  CycloElem operator-() const {
    CycloElem x = *this;
    for (auto& c : x.num_) c = -c;
    return x;
  }

  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    check_same(a, b);
    CycloElem x(a.field_);
    if (a.den_ == b.den_) {
      for (std::size_t i = 0; i < x.num_.size(); ++i) x.num_[i] = a.num_[i] + b.num_[i];
      x.den_ = a.den_;
    } else {
      for (std::size_t i = 0; i < x.num_.size(); ++i) x.num_[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
      x.den_ = a.den_ * b.den_;
    }
    x.normalize();
    return x;
  }
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) { return a + (-b); }

  friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    check_same(a, b);
    detail::ZPoly prod(2 * a.num_.size() - 1);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < b.num_.size(); ++j) prod[i + j] += a.num_[i] * b.num_[j];
    }
    CycloElem x(a.field_);
    x.num_ = a.field_->reduce(std::move(prod));
    x.den_ = a.den_ * b.den_;
    x.normalize();
    return x;
  }

  friend CycloElem operator*(const mpz_class& c, const CycloElem& a) {
    CycloElem x = a;
    for (auto& v : x.num_) v *= c;
    x.normalize();
    return x;
  }

  // Multiplicative inverse. Integer pseudo-remainder sequence against Phi_n
  // carrying the cofactor: s_i * x == r_i (mod Phi_n) up to a common scalar,
  // with the joint content of (r_i, s_i) removed at each step.
  CycloElem inverse() const {
    if (is_zero()) throw std::domain_error("CycloElem: inverse of zero");
    detail::ZPoly r0 = field_->modulus(), r1 = num_, s0, s1{1};
    detail::trim(r1);
    while (r1.size() > 1) {
      const mpz_class lc = r1.back();
      std::size_t steps = r0.size() - r1.size() + 1;
      detail::ZPoly q(steps), r = r0;
      // lc^steps * r0 = q * r1 + r
      for (std::size_t k = steps; k-- > 0;) {
        for (auto& c : q) c *= lc;
        for (auto& c : r) c *= lc;
        const mpz_class t = r[k + r1.size() - 1] / lc;
        q[k] += t;
        for (std::size_t j = 0; j < r1.size(); ++j) r[k + j] -= t * r1[j];
      }
      detail::trim(r);
      mpz_class scale = 1;
      mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(steps));
      detail::ZPoly s2 = detail::zsub(detail::zscale(s0, scale), detail::zmul(q, s1));
      mpz_class g = detail::content(r);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), detail::content(s2).get_mpz_t());
      if (g > 1) {
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        for (auto& c : s2) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      }
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // s1 * x = r1[0] (mod Phi_n), so x^-1 = den * s1 / r1[0].
    detail::QPoly coords;
    for (const auto& c : s1) coords.push_back(mpq_class(c * den_, r1[0]));
    for (auto& c : coords) c.canonicalize();
    return from_rational(field_, coords);
  }

  // Element with the given rational coordinates in the power basis (any length).
  static CycloElem from_rational(FieldPtr field, const detail::QPoly& coords) {
    mpz_class den = 1;
    for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    detail::ZPoly p;
    for (const auto& c : coords) p.push_back(mpz_class(c * den));
    CycloElem x(field);
    x.num_ = field->reduce(std::move(p));
    x.den_ = den;
    x.normalize();
    return x;
  }

  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.field_->conductor() == b.field_->conductor() && a.den_ == b.den_ && a.num_ == b.num_;
  }

 private:
  static void check_same(const CycloElem& a, const CycloElem& b) {
    if (a.field_->conductor() != b.field_->conductor())
      throw std::invalid_argument("CycloElem: mismatched cyclotomic fields");
  }

  void normalize() {
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    if (is_zero()) {
      den_ = 1;
      return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }

  FieldPtr field_;
  detail::ZPoly num_;
  mpz_class den_;
};

// Exact sign of a real cyclotomic number. Zero is decided from the reduced
// coordinates; a nonzero value is enclosed with outward-rounded interval
// arithmetic at doubling precision. Termination: the integer combination y of
// powers of zeta is a nonzero algebraic integer whose conjugates are bounded by
// H = sum |coords|, so |y| >= H^-(phi-1).
inline Sign sign_of_real(const CycloElem& x) {
  if (!x.is_real()) throw std::invalid_argument("sign_of_real: element is not real");
  if (x.is_zero()) return Sign::zero;
  const auto& z = x.numerators();
  const std::int64_t n = x.field()->conductor();
  mpz_class height = 0;
  for (const auto& c : z) height += abs(c);
  const mpfr_prec_t hbits = static_cast<mpfr_prec_t>(mpz_sizeinbase(height.get_mpz_t(), 2));
  const mpfr_prec_t limit = static_cast<mpfr_prec_t>(z.size() + 2) * (hbits + 8) + 256;
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    detail::Enclosure acc(prec);
    mpfr_set_zero(acc.lo.get(), 1);
    mpfr_set_zero(acc.hi.get(), 1);
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (z[k] == 0) continue;
      auto c = detail::cos_turn(mpq_class(static_cast<long>(k), static_cast<unsigned long>(n)), prec);
      detail::add_weighted(acc, z[k], c, prec);
    }
    if (int s = acc.sign(); s != 0) return s > 0 ? Sign::positive : Sign::negative;
    if (prec > 2 * limit) throw std::logic_error("sign_of_real: precision bound exceeded");
  }
}

// p(omega) for omega = exp(2*pi*i a/n), as an element of Q(zeta_n).
inline CycloElem eval_at_unit_root(const LaurentPoly& p, const UnitRoot& w) {
  auto field = CyclotomicField::get(w.den());
  const std::int64_t n = w.den();
  detail::ZPoly acc(static_cast<std::size_t>(n));
  for (std::int64_t e = p.low(); !p.is_zero() && e <= p.high(); ++e) {
    mpz_class c = p.coeff(e);
    if (c == 0) continue;
    __int128 k = static_cast<__int128>(w.num()) * e % n;
    if (k < 0) k += n;
    acc[static_cast<std::size_t>(k)] += c;
  }
  return CycloElem::from_poly(field, std::move(acc));
}

// Square Hermitian matrix over one cyclotomic field, row-major.
class HermitianMatrix {
 public:
  HermitianMatrix(FieldPtr field, std::size_t size, std::vector<CycloElem> entries)
      : field_(std::move(field)), size_(size), entries_(std::move(entries)) {
    if (entries_.size() != size_ * size_) throw std::invalid_argument("HermitianMatrix: wrong entry count");
    for (const auto& e : entries_)
      if (e.field()->conductor() != field_->conductor())
        throw std::invalid_argument("HermitianMatrix: entries from a different field");
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = i; j < size_; ++j)
        if (!(at(i, j) == at(j, i).conj())) throw std::invalid_argument("HermitianMatrix: not Hermitian");
  }

  static HermitianMatrix identity(FieldPtr field, std::size_t size) {
    std::vector<CycloElem> e(size * size, CycloElem(field));
    for (std::size_t i = 0; i < size; ++i) e[i * size + i] = CycloElem::integer(field, 1);
    return HermitianMatrix(field, size, std::move(e));
  }

  const FieldPtr& field() const { return field_; }
  std::size_t size() const { return size_; }
  const CycloElem& at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

 private:
  FieldPtr field_;
  std::size_t size_;
  std::vector<CycloElem> entries_;
};

// Number of positive minus number of negative eigenvalues, by congruence
// diagonalization over Q(zeta_n). A nonzero diagonal pivot d contributes
// sign(d) and is eliminated through the Schur complement. If the diagonal of
// the remaining block vanishes but some entry b = a_ij does not, the
// unimodular congruence row_i += x row_j, col_i += conj(x) col_j with x = 1 or
// zeta makes a_ii = x b + conj(x b) nonzero. Zero blocks contribute 0.
inline int hermitian_signature(const HermitianMatrix& m) {
  using Block = std::vector<std::vector<CycloElem>>;
  const FieldPtr& field = m.field();
  Block a(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) a[i].push_back(m.at(i, j));

  int signature = 0;
  while (!a.empty()) {
    const std::size_t n = a.size();
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (!a[i][i].is_zero()) piv = i;

    if (piv == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!a[i][j].is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // zero block
      CycloElem x = CycloElem::integer(field, 1);
      if ((x * a[pi][pj] + (x * a[pi][pj]).conj()).is_zero()) x = CycloElem::zeta_power(field, 1);
      const CycloElem xc = x.conj();
      for (std::size_t r = 0; r < n; ++r) a[r][pi] = a[r][pi] + a[r][pj] * x;
      for (std::size_t c = 0; c < n; ++c) a[pi][c] = a[pi][c] + xc * a[pj][c];
      piv = pi;
    }

    const CycloElem d = a[piv][piv];
    signature += static_cast<int>(sign_of_real(d));
    const CycloElem dinv = d.inverse();
    Block next;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == piv) continue;
      std::vector<CycloElem> row;
      const bool zero_factor = a[r][piv].is_zero();
      const CycloElem f = zero_factor ? CycloElem(field) : a[r][piv] * dinv;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == piv) continue;
        row.push_back(zero_factor || a[piv][c].is_zero() ? a[r][c] : a[r][c] - f * a[piv][c]);
      }
      next.push_back(std::move(row));
    }
    a = std::move(next);
  }
  return signature;
}

}  // namespace qconc
