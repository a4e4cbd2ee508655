#pragma once

// Seifert matrices, the knot catalog, closed-braid import, Alexander
// polynomials and Levine-Tristram signature functions.
//
// Sign convention: the catalog right-handed trefoil [[-1,1],[0,-1]] has
// signature -2 at omega = -1; positive braid crossings give negative
// signatures.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qconc/cyclotomic.hpp"
#include "qconc/detail/interval.hpp"
#include "qconc/detail/matrix.hpp"
#include "qconc/detail/sturm.hpp"
#include "qconc/factor.hpp"
#include "qconc/laurent.hpp"

namespace qconc {

class InvalidSeifertMatrix : public std::invalid_argument {
 public:
  InvalidSeifertMatrix(const mpz_class& det)
      : std::invalid_argument("not a Seifert matrix: det(V - V^T) = " + det.get_str()), det_(det) {}
  const mpz_class& determinant() const { return det_; }

 private:
  mpz_class det_;
};

class SeifertMatrix {
 public:
  SeifertMatrix() = default;  // unknot

  std::size_t size() const { return v_.size(); }
  std::size_t genus() const { return v_.size() / 2; }
  const IntMatrix& entries() const { return v_; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return v_[i][j]; }

  // Seifert matrix of the mirror image.
  SeifertMatrix mirror() const {
    SeifertMatrix m;
    m.v_ = transpose(v_);
    for (auto& row : m.v_)
      for (auto& x : row) x = -x;
    return m;
  }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;
  friend SeifertMatrix validate(IntMatrix v);

 private:
  IntMatrix v_;
};

// Accepts V iff det(V - V^T) = +-1.
inline SeifertMatrix validate(IntMatrix v) {
  if (!is_square(v)) throw std::invalid_argument("Seifert matrix must be square");
  IntMatrix s = v;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s[i][j] = v[i][j] - v[j][i];
  mpz_class d = detail::bareiss_det(std::move(s));
  if (abs(d) != 1) throw InvalidSeifertMatrix(d);
  SeifertMatrix m;
  m.v_ = std::move(v);
  return m;
}

inline SeifertMatrix validate(const std::vector<std::vector<long>>& v) {
  IntMatrix m;
  for (const auto& row : v) m.emplace_back(row.begin(), row.end());
  return validate(std::move(m));
}

// Canonical representative of det(V - t V^T).
inline LaurentPoly alexander(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  detail::PolyMatrix a(n, std::vector<detail::ZPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      detail::ZPoly p{v.at(i, j), -v.at(j, i)};
      detail::trim(p);
      a[i][j] = std::move(p);
    }
  return canonical(detail::from_zpoly(detail::poly_det(std::move(a))));
}

// Signature of (1 - w) V + (1 - conj w) V^T.
inline int lt_signature(const SeifertMatrix& v, const UnitRoot& w) {
  if (w.den() == 1 || v.size() == 0) return 0;
  auto field = CyclotomicField::get(w.den());
  const CycloElem one = CycloElem::integer(field, 1);
  const CycloElem a = one - CycloElem::zeta_power(field, w.num());
  const CycloElem b = a.conj();
  const std::size_t n = v.size();
  std::vector<CycloElem> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.push_back(v.at(i, j) * a + v.at(j, i) * b);
  return hermitian_signature(HermitianMatrix(field, n, std::move(e)));
}

using SignatureOracle = std::function<int(const UnitRoot&)>;

// A root of the Alexander polynomial on the open upper half circle, as an
// angle in turns. Roots of unity are exact; other roots carry an isolating
// interval (z_lo, z_hi) for z = 2cos(2*pi*angle) (a single point when z is
// rational) together with a certified rational enclosure [lo, hi] of the angle.
struct SingularAngle {
  std::optional<UnitRoot> root;
  mpq_class z_lo, z_hi;
  mpq_class lo, hi;
};

// Open arc of the upper half circle between consecutive singular angles;
// [lo, hi] is a certified sub-gap and sample lies strictly inside it.
struct Arc {
  mpq_class lo, hi;
  UnitRoot sample;
  int value = 0;
};

struct SignatureProfile {
  std::vector<SingularAngle> singular;
  std::vector<Arc> arcs;
  bool root_at_one = false;   // Alexander polynomial vanishes at t = 1
  bool root_at_half = false;  // ... and at t = -1

  bool vanishes() const {
    return std::all_of(arcs.begin(), arcs.end(), [](const Arc& a) { return a.value == 0; });
  }
};

namespace detail {

// The rational with the smallest denominator strictly inside (x, y), 0 <= x < y.
inline mpq_class simplest_between(const mpq_class& x, const mpq_class& y) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (fl + 1 < y) return mpq_class(fl + 1);
  mpq_class xf = x - fl, yf = y - fl;
  mpq_class inner;
  if (xf == 0) {
    mpq_class r = 1 / yf;
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    inner = mpq_class(f + 1);
  } else {
    inner = simplest_between(1 / yf, 1 / xf);
  }
  mpq_class out = fl + 1 / inner;
  out.canonicalize();
  return out;
}

// n with Phi_n == g, if any.
inline std::optional<std::int64_t> cyclotomic_index(const LaurentPoly& g) {
  const std::int64_t d = g.span();
  if (g.leading() != 1 || abs(g.trailing()) != 1 || d > 5000) return std::nullopt;
  for (std::int64_t n = 1; n <= 2 * d * d + 2 && n <= kMaxConductor; ++n)
    if (euler_phi(n) == d && cyclotomic_polynomial(n) == g) return n;
  return std::nullopt;
}

// For palindromic g of degree 2m: h with t^-m g(t) = h(t + 1/t).
inline ZPoly z_transform(const LaurentPoly& g) {
  const auto& c = g.coefficients();
  const std::size_t m = (c.size() - 1) / 2;
  if (c.size() % 2 == 0) throw std::logic_error("z_transform: odd degree");
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != c[c.size() - 1 - k]) throw std::logic_error("z_transform: not palindromic");
  // D_0 = 2, D_1 = z, D_{k+1} = z D_k - D_{k-1}: t^k + t^-k = D_k(t + 1/t).
  ZPoly h{c[m]};
  ZPoly prev{2}, cur{0, 1};
  for (std::size_t k = 1; k <= m; ++k) {
    h = zadd(h, zscale(cur, c[m + k]));
    ZPoly next = zsub(zmul(ZPoly{0, 1}, cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  trim(h);
  return h;
}

}  // namespace detail

// Signature function on the upper half circle of a knot with the given
// Alexander polynomial: roots on the circle are located exactly and the oracle
// is evaluated once per arc at a certified sample angle.
inline SignatureProfile compute_profile(const LaurentPoly& delta, const SignatureOracle& oracle) {
  if (delta.is_zero()) throw std::invalid_argument("compute_profile: zero Alexander polynomial");
  SignatureProfile prof;

  struct Item {
    SingularAngle angle;
    std::optional<detail::RootBox> box;
    mpfr_prec_t prec = 64;
  };
  std::vector<Item> items;

  detail::ZPoly h{1};
  if (canonical(delta).span() > 0) {
    for (const auto& [g, mult] : factor(delta).factors) {
      if (auto n = detail::cyclotomic_index(g)) {
        if (*n == 1) prof.root_at_one = true;
        if (*n == 2) prof.root_at_half = true;
        for (std::int64_t a = 1; 2 * a < *n; ++a)
          if (std::gcd(a, *n) == 1) {
            UnitRoot w(a, *n);
            items.push_back({SingularAngle{w, 0, 0, w.turn(), w.turn()}, std::nullopt});
          }
      } else if (is_self_reciprocal(g)) {
        h = detail::zmul(h, detail::z_transform(g));
      }
    }
  }

  if (h.size() > 1) {
    detail::SturmChain chain(detail::to_qpoly(h));
    for (const auto& box : detail::isolate_roots(chain, -2, 2)) {
      Item it{SingularAngle{std::nullopt, box.lo, box.hi, 0, 0}, box};
      items.push_back(it);
    }
    auto enclose = [&](Item& it) {
      auto [lo, hi] = detail::acos_half_turn(it.box->lo, it.box->hi, it.prec);
      it.angle.z_lo = it.box->lo;
      it.angle.z_hi = it.box->hi;
      it.angle.lo = lo;
      it.angle.hi = hi;
    };
    for (auto& it : items)
      if (it.box) enclose(it);

    // Refine until the enclosures are pairwise disjoint and inside (0, 1/2).
    const mpq_class half(1, 2);
    while (true) {
      std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.angle.lo < y.angle.lo; });
      std::vector<char> mark(items.size(), 0);
      bool clean = true;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i].angle.lo <= 0 || items[i].angle.hi >= half) mark[i] = 1, clean = false;
        if (i + 1 < items.size() && items[i].angle.hi >= items[i + 1].angle.lo)
          mark[i] = mark[i + 1] = 1, clean = false;
      }
      if (clean) break;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (!mark[i] || !items[i].box) continue;
        detail::refine(chain, *items[i].box);
        items[i].prec += 4;
        enclose(items[i]);
      }
    }
  } else {
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.angle.lo < y.angle.lo; });
  }

  mpq_class left = 0;
  for (std::size_t i = 0; i <= items.size(); ++i) {
    mpq_class right = i < items.size() ? items[i].angle.lo : mpq_class(1, 2);
    mpq_class s = detail::simplest_between(left, right);
    UnitRoot w(s.get_num().get_si(), s.get_den().get_si());
    prof.arcs.push_back({left, right, w, oracle(w)});
    if (i < items.size()) {
      left = items[i].angle.hi;
      prof.singular.push_back(items[i].angle);
    }
  }
  return prof;
}

inline SignatureProfile signature_profile(const SeifertMatrix& v) {
  return compute_profile(alexander(v), [&v](const UnitRoot& w) { return lt_signature(v, w); });
}

inline bool has_vanishing_signature_function(const SeifertMatrix& v) { return signature_profile(v).vanishes(); }

// Seifert's algorithm on the closure of a braid on `strands` strands. Letter
// +-i is the crossing sigma_i^{+-1} between strands i and i+1. Each column i
// contributes one surface loop per pair of consecutive crossings in it.
inline SeifertMatrix from_braid(const std::vector<int>& word, int strands) {
  if (strands < 2) throw std::invalid_argument("from_braid: need at least 2 strands");
  for (int a : word)
    if (a == 0 || std::abs(a) >= strands)
      throw std::invalid_argument("from_braid: letter " + std::to_string(a) + " out of range for " +
                                  std::to_string(strands) + " strands");
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int a : word) std::swap(perm[static_cast<std::size_t>(std::abs(a) - 1)], perm[static_cast<std::size_t>(std::abs(a))]);
  int cycle = 0, cur = 0;
  do {
    cur = perm[static_cast<std::size_t>(cur)];
    ++cycle;
  } while (cur != 0);
  if (cycle != strands) throw std::invalid_argument("from_braid: closure has more than one component");

  struct Loop {
    int col, from, to;  // positions of the bounding crossings in the word
    int s_from, s_to;   // their signs
  };
  std::vector<Loop> loops;
  for (int c = 1; c < strands; ++c) {
    int prev = -1, prev_sign = 0;
    for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
      if (std::abs(word[static_cast<std::size_t>(pos)]) != c) continue;
      int s = word[static_cast<std::size_t>(pos)] > 0 ? 1 : -1;
      if (prev >= 0) loops.push_back({c, prev, pos, prev_sign, s});
      prev = pos;
      prev_sign = s;
    }
  }

  const std::size_t m = loops.size();
  IntMatrix v = zero_matrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const Loop& x = loops[i];
    v[i][i] = x.s_from == x.s_to ? -x.s_from : 0;
    for (std::size_t j = 0; j < m; ++j) {
      const Loop& y = loops[j];
      if (y.col == x.col && y.from == x.to) {
        // consecutive loops sharing the crossing x.to
        if (x.s_to > 0)
          v[i][j] = 1;
        else
          v[j][i] = -1;
      } else if (y.col == x.col + 1) {
        if (x.from < y.from && y.from < x.to && x.to < y.to) v[i][j] = 1;
        if (y.from < x.from && x.from < y.to && y.to < x.to) v[i][j] = -1;
      }
    }
  }
  return validate(std::move(v));
}

namespace detail {

inline SeifertMatrix torus_two(std::int64_t q) {
  // T(2, q), q odd and positive: size q - 1, -1 on the diagonal, 1 above it.
  const std::size_t n = static_cast<std::size_t>(q - 1);
  IntMatrix v = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i][i] = -1;
    if (i + 1 < n) v[i][i + 1] = 1;
  }
  return validate(std::move(v));
}

}  // namespace detail

inline SeifertMatrix torus_knot(std::int64_t p, std::int64_t q) {
  if (p == 0 || q == 0 || std::gcd(p, q) != 1)
    throw std::invalid_argument("torus(" + std::to_string(p) + "," + std::to_string(q) + "): need coprime nonzero parameters");
  if ((p < 0) != (q < 0)) return torus_knot(std::abs(p), std::abs(q)).mirror();
  p = std::abs(p);
  q = std::abs(q);
  if (p == 1 || q == 1) return {};
  if (p == 2) return detail::torus_two(q);
  if (p > 12 || p * q > 400) throw std::invalid_argument("torus: parameters too large");
  std::vector<int> word;
  for (std::int64_t r = 0; r < q; ++r)
    for (int i = 1; i < p; ++i) word.push_back(i);
  return from_braid(word, static_cast<int>(p));
}

inline SeifertMatrix twist_knot(std::int64_t n) {
  return validate(IntMatrix{{-1, 1}, {0, n}});
}

struct CatalogEntry {
  std::string name;
  std::string description;
};

inline std::vector<CatalogEntry> catalog_entries() {
  return {{"unknot", "trivial knot"},
          {"trefoil_rh", "right-handed trefoil [[-1,1],[0,-1]]"},
          {"trefoil_lh", "left-handed trefoil, mirror of trefoil_rh"},
          {"figure_eight", "figure-eight knot [[1,1],[0,-1]]"},
          {"twist(n)", "twist knot family [[-1,1],[0,n]]"},
          {"torus(p,q)", "torus knot, coprime p,q; closure of (s1...s_{p-1})^q"}};
}

namespace detail {

// "name" or "name(a)" or "name(a,b)".
inline std::pair<std::string, std::vector<std::int64_t>> split_call(std::string_view s) {
  auto open = s.find('(');
  if (open == std::string_view::npos) return {std::string(s), {}};
  if (s.back() != ')') throw std::invalid_argument("malformed knot name: " + std::string(s));
  std::vector<std::int64_t> args;
  std::string_view inner = s.substr(open + 1, s.size() - open - 2);
  while (true) {
    auto comma = inner.find(',');
    std::string piece(inner.substr(0, comma));
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(piece, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (piece.empty() || used != piece.size()) throw std::invalid_argument("malformed knot name: " + std::string(s));
    args.push_back(v);
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  return {std::string(s.substr(0, open)), args};
}

}  // namespace detail

// Number of parameters the catalog name takes, or nullopt for an unknown name.
inline std::optional<std::size_t> catalog_arity(std::string_view name) {
  if (name == "unknot" || name == "trefoil_rh" || name == "trefoil_lh" || name == "figure_eight") return 0;
  if (name == "twist") return 1;
  if (name == "torus") return 2;
  return std::nullopt;
}

inline SeifertMatrix catalog(std::string_view spec) {
  auto [name, args] = detail::split_call(spec);
  auto arity = catalog_arity(name);
  if (!arity) throw std::invalid_argument("unknown catalog knot: " + name);
  if (args.size() != *arity)
    throw std::invalid_argument("catalog knot " + name + " takes " + std::to_string(*arity) + " parameter(s)");
  if (name == "unknot") return {};
  if (name == "trefoil_rh") return validate(IntMatrix{{-1, 1}, {0, -1}});
  if (name == "trefoil_lh") return validate(IntMatrix{{-1, 1}, {0, -1}}).mirror();
  if (name == "figure_eight") return validate(IntMatrix{{1, 1}, {0, -1}});
  if (name == "twist") return twist_knot(args[0]);
  return torus_knot(args[0], args[1]);
}

}  // namespace qconc
