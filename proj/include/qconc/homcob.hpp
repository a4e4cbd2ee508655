#pragma once

// Finitely presented abelian groups over Z: Smith normal form, kernels and
// cokernels of homomorphisms, and isomorphism tests after inverting an
// integer. Used to check the first-homology bookkeeping of the cabling
// cobordism.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qconc/detail/matrix.hpp"

namespace qconc {

// U * A * V == D with U, V unimodular; D diagonal with d1 | d2 | ... >= 0.
struct SnfResult {
  IntMatrix u, u_inv, v, v_inv, d;
  std::vector<mpz_class> diagonal;  // min(rows, cols) entries
  std::size_t rank = 0;
};

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner) {
  const std::size_t rows = a.size(), cols = b.empty() ? 0 : b[0].size();
  IntMatrix c = zero_matrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

namespace detail {

class SnfWorker {
 public:
  SnfWorker(IntMatrix a, std::size_t rows, std::size_t cols)
      : a_(std::move(a)), m_(rows), n_(cols), u_(identity_matrix(rows)), ui_(identity_matrix(rows)),
        v_(identity_matrix(cols)), vi_(identity_matrix(cols)) {}

  SnfResult run() {
    const std::size_t steps = std::min(m_, n_);
    std::size_t t = 0;
    for (; t < steps; ++t) {
      if (!place_pivot(t)) break;
      while (true) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m_; ++i) {
          if (a_[i][t] == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), a_[t][t].get_mpz_t());
          add_row(i, t, -q);
          if (a_[i][t] != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (a_[t][j] == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), a_[t][t].get_mpz_t());
          add_col(j, t, -q);
          if (a_[t][j] != 0) dirty = true;
        }
        if (dirty) {
          place_pivot(t);
          continue;
        }
        // Divisibility: a pivot must divide the whole remaining block.
        std::optional<std::size_t> bad;
        for (std::size_t i = t + 1; i < m_ && !bad; ++i)
          for (std::size_t j = t + 1; j < n_; ++j)
            if (!mpz_divisible_p(a_[i][j].get_mpz_t(), a_[t][t].get_mpz_t())) {
              bad = i;
              break;
            }
        if (!bad) break;
        add_row(t, *bad, 1);
      }
      if (a_[t][t] < 0) negate_row(t);
    }
    SnfResult r;
    r.rank = t;
    for (std::size_t i = 0; i < steps; ++i) r.diagonal.push_back(a_[i][i]);
    r.d = std::move(a_);
    r.u = std::move(u_);
    r.u_inv = std::move(ui_);
    r.v = std::move(v_);
    r.v_inv = std::move(vi_);
    return r;
  }

 private:
  // Smallest nonzero |a_ij| with i, j >= t; ties go to the lower row, then column.
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m_; ++i)
      for (std::size_t j = t; j < n_; ++j) {
        if (a_[i][j] == 0) continue;
        if (!best || abs(a_[i][j]) < abs(a_[best->first][best->second])) best = {i, j};
      }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  // row_i += c * row_k, i.e. A <- E A with E = I + c e_i e_k^T.
  void add_row(std::size_t i, std::size_t k, const mpz_class& c) {
    for (std::size_t j = 0; j < n_; ++j) a_[i][j] += c * a_[k][j];
    for (std::size_t j = 0; j < m_; ++j) u_[i][j] += c * u_[k][j];
    for (std::size_t j = 0; j < m_; ++j) ui_[j][k] -= c * ui_[j][i];
  }
  // col_j += c * col_k, i.e. A <- A E with E = I + c e_k e_j^T.
  void add_col(std::size_t j, std::size_t k, const mpz_class& c) {
    for (std::size_t i = 0; i < m_; ++i) a_[i][j] += c * a_[i][k];
    for (std::size_t i = 0; i < n_; ++i) v_[i][j] += c * v_[i][k];
    for (std::size_t i = 0; i < n_; ++i) vi_[k][i] -= c * vi_[j][i];
  }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a_[i], a_[k]);
    std::swap(u_[i], u_[k]);
    for (auto& row : ui_) std::swap(row[i], row[k]);
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a_) std::swap(row[j], row[k]);
    for (auto& row : v_) std::swap(row[j], row[k]);
    std::swap(vi_[j], vi_[k]);
  }
  void negate_row(std::size_t i) {
    for (auto& x : a_[i]) x = -x;
    for (auto& x : u_[i]) x = -x;
    for (auto& row : ui_) row[i] = -row[i];
  }

  IntMatrix a_;
  std::size_t m_, n_;
  IntMatrix u_, ui_, v_, vi_;
};

}  // namespace detail

// Matrices carry their column count explicitly so that 0-column matrices
// with rows (and 0-row matrices with columns) are representable.
inline SnfResult smith_normal_form(const IntMatrix& a, std::size_t rows, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");
  if (a.size() != rows) throw std::invalid_argument("smith_normal_form: wrong row count");
  return detail::SnfWorker(a, rows, cols).run();
}

inline SnfResult smith_normal_form(const IntMatrix& a) {
  return smith_normal_form(a, a.size(), a.empty() ? 0 : a[0].size());
}

// Z^n / (column span of relations), relations given as an n x r matrix.
struct PresentedGroup {
  std::vector<std::string> generators;
  IntMatrix relations;  // generators.size() rows
  std::size_t relation_count = 0;

  PresentedGroup() = default;
  PresentedGroup(std::vector<std::string> gens, IntMatrix rel, std::size_t nrel)
      : generators(std::move(gens)), relations(std::move(rel)), relation_count(nrel) {
    if (relations.size() != generators.size()) throw std::invalid_argument("PresentedGroup: one row per generator");
    for (const auto& row : relations)
      if (row.size() != relation_count) throw std::invalid_argument("PresentedGroup: ragged relation matrix");
  }

  static PresentedGroup free_on(std::vector<std::string> gens) {
    std::size_t n = gens.size();
    return PresentedGroup(std::move(gens), zero_matrix(n, 0), 0);
  }

  std::size_t rank() const { return generators.size(); }

  // Cyclic decomposition: 0 entries are Z, entries > 1 are Z/d; trivial
  // factors are dropped. Torsion first, ascending, then free factors.
  std::vector<mpz_class> invariants() const {
    auto snf = smith_normal_form(relations, generators.size(), relation_count);
    std::vector<mpz_class> torsion;
    std::size_t free_rank = generators.size() - snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i)
      if (snf.diagonal[i] != 1) torsion.push_back(snf.diagonal[i]);
    for (std::size_t i = 0; i < free_rank; ++i) torsion.push_back(0);
    return torsion;
  }
};

inline std::string describe_invariants(const std::vector<mpz_class>& inv) {
  if (inv.empty()) return "0";
  std::string out;
  std::size_t free_rank = 0;
  for (const auto& d : inv) {
    if (d == 0) {
      ++free_rank;
      continue;
    }
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " + ";
    out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  return out;
}

inline std::string describe(const PresentedGroup& g) { return describe_invariants(g.invariants()); }

namespace detail {

// Integer solution X of A X = B (A is m x n, B is m x k), if one exists.
inline std::optional<IntMatrix> solve_integral(const IntMatrix& a, std::size_t n, const IntMatrix& b, std::size_t k) {
  const std::size_t m = a.size();
  auto snf = smith_normal_form(a, m, n);
  IntMatrix ub = multiply(snf.u, b, m);
  IntMatrix y = zero_matrix(n, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i < snf.rank) {
        if (!mpz_divisible_p(ub[i][j].get_mpz_t(), snf.diagonal[i].get_mpz_t())) return std::nullopt;
        y[i][j] = ub[i][j] / snf.diagonal[i];
      } else if (ub[i][j] != 0) {
        return std::nullopt;
      }
    }
  return multiply(snf.v, y, n);
}

inline IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i].insert(c[i].end(), b[i].begin(), b[i].end());
  return c;
}

}  // namespace detail

// A homomorphism given on generators: column j is the image of source
// generator j in target coordinates.
struct MarkedHom {
  PresentedGroup source, target;
  IntMatrix matrix;  // target.rank() x source.rank()

  MarkedHom(PresentedGroup src, PresentedGroup tgt, IntMatrix m)
      : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.size() != target.rank()) throw std::invalid_argument("MarkedHom: one row per target generator");
    for (const auto& row : matrix)
      if (row.size() != source.rank()) throw std::invalid_argument("MarkedHom: one column per source generator");
    // Relations of the source must map into the relation lattice of the target.
    IntMatrix image = multiply(matrix, source.relations, source.rank());
    if (!detail::solve_integral(target.relations, target.relation_count, image, source.relation_count))
      throw std::invalid_argument("MarkedHom: relations of the source do not map to relations of the target");
  }

  PresentedGroup cokernel() const {
    std::vector<std::string> gens = target.generators;
    return PresentedGroup(gens, detail::hconcat(matrix, target.relations), source.rank() + target.relation_count);
  }

  PresentedGroup kernel() const {
    const std::size_t s = source.rank(), t = target.rank();
    // Preimage lattice L = { x : M x in im R_t }, from the nullspace of [M | -R_t].
    IntMatrix neg = target.relations;
    for (auto& row : neg)
      for (auto& x : row) x = -x;
    const std::size_t width = s + target.relation_count;
    auto snf = smith_normal_form(detail::hconcat(matrix, neg), t, width);
    IntMatrix span = zero_matrix(s, width - snf.rank);
    for (std::size_t c = snf.rank; c < width; ++c)
      for (std::size_t i = 0; i < s; ++i) span[i][c - snf.rank] = snf.v[i][c];
    // Basis of L: columns of U^-1 scaled by the nonzero diagonal.
    auto lat = smith_normal_form(span, s, width - snf.rank);
    const std::size_t r = lat.rank;
    // Source relations in that basis: y_i = (U R_s)_i / d_i.
    IntMatrix ur = multiply(lat.u, source.relations, s);
    IntMatrix rel = zero_matrix(r, source.relation_count);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < source.relation_count; ++j) rel[i][j] = ur[i][j] / lat.diagonal[i];
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back("k" + std::to_string(i + 1));
    return PresentedGroup(gens, rel, source.relation_count);
  }
};

struct LocalizationCheck {
  std::vector<mpz_class> kernel, cokernel;
  std::vector<mpz_class> localized_kernel, localized_cokernel;  // what survives inverting p
  bool integral_iso = false;
  bool iso_after_inverting = false;
};

namespace detail {

inline mpz_class strip_prime_factors(mpz_class d, const mpz_class& p) {
  mpz_class g;
  while (true) {
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    if (g == 1) return d;
    d /= g;
  }
}

inline std::vector<mpz_class> localize(const std::vector<mpz_class>& inv, const mpz_class& p) {
  std::vector<mpz_class> out;
  for (const auto& d : inv) {
    if (d == 0) {
      out.push_back(0);
      continue;
    }
    mpz_class r = strip_prime_factors(d, p);
    if (r != 1) out.push_back(r);
  }
  std::stable_partition(out.begin(), out.end(), [](const mpz_class& d) { return d != 0; });
  return out;
}

}  // namespace detail

// Whether h becomes an isomorphism after inverting p (every prime factor of p):
// kernel and cokernel must be finite of order dividing a power of p.
inline LocalizationCheck localize_iso_check(const MarkedHom& h, const mpz_class& p) {
  if (p < 1) throw std::invalid_argument("localize_iso_check: p must be positive");
  LocalizationCheck c;
  c.kernel = h.kernel().invariants();
  c.cokernel = h.cokernel().invariants();
  c.localized_kernel = detail::localize(c.kernel, p);
  c.localized_cokernel = detail::localize(c.cokernel, p);
  c.integral_iso = c.kernel.empty() && c.cokernel.empty();
  c.iso_after_inverting = c.localized_kernel.empty() && c.localized_cokernel.empty();
  return c;
}

struct MayerVietorisH1 {
  PresentedGroup cokernel;
  bool injective = false;
  std::vector<MarkedHom> marked;  // each target generator into the cokernel
};

// psi: Z<source labels> -> Z<target labels>, one column per source generator.
inline MayerVietorisH1 mayer_vietoris_h1(const IntMatrix& psi, const std::vector<std::string>& source_labels,
                                         const std::vector<std::string>& target_labels) {
  if (psi.size() != target_labels.size()) throw std::invalid_argument("mayer_vietoris_h1: one row per target label");
  for (const auto& row : psi)
    if (row.size() != source_labels.size()) throw std::invalid_argument("mayer_vietoris_h1: one column per source label");
  MayerVietorisH1 mv;
  mv.cokernel = PresentedGroup(target_labels, psi, source_labels.size());
  mv.injective = smith_normal_form(psi, target_labels.size(), source_labels.size()).rank == source_labels.size();
  for (std::size_t g = 0; g < target_labels.size(); ++g) {
    IntMatrix col = zero_matrix(target_labels.size(), 1);
    col[g][0] = 1;
    mv.marked.emplace_back(PresentedGroup::free_on({target_labels[g]}), mv.cokernel, col);
  }
  return mv;
}

struct CobordismCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  IntMatrix matrix;  // the map checked, in the generators of its source and target
};

struct CobordismReport {
  std::int64_t p = 1;
  std::int64_t at_prime = 1;  // inverted integer
  std::vector<CobordismCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// First-homology checks for the cobordism obtained from the cable exterior by
// a 1-handle and a 2-handle: H1(W) = <mu, x | mu = p x>. Localization inverts
// `at_prime` (defaults to p itself, i.e. all prime factors of p).
inline CobordismReport verify_paper_cobordism(std::int64_t p, std::optional<std::int64_t> at_prime = std::nullopt) {
  if (p < 1) throw std::invalid_argument("verify_cobordism: p must be positive");
  const std::int64_t inv = at_prime.value_or(p);
  if (inv < 1) throw std::invalid_argument("verify_cobordism: localization prime must be positive");
  CobordismReport rep;
  rep.p = p;
  rep.at_prime = inv;

  const PresentedGroup w({"mu", "x"}, IntMatrix{{1}, {-p}}, 1);
  auto summary = [](const LocalizationCheck& c) {
    return "kernel " + describe_invariants(c.kernel) + ", cokernel " + describe_invariants(c.cokernel) +
           ", localized cokernel " + describe_invariants(c.localized_cokernel);
  };

  {
    MarkedHom h(PresentedGroup::free_on({"mu_K"}), w, IntMatrix{{1}, {0}});
    auto c = localize_iso_check(h, inv);
    bool ok = c.iso_after_inverting && (p == 1 ? c.integral_iso : !c.integral_iso);
    rep.checks.push_back({"companion meridian mu_K -> mu = p x", ok, summary(c), h.matrix});
  }
  {
    MarkedHom h(PresentedGroup::free_on({"mu'"}), w, IntMatrix{{0}, {1}});
    auto c = localize_iso_check(h, inv);
    rep.checks.push_back({"cable meridian mu' -> x", c.integral_iso, summary(c), h.matrix});
  }
  {
    auto mv = mayer_vietoris_h1(IntMatrix{{p}, {-1}}, {"alpha"}, {"mu_U", "mu_K"});
    auto inv_coker = mv.cokernel.invariants();
    bool cyclic = inv_coker.size() == 1 && inv_coker[0] == 0;
    rep.checks.push_back({"Mayer-Vietoris psi: alpha -> (p, -1) injective with cokernel Z", mv.injective && cyclic,
                          std::string("injective ") + (mv.injective ? "yes" : "no") + ", cokernel " +
                              describe_invariants(inv_coker),
                          IntMatrix{{p}, {-1}}});
    auto cu = localize_iso_check(mv.marked[0], inv);
    rep.checks.push_back({"H1(M_U) -> H1(E) is an isomorphism", cu.integral_iso, summary(cu), mv.marked[0].matrix});
    auto ck = localize_iso_check(mv.marked[1], inv);
    rep.checks.push_back({"H1(M_K) -> H1(E) is an isomorphism after inverting p", ck.iso_after_inverting, summary(ck),
                          mv.marked[1].matrix});
  }
  return rep;
}

}  // namespace qconc
