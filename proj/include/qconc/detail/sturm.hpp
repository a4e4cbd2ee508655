#pragma once

// Real root isolation over Q with Sturm sequences.

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "qconc/detail/zpoly.hpp"

namespace qconc::detail {

class SturmChain {
 public:
  // h must be squarefree and nonzero.
  explicit SturmChain(const QPoly& h) {
    seq_.push_back(monic_abs(h));
    QPoly d = qderivative(h);
    if (d.empty()) return;
    seq_.push_back(monic_abs(d));
    while (true) {
      QPoly r = qdivmod(seq_[seq_.size() - 2], seq_.back()).second;
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      seq_.push_back(monic_abs(r));
    }
  }

  const QPoly& poly() const { return seq_.front(); }
  bool is_root(const mpq_class& x) const { return qeval(seq_.front(), x) == 0; }

  int variations(const mpq_class& x) const {
    int count = 0, last = 0;
    for (const auto& p : seq_) {
      int s = sgn(qeval(p, x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Distinct roots in (a, b].
  int count(const mpq_class& a, const mpq_class& b) const { return variations(a) - variations(b); }

 private:
  // Positive rescaling keeps every sign and shrinks coefficients.
  static QPoly monic_abs(QPoly p) {
    mpq_class lc = abs(p.back());
    for (auto& c : p) c /= lc;
    return p;
  }

  std::vector<QPoly> seq_;
};

// A real root either equal to lo == hi, or the unique root in the open (lo, hi).
struct RootBox {
  mpq_class lo, hi;
  bool exact = false;
};

// Roots in (a, b], one box each, ascending.
inline std::vector<RootBox> isolate_roots(const SturmChain& chain, const mpq_class& a, const mpq_class& b) {
  std::vector<RootBox> out;
  struct Pending {
    mpq_class lo, hi;
  };
  std::vector<Pending> stack{{a, b}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    int n = chain.count(cur.lo, cur.hi);
    if (n == 0) continue;
    if (n == 1) {
      if (chain.is_root(cur.hi))
        out.push_back({cur.hi, cur.hi, true});
      else
        out.push_back({cur.lo, cur.hi, false});
      continue;
    }
    mpq_class mid = (cur.lo + cur.hi) / 2;
    stack.push_back({mid, cur.hi});
    stack.push_back({cur.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RootBox& x, const RootBox& y) { return x.lo < y.lo; });
  return out;
}

// Halves a non-exact box.
inline void refine(const SturmChain& chain, RootBox& box) {
  if (box.exact) return;
  mpq_class mid = (box.lo + box.hi) / 2;
  if (chain.is_root(mid)) {
    box = {mid, mid, true};
  } else if (chain.count(box.lo, mid) == 1) {
    box.hi = mid;
  } else {
    box.lo = mid;
  }
}

}  // namespace qconc::detail
