#pragma once

// Rational-concordance obstructions between two knots: Levine-Tristram
// signatures at prime-order roots of unity, and the Fox-Milnor condition on
// delta0(t^k) * delta1(t^k) for complexities k = 1..kmax.

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qconc/cable.hpp"
#include "qconc/cyclotomic.hpp"
#include "qconc/factor.hpp"
#include "qconc/laurent.hpp"

namespace qconc {

inline constexpr std::int64_t kDefaultPrimeBound = 13;
inline constexpr int kDefaultKmax = 6;

struct SignatureWitness {
  UnitRoot omega;
  int value0 = 0, value1 = 0;
};

struct SignatureVerdict {
  std::optional<SignatureWitness> witness;  // OBSTRUCTED iff present
  std::vector<std::int64_t> primes_scanned;
  int angles_compared = 0;
  int angles_skipped = 0;  // roots of either Alexander polynomial

  bool obstructed() const { return witness.has_value(); }
};

struct FmVerdict {
  int k = 0;
  std::optional<LaurentPoly> witness;  // PASS iff present

  bool pass() const { return witness.has_value(); }
};

enum class Summary { obstructed, inconclusive };

inline std::string to_string(Summary s) { return s == Summary::obstructed ? "OBSTRUCTED" : "INCONCLUSIVE"; }

struct StepTiming {
  std::string step;
  std::int64_t microseconds = 0;
};

struct ObstructionReport {
  std::string label0, label1;
  std::int64_t prime_bound = kDefaultPrimeBound;
  int kmax = kDefaultKmax;
  SignatureVerdict signature;
  std::vector<FmVerdict> fm;
  Summary summary = Summary::inconclusive;
  std::vector<StepTiming> timings;  // filled only on request

  bool fm_all_fail() const {
    for (const auto& v : fm)
      if (v.pass()) return false;
    return !fm.empty();
  }

  // A Fox-Milnor-only verdict covers complexities up to kmax and no further.
  std::string summary_label() const {
    if (summary == Summary::inconclusive) return "inconclusive";
    if (signature.obstructed()) return "obstructed by signatures at " + signature.witness->omega.to_string();
    return "obstructed up to complexity " + std::to_string(kmax);
  }
};

inline std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 2; n <= bound; ++n) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

// First omega = e^{2 pi i k/p} (p prime <= P ascending, then k ascending) at
// which the signatures differ. Roots of either Alexander polynomial are skipped.
inline SignatureVerdict signature_obstruction(const KnotBundle& k0, const KnotBundle& k1, std::int64_t prime_bound) {
  if (prime_bound < 2) throw std::invalid_argument("signature_obstruction: prime bound must be at least 2");
  SignatureVerdict v;
  for (std::int64_t p : primes_up_to(prime_bound)) {
    v.primes_scanned.push_back(p);
    for (std::int64_t k = 1; k < p; ++k) {
      UnitRoot w(k, p);
      if (eval_at_unit_root(k0.alexander, w).is_zero() || eval_at_unit_root(k1.alexander, w).is_zero()) {
        ++v.angles_skipped;
        continue;
      }
      ++v.angles_compared;
      int s0 = k0.signature(w), s1 = k1.signature(w);
      if (s0 != s1) {
        v.witness = SignatureWitness{w, s0, s1};
        return v;
      }
    }
  }
  return v;
}

inline std::vector<FmVerdict> fm_obstruction(const LaurentPoly& d0, const LaurentPoly& d1, int kmax) {
  if (d0.is_zero() || d1.is_zero()) throw std::invalid_argument("fm_obstruction: zero Alexander polynomial");
  if (kmax < 1) throw std::invalid_argument("fm_obstruction: kmax must be at least 1");
  std::vector<FmVerdict> out;
  for (int k = 1; k <= kmax; ++k)
    out.push_back({k, fox_milnor_witness(factor_product({inflate(d0, k), inflate(d1, k)}))});
  return out;
}

struct ObstructionOptions {
  std::int64_t prime_bound = kDefaultPrimeBound;
  int kmax = kDefaultKmax;
  bool timings = false;
};

inline ObstructionReport obstruct_pair(const KnotBundle& k0, const KnotBundle& k1, const ObstructionOptions& opt = {}) {
  if (opt.kmax < 1) throw std::invalid_argument("obstruct_pair: kmax must be at least 1");
  using clock = std::chrono::steady_clock;
  ObstructionReport r;
  r.label0 = k0.label;
  r.label1 = k1.label;
  r.prime_bound = opt.prime_bound;
  r.kmax = opt.kmax;
  auto elapsed = [](clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0).count();
  };

  auto t0 = clock::now();
  r.signature = signature_obstruction(k0, k1, opt.prime_bound);
  if (opt.timings) r.timings.push_back({"signature", elapsed(t0)});

  for (int k = 1; k <= opt.kmax; ++k) {
    auto t1 = clock::now();
    r.fm.push_back({k, fox_milnor_witness(factor_product({inflate(k0.alexander, k), inflate(k1.alexander, k)}))});
    if (opt.timings) r.timings.push_back({"fox_milnor_k" + std::to_string(k), elapsed(t1)});
  }

  r.summary = r.signature.obstructed() || r.fm_all_fail() ? Summary::obstructed : Summary::inconclusive;
  return r;
}

// Whether the Levine-Tristram signature function vanishes on the whole
// circle away from roots; needs a bundle built from a Seifert matrix.
inline bool finite_order_test(const KnotBundle& k) {
  if (!k.source) throw std::invalid_argument("finite_order_test: " + k.label + " has no Seifert matrix");
  return has_vanishing_signature_function(*k.source);
}

}  // namespace qconc
