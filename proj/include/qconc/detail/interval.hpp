#pragma once

// Outward-rounded interval arithmetic on top of MPFR. Only what the sign and
// angle certifications need: enclosures of cos(2*pi*x) and acos(z/2)/(2*pi)
// for rational x and z, and integer-weighted sums.

#include <gmpxx.h>
#include <mpfr.h>

#include <utility>

namespace qconc::detail {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  // Exact conversion; MPFR values are dyadic rationals.
  mpq_class to_rational() const {
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    mpq_class r(m);
    if (e >= 0)
      mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
      mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
  }

 private:
  mpfr_t v_;
};

struct Enclosure {
  BigFloat lo, hi;
  explicit Enclosure(mpfr_prec_t prec) : lo(prec), hi(prec) {}

  int sign() const {
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
    return 0;  // undecided
  }
};

// Enclosure of cos(2*pi*x) for rational x.
inline Enclosure cos_turn(const mpq_class& x_in, mpfr_prec_t prec) {
  Enclosure out(prec);
  // Reduce to x in [0, 1/2]; cosine is even and 1-periodic in turns.
  mpq_class x = x_in;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  x -= fl;
  if (x > mpq_class(1, 2)) x = 1 - x;
  if (x == 0) {
    mpfr_set_si(out.lo.get(), 1, MPFR_RNDN);
    mpfr_set_si(out.hi.get(), 1, MPFR_RNDN);
    return out;
  }
  if (x == mpq_class(1, 2)) {
    mpfr_set_si(out.lo.get(), -1, MPFR_RNDN);
    mpfr_set_si(out.hi.get(), -1, MPFR_RNDN);
    return out;
  }
  BigFloat pi_lo(prec), pi_hi(prec), th_lo(prec), th_hi(prec);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_mul_2ui(th_lo.get(), pi_lo.get(), 1, MPFR_RNDD);
  mpfr_mul_2ui(th_hi.get(), pi_hi.get(), 1, MPFR_RNDU);
  mpfr_mul_q(th_lo.get(), th_lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_mul_q(th_hi.get(), th_hi.get(), x.get_mpq_t(), MPFR_RNDU);
  // cos is decreasing on [0, pi].
  if (mpfr_cmp(th_hi.get(), pi_lo.get()) >= 0)
    mpfr_set_si(out.lo.get(), -1, MPFR_RNDN);
  else
    mpfr_cos(out.lo.get(), th_hi.get(), MPFR_RNDD);
  mpfr_cos(out.hi.get(), th_lo.get(), MPFR_RNDU);
  return out;
}

// Enclosure of acos(z/2) / (2*pi) in turns for z known to lie in [zl, zr],
// -2 <= zl <= zr <= 2. Returned as exact rationals.
inline std::pair<mpq_class, mpq_class> acos_half_turn(const mpq_class& zl, const mpq_class& zr, mpfr_prec_t prec) {
  BigFloat a(prec), b(prec), pi_lo(prec), pi_hi(prec), lo(prec), hi(prec);
  mpq_class hl = zl / 2, hr = zr / 2;
  if (hl < -1) hl = -1;
  if (hr > 1) hr = 1;
  mpfr_set_q(a.get(), hl.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(b.get(), hr.get_mpq_t(), MPFR_RNDU);
  if (mpfr_cmp_si(a.get(), -1) < 0) mpfr_set_si(a.get(), -1, MPFR_RNDN);
  if (mpfr_cmp_si(b.get(), 1) > 0) mpfr_set_si(b.get(), 1, MPFR_RNDN);
  // acos is decreasing.
  mpfr_acos(lo.get(), b.get(), MPFR_RNDD);
  mpfr_acos(hi.get(), a.get(), MPFR_RNDU);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_mul_2ui(pi_lo.get(), pi_lo.get(), 1, MPFR_RNDD);
  mpfr_mul_2ui(pi_hi.get(), pi_hi.get(), 1, MPFR_RNDU);
  mpfr_div(lo.get(), lo.get(), pi_hi.get(), MPFR_RNDD);
  mpfr_div(hi.get(), hi.get(), pi_lo.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

// acc += w * [lo, hi], outward rounded.
inline void add_weighted(Enclosure& acc, const mpz_class& w, const Enclosure& term, mpfr_prec_t prec) {
  if (w == 0) return;
  BigFloat l(prec), h(prec);
  if (w > 0) {
    mpfr_mul_z(l.get(), term.lo.get(), w.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(h.get(), term.hi.get(), w.get_mpz_t(), MPFR_RNDU);
  } else {
    mpfr_mul_z(l.get(), term.hi.get(), w.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(h.get(), term.lo.get(), w.get_mpz_t(), MPFR_RNDU);
  }
  mpfr_add(acc.lo.get(), acc.lo.get(), l.get(), MPFR_RNDD);
  mpfr_add(acc.hi.get(), acc.hi.get(), h.get(), MPFR_RNDU);
}

}  // namespace qconc::detail
