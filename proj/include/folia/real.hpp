#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace folia {

using Int = mpz_class;
using Rational = mpq_class;

// Parse "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& q);

// log max(|num|,|den|) of the reduced fraction, as a double upper bound.
double rational_log_height(const Rational& q);

// Arbitrary-precision real number with explicit precision.  Value
// semantics, immutable in spirit: every operation produces a fresh
// object at an explicitly known precision.  Rounding is to nearest
// unless the *_up / *_down variants are used; those round away from /
// toward -infinity and are what the radius bookkeeping in Ball uses.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  static Real of(long x, mpfr_prec_t prec) { Real r(prec); mpfr_set_si(r.v_, x, MPFR_RNDN); return r; }
  static Real of(double x, mpfr_prec_t prec) { Real r(prec); mpfr_set_d(r.v_, x, MPFR_RNDN); return r; }
  // Exact if prec suffices, else rounded in the given direction.
  static Real of(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec); mpfr_set_q(r.v_, q.get_mpq_t(), rnd); return r;
  }
  static Real of(const Int& z, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec); mpfr_set_z(r.v_, z.get_mpz_t(), rnd); return r;
  }
  static Real pi(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec); mpfr_const_pi(r.v_, rnd); return r;
  }
  static Real pow2(long e, mpfr_prec_t prec) {  // 2^e exactly
    Real r(prec); mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN); return r;
  }
  static Real inf(mpfr_prec_t prec) { Real r(prec); mpfr_set_inf(r.v_, 1); return r; }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  const mpfr_t& raw() const { return v_; }
  mpfr_t& raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Exponent e with |x| in [2^(e-1), 2^e); only valid for nonzero finite x.
  mpfr_exp_t exponent() const { return mpfr_get_exp(v_); }

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  bool operator<(const Real& o) const { return mpfr_less_p(v_, o.v_) != 0; }
  bool operator<=(const Real& o) const { return mpfr_lessequal_p(v_, o.v_) != 0; }
  bool operator>(const Real& o) const { return mpfr_greater_p(v_, o.v_) != 0; }
  bool operator>=(const Real& o) const { return mpfr_greaterequal_p(v_, o.v_) != 0; }
  bool operator==(const Real& o) const { return mpfr_equal_p(v_, o.v_) != 0; }

  bool operator<(double d) const { return mpfr_cmp_d(v_, d) < 0; }
  bool operator>(double d) const { return mpfr_cmp_d(v_, d) > 0; }
  bool operator<=(double d) const { return mpfr_cmp_d(v_, d) <= 0; }
  bool operator>=(double d) const { return mpfr_cmp_d(v_, d) >= 0; }

  // Deterministic decimal string (round-trip safe at the value's precision).
  std::string str() const;

#define FOLIA_REAL_BINOP(name, fn)                                            \
  static Real name(const Real& a, const Real& b, mpfr_prec_t prec,            \
                   mpfr_rnd_t rnd = MPFR_RNDN) {                              \
    Real r(prec); fn(r.v_, a.v_, b.v_, rnd); return r;                        \
  }
  FOLIA_REAL_BINOP(add, mpfr_add)
  FOLIA_REAL_BINOP(sub, mpfr_sub)
  FOLIA_REAL_BINOP(mul, mpfr_mul)
  FOLIA_REAL_BINOP(div, mpfr_div)
  FOLIA_REAL_BINOP(atan2, mpfr_atan2)  // atan2(y, x)
  FOLIA_REAL_BINOP(hypot, mpfr_hypot)
  FOLIA_REAL_BINOP(rpow, mpfr_pow)
#undef FOLIA_REAL_BINOP

#define FOLIA_REAL_UNOP(name, fn)                                             \
  static Real name(const Real& a, mpfr_prec_t prec,                           \
                   mpfr_rnd_t rnd = MPFR_RNDN) {                              \
    Real r(prec); fn(r.v_, a.v_, rnd); return r;                              \
  }
  FOLIA_REAL_UNOP(neg, mpfr_neg)
  FOLIA_REAL_UNOP(abs, mpfr_abs)
  FOLIA_REAL_UNOP(sqrt, mpfr_sqrt)
  FOLIA_REAL_UNOP(exp, mpfr_exp)
  FOLIA_REAL_UNOP(expm1, mpfr_expm1)
  FOLIA_REAL_UNOP(log, mpfr_log)
  FOLIA_REAL_UNOP(log1p, mpfr_log1p)
  FOLIA_REAL_UNOP(sin, mpfr_sin)
  FOLIA_REAL_UNOP(cos, mpfr_cos)
  FOLIA_REAL_UNOP(asin, mpfr_asin)
#undef FOLIA_REAL_UNOP

  static Real pow_si(const Real& a, long e, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec); mpfr_pow_si(r.v_, a.v_, e, rnd); return r;
  }
  static Real mul_2exp(const Real& a, long e, mpfr_prec_t prec) {
    Real r(prec); mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN); return r;
  }
  static Real min(const Real& a, const Real& b) { return (a <= b) ? a : b; }
  static Real max(const Real& a, const Real& b) { return (a >= b) ? a : b; }

 private:
  mpfr_t v_;
};

// Shorthands rounding upward (used pervasively by radius arithmetic).
inline Real add_up(const Real& a, const Real& b, mpfr_prec_t p) { return Real::add(a, b, p, MPFR_RNDU); }
inline Real sub_down(const Real& a, const Real& b, mpfr_prec_t p) { return Real::sub(a, b, p, MPFR_RNDD); }
inline Real mul_up(const Real& a, const Real& b, mpfr_prec_t p) { return Real::mul(a, b, p, MPFR_RNDU); }
inline Real div_up(const Real& a, const Real& b, mpfr_prec_t p) { return Real::div(a, b, p, MPFR_RNDU); }

}  // namespace folia
