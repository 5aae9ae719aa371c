#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folia/error.hpp"
#include "folia/real.hpp"

namespace folia {

// Radius arithmetic runs at a fixed small precision, always rounded up.
inline constexpr mpfr_prec_t kRadPrec = 64;

struct Complex {
  Real re, im;
  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
};

// Certified complex enclosure: every arithmetic result contains the
// exact image of its operand enclosures.  The midpoint carries the
// working precision; the radius is a nonnegative upward-rounded bound.
class Ball {
 public:
  Ball() : Ball(64) {}
  explicit Ball(mpfr_prec_t prec)
      : mid_(Real(prec), Real(prec)), rad_(kRadPrec), prec_(prec) {}

  static Ball exact(const Rational& re, const Rational& im, mpfr_prec_t prec);
  static Ball exact(long re, mpfr_prec_t prec) { return exact(Rational(re), Rational(0), prec); }
  static Ball of(const Real& re, const Real& im, const Real& rad, mpfr_prec_t prec);
  static Ball real_interval(const Real& lo, const Real& hi, mpfr_prec_t prec);
  // midpoint from doubles, radius zero (doubles are exact binary values)
  static Ball of_d(double re, double im, mpfr_prec_t prec);

  const Complex& mid() const { return mid_; }
  const Real& rad() const { return rad_; }
  mpfr_prec_t prec() const { return prec_; }
  bool is_exact() const { return rad_.is_zero(); }

  // |mid| bounds
  Real abs_mid_upper() const { return Real::hypot(mid_.re, mid_.im, kRadPrec, MPFR_RNDU); }
  Real abs_mid_lower() const { return Real::hypot(mid_.re, mid_.im, kRadPrec, MPFR_RNDD); }
  // bounds on |z| over the enclosure (pass a precision for tight bounds
  // near quantities of order 1; default is the coarse radius precision)
  Real abs_upper(mpfr_prec_t p = kRadPrec) const {
    return Real::add(Real::hypot(mid_.re, mid_.im, p, MPFR_RNDU), rad_, p, MPFR_RNDU);
  }
  Real abs_lower(mpfr_prec_t p = kRadPrec) const {
    Real l = Real::sub(Real::hypot(mid_.re, mid_.im, p, MPFR_RNDD), rad_, p, MPFR_RNDD);
    return l.sign() > 0 ? l : Real::of(0L, p);
  }
  bool contains_zero() const { return !(abs_lower().sign() > 0); }
  bool excludes_zero() const { return abs_lower().sign() > 0; }

  Real re_lower() const { return sub_down(mid_.re, rad_, kRadPrec); }
  Real re_upper() const { return add_up(mid_.re, rad_, kRadPrec); }
  Real im_lower() const { return sub_down(mid_.im, rad_, kRadPrec); }
  Real im_upper() const { return add_up(mid_.im, rad_, kRadPrec); }

  bool contains(const Ball& o) const;        // o's enclosure inside ours
  bool overlaps(const Ball& o) const;
  bool contains_point(const Rational& re, const Rational& im) const;

  Ball round_to(mpfr_prec_t prec) const;     // re-round midpoint, grow radius
  Ball widened(const Real& extra) const;     // radius += extra

  std::string str() const;

  friend Ball add(const Ball& a, const Ball& b);
  friend Ball sub(const Ball& a, const Ball& b);
  friend Ball neg(const Ball& a);
  friend Ball conj(const Ball& a);
  friend Ball mul(const Ball& a, const Ball& b);
  friend Ball inv(const Ball& a);
  friend Ball div(const Ball& a, const Ball& b);
  friend Ball sqrt(const Ball& a);                     // principal branch
  friend Ball sqrt_branch(const Ball& a, const Ball& near);  // branch closest to `near`
  friend Ball exp(const Ball& a);
  friend Ball log(const Ball& a);                      // principal branch
  friend Ball pow_int(const Ball& a, long e);
  friend Ball mul_i(const Ball& a);                    // multiply by i (exact)
  friend Ball mul_real(const Ball& a, const Real& c);
  friend Ball mul_rat(const Ball& a, const Rational& c);
  friend Ball add_real(const Ball& a, const Real& c);

  friend Ball operator+(const Ball& a, const Ball& b) { return add(a, b); }
  friend Ball operator-(const Ball& a, const Ball& b) { return sub(a, b); }
  friend Ball operator*(const Ball& a, const Ball& b) { return mul(a, b); }
  friend Ball operator/(const Ball& a, const Ball& b) { return div(a, b); }
  friend Ball operator-(const Ball& a) { return neg(a); }

 private:
  Complex mid_;
  Real rad_;
  mpfr_prec_t prec_;
};

using BallVector = std::vector<Ball>;

// circle point  c + r e^{i theta},  theta = 2 pi k / n, enclosure exact in c,r
Ball circle_point(const Ball& center, const Real& radius, long k, long n, mpfr_prec_t prec);

// enclosure of e^{i theta} for theta in [lo, hi] given as Reals
Ball unit_phase(const Real& theta, mpfr_prec_t prec);

// Distance bounds between ball centers: upper/lower bounds on |a-b| over enclosures.
Real dist_upper(const Ball& a, const Ball& b);
Real dist_lower(const Ball& a, const Ball& b);

}  // namespace folia
