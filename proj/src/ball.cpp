#include "folia/ball.hpp"

#include <cmath>

namespace folia {

namespace {

// Upper bound for the rounding error committed by an MPFR op that
// returned ternary t and produced x at precision p (RNDN: <= 1/2 ulp).
Real ulp_bound(const Real& x, int ternary) {
  if (ternary == 0 || x.is_zero()) return Real::of(0L, kRadPrec);
  return Real::pow2(static_cast<long>(x.exponent()) - static_cast<long>(x.prec()), kRadPrec);
}

Real radd(const Real& a, const Real& b) { return add_up(a, b, kRadPrec); }
Real rmul(const Real& a, const Real& b) { return mul_up(a, b, kRadPrec); }

}  // namespace

Ball Ball::exact(const Rational& re, const Rational& im, mpfr_prec_t prec) {
  Ball b(prec);
  int t1 = mpfr_set_q(b.mid_.re.raw(), re.get_mpq_t(), MPFR_RNDN);
  int t2 = mpfr_set_q(b.mid_.im.raw(), im.get_mpq_t(), MPFR_RNDN);
  b.rad_ = radd(ulp_bound(b.mid_.re, t1), ulp_bound(b.mid_.im, t2));
  return b;
}

Ball Ball::of(const Real& re, const Real& im, const Real& rad, mpfr_prec_t prec) {
  Ball b(prec);
  int t1 = mpfr_set(b.mid_.re.raw(), re.raw(), MPFR_RNDN);
  int t2 = mpfr_set(b.mid_.im.raw(), im.raw(), MPFR_RNDN);
  Real r(kRadPrec);
  mpfr_set(r.raw(), rad.raw(), MPFR_RNDU);
  if (r.sign() < 0) throw Error(err::InputError, "negative radius");
  b.rad_ = radd(r, radd(ulp_bound(b.mid_.re, t1), ulp_bound(b.mid_.im, t2)));
  return b;
}

Ball Ball::of_d(double re, double im, mpfr_prec_t prec) {
  Ball b(prec);
  mpfr_set_d(b.mid_.re.raw(), re, MPFR_RNDN);
  mpfr_set_d(b.mid_.im.raw(), im, MPFR_RNDN);
  b.rad_ = Real::of(0L, kRadPrec);
  return b;
}

Ball Ball::real_interval(const Real& lo, const Real& hi, mpfr_prec_t prec) {
  if (lo > hi) throw Error(err::InputError, "real_interval: lo > hi");
  Ball b(prec);
  Real two = Real::of(2L, kRadPrec);
  Real mid = Real::div(Real::add(lo, hi, prec + 8), two, prec);
  mpfr_set(b.mid_.re.raw(), mid.raw(), MPFR_RNDN);
  mpfr_set_zero(b.mid_.im.raw(), 1);
  // radius: max(hi-mid, mid-lo) rounded up
  Real r_hi = Real::sub(hi, b.mid_.re, kRadPrec, MPFR_RNDU);
  Real r_lo = Real::sub(b.mid_.re, lo, kRadPrec, MPFR_RNDU);
  b.rad_ = Real::max(Real::max(r_hi, r_lo), Real::of(0L, kRadPrec));
  return b;
}

bool Ball::contains(const Ball& o) const {
  // |mid - o.mid| + o.rad <= rad
  Real dre = Real::sub(mid_.re, o.mid_.re, kRadPrec, MPFR_RNDU);
  Real dim = Real::sub(mid_.im, o.mid_.im, kRadPrec, MPFR_RNDU);
  Real d = Real::hypot(dre, dim, kRadPrec, MPFR_RNDU);
  d = radd(d, radd(ulp_bound(dre, 1), ulp_bound(dim, 1)));
  return radd(d, o.rad_) <= rad_;
}

bool Ball::overlaps(const Ball& o) const {
  Real d = dist_lower(*this, o);
  return !(d.sign() > 0);
}

bool Ball::contains_point(const Rational& re, const Rational& im) const {
  Ball p = Ball::exact(re, im, prec_);
  return contains(p);
}

Ball Ball::round_to(mpfr_prec_t prec) const {
  Ball b(prec);
  int t1 = mpfr_set(b.mid_.re.raw(), mid_.re.raw(), MPFR_RNDN);
  int t2 = mpfr_set(b.mid_.im.raw(), mid_.im.raw(), MPFR_RNDN);
  b.rad_ = radd(rad_, radd(ulp_bound(b.mid_.re, t1), ulp_bound(b.mid_.im, t2)));
  return b;
}

Ball Ball::widened(const Real& extra) const {
  Ball b = *this;
  Real e(kRadPrec);
  mpfr_set(e.raw(), extra.raw(), MPFR_RNDU);
  if (e.sign() < 0) throw Error(err::InputError, "widened: negative slack");
  b.rad_ = radd(b.rad_, e);
  return b;
}

std::string Ball::str() const {
  return "(" + mid_.re.str() + (mid_.im.sign() < 0 ? " - " : " + ") +
         Real::abs(mid_.im, prec_).str() + "i) +/- " + rad_.str();
}

// ---- arithmetic -----------------------------------------------------------

Ball add(const Ball& a, const Ball& b) {
  mpfr_prec_t p = std::max(a.prec_, b.prec_);
  Ball c(p);
  int t1 = mpfr_add(c.mid_.re.raw(), a.mid_.re.raw(), b.mid_.re.raw(), MPFR_RNDN);
  int t2 = mpfr_add(c.mid_.im.raw(), a.mid_.im.raw(), b.mid_.im.raw(), MPFR_RNDN);
  c.rad_ = radd(radd(a.rad_, b.rad_), radd(ulp_bound(c.mid_.re, t1), ulp_bound(c.mid_.im, t2)));
  return c;
}

Ball sub(const Ball& a, const Ball& b) { return add(a, neg(b)); }

Ball neg(const Ball& a) {
  Ball c(a.prec_);
  mpfr_neg(c.mid_.re.raw(), a.mid_.re.raw(), MPFR_RNDN);
  mpfr_neg(c.mid_.im.raw(), a.mid_.im.raw(), MPFR_RNDN);
  c.rad_ = a.rad_;
  return c;
}

Ball conj(const Ball& a) {
  Ball c(a.prec_);
  mpfr_set(c.mid_.re.raw(), a.mid_.re.raw(), MPFR_RNDN);
  mpfr_neg(c.mid_.im.raw(), a.mid_.im.raw(), MPFR_RNDN);
  c.rad_ = a.rad_;
  return c;
}

Ball mul_i(const Ball& a) {
  Ball c(a.prec_);
  mpfr_neg(c.mid_.re.raw(), a.mid_.im.raw(), MPFR_RNDN);
  mpfr_set(c.mid_.im.raw(), a.mid_.re.raw(), MPFR_RNDN);
  c.rad_ = a.rad_;
  return c;
}

Ball mul(const Ball& a, const Ball& b) {
  mpfr_prec_t p = std::max(a.prec_, b.prec_);
  mpfr_prec_t pe = p + 32;
  // midpoint product in extended precision
  Real t1 = Real::mul(a.mid_.re, b.mid_.re, pe);
  Real t2 = Real::mul(a.mid_.im, b.mid_.im, pe);
  Real t3 = Real::mul(a.mid_.re, b.mid_.im, pe);
  Real t4 = Real::mul(a.mid_.im, b.mid_.re, pe);
  Real re = Real::sub(t1, t2, pe);
  Real im = Real::add(t3, t4, pe);
  // rounding error of the 6 extended ops: <= 6 * 2^(Emax - pe), Emax over partials
  long emax = -(1L << 30);
  for (const Real* x : {&t1, &t2, &t3, &t4, &re, &im})
    if (!x->is_zero() && x->is_finite()) emax = std::max(emax, static_cast<long>(x->exponent()));
  Real errmid = (emax == -(1L << 30)) ? Real::of(0L, kRadPrec)
                                      : Real::pow2(emax - static_cast<long>(pe) + 3, kRadPrec);
  Ball c(p);
  int s1 = mpfr_set(c.mid_.re.raw(), re.raw(), MPFR_RNDN);
  int s2 = mpfr_set(c.mid_.im.raw(), im.raw(), MPFR_RNDN);
  Real am = a.abs_mid_upper(), bm = b.abs_mid_upper();
  Real prop = radd(radd(rmul(am, b.rad_), rmul(bm, a.rad_)), rmul(a.rad_, b.rad_));
  c.rad_ = radd(radd(prop, errmid), radd(ulp_bound(c.mid_.re, s1), ulp_bound(c.mid_.im, s2)));
  return c;
}

Ball mul_real(const Ball& a, const Real& c0) {
  mpfr_prec_t p = std::max<mpfr_prec_t>(a.prec_, c0.prec());
  Ball c(p);
  int t1 = mpfr_mul(c.mid_.re.raw(), a.mid_.re.raw(), c0.raw(), MPFR_RNDN);
  int t2 = mpfr_mul(c.mid_.im.raw(), a.mid_.im.raw(), c0.raw(), MPFR_RNDN);
  c.rad_ = radd(rmul(a.rad_, Real::abs(c0, kRadPrec, MPFR_RNDU)),
                radd(ulp_bound(c.mid_.re, t1), ulp_bound(c.mid_.im, t2)));
  return c;
}

Ball mul_rat(const Ball& a, const Rational& q) { return mul(a, Ball::exact(q, Rational(0), a.prec_)); }

Ball add_real(const Ball& a, const Real& c0) {
  mpfr_prec_t p = std::max<mpfr_prec_t>(a.prec_, c0.prec());
  Ball c(p);
  int t1 = mpfr_add(c.mid_.re.raw(), a.mid_.re.raw(), c0.raw(), MPFR_RNDN);
  int t2 = mpfr_set(c.mid_.im.raw(), a.mid_.im.raw(), MPFR_RNDN);
  c.rad_ = radd(a.rad_, radd(ulp_bound(c.mid_.re, t1), ulp_bound(c.mid_.im, t2)));
  return c;
}

Ball inv(const Ball& a) {
  Real lower = a.abs_lower();
  if (!(lower.sign() > 0))
    throw Error(err::DivisorContainsZero, "inv: enclosure meets 0");
  mpfr_prec_t p = a.prec_;
  mpfr_prec_t pe = p + 32;
  Real n = Real::add(Real::mul(a.mid_.re, a.mid_.re, pe), Real::mul(a.mid_.im, a.mid_.im, pe), pe);
  Real re = Real::div(a.mid_.re, n, pe);
  Real im = Real::neg(Real::div(a.mid_.im, n, pe), pe);
  long emax = -(1L << 30);
  for (const Real* x : {&n, &re, &im})
    if (!x->is_zero() && x->is_finite()) emax = std::max(emax, static_cast<long>(x->exponent()));
  Real errmid = Real::pow2(emax - static_cast<long>(pe) + 4, kRadPrec);
  Ball c(p);
  int s1 = mpfr_set(c.mid_.re.raw(), re.raw(), MPFR_RNDN);
  int s2 = mpfr_set(c.mid_.im.raw(), im.raw(), MPFR_RNDN);
  // |1/z - 1/m| <= r / (|m| (|m| - r))
  Real denom = Real::mul(a.abs_mid_lower(), lower, kRadPrec, MPFR_RNDD);
  Real prop = div_up(a.rad_, denom, kRadPrec);
  c.rad_ = radd(radd(prop, errmid), radd(ulp_bound(c.mid_.re, s1), ulp_bound(c.mid_.im, s2)));
  return c;
}

Ball div(const Ball& a, const Ball& b) { return mul(a, inv(b)); }

Ball sqrt_branch(const Ball& a, const Ball& near) {
  Ball s = sqrt(a);
  Real dplus = dist_upper(s, near), dminus = dist_upper(neg(s), near);
  Real dplus_lo = dist_lower(s, near), dminus_lo = dist_lower(neg(s), near);
  // pick the branch certified closer to `near`
  if (dplus < dminus_lo) return s;
  if (dminus < dplus_lo) return neg(s);
  throw Error(err::BranchUndecidable, "sqrt_branch: cannot separate branches");
}

Ball sqrt(const Ball& a) {
  Real lower = a.abs_lower();
  if (!(lower.sign() > 0))
    throw Error(err::BranchUndecidable, "sqrt: enclosure meets 0");
  // principal branch needs the enclosure to avoid the cut (-inf, 0]:
  // dist(mid, cut) = |im| when re < 0, else |mid| (nearest ray point is 0)
  Real dist_cut = (a.mid_.re.sign() < 0) ? Real::abs(a.mid_.im, kRadPrec, MPFR_RNDD)
                                         : a.abs_mid_lower();
  if (!(dist_cut > a.rad_))
    throw Error(err::BranchUndecidable, "sqrt: enclosure meets the branch cut");
  mpfr_prec_t p = a.prec_;
  mpfr_prec_t pe = p + 32;
  // s = sqrt((|m|+re)/2), im' = im/(2s);  stable principal-branch formula
  Real am = Real::hypot(a.mid_.re, a.mid_.im, pe);
  Real s = Real::sqrt(Real::div(Real::add(am, a.mid_.re, pe), Real::of(2L, pe), pe), pe);
  Real re = s;
  Real im = Real::div(a.mid_.im, Real::mul(Real::of(2L, pe), s, pe), pe);
  long emax = std::max({am.is_zero() ? -64L : static_cast<long>(am.exponent()),
                        re.is_zero() ? -64L : static_cast<long>(re.exponent()),
                        im.is_zero() ? -64L : static_cast<long>(im.exponent())});
  Real errmid = Real::pow2(emax - static_cast<long>(pe) + 4, kRadPrec);
  Ball c(p);
  int s1 = mpfr_set(c.mid_.re.raw(), re.raw(), MPFR_RNDN);
  int s2 = mpfr_set(c.mid_.im.raw(), im.raw(), MPFR_RNDN);
  // |sqrt' | <= 1/(2 sqrt(min|z|)) on the enclosure
  Real deriv = div_up(Real::of(1L, kRadPrec),
                      Real::mul(Real::of(2L, kRadPrec), Real::sqrt(lower, kRadPrec, MPFR_RNDD),
                                kRadPrec, MPFR_RNDD),
                      kRadPrec);
  c.rad_ = radd(radd(rmul(deriv, a.rad_), errmid),
                radd(ulp_bound(c.mid_.re, s1), ulp_bound(c.mid_.im, s2)));
  return c;
}

Ball exp(const Ball& a) {
  mpfr_prec_t p = a.prec_;
  mpfr_prec_t pe = p + 32;
  Real er = Real::exp(a.mid_.re, pe);
  Real re = Real::mul(er, Real::cos(a.mid_.im, pe), pe);
  Real im = Real::mul(er, Real::sin(a.mid_.im, pe), pe);
  long emax = -(1L << 30);
  for (const Real* x : {&er, &re, &im})
    if (!x->is_zero() && x->is_finite()) emax = std::max(emax, static_cast<long>(x->exponent()));
  Real errmid = Real::pow2(emax - static_cast<long>(pe) + 4, kRadPrec);
  Ball c(p);
  int s1 = mpfr_set(c.mid_.re.raw(), re.raw(), MPFR_RNDN);
  int s2 = mpfr_set(c.mid_.im.raw(), im.raw(), MPFR_RNDN);
  // |e^z - e^m| <= |e^m| (e^r - 1)
  Real emod = Real::exp(Real::add(a.mid_.re, Real::of(0L, kRadPrec), kRadPrec, MPFR_RNDU), kRadPrec, MPFR_RNDU);
  Real grow = Real::expm1(a.rad_, kRadPrec, MPFR_RNDU);
  c.rad_ = radd(radd(rmul(emod, grow), errmid),
                radd(ulp_bound(c.mid_.re, s1), ulp_bound(c.mid_.im, s2)));
  return c;
}

Ball log(const Ball& a) {
  Real lower = a.abs_lower();
  if (!(lower.sign() > 0)) throw Error(err::BranchUndecidable, "log: enclosure meets 0");
  Real dist_cut = (a.mid_.re.sign() < 0) ? Real::abs(a.mid_.im, kRadPrec, MPFR_RNDD)
                                         : a.abs_mid_lower();
  if (!(dist_cut > a.rad_))
    throw Error(err::BranchUndecidable, "log: enclosure meets the branch cut");
  mpfr_prec_t p = a.prec_;
  mpfr_prec_t pe = p + 32;
  Real re = Real::log(Real::hypot(a.mid_.re, a.mid_.im, pe), pe);
  Real im = Real::atan2(a.mid_.im, a.mid_.re, pe);
  Real errmid = Real::pow2(
      std::max(re.is_zero() ? -64L : static_cast<long>(re.exponent()),
               im.is_zero() ? -64L : static_cast<long>(im.exponent())) -
          static_cast<long>(pe) + 4,
      kRadPrec);
  Ball c(p);
  int s1 = mpfr_set(c.mid_.re.raw(), re.raw(), MPFR_RNDN);
  int s2 = mpfr_set(c.mid_.im.raw(), im.raw(), MPFR_RNDN);
  // |log z - log m| <= -log(1 - r/|m|)
  Real q = div_up(a.rad_, a.abs_mid_lower(), kRadPrec);
  Real prop;
  if (q >= 1.0) throw Error(err::BranchUndecidable, "log: radius too large");
  prop = Real::neg(Real::log1p(Real::neg(q, kRadPrec), kRadPrec, MPFR_RNDD), kRadPrec);
  c.rad_ = radd(radd(prop, errmid), radd(ulp_bound(c.mid_.re, s1), ulp_bound(c.mid_.im, s2)));
  return c;
}

Ball pow_int(const Ball& a, long e) {
  if (e == 0) return Ball::exact(Rational(1), Rational(0), a.prec_);
  if (e < 0) return inv(pow_int(a, -e));
  Ball acc = Ball::exact(Rational(1), Rational(0), a.prec_);
  Ball base = a;
  long k = e;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return acc;
}

Ball unit_phase(const Real& theta, mpfr_prec_t prec) {
  mpfr_prec_t pe = prec + 16;
  Real c = Real::cos(theta, pe), s = Real::sin(theta, pe);
  // cos/sin at pe: each within 1/2 ulp(pe) <= 2^-pe of the true value,
  // plus theta itself may carry rounding at its own precision (caller's
  // theta is treated as exact; enclosure covers the sin/cos rounding)
  Real err = Real::pow2(-static_cast<long>(pe) + 2, kRadPrec);
  return Ball::of(c, s, err, prec);
}

Ball circle_point(const Ball& center, const Real& radius, long k, long n, mpfr_prec_t prec) {
  mpfr_prec_t pe = prec + 16;
  // theta = 2 pi k / n; pi rounding is absorbed by a 2^(-pe+4) phase slack
  Real theta = Real::div(Real::mul(Real::pi(pe), Real::of(2L * k, pe), pe), Real::of(n, pe), pe);
  Ball ph = unit_phase(theta, prec).widened(Real::pow2(-static_cast<long>(pe) + 4, kRadPrec));
  return add(center, mul_real(ph, radius));
}

Real dist_upper(const Ball& a, const Ball& b) {
  Real dre = Real::sub(a.mid().re, b.mid().re, kRadPrec, MPFR_RNDU);
  Real dim = Real::sub(a.mid().im, b.mid().im, kRadPrec, MPFR_RNDU);
  Real d = Real::hypot(dre, dim, kRadPrec, MPFR_RNDU);
  return add_up(add_up(d, a.rad(), kRadPrec), b.rad(), kRadPrec);
}

Real dist_lower(const Ball& a, const Ball& b) {
  Real dre = Real::sub(a.mid().re, b.mid().re, kRadPrec, MPFR_RNDN);
  Real dim = Real::sub(a.mid().im, b.mid().im, kRadPrec, MPFR_RNDN);
  Real d = Real::hypot(dre, dim, kRadPrec, MPFR_RNDD);
  // subtract one ulp slack of the differences for the RNDN subtractions
  Real slack = radd(ulp_bound(dre, 1), ulp_bound(dim, 1));
  Real out = sub_down(sub_down(sub_down(d, a.rad(), kRadPrec), b.rad(), kRadPrec), slack, kRadPrec);
  return out.sign() > 0 ? out : Real::of(0L, kRadPrec);
}

}  // namespace folia
