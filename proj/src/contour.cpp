#include "folia/contour.hpp"

#include <cmath>
#include <deque>

#include "folia/error.hpp"

namespace folia {

namespace {

// Enclosing disc of the arc theta in [2pi a, 2pi b] (fractions of a turn)
// of the circle around `center`:  centered at the arc midpoint, radius
// r * (half arc angle) bounds the distance to any arc point.
Ball arc_enclosure(const Ball& center, const Real& radius, double a, double b, mpfr_prec_t prec) {
  mpfr_prec_t pe = prec + 16;
  Real mid_t = Real::of((a + b) / 2, pe);
  Real theta = Real::mul(Real::mul(Real::pi(pe), Real::of(2L, pe), pe), mid_t, pe);
  Ball p = add(center, mul_real(unit_phase(theta, prec), radius));
  double half_angle = (b - a) * 3.14159265358979324;  // (b-a)*2pi/2
  Real slack = mul_up(Real::of(half_angle * 1.0000001, kRadPrec), radius, kRadPrec);
  return p.widened(slack);
}

Ball point_on_circle(const Ball& center, const Real& radius, double t, mpfr_prec_t prec) {
  mpfr_prec_t pe = prec + 16;
  Real theta = Real::mul(Real::mul(Real::pi(pe), Real::of(2L, pe), pe), Real::of(t, pe), pe);
  return add(center, mul_real(unit_phase(theta, prec), radius));
}

}  // namespace

ArgEnclosure arg_enclosure(const Ball& z, mpfr_prec_t prec) {
  if (!z.excludes_zero()) throw Error(err::PrecisionInsufficient, "arg of enclosure meeting 0");
  Real a = Real::atan2(z.mid().im, z.mid().re, prec);
  Real q = div_up(z.rad(), z.abs_mid_lower(), kRadPrec);
  Real hw;
  if (q >= 1.0) {
    hw = Real::pi(kRadPrec, MPFR_RNDU);
  } else {
    hw = Real::asin(q, kRadPrec, MPFR_RNDU);
  }
  // atan2 rounding slack
  hw = add_up(hw, Real::pow2(-static_cast<long>(prec) + 2, kRadPrec), kRadPrec);
  return {a, hw};
}

long winding_number(const CertFn& f, const Ball& center, const Real& radius, mpfr_prec_t prec,
                    int max_refine) {
  long n = 16;
  for (int attempt = 0; attempt < max_refine; ++attempt, n *= 2) {
    bool ok = true;
    // arc enclosures must exclude zero
    for (long k = 0; k < n && ok; ++k) {
      Ball arc = arc_enclosure(center, radius, double(k) / n, double(k + 1) / n, prec);
      Ball v = f(arc, prec);
      if (!v.excludes_zero()) ok = false;
    }
    if (!ok) continue;
    std::vector<Ball> endpoint_vals;
    endpoint_vals.reserve(n + 1);
    for (long k = 0; k <= n; ++k)
      endpoint_vals.push_back(f(point_on_circle(center, radius, double(k % n) / n, prec), prec));
    // sum principal arguments of consecutive quotients
    Real total_mid = Real::of(0L, prec);
    Real total_hw = Real::of(0L, kRadPrec);
    bool small_args = true;
    for (long k = 0; k < n && small_args; ++k) {
      if (!endpoint_vals[k].excludes_zero() || !endpoint_vals[k + 1].excludes_zero()) {
        small_args = false;
        break;
      }
      Ball q = div(endpoint_vals[k + 1], endpoint_vals[k]);
      ArgEnclosure ae = arg_enclosure(q, prec);
      // the true per-arc increment is < pi in absolute value; demand the
      // computed enclosure stays safely inside (-pi, pi)
      Real bound = add_up(Real::abs(ae.mid, kRadPrec, MPFR_RNDU), ae.halfwidth, kRadPrec);
      if (!(bound < 3.0)) {
        small_args = false;
        break;
      }
      total_mid = Real::add(total_mid, ae.mid, prec);
      total_hw = add_up(total_hw, ae.halfwidth, kRadPrec);
    }
    if (!small_args) continue;
    Real two_pi = Real::mul(Real::pi(prec), Real::of(2L, prec), prec);
    Real w = Real::div(total_mid, two_pi, prec);
    Real w_hw = div_up(total_hw, Real::of(6L, kRadPrec), kRadPrec);  // 2pi > 6
    double wd = w.to_double();
    long wi = std::lround(wd);
    // enclosure of the winding number must contain a unique integer
    if (std::abs(wd - wi) + w_hw.to_double() < 0.5 - 1e-9) return wi;
  }
  throw Error(err::PrecisionInsufficient,
              "winding_number: cannot certify contour at requested refinement");
}

Real min_modulus_on_circle(const CertFn& f, const Ball& center, const Real& radius,
                           mpfr_prec_t prec, int max_refine) {
  struct Arc {
    double a, b;
    int depth;
  };
  // start from a fine uniform net so the bound is tight, not just positive
  std::deque<Arc> work;
  const int n0 = 256;
  for (int k = 0; k < n0; ++k) work.push_back({double(k) / n0, double(k + 1) / n0, 0});
  Real best = Real::inf(kRadPrec);
  while (!work.empty()) {
    Arc arc = work.front();
    work.pop_front();
    Ball v = f(arc_enclosure(center, radius, arc.a, arc.b, prec), prec);
    Real lo = v.abs_lower();
    if (lo.sign() > 0) {
      best = Real::min(best, lo);
      continue;
    }
    if (arc.depth >= max_refine) return Real::of(0L, kRadPrec);
    double m = (arc.a + arc.b) / 2;
    work.push_back({arc.a, m, arc.depth + 1});
    work.push_back({m, arc.b, arc.depth + 1});
  }
  return best;
}

Real max_modulus_on_circle(const CertFn& f, const Ball& center, const Real& radius,
                           mpfr_prec_t prec, int refine) {
  long n = 8;
  Real best = Real::inf(kRadPrec);
  for (int attempt = 0; attempt < refine; ++attempt, n *= 4) {
    Real cur(kRadPrec);
    for (long k = 0; k < n; ++k) {
      Ball v = f(arc_enclosure(center, radius, double(k) / n, double(k + 1) / n, prec), prec);
      cur = Real::max(cur, v.abs_upper());
      if (!cur.is_finite()) break;
    }
    if (cur.is_finite()) best = Real::min(best, cur);
  }
  if (!best.is_finite())
    throw Error(err::PrecisionInsufficient, "max_modulus_on_circle: no finite bound");
  return best;
}

Real max_modulus_on_annulus(const CertFn& f, const Ball& center, const Real& radius, double rho,
                            mpfr_prec_t prec, int refine) {
  if (rho <= 1.0) throw Error(err::InputError, "annulus needs rho > 1");
  double rmid = (rho + 1.0 / rho) / 2;
  double half_width = (rho - 1.0 / rho) / 2;
  Real best = Real::inf(kRadPrec);
  long n = 16;
  for (int attempt = 0; attempt < refine; ++attempt, n *= 2) {
    // covering radius: radial half width + half chord spacing, padded
    double cover = std::sqrt(half_width * half_width * 1.01 +
                             std::pow(rmid * 3.1416 / n, 2) * 1.01) *
                   1.05;
    Real cur(kRadPrec);
    bool ok = true;
    Real rm = Real::mul(radius, Real::of(rmid, kRadPrec), kRadPrec, MPFR_RNDU);
    Real cr = Real::mul(radius, Real::of(cover, kRadPrec), kRadPrec, MPFR_RNDU);
    for (long k = 0; k < n; ++k) {
      Ball p = point_on_circle(center, rm, double(k) / n, prec).widened(cr);
      Ball v;
      try {
        v = f(p, prec);
      } catch (const Error&) {
        ok = false;
        break;
      }
      Real u = v.abs_upper();
      if (!u.is_finite()) {
        ok = false;
        break;
      }
      cur = Real::max(cur, u);
    }
    if (ok) best = Real::min(best, cur);
  }
  if (!best.is_finite())
    throw Error(err::PrecisionInsufficient, "max_modulus_on_annulus: no finite bound");
  return best;
}

Ball contour_integral_nodes(const std::function<Ball(long, long)>& node, const Ball& center,
                            const Real& radius, double rho, const Real& annulus_bound,
                            mpfr_prec_t prec, const Real& target_error) {
  if (rho <= 1.0) throw Error(err::InputError, "contour integral needs rho > 1");
  double a = std::log(rho);
  // choose N with 4 pi r rho M / (e^{aN} - 1) < target/2
  Real M = annulus_bound;
  Real fourpi_r_rho =
      mul_up(mul_up(Real::of(4 * 3.14159265358979324, kRadPrec), radius, kRadPrec),
             Real::of(rho, kRadPrec), kRadPrec);
  Real numer = mul_up(fourpi_r_rho, M, kRadPrec);
  long N = 32;
  for (;; N *= 2) {
    Real denom = Real::expm1(Real::of(a * N, kRadPrec), kRadPrec, MPFR_RNDD);
    if (denom.sign() <= 0) continue;
    Real err = div_up(numer, denom, kRadPrec);
    if (err < Real::mul(target_error, Real::of(0.5, kRadPrec), kRadPrec)) break;
    if (N > (1L << 22))
      throw Error(err::PrecisionInsufficient, "contour integral: node count exploded");
  }
  Real analytic_err =
      div_up(numer, Real::expm1(Real::of(a * N, kRadPrec), kRadPrec, MPFR_RNDD), kRadPrec);
  // trapezoid sum: (2 pi i / N) * sum_k f(z_k) * (z_k - center)
  Ball sum = Ball::exact(Rational(0), Rational(0), prec);
  for (long k = 0; k < N; ++k) {
    Ball zk = circle_point(center, radius, k, N, prec);
    Ball fk = node(k, N);
    sum = add(sum, mul(fk, sub(zk, center)));
  }
  mpfr_prec_t pe = prec + 16;
  Real two_pi_over_N =
      Real::div(Real::mul(Real::pi(pe), Real::of(2L, pe), pe), Real::of(N, pe), pe);
  Ball result = mul_i(mul_real(sum, two_pi_over_N));
  // absorb the pi rounding in two_pi_over_N: relative 2^-pe on a sum bounded
  // by 2 pi r M
  Real pi_slack = mul_up(mul_up(Real::of(8.0, kRadPrec), mul_up(radius, M, kRadPrec), kRadPrec),
                         Real::pow2(-static_cast<long>(pe) + 2, kRadPrec), kRadPrec);
  return result.widened(add_up(analytic_err, pi_slack, kRadPrec));
}

Ball contour_integral(const CertFn& f, const Ball& center, const Real& radius, double rho,
                      mpfr_prec_t prec, const Real& target_error) {
  Real M = max_modulus_on_annulus(f, center, radius, rho, prec);
  auto node = [&](long k, long N) { return f(circle_point(center, radius, k, N, prec), prec); };
  return contour_integral_nodes(node, center, radius, rho, M, prec, target_error);
}

}  // namespace folia
