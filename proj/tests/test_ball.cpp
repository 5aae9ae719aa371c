#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "folia/ball.hpp"
#include "folia/rng.hpp"

using namespace folia;

namespace {

Ball rand_ball(Rng& rng, mpfr_prec_t prec, double scale = 2.0, double maxrad = 0.25) {
  Ball b = Ball::of_d(rng.uniform(-scale, scale), rng.uniform(-scale, scale), prec);
  return b.widened(Real::of(rng.uniform(0.0, maxrad), kRadPrec));
}

bool encloses_value(const Ball& b, double re, double im) {
  Ball p = Ball::of_d(re, im, b.prec());
  return b.contains(p);
}

}  // namespace

TEST_CASE("exact integer addition stays exact") {
  Ball a = Ball::exact(1, 64), b = Ball::exact(2, 64);
  Ball c = a + b;
  CHECK(c.is_exact());
  CHECK(c.mid().re.to_double() == 3.0);
  CHECK(c.mid().im.is_zero());
}

TEST_CASE("division rounding contract at 64 bits") {
  Ball one = Ball::exact(1, 64), three = Ball::exact(3, 64);
  Ball q = one / three;
  CHECK(q.mid().re.to_double() == doctest::Approx(1.0 / 3.0));
  CHECK(q.rad() <= Real::pow2(-60, kRadPrec));
  CHECK(q.contains_point(Rational(1, 3), Rational(0)));
}

TEST_CASE("division by enclosure through zero fails") {
  Ball z = Ball::of_d(0.05, 0.0, 64).widened(Real::of(0.1, kRadPrec));
  CHECK_THROWS_AS(inv(z), Error);
}

TEST_CASE("sqrt on the branch cut is refused") {
  Ball z = Ball::of_d(-1.0, 0.0, 64).widened(Real::of(0.01, kRadPrec));
  CHECK_THROWS_AS(sqrt(z), Error);
  Ball ok = Ball::of_d(-1.0, 1.0, 128);
  Ball s = sqrt(ok);
  Ball back = s * s;
  CHECK(encloses_value(back, -1.0, 1.0));
}

TEST_CASE("exp/log/sqrt/mul enclose sampled true values") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    double xr = rng.uniform(-1.0, 1.0), xi = rng.uniform(-1.0, 1.0);
    Ball x = Ball::of_d(xr, xi, 128).widened(Real::of(1e-12, kRadPrec));
    Ball e = exp(x);
    // reference with long double arithmetic
    long double mr = expl(xr) * cosl(xi), mi = expl(xr) * sinl(xi);
    CHECK(encloses_value(e, static_cast<double>(mr), static_cast<double>(mi)));
    Ball p = x * x;
    CHECK(encloses_value(p, xr * xr - xi * xi, 2 * xr * xi));
  }
}

TEST_CASE("inclusion monotonicity") {
  // if A subset A' then op(A) subset op(A')
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Ball a = rand_ball(rng, 96);
    Ball a_wide = a.widened(Real::of(rng.uniform(0.01, 0.2), kRadPrec));
    Ball b = rand_ball(rng, 96);
    CHECK(a_wide.contains(a));
    CHECK((a_wide + b).contains(a + b));
    CHECK((a_wide * b).contains(a * b));
    CHECK(pow_int(a_wide, 3).contains(pow_int(a, 3)));
    if (a_wide.excludes_zero()) CHECK(inv(a_wide).contains(inv(a)));
    CHECK(exp(a_wide).contains(exp(a)));
  }
}

TEST_CASE("real_interval endpoints are enclosed") {
  Real lo = Real::of(-0.04, 64), hi = Real::of(0.56, 64);
  Ball iv = Ball::real_interval(lo, hi, 64);
  CHECK(iv.re_lower() <= lo);
  CHECK(iv.re_upper() >= hi);
  CHECK(encloses_value(iv, 0.3, 0.0));
}

TEST_CASE("circle points lie on the circle") {
  Ball c = Ball::of_d(0.5, -0.25, 128);
  Real r = Real::of(0.75, 128);
  for (long k = 0; k < 8; ++k) {
    Ball p = circle_point(c, r, k, 8, 128);
    Ball d = p - c;
    CHECK(d.abs_upper().to_double() == doctest::Approx(0.75).epsilon(1e-20));
    CHECK(d.abs_lower().to_double() == doctest::Approx(0.75).epsilon(1e-20));
  }
}
