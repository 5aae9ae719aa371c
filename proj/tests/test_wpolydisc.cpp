#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "folia/wpolydisc.hpp"

using namespace folia;

namespace {

const std::vector<std::string> ZW = {"z", "w"};
RationalPolynomial PZ() { return RationalPolynomial::variable(0, ZW); }
RationalPolynomial PW() { return RationalPolynomial::variable(1, ZW); }
RationalPolynomial PC(long n) { return RationalPolynomial::constant(Rational(n), ZW); }

BallVector origin2(mpfr_prec_t prec) {
  return {Ball::exact(Rational(0), Rational(0), prec), Ball::exact(Rational(0), Rational(0), prec)};
}

}  // namespace

TEST_CASE("separated net on a segment") {
  // A = [0,1] on the real axis of one complex coordinate, eps = 1/2
  auto member = [](const BallVector& p) {
    double re = p[0].mid().re.to_double(), im = p[0].mid().im.to_double();
    return im == 0.0 && re >= -1e-12 && re <= 1.0 + 1e-12;
  };
  auto net = separated_net(member, {{0.0, 1.0, 0.0, 0.0}}, 0.5, 64);
  CHECK(net.points.size() == 3);  // {0, 1/2, 1}
}

TEST_CASE("separated net on a wide disc with huge epsilon") {
  auto member = [](const BallVector& p) {
    double re = p[0].mid().re.to_double(), im = p[0].mid().im.to_double();
    return re * re + im * im <= 1.0 + 1e-12;
  };
  auto net = separated_net(member, {{-1.0, 1.0, -1.0, 1.0}}, 3.0, 64);
  CHECK(net.points.size() == 1);
}

TEST_CASE("s1 saturation size bound") {
  NetCertificate net;
  net.epsilon = Real::of(3.14159265358979324 / 2, kRadPrec);
  net.kind = NetCertificate::Kind::Covering;
  net.points.push_back({Ball::exact(Rational(1), Rational(0), 64)});
  auto sat = s1_saturate(net, 64);
  CHECK(sat.points.size() <= 3);
  CHECK(sat.points.size() >= 2);
  // every point of the unit circle is within 2 eps = pi of some net point
  double eps2 = sat.epsilon.to_double();
  for (double th = 0; th < 6.283; th += 0.05) {
    double bx = std::cos(th), by = std::sin(th);
    bool close = false;
    for (auto& p : sat.points) {
      double dx = p[0].mid().re.to_double() - bx, dy = p[0].mid().im.to_double() - by;
      if (std::hypot(dx, dy) <= eps2 + 1e-9) close = true;
    }
    CHECK(close);
  }
  // empty net stays empty
  NetCertificate empty;
  empty.epsilon = Real::of(1.0, kRadPrec);
  CHECK(s1_saturate(empty, 64).points.empty());
}

TEST_CASE("empty ball avoids S1 X for X = {w=0}") {
  auto eb = empty_ball_search({PW()}, 1, origin2(128), Real::of(1L, 64), 128);
  CHECK(eb.margin.sign() > 0);
  // the ball center must have |w| component exceeding the radius
  double w_abs = std::hypot(eb.center[1].mid().re.to_double(), eb.center[1].mid().im.to_double());
  CHECK(w_abs > eb.radius.to_double());
}

TEST_CASE("empty ball for X = empty returns B^2") {
  auto eb = empty_ball_search({}, 1, origin2(64), Real::of(1L, 64), 64);
  CHECK(eb.radius.to_double() == doctest::Approx(0.5));
}

TEST_CASE("weierstrass polydisc for the diagonal X = {w=z}") {
  auto wp = weierstrass_construct({PW() - PZ()}, 1, origin2(128), Real::of(1L, 64), 128);
  CHECK(wp.validated);
  CHECK(wp.degree == 1);
  CHECK(wp.margin.sign() > 0);
  // degree e = 1: single sheet
  CHECK(sheet_degree(wp, 128) == 1);
}

TEST_CASE("weierstrass polydisc for X = {w^2 = z} has two sheets") {
  auto wp = weierstrass_construct({PW() * PW() - PZ()}, 1, origin2(128), Real::of(1L, 64), 128);
  CHECK(wp.validated);
  CHECK(wp.degree == 2);
}

TEST_CASE("degenerate fiber direction X = {z=0} still validates after rotation") {
  auto wp = weierstrass_construct({PZ()}, 1, origin2(128), Real::of(1L, 64), 128);
  CHECK(wp.validated);
  CHECK(wp.margin.sign() > 0);
  CHECK(wp.degree >= 1);
}

TEST_CASE("analytic resultant examples") {
  // Gamma = {w=z}, G = w-3: R(z) = z-3
  auto wp = weierstrass_construct({PW() - PZ()}, 1, origin2(128), Real::of(1L, 64), 128);
  AnalyticResultant R(wp, PW() - PC(3), 128);
  for (double zv : {0.0, 0.01, -0.02}) {
    Ball z = Ball::of_d(zv, 0.005, 128);
    Ball val = R(z, 128);
    // true value z - 3
    Ball expect = sub(z, Ball::exact(Rational(3), Rational(0), 128));
    CHECK(val.overlaps(expect));
    CHECK(sub(val, expect).abs_upper().to_double() < 1e-8);
  }
  // G = 1 -> R = 1
  AnalyticResultant Rone(wp, PC(1), 128);
  Ball v1 = Rone(Ball::of_d(0.01, 0.0, 128), 128);
  CHECK(v1.contains_point(Rational(1), Rational(0)));

  // Gamma = {w^2=z}, G = w: R(z) = -z (product of the two branches)
  auto wp2 = weierstrass_construct({PW() * PW() - PZ()}, 1, origin2(128), Real::of(1L, 64), 128);
  AnalyticResultant R2(wp2, PW(), 128);
  double rz = wp2.region.radii[0].to_double();
  Ball z2 = Ball::of_d(rz * 0.3, rz * 0.1, 128);
  Ball val2 = R2(z2, 128);
  Ball expect2 = neg(z2);
  CHECK(sub(val2, expect2).abs_upper().to_double() < 1e-6);
}

TEST_CASE("wp_cover covers the half ball") {
  // X = {w = z^2}
  auto X = std::vector<RationalPolynomial>{PW() - PZ() * PZ()};
  auto cover = wp_cover(X, origin2(96), Real::of(1L, 64), 96);
  CHECK(!cover.polydiscs.empty());
  for (auto& wp : cover.polydiscs) CHECK(wp.validated);
  // independent probe verification on a fresh grid
  for (double a = -0.5; a <= 0.5; a += 0.21)
    for (double b = -0.5; b <= 0.5; b += 0.21)
      for (double c = -0.5; c <= 0.5; c += 0.23)
        for (double d = -0.5; d <= 0.5; d += 0.23) {
          if (a * a + b * b + c * c + d * d > 0.25) continue;
          BallVector p = {Ball::of_d(a, b, 96), Ball::of_d(c, d, 96)};
          bool inside = false;
          for (auto& wp : cover.polydiscs)
            if (wp_contains(wp, p, Rational(2))) inside = true;
          CHECK(inside);
        }
  // empty X: a single full polydisc
  auto cc = wp_cover({}, origin2(96), Real::of(1L, 64), 96);
  CHECK(cc.polydiscs.size() == 1);
  CHECK(cc.polydiscs[0].degree == 0);
  // X = {w^2=z}: max degree from the cover is 2
  auto c2 = wp_cover({PW() * PW() - PZ()}, origin2(96), Real::of(1L, 64), 96);
  CHECK(c2.maxDegree <= 2);
  CHECK(c2.maxDegree >= 1);
}

TEST_CASE("net duality S(A,2e) <= N(A,e) <= S(A,e) on a disc instance") {
  auto member = [](const BallVector& p) {
    double re = p[0].mid().re.to_double(), im = p[0].mid().im.to_double();
    return re * re + im * im <= 1.0 + 1e-12;
  };
  std::vector<CBox> box = {{-1.0, 1.0, -1.0, 1.0}};
  double eps = 0.5;
  auto sep_e = separated_net(member, box, eps, 64);
  auto sep_2e = separated_net(member, box, 2 * eps, 64);
  // a maximal eps-separated set is an eps-covering net, so
  // N(A, eps) <= |sep_e| and S(A, 2 eps) <= N(A, eps) forces
  CHECK(sep_2e.points.size() <= sep_e.points.size());
}

TEST_CASE("every validated polydisc passes independent revalidation") {
  auto wp = weierstrass_construct({PW() - PZ()}, 1, origin2(96), Real::of(1L, 64), 96);
  Real m1 = wp.margin;
  Real m2 = wp_validate(wp, 192);  // doubled precision revalidation
  CHECK(m2.sign() > 0);
  CHECK(m1.sign() > 0);
}
