#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "folia/contour.hpp"
#include "folia/rootsolve.hpp"

using namespace folia;

namespace {

BallVector coeffs(std::initializer_list<Rational> cs, mpfr_prec_t prec) {
  BallVector v;
  for (const Rational& c : cs) v.push_back(Ball::exact(c, Rational(0), prec));
  return v;
}

CertFn poly_fn(BallVector cs) {
  return [cs = std::move(cs)](const Ball& z, mpfr_prec_t) { return poly_eval(cs, z); };
}

}  // namespace

TEST_CASE("winding numbers of polynomials") {
  Ball origin = Ball::exact(0, 128);
  // z^2 - 1/16 on |z| = 1/2: both roots inside
  auto f = poly_fn(coeffs({Rational(-1, 16), Rational(0), Rational(1)}, 128));
  CHECK(winding_number(f, origin, Real::of(0.5, 64), 128) == 2);
  // z on |z| = 1
  auto g = poly_fn(coeffs({Rational(0), Rational(1)}, 128));
  CHECK(winding_number(g, origin, Real::of(1L, 64), 128) == 1);
  // z - 2 on |z| = 1
  auto h = poly_fn(coeffs({Rational(-2), Rational(1)}, 128));
  CHECK(winding_number(h, origin, Real::of(1L, 64), 128) == 0);
  // (z-1/4)^3 (z+3): triple zero inside |z|=1/2
  auto k = poly_fn(coeffs({Rational(-3, 64), Rational(37, 16), Rational(0-2), Rational(9, 4) - Rational(3, 4) - Rational(0), Rational(1)}, 128));
  // build explicitly instead: (z-1/4)^3 (z+3)
  RationalPolynomial z = RationalPolynomial::univariate({Rational(0), Rational(1)}, "z");
  RationalPolynomial p = (z - RationalPolynomial::univariate({Rational(1, 4)}, "z")).pow(3) *
                         (z + RationalPolynomial::univariate({Rational(3)}, "z"));
  BallVector pc;
  for (auto& c : p.coeffs_in(0)) pc.push_back(Ball::exact(c.constant_value(), Rational(0), 128));
  CHECK(winding_number(poly_fn(pc), origin, Real::of(0.5, 64), 128) == 3);
}

TEST_CASE("winding refuses zero on contour") {
  Ball origin = Ball::exact(0, 128);
  auto f = poly_fn(coeffs({Rational(-1), Rational(1)}, 128));  // z - 1
  CHECK_THROWS_AS(winding_number(f, origin, Real::of(1L, 64), 128, 6), Error);
}

TEST_CASE("min/max modulus on circle") {
  Ball origin = Ball::exact(0, 128);
  // f = z^2 on |z| = 2: modulus is exactly 4
  auto f = poly_fn(coeffs({Rational(0), Rational(0), Rational(1)}, 128));
  Real lo = min_modulus_on_circle(f, origin, Real::of(2L, 64), 128);
  Real hi = max_modulus_on_circle(f, origin, Real::of(2L, 64), 128);
  CHECK(lo.to_double() <= 4.0);
  CHECK(lo.to_double() > 3.7);
  CHECK(hi.to_double() >= 4.0);
  CHECK(hi.to_double() < 4.3);
}

TEST_CASE("contour integral: Cauchy formula") {
  // (1/2 pi i) oint dz/z = 1  -> oint dz/z = 2 pi i
  Ball origin = Ball::exact(0, 256);
  CertFn inv_z = [](const Ball& z, mpfr_prec_t) { return inv(z); };
  Ball I = contour_integral(inv_z, origin, Real::of(1L, 64), 1.5, 256, Real::pow2(-150, 64));
  Real two_pi = Real::mul(Real::pi(256), Real::of(2L, 256), 256);
  CHECK(I.rad() < Real::pow2(-140, 64));
  CHECK(Real::abs(Real::sub(I.mid().im, two_pi, 256), 64).to_double() < 1e-45);
  CHECK(Real::abs(I.mid().re, 64).to_double() < 1e-45);

  // oint z^2 dz = 0
  CertFn z2 = [](const Ball& z, mpfr_prec_t) { return mul(z, z); };
  Ball Z = contour_integral(z2, origin, Real::of(1L, 64), 1.5, 256, Real::pow2(-150, 64));
  CHECK(Z.abs_upper() < Real::pow2(-140, 64));
}

TEST_CASE("root isolation in disc") {
  // p = (z^2 - 1/16)(z - 3): two roots in the unit disc, one outside
  RationalPolynomial z = RationalPolynomial::univariate({Rational(0), Rational(1)}, "z");
  RationalPolynomial p =
      (z * z - RationalPolynomial::univariate({Rational(1, 16)}, "z")) *
      (z - RationalPolynomial::univariate({Rational(3)}, "z"));
  BallVector pc;
  for (auto& c : p.coeffs_in(0)) pc.push_back(Ball::exact(c.constant_value(), Rational(0), 128));
  auto roots = roots_in_disc(pc, Ball::exact(0, 128), Real::of(1L, 64), 128);
  REQUIRE(roots.size() == 2);
  long total = 0;
  for (auto& r : roots) total += r.multiplicity;
  CHECK(total == 2);
  // refine and check the actual values +-1/4
  bool found_pos = false, found_neg = false;
  for (auto& r : roots) {
    Ball ref = refine_root(pc, r.enclosure, 128, 8);
    if (ref.contains_point(Rational(1, 4), Rational(0))) found_pos = true;
    if (ref.contains_point(Rational(-1, 4), Rational(0))) found_neg = true;
  }
  CHECK(found_pos);
  CHECK(found_neg);
}

TEST_CASE("multiple roots come back as clusters with multiplicity") {
  RationalPolynomial z = RationalPolynomial::univariate({Rational(0), Rational(1)}, "z");
  RationalPolynomial p = (z - RationalPolynomial::univariate({Rational(1, 3)}, "z")).pow(2) * z;
  auto roots = roots_of_rational_poly(p, 0, 128);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].multiplicity == 1);  // root 0
  CHECK(roots[1].multiplicity == 2);  // root 1/3 doubled
  CHECK(roots[1].enclosure.contains_point(Rational(1, 3), Rational(0)));
}
