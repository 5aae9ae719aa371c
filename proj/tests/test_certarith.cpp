#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "folia/algebraic.hpp"
#include "folia/rng.hpp"
#include "folia/rootsolve.hpp"

using namespace folia;

TEST_CASE("weil height of rationals and surds") {
  // h(1) = 0
  Ball h1 = weil_height(AlgebraicNumber::from_rational(Rational(1)), 128);
  CHECK(h1.abs_upper().to_double() < 1e-25);
  // h(1/2) = log 2  (a0 = 2, log+ |1/2| = 0)
  Ball h2 = weil_height(AlgebraicNumber::from_rational(Rational(1, 2)), 128);
  CHECK(h2.mid().re.to_double() == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  // h(sqrt 2) = (1/2) log 2  (a0 = 1, both roots have modulus sqrt 2)
  Ball h3 = weil_height(AlgebraicNumber::sqrt_of(Rational(2)), 128);
  CHECK(h3.mid().re.to_double() == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("weil height reciprocal invariance on random quadratics") {
  // h(x) = h(1/x): if x is a root of a t^2 + b t + c, 1/x is a root of
  // c t^2 + b t + a
  Rng rng(2024);
  int done = 0;
  while (done < 50) {
    long a = rng.uniform_int(1, 9), b = rng.uniform_int(-9, 9), c = rng.uniform_int(1, 9);
    long disc = b * b - 4 * a * c;
    if (disc == 0) continue;
    // skip reducible (rational roots) cases: need irreducible minimal polys
    long s = static_cast<long>(std::llround(std::sqrt(std::abs(static_cast<double>(disc)))));
    if (disc > 0 && s * s == disc) continue;
    RationalPolynomial f =
        RationalPolynomial::univariate({Rational(c), Rational(b), Rational(a)}, "t");
    RationalPolynomial g =
        RationalPolynomial::univariate({Rational(a), Rational(b), Rational(c)}, "t");
    auto rf = roots_of_rational_poly(f, 0, 128);
    auto rg = roots_of_rational_poly(g, 0, 128);
    REQUIRE(rf.size() == 2);
    REQUIRE(rg.size() == 2);
    AlgebraicNumber x = AlgebraicNumber::from_minimal_poly(f, rf[0].enclosure);
    AlgebraicNumber xr = AlgebraicNumber::from_minimal_poly(g, rg[0].enclosure);
    Ball hx = weil_height(x, 128), hxr = weil_height(xr, 128);
    CHECK(std::abs(hx.mid().re.to_double() - hxr.mid().re.to_double()) < 1e-15);
    ++done;
  }
}

TEST_CASE("liouville bound examples") {
  RationalPolynomial P = RationalPolynomial::univariate({Rational(-1), Rational(1)}, "y");
  // y = 1/2: bound (1*1*2)^{-1} = 1/2 and |P(1/2)| = 1/2 meets it
  auto r1 = liouville_lower_bound(P, {AlgebraicNumber::from_rational(Rational(1, 2))}, 1,
                                  Real::of(2L, 64), 128);
  CHECK(!r1.is_zero);
  CHECK(r1.bound.to_double() == doctest::Approx(0.5));
  // y = 1: ZeroFlag
  auto r2 = liouville_lower_bound(P, {AlgebraicNumber::from_rational(Rational(1))}, 1,
                                  Real::of(1L, 64), 128);
  CHECK(r2.is_zero);
  // y = 3: bound 1/3 <= |P(3)| = 2
  auto r3 = liouville_lower_bound(P, {AlgebraicNumber::from_rational(Rational(3))}, 1,
                                  Real::of(3L, 64), 128);
  CHECK(!r3.is_zero);
  CHECK(r3.bound.to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("liouville gap soundness on random rational points") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> cs;
    for (int k = 0; k <= 3; ++k) cs.push_back(Rational(rng.uniform_int(-9, 9)));
    RationalPolynomial P = RationalPolynomial::univariate(cs, "y");
    if (P.is_zero()) continue;
    Rational y = rng.rational(9);
    Rational v = P.eval({y});
    Int hnum = abs(y.get_num()), hden = y.get_den();
    Real H = Real::of(Rational(hnum > hden ? hnum : hden), 64, MPFR_RNDU);
    if (H < Real::of(1L, 64)) H = Real::of(1L, 64);
    auto res = liouville_lower_bound(P, {AlgebraicNumber::from_rational(y)}, 1, H, 128);
    if (v == 0) {
      CHECK(res.is_zero);
    } else {
      CHECK(!res.is_zero);
      CHECK(Real::of(abs(v), 64, MPFR_RNDD) >= res.bound);
    }
  }
}

TEST_CASE("algebraic evaluation refines") {
  AlgebraicNumber s2 = AlgebraicNumber::sqrt_of(Rational(2));
  Ball v = s2.eval(256);
  CHECK(v.rad() < Real::pow2(-200, kRadPrec));
  Ball sq = mul(v, v);
  CHECK(sq.contains_point(Rational(2), Rational(0)));
}
