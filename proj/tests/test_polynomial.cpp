#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "folia/complexity.hpp"
#include "folia/polynomial.hpp"
#include "folia/rng.hpp"

using namespace folia;

namespace {
const std::vector<std::string> XY = {"x", "y"};
RationalPolynomial X() { return RationalPolynomial::variable(0, XY); }
RationalPolynomial Y() { return RationalPolynomial::variable(1, XY); }
RationalPolynomial C(long n, long d = 1) { return RationalPolynomial::constant(Rational(n, d), XY); }
}  // namespace

TEST_CASE("arithmetic and evaluation") {
  auto p = X() * X() - C(2);  // x^2 - 2
  CHECK(p.total_degree() == 2);
  CHECK(p.eval({Rational(3), Rational(0)}) == Rational(7));
  auto q = p * p;
  CHECK(q.degree_in(0) == 4);
  CHECK(q.eval({Rational(1), Rational(5)}) == Rational(1));

  // ball eval encloses the interval image: x in [1.4, 1.6]
  Ball x = Ball::real_interval(Real::of(1.4, 64), Real::of(1.6, 64), 64);
  Ball y = Ball::exact(0, 64);
  Ball v = p.eval({x, y}, 64);
  CHECK(v.re_lower() <= Real::of(-0.04, 64));
  CHECK(v.re_upper() >= Real::of(0.56, 64));
}

TEST_CASE("derivative and substitution") {
  auto p = X() * Y() + X() * X() * X();
  auto dx = p.derivative(0);
  CHECK(dx == Y() + C(3) * X() * X());
  auto sub = p.substitute(1, Rational(2));
  CHECK(sub.eval({Rational(1), Rational(0)}) == Rational(3));
  auto comp = p.compose({Y(), X()});  // swap variables
  CHECK(comp == Y() * X() + Y() * Y() * Y());
}

TEST_CASE("integerize gives content-1 integer coefficients") {
  auto p = C(3, 2) * X() * X() + C(9, 4);
  auto [ip, s] = p.integerize();
  CHECK(s == Rational(3, 4));
  CHECK(ip.coeff({2, 0}) == Rational(2));
  CHECK(ip.coeff({0, 0}) == Rational(3));
}

TEST_CASE("exact division") {
  auto p = (X() + Y()) * (X() - Y()) * (X() + C(1));
  auto q = try_divide(p, X() + Y());
  REQUIRE(q.has_value());
  CHECK(*q == (X() - Y()) * (X() + C(1)));
  CHECK(!try_divide(p, X() + C(7)).has_value());
}

TEST_CASE("univariate and bivariate gcd") {
  const std::vector<std::string> xv = {"x"};
  auto x = RationalPolynomial::variable(0, xv);
  auto one = RationalPolynomial::constant(Rational(1), xv);
  auto f = (x - one) * (x - one) * (x + one);
  auto g = (x - one) * x;
  auto h = gcd_univariate(f, g, 0);
  CHECK(h == x - one);

  auto fb = (X() + Y()) * (X() * X() + Y());
  auto gb = (X() + Y()) * (X() - C(3));
  auto hb = gcd_bivariate(fb, gb, 0);
  CHECK(try_divide(fb, hb).has_value());
  CHECK(try_divide(gb, hb).has_value());
  CHECK(hb.total_degree() == 1);
}

TEST_CASE("resultant") {
  // Res_x(x^2 - y, x - 2) = 4 - y up to sign
  auto f = X() * X() - Y();
  auto g = X() - C(2);
  auto r = resultant(f, g, 0);
  CHECK(r.degree_in(0) == 0);
  CHECK((r == C(4) - Y() || r == Y() - C(4)));

  // classical: Res_x(x^2-1, x^2-4) = 9 (two quadratics, no common root)
  const std::vector<std::string> xv = {"x"};
  auto x = RationalPolynomial::variable(0, xv);
  auto f2 = x * x - RationalPolynomial::constant(Rational(1), xv);
  auto g2 = x * x - RationalPolynomial::constant(Rational(4), xv);
  auto r2 = resultant(f2, g2, 0);
  CHECK(r2.constant_value() == Rational(9));

  // common root => resultant 0
  auto g3 = (x - RationalPolynomial::constant(Rational(1), xv)) * x;
  CHECK(resultant(f2, g3, 0).is_zero());
}

TEST_CASE("rational roots with multiplicity") {
  const std::vector<std::string> xv = {"x"};
  auto x = RationalPolynomial::variable(0, xv);
  auto c = [&](long n, long d = 1) { return RationalPolynomial::constant(Rational(n, d), xv); };
  auto f = (x - c(1)) * (x - c(1)) * (c(2) * x - c(1)) * (x * x + c(1));
  auto roots = rational_roots(f, 0);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == Rational(1, 2));
  CHECK(roots[0].second == 1);
  CHECK(roots[1].first == Rational(1));
  CHECK(roots[1].second == 2);
}

TEST_CASE("squarefree part") {
  const std::vector<std::string> xv = {"x"};
  auto x = RationalPolynomial::variable(0, xv);
  auto one = RationalPolynomial::constant(Rational(1), xv);
  auto f = (x - one) * (x - one) * (x + one);
  auto sf = squarefree_part(f, 0);
  CHECK(sf.degree_in(0) == 2);
  CHECK(sf.substitute(0, Rational(1)).is_zero());
  CHECK(sf.substitute(0, Rational(-1)).is_zero());
}

TEST_CASE("rational function reduction and derivative") {
  RationalFunction r(X() * X() - Y() * Y(), X() + Y());
  CHECK(r.num() == X() - Y());
  CHECK(r.is_polynomial());
  RationalFunction s(C(1), X());
  auto ds = s.derivative(0);  // -1/x^2
  CHECK(ds.eval({Rational(2), Rational(0)}) == Rational(-1, 4));
}

TEST_CASE("delta complexity examples") {
  auto p1 = X();
  auto c1 = delta_complexity(p1);
  CHECK(c1.degree == 1);
  CHECK(c1.logHeight == doctest::Approx(0.0));
  auto p2 = C(2) * X() * X() + C(3);
  auto c2 = delta_complexity(p2);
  CHECK(c2.degree == 2);
  CHECK(c2.logHeight == doctest::Approx(std::log(3.0)));
  auto cl = delta_complexity(std::vector<RationalPolynomial>{p1, p2});
  CHECK(cl.degree == 2);
  CHECK(cl.logHeight == doctest::Approx(std::log(3.0)));
}
