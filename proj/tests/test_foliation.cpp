#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "folia/foliation.hpp"

using namespace folia;

namespace {

const std::vector<std::string> XY = {"x", "y"};

RationalPolynomial PX() { return RationalPolynomial::variable(0, XY); }
RationalPolynomial PY() { return RationalPolynomial::variable(1, XY); }
RationalPolynomial PC(long n) { return RationalPolynomial::constant(Rational(n), XY); }
RationalFunction one_xy() { return RationalFunction(PC(1)); }
RationalFunction zero_xy() { return RationalFunction(PC(0)); }

// d/dx on C^2
FoliatedSpace ddx() { return FoliatedSpace(XY, {}, {{one_xy(), zero_xy()}}); }

// product foliation d/dx, d/dy on C^2
FoliatedSpace product2() {
  return FoliatedSpace(XY, {}, {{one_xy(), zero_xy()}, {zero_xy(), one_xy()}});
}

// xi = d/dt + y d/dy on C_t x C_y (exponential flow)
FoliatedSpace expflow() {
  const std::vector<std::string> TY = {"t", "y"};
  RationalFunction one{RationalPolynomial::constant(Rational(1), TY)};
  RationalFunction yf{RationalPolynomial::variable(1, TY)};
  return FoliatedSpace(TY, {}, {{one, yf}});
}

}  // namespace

TEST_CASE("xi_apply examples") {
  auto sp = ddx();
  // xi = d_x, P = x^2 -> 2x
  auto d1 = sp.xi_apply(0, PX() * PX());
  CHECK(d1.is_polynomial());
  CHECK(d1.num() == Rational(2) * PX());
  // constant -> 0
  CHECK(sp.xi_apply(0, PC(5)).is_zero());
  // xi = d_x + y d_y, P = xy -> y + xy
  FoliatedSpace sp2(XY, {}, {{one_xy(), RationalFunction(PY())}});
  auto d2 = sp2.xi_apply(0, PX() * PY());
  CHECK(d2.num() == PY() + PX() * PY());
}

TEST_CASE("noncommuting fields abort construction") {
  // xi1 = d_x, xi2 = x d_y: [xi1, xi2] = d_y != 0
  CHECK_THROWS_AS(
      FoliatedSpace(XY, {}, {{one_xy(), zero_xy()}, {zero_xy(), RationalFunction(PX())}}), Error);
}

TEST_CASE("straight foliation chart is affine and exact") {
  auto sp = ddx();
  BallVector p = {Ball::exact(Rational(0), Rational(0), 128),
                  Ball::exact(Rational(7), Rational(0), 128)};
  LeafChart ch = leaf_chart(sp, p, 10, Real::of(1L, 64), 128);
  CHECK(ch.affine);
  BallVector q = ch.eval({Ball::exact(Rational(1, 2), Rational(0), 128)}, 128);
  CHECK(q[0].contains_point(Rational(1, 2), Rational(0)));
  CHECK(q[1].contains_point(Rational(7), Rational(0)));
  CHECK(ch.remainderBound.is_zero());
}

TEST_CASE("exponential flow chart: coefficients are 1/k!") {
  auto sp = expflow();
  BallVector p = {Ball::exact(Rational(0), Rational(0), 128),
                  Ball::exact(Rational(1), Rational(0), 128)};
  LeafChart ch = leaf_chart(sp, p, 20, Real::of(0.25, 64), 128);
  REQUIRE(!ch.affine);
  Rational fact(1);
  for (long k = 0; k <= 12; ++k) {
    if (k > 0) fact *= Rational(k);
    CHECK(ch.seriesCoeffs[1][k].contains_point(Rational(1) / fact, Rational(0)));
    // t-coordinate: identity series
    CHECK(ch.seriesCoeffs[0][k].contains_point(k == 1 ? Rational(1) : Rational(0), Rational(0)));
  }
  // chart value at t=1/4 encloses e^{1/4}
  Ball y = ch.eval_coord(1, Ball::exact(Rational(1, 4), Rational(0), 128), 128);
  double target = std::exp(0.25);
  CHECK(y.re_lower().to_double() <= target);
  CHECK(y.re_upper().to_double() >= target);
  CHECK(ch.remainderBound.to_double() < 1e-6);
}

TEST_CASE("continuation along a closed loop returns to start") {
  auto sp = expflow();
  BallVector p = {Ball::exact(Rational(0), Rational(0), 192),
                  Ball::exact(Rational(1), Rational(0), 192)};
  LeafChart ch = leaf_chart(sp, p, 120, Real::of(0.26, 64), 192);
  // 0 -> 1 in quarter steps, then back down
  std::vector<Ball> path;
  for (int i = 0; i < 4; ++i) path.push_back(Ball::exact(Rational(1, 4), Rational(0), 192));
  for (int i = 0; i < 4; ++i) path.push_back(Ball::exact(Rational(-1, 4), Rational(0), 192));
  LeafChart back = continue_chart(sp, ch, path, 120, Real::of(0.26, 64), 192);
  CHECK(back.basePoint[0].contains_point(Rational(0), Rational(0)));
  CHECK(back.basePoint[1].contains_point(Rational(1), Rational(0)));
  CHECK(back.basePoint[1].rad().to_double() < 1e-25);
}

TEST_CASE("continuation through a pole is refused") {
  // xi = d/dt + (1/y) d/dy at a base point with y = 0: pole of the field
  const std::vector<std::string> TY = {"t", "y"};
  RationalFunction one{RationalPolynomial::constant(Rational(1), TY)};
  RationalFunction invy(RationalPolynomial::constant(Rational(1), TY),
                        RationalPolynomial::variable(1, TY));
  FoliatedSpace sp(TY, {}, {{one, invy}});
  BallVector p = {Ball::exact(Rational(0), Rational(0), 128),
                  Ball::exact(Rational(0), Rational(0), 128)};
  CHECK_THROWS_AS(leaf_chart(sp, p, 10, Real::of(0.5, 64), 128), Error);
}

TEST_CASE("unlikely locus examples") {
  auto sp = ddx();
  // V = {y=0}: generators {y}
  auto l1 = unlikely_locus(sp, {PY()}, LocusMode::Exact1D);
  REQUIRE(l1.exact);
  REQUIRE(l1.generators.size() == 1);
  CHECK(l1.generators[0] == PY());
  // V = {x=0}: xi P = 1 never 0 -> empty locus
  auto l2 = unlikely_locus(sp, {PX()}, LocusMode::Exact1D);
  CHECK(l2.exact);
  CHECK(l2.generators.empty());
  // V = {xy=0}: generators {xy, y} -> zero set {y=0}
  auto l3 = unlikely_locus(sp, {PX() * PY()}, LocusMode::Exact1D);
  REQUIRE(l3.generators.size() == 2);
  CHECK(l3.generators[0] == PX() * PY());
  CHECK(l3.generators[1] == PY());
}

TEST_CASE("multiplicity examples") {
  // n=1: P composed with chart = z^2 -> 2:  xi = d_x, V = {x^2}, p = 0
  auto sp = ddx();
  auto m1 = multiplicity_at(sp, {PX() * PX()}, {Rational(0), Rational(3)}, 16, 128);
  CHECK(!m1.infinite);
  CHECK(m1.value == 2);
  // P(chart) = 1 + z: multiplicity 0
  auto m2 = multiplicity_at(sp, {PC(1) + PX()}, {Rational(0), Rational(0)}, 16, 128);
  CHECK(m2.value == 0);
  // improper: V = {y=0} along d_x at a point with y = 0
  auto m3 = multiplicity_at(sp, {PY()}, {Rational(0), Rational(0)}, 16, 128);
  CHECK(m3.infinite);
  // n=2: F = (zw, z-w) at 0 -> 2
  auto sp2 = product2();
  auto m4 = multiplicity_at(sp2, {PX() * PY(), PX() - PY()}, {Rational(0), Rational(0)}, 16, 128);
  CHECK(!m4.infinite);
  CHECK(m4.value == 2);
}

TEST_CASE("derived foliations") {
  auto sp2 = product2();
  // L_1 of a 2-field space: alpha_1 xi_1 + alpha_2 xi_2
  FoliatedSpace l1 = derived_foliation_Lk(sp2, 1);
  CHECK(l1.ambient_dim() == 4);  // a1_1, a1_2, x, y
  CHECK(l1.leaf_dim() == 1);
  // specializing alpha to e_1 recovers xi_1
  const auto& f = l1.fields()[0];
  RationalFunction fx = f[2].substitute(0, Rational(1)).substitute(1, Rational(0));
  RationalFunction fy = f[3].substitute(0, Rational(1)).substitute(1, Rational(0));
  CHECK(fx.num().is_constant());
  CHECK(fx.num().constant_value() == 1);
  CHECK(fy.is_zero());
  // P_D with Phi = identity: fields reduce to d/ds_i + xi_i
  const std::vector<std::string> SS = {"s1", "s2"};
  std::vector<RationalPolynomial> phi = {RationalPolynomial::variable(0, SS),
                                         RationalPolynomial::variable(1, SS)};
  FoliatedSpace pd = derived_foliation_PD(sp2, phi);
  CHECK(pd.ambient_dim() == 4);
  CHECK(pd.leaf_dim() == 2);
  // field 0: (1, 0, 1, 0)
  CHECK(pd.fields()[0][0].num().constant_value() == 1);
  CHECK(pd.fields()[0][1].is_zero());
  CHECK(pd.fields()[0][2].num().constant_value() == 1);
  CHECK(pd.fields()[0][3].is_zero());
}

TEST_CASE("point outside variety") {
  const std::vector<std::string> X1 = {"x1"};
  auto x1 = RationalPolynomial::variable(0, X1);
  auto c = [&](long n) { return RationalPolynomial::constant(Rational(n), X1); };
  // Z = {x1=0}, d=1 -> 1
  auto p1 = point_outside_variety({x1}, 1, 1);
  CHECK(p1[0] == Rational(1));
  // Z = {x1(x1-1)=0}, d=2 -> 1/2
  auto p2 = point_outside_variety({x1 * (x1 - c(1))}, 1, 2);
  CHECK(p2[0] == Rational(1, 2));
  // Z cut by {1}: empty variety -> 0
  auto p3 = point_outside_variety({c(1)}, 1, 1);
  CHECK(p3[0] == Rational(0));
  // contract check on a 2d example: all three clauses
  auto Z = std::vector<RationalPolynomial>{PX() * PY() - PC(1)};
  auto p4 = point_outside_variety(Z, 2, 3);
  CHECK(abs(p4[0]) <= 1);
  CHECK(abs(p4[1]) <= 1);
  bool nonzero = false;
  for (auto& q : Z)
    if (q.eval(p4) != 0) nonzero = true;
  CHECK(nonzero);
}

TEST_CASE("complete intersection choose") {
  auto sp2 = product2();
  // V = {x, y}: already complete intersection
  auto w1 = complete_intersection_choose(sp2, {PX(), PY()}, 2, 42);
  CHECK(w1.size() == 2);
  CHECK(w1[0] == PX());
  // V = {x, y, x+y} redundant, m = 2
  auto w2 = complete_intersection_choose(sp2, {PX(), PY(), PX() + PY()}, 2, 42);
  CHECK(w2.size() == 2);
  // both combinations vanish at the common zero (0,0)
  for (auto& w : w2) CHECK(w.eval({Rational(0), Rational(0)}) == 0);
  // m = 1, V a point in C^2 presented by two equations
  auto w3 = complete_intersection_choose(sp2, {PX() - PC(1), PY() - PC(2)}, 1, 7);
  CHECK(w3.size() == 1);
  CHECK(!w3[0].is_zero());
  CHECK(w3[0].eval({Rational(1), Rational(2)}) == 0);
}

TEST_CASE("chart consistency invariant: d(chart)/dt = xi(chart) through order K-1") {
  auto sp = expflow();
  BallVector p = {Ball::exact(Rational(0), Rational(0), 128),
                  Ball::exact(Rational(2), Rational(0), 128)};
  LeafChart ch = leaf_chart(sp, p, 16, Real::of(0.1, 64), 128);
  // y' = y: (k+1) c_{k+1} = c_k must hold through order K-1
  for (long k = 0; k + 1 <= 15; ++k) {
    Ball lhs = mul_rat(ch.seriesCoeffs[1][k + 1], Rational(k + 1));
    Ball rhs = ch.seriesCoeffs[1][k];
    CHECK(sub(lhs, rhs).contains_zero());
    CHECK(sub(lhs, rhs).abs_upper().to_double() < 1e-30);
  }
}
