#include "folia/algebraic.hpp"

#include <cmath>

#include "folia/error.hpp"
#include "folia/rootsolve.hpp"

namespace folia {

namespace {
const std::vector<std::string> TVAR = {"t"};
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& q) {
  // den*t - num: content 1 when q is reduced
  RationalPolynomial mp = RationalPolynomial::univariate({-q.get_num(), q.get_den()}, "t");
  return AlgebraicNumber(mp, Ball::exact(q, Rational(0), 64));
}

AlgebraicNumber AlgebraicNumber::sqrt_of(const Rational& q) {
  // exact square test
  Rational root;
  if (q >= 0) {
    Int num = q.get_num(), den = q.get_den();
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (rn * rn == num && rd * rd == den) return from_rational(Rational(rn, rd));
  }
  RationalPolynomial mp = RationalPolynomial::univariate({-q, Rational(0), Rational(1)}, "t");
  auto [mpi, sc] = mp.integerize();
  Ball qb = Ball::exact(q, Rational(0), 128);
  Ball box = q >= 0 ? sqrt(qb) : mul_i(sqrt(neg(qb)));
  return AlgebraicNumber(mpi, box);
}

AlgebraicNumber AlgebraicNumber::from_minimal_poly(const RationalPolynomial& minpoly_int,
                                                   const Ball& box) {
  auto [mpi, sc] = minpoly_int.integerize();
  return AlgebraicNumber(mpi, box);
}

Rational AlgebraicNumber::as_rational() const {
  if (degree() != 1) throw Error(err::InputError, "not a rational number");
  auto cs = minpoly_.coeffs_in(0);
  return -cs[0].constant_value() / cs[1].constant_value();
}

Ball AlgebraicNumber::eval(mpfr_prec_t prec) const {
  if (is_rational()) return Ball::exact(as_rational(), Rational(0), prec);
  auto cs = minpoly_.coeffs_in(0);
  BallVector bc;
  for (auto& c : cs) bc.push_back(Ball::exact(c.constant_value(), Rational(0), prec));
  Ball x = refine_root(bc, box_.round_to(prec), prec, 64);
  // keep refining while the radius is above target
  Real target = Real::pow2(-static_cast<long>(prec) + 16, kRadPrec);
  for (int i = 0; i < 8 && !(x.rad() < target); ++i) x = refine_root(bc, x, prec, 16);
  return x;
}

Ball weil_height(const AlgebraicNumber& x, mpfr_prec_t prec) {
  const RationalPolynomial& mp = x.minimal_polynomial();
  long d = mp.degree_in(0);
  auto cs = mp.coeffs_in(0);
  Rational lead = abs(cs.back().constant_value());
  mpfr_prec_t pe = prec + 32;
  Real log_lead_lo = Real::log(Real::of(lead, pe, MPFR_RNDD), pe, MPFR_RNDD);
  Real log_lead_hi = Real::log(Real::of(lead, pe, MPFR_RNDU), pe, MPFR_RNDU);
  Real sum_lo = log_lead_lo, sum_hi = log_lead_hi;
  auto roots = roots_of_rational_poly(mp, 0, prec);
  long counted = 0;
  for (auto& r : roots) {
    counted += r.multiplicity;  // minimal polys are squarefree; multiplicity 1
    Real lo = r.enclosure.abs_lower(pe), hi = r.enclosure.abs_upper(pe);
    Real l_lo = (lo > Real::of(1L, kRadPrec)) ? Real::log(lo, pe, MPFR_RNDD) : Real::of(0L, pe);
    Real l_hi = (hi > Real::of(1L, kRadPrec)) ? Real::log(hi, pe, MPFR_RNDU) : Real::of(0L, pe);
    for (int k = 0; k < r.multiplicity; ++k) {
      sum_lo = Real::add(sum_lo, l_lo, pe, MPFR_RNDD);
      sum_hi = Real::add(sum_hi, l_hi, pe, MPFR_RNDU);
    }
  }
  if (counted != d) throw Error(err::PrecisionInsufficient, "weil_height: missing roots");
  Real h_lo = Real::div(sum_lo, Real::of(d, pe), pe, MPFR_RNDD);
  Real h_hi = Real::div(sum_hi, Real::of(d, pe), pe, MPFR_RNDU);
  return Ball::real_interval(h_lo, h_hi, prec);
}

Real liouville_gap(long d, long nvars, const Rational& N, const Real& H, long g) {
  mpfr_prec_t p = kRadPrec;
  // (d^{m+1} N H^{d(m+1)})^{-g}, rounded down (valid lower bound)
  Real base = Real::mul(Real::pow_si(Real::of(std::max(1L, d), p), nvars, p, MPFR_RNDU),
                        Real::of(N, p, MPFR_RNDU), p, MPFR_RNDU);
  base = Real::mul(base, Real::pow_si(H, d * nvars, p, MPFR_RNDU), p, MPFR_RNDU);
  return Real::pow_si(base, -g, p, MPFR_RNDD);
}

LiouvilleResult liouville_lower_bound(const RationalPolynomial& P,
                                      const std::vector<AlgebraicNumber>& y, long degBound,
                                      const Real& heightBound, mpfr_prec_t prec) {
  if (P.nvars() != y.size()) throw Error(err::InputError, "liouville: arity mismatch");
  auto [Pi, sc] = P.integerize();
  if (sc != 1 && sc != -1) {
    // demand integer input as per the contract
    for (const auto& [e, c] : P.terms())
      if (c.get_den() != 1) throw Error(err::InputError, "liouville: P must be integer");
  }
  long d = std::max(0L, P.total_degree());
  Rational N = P.coeff_max_abs();
  long m1 = static_cast<long>(y.size());
  Real bound = liouville_gap(d, m1, N, heightBound, degBound);

  // symbolic zero test: all rational, or one algebraic coordinate
  long alg_count = 0;
  size_t alg_idx = 0;
  for (size_t i = 0; i < y.size(); ++i)
    if (!y[i].is_rational()) {
      ++alg_count;
      alg_idx = i;
    }
  if (alg_count == 0) {
    std::vector<Rational> pt;
    for (auto& yi : y) pt.push_back(yi.as_rational());
    Rational v = P.eval(pt);
    if (v == 0) return {true, bound};
    Real av = Real::of(abs(v), kRadPrec, MPFR_RNDD);
    if (av < bound)
      throw Error(err::VerificationFailed, "liouville: exact value below the stated gap");
    return {false, bound};
  }
  if (alg_count == 1) {
    RationalPolynomial uni = P;
    for (size_t i = 0; i < y.size(); ++i)
      if (i != alg_idx) uni = uni.substitute(i, y[i].as_rational());
    // P(y) = 0 iff minpoly divides uni (as univariate in coordinate alg_idx)
    std::vector<RationalPolynomial> maps;
    auto tv = y[alg_idx].minimal_polynomial().vars();
    for (size_t i = 0; i < P.nvars(); ++i)
      maps.push_back(i == alg_idx ? RationalPolynomial::variable(0, tv)
                                  : RationalPolynomial::constant(Rational(0), tv));
    RationalPolynomial uni_t = uni.compose(maps);
    if (uni_t.is_zero()) return {true, bound};
    if (uni_t.degree_in(0) >= 1) {
      RationalPolynomial g = gcd_univariate(uni_t, y[alg_idx].minimal_polynomial(), 0);
      if (g.degree_in(0) == y[alg_idx].degree()) return {true, bound};
      if (g.degree_in(0) >= 1)
        throw Error(err::VerificationFailed, "liouville: minpoly not irreducible");
    }
    // certified nonzero: grow precision until the enclosure excludes 0
    for (mpfr_prec_t p = prec; p <= 16 * prec + 4096; p *= 2) {
      BallVector pt;
      for (auto& yi : y) pt.push_back(yi.eval(p));
      Ball v = P.eval(pt, p);
      if (v.excludes_zero()) {
        if (v.abs_upper() < bound)
          throw Error(err::VerificationFailed, "liouville: enclosure below the stated gap");
        return {false, bound};
      }
    }
    throw Error(err::Undecidable, "liouville: enclosure meets 0, symbolic check exhausted");
  }
  // several algebraic coordinates: numeric certificate only
  for (mpfr_prec_t p = prec; p <= 16 * prec + 4096; p *= 2) {
    BallVector pt;
    for (auto& yi : y) pt.push_back(yi.eval(p));
    Ball v = P.eval(pt, p);
    if (v.excludes_zero()) return {false, bound};
    if (v.abs_upper() < bound) return {true, bound};  // forced zero by the gap
  }
  throw Error(err::Undecidable, "liouville: cannot separate P(y) from 0");
}

}  // namespace folia
