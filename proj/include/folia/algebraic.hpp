#pragma once

#include <optional>
#include <vector>

#include "folia/ball.hpp"
#include "folia/polynomial.hpp"

namespace folia {

// Algebraic number represented by its minimal polynomial over Z (content 1,
// positive leading coefficient) and an isolating box selecting one root.
// Construction paths guarantee irreducibility (rationals, non-square
// quadratics, or a caller-certified minimal polynomial).
class AlgebraicNumber {
 public:
  static AlgebraicNumber from_rational(const Rational& q);
  // root of x^2 - q when q is not a rational square (else reduces to rational);
  // branch: the root enclosed by `near` at 64 bits (principal if omitted)
  static AlgebraicNumber sqrt_of(const Rational& q);
  // caller certifies minpoly irreducible; box must isolate exactly one root
  static AlgebraicNumber from_minimal_poly(const RationalPolynomial& minpoly_int, const Ball& box);

  long degree() const { return minpoly_.degree_in(0); }
  bool is_rational() const { return degree() == 1; }
  Rational as_rational() const;
  const RationalPolynomial& minimal_polynomial() const { return minpoly_; }
  const Ball& isolating_box() const { return box_; }

  // refined enclosure at the requested precision
  Ball eval(mpfr_prec_t prec) const;

 private:
  AlgebraicNumber(RationalPolynomial mp, Ball box) : minpoly_(std::move(mp)), box_(std::move(box)) {}
  RationalPolynomial minpoly_;  // univariate in "t", integer, content 1
  Ball box_;
};

// absolute logarithmic Weil height h(x) = (1/d)(log|a0| + sum log+ |x_i|),
// returned as a real enclosure (ball with zero imaginary part)
Ball weil_height(const AlgebraicNumber& x, mpfr_prec_t prec);

struct LiouvilleResult {
  bool is_zero = false;       // P(y) = 0 certified symbolically
  Real bound;                 // valid lower bound for |P(y)| when nonzero
};

// Liouville gap: for P integer with deg <= d, |coeffs| <= N, and algebraic
// y with [Q(y):Q] <= g and H(y) <= H, either P(y) = 0 or
// |P(y)| >= (d^{m+1} N H^{d(m+1)})^{-g}.  Throws Undecidable when the
// enclosure of P(y) meets 0 and no symbolic zero test applies.
LiouvilleResult liouville_lower_bound(const RationalPolynomial& P,
                                      const std::vector<AlgebraicNumber>& y, long degBound,
                                      const Real& heightBound, mpfr_prec_t prec);

// the numeric bound alone: (d^{m+1} N H^{d(m+1)})^{-g}, rounded down
Real liouville_gap(long d, long nvars, const Rational& N, const Real& H, long g);

}  // namespace folia
