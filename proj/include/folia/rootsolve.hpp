#pragma once

#include <vector>

#include "folia/ball.hpp"
#include "folia/polynomial.hpp"

namespace folia {

// A certified root cluster: the enclosure contains exactly
// `multiplicity` roots (counted with multiplicity) and no others.
struct RootCluster {
  Ball enclosure;
  long multiplicity = 0;
};

// Evaluate a Ball-coefficient polynomial (low -> high) by Horner.
Ball poly_eval(const BallVector& coeffs, const Ball& z);
BallVector poly_derivative(const BallVector& coeffs);

// Certified enclosures of all roots of the polynomial with Ball
// coefficients inside |z - center| < radius.  The boundary must be
// root-free at the working precision.  Clusters are pairwise disjoint and
// their multiplicities sum to the winding number of the boundary circle.
std::vector<RootCluster> roots_in_disc(const BallVector& coeffs, const Ball& center,
                                       const Real& radius, mpfr_prec_t prec);

// All complex roots of an exact univariate rational polynomial, with exact
// multiplicities (squarefree decomposition first, then certified isolation).
std::vector<RootCluster> roots_of_rational_poly(const RationalPolynomial& f, size_t var,
                                                mpfr_prec_t prec);

// Cauchy bound: all roots lie in |z| <= bound.
Real cauchy_root_bound(const BallVector& coeffs);

// Refine a certified simple-root enclosure by interval Newton steps.
Ball refine_root(const BallVector& coeffs, const Ball& enclosure, mpfr_prec_t prec, int steps = 4);

}  // namespace folia
