#pragma once

#include <functional>
#include <vector>

#include "folia/ball.hpp"

namespace folia {

// Set-valued certified evaluation: the result must contain f(z) for
// every z in the input enclosure.
using CertFn = std::function<Ball(const Ball&, mpfr_prec_t)>;

// Enclosure of arg(z) over a zero-excluding ball: midpoint argument and a
// certified half-width (asin(r/|m|) plus rounding slack).
struct ArgEnclosure {
  Real mid;
  Real halfwidth;
};
ArgEnclosure arg_enclosure(const Ball& z, mpfr_prec_t prec);

// Certified winding number of f along the circle |z - center| = radius.
// Requires |f| > 0 on the contour; throws ZeroOnContour / PrecisionInsufficient.
long winding_number(const CertFn& f, const Ball& center, const Real& radius, mpfr_prec_t prec,
                    int max_refine = 14);

// Certified lower bound for min |f| on the circle (0 if not certifiable
// at the given refinement depth).
Real min_modulus_on_circle(const CertFn& f, const Ball& center, const Real& radius,
                           mpfr_prec_t prec, int max_refine = 12);

// Certified upper bound for max |f| on the circle.  For f holomorphic on
// the closed disc this also bounds the disc maximum (maximum principle).
Real max_modulus_on_circle(const CertFn& f, const Ball& center, const Real& radius,
                           mpfr_prec_t prec, int refine = 4);

// Certified upper bound for max |f| over the annulus
//   radius/rho <= |z - center| <= radius*rho   (rho > 1)
Real max_modulus_on_annulus(const CertFn& f, const Ball& center, const Real& radius, double rho,
                            mpfr_prec_t prec, int refine = 3);

// Contour integral (1/2pi i) not included:  returns  \oint f dz  over the
// circle it |z - center| = radius, using the N-point trapezoid rule with the
// derivative-free error bound for functions analytic and bounded by M on
// the annulus radius/rho..radius*rho.  node(k, N) must return a certified
// value of f at the k-th node  center + radius e^{2 pi i k / N}.
Ball contour_integral_nodes(const std::function<Ball(long, long)>& node, const Ball& center,
                            const Real& radius, double rho, const Real& annulus_bound,
                            mpfr_prec_t prec, const Real& target_error);

// Convenience wrapper for single-valued certified integrands.
Ball contour_integral(const CertFn& f, const Ball& center, const Real& radius, double rho,
                      mpfr_prec_t prec, const Real& target_error);

}  // namespace folia
