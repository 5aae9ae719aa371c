#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "folia/contour.hpp"
#include "folia/polydisc.hpp"
#include "folia/polynomial.hpp"

namespace folia {

// ---- metric entropy ---------------------------------------------------------

struct NetCertificate {
  enum class Kind { Separated, Covering };
  std::vector<BallVector> points;
  Real epsilon;
  Kind kind = Kind::Separated;
};

// Real-coordinate box per complex coordinate: (re_lo, re_hi, im_lo, im_hi).
struct CBox {
  double re_lo, re_hi, im_lo, im_hi;
};

// greedy maximal epsilon-separated set over a deterministic sample grid of
// the bounding box (grid pitch epsilon/2), restricted by the membership test
NetCertificate separated_net(const std::function<bool(const BallVector&)>& member,
                             const std::vector<CBox>& box, double epsilon, mpfr_prec_t prec);

// covering 2eps-net for S^1 . A from a covering eps-net for A, by the
// product construction with a (1 + floor(pi/eps)) phase net
NetCertificate s1_saturate(const NetCertificate& net, mpfr_prec_t prec);

// ---- empty ball -------------------------------------------------------------

struct EmptyBall {
  BallVector center;
  Real radius;
  Real margin;          // certified min over S^1 x ball of max_j |Q_j|
  long angleNetSize;    // theta discretization used by the certificate
  Real lipschitzBound;  // rotation Lipschitz constant used
};

// ball inside |x - domainCenter| <= domainRadius certified disjoint from
// S^1 . X  (X = common zeros of the given equations, pure dimension m < n)
EmptyBall empty_ball_search(const std::vector<RationalPolynomial>& X, long m,
                            const BallVector& domainCenter, const Real& domainRadius,
                            mpfr_prec_t prec, int maxDepth = 5);

// ---- Weierstrass polydiscs ----------------------------------------------------

struct WeierstrassPolydisc {
  PolydiscRegion region;                 // first zdim coordinates are z, rest w
  long zdim = 0;                         // m
  std::vector<RationalPolynomial> target;  // X equations in chart coordinates
  long degree = -1;                      // e(Delta, X)
  bool validated = false;
  Real margin;                           // boundary-disjointness margin
};

// validated Weierstrass polydisc around the domain center (n = 2, X a curve;
// degenerate full polydisc when X is empty), frame chosen by the empty-ball
// direction
WeierstrassPolydisc weierstrass_construct(const std::vector<RationalPolynomial>& X, long m,
                                          const BallVector& domainCenter, const Real& domainRadius,
                                          mpfr_prec_t prec);

// re-validate boundary disjointness, returning the certified margin;
// passes > 1 re-runs at doubled precision (certificate invariant)
Real wp_validate(WeierstrassPolydisc& wp, mpfr_prec_t prec, int maxZdepth = 4, int passes = 2);

// fiber cardinality (with multiplicity) over sampled z, constancy enforced
long sheet_degree(const WeierstrassPolydisc& wp, mpfr_prec_t prec);

// certified evaluation of the analytic resultant R(z) = prod_{(z,w) in X cap Delta} G(z,w);
// z is an enclosure inside Delta_z (set-valued in z)
class AnalyticResultant {
 public:
  AnalyticResultant(const WeierstrassPolydisc& wp, RationalPolynomial G, mpfr_prec_t prec);
  Ball operator()(const Ball& z, mpfr_prec_t prec) const;
  long sheet_count() const { return wp_.degree; }
  CertFn as_fn() const;

 private:
  WeierstrassPolydisc wp_;
  RationalPolynomial g_;
  mpfr_prec_t prec_;
};

struct WpCover {
  std::vector<WeierstrassPolydisc> polydiscs;
  long maxDegree = 0;
  double gridPitch = 0;           // probe-grid resolution of the certificate
  long probeCount = 0;
};

// cover of the half ball B^2 by shrunk polydiscs Delta_alpha^2 for X,
// certified on a probe grid
WpCover wp_cover(const std::vector<RationalPolynomial>& X, const BallVector& center,
                 const Real& radius, mpfr_prec_t prec, double gridPitch = 0.125,
                 int maxPolydiscs = 512);

// membership of a point in the delta-shrunk polydisc
bool wp_contains(const WeierstrassPolydisc& wp, const BallVector& x, const Rational& delta);

}  // namespace folia
