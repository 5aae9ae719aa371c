#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "folia/ball.hpp"
#include "folia/complexity.hpp"
#include "folia/polynomial.hpp"

namespace folia {

// A rational vector field: one component per ambient coordinate.
using VectorField = std::vector<RationalFunction>;

// Ambient affine variety with n commuting rational vector fields.
// Commutativity is verified symbolically on construction (the bracket
// numerators must vanish identically); failure aborts.
class FoliatedSpace {
 public:
  FoliatedSpace(std::vector<std::string> coords, std::vector<RationalPolynomial> varietyEqs,
                std::vector<VectorField> fields, long baseFieldDegree = 1);

  long ambient_dim() const { return static_cast<long>(coords_.size()); }
  long leaf_dim() const { return static_cast<long>(fields_.size()); }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::vector<RationalPolynomial>& variety() const { return variety_; }
  const std::vector<VectorField>& fields() const { return fields_; }
  long base_field_degree() const { return baseFieldDegree_; }

  // Lie derivative of P (or a rational function) along the i-th field
  RationalFunction xi_apply(size_t i, const RationalPolynomial& P) const;
  RationalFunction xi_apply(size_t i, const RationalFunction& F) const;

  // all field components polynomial with constant value (affine leaves)
  bool fields_constant() const;

  // certify dist(p, Sigma_F) > 0 coarsely: all field denominators exclude 0
  void require_off_singular(const BallVector& p, mpfr_prec_t prec) const;

  Complexity delta() const;

 private:
  std::vector<std::string> coords_;
  std::vector<RationalPolynomial> variety_;
  std::vector<VectorField> fields_;
  long baseFieldDegree_;
};

// Truncated leaf chart phi_p with a certified remainder on its domain.
struct LeafChart {
  BallVector basePoint;
  long order = 0;          // series truncated after t^order
  long leafDim = 1;
  bool affine = false;     // constant fields: exact affine chart, remainder 0
  // non-affine (n = 1): seriesCoeffs[coord][k] = coefficient of t^k
  std::vector<BallVector> seriesCoeffs;
  std::vector<std::vector<Rational>> affineDirs;  // affine: [field][coord]
  Real remainderBound;     // sup distance to the true chart on the domain
  Real domainRadius;

  // evaluate the chart at a leaf point (|x| <= domainRadius), remainder
  // absorbed into the enclosure radii
  BallVector eval(const BallVector& leafPoint, mpfr_prec_t prec) const;
  Ball eval_coord(size_t coord, const Ball& t, mpfr_prec_t prec) const;  // n = 1
};

// grow a chart at p: series order K, requested domain radius r
LeafChart leaf_chart(const FoliatedSpace& space, const BallVector& p, long K, const Real& r,
                     mpfr_prec_t prec);

// re-centered chart at the end of a polyline of leaf-coordinate steps
// (n = 1: each path entry is the t-offset to the next center)
LeafChart continue_chart(const FoliatedSpace& space, const LeafChart& chart,
                         const std::vector<Ball>& path, long K, const Real& r, mpfr_prec_t prec);

struct UnlikelyLocus {
  std::vector<RationalPolynomial> generators;
  bool exact = false;
};

enum class LocusMode { Exact1D, Oracle };

// generators whose common zero set contains (exact: equals set-theoretically)
// the unlikely intersection locus Sigma_V
UnlikelyLocus unlikely_locus(const FoliatedSpace& space, const std::vector<RationalPolynomial>& V,
                             LocusMode mode, long multiplicityBound = -1);

struct Multiplicity {
  bool infinite = false;
  long value = 0;
};

// multiplicity of p as an isolated common zero of V restricted to the leaf;
// exact rational points only (n = 1 via Taylor order of P on the leaf,
// n = 2 via an argument-principle / elimination oracle)
Multiplicity multiplicity_at(const FoliatedSpace& space, const std::vector<RationalPolynomial>& V,
                             const std::vector<Rational>& p, long orderCap, mpfr_prec_t prec);

// linear sub-foliation space A(n,k) x M with fields alpha_i . xi
FoliatedSpace derived_foliation_Lk(const FoliatedSpace& space, long k);
// reparametrization space C^n_s x M with fields d/ds_i + (dPhi/ds_i) . xi;
// Phi: polynomial self-map of C^n in variables s_1..s_n
FoliatedSpace derived_foliation_PD(const FoliatedSpace& space,
                                   const std::vector<RationalPolynomial>& Phi);

// rational point of height <= d in the unit box, certified outside Z
// (coordinate sweep; throws DegreeBoundViolated on candidate exhaustion)
std::vector<Rational> point_outside_variety(const std::vector<RationalPolynomial>& Z,
                                            size_t ambientDim, long degreeBound);

// m random low-height combinations of V's equations forming a complete
// intersection containing V; verified (containment symbolic, codimension
// via exact Jacobian rank at sample points), reseeded on failure
std::vector<RationalPolynomial> complete_intersection_choose(
    const FoliatedSpace& space, const std::vector<RationalPolynomial>& V, long targetCodim,
    std::uint64_t seed, int maxRetries = 8);

}  // namespace folia
