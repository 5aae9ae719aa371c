#pragma once

#include <vector>

#include "folia/ball.hpp"

namespace folia {

using BallMatrix = std::vector<std::vector<Ball>>;

BallVector mat_apply(const BallMatrix& U, const BallVector& x);
BallMatrix mat_adjoint(const BallMatrix& U);
// residual |U U* - I| entrywise upper bound
Real unitary_defect(const BallMatrix& U);

// Axis-aligned polydisc in a unitary frame:  { x : |(U (x - center))_i| <= radii_i }.
struct PolydiscRegion {
  BallVector center;
  std::vector<Real> radii;
  BallMatrix frame;  // unitary within entry radii; identity when empty

  size_t dim() const { return center.size(); }
  // A^delta: each radius replaced by radius/delta (delta >= 1 shrinks)
  PolydiscRegion shrink(const Rational& delta) const;
  // unitary coordinates of a point relative to the center
  BallVector to_frame(const BallVector& x) const;
  // certified membership of an enclosure in the delta-shrunk polydisc
  bool contains(const BallVector& x, const Rational& delta = Rational(1)) const;
  // point of the polydisc from unitary coordinates
  BallVector from_frame(const BallVector& u) const;
};

}  // namespace folia
