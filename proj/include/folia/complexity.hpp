#pragma once

#include <vector>

#include "folia/polynomial.hpp"

namespace folia {

// delta-complexity: max degree, log of the max integerized coefficient,
// and the degree of the field of definition (1 = Q throughout).
struct Complexity {
  long degree = 0;
  double logHeight = 0.0;
  long fieldDegree = 1;

  static Complexity join(const Complexity& a, const Complexity& b) {
    return {std::max(a.degree, b.degree), std::max(a.logHeight, b.logHeight),
            std::max(a.fieldDegree, b.fieldDegree)};
  }
};

// logHeight convention: clear denominators to integer coefficients with
// content 1, then log of the max |coefficient|.
Complexity delta_complexity(const RationalPolynomial& p);
Complexity delta_complexity(const std::vector<RationalPolynomial>& ps);
Complexity delta_complexity(const RationalFunction& f);
Complexity delta_complexity(const std::vector<RationalFunction>& fs);

}  // namespace folia
