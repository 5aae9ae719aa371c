#include "folia/complexity.hpp"

#include <cmath>

namespace folia {

namespace {

double log_int(const Int& z) {
  if (z == 0) return 0.0;
  Int a = abs(z);
  signed long e;
  double x = mpz_get_d_2exp(&e, a.get_mpz_t());
  double lg = std::log(x) + static_cast<double>(e) * 0.6931471805599453;
  return lg < 0 ? 0.0 : lg;
}

}  // namespace

Complexity delta_complexity(const RationalPolynomial& p) {
  Complexity c;
  c.degree = std::max(0L, p.total_degree());
  auto [ip, s] = p.integerize();
  Int m(0);
  for (const auto& [e, q] : ip.terms()) {
    Int a = abs(q.get_num());
    if (a > m) m = a;
  }
  c.logHeight = log_int(m);
  return c;
}

Complexity delta_complexity(const std::vector<RationalPolynomial>& ps) {
  Complexity c;
  for (const auto& p : ps) c = Complexity::join(c, delta_complexity(p));
  return c;
}

Complexity delta_complexity(const RationalFunction& f) {
  return Complexity::join(delta_complexity(f.num()), delta_complexity(f.den()));
}

Complexity delta_complexity(const std::vector<RationalFunction>& fs) {
  Complexity c;
  for (const auto& f : fs) c = Complexity::join(c, delta_complexity(f));
  return c;
}

}  // namespace folia
