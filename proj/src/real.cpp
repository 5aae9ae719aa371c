#include "folia/real.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace folia {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.get_mpq_t() == nullptr) throw std::invalid_argument("mpq alloc");
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  std::string num = q.get_num().get_str();
  if (q.get_den() == 1) return num;
  return num + "/" + q.get_den().get_str();
}

double rational_log_height(const Rational& q) {
  if (q == 0) return 0.0;
  Int n = abs(q.get_num());
  Int d = q.get_den();
  Int m = (n > d) ? n : d;
  // log via mpz size: exact enough for complexity bookkeeping
  signed long e;
  double x = mpz_get_d_2exp(&e, m.get_mpz_t());
  double lg = std::log(x) + static_cast<double>(e) * 0.6931471805599453;
  return lg < 0 ? 0.0 : lg;
}

std::string Real::str() const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  // enough digits to round-trip: prec * log10(2) + 2
  size_t digits = static_cast<size_t>(mpfr_get_prec(v_) * 0.30103) + 3;
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = mant[0] == '-';
  std::string digits_only = neg ? mant.substr(1) : mant;
  // strip trailing zeros for compactness
  size_t last = digits_only.find_last_not_of('0');
  if (last != std::string::npos) digits_only = digits_only.substr(0, last + 1);
  if (digits_only.empty()) digits_only = "0";
  std::string out = (neg ? "-0." : "0.") + digits_only + "e" + std::to_string(e);
  return out;
}

}  // namespace folia
