#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folia/ball.hpp"
#include "folia/real.hpp"

namespace folia {

using Exponents = std::vector<unsigned>;

// Exact sparse multivariate polynomial over Q.  Terms are kept in a
// canonical (lexicographic exponent) order with no zero coefficients,
// so equality is structural and printing is deterministic.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static RationalPolynomial constant(const Rational& c, std::vector<std::string> vars);
  static RationalPolynomial variable(size_t i, std::vector<std::string> vars);
  // univariate convenience: coefficients low -> high in the single var `name`
  static RationalPolynomial univariate(const std::vector<Rational>& coeffs,
                                       const std::string& name = "x");

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  size_t nvars() const { return vars_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // 0 if zero polynomial

  void set_term(const Exponents& e, const Rational& c);
  Rational coeff(const Exponents& e) const;

  long total_degree() const;       // -1 for the zero polynomial
  long degree_in(size_t var) const;
  Rational l1_norm() const;        // sum |coef|
  Rational coeff_max_abs() const;

  // clear denominators and content: returns integer polynomial with
  // content 1 (positive leading coefficient under term order) and the
  // positive rational s with  this = s * result
  std::pair<RationalPolynomial, Rational> integerize() const;

  RationalPolynomial derivative(size_t var) const;

  Rational eval(const std::vector<Rational>& x) const;
  Ball eval(const BallVector& x, mpfr_prec_t prec) const;
  // substitute variable -> rational, producing a polynomial in the same var list
  RationalPolynomial substitute(size_t var, const Rational& value) const;
  // substitute variable -> polynomial over the same variable list
  RationalPolynomial substitute(size_t var, const RationalPolynomial& value) const;
  // full composition: x_i -> maps[i], all over the target variable list
  RationalPolynomial compose(const std::vector<RationalPolynomial>& maps) const;
  // reinterpret over a larger/reordered variable list (by name)
  RationalPolynomial lift_to(const std::vector<std::string>& newVars) const;

  // univariate view in `var`: coefficients (polys in the other vars), low -> high
  std::vector<RationalPolynomial> coeffs_in(size_t var) const;
  static RationalPolynomial from_coeffs_in(size_t var, const std::vector<RationalPolynomial>& cs,
                                           const std::vector<std::string>& vars);

  std::string str() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a);
  friend RationalPolynomial operator-(const RationalPolynomial& a);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);
  RationalPolynomial pow(unsigned e) const;

 private:
  void prune();
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

// exact division; nullopt when q does not divide p
std::optional<RationalPolynomial> try_divide(const RationalPolynomial& p,
                                             const RationalPolynomial& q);

// gcd of univariate polynomials over Q in variable `var` (monic result);
// other variables must not occur
RationalPolynomial gcd_univariate(const RationalPolynomial& f, const RationalPolynomial& g,
                                  size_t var);

// gcd for polynomials in at most two distinct variables (primitive PRS)
RationalPolynomial gcd_bivariate(const RationalPolynomial& f, const RationalPolynomial& g,
                                 size_t var);

// resultant with respect to `var`: Sylvester determinant by fraction-free
// elimination over the polynomial ring
RationalPolynomial resultant(const RationalPolynomial& f, const RationalPolynomial& g, size_t var);

// f / gcd(f, f') in `var`
RationalPolynomial squarefree_part(const RationalPolynomial& f, size_t var);

// all rational roots (with multiplicity) of a univariate polynomial over Q
std::vector<std::pair<Rational, int>> rational_roots(const RationalPolynomial& f, size_t var);

// Rational function p/q, reduced when it lives in <= 2 distinct variables.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(RationalPolynomial num, RationalPolynomial den);
  explicit RationalFunction(RationalPolynomial num);

  const RationalPolynomial& num() const { return num_; }
  const RationalPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction derivative(size_t var) const;
  Ball eval(const BallVector& x, mpfr_prec_t prec) const;
  Rational eval(const std::vector<Rational>& x) const;
  RationalFunction substitute(size_t var, const Rational& value) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string str() const;

 private:
  void reduce();
  RationalPolynomial num_, den_;
};

}  // namespace folia
