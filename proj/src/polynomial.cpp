#include "folia/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

#include "folia/error.hpp"

namespace folia {

namespace {

Exponents zeros(size_t n) { return Exponents(n, 0); }

// (total degree, lex) order for the division algorithm
bool deg_lex_less(const Exponents& a, const Exponents& b) {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

void RationalPolynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

RationalPolynomial RationalPolynomial::constant(const Rational& c, std::vector<std::string> vars) {
  RationalPolynomial p(std::move(vars));
  if (c != 0) p.terms_[zeros(p.vars_.size())] = c;
  return p;
}

RationalPolynomial RationalPolynomial::variable(size_t i, std::vector<std::string> vars) {
  RationalPolynomial p(std::move(vars));
  if (i >= p.vars_.size()) throw Error(err::InputError, "variable index out of range");
  Exponents e = zeros(p.vars_.size());
  e[i] = 1;
  p.terms_[e] = 1;
  return p;
}

RationalPolynomial RationalPolynomial::univariate(const std::vector<Rational>& coeffs,
                                                  const std::string& name) {
  RationalPolynomial p({name});
  for (size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) p.terms_[{static_cast<unsigned>(k)}] = coeffs[k];
  return p;
}

bool RationalPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == zeros(vars_.size()));
}

Rational RationalPolynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  auto it = terms_.find(zeros(vars_.size()));
  if (it == terms_.end() || terms_.size() > 1)
    throw Error(err::InputError, "constant_value of non-constant polynomial");
  return it->second;
}

void RationalPolynomial::set_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw Error(err::InputError, "exponent arity mismatch");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

Rational RationalPolynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

long RationalPolynomial::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<long>(std::accumulate(e.begin(), e.end(), 0u)));
  return d;
}

long RationalPolynomial::degree_in(size_t var) const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
  return d;
}

Rational RationalPolynomial::l1_norm() const {
  Rational s(0);
  for (const auto& [e, c] : terms_) s += abs(c);
  return s;
}

Rational RationalPolynomial::coeff_max_abs() const {
  Rational m(0);
  for (const auto& [e, c] : terms_) m = std::max(m, Rational(abs(c)));
  return m;
}

std::pair<RationalPolynomial, Rational> RationalPolynomial::integerize() const {
  if (terms_.empty()) return {*this, Rational(1)};
  Int den_lcm(1), num_gcd(0);
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rational scale(num_gcd, den_lcm);
  scale.canonicalize();
  RationalPolynomial out(vars_);
  for (const auto& [e, c] : terms_) out.terms_[e] = c / scale;
  return {out, scale};
}

RationalPolynomial RationalPolynomial::derivative(size_t var) const {
  RationalPolynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents e2 = e;
    e2[var] -= 1;
    out.terms_[e2] += c * Rational(e[var]);
  }
  out.prune();
  return out;
}

Rational RationalPolynomial::eval(const std::vector<Rational>& x) const {
  if (x.size() != vars_.size()) throw Error(err::InputError, "eval arity mismatch");
  Rational s(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Ball RationalPolynomial::eval(const BallVector& x, mpfr_prec_t prec) const {
  if (x.size() != vars_.size()) throw Error(err::InputError, "eval arity mismatch");
  // cache powers of each variable up to its max exponent
  std::vector<std::vector<Ball>> pows(x.size());
  std::vector<unsigned> maxe(x.size(), 0);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i) maxe[i] = std::max(maxe[i], e[i]);
  for (size_t i = 0; i < x.size(); ++i) {
    pows[i].reserve(maxe[i] + 1);
    pows[i].push_back(Ball::exact(Rational(1), Rational(0), prec));
    for (unsigned k = 1; k <= maxe[i]; ++k) pows[i].push_back(mul(pows[i].back(), x[i]));
  }
  Ball s = Ball::exact(Rational(0), Rational(0), prec);
  for (const auto& [e, c] : terms_) {
    Ball t = Ball::exact(c, Rational(0), prec);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = mul(t, pows[i][e[i]]);
    s = add(s, t);
  }
  return s;
}

RationalPolynomial RationalPolynomial::substitute(size_t var, const Rational& value) const {
  RationalPolynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (unsigned k = 0; k < e[var]; ++k) t *= value;
    Exponents e2 = e;
    e2[var] = 0;
    out.terms_[e2] += t;
  }
  out.prune();
  return out;
}

RationalPolynomial RationalPolynomial::substitute(size_t var, const RationalPolynomial& value) const {
  std::vector<RationalPolynomial> maps;
  maps.reserve(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i)
    maps.push_back(i == var ? value : variable(i, vars_));
  return compose(maps);
}

RationalPolynomial RationalPolynomial::compose(const std::vector<RationalPolynomial>& maps) const {
  if (maps.size() != vars_.size()) throw Error(err::InputError, "compose arity mismatch");
  std::vector<std::string> tv = maps.empty() ? vars_ : maps[0].vars();
  RationalPolynomial out(tv);
  for (const auto& [e, c] : terms_) {
    RationalPolynomial t = constant(c, tv);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * maps[i].pow(e[i]);
    out = out + t;
  }
  return out;
}

RationalPolynomial RationalPolynomial::lift_to(const std::vector<std::string>& newVars) const {
  std::vector<size_t> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(newVars.begin(), newVars.end(), vars_[i]);
    if (it == newVars.end()) throw Error(err::InputError, "lift_to: missing variable " + vars_[i]);
    pos[i] = static_cast<size_t>(it - newVars.begin());
  }
  RationalPolynomial out(newVars);
  for (const auto& [e, c] : terms_) {
    Exponents e2 = zeros(newVars.size());
    for (size_t i = 0; i < e.size(); ++i) e2[pos[i]] = e[i];
    out.terms_[e2] += c;
  }
  out.prune();
  return out;
}

std::vector<RationalPolynomial> RationalPolynomial::coeffs_in(size_t var) const {
  long d = degree_in(var);
  std::vector<RationalPolynomial> cs(static_cast<size_t>(std::max(0L, d + 1)),
                                     RationalPolynomial(vars_));
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    unsigned k = e2[var];
    e2[var] = 0;
    cs[k].terms_[e2] += c;
  }
  for (auto& p : cs) p.prune();
  return cs;
}

RationalPolynomial RationalPolynomial::from_coeffs_in(size_t var,
                                                      const std::vector<RationalPolynomial>& cs,
                                                      const std::vector<std::string>& vars) {
  RationalPolynomial out(vars);
  for (size_t k = 0; k < cs.size(); ++k) {
    for (const auto& [e, c] : cs[k].terms()) {
      Exponents e2 = e;
      e2[var] += static_cast<unsigned>(k);
      out.terms_[e2] += c;
    }
  }
  out.prune();
  return out;
}

std::string RationalPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print high-degree terms last (map order), deterministic
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool is_const_term = std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
    if (a != 1 || is_const_term) os << rational_to_string(a);
    bool printed = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed || a != 1 || is_const_term) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.vars_ != b.vars_) throw Error(err::InputError, "polynomial variable lists differ");
  RationalPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.terms_[e] += c;
  out.prune();
  return out;
}

RationalPolynomial operator-(const RationalPolynomial& a) {
  RationalPolynomial out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a + (-b);
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.vars_ != b.vars_) throw Error(err::InputError, "polynomial variable lists differ");
  RationalPolynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.terms_[e] += ca * cb;
    }
  }
  out.prune();
  return out;
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a) {
  RationalPolynomial out(a.vars_);
  if (c == 0) return out;
  out = a;
  for (auto& [e, k] : out.terms_) k *= c;
  return out;
}

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

RationalPolynomial RationalPolynomial::pow(unsigned e) const {
  RationalPolynomial acc = constant(Rational(1), vars_);
  RationalPolynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

std::optional<RationalPolynomial> try_divide(const RationalPolynomial& p,
                                             const RationalPolynomial& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return RationalPolynomial(p.vars());
  if (p.vars() != q.vars()) return std::nullopt;
  // leading term of q under deg-lex
  auto lead = [](const RationalPolynomial& f) {
    auto best = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
      if (deg_lex_less(best->first, it->first)) best = it;
    return best;
  };
  auto ql = lead(q);
  RationalPolynomial r = p, quot(p.vars());
  size_t guard = 0, cap = 4 * (p.terms().size() + 1) * (q.terms().size() + 1) + 10000;
  while (!r.is_zero()) {
    if (++guard > cap) return std::nullopt;
    auto rl = lead(r);
    Exponents d(rl->first.size());
    for (size_t i = 0; i < d.size(); ++i) {
      if (rl->first[i] < ql->first[i]) return std::nullopt;  // not divisible
      d[i] = rl->first[i] - ql->first[i];
    }
    Rational c = rl->second / ql->second;
    RationalPolynomial m(p.vars());
    m.set_term(d, c);
    quot = quot + m;
    r = r - m * q;
  }
  return quot;
}

RationalPolynomial gcd_univariate(const RationalPolynomial& f, const RationalPolynomial& g,
                                  size_t var) {
  auto monic = [&](RationalPolynomial h) {
    long d = h.degree_in(var);
    if (d < 0) return h;
    Exponents e(h.vars().size(), 0);
    e[var] = static_cast<unsigned>(d);
    Rational lc = h.coeff(e);
    return Rational(1) / lc * h;
  };
  RationalPolynomial a = f, b = g;
  // polynomial remainder in the single variable var
  auto rem = [&](RationalPolynomial x, const RationalPolynomial& y) {
    long dy = y.degree_in(var);
    Exponents ely(y.vars().size(), 0);
    ely[var] = static_cast<unsigned>(dy);
    Rational lcy = y.coeff(ely);
    while (!x.is_zero() && x.degree_in(var) >= dy) {
      long dx = x.degree_in(var);
      Exponents elx(x.vars().size(), 0);
      elx[var] = static_cast<unsigned>(dx);
      Rational lcx = x.coeff(elx);
      RationalPolynomial m(x.vars());
      Exponents em(x.vars().size(), 0);
      em[var] = static_cast<unsigned>(dx - dy);
      m.set_term(em, lcx / lcy);
      x = x - m * y;
    }
    return x;
  };
  while (!b.is_zero()) {
    RationalPolynomial r = rem(a, b);
    a = b;
    b = r;
  }
  return monic(a);
}

namespace {

// content of f as a univariate polynomial in `var`: gcd of its
// coefficients, which must themselves be univariate (in one other var)
RationalPolynomial content_in(const RationalPolynomial& f, size_t var) {
  auto cs = f.coeffs_in(var);
  // find the other active variable, if any
  long other = -1;
  for (const auto& c : cs)
    for (size_t i = 0; i < f.vars().size(); ++i)
      if (i != var && c.degree_in(i) > 0) other = static_cast<long>(i);
  RationalPolynomial g(f.vars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    if (g.is_zero())
      g = c;
    else if (other >= 0)
      g = gcd_univariate(g, c, static_cast<size_t>(other));
    else
      g = RationalPolynomial::constant(Rational(1), f.vars());
    if (g.is_constant() && !g.is_zero()) return RationalPolynomial::constant(Rational(1), f.vars());
  }
  if (g.is_zero()) return g;
  if (other < 0) return RationalPolynomial::constant(Rational(1), f.vars());
  return g;
}

}  // namespace

RationalPolynomial gcd_bivariate(const RationalPolynomial& f, const RationalPolynomial& g,
                                 size_t var) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree_in(var) <= 0 && g.degree_in(var) <= 0) {
    // both constant in var: gcd over the other variable
    long other = -1;
    for (size_t i = 0; i < f.vars().size(); ++i)
      if (i != var && (f.degree_in(i) > 0 || g.degree_in(i) > 0)) other = static_cast<long>(i);
    if (other < 0) return RationalPolynomial::constant(Rational(1), f.vars());
    return gcd_univariate(f, g, static_cast<size_t>(other));
  }
  // primitive PRS in var
  RationalPolynomial cf = content_in(f, var), cg = content_in(g, var);
  RationalPolynomial cont = gcd_bivariate(cf, cg, var == 0 ? (f.vars().size() > 1 ? 1 : 0) : 0);
  auto pp = [&](const RationalPolynomial& h, const RationalPolynomial& c) {
    if (c.is_constant()) return h;
    auto q = try_divide(h, c);
    if (!q) throw Error(err::InputError, "content division failed");
    return *q;
  };
  RationalPolynomial a = pp(f, cf), b = pp(g, cg);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero() && b.degree_in(var) >= 0) {
    if (b.degree_in(var) == 0) {
      // nonzero constant in var: primitive gcd is trivial in var
      b = RationalPolynomial(f.vars());
      a = RationalPolynomial::constant(Rational(1), f.vars());
      break;
    }
    // pseudo-remainder of a by b in var
    long da = a.degree_in(var), db = b.degree_in(var);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    auto bc = b.coeffs_in(var);
    RationalPolynomial lcb = bc.back();
    RationalPolynomial r = a;
    for (long k = da; k >= db && !r.is_zero(); k = r.degree_in(var)) {
      auto rc = r.coeffs_in(var);
      if (static_cast<long>(rc.size()) - 1 < db) break;
      RationalPolynomial lcr = rc.back();
      // r = lcb * r - lcr * x^(k-db) * b
      RationalPolynomial shift(f.vars());
      Exponents e(f.vars().size(), 0);
      e[var] = static_cast<unsigned>(k - db);
      shift.set_term(e, Rational(1));
      r = lcb * r - lcr * shift * b;
    }
    a = b;
    b = r.is_zero() ? r : [&] {
      RationalPolynomial c = content_in(r, var);
      return pp(r, c);
    }();
  }
  RationalPolynomial result = cont * a;
  // normalize sign/scale: make content 1 with positive lead
  auto [ip, sc] = result.integerize();
  return ip;
}

RationalPolynomial resultant(const RationalPolynomial& f, const RationalPolynomial& g, size_t var) {
  long m = f.degree_in(var), n = g.degree_in(var);
  if (m < 0 || n < 0) return RationalPolynomial(f.vars());  // resultant with 0
  if (m == 0 && n == 0) return RationalPolynomial::constant(Rational(1), f.vars());
  auto fc = f.coeffs_in(var), gc = g.coeffs_in(var);
  if (m == 0) return fc[0].pow(static_cast<unsigned>(n));
  if (n == 0) return gc[0].pow(static_cast<unsigned>(m));
  size_t N = static_cast<size_t>(m + n);
  RationalPolynomial zero(f.vars());
  std::vector<std::vector<RationalPolynomial>> S(N, std::vector<RationalPolynomial>(N, zero));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) S[i][i + j] = fc[static_cast<size_t>(m - j)];
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) S[n + i][i + j] = gc[static_cast<size_t>(n - j)];
  // Bareiss fraction-free elimination (divisions are exact over Q[vars])
  RationalPolynomial prev = RationalPolynomial::constant(Rational(1), f.vars());
  int sign = 1;
  for (size_t k = 0; k + 1 < N; ++k) {
    if (S[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < N && S[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == N) return RationalPolynomial(f.vars());  // singular: resultant 0
      std::swap(S[k], S[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < N; ++i) {
      for (size_t j = k + 1; j < N; ++j) {
        RationalPolynomial numtor = S[k][k] * S[i][j] - S[i][k] * S[k][j];
        auto q = try_divide(numtor, prev);
        if (!q) throw Error(err::InputError, "Bareiss exact division failed");
        S[i][j] = *q;
      }
      S[i][k] = zero;
    }
    prev = S[k][k];
  }
  RationalPolynomial det = S[N - 1][N - 1];
  return sign < 0 ? -det : det;
}

RationalPolynomial squarefree_part(const RationalPolynomial& f, size_t var) {
  if (f.degree_in(var) <= 0) return f;
  RationalPolynomial d = f.derivative(var);
  bool onlyvar = true;
  for (size_t i = 0; i < f.vars().size(); ++i)
    if (i != var && f.degree_in(i) > 0) onlyvar = false;
  RationalPolynomial g = onlyvar ? gcd_univariate(f, d, var) : gcd_bivariate(f, d, var);
  auto q = try_divide(f, g);
  if (!q) {
    // gcd normalization may differ by a unit; retry after integerizing
    auto [gi, sc] = g.integerize();
    q = try_divide(f, gi);
    if (!q) throw Error(err::InputError, "squarefree division failed");
  }
  return *q;
}

std::vector<std::pair<Rational, int>> rational_roots(const RationalPolynomial& f, size_t var) {
  std::vector<std::pair<Rational, int>> out;
  if (f.degree_in(var) <= 0) return out;
  auto [fi, sc] = f.integerize();
  auto cs = fi.coeffs_in(var);
  // strip powers of x dividing f: root 0
  size_t low = 0;
  while (low < cs.size() && cs[low].is_zero()) ++low;
  if (low > 0) out.push_back({Rational(0), static_cast<int>(low)});
  if (low >= cs.size() - 1) return out;
  for (auto& c : cs)
    if (!c.is_constant()) throw Error(err::InputError, "rational_roots needs univariate input");
  Int a0 = cs[low].constant_value().get_num();
  Int al = cs.back().constant_value().get_num();
  if (a0 == 0) a0 = 1;
  auto divisors = [](Int n) {
    std::vector<Int> ds;
    n = abs(n);
    for (Int d(1); d * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    std::sort(ds.begin(), ds.end());
    return ds;
  };
  std::set<Rational> candidates;
  for (const Int& p : divisors(a0))
    for (const Int& q : divisors(al)) {
      Rational r(p, q);
      r.canonicalize();
      candidates.insert(r);
      candidates.insert(-r);
    }
  for (const Rational& r : candidates) {
    RationalPolynomial h = fi;
    int mult = 0;
    while (h.degree_in(var) >= 1 && h.substitute(var, r).is_zero()) {
      // deflate by (x - r)
      RationalPolynomial lin(f.vars());
      Exponents e(f.vars().size(), 0);
      e[var] = 1;
      lin.set_term(e, Rational(1));
      lin.set_term(Exponents(f.vars().size(), 0), -r);
      auto q = try_divide(h, lin);
      if (!q) break;
      h = *q;
      ++mult;
    }
    if (mult > 0) out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---- RationalFunction ------------------------------------------------------

RationalFunction::RationalFunction(RationalPolynomial num, RationalPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(err::InputError, "zero denominator");
  reduce();
}

RationalFunction::RationalFunction(RationalPolynomial num)
    : num_(std::move(num)),
      den_(RationalPolynomial::constant(Rational(1), num_.vars())) {}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = RationalPolynomial::constant(Rational(1), den_.vars());
    return;
  }
  if (den_.is_constant()) {
    num_ = Rational(1) / den_.constant_value() * num_;
    den_ = RationalPolynomial::constant(Rational(1), den_.vars());
    return;
  }
  // gcd reduction for up to two active variables; content-only otherwise
  std::vector<size_t> active;
  for (size_t i = 0; i < num_.vars().size(); ++i)
    if (num_.degree_in(i) > 0 || den_.degree_in(i) > 0) active.push_back(i);
  if (active.size() <= 2) {
    RationalPolynomial g = active.size() == 1
                               ? gcd_univariate(num_, den_, active[0])
                               : gcd_bivariate(num_, den_, active[0]);
    if (!g.is_constant()) {
      auto qn = try_divide(num_, g), qd = try_divide(den_, g);
      if (qn && qd) {
        num_ = *qn;
        den_ = *qd;
      }
    }
  }
  auto [di, ds] = den_.integerize();
  num_ = Rational(1) / ds * num_;
  den_ = di;
}

RationalFunction RationalFunction::derivative(size_t var) const {
  // (n/d)' = (n' d - n d') / d^2
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

Ball RationalFunction::eval(const BallVector& x, mpfr_prec_t prec) const {
  Ball d = den_.eval(x, prec);
  return div(num_.eval(x, prec), d);
}

Rational RationalFunction::eval(const std::vector<Rational>& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw Error(err::DivisorContainsZero, "rational function pole");
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::substitute(size_t var, const Rational& value) const {
  return RationalFunction(num_.substitute(var, value), den_.substitute(var, value));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw Error(err::DivisorContainsZero, "division by zero function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}
RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}
bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace folia
