#include "folia/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "folia/error.hpp"
#include "folia/rng.hpp"
#include "folia/rootsolve.hpp"

namespace folia {

// ---- FoliatedSpace ---------------------------------------------------------

FoliatedSpace::FoliatedSpace(std::vector<std::string> coords,
                             std::vector<RationalPolynomial> varietyEqs,
                             std::vector<VectorField> fields, long baseFieldDegree)
    : coords_(std::move(coords)),
      variety_(std::move(varietyEqs)),
      fields_(std::move(fields)),
      baseFieldDegree_(baseFieldDegree) {
  for (const auto& f : fields_)
    if (f.size() != coords_.size())
      throw Error(err::InputError, "field component count != ambient dimension");
  if (static_cast<long>(fields_.size()) > ambient_dim())
    throw Error(err::InputError, "more fields than ambient dimensions");
  // pairwise commutativity: [xi_i, xi_j](x_k) must vanish identically
  for (size_t i = 0; i < fields_.size(); ++i) {
    for (size_t j = i + 1; j < fields_.size(); ++j) {
      for (size_t k = 0; k < coords_.size(); ++k) {
        RationalFunction a = xi_apply(i, fields_[j][k]);
        RationalFunction b = xi_apply(j, fields_[i][k]);
        if (!(a - b).num().is_zero())
          throw Error(err::VerificationFailed,
                      "fields " + std::to_string(i) + "," + std::to_string(j) +
                          " do not commute (coordinate " + coords_[k] + ")");
      }
    }
  }
}

RationalFunction FoliatedSpace::xi_apply(size_t i, const RationalPolynomial& P) const {
  return xi_apply(i, RationalFunction(P));
}

RationalFunction FoliatedSpace::xi_apply(size_t i, const RationalFunction& F) const {
  if (i >= fields_.size()) throw Error(err::InputError, "field index out of range");
  RationalFunction acc{RationalPolynomial(coords_)};
  for (size_t j = 0; j < coords_.size(); ++j) {
    if (fields_[i][j].is_zero()) continue;
    acc = acc + fields_[i][j] * F.derivative(j);
  }
  return acc;
}

bool FoliatedSpace::fields_constant() const {
  for (const auto& f : fields_)
    for (const auto& c : f)
      if (!(c.is_polynomial() && c.num().is_constant())) return false;
  return true;
}

void FoliatedSpace::require_off_singular(const BallVector& p, mpfr_prec_t prec) const {
  for (const auto& f : fields_)
    for (const auto& c : f) {
      Ball d = c.den().eval(p, prec);
      if (!d.excludes_zero())
        throw Error(err::TooCloseToSingularity, "field denominator not certified nonzero");
    }
}

Complexity FoliatedSpace::delta() const {
  Complexity c = delta_complexity(variety_);
  for (const auto& f : fields_) c = Complexity::join(c, delta_complexity(f));
  c.fieldDegree = std::max(c.fieldDegree, baseFieldDegree_);
  return c;
}

// ---- truncated series engine ----------------------------------------------

namespace {

// dense truncated power series with Ball coefficients
struct BSer {
  std::vector<Ball> c;
};

BSer bser_const(const Ball& v, size_t len, mpfr_prec_t prec) {
  BSer s;
  s.c.assign(len, Ball::exact(Rational(0), Rational(0), prec));
  s.c[0] = v;
  return s;
}

BSer bser_add(const BSer& a, const BSer& b) {
  BSer s = a;
  for (size_t i = 0; i < s.c.size(); ++i) s.c[i] = add(s.c[i], b.c[i]);
  return s;
}

BSer bser_mul(const BSer& a, const BSer& b, mpfr_prec_t prec) {
  size_t len = a.c.size();
  BSer s;
  s.c.assign(len, Ball::exact(Rational(0), Rational(0), prec));
  for (size_t i = 0; i < len; ++i) {
    if (a.c[i].abs_upper().is_zero()) continue;
    for (size_t j = 0; i + j < len; ++j) s.c[i + j] = add(s.c[i + j], mul(a.c[i], b.c[j]));
  }
  return s;
}

BSer bser_inv(const BSer& a, mpfr_prec_t prec) {
  size_t len = a.c.size();
  BSer s;
  s.c.assign(len, Ball::exact(Rational(0), Rational(0), prec));
  Ball inv0 = inv(a.c[0]);
  s.c[0] = inv0;
  for (size_t k = 1; k < len; ++k) {
    Ball acc = Ball::exact(Rational(0), Rational(0), prec);
    for (size_t i = 1; i <= k; ++i) acc = add(acc, mul(a.c[i], s.c[k - i]));
    s.c[k] = neg(mul(acc, inv0));
  }
  return s;
}

BSer bser_poly(const RationalPolynomial& P, const std::vector<BSer>& x, mpfr_prec_t prec,
               size_t len) {
  BSer s = bser_const(Ball::exact(Rational(0), Rational(0), prec), len, prec);
  std::vector<std::vector<BSer>> pows(x.size());
  std::vector<unsigned> maxe(x.size(), 0);
  for (const auto& [e, c] : P.terms())
    for (size_t i = 0; i < e.size(); ++i) maxe[i] = std::max(maxe[i], e[i]);
  for (size_t i = 0; i < x.size(); ++i) {
    pows[i].push_back(bser_const(Ball::exact(Rational(1), Rational(0), prec), len, prec));
    for (unsigned k = 1; k <= maxe[i]; ++k) pows[i].push_back(bser_mul(pows[i].back(), x[i], prec));
  }
  for (const auto& [e, c] : P.terms()) {
    BSer t = bser_const(Ball::exact(c, Rational(0), prec), len, prec);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = bser_mul(t, pows[i][e[i]], prec);
    s = bser_add(s, t);
  }
  return s;
}

BSer bser_ratfn(const RationalFunction& F, const std::vector<BSer>& x, mpfr_prec_t prec,
                size_t len) {
  BSer n = bser_poly(F.num(), x, prec, len);
  if (F.is_polynomial()) {
    Rational d = F.den().constant_value();
    if (d != 1)
      for (auto& c : n.c) c = mul_rat(c, Rational(1) / d);
    return n;
  }
  BSer d = bser_poly(F.den(), x, prec, len);
  return bser_mul(n, bser_inv(d, prec), prec);
}

}  // namespace

// ---- leaf charts -----------------------------------------------------------

BallVector LeafChart::eval(const BallVector& leafPoint, mpfr_prec_t prec) const {
  if (static_cast<long>(leafPoint.size()) != leafDim)
    throw Error(err::InputError, "chart eval: wrong leaf dimension");
  BallVector out;
  if (affine) {
    for (size_t j = 0; j < basePoint.size(); ++j) {
      Ball v = basePoint[j].round_to(prec);
      for (size_t i = 0; i < leafPoint.size(); ++i)
        v = add(v, mul_rat(leafPoint[i], affineDirs[i][j]));
      out.push_back(v);
    }
    return out;
  }
  for (size_t j = 0; j < basePoint.size(); ++j) out.push_back(eval_coord(j, leafPoint[0], prec));
  return out;
}

Ball LeafChart::eval_coord(size_t coord, const Ball& t, mpfr_prec_t prec) const {
  if (affine) {
    Ball v = basePoint[coord].round_to(prec);
    v = add(v, mul_rat(t, affineDirs[0][coord]));
    return v;
  }
  if (!(t.abs_upper() <= domainRadius))
    throw Error(err::PathLeavesDomain, "chart evaluation outside certified domain");
  const BallVector& cs = seriesCoeffs[coord];
  Ball acc = cs.back();
  for (size_t k = cs.size() - 1; k-- > 0;) acc = add(mul(acc, t), cs[k]);
  return acc.widened(remainderBound);
}

LeafChart leaf_chart(const FoliatedSpace& space, const BallVector& p, long K, const Real& r,
                     mpfr_prec_t prec) {
  if (static_cast<long>(p.size()) != space.ambient_dim())
    throw Error(err::InputError, "leaf_chart: wrong base point dimension");
  LeafChart chart;
  chart.basePoint = p;
  chart.order = K;
  chart.leafDim = space.leaf_dim();
  chart.domainRadius = r;
  chart.remainderBound = Real::of(0L, kRadPrec);
  if (space.fields_constant()) {
    chart.affine = true;
    for (const auto& f : space.fields()) {
      std::vector<Rational> dir;
      for (const auto& c : f)
        dir.push_back(c.num().is_zero() ? Rational(0) : c.num().constant_value());
      chart.affineDirs.push_back(dir);
    }
    return chart;
  }
  if (space.leaf_dim() != 1)
    throw Error(err::UnsupportedDimension,
                "non-affine charts implemented for one-dimensional foliations");
  space.require_off_singular(p, prec);

  // majorant data: find a polydisc radius rho with certified field bound M
  // and flow time T = rho / M comfortably exceeding the requested radius
  const VectorField& xi = space.fields()[0];
  Real bestT(kRadPrec), bestRho(kRadPrec);
  for (int e = 0; e <= 24; ++e) {
    Real rho = Real::pow2(-e + 2, kRadPrec);  // 4, 2, 1, ...
    BallVector box;
    for (const auto& pj : p) box.push_back(pj.widened(rho));
    Real M(kRadPrec);
    bool ok = true;
    for (const auto& c : xi) {
      try {
        Ball v = c.eval(box, prec);
        M = Real::max(M, v.abs_upper());
      } catch (const Error&) {
        ok = false;
        break;
      }
    }
    if (!ok || M.is_zero()) continue;
    Real T = Real::div(rho, M, kRadPrec, MPFR_RNDD);
    if (T > bestT) {
      bestT = T;
      bestRho = rho;
    }
    if (bestT > Real::mul(r, Real::of(4L, kRadPrec), kRadPrec)) break;
  }
  Real T0 = Real::mul(bestT, Real::of(15L, kRadPrec), kRadPrec, MPFR_RNDD);
  T0 = Real::div(T0, Real::of(16L, kRadPrec), kRadPrec, MPFR_RNDD);
  if (!(T0 > r))
    throw Error(err::TooCloseToSingularity,
                "cannot certify the flow on the requested radius (majorant too small)");

  // Taylor recursion: c_{k+1} = [t^k] xi(x(t)) / (k+1)
  size_t N = p.size();
  size_t len = static_cast<size_t>(K) + 1;
  std::vector<BSer> x(N);
  for (size_t j = 0; j < N; ++j) x[j] = bser_const(p[j].round_to(prec), len, prec);
  for (long k = 0; k < K; ++k) {
    for (size_t j = 0; j < N; ++j) {
      BSer rhs = bser_ratfn(xi[j], x, prec, static_cast<size_t>(k) + 1);
      x[j].c[k + 1] = mul_rat(rhs.c[k], Rational(1, k + 1));
    }
  }
  chart.seriesCoeffs.assign(N, BallVector());
  for (size_t j = 0; j < N; ++j) chart.seriesCoeffs[j] = x[j].c;

  // remainder: |c_k| <= S T0^{-k}; geometric tail for |t| <= r
  Real S(kRadPrec);
  for (const auto& pj : p) S = Real::max(S, pj.abs_upper());
  S = add_up(S, bestRho, kRadPrec);
  Real q = div_up(r, T0, kRadPrec);
  Real qK = Real::pow_si(q, K + 1, kRadPrec, MPFR_RNDU);
  Real denom = sub_down(Real::of(1L, kRadPrec), q, kRadPrec);
  chart.remainderBound = div_up(mul_up(S, qK, kRadPrec), denom, kRadPrec);
  return chart;
}

LeafChart continue_chart(const FoliatedSpace& space, const LeafChart& chart,
                         const std::vector<Ball>& path, long K, const Real& r, mpfr_prec_t prec) {
  LeafChart cur = chart;
  for (const Ball& step : path) {
    if (!(step.abs_upper() <= cur.domainRadius) && !cur.affine)
      throw Error(err::PathLeavesDomain, "continuation step outside chart domain");
    BallVector newBase;
    if (cur.affine) {
      newBase = cur.eval({step}, prec);
    } else {
      for (size_t j = 0; j < cur.basePoint.size(); ++j)
        newBase.push_back(cur.eval_coord(j, step, prec));
    }
    cur = leaf_chart(space, newBase, K, r, prec);
  }
  return cur;
}

// ---- unlikely locus ----------------------------------------------------------

UnlikelyLocus unlikely_locus(const FoliatedSpace& space, const std::vector<RationalPolynomial>& V,
                             LocusMode mode, long multiplicityBound) {
  if (mode == LocusMode::Oracle) return {{}, false};
  if (space.leaf_dim() != 1 || V.size() != 1)
    throw Error(err::UnsupportedDimension, "exact unlikely locus requires n = 1, V a hypersurface");
  const RationalPolynomial& P = V[0];
  long degXi = 0;
  for (const auto& c : space.fields()[0])
    degXi = std::max(degXi, std::max(c.num().total_degree(), c.den().total_degree()));
  long mu = multiplicityBound >= 0 ? multiplicityBound
                                   : std::max(1L, degXi) * std::max(1L, P.total_degree()) + 1;
  std::vector<RationalPolynomial> gens;
  RationalFunction cur{P};
  for (long k = 0; k <= mu; ++k) {
    auto [ip, sc] = cur.num().integerize();
    if (!ip.is_zero() && ip.is_constant()) {
      // some xi-derivative is a nonzero constant: the locus is empty
      return {{}, true};
    }
    if (!ip.is_zero()) gens.push_back(ip);
    cur = space.xi_apply(0, cur);
  }
  std::vector<RationalPolynomial> uniq;
  for (auto& g : gens) {
    bool seen = false;
    for (auto& u : uniq)
      if (u == g) seen = true;
    if (!seen) uniq.push_back(g);
  }
  return {uniq, true};
}

// ---- multiplicity ------------------------------------------------------------

namespace {

// exact rational truncated series for the n = 1 multiplicity computation
struct QSer {
  std::vector<Rational> c;
};

QSer qser_const(const Rational& v, size_t len) {
  QSer s;
  s.c.assign(len, Rational(0));
  s.c[0] = v;
  return s;
}
QSer qser_add(const QSer& a, const QSer& b) {
  QSer s = a;
  for (size_t i = 0; i < s.c.size(); ++i) s.c[i] += b.c[i];
  return s;
}
QSer qser_mul(const QSer& a, const QSer& b) {
  size_t len = a.c.size();
  QSer s;
  s.c.assign(len, Rational(0));
  for (size_t i = 0; i < len; ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; i + j < len; ++j) s.c[i + j] += a.c[i] * b.c[j];
  }
  return s;
}
QSer qser_inv(const QSer& a) {
  size_t len = a.c.size();
  if (a.c[0] == 0) throw Error(err::TooCloseToSingularity, "series inversion at pole");
  QSer s;
  s.c.assign(len, Rational(0));
  Rational i0 = Rational(1) / a.c[0];
  s.c[0] = i0;
  for (size_t k = 1; k < len; ++k) {
    Rational acc(0);
    for (size_t i = 1; i <= k; ++i) acc += a.c[i] * s.c[k - i];
    s.c[k] = -acc * i0;
  }
  return s;
}
QSer qser_poly(const RationalPolynomial& P, const std::vector<QSer>& x, size_t len) {
  QSer s = qser_const(Rational(0), len);
  std::vector<std::vector<QSer>> pows(x.size());
  std::vector<unsigned> maxe(x.size(), 0);
  for (const auto& [e, c] : P.terms())
    for (size_t i = 0; i < e.size(); ++i) maxe[i] = std::max(maxe[i], e[i]);
  for (size_t i = 0; i < x.size(); ++i) {
    pows[i].push_back(qser_const(Rational(1), len));
    for (unsigned k = 1; k <= maxe[i]; ++k) pows[i].push_back(qser_mul(pows[i].back(), x[i]));
  }
  for (const auto& [e, c] : P.terms()) {
    QSer t = qser_const(c, len);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = qser_mul(t, pows[i][e[i]]);
    s = qser_add(s, t);
  }
  return s;
}
QSer qser_ratfn(const RationalFunction& F, const std::vector<QSer>& x, size_t len) {
  QSer n = qser_poly(F.num(), x, len);
  if (F.is_polynomial()) {
    Rational d = F.den().constant_value();
    if (d != 1)
      for (auto& c : n.c) c /= d;
    return n;
  }
  return qser_mul(n, qser_inv(qser_poly(F.den(), x, len)));
}

Multiplicity multiplicity_1d(const FoliatedSpace& space, const RationalPolynomial& P,
                             const std::vector<Rational>& p, long orderCap) {
  const VectorField& xi = space.fields()[0];
  size_t len = static_cast<size_t>(orderCap) + 1;
  size_t N = p.size();
  std::vector<QSer> x(N);
  for (size_t j = 0; j < N; ++j) x[j] = qser_const(p[j], len);
  for (size_t k = 0; k + 1 < len; ++k) {
    for (size_t j = 0; j < N; ++j) {
      QSer rhs = qser_ratfn(xi[j], x, k + 1);
      x[j].c[k + 1] = rhs.c[k] / Rational(static_cast<long>(k) + 1);
    }
  }
  QSer comp = qser_poly(P, x, len);
  for (size_t k = 0; k < len; ++k)
    if (comp.c[k] != 0) return {false, static_cast<long>(k)};
  // every derivative vanished up to the cap: decide improperness exactly
  UnlikelyLocus loc = unlikely_locus(space, {P}, LocusMode::Exact1D);
  bool all_zero = true;
  for (const auto& g : loc.generators)
    if (g.eval(p) != 0) all_zero = false;
  if (loc.exact && all_zero) return {true, 0};
  throw Error(err::Undecidable, "multiplicity exceeds the order cap");
}

Multiplicity multiplicity_2d(const FoliatedSpace& space, const std::vector<RationalPolynomial>& V,
                             const std::vector<Rational>& p, long orderCap) {
  if (!space.fields_constant())
    throw Error(err::UnsupportedDimension,
                "n = 2 multiplicity oracle implemented over affine charts");
  // restrict to the leaf: s, t coordinates along the two field directions
  const std::vector<std::string> st = {"s", "t"};
  std::vector<RationalPolynomial> maps;
  for (size_t j = 0; j < p.size(); ++j) {
    RationalPolynomial m = RationalPolynomial::constant(p[j], st);
    for (size_t i = 0; i < 2; ++i) {
      const auto& comp = space.fields()[i][j];
      Rational dir = comp.num().is_zero() ? Rational(0) : comp.num().constant_value();
      if (dir != 0) m = m + dir * RationalPolynomial::variable(i, st);
    }
    maps.push_back(m);
  }
  RationalPolynomial F1 = V[0].compose(maps), F2 = V[1].compose(maps);
  if (F1.eval({Rational(0), Rational(0)}) != 0 || F2.eval({Rational(0), Rational(0)}) != 0)
    return {false, 0};
  // multiplicity via sheared elimination: mult = ord_{s=0} Res_t(F1, F2)
  // for a generic shear; the generic value is the minimum over shears
  long best = -1;
  for (long shear : {0L, 1L, -1L, 2L, 3L}) {
    RationalPolynomial s_sh =
        RationalPolynomial::variable(0, st) + Rational(shear) * RationalPolynomial::variable(1, st);
    RationalPolynomial G1 = F1.compose({s_sh, RationalPolynomial::variable(1, st)});
    RationalPolynomial G2 = F2.compose({s_sh, RationalPolynomial::variable(1, st)});
    RationalPolynomial R = resultant(G1, G2, 1);
    if (R.is_zero()) return {true, 0};  // non-isolated intersection
    long ord = 0;
    RationalPolynomial h = R;
    while (ord <= orderCap && h.substitute(0, Rational(0)).is_zero()) {
      auto q = try_divide(h, RationalPolynomial::variable(0, st));
      if (!q) break;
      h = *q;
      ++ord;
    }
    if (best < 0 || ord < best) best = ord;
  }
  if (best < 0) throw Error(err::Undecidable, "2d multiplicity oracle failed");
  return {false, best};
}

}  // namespace

Multiplicity multiplicity_at(const FoliatedSpace& space, const std::vector<RationalPolynomial>& V,
                             const std::vector<Rational>& p, long orderCap, mpfr_prec_t prec) {
  (void)prec;
  if (static_cast<long>(V.size()) != space.leaf_dim())
    throw Error(err::InputError, "multiplicity_at: V must have n equations");
  if (space.leaf_dim() == 1) return multiplicity_1d(space, V[0], p, orderCap);
  if (space.leaf_dim() == 2) return multiplicity_2d(space, V, p, orderCap);
  throw Error(err::UnsupportedDimension, "multiplicity oracle implemented for n <= 2");
}

// ---- derived foliations --------------------------------------------------------

FoliatedSpace derived_foliation_Lk(const FoliatedSpace& space, long k) {
  if (k > space.leaf_dim()) throw Error(err::InputError, "L_k needs k <= n");
  long n = space.leaf_dim();
  std::vector<std::string> coords;
  for (long i = 1; i <= k; ++i)
    for (long j = 1; j <= n; ++j)
      coords.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
  for (const auto& c : space.coords()) coords.push_back(c);
  std::vector<RationalPolynomial> variety;
  for (const auto& v : space.variety()) variety.push_back(v.lift_to(coords));
  size_t na = static_cast<size_t>(k * n);
  std::vector<VectorField> fields;
  for (long i = 0; i < k; ++i) {
    VectorField f;
    for (size_t j = 0; j < na; ++j) f.push_back(RationalFunction(RationalPolynomial(coords)));
    for (long c = 0; c < space.ambient_dim(); ++c) {
      RationalFunction acc{RationalPolynomial(coords)};
      for (long j = 0; j < n; ++j) {
        RationalPolynomial alpha =
            RationalPolynomial::variable(static_cast<size_t>(i * n + j), coords);
        const RationalFunction& comp = space.fields()[j][c];
        RationalFunction lifted(comp.num().lift_to(coords), comp.den().lift_to(coords));
        acc = acc + RationalFunction(alpha) * lifted;
      }
      f.push_back(acc);
    }
    fields.push_back(f);
  }
  return FoliatedSpace(coords, variety, fields, space.base_field_degree());
}

FoliatedSpace derived_foliation_PD(const FoliatedSpace& space,
                                   const std::vector<RationalPolynomial>& Phi) {
  long n = space.leaf_dim();
  if (static_cast<long>(Phi.size()) != n)
    throw Error(err::InputError, "P_D needs a self-map of the leaf coordinates");
  std::vector<std::string> coords;
  for (long i = 1; i <= n; ++i) coords.push_back("s" + std::to_string(i));
  for (const auto& c : space.coords()) coords.push_back(c);
  std::vector<RationalPolynomial> variety;
  for (const auto& v : space.variety()) variety.push_back(v.lift_to(coords));
  std::vector<VectorField> fields;
  for (long i = 0; i < n; ++i) {
    VectorField f;
    for (long s = 0; s < n; ++s) {
      RationalPolynomial delta = RationalPolynomial::constant(Rational(s == i ? 1 : 0), coords);
      f.push_back(RationalFunction(delta));
    }
    for (long c = 0; c < space.ambient_dim(); ++c) {
      RationalFunction acc{RationalPolynomial(coords)};
      for (long j = 0; j < n; ++j) {
        RationalPolynomial dPhi = Phi[j].derivative(static_cast<size_t>(i)).lift_to(coords);
        const RationalFunction& comp = space.fields()[j][c];
        RationalFunction lifted(comp.num().lift_to(coords), comp.den().lift_to(coords));
        acc = acc + RationalFunction(dPhi) * lifted;
      }
      f.push_back(acc);
    }
    fields.push_back(f);
  }
  return FoliatedSpace(coords, variety, fields, space.base_field_degree());
}

// ---- rational point selection ----------------------------------------------------

namespace {

std::vector<Rational> height_candidates(long d) {
  std::vector<Rational> out;
  out.push_back(Rational(0));
  // smallest numerator first, positive before negative, then denominator
  for (long num = 1; num <= d; ++num) {
    for (int sign = 0; sign < 2; ++sign) {
      for (long den = std::max(1L, num); den <= d; ++den) {
        Int g;
        mpz_gcd(g.get_mpz_t(), Int(num).get_mpz_t(), Int(den).get_mpz_t());
        if (g != 1) continue;
        out.push_back(Rational(sign == 0 ? num : -num, den));
      }
    }
  }
  return out;
}

bool sweep(const std::vector<RationalPolynomial>& Z, size_t coord, size_t dim, long d,
           std::vector<Rational>& point) {
  if (coord == dim) {
    if (Z.empty()) return true;
    for (const auto& q : Z) {
      Rational v = q.eval(point);
      if (v != 0) return true;
    }
    return false;
  }
  for (const Rational& cand : height_candidates(d)) {
    point[coord] = cand;
    // skip values where every equation restricts to the zero polynomial
    // (the candidate hyperplane sits inside Z)
    bool all_identically_zero = !Z.empty();
    std::vector<RationalPolynomial> restricted;
    for (const auto& q : Z) {
      RationalPolynomial r = q.substitute(coord, cand);
      restricted.push_back(r);
      if (!r.is_zero()) all_identically_zero = false;
    }
    if (all_identically_zero) continue;
    if (sweep(restricted, coord + 1, dim, d, point)) return true;
  }
  return false;
}

}  // namespace

std::vector<Rational> point_outside_variety(const std::vector<RationalPolynomial>& Z,
                                            size_t ambientDim, long degreeBound) {
  std::vector<Rational> point(ambientDim, Rational(0));
  std::vector<RationalPolynomial> eqs;
  for (const auto& q : Z)
    if (!q.is_zero()) eqs.push_back(q);
  bool empty_variety = false;
  for (const auto& q : eqs)
    if (q.is_constant()) empty_variety = true;  // nonzero constant: Z is empty
  if (empty_variety || eqs.empty()) return point;
  if (!sweep(eqs, 0, ambientDim, degreeBound, point))
    throw Error(err::DegreeBoundViolated,
                "no candidate of the requested height avoids the variety");
  return point;
}

// ---- complete intersection choice ----------------------------------------------

std::vector<RationalPolynomial> complete_intersection_choose(
    const FoliatedSpace& space, const std::vector<RationalPolynomial>& V, long targetCodim,
    std::uint64_t seed, int maxRetries) {
  if (targetCodim > space.ambient_dim())
    throw Error(err::InputError, "target codimension exceeds ambient dimension");
  size_t S = V.size();
  if (S == static_cast<size_t>(targetCodim)) return V;  // already a complete intersection
  if (S < static_cast<size_t>(targetCodim))
    throw Error(err::InputError, "fewer equations than the target codimension");
  const auto& vars = V[0].vars();
  for (int attempt = 0; attempt < maxRetries; ++attempt) {
    Rng rng(seed, static_cast<std::uint64_t>(attempt) + 1);
    std::vector<RationalPolynomial> W;
    for (long j = 0; j < targetCodim; ++j) {
      RationalPolynomial w(vars);
      for (size_t a = 0; a < S; ++a) w = w + rng.rational(5) * V[a];
      W.push_back(w);
    }
    bool ok = true;
    for (auto& w : W)
      if (w.is_zero()) ok = false;
    // containment V(V) in V(W) holds by construction; check codimension by
    // exact Jacobian rank at random rational sample points
    int full_rank_hits = 0;
    for (int s = 0; s < 6 && ok; ++s) {
      std::vector<Rational> pt;
      for (size_t c = 0; c < vars.size(); ++c) pt.push_back(rng.rational(7));
      std::vector<std::vector<Rational>> J;
      for (auto& w : W) {
        std::vector<Rational> row;
        for (size_t c = 0; c < vars.size(); ++c) row.push_back(w.derivative(c).eval(pt));
        J.push_back(row);
      }
      size_t rank = 0;
      for (size_t col = 0; col < vars.size() && rank < J.size(); ++col) {
        size_t piv = rank;
        while (piv < J.size() && J[piv][col] == 0) ++piv;
        if (piv == J.size()) continue;
        std::swap(J[rank], J[piv]);
        for (size_t r2 = rank + 1; r2 < J.size(); ++r2) {
          if (J[r2][col] == 0) continue;
          Rational f = J[r2][col] / J[rank][col];
          for (size_t c2 = col; c2 < vars.size(); ++c2) J[r2][c2] -= f * J[rank][c2];
        }
        ++rank;
      }
      if (rank == static_cast<size_t>(targetCodim)) ++full_rank_hits;
    }
    if (ok && full_rank_hits >= 1) return W;
  }
  throw Error(err::VerificationFailed,
              "complete_intersection_choose: verification failed after retries");
}

}  // namespace folia
