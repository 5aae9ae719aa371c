#include "folia/wpolydisc.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <cmath>

#include "folia/error.hpp"
#include "folia/rootsolve.hpp"

namespace folia {

// ---- PolydiscRegion ----------------------------------------------------------

BallVector mat_apply(const BallMatrix& U, const BallVector& x) {
  BallVector y;
  for (const auto& row : U) {
    Ball acc = Ball::exact(Rational(0), Rational(0), x.empty() ? 64 : x[0].prec());
    for (size_t j = 0; j < row.size(); ++j) acc = add(acc, mul(row[j], x[j]));
    y.push_back(acc);
  }
  return y;
}

BallMatrix mat_adjoint(const BallMatrix& U) {
  size_t n = U.size();
  BallMatrix A(n, std::vector<Ball>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) A[i][j] = conj(U[j][i]);
  return A;
}

Real unitary_defect(const BallMatrix& U) {
  size_t n = U.size();
  Real worst(kRadPrec);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Ball acc = Ball::exact(Rational(i == j ? -1 : 0), Rational(0), U[0][0].prec());
      for (size_t k = 0; k < n; ++k) acc = add(acc, mul(U[i][k], conj(U[j][k])));
      worst = Real::max(worst, acc.abs_upper());
    }
  }
  return worst;
}

PolydiscRegion PolydiscRegion::shrink(const Rational& delta) const {
  PolydiscRegion out = *this;
  Real d = Real::of(delta, kRadPrec, MPFR_RNDU);
  for (auto& r : out.radii) r = Real::div(r, d, kRadPrec, MPFR_RNDD);
  return out;
}

BallVector PolydiscRegion::to_frame(const BallVector& x) const {
  BallVector rel;
  for (size_t i = 0; i < x.size(); ++i) rel.push_back(sub(x[i], center[i]));
  if (frame.empty()) return rel;
  return mat_apply(frame, rel);
}

BallVector PolydiscRegion::from_frame(const BallVector& u) const {
  BallVector x = frame.empty() ? u : mat_apply(mat_adjoint(frame), u);
  for (size_t i = 0; i < x.size(); ++i) x[i] = add(x[i], center[i]);
  return x;
}

bool PolydiscRegion::contains(const BallVector& x, const Rational& delta) const {
  BallVector u = to_frame(x);
  Real d = Real::of(delta, kRadPrec, MPFR_RNDU);
  for (size_t i = 0; i < u.size(); ++i) {
    Real ri = Real::div(radii[i], d, kRadPrec, MPFR_RNDD);
    if (!(u[i].abs_upper() <= ri)) return false;
  }
  return true;
}

// ---- nets ----------------------------------------------------------------------

NetCertificate separated_net(const std::function<bool(const BallVector&)>& member,
                             const std::vector<CBox>& box, double epsilon, mpfr_prec_t prec) {
  NetCertificate net;
  net.epsilon = Real::of(epsilon, kRadPrec);
  net.kind = NetCertificate::Kind::Separated;
  double pitch = epsilon / 2;
  std::vector<std::vector<double>> axes;  // per complex coord: re values, im values
  std::vector<size_t> sizes;
  for (const auto& b : box) {
    std::vector<double> re, im;
    for (double v = b.re_lo; v <= b.re_hi + 1e-12; v += pitch) re.push_back(v);
    for (double v = b.im_lo; v <= b.im_hi + 1e-12; v += pitch) im.push_back(v);
    axes.push_back(re);
    axes.push_back(im);
    sizes.push_back(re.size());
    sizes.push_back(im.size());
  }
  std::vector<size_t> idx(axes.size(), 0);
  bool done = axes.empty();
  while (!done) {
    BallVector p;
    for (size_t c = 0; c < box.size(); ++c)
      p.push_back(Ball::of_d(axes[2 * c][idx[2 * c]], axes[2 * c + 1][idx[2 * c + 1]], prec));
    if (member(p)) {
      bool far = true;
      for (const auto& q : net.points) {
        Real lo(kRadPrec);
        for (size_t c = 0; c < p.size(); ++c) {
          Real d = dist_lower(p[c], q[c]);
          lo = add_up(lo, Real::mul(d, d, kRadPrec, MPFR_RNDD), kRadPrec);
        }
        if (!(lo >= Real::of(epsilon * epsilon * 0.999999, kRadPrec))) {
          far = false;
          break;
        }
      }
      if (far) net.points.push_back(p);
    }
    size_t a = 0;
    for (; a < idx.size(); ++a) {
      if (++idx[a] < sizes[a]) break;
      idx[a] = 0;
    }
    if (a == idx.size()) done = true;
  }
  return net;
}

NetCertificate s1_saturate(const NetCertificate& net, mpfr_prec_t prec) {
  NetCertificate out;
  double eps = net.epsilon.to_double();
  out.epsilon = Real::of(2 * eps, kRadPrec);
  out.kind = NetCertificate::Kind::Covering;
  if (net.points.empty()) return out;
  long phases = 1 + static_cast<long>(std::floor(3.14159265358979324 / eps));
  for (long k = 0; k < phases; ++k) {
    Real theta = Real::div(Real::mul(Real::pi(prec), Real::of(2 * k, prec), prec),
                           Real::of(phases, prec), prec);
    Ball ph = unit_phase(theta, prec);
    for (const auto& p : net.points) {
      BallVector q;
      for (const auto& c : p) q.push_back(mul(ph, c));
      out.points.push_back(q);
    }
  }
  return out;
}

// ---- bivariate ball polynomials (z, w) ------------------------------------------

namespace {

struct BPoly2 {
  // c[i][j]: coefficient of z^i w^j
  std::vector<std::vector<Ball>> c;
  mpfr_prec_t prec = 64;

  static BPoly2 zero(size_t dz, size_t dw, mpfr_prec_t prec) {
    BPoly2 p;
    p.prec = prec;
    p.c.assign(dz + 1, std::vector<Ball>(dw + 1, Ball::exact(Rational(0), Rational(0), prec)));
    return p;
  }
};

BPoly2 bp_add(const BPoly2& a, const BPoly2& b) {
  BPoly2 s = BPoly2::zero(std::max(a.c.size(), b.c.size()) - 1,
                          std::max(a.c[0].size(), b.c[0].size()) - 1, a.prec);
  for (size_t i = 0; i < s.c.size(); ++i)
    for (size_t j = 0; j < s.c[0].size(); ++j) {
      Ball v = Ball::exact(Rational(0), Rational(0), a.prec);
      if (i < a.c.size() && j < a.c[0].size()) v = add(v, a.c[i][j]);
      if (i < b.c.size() && j < b.c[0].size()) v = add(v, b.c[i][j]);
      s.c[i][j] = v;
    }
  return s;
}

BPoly2 bp_mul(const BPoly2& a, const BPoly2& b) {
  BPoly2 s = BPoly2::zero(a.c.size() + b.c.size() - 2, a.c[0].size() + b.c[0].size() - 2, a.prec);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < a.c[0].size(); ++j)
      for (size_t k = 0; k < b.c.size(); ++k)
        for (size_t l = 0; l < b.c[0].size(); ++l)
          s.c[i + k][j + l] = add(s.c[i + k][j + l], mul(a.c[i][j], b.c[k][l]));
  return s;
}

// Q(x1, x2) with x_i = center_i + A_i z + B_i w
BPoly2 bp_transform(const RationalPolynomial& Q, const BallVector& center, const BallVector& A,
                    const BallVector& B, mpfr_prec_t prec) {
  long d = std::max(0L, Q.total_degree());
  std::vector<BPoly2> lin;
  for (size_t i = 0; i < 2; ++i) {
    BPoly2 L = BPoly2::zero(1, 1, prec);
    L.c[0][0] = center[i];
    L.c[1][0] = A[i];
    L.c[0][1] = B[i];
    lin.push_back(L);
  }
  BPoly2 acc = BPoly2::zero(static_cast<size_t>(d), static_cast<size_t>(d), prec);
  for (const auto& [e, coef] : Q.terms()) {
    BPoly2 t = BPoly2::zero(0, 0, prec);
    t.c[0][0] = Ball::exact(coef, Rational(0), prec);
    for (size_t i = 0; i < 2; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t = bp_mul(t, lin[i]);
    acc = bp_add(acc, t);
  }
  return acc;
}

// w-polynomial coefficients of the fiber restriction at z0
BallVector bp_fiber(const BPoly2& p, const Ball& z0) {
  size_t dw = p.c[0].size() - 1;
  std::vector<Ball> zp{Ball::exact(Rational(1), Rational(0), z0.prec())};
  for (size_t i = 1; i < p.c.size(); ++i) zp.push_back(mul(zp.back(), z0));
  BallVector out;
  for (size_t j = 0; j <= dw; ++j) {
    Ball acc = Ball::exact(Rational(0), Rational(0), z0.prec());
    for (size_t i = 0; i < p.c.size(); ++i) acc = add(acc, mul(p.c[i][j], zp[i]));
    out.push_back(acc);
  }
  return out;
}

Ball bp_eval(const BPoly2& p, const Ball& z, const Ball& w) {
  std::vector<Ball> zp{Ball::exact(Rational(1), Rational(0), z.prec())};
  for (size_t i = 1; i < p.c.size(); ++i) zp.push_back(mul(zp.back(), z));
  std::vector<Ball> wp{Ball::exact(Rational(1), Rational(0), w.prec())};
  for (size_t j = 1; j < p.c[0].size(); ++j) wp.push_back(mul(wp.back(), w));
  Ball acc = Ball::exact(Rational(0), Rational(0), z.prec());
  for (size_t i = 0; i < p.c.size(); ++i)
    for (size_t j = 0; j < p.c[0].size(); ++j) acc = add(acc, mul(p.c[i][j], mul(zp[i], wp[j])));
  return acc;
}

bool equations_cut_nothing(const std::vector<RationalPolynomial>& X) {
  if (X.empty()) return true;
  for (const auto& q : X)
    if (!q.is_zero() && q.is_constant()) return true;  // nonzero constant equation
  return false;
}

// fast double-precision screen for the boundary condition; conservative
// enough to throw away hopeless radii before the certified validation
bool screen_boundary(const std::vector<RationalPolynomial>& X, const std::complex<double> ctr[2],
                     const std::complex<double> A[2], const std::complex<double> B[2], double rz,
                     double rw) {
  using cd = std::complex<double>;
  auto evalQ = [&](const RationalPolynomial& q, cd z, cd w) {
    cd x1 = ctr[0] + A[0] * z + B[0] * w;
    cd x2 = ctr[1] + A[1] * z + B[1] * w;
    cd acc = 0;
    for (const auto& [e, c] : q.terms()) {
      cd t = c.get_d();
      for (unsigned k = 0; k < e[0]; ++k) t *= x1;
      for (unsigned k = 0; k < e[1]; ++k) t *= x2;
      acc += t;
    }
    return acc;
  };
  const int NW = 24, NZ = 4;
  double minmax = 1e300, maxmax = 0;
  for (int a = 0; a <= NZ; ++a) {
    for (int b = 0; b < 4 * std::max(1, a); ++b) {
      double zr = rz * a / NZ;
      double th = 6.283185307179586 * b / (4 * std::max(1, a));
      cd z = std::polar(zr, th);
      for (int k = 0; k < NW; ++k) {
        cd w = std::polar(rw, 6.283185307179586 * k / NW);
        double best = 0;
        for (const auto& q : X) best = std::max(best, std::abs(evalQ(q, z, w)));
        minmax = std::min(minmax, best);
        maxmax = std::max(maxmax, best);
      }
    }
  }
  return minmax > 0.03 * maxmax && minmax > 1e-12;
}

std::pair<BallVector, BallVector> frame_columns(const WeierstrassPolydisc& wp) {
  mpfr_prec_t prec = wp.region.center.empty() ? 64 : wp.region.center[0].prec();
  if (wp.region.frame.empty()) {
    BallVector A = {Ball::exact(Rational(1), Rational(0), prec),
                    Ball::exact(Rational(0), Rational(0), prec)};
    BallVector B = {Ball::exact(Rational(0), Rational(0), prec),
                    Ball::exact(Rational(1), Rational(0), prec)};
    return {A, B};
  }
  const BallMatrix Uadj = mat_adjoint(wp.region.frame);
  BallVector A = {Uadj[0][0], Uadj[1][0]};  // column multiplying z
  BallVector B = {Uadj[0][1], Uadj[1][1]};  // column multiplying w
  return {A, B};
}

}  // namespace

// ---- empty ball search ------------------------------------------------------------

EmptyBall empty_ball_search(const std::vector<RationalPolynomial>& X, long m,
                            const BallVector& domainCenter, const Real& domainRadius,
                            mpfr_prec_t prec, int maxDepth) {
  size_t n = domainCenter.size();
  if (equations_cut_nothing(X)) {
    Real r2 = Real::div(domainRadius, Real::of(2L, kRadPrec), kRadPrec, MPFR_RNDD);
    return {domainCenter, r2, Real::inf(kRadPrec), 0, Real::of(0L, kRadPrec)};
  }
  double R = domainRadius.to_double();
  // rotation Lipschitz bound on |x| <= R around the center
  std::vector<Real> L;
  {
    BallVector big;
    for (size_t i = 0; i < n; ++i) big.push_back(domainCenter[i].widened(domainRadius));
    for (const auto& q : X) {
      Real s(kRadPrec);
      for (size_t i = 0; i < n; ++i)
        s = add_up(s, q.derivative(i).eval(big, prec).abs_upper(), kRadPrec);
      Real scale(kRadPrec);
      for (size_t i = 0; i < n; ++i) scale = Real::max(scale, big[i].abs_upper());
      L.push_back(mul_up(s, scale, kRadPrec));
    }
  }
  for (int depth = 2; depth <= maxDepth + 1; ++depth) {
    double rho = R / (1 << depth);  // R/4, R/8, ...
    long range = static_cast<long>(std::floor((R - rho) / rho));
    std::vector<std::vector<double>> raw;
    std::vector<long> iter(2 * n, -range);
    bool done = false;
    while (!done) {
      std::vector<double> c(2 * n);
      double norm2 = 0;
      for (size_t i = 0; i < 2 * n; ++i) {
        c[i] = static_cast<double>(iter[i]) * rho;
        norm2 += c[i] * c[i];
      }
      if (norm2 <= (R - rho) * (R - rho)) raw.push_back(c);
      size_t a = 0;
      for (; a < iter.size(); ++a) {
        if (++iter[a] <= range) break;
        iter[a] = -range;
      }
      if (a == iter.size()) done = true;
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
      double na = 0, nb = 0;
      for (double v : a) na += v * v;
      for (double v : b) nb += v * v;
      if (na != nb) return na > nb;
      return a < b;
    });
    for (const auto& cd : raw) {
      BallVector c;
      for (size_t i = 0; i < n; ++i)
        c.push_back(add(domainCenter[i], Ball::of_d(cd[2 * i], cd[2 * i + 1], prec)));
      long Ntheta = 64;
      bool certified = false;
      Real margin(kRadPrec);
      for (int attempt = 0; attempt < 3 && !certified; ++attempt, Ntheta *= 4) {
        Real worst = Real::inf(kRadPrec);
        bool ok = true;
        for (long k = 0; k < Ntheta && ok; ++k) {
          Real theta = Real::div(Real::mul(Real::pi(prec), Real::of(2 * k, prec), prec),
                                 Real::of(Ntheta, prec), prec);
          Ball ph = unit_phase(theta, prec);
          BallVector rot;
          // rotation acts on the chart centered at domainCenter
          for (size_t i = 0; i < n; ++i) {
            Ball rel = sub(c[i], domainCenter[i]);
            rot.push_back(
                add(domainCenter[i], mul(ph, rel)).widened(Real::of(rho, kRadPrec)));
          }
          Real best(kRadPrec);
          for (size_t j = 0; j < X.size(); ++j) {
            Real lo = X[j].eval(rot, prec).abs_lower();
            Real slack = mul_up(L[j], Real::of(3.15 / static_cast<double>(Ntheta), kRadPrec),
                                kRadPrec);
            Real adj = sub_down(lo, slack, kRadPrec);
            best = Real::max(best, adj);
          }
          if (!(best.sign() > 0)) ok = false;
          worst = Real::min(worst, best);
        }
        if (ok) {
          certified = true;
          margin = worst;
        }
      }
      if (certified) {
        Real Lmax(kRadPrec);
        for (auto& l : L) Lmax = Real::max(Lmax, l);
        return {c, Real::of(rho, kRadPrec), margin, Ntheta / 4, Lmax};
      }
    }
  }
  throw Error(err::SearchExhausted, "empty_ball_search: no certified ball at this resolution");
}

// ---- Weierstrass polydisc construction -----------------------------------------------

WeierstrassPolydisc weierstrass_construct(const std::vector<RationalPolynomial>& X, long m,
                                          const BallVector& domainCenter, const Real& domainRadius,
                                          mpfr_prec_t prec) {
  size_t n = domainCenter.size();
  WeierstrassPolydisc wp;
  wp.target = X;
  if (equations_cut_nothing(X)) {
    wp.zdim = static_cast<long>(n);
    wp.region.center = domainCenter;
    wp.region.radii.assign(n, domainRadius);
    wp.degree = 0;
    wp.validated = true;
    wp.margin = Real::inf(kRadPrec);
    return wp;
  }
  if (n != 2 || m != 1)
    throw Error(err::UnsupportedDimension, "weierstrass_construct: implemented for curves in C^2");

  double R = domainRadius.to_double();
  auto try_frame = [&](const BallMatrix& U,
                       const std::vector<std::pair<double, double>>& schedule)
      -> std::optional<WeierstrassPolydisc> {
    using cd = std::complex<double>;
    cd ctr[2], A[2], B[2];
    for (int i = 0; i < 2; ++i)
      ctr[i] = {domainCenter[i].mid().re.to_double(), domainCenter[i].mid().im.to_double()};
    if (U.empty()) {
      A[0] = 1; A[1] = 0; B[0] = 0; B[1] = 1;
    } else {
      // adjoint columns: x = center + U* (z, w)
      A[0] = {U[0][0].mid().re.to_double(), -U[0][0].mid().im.to_double()};
      A[1] = {U[0][1].mid().re.to_double(), -U[0][1].mid().im.to_double()};
      B[0] = {U[1][0].mid().re.to_double(), -U[1][0].mid().im.to_double()};
      B[1] = {U[1][1].mid().re.to_double(), -U[1][1].mid().im.to_double()};
    }
    for (auto [t, s] : schedule) {
      if (t * t + s * s > 1.0) continue;
      if (!screen_boundary(X, ctr, A, B, t * R, s * R)) continue;
      WeierstrassPolydisc cand;
      cand.target = X;
      cand.zdim = 1;
      cand.region.center = domainCenter;
      cand.region.frame = U;
      cand.region.radii = {Real::of(t * R, kRadPrec), Real::of(s * R, kRadPrec)};
      try {
        wp_validate(cand, prec);  // full certificate (two passes)
        cand.degree = sheet_degree(cand, prec);
        return cand;
      } catch (const Error&) {
        continue;
      }
    }
    return std::nullopt;
  };
  // radii schedule: prefer fat polydiscs, shrink z faster than w
  std::vector<std::pair<double, double>> schedule;
  const double steps[] = {0.7,  0.5,     0.375,  0.25, 0.1875,  0.125,
                          0.09375, 0.0625, 0.04, 0.03125, 0.02};
  for (double s : steps)
    for (double t : steps) schedule.push_back({t, s});
  std::sort(schedule.begin(), schedule.end(), [](auto a, auto b) {
    double ma = std::min(a.first, a.second), mb = std::min(b.first, b.second);
    if (ma != mb) return ma > mb;
    return a.first + a.second > b.first + b.second;
  });

  // 1) identity frame
  if (auto got = try_frame({}, schedule)) return *got;

  // 2) frame aligned with a certified empty-ball direction
  try {
    EmptyBall eb = empty_ball_search(X, m, domainCenter, domainRadius, prec);
    BallVector crel;
    for (size_t i = 0; i < n; ++i) crel.push_back(sub(eb.center[i], domainCenter[i]));
    Ball norm2 = Ball::exact(Rational(0), Rational(0), prec);
    for (auto& ci : crel) norm2 = add(norm2, mul(ci, conj(ci)));
    if (norm2.excludes_zero()) {
      Ball cnorm = sqrt(norm2);
      BallVector u;
      for (auto& ci : crel) u.push_back(div(ci, cnorm));
      // unitary frame sending the direction u to the w axis:
      // rows (-u2, u1) and (conj u1, conj u2)
      BallMatrix U(2, std::vector<Ball>(2));
      U[0][0] = neg(u[1]);
      U[0][1] = u[0];
      U[1][0] = conj(u[0]);
      U[1][1] = conj(u[1]);
      wp.region.center = domainCenter;
      wp.region.frame = U;
      wp.zdim = 1;
      Real rho = eb.radius;
      Real rz = Real::div(Real::mul(rho, Real::of(7L, kRadPrec), kRadPrec, MPFR_RNDD),
                          Real::of(8L, kRadPrec), kRadPrec, MPFR_RNDD);
      Real rw = cnorm.abs_lower();
      wp.region.radii = {rz, rw};
      try {
        wp_validate(wp, prec);
        wp.degree = sheet_degree(wp, prec);
        return wp;
      } catch (const Error&) {
        // fall through to the fixed rotation sequence
      }
    }
  } catch (const Error&) {
    // empty-ball search failed; fixed rotations below
  }

  // 3) fixed sequence of rotations (documented fallback frames)
  for (int k = 1; k <= 6; ++k) {
    mpfr_prec_t pe = prec + 16;
    Real theta = Real::div(Real::of(static_cast<long>(2 * k), pe), Real::of(7L, pe), pe);
    Real c = Real::cos(theta, pe), s = Real::sin(theta, pe);
    Real errv = Real::pow2(-static_cast<long>(pe) + 2, kRadPrec);
    Ball cb = Ball::of(c, Real::of(0L, pe), errv, prec);
    Ball sb = Ball::of(s, Real::of(0L, pe), errv, prec);
    BallMatrix U = {{cb, neg(sb)}, {sb, cb}};
    if (auto got = try_frame(U, schedule)) return *got;
  }
  throw Error(err::ValidationFailed, "weierstrass_construct: no frame/radii choice validated");
}

Real wp_validate(WeierstrassPolydisc& wp, mpfr_prec_t prec, int maxZdepth, int passes) {
  if (wp.zdim == static_cast<long>(wp.region.dim())) {
    wp.validated = true;
    wp.margin = Real::inf(kRadPrec);
    return wp.margin;
  }
  auto [A, B] = frame_columns(wp);
  Real rz = wp.region.radii[0], rw = wp.region.radii[1];
  mpfr_prec_t prec2 = prec;
  Real best_margin(kRadPrec);
  for (int pass = 0; pass < passes; ++pass) {
    std::vector<BPoly2> eqs;
    for (const auto& q : wp.target)
      eqs.push_back(bp_transform(q, wp.region.center, A, B, prec2));
    bool ok = false;
    Real margin(kRadPrec);
    for (int zdepth = 1; zdepth <= maxZdepth && !ok; zdepth *= 2) {
      long Nw = 32 * zdepth;
      std::vector<Ball> zcenters;
      double rzd = rz.to_double();
      double pitch = rzd / zdepth;
      // one-cell margin: every point of the closed z-disc lies in the cell
      // of an included grid point
      for (double xr = -rzd - pitch; xr <= rzd + pitch + 1e-15; xr += pitch)
        for (double xi = -rzd - pitch; xi <= rzd + pitch + 1e-15; xi += pitch)
          if (xr * xr + xi * xi <= (rzd + pitch) * (rzd + pitch) + 1e-15)
            zcenters.push_back(Ball::of_d(xr, xi, prec2));
      Real cover = Real::of(pitch * 0.7072, kRadPrec);
      Real worst = Real::inf(kRadPrec);
      ok = true;
      for (long k = 0; k < Nw && ok; ++k) {
        double a = double(k) / Nw, b = double(k + 1) / Nw;
        Real thmid = Real::mul(Real::pi(prec2), Real::of(a + b, prec2), prec2);
        Ball warc = mul_real(unit_phase(thmid, prec2), rw)
                        .widened(mul_up(Real::of((b - a) * 3.1416, kRadPrec), rw, kRadPrec));
        for (const auto& zc : zcenters) {
          Ball zball = zc.widened(cover);
          Real best(kRadPrec);
          for (const auto& e : eqs) best = Real::max(best, bp_eval(e, zball, warc).abs_lower());
          if (!(best.sign() > 0)) {
            ok = false;
            break;
          }
          worst = Real::min(worst, best);
        }
      }
      if (ok) margin = worst;
    }
    if (!ok) throw Error(err::ValidationFailed, "Weierstrass boundary condition not certified");
    best_margin = margin;
    prec2 *= 2;
  }
  wp.validated = true;
  wp.margin = best_margin;
  return wp.margin;
}

long sheet_degree(const WeierstrassPolydisc& wp, mpfr_prec_t prec) {
  if (!wp.validated) throw Error(err::InputError, "sheet_degree needs a validated polydisc");
  if (wp.zdim == static_cast<long>(wp.region.dim())) return 0;
  auto [A, B] = frame_columns(wp);
  BPoly2 e = bp_transform(wp.target.back(), wp.region.center, A, B, prec);
  Real rz = wp.region.radii[0], rw = wp.region.radii[1];
  std::vector<Ball> samples = {Ball::exact(Rational(0), Rational(0), prec)};
  double rzd = rz.to_double();
  samples.push_back(Ball::of_d(rzd / 2, 0, prec));
  samples.push_back(Ball::of_d(-rzd / 2, 0, prec));
  samples.push_back(Ball::of_d(0, rzd / 2, prec));
  samples.push_back(Ball::of_d(0, -rzd / 2, prec));
  long e_count = -1;
  for (const auto& z0 : samples) {
    BallVector fib = bp_fiber(e, z0);
    CertFn f = [fib](const Ball& w, mpfr_prec_t) { return poly_eval(fib, w); };
    long cnt = winding_number(f, Ball::exact(Rational(0), Rational(0), prec), rw, prec);
    if (e_count < 0) e_count = cnt;
    if (cnt != e_count)
      throw Error(err::NonConstantCount, "fiber count varies across Delta_z samples");
  }
  return e_count;
}

// ---- analytic resultant -----------------------------------------------------------

AnalyticResultant::AnalyticResultant(const WeierstrassPolydisc& wp, RationalPolynomial G,
                                     mpfr_prec_t prec)
    : wp_(wp), g_(std::move(G)), prec_(prec) {
  if (!wp_.validated) throw Error(err::InputError, "analytic resultant needs a validated polydisc");
  if (wp_.zdim != 1 || wp_.region.dim() != 2)
    throw Error(err::UnsupportedDimension, "analytic resultant: dim Delta_z = 1 only");
}

Ball AnalyticResultant::operator()(const Ball& z, mpfr_prec_t prec) const {
  auto [A, B] = frame_columns(wp_);
  BPoly2 curve = bp_transform(wp_.target.back(), wp_.region.center, A, B, prec);
  BallVector fib = bp_fiber(curve, z);
  auto clusters =
      roots_in_disc(fib, Ball::exact(Rational(0), Rational(0), prec), wp_.region.radii[1], prec);
  long total = 0;
  Ball R = Ball::exact(Rational(1), Rational(0), prec);
  for (const auto& cl : clusters) {
    total += cl.multiplicity;
    BallVector x;
    for (size_t i = 0; i < 2; ++i)
      x.push_back(add(wp_.region.center[i], add(mul(A[i], z), mul(B[i], cl.enclosure))));
    Ball val = g_.eval(x, prec);
    R = mul(R, pow_int(val, cl.multiplicity));
  }
  if (total != wp_.degree)
    throw Error(err::FiberSolveFailed, "fiber count disagrees with the validated degree");
  return R;
}

CertFn AnalyticResultant::as_fn() const {
  AnalyticResultant self = *this;
  return [self](const Ball& z, mpfr_prec_t p) { return self(z, p); };
}

// ---- covering driver ---------------------------------------------------------------

bool wp_contains(const WeierstrassPolydisc& wp, const BallVector& x, const Rational& delta) {
  return wp.region.contains(x, delta);
}

WpCover wp_cover(const std::vector<RationalPolynomial>& X, const BallVector& center,
                 const Real& radius, mpfr_prec_t prec, double gridPitch, int maxPolydiscs) {
  WpCover cover;
  cover.gridPitch = gridPitch;
  if (equations_cut_nothing(X)) {
    WeierstrassPolydisc wp = weierstrass_construct(X, 0, center, radius, prec);
    cover.polydiscs.push_back(wp);
    cover.maxDegree = 0;
    cover.probeCount = 1;
    return cover;
  }
  double R = radius.to_double();
  double half = R / 2;
  std::vector<std::array<double, 4>> probes;
  double pitch = gridPitch * R;
  // include a one-cell margin so every point of B^2 has its nearest grid
  // point in the probe list; a probe counts as covered only when its whole
  // cell fits into a shrunk polydisc, so the grid certificate implies
  // genuine coverage of B^2
  double incl = half + pitch;
  for (double a = -incl; a <= incl + 1e-12; a += pitch)
    for (double b = -incl; b <= incl + 1e-12; b += pitch)
      for (double c = -incl; c <= incl + 1e-12; c += pitch)
        for (double d = -incl; d <= incl + 1e-12; d += pitch)
          if (a * a + b * b + c * c + d * d <= incl * incl + 1e-12)
            probes.push_back({a, b, c, d});
  struct Probe {
    std::array<double, 4> x;
    double cell;  // half pitch of the cell this probe certifies
    int depth;
    bool covered = false;
  };
  std::vector<Probe> work;
  // a cell entirely outside the closed half ball certifies nothing
  auto outside = [&](const std::array<double, 4>& x, double cell) {
    double d = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    return d - 2.0 * cell > half;
  };
  for (auto& q : probes)
    if (!outside(q, pitch / 2)) work.push_back({q, pitch / 2, 0, false});
  cover.probeCount = static_cast<long>(work.size());
  auto probe_ball = [&](const Probe& pr, double widen) {
    Real cell = Real::of(widen, kRadPrec);
    return BallVector{add(center[0], Ball::of_d(pr.x[0], pr.x[1], prec)).widened(cell),
                      add(center[1], Ball::of_d(pr.x[2], pr.x[3], prec)).widened(cell)};
  };
  for (int iter = 0; iter < maxPolydiscs; ++iter) {
    // next probe: the uncovered one closest to the ball center, so fat
    // central polydiscs come first
    long first = -1;
    double best = 1e300;
    for (size_t i = 0; i < work.size(); ++i) {
      if (work[i].covered) continue;
      const auto& v = work[i].x;
      double d2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
      if (d2 < best) {
        best = d2;
        first = static_cast<long>(i);
      }
    }
    if (first < 0) break;
    Probe& pr = work[static_cast<size_t>(first)];
    // polydisc center: the probe clamped into B^2, so boundary-margin
    // cells still get a fat construction domain
    std::array<double, 4> q = pr.x;
    double dist = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    if (dist > half) {
      double scale = half / dist;
      for (auto& v : q) v *= scale;
      dist = half;
    }
    BallVector p = {add(center[0], Ball::of_d(q[0], q[1], prec)),
                    add(center[1], Ball::of_d(q[2], q[3], prec))};
    Real Rq = Real::of((R - dist) * 0.875, kRadPrec);
    WeierstrassPolydisc wp = weierstrass_construct(X, 1, p, Rq, prec);
    // a cell counts as covered only when the whole cell (half diagonal
    // sqrt2 * cell per complex coordinate) fits into the shrunk polydisc
    size_t n_marked = 0;
    for (auto& other : work) {
      if (other.covered) continue;
      if (wp_contains(wp, probe_ball(other, other.cell * 1.4143), Rational(2))) {
        other.covered = true;
        ++n_marked;
      }
    }
    if (getenv("FOLIA_DEBUG_COVER"))
      fprintf(stderr, "iter=%d probe=(%.3f,%.3f,%.3f,%.3f) cell=%.4f dist=%.3f rz=%.4f rw=%.4f marked=%zu covered_self=%d\n",
              iter, pr.x[0], pr.x[1], pr.x[2], pr.x[3], pr.cell, dist,
              wp.region.radii[0].to_double(), wp.region.radii[1].to_double(), n_marked,
              static_cast<int>(pr.covered));
    if (n_marked > 0) {
      cover.maxDegree = std::max(cover.maxDegree, wp.degree);
      cover.polydiscs.push_back(wp);
    }
    if (!pr.covered) {
      // the polydisc is too thin for this cell: subdivide the cell
      if (pr.depth >= 6)
        throw Error(err::CoverageIncomplete, "wp_cover: cell subdivision depth exhausted");
      Probe parent = pr;
      pr.covered = true;  // replaced by its children
      double h = parent.cell / 2;
      for (int mask = 0; mask < 16; ++mask) {
        Probe child;
        for (int d = 0; d < 4; ++d)
          child.x[d] = parent.x[d] + ((mask >> d) & 1 ? h : -h);
        child.cell = h;
        child.depth = parent.depth + 1;
        child.covered = false;
        if (outside(child.x, child.cell)) continue;
        // drop children already certified by existing polydiscs
        for (auto& old : cover.polydiscs)
          if (wp_contains(old, probe_ball(child, child.cell * 1.4143), Rational(2)))
            child.covered = true;
        work.push_back(child);
      }
    }
  }
  for (auto& pr : work)
    if (!pr.covered)
      throw Error(err::CoverageIncomplete, "wp_cover: probe grid not exhausted at the polydisc cap");
  return cover;
}

}  // namespace folia
