#include "folia/rootsolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "folia/contour.hpp"
#include "folia/error.hpp"

namespace folia {

Ball poly_eval(const BallVector& coeffs, const Ball& z) {
  mpfr_prec_t prec = z.prec();
  if (coeffs.empty()) return Ball::exact(Rational(0), Rational(0), prec);
  Ball acc = coeffs.back().round_to(std::max(prec, coeffs.back().prec()));
  for (size_t i = coeffs.size() - 1; i-- > 0;) acc = add(mul(acc, z), coeffs[i]);
  return acc;
}

BallVector poly_derivative(const BallVector& coeffs) {
  BallVector d;
  for (size_t k = 1; k < coeffs.size(); ++k)
    d.push_back(mul_rat(coeffs[k], Rational(static_cast<long>(k))));
  return d;
}

Real cauchy_root_bound(const BallVector& coeffs) {
  size_t n = coeffs.size();
  while (n > 0 && !coeffs[n - 1].excludes_zero()) --n;
  if (n <= 1) return Real::of(0L, kRadPrec);
  Real lead = coeffs[n - 1].abs_lower();
  Real m(kRadPrec);
  for (size_t i = 0; i + 1 < n; ++i) m = Real::max(m, coeffs[i].abs_upper());
  return add_up(Real::of(1L, kRadPrec), div_up(m, lead, kRadPrec), kRadPrec);
}

namespace {

// plain (non-certified) complex arithmetic at mpfr precision for the
// Newton polish; certification happens afterwards via winding numbers
struct Cpx {
  Real re, im;
};

Cpx cadd(const Cpx& a, const Cpx& b, mpfr_prec_t p) {
  return {Real::add(a.re, b.re, p), Real::add(a.im, b.im, p)};
}
Cpx csub(const Cpx& a, const Cpx& b, mpfr_prec_t p) {
  return {Real::sub(a.re, b.re, p), Real::sub(a.im, b.im, p)};
}
Cpx cmul(const Cpx& a, const Cpx& b, mpfr_prec_t p) {
  return {Real::sub(Real::mul(a.re, b.re, p), Real::mul(a.im, b.im, p), p),
          Real::add(Real::mul(a.re, b.im, p), Real::mul(a.im, b.re, p), p)};
}
Cpx cdiv(const Cpx& a, const Cpx& b, mpfr_prec_t p) {
  Real n = Real::add(Real::mul(b.re, b.re, p), Real::mul(b.im, b.im, p), p);
  Cpx num = cmul(a, {b.re, Real::neg(b.im, p)}, p);
  return {Real::div(num.re, n, p), Real::div(num.im, n, p)};
}
Real cabs(const Cpx& a, mpfr_prec_t p) { return Real::hypot(a.re, a.im, p); }

Cpx horner(const std::vector<Cpx>& c, const Cpx& z, mpfr_prec_t p) {
  Cpx acc = c.back();
  for (size_t i = c.size() - 1; i-- > 0;) acc = cadd(cmul(acc, z, p), c[i], p);
  return acc;
}

std::vector<std::complex<double>> aberth_double(std::vector<std::complex<double>> c) {
  size_t n = c.size() - 1;
  std::vector<std::complex<double>> d(n);
  for (size_t k = 1; k <= n; ++k) d[k - 1] = c[k] * double(k);
  double maxc = 0;
  for (size_t i = 0; i < n; ++i) maxc = std::max(maxc, std::abs(c[i]));
  double r0 = 1.0 + maxc / std::max(1e-300, std::abs(c[n]));
  std::vector<std::complex<double>> z(n);
  for (size_t i = 0; i < n; ++i) {
    double th = 6.283185307179586 * (double(i) + 0.35) / double(n) + 0.4;
    z[i] = std::polar(r0 * (0.5 + 0.35 * ((i * 37 % 11) / 11.0)), th);
  }
  auto ev = [&](const std::vector<std::complex<double>>& cs, std::complex<double> x) {
    std::complex<double> acc = cs.back();
    for (size_t i = cs.size() - 1; i-- > 0;) acc = acc * x + cs[i];
    return acc;
  };
  for (int it = 0; it < 400; ++it) {
    double moved = 0;
    for (size_t i = 0; i < n; ++i) {
      std::complex<double> p = ev(c, z[i]);
      std::complex<double> dp = ev(d, z[i]);
      if (std::abs(dp) < 1e-300) {
        z[i] += 1e-3;
        continue;
      }
      std::complex<double> newton = p / dp;
      std::complex<double> s = 0;
      for (size_t j = 0; j < n; ++j)
        if (j != i && std::abs(z[i] - z[j]) > 1e-300) s += 1.0 / (z[i] - z[j]);
      std::complex<double> corr = newton / (1.0 - newton * s);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) corr = newton;
      z[i] -= corr;
      moved = std::max(moved, std::abs(corr));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

CertFn poly_fn(const BallVector& coeffs) {
  return [coeffs](const Ball& z, mpfr_prec_t) { return poly_eval(coeffs, z); };
}

}  // namespace

Ball refine_root(const BallVector& coeffs, const Ball& enclosure, mpfr_prec_t prec, int steps) {
  // interval Newton: N(X) = m - p(m)/p'(X); contraction keeps certification
  BallVector dc = poly_derivative(coeffs);
  Ball X = enclosure.round_to(prec);
  for (int s = 0; s < steps; ++s) {
    Ball m = Ball::of(X.mid().re, X.mid().im, Real::of(0L, kRadPrec), prec);
    Ball dPX = poly_eval(dc, X);
    if (!dPX.excludes_zero()) return X;
    Ball N = sub(m, div(poly_eval(coeffs, m), dPX));
    if (X.contains(N))
      X = N;
    else
      return X;
  }
  return X;
}

std::vector<RootCluster> roots_in_disc(const BallVector& coeffs, const Ball& center,
                                       const Real& radius, mpfr_prec_t prec) {
  long total;
  try {
    total = winding_number(poly_fn(coeffs), center, radius, prec);
  } catch (const Error& e) {
    throw Error(err::FiberSolveFailed, std::string("root count on target disc: ") + e.what());
  }
  std::vector<RootCluster> out;
  if (total == 0) return out;

  size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1].abs_upper().to_double() <
                        1e-250 * std::max(1.0, cauchy_root_bound(coeffs).to_double()))
    --deg;
  while (deg > 0 && !coeffs[deg - 1].excludes_zero()) --deg;
  if (deg <= 1) throw Error(err::FiberSolveFailed, "degenerate polynomial");
  std::vector<std::complex<double>> cd(deg);
  double scale = 0;
  for (size_t i = 0; i < deg; ++i)
    scale = std::max(scale, std::abs(coeffs[i].mid().re.to_double()) +
                                std::abs(coeffs[i].mid().im.to_double()));
  if (scale == 0) throw Error(err::FiberSolveFailed, "zero polynomial");
  for (size_t i = 0; i < deg; ++i)
    cd[i] = {coeffs[i].mid().re.to_double() / scale, coeffs[i].mid().im.to_double() / scale};
  auto approx = aberth_double(cd);

  // Newton polish at full precision
  std::vector<Cpx> cc(deg), dcc(deg - 1);
  for (size_t i = 0; i < deg; ++i) cc[i] = {coeffs[i].mid().re, coeffs[i].mid().im};
  for (size_t k = 1; k < deg; ++k)
    dcc[k - 1] = {Real::mul(cc[k].re, Real::of(static_cast<long>(k), prec), prec),
                  Real::mul(cc[k].im, Real::of(static_cast<long>(k), prec), prec)};
  std::vector<Cpx> polished;
  for (auto& a : approx) {
    Cpx z{Real::of(a.real(), prec), Real::of(a.imag(), prec)};
    for (int it = 0; it < 64; ++it) {
      Cpx p = horner(cc, z, prec);
      Cpx dp = horner(dcc, z, prec);
      if (cabs(dp, prec).is_zero()) break;
      Cpx corr = cdiv(p, dp, prec);
      z = csub(z, corr, prec);
      if (cabs(corr, prec) < Real::pow2(-static_cast<long>(prec) + 8, kRadPrec)) break;
    }
    polished.push_back(z);
  }

  double cr = radius.to_double();
  double cx = center.mid().re.to_double(), cy = center.mid().im.to_double();
  std::vector<std::pair<double, double>> pts;
  for (auto& z : polished) {
    double x = z.re.to_double(), y = z.im.to_double();
    if (std::hypot(x - cx, y - cy) <= cr * 1.25 + 1e-9) pts.push_back({x, y});
  }
  double min_sep = 1e300;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      min_sep = std::min(min_sep,
                         std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second));
  double tol = std::max(1e-13 * std::max(1.0, cr), std::min(min_sep * 0.45, cr * 0.01));
  std::vector<int> parent(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second) <= tol)
        parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
  std::vector<std::vector<size_t>> clusters;
  {
    std::vector<int> label(pts.size(), -1);
    for (size_t i = 0; i < pts.size(); ++i) {
      int r = find(static_cast<int>(i));
      if (label[r] < 0) {
        label[r] = static_cast<int>(clusters.size());
        clusters.emplace_back();
      }
      clusters[label[r]].push_back(i);
    }
  }

  std::vector<RootCluster> certified;
  for (auto& cl : clusters) {
    double mx = 0, my = 0;
    for (size_t i : cl) {
      mx += pts[i].first;
      my += pts[i].second;
    }
    mx /= cl.size();
    my /= cl.size();
    double spread = 1e-300;
    for (size_t i : cl)
      spread = std::max(spread, std::hypot(pts[i].first - mx, pts[i].second - my));
    double near_other = cr;
    for (auto& cl2 : clusters) {
      if (&cl2 == &cl) continue;
      for (size_t j : cl2)
        near_other = std::min(near_other, std::hypot(pts[j].first - mx, pts[j].second - my));
    }
    Ball ctr = Ball::of_d(mx, my, prec);
    bool done = false;
    for (double r = std::max(spread * 3, 1e-14); r < near_other * 0.75 && !done; r *= 1.9) {
      try {
        long m = winding_number(poly_fn(coeffs), ctr, Real::of(r, kRadPrec), prec, 8);
        if (m > 0) certified.push_back({ctr.widened(Real::of(r, kRadPrec)), m});
        done = true;
      } catch (const Error&) {
        // zero too close to this contour; try a bigger radius
      }
    }
    if (!done) throw Error(err::FiberSolveFailed, "could not certify a root cluster");
  }
  // keep clusters certified inside the target disc; any straddler is a failure
  long certified_total = 0;
  for (auto& rc : certified) {
    Real d = dist_upper(rc.enclosure, center);  // includes enclosure radius
    Real d_lo = dist_lower(rc.enclosure, center);
    if (d <= radius) {
      out.push_back(rc);
      certified_total += rc.multiplicity;
    } else if (!(d_lo > radius)) {
      throw Error(err::FiberSolveFailed, "root cluster straddles the target boundary");
    }
  }
  if (certified_total != total)
    throw Error(err::FiberSolveFailed, "cluster multiplicities do not account for the disc count");
  return out;
}

std::vector<RootCluster> roots_of_rational_poly(const RationalPolynomial& f, size_t var,
                                                mpfr_prec_t prec) {
  long d = f.degree_in(var);
  if (d <= 0) return {};
  for (size_t i = 0; i < f.vars().size(); ++i)
    if (i != var && f.degree_in(i) > 0)
      throw Error(err::InputError, "roots_of_rational_poly needs univariate input");
  std::vector<std::pair<RationalPolynomial, int>> parts;
  RationalPolynomial h = f;
  int mult = 1;
  while (h.degree_in(var) > 0) {
    RationalPolynomial g = gcd_univariate(h, h.derivative(var), var);
    RationalPolynomial sqf = *try_divide(h, g);
    RationalPolynomial gg = g.degree_in(var) > 0
                                ? gcd_univariate(sqf, g, var)
                                : RationalPolynomial::constant(Rational(1), f.vars());
    RationalPolynomial exact_mult = *try_divide(sqf, gg);
    if (exact_mult.degree_in(var) > 0) parts.push_back({exact_mult, mult});
    h = g;
    ++mult;
    if (mult > 512) throw Error(err::InputError, "multiplicity runaway");
  }
  std::vector<RootCluster> out;
  for (auto& [p, m] : parts) {
    auto cs = p.coeffs_in(var);
    BallVector bc;
    for (auto& c : cs) bc.push_back(Ball::exact(c.constant_value(), Rational(0), prec));
    Real bound = cauchy_root_bound(bc);
    Ball origin = Ball::exact(Rational(0), Rational(0), prec);
    Real R = add_up(bound, Real::of(1L, kRadPrec), kRadPrec);
    auto rs = roots_in_disc(bc, origin, R, prec);
    for (auto& r : rs) {
      if (r.multiplicity != 1)
        throw Error(err::PrecisionInsufficient, "squarefree factor has a root cluster");
      Ball refined = refine_root(bc, r.enclosure, prec, 6);
      out.push_back({refined, m});
    }
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    int c = cmp(a.enclosure.mid().re, b.enclosure.mid().re);
    if (c != 0) return c < 0;
    return cmp(a.enclosure.mid().im, b.enclosure.mid().im) < 0;
  });
  return out;
}

}  // namespace folia
