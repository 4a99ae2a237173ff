// SPDX-License-Identifier: Apache-2.0

#include "cosserat/rootfind.hpp"

#include <algorithm>
#include <cmath>

namespace cosserat::rootfind {

double bisect(const RealFn& f, double a, double b, double xtol, int max_iter) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  for (int it = 0; it < max_iter && (b - a) > xtol * std::max(1.0, std::abs(a)); ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if (std::signbit(fm) == std::signbit(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  // secant refinement inside the final bracket
  double x0 = a, x1 = b, f0 = fa, f1 = fb;
  for (int it = 0; it < 4; ++it) {
    if (f1 == f0) break;
    const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!(x2 >= a && x2 <= b)) break;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f(x1);
    if (f1 == 0.0) break;
  }
  return std::abs(f1) <= std::abs(f0) ? x1 : x0;
}

std::optional<std::pair<double, double>> bracket_first_sign_change(
    const RealFn& f, double f0, double t0, double t1, double factor) {
  double a = t0;
  double fa = f0;
  if (fa == 0.0) fa = 0.0;  // degenerate start handled by caller
  double t = (t0 > 0.0) ? t0 * factor : t1 / 4096.0;
  while (a < t1) {
    t = std::min(t, t1);
    const double ft = f(t);
    if (fa == 0.0) {
      // start exactly on a root: step past it and continue
      a = t;
      fa = ft;
    } else if (ft == 0.0 || std::signbit(ft) != std::signbit(fa)) {
      return std::make_pair(a, t);
    } else {
      a = t;
      fa = ft;
    }
    if (t >= t1) break;
    t *= factor;
  }
  return std::nullopt;
}

namespace {

// Accumulate phase increments along one edge from za to zb, refining until
// each step turns by less than pi/2.
bool edge_phase(const ComplexFn& f, Complex za, Complex zb, Complex fa,
                Complex fb, double& total, long& evals, int depth,
                int max_depth, double zero_tol) {
  if (std::abs(fa) < zero_tol || std::abs(fb) < zero_tol) return false;
  const double dphi = std::arg(fb / fa);
  if (std::abs(dphi) < 1.5707963267948966 || depth >= max_depth) {
    if (depth >= max_depth && std::abs(dphi) > 2.9) return false;
    total += dphi;
    return true;
  }
  const Complex zm = 0.5 * (za + zb);
  const Complex fm = f(zm);
  ++evals;
  return edge_phase(f, za, zm, fa, fm, total, evals, depth + 1, max_depth, zero_tol) &&
         edge_phase(f, zm, zb, fm, fb, total, evals, depth + 1, max_depth, zero_tol);
}

}  // namespace

WindingResult winding_number(const ComplexFn& f, Complex lo, Complex hi,
                             double max_step, int max_depth, double zero_tol) {
  WindingResult res;
  const Complex c[5] = {lo, {hi.real(), lo.imag()}, hi, {lo.real(), hi.imag()}, lo};
  if (max_step <= 0.0) {
    max_step =
        0.125 * std::min(hi.real() - lo.real(), hi.imag() - lo.imag());
    if (max_step <= 0.0) max_step = 0.125 * std::abs(hi - lo);
  }
  double total = 0.0;
  for (int e = 0; e < 4; ++e) {
    const Complex za = c[e], zb = c[e + 1];
    const int nseg =
        std::max(1, static_cast<int>(std::ceil(std::abs(zb - za) / max_step)));
    Complex zprev = za;
    Complex fprev = f(zprev);
    ++res.evaluations;
    for (int s = 1; s <= nseg; ++s) {
      const Complex znext = za + (zb - za) * (static_cast<double>(s) / nseg);
      const Complex fnext = f(znext);
      ++res.evaluations;
      if (!edge_phase(f, zprev, znext, fprev, fnext, total, res.evaluations, 0,
                      max_depth, zero_tol))
        return res;
      zprev = znext;
      fprev = fnext;
    }
  }
  const double w = total / (2.0 * M_PI);
  const long n = std::lround(w);
  if (std::abs(w - static_cast<double>(n)) > 0.25) return res;
  res.winding = static_cast<int>(n);
  res.ok = true;
  return res;
}

std::optional<Complex> muller(const ComplexFn& f, Complex z0, double step,
                              double ftol, int max_iter) {
  Complex x0 = z0 - step, x1 = z0 + step, x2 = z0;
  Complex f0 = f(x0), f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(f2) < ftol) return x2;
    const Complex h1 = x1 - x0, h2 = x2 - x1;
    if (std::abs(h2) == 0.0 || std::abs(h1) == 0.0) break;
    const Complex d1 = (f1 - f0) / h1, d2 = (f2 - f1) / h2;
    const Complex a = (d2 - d1) / (h2 + h1);
    const Complex b = a * h2 + d2;
    const Complex disc = std::sqrt(b * b - 4.0 * f2 * a);
    const Complex den1 = b + disc, den2 = b - disc;
    const Complex den = std::abs(den1) > std::abs(den2) ? den1 : den2;
    if (std::abs(den) == 0.0) break;
    const Complex dx = -2.0 * f2 / den;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
    x2 = x2 + dx;
    f2 = f(x2);
    if (std::abs(dx) < 1e-15 * std::max(1.0, std::abs(x2))) break;
  }
  return std::abs(f2) < ftol ? std::optional<Complex>(x2) : std::nullopt;
}

namespace {

void subdivide(const ComplexFn& f, Complex lo, Complex hi, double min_box,
               double max_step, int depth, int max_depth,
               std::vector<Complex>& out) {
  WindingResult w = winding_number(f, lo, hi, max_step);
  if (!w.ok) {
    // nudge the box slightly; a zero may sit on the boundary
    const Complex eps = 1e-3 * (hi - lo);
    w = winding_number(f, lo - eps, hi + eps, max_step);
    if (!w.ok) return;
    lo -= eps;
    hi += eps;
  }
  if (w.winding == 0) return;
  const double dx = hi.real() - lo.real(), dy = hi.imag() - lo.imag();
  if ((dx < min_box && dy < min_box) || depth >= max_depth) {
    const Complex center = 0.5 * (lo + hi);
    if (auto z = muller(f, center, 0.25 * std::max(dx, dy) + 1e-14, 1e-11)) {
      for (int k = 0; k < w.winding; ++k) out.push_back(*z);
    } else {
      out.push_back(center);
    }
    return;
  }
  // split slightly off-center so cuts do not run through symmetric zeros
  const double split = 0.5137;
  if (dx >= dy) {
    const double xm = lo.real() + split * dx;
    subdivide(f, lo, {xm, hi.imag()}, min_box, max_step, depth + 1, max_depth, out);
    subdivide(f, {xm, lo.imag()}, hi, min_box, max_step, depth + 1, max_depth, out);
  } else {
    const double ym = lo.imag() + split * dy;
    subdivide(f, lo, {hi.real(), ym}, min_box, max_step, depth + 1, max_depth, out);
    subdivide(f, {lo.real(), ym}, hi, min_box, max_step, depth + 1, max_depth, out);
  }
}

}  // namespace

std::vector<Complex> zeros_in_rectangle(const ComplexFn& f, Complex lo,
                                        Complex hi, double min_box,
                                        int max_depth) {
  std::vector<Complex> out;
  // constant absolute step: the phase scale of f does not shrink with boxes
  const double step =
      0.1 * std::min(hi.real() - lo.real(), hi.imag() - lo.imag());
  subdivide(f, lo, hi, min_box, step, 0, max_depth, out);
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

double minimize_abs(const std::function<Complex(double)>& g, double a,
                    double b, double xtol, int max_iter) {
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = std::abs(g(x1)), f2 = std::abs(g(x2));
  for (int it = 0; it < max_iter && (b - a) > xtol * std::max(1.0, std::abs(a)); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = std::abs(g(x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = std::abs(g(x2));
    }
  }
  double x = 0.5 * (a + b);
  double fx = std::abs(g(x));
  // local parabolic touch-up on |g|^2
  for (int it = 0; it < 3; ++it) {
    const double h = std::max(1e-13, 1e-7 * std::abs(x));
    const double fm = std::abs(g(x - h)), fp = std::abs(g(x + h));
    const double denom = fp - 2 * fx + fm;
    if (denom <= 0) break;
    const double dx = -0.5 * h * (fp - fm) / denom;
    if (std::abs(dx) > h * 1e6) break;
    const double xn = x + dx;
    const double fn = std::abs(g(xn));
    if (fn < fx) {
      x = xn;
      fx = fn;
    } else {
      break;
    }
  }
  return x;
}

}  // namespace cosserat::rootfind
