// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace cosserat::rootfind {

using Complex = std::complex<double>;
using RealFn = std::function<double(double)>;
using ComplexFn = std::function<Complex(Complex)>;

/// Bisection on a bracketed sign change, followed by a few secant steps.
/// Requires f(a) and f(b) of opposite (or zero) sign.
double bisect(const RealFn& f, double a, double b, double xtol = 1e-14,
              int max_iter = 200);

/// Walk [t0, t1] on a geometric grid (ratio `factor`) and return the first
/// bracket [a,b] with a sign change of f, if any. f(t0) is taken as given
/// by `f0` so callers can substitute an analytic limit at t0 = 0.
std::optional<std::pair<double, double>> bracket_first_sign_change(
    const RealFn& f, double f0, double t0, double t1, double factor = 1.25);

/// Winding number of a holomorphic function along the boundary of the axis
/// aligned rectangle [lo.real, hi.real] x [lo.imag, hi.imag], traversed
/// counterclockwise. Edges start from segments no longer than max_step
/// (default: an eighth of the shorter side) and are refined until
/// consecutive phase increments stay below pi/2; the initial resolution must
/// be fine enough that no segment hides a full phase turn. By the argument
/// principle the result equals the number of zeros inside (no poles assumed).
struct WindingResult {
  int winding = 0;
  bool ok = false;      // false if the contour (nearly) hits a zero or the
                        // refinement budget is exhausted
  long evaluations = 0;
};
WindingResult winding_number(const ComplexFn& f, Complex lo, Complex hi,
                             double max_step = 0.0, int max_depth = 16,
                             double zero_tol = 1e-280);

/// Zeros of f inside a rectangle by recursive winding-count subdivision down
/// to boxes of size `min_box`, polished with Muller's method. Intended for
/// diagnostics on well-separated zeros.
std::vector<Complex> zeros_in_rectangle(const ComplexFn& f, Complex lo,
                                        Complex hi, double min_box = 1e-6,
                                        int max_depth = 40);

/// Muller iteration (derivative-free complex root polish).
std::optional<Complex> muller(const ComplexFn& f, Complex z0, double step,
                              double ftol, int max_iter = 60);

/// Minimize |g| over [a,b] by golden-section plus parabolic refinement.
/// Returns the argmin; useful to polish a zero of a complex-valued function
/// restricted to a real segment.
double minimize_abs(const std::function<Complex(double)>& g, double a,
                    double b, double xtol = 1e-13, int max_iter = 200);

}  // namespace cosserat::rootfind
