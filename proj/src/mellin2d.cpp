// SPDX-License-Identifier: Apache-2.0

#include "cosserat/mellin2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cosserat/rootfind.hpp"

namespace cosserat::mellin2d {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

void validate_corner(double omega) {
  if (!(omega > 0.0 && omega <= kTwoPi))
    throw std::invalid_argument("corner opening must lie in (0, 2*pi]");
}

void validate_sigma(double sigma) {
  if (!(sigma >= 0.0 && sigma <= 1.0))
    throw std::invalid_argument("spectral parameter sigma must lie in [0, 1]");
}

bool boundary_of_theory(double sigma) {
  const double tol = 1e-14;
  return std::abs(sigma) < tol || std::abs(sigma - 0.5) < tol ||
         std::abs(sigma - 1.0) < tol;
}

Complex eval_char(Complex lambda, double sigma, double omega, int epsilon) {
  const double eps = static_cast<double>(epsilon);
  if (std::abs(lambda) < 1e-100)
    return (1.0 - 2.0 * sigma) * omega - eps * std::sin(omega);
  return (1.0 - 2.0 * sigma) * std::sin(lambda * omega) / lambda -
         eps * std::sin(omega);
}

Complex mellin_det(Complex lambda, double sigma, double omega) {
  // Equal to eval_char(+1) * eval_char(-1); evaluated in product form so the
  // lambda = 0 limit is shared with eval_char.
  return eval_char(lambda, sigma, omega, +1) *
         eval_char(lambda, sigma, omega, -1);
}

SpectrumInterval essential_interval(double omega) {
  validate_corner(omega);
  const double half_width = std::abs(std::sin(omega)) / (2.0 * omega);
  return {0.5 - half_width, 0.5 + half_width};
}

PolygonSpectrum essential_spectrum_polygon(const std::vector<double>& omegas) {
  if (omegas.empty())
    throw std::invalid_argument("polygon needs at least one corner");
  std::vector<SpectrumInterval> iv;
  iv.reserve(omegas.size());
  for (double w : omegas) iv.push_back(essential_interval(w));
  std::sort(iv.begin(), iv.end(),
            [](const SpectrumInterval& a, const SpectrumInterval& b) {
              return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
            });
  PolygonSpectrum out;
  for (const auto& i : iv) {
    if (!out.intervals.empty() && i.lo <= out.intervals.back().hi) {
      out.intervals.back().hi = std::max(out.intervals.back().hi, i.hi);
    } else {
      out.intervals.push_back(i);
    }
  }
  return out;
}

double lbb_upper_bound(const std::vector<double>& omegas) {
  if (omegas.empty())
    throw std::invalid_argument("polygon needs at least one corner");
  double lo_min = 0.5;
  for (double w : omegas) lo_min = std::min(lo_min, essential_interval(w).lo);
  return std::sqrt(lo_min);
}

namespace {

// (1-2s) sinh(t w)/t - eps sin(w) for t > 0, with the t -> 0 limit
// (1-2s) w - eps sin(w); sign saturates once t w overflows sinh.
double imag_axis_char(double t, double sigma, double omega, int epsilon) {
  const double c = 1.0 - 2.0 * sigma;
  const double s = static_cast<double>(epsilon) * std::sin(omega);
  if (t <= 0.0) return c * omega - s;
  const double x = t * omega;
  if (x > 700.0) return c > 0 ? 1e300 : (c < 0 ? -1e300 : -s);
  return c * std::sinh(x) / t - s;
}

}  // namespace

ImaginaryRootScan imaginary_roots(double sigma, double omega, double t_max) {
  validate_corner(omega);
  validate_sigma(sigma);
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");

  ImaginaryRootScan scan;
  if (boundary_of_theory(sigma)) scan.status = ScanStatus::BoundaryOfTheory;

  const SpectrumInterval iv = essential_interval(omega);
  const bool expect_root = iv.strictly_contains(sigma) &&
                           std::abs(sigma - 0.5) > 1e-14 && !iv.degenerate();

  for (int eps : {+1, -1}) {
    auto f = [&](double t) { return imag_axis_char(t, sigma, omega, eps); };
    const double f0 = f(0.0);
    if (f0 == 0.0) {
      scan.degenerate_at_zero = true;
      continue;
    }
    auto bracket =
        rootfind::bracket_first_sign_change(f, f0, 0.0, t_max, 1.25);
    if (!bracket) continue;
    double t = rootfind::bisect(f, bracket->first, bracket->second, 1e-15);
    if (t < 1e-10) {
      scan.degenerate_at_zero = true;
      continue;
    }
    const double resid = std::abs(eval_char(Complex(0.0, t), sigma, omega, eps));
    scan.roots.push_back({Complex(0.0, t), eps, RootKind::PurelyImaginary, resid});
    scan.roots.push_back({Complex(0.0, -t), eps, RootKind::PurelyImaginary, resid});
  }

  if (expect_root && scan.roots.empty() && !scan.degenerate_at_zero &&
      scan.status == ScanStatus::Resolved)
    scan.status = ScanStatus::Unresolved;
  return scan;
}

std::vector<double> positive_real_roots(double sigma, double omega,
                                        int epsilon, double lambda_max) {
  validate_corner(omega);
  validate_sigma(sigma);
  auto f = [&](double x) {
    return eval_char(Complex(x, 0.0), sigma, omega, epsilon).real();
  };
  std::vector<double> roots;
  // sin(lambda omega) oscillates with period 2 pi / omega; sample well below.
  const double step = std::min(0.01, kPi / omega / 32.0);
  double a = 0.0;
  double fa = eval_char(Complex(0.0, 0.0), sigma, omega, epsilon).real();
  for (double b = step; b <= lambda_max + 0.5 * step; b += step) {
    const double fb = f(b);
    if (fa == 0.0) {
      if (a > 0.0) roots.push_back(a);
    } else if (fb == 0.0 || std::signbit(fa) != std::signbit(fb)) {
      roots.push_back(rootfind::bisect(f, a, b, 1e-15));
    }
    a = b;
    fa = fb;
  }
  roots.erase(std::remove_if(roots.begin(), roots.end(),
                             [](double r) { return r <= 1e-12; }),
              roots.end());
  return roots;
}

double min_positive_real_root(double sigma, double omega, double lambda_max) {
  const SpectrumInterval iv = essential_interval(omega);
  if (sigma >= iv.lo) {
    if (sigma <= iv.hi)
      throw std::domain_error(
          "regularity undefined, sigma in essential spectrum");
    throw std::domain_error(
        "regularity exponent defined only below the essential interval");
  }
  double best = std::numeric_limits<double>::infinity();
  for (int eps : {+1, -1}) {
    const auto roots = positive_real_roots(sigma, omega, eps, lambda_max);
    if (!roots.empty()) best = std::min(best, roots.front());
  }
  if (!std::isfinite(best))
    throw std::domain_error("no positive real root below lambda_max");
  return best;
}

SingularFunction::SingularFunction(Complex lambda, double sigma, double omega,
                                   int epsilon)
    : lambda_(lambda), sigma_(sigma), omega_(omega), epsilon_(epsilon) {
  validate_corner(omega);
  if (std::abs(lambda) < 1e-12 || std::abs(lambda - 1.0) < 1e-12)
    throw std::invalid_argument(
        "singular function basis is not valid for lambda in {0, 1}");
  const Complex s = std::sin(lambda * omega);
  if (std::abs(s) < 1e-12)
    throw std::invalid_argument("non-generic lambda: sin(lambda*omega) = 0");
  a_ = std::sin((lambda - 1.0) * omega) / s;
  b_ = std::sin(omega) / s;
  c_ = (2.0 * sigma - 1.0) / lambda;
}

std::array<Complex, 2> SingularFunction::operator()(double r,
                                                    double theta) const {
  // Monomials expressed through r, theta: z^a = exp(a (log r + i theta)).
  const double lr = std::log(r);
  const Complex I(0.0, 1.0);
  const Complex zl = std::exp(lambda_ * Complex(lr, theta));
  const Complex zbl = std::exp(lambda_ * Complex(lr, -theta));
  const Complex z1zb = std::exp((lambda_ - 1.0) * Complex(lr, theta)) *
                       (r * std::exp(Complex(0.0, -theta)));
  const Complex zb1z = std::exp((lambda_ - 1.0) * Complex(lr, -theta)) *
                       (r * std::exp(Complex(0.0, theta)));
  const double e = static_cast<double>(epsilon_);
  // w3 = w(3) + c wt(1); w4 = wt(4) + c w(2); w1 = w(1); w2 = wt(2).
  const Complex w3_0 = z1zb + c_ * zl, w3_1 = I * z1zb - I * c_ * zl;
  const Complex w4_0 = zb1z + c_ * zbl, w4_1 = -I * zb1z + I * c_ * zbl;
  const Complex w1_0 = zl, w1_1 = I * zl;
  const Complex w2_0 = zbl, w2_1 = -I * zbl;
  return {w3_0 + e * w4_0 - a_ * (w1_0 + e * w2_0),
          w3_1 + e * w4_1 - a_ * (w1_1 + e * w2_1)};
}

std::array<Complex, 2> SingularFunction::eval_xy(double x1, double x2) const {
  const double r = std::hypot(x1, x2);
  if (r == 0.0) throw std::invalid_argument("singular function undefined at r = 0");
  return (*this)(r, std::atan2(x2, x1));
}

SingularFunction singular_function(const ComplexRoot& root, double sigma,
                                   double omega) {
  return SingularFunction(root.lambda, sigma, omega, root.branch);
}

std::vector<Complex> complex_roots_in_box(double sigma, double omega,
                                          int epsilon, Complex lo, Complex hi) {
  auto f = [=](Complex z) { return eval_char(z, sigma, omega, epsilon); };
  return rootfind::zeros_in_rectangle(f, lo, hi, 1e-7);
}

}  // namespace cosserat::mellin2d
