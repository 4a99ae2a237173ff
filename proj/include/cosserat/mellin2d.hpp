// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <vector>

#include "cosserat/types.hpp"

namespace cosserat::mellin2d {

/// Opening angle of a plane sector, in radians. Valid range (0, 2pi].
struct Corner {
  double omega;
};

void validate_corner(double omega);
void validate_sigma(double sigma);

/// True when sigma sits on the boundary of the theory (the Fredholm
/// statements assume sigma not in {0, 1/2, 1}).
bool boundary_of_theory(double sigma);

/// Characteristic function of a corner of opening omega,
///   (1 - 2 sigma) sin(lambda omega)/lambda - epsilon sin(omega),
/// with the removable singularity at lambda = 0 replaced by its limit.
/// Holomorphic and conjugate-symmetric in lambda for real sigma, omega.
Complex eval_char(Complex lambda, double sigma, double omega, int epsilon);

/// Mellin determinant lambda^-2 ((1-2 sigma)^2 sin^2(lambda omega)
///  - lambda^2 sin^2 omega). Factorizes exactly as the product of the two
/// characteristic branches.
Complex mellin_det(Complex lambda, double sigma, double omega);

/// Essential-spectrum interval of a single corner,
///   [1/2 - |sin omega|/(2 omega), 1/2 + |sin omega|/(2 omega)].
/// The absolute value keeps lo <= hi for re-entrant corners.
SpectrumInterval essential_interval(double omega);

/// Union of per-corner intervals, merged where overlapping. The point {1}
/// always belongs to the essential spectrum on top of these intervals.
struct PolygonSpectrum {
  std::vector<SpectrumInterval> intervals;  // sorted, pairwise disjoint
  bool contains_point_one = true;
};
PolygonSpectrum essential_spectrum_polygon(const std::vector<double>& omegas);

/// Upper bound for the LBB constant: min over corners of sqrt(lo).
double lbb_upper_bound(const std::vector<double>& omegas);

/// Purely imaginary roots lambda = +-it, t > 0, of the characteristic
/// equation for both branches. Nonempty exactly when sigma lies strictly
/// inside the corner's essential interval, away from 1/2.
struct ImaginaryRootScan {
  std::vector<ComplexRoot> roots;  // closed under conjugation
  ScanStatus status = ScanStatus::Resolved;
  bool degenerate_at_zero = false;  // root collapsed to t = 0 (interval endpoint)
};
ImaginaryRootScan imaginary_roots(double sigma, double omega,
                                  double t_max = 20.0);

/// All positive real roots of one branch on (0, lambda_max].
std::vector<double> positive_real_roots(double sigma, double omega,
                                        int epsilon, double lambda_max = 10.0);

/// Regularity exponent s: smallest positive real root over both branches.
/// Defined for sigma strictly below the corner's essential interval; throws
/// std::domain_error otherwise.
double min_positive_real_root(double sigma, double omega,
                              double lambda_max = 10.0);

/// Corner singular function w_lambda built on the z-monomial basis
/// z^lambda, zbar^lambda, z^{lambda-1} zbar, zbar^{lambda-1} z.
/// Homogeneous of degree lambda; has zero Dirichlet trace on
/// theta = +-omega/2 whenever (lambda, sigma, epsilon) satisfies the
/// characteristic equation.
class SingularFunction {
 public:
  SingularFunction(Complex lambda, double sigma, double omega, int epsilon);

  /// Value in polar coordinates (r > 0, theta measured from the bisector).
  std::array<Complex, 2> operator()(double r, double theta) const;
  /// Value in Cartesian coordinates (theta = atan2(x2, x1)).
  std::array<Complex, 2> eval_xy(double x1, double x2) const;

  Complex lambda() const { return lambda_; }
  Complex coeff_a() const { return a_; }
  Complex coeff_b() const { return b_; }
  int epsilon() const { return epsilon_; }

 private:
  Complex lambda_;
  double sigma_;
  double omega_;
  int epsilon_;
  Complex a_;  // sin((lambda-1) omega)/sin(lambda omega)
  Complex b_;  // sin(omega)/sin(lambda omega)
  Complex c_;  // (2 sigma - 1)/lambda
};

SingularFunction singular_function(const ComplexRoot& root, double sigma,
                                   double omega);

/// Diagnostic: all characteristic roots of one branch inside a rectangle of
/// the lambda plane, located by the argument principle.
std::vector<Complex> complex_roots_in_box(double sigma, double omega,
                                          int epsilon, Complex lo, Complex hi);

}  // namespace cosserat::mellin2d
