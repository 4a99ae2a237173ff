// SPDX-License-Identifier: Apache-2.0

#include "cosserat/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cosserat/mellin2d.hpp"

namespace cosserat::bounds {

namespace {
constexpr double kPi = std::numbers::pi;

// Certified truncation of sum over odd k1,k2 of
// 1/(k1^2 k2^2 (k1^2 + k2^2 + a^2)). The tail over odd k > K of k^-3 is
// bounded by (K+2)^-3 + 1/(4 (K+2)^2) (monotone comparison over steps of 2),
// and 1/(k1^2+k2^2+a^2) <= 1/(2 k1 k2) turns the 2D tail into products of
// such 1D sums.
double odd_lattice_sum(double a2, double tol) {
  const double s3_all = 1.0518083213653811;  // (7/8) zeta(3)
  long K = 9;
  auto tail = [&](long k) {
    const double M = static_cast<double>(k + 2);
    const double s3_tail = 1.0 / (M * M * M) + 0.25 / (M * M);
    return s3_all * s3_tail;  // union over the two tail strips, times 2/2
  };
  while (tail(K) > tol && K < 100000) K = K * 2 + 1;
  double sum = 0.0;
  for (long k1 = K; k1 >= 1; k1 -= 2) {
    const double k1sq = static_cast<double>(k1) * k1;
    double row = 0.0;
    for (long k2 = K; k2 >= 1; k2 -= 2) {
      const double k2sq = static_cast<double>(k2) * k2;
      row += 1.0 / (k2sq * (k1sq + k2sq + a2));
    }
    sum += row / k1sq;
  }
  return sum;
}

}  // namespace

void validate_aspect(double a) {
  if (!(a > 0.0 && a <= 1.0))
    throw std::invalid_argument("aspect parameter a must lie in (0, 1]");
}

double horgan_payne_lower(double a) {
  validate_aspect(a);
  const double s = std::sin(0.5 * std::atan(a));
  return s * s;
}

double rectangle_upper(double a) {
  validate_aspect(a);
  const double rho = 0.5 * a * kPi;
  return 1.0 - std::tanh(rho) / rho;
}

double chizhonkov_olshanskii_upper(double a) {
  validate_aspect(a);
  return kPi * kPi * a * a / 12.0;
}

CrossSection interval_section(double length) {
  if (!(length > 0.0)) throw std::invalid_argument("section length must be positive");
  return [length](double a) {
    // psi_a(x) = (1 - cosh(a (x - L/2))/cosh(a L/2))/a^2 on (0, L)
    const double h = 0.5 * length;
    const double integral = (length - 2.0 * std::tanh(a * h) / a) / (a * a);
    return std::make_pair(integral, length);
  };
}

CrossSection square_section(double tol) {
  return [tol](double a) {
    const double s = odd_lattice_sum(a * a, tol);
    const double integral = 64.0 / (kPi * kPi) * s;
    return std::make_pair(integral, kPi * kPi);
  };
}

double channel_upper(double a, const CrossSection& section) {
  if (!(a > 0.0)) throw std::invalid_argument("a must be positive");
  const auto [integral, measure] = section(a);
  if (!(measure > 0.0)) throw std::runtime_error("cross-section measure must be positive");
  return a * a * integral / measure;
}

double cuboid_upper(double a, double tol) {
  validate_aspect(a);
  const double pref = 8.0 * a / (kPi * kPi);
  // scale tol into the lattice sum
  return pref * pref * odd_lattice_sum(a * a, tol / (pref * pref));
}

double dobrowolski_upper(double a, double tol) {
  validate_aspect(a);
  const double pref = 16.0 * std::sqrt(3.0) * a / (kPi * kPi * kPi);
  return pref * pref * odd_lattice_sum(0.0, tol / (pref * pref));
}

SpectrumInterval edge_interval_3d(double omega) {
  return mellin2d::essential_interval(omega);
}

BoundReport bound_report(double a, bool cuboid, double tol) {
  BoundReport r;
  r.a = a;
  r.lower_hp = horgan_payne_lower(a);
  r.upper_rect = rectangle_upper(a);
  r.upper_co = chizhonkov_olshanskii_upper(a);
  r.upper_cuboid = cuboid_upper(a, tol);
  r.upper_dobrowolski = dobrowolski_upper(a, tol);
  r.beta_lower = std::sqrt(r.lower_hp);
  r.beta_upper = std::sqrt(cuboid ? r.upper_cuboid : r.upper_rect);
  return r;
}

}  // namespace cosserat::bounds
