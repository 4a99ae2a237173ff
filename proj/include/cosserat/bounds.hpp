// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "cosserat/types.hpp"

namespace cosserat::bounds {

void validate_aspect(double a);

/// Lower bound deduced from the Horgan-Payne estimate on a 1:a rectangle,
/// sin^2(arctan(a)/2). Behaves like a^2/4 for small a.
double horgan_payne_lower(double a);

/// Upper bound 1 - tanh(rho)/rho with rho = a pi/2 (quasimode cos x_1).
double rectangle_upper(double a);

/// Chizhonkov-Olshanskii upper bound pi^2 a^2 / 12.
double chizhonkov_olshanskii_upper(double a);

/// Cross-section data for the channel bound: given the reaction parameter a,
/// returns the pair (<psi_a, 1>, mu(omega)) where psi_a solves
/// (-Lap' + a^2) psi_a = 1 on H^1_0 of the section.
using CrossSection = std::function<std::pair<double, double>(double a)>;

/// Interval section (0, length); closed-form solve.
CrossSection interval_section(double length);

/// Square section (0,pi)^2 by the odd double sine series; the truncation is
/// certified against an integral tail bound below tol.
CrossSection square_section(double tol = 1e-10);

/// Channel bound sigma(Omega_a) <= a^2 <psi_a, 1>/mu(omega).
double channel_upper(double a, const CrossSection& section);

/// Cuboid specialization (8a/pi^2)^2 sum over odd (k1,k2) of
/// 1/(k1^2 k2^2 (k1^2+k2^2+a^2)), truncated with a certified tail bound.
double cuboid_upper(double a, double tol = 1e-8);

/// Dobrowolski's channel result specialized to the cuboid:
/// (16 sqrt(3) a / pi^3)^2 sum 1/(k1^2 k2^2 (k1^2+k2^2)).
double dobrowolski_upper(double a, double tol = 1e-8);

/// Interval certified to be contained in the essential spectrum for a 3D
/// edge of opening omega (the 2D corner interval; containment only in 3D).
SpectrumInterval edge_interval_3d(double omega);

/// Full bound table row for one aspect ratio.
struct BoundReport {
  double a;
  double lower_hp;
  double upper_rect;
  double upper_co;
  double upper_cuboid;
  double upper_dobrowolski;
  double beta_lower;  // sqrt(lower_hp)
  double beta_upper;  // sqrt of the relevant upper bound
};
BoundReport bound_report(double a, bool cuboid = false, double tol = 1e-8);

}  // namespace cosserat::bounds
