// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <vector>

#include "cosserat/types.hpp"

namespace cosserat::cone3d {

/// Axisymmetric cone of half-opening omega: theta in [0, omega) in spherical
/// coordinates. Valid range (0, pi).
struct Cone {
  double omega;
};

void validate_cone(double omega);

using ConeMatrix = std::array<std::array<Complex, 3>, 3>;

/// Trace matrix of the three Boussinesq-generated solutions on the cone
/// boundary, for azimuthal mode m (sign of m is immaterial). Entries combine
/// P^{-|m|}_lambda and P^{-|m|}_{lambda+1} at cos(omega); the (3,2) entry
/// carries the factor (lambda+1-m) (the corrected form, a misprint drops the
/// -m in part of the literature).
ConeMatrix mellin_matrix(double sigma, Complex lambda, int m, double omega);

/// As mellin_matrix, but with the misprinted (3,2) entry (lambda+1 instead of
/// lambda+1-m). Kept for the regression test only.
ConeMatrix mellin_matrix_misprinted(double sigma, Complex lambda, int m,
                                    double omega);

/// Raw determinant; holomorphic in lambda, conjugate-symmetric for real
/// sigma, omega. Magnitude grows like exp(3 |Im lambda| omega).
Complex mellin_det(double sigma, Complex lambda, int m, double omega);

/// Determinant of the matrix with both Legendre values rescaled by their
/// common magnitude max(|P_lambda|, |P_{lambda+1}|). The rescaling factor is
/// real positive, so zero sets, phases, and winding numbers are those of the
/// raw determinant while values stay O(1); root residuals are reported in
/// this normalization.
Complex mellin_det_scaled(double sigma, Complex lambda, int m, double omega);

/// Roots lambda = -1/2 + i t, 0 <= t <= t_max, of the Mellin determinant,
/// located by argument-principle counting on the box
/// [-1/2 - delta, -1/2 + delta] x [0, t_max] and polished by modulus
/// minimization along the critical line. Conjugate roots -1/2 - i t are
/// implied.
struct CriticalLineScan {
  std::vector<ComplexRoot> roots;  // t >= 0 representatives, residual = |det| scaled
  ScanStatus status = ScanStatus::Resolved;
  int winding_count = 0;  // zeros counted inside the box
};
CriticalLineScan critical_line_roots(double sigma, double omega, int m,
                                     double t_max = 20.0, double delta = 1e-3);

/// Membership grid for the region R^m of the (omega, sigma) plane where the
/// determinant has critical-line roots.
struct RegionGrid {
  int m = 0;
  std::vector<double> omega;  // radians
  std::vector<double> sigma;
  std::vector<int> num_roots;      // row-major [i_omega * nsigma + i_sigma]
  std::vector<char> in_region;     // 0/1
  std::vector<char> unresolved;    // 0/1 per point
  std::vector<double> min_abs_det; // min |det| sampled on the line (scaled)
  std::vector<double> first_root_t;  // NaN when empty

  std::size_t index(std::size_t i, std::size_t j) const {
    return i * sigma.size() + j;
  }
};
RegionGrid region_membership_grid(int m, const std::vector<double>& omega_grid,
                                  const std::vector<double>& sigma_grid,
                                  double t_max = 20.0, int threads = 1);

}  // namespace cosserat::cone3d
