// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "cosserat/fem/eigensolver.hpp"

namespace cosserat::fem {

/// Convergence data over a family of uniformly refined meshes with
/// cells_per_unit = 2^n for the listed levels n.
struct ConvergenceStudy {
  std::vector<int> levels;
  std::vector<long> cells;                  // per level
  std::vector<std::vector<double>> sigma;   // [level][j]
  std::vector<double> rate;                 // per j, from the last three levels
  std::vector<bool> rate_reliable;          // monotone differences observed
  std::vector<double> extrapolated;         // Richardson with the fitted rate
};

/// Rate from three consecutive values sigma(n-1), sigma(n), sigma(n+1) under
/// the model sigma(n) = sigma* + C 2^(-r n).
double fitted_rate(double s0, double s1, double s2);

/// Richardson extrapolation of the last two values given a rate.
double richardson(double s_coarse, double s_fine, double rate);

ConvergenceStudy convergence_study(const std::array<double, 3>& extents,
                                   int dim, const SpacePair& spaces,
                                   const std::vector<int>& levels, int k,
                                   const EigOptions& opts = {});

/// Pressure (and lifted velocity) samples of one eigenvector on a uniform
/// sample grid; columns x, y[, z], p, ux, uy[, uz].
struct FieldSamples {
  int dim = 2;
  std::array<int, 3> shape{0, 0, 0};
  std::vector<std::array<double, 3>> points;
  std::vector<double> pressure;
  std::vector<std::array<double, 3>> velocity;
};
FieldSamples export_eigenfunction(const OperatorSet& ops,
                                  const Eigen::VectorXd& q,
                                  std::array<int, 3> samples_per_axis,
                                  bool with_velocity = true);

/// Point evaluation of a pressure coefficient vector.
double eval_pressure(const OperatorSet& ops, const Eigen::VectorXd& q,
                     const std::array<double, 3>& x);

}  // namespace cosserat::fem
