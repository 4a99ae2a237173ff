// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

namespace cosserat::fem {

/// n-point Gauss-Legendre rule on [0, 1]; exact for polynomials of degree
/// 2n - 1.
struct QuadRule {
  std::vector<double> points;
  std::vector<double> weights;
};
QuadRule gauss_legendre(int n);

/// Gauss-Lobatto-Legendre nodes on [0, 1] (p + 1 nodes for degree p),
/// including both endpoints. Used as Lagrange interpolation nodes.
std::vector<double> gll_nodes(int p);

/// One-dimensional Lagrange basis of degree p on prescribed nodes in [0, 1],
/// evaluated through barycentric weights.
class Basis1D {
 public:
  explicit Basis1D(int degree);

  int degree() const { return degree_; }
  const std::vector<double>& nodes() const { return nodes_; }

  /// Values phi_i(x) for all i at one point.
  Eigen::VectorXd values(double x) const;
  /// Derivatives phi_i'(x) for all i at one point.
  Eigen::VectorXd derivatives(double x) const;

 private:
  int degree_;
  std::vector<double> nodes_;
  std::vector<double> bary_;  // barycentric weights
};

}  // namespace cosserat::fem
