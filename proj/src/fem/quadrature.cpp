// SPDX-License-Identifier: Apache-2.0

#include "cosserat/fem/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cosserat::fem {

namespace {

// Legendre P_n(x) and derivative on [-1, 1] by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be >= 1");
  QuadRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, Newton iteration on P_n
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_pair(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const auto [p, dp] = legendre_pair(n, x);
    (void)p;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.points[n - 1 - i] = 0.5 * (x + 1.0);
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

std::vector<double> gll_nodes(int p) {
  if (p < 1) throw std::invalid_argument("degree must be >= 1");
  const int n = p + 1;
  std::vector<double> x(n);
  x[0] = -1.0;
  x[n - 1] = 1.0;
  for (int i = 1; i < n - 1; ++i) {
    // interior GLL nodes are the roots of P'_p; Newton on (1-x^2) P'_p
    double t = std::cos(std::numbers::pi * (p - i) / p);  // ascending guess
    for (int it = 0; it < 100; ++it) {
      const auto [pp, dp] = legendre_pair(p, t);
      // second derivative from the Legendre ODE:
      // (1-x^2) P'' = 2 x P' - p(p+1) P
      const double d2 = (2.0 * t * dp - p * (p + 1.0) * pp) / (1.0 - t * t);
      const double dx = dp / d2;
      t -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    x[i] = t;
  }
  for (double& v : x) v = 0.5 * (v + 1.0);
  x.front() = 0.0;
  x.back() = 1.0;
  return x;
}

Basis1D::Basis1D(int degree) : degree_(degree), nodes_(gll_nodes(degree)) {
  const int n = degree_ + 1;
  bary_.assign(n, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) bary_[i] /= (nodes_[i] - nodes_[j]);
    }
  }
}

Eigen::VectorXd Basis1D::values(double x) const {
  const int n = degree_ + 1;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x == nodes_[i]) {
      v[i] = 1.0;
      return v;
    }
  }
  double l = 1.0;
  for (int i = 0; i < n; ++i) l *= (x - nodes_[i]);
  for (int i = 0; i < n; ++i) v[i] = l * bary_[i] / (x - nodes_[i]);
  return v;
}

Eigen::VectorXd Basis1D::derivatives(double x) const {
  const int n = degree_ + 1;
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  // generic point: differentiate l(x) * w_i / (x - x_i)
  int on_node = -1;
  for (int i = 0; i < n; ++i) {
    if (x == nodes_[i]) on_node = i;
  }
  if (on_node < 0) {
    double l = 1.0, dl = 0.0;
    for (int i = 0; i < n; ++i) {
      dl = dl * (x - nodes_[i]) + l;
      l *= (x - nodes_[i]);
    }
    for (int i = 0; i < n; ++i) {
      const double diff = x - nodes_[i];
      d[i] = bary_[i] * (dl * diff - l) / (diff * diff);
    }
    return d;
  }
  // nodal point: standard differentiation-matrix row
  for (int j = 0; j < n; ++j) {
    if (j == on_node) continue;
    d[j] = (bary_[j] / bary_[on_node]) / (nodes_[on_node] - nodes_[j]);
    d[on_node] -= d[j];
  }
  return d;
}

}  // namespace cosserat::fem
