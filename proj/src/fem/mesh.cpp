// SPDX-License-Identifier: Apache-2.0

#include "cosserat/fem/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace cosserat::fem {

MeshSpec MeshSpec::uniform(int cells_per_unit) {
  if (cells_per_unit < 1)
    throw std::invalid_argument("cells_per_unit must be >= 1");
  MeshSpec s;
  s.kind = Kind::Uniform;
  s.cells_per_unit = cells_per_unit;
  return s;
}

MeshSpec MeshSpec::explicit_counts(std::array<int, 3> counts) {
  MeshSpec s;
  s.kind = Kind::ExplicitCounts;
  s.counts = counts;
  return s;
}

MeshSpec MeshSpec::corner_refined(int layers, double ratio) {
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  if (!(ratio > 0.0 && ratio < 1.0))
    throw std::invalid_argument("refinement ratio must lie in (0, 1)");
  MeshSpec s;
  s.kind = Kind::CornerRefined;
  s.layers = layers;
  s.ratio = ratio;
  return s;
}

std::string MeshSpec::describe() const {
  switch (kind) {
    case Kind::Uniform:
      return "uniform:" + std::to_string(cells_per_unit);
    case Kind::ExplicitCounts:
      return "counts:" + std::to_string(counts[0]) + "x" +
             std::to_string(counts[1]) + "x" + std::to_string(counts[2]);
    case Kind::CornerRefined:
      return "refined:" + std::to_string(layers) + "," + std::to_string(ratio);
  }
  return "?";
}

namespace {

std::vector<double> uniform_axis(double extent, int n) {
  std::vector<double> b(n + 1);
  for (int i = 0; i <= n; ++i) b[i] = extent * i / n;
  b.back() = extent;
  return b;
}

// Geometric grading toward both ends: per half-axis, `layers` cells with
// widths proportional to ratio^(layers-1), ..., ratio, 1 from the boundary
// inward.
std::vector<double> refined_axis(double extent, int layers, double ratio) {
  if (layers == 1) return uniform_axis(extent, 2);
  std::vector<double> widths(layers);
  double sum = 0.0;
  for (int i = 0; i < layers; ++i) {
    widths[i] = std::pow(ratio, layers - 1 - i);  // boundary-first
    sum += widths[i];
  }
  const double half = 0.5 * extent;
  std::vector<double> b;
  b.reserve(2 * layers + 1);
  b.push_back(0.0);
  double x = 0.0;
  for (int i = 0; i < layers; ++i) {
    x += widths[i] * half / sum;
    b.push_back(x);
  }
  b.back() = half;  // exact midpoint
  for (int i = layers - 1; i >= 0; --i) {
    b.push_back(extent - b[i]);
  }
  b.back() = extent;
  return b;
}

}  // namespace

std::array<double, 3> domain_extents(double a, int dim) {
  if (!(a > 0.0 && a <= 1.0))
    throw std::invalid_argument("aspect parameter a must lie in (0, 1]");
  if (dim == 2) return {1.0 / a, 1.0, 0.0};
  if (dim == 3) return {1.0 / a, 1.0, 1.0};
  throw std::invalid_argument("dimension must be 2 or 3");
}

Mesh build_mesh(const std::array<double, 3>& extents, int dim,
                const MeshSpec& spec) {
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("dimension must be 2 or 3");
  Mesh mesh;
  mesh.dim = dim;
  for (int d = 0; d < dim; ++d) {
    const double ext = extents[d];
    if (!(ext > 0.0)) throw std::invalid_argument("extents must be positive");
    switch (spec.kind) {
      case MeshSpec::Kind::Uniform: {
        const int n = std::max(
            1, static_cast<int>(std::lround(ext * spec.cells_per_unit)));
        mesh.breaks[d] = uniform_axis(ext, n);
        break;
      }
      case MeshSpec::Kind::ExplicitCounts:
        if (spec.counts[d] < 1)
          throw std::invalid_argument("cell counts must be >= 1");
        mesh.breaks[d] = uniform_axis(ext, spec.counts[d]);
        break;
      case MeshSpec::Kind::CornerRefined:
        mesh.breaks[d] = refined_axis(ext, spec.layers, spec.ratio);
        break;
    }
  }
  return mesh;
}

}  // namespace cosserat::fem
