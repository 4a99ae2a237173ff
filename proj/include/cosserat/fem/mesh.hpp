// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

namespace cosserat::fem {

/// Tensor-product mesh of a rectangle (1/a x 1) or cuboid (1/a x 1 x 1):
/// strictly increasing breakpoints per axis.
struct Mesh {
  int dim = 2;
  std::array<std::vector<double>, 3> breaks;

  int cells(int axis) const {
    return static_cast<int>(breaks[axis].size()) - 1;
  }
  long num_cells() const {
    long n = 1;
    for (int d = 0; d < dim; ++d) n *= cells(d);
    return n;
  }
  double extent(int axis) const {
    return breaks[axis].back() - breaks[axis].front();
  }
};

/// uniform: cells_per_unit cells across each unit of extent (kept square).
/// explicit counts: per-axis cell counts.
/// corner_refined: per half-axis, `layers` cells shrinking geometrically by
/// `ratio` toward both ends.
struct MeshSpec {
  enum class Kind { Uniform, ExplicitCounts, CornerRefined };
  Kind kind = Kind::Uniform;
  int cells_per_unit = 1;
  std::array<int, 3> counts{1, 1, 1};
  int layers = 6;
  double ratio = 0.5;

  static MeshSpec uniform(int cells_per_unit);
  static MeshSpec explicit_counts(std::array<int, 3> counts);
  static MeshSpec corner_refined(int layers, double ratio);

  std::string describe() const;
};

Mesh build_mesh(const std::array<double, 3>& extents, int dim,
                const MeshSpec& spec);

/// Domain extents used throughout: 1/a x 1 (x 1).
std::array<double, 3> domain_extents(double a, int dim);

}  // namespace cosserat::fem
