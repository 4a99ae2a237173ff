// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace cosserat {

using Complex = std::complex<double>;

/// Closed sub-interval of [0,1] contributed to the essential spectrum.
struct SpectrumInterval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool degenerate(double tol = 0.0) const { return hi - lo <= tol; }
  bool contains(double s) const { return lo <= s && s <= hi; }
  /// Strict interior membership with a guard band around both endpoints.
  bool strictly_contains(double s, double band = 0.0) const {
    return s > lo + band && s < hi - band;
  }
};

enum class RootKind { PurelyImaginary, PositiveReal, General };

/// Root of a corner characteristic function with branch/azimuthal metadata.
struct ComplexRoot {
  Complex lambda{0.0, 0.0};
  int branch = +1;    // epsilon sign for 2D corners; azimuthal mode m for cones
  RootKind kind = RootKind::General;
  double residual = 0.0;  // |char| or |det| after polishing
};

enum class ScanStatus { Resolved, Unresolved, BoundaryOfTheory };

inline const char* to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::Resolved: return "resolved";
    case ScanStatus::Unresolved: return "unresolved";
    case ScanStatus::BoundaryOfTheory: return "boundary-of-theory";
  }
  return "?";
}

inline const char* to_string(RootKind k) {
  switch (k) {
    case RootKind::PurelyImaginary: return "purely-imaginary";
    case RootKind::PositiveReal: return "positive-real";
    case RootKind::General: return "general";
  }
  return "?";
}

}  // namespace cosserat
