// SPDX-License-Identifier: Apache-2.0

#include "cosserat/cone3d.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "cosserat/legendre.hpp"
#include "cosserat/mellin2d.hpp"
#include "cosserat/rootfind.hpp"

namespace cosserat::cone3d {

namespace {
constexpr double kPi = std::numbers::pi;

ConeMatrix assemble(double sigma, Complex lambda, int m, double omega,
                    Complex p, Complex q, bool misprint) {
  const double mm = std::abs(m);
  const double c = std::cos(omega);
  const double s2 = std::sin(omega) * std::sin(omega);
  ConeMatrix M;
  M[0][0] = (lambda + 1.0) * q;
  M[0][1] = mm * q;
  M[0][2] = (lambda + 2.0 * sigma - 1.0) * c * p;
  M[1][0] = (lambda + 1.0) * c * q - (lambda + 1.0 - mm) * p;
  M[1][1] = mm * c * q;
  M[1][2] = (lambda + 1.0 + mm) * c * q + (1.0 - 2.0 * sigma) * s2 * p -
            (lambda + 1.0) * c * c * p;
  M[2][0] = -mm * q;
  M[2][1] = (misprint ? (lambda + 1.0) : (lambda + 1.0 - mm)) * c * p -
            (lambda + 1.0) * q;
  M[2][2] = -mm * c * p;
  return M;
}

Complex det3(const ConeMatrix& M) {
  return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
         M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

}  // namespace

void validate_cone(double omega) {
  if (!(omega > 0.0 && omega < kPi))
    throw std::invalid_argument("cone half-opening must lie in (0, pi)");
}

ConeMatrix mellin_matrix(double sigma, Complex lambda, int m, double omega) {
  validate_cone(omega);
  const int mm = std::abs(m);
  const double x = std::cos(omega);
  const Complex p = legendre::legendre_p_fast(lambda, mm, x);
  const Complex q = legendre::legendre_p_fast(lambda + 1.0, mm, x);
  return assemble(sigma, lambda, mm, omega, p, q, false);
}

ConeMatrix mellin_matrix_misprinted(double sigma, Complex lambda, int m,
                                    double omega) {
  validate_cone(omega);
  const int mm = std::abs(m);
  const double x = std::cos(omega);
  const Complex p = legendre::legendre_p_fast(lambda, mm, x);
  const Complex q = legendre::legendre_p_fast(lambda + 1.0, mm, x);
  return assemble(sigma, lambda, mm, omega, p, q, true);
}

Complex mellin_det(double sigma, Complex lambda, int m, double omega) {
  return det3(mellin_matrix(sigma, lambda, m, omega));
}

Complex mellin_det_scaled(double sigma, Complex lambda, int m, double omega) {
  validate_cone(omega);
  const int mm = std::abs(m);
  const double x = std::cos(omega);
  Complex p = legendre::legendre_p_fast(lambda, mm, x);
  Complex q = legendre::legendre_p_fast(lambda + 1.0, mm, x);
  const double scale = std::max({std::abs(p), std::abs(q), 1e-300});
  p /= scale;
  q /= scale;
  return det3(assemble(sigma, lambda, mm, omega, p, q, false));
}

namespace {

// Winding count of the scaled determinant on
// [-1/2-delta, -1/2+delta] x [t_lo, t_hi]; retries with a nudged box when the
// contour grazes a zero.
struct BoxCount {
  int count = 0;
  bool ok = false;
};

BoxCount count_in_box(double sigma, double omega, int m, double t_lo,
                      double t_hi, double delta) {
  auto f = [&](Complex z) { return mellin_det_scaled(sigma, z, m, omega); };
  // phase speed along the line is about 3 omega (three Legendre factors)
  const double step = std::min(0.25, kPi / (2.0 * (3.0 * omega + 1.0)));
  double lo_t = t_lo, hi_t = t_hi, d = delta;
  for (int attempt = 0; attempt < 5; ++attempt) {
    const auto w = rootfind::winding_number(
        f, Complex(-0.5 - d, lo_t), Complex(-0.5 + d, hi_t), step, 18, 1e-13);
    if (w.ok) return {w.winding, true};
    // nudge edges away from a zero on the contour
    d *= 1.6;
    lo_t += (lo_t == 0.0) ? 1e-5 : 0.37e-3 * (attempt + 1);
    hi_t += 0.41e-3 * (attempt + 1);
  }
  return {};
}

}  // namespace

CriticalLineScan critical_line_roots(double sigma, double omega, int m,
                                     double t_max, double delta) {
  validate_cone(omega);
  mellin2d::validate_sigma(sigma);
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");

  CriticalLineScan scan;
  if (mellin2d::boundary_of_theory(sigma)) {
    // sigma in {0, 1/2, 1}: ellipticity fails (at sigma = 1/2 the determinant
    // can vanish identically); no contour work is meaningful.
    scan.status = ScanStatus::BoundaryOfTheory;
    return scan;
  }

  const auto total = count_in_box(sigma, omega, m, 0.0, t_max, delta);
  if (!total.ok) {
    scan.status = ScanStatus::Unresolved;
    return scan;
  }
  scan.winding_count = total.count;
  if (total.count == 0) return scan;

  // Isolate roots by winding-count bisection in t down to short segments,
  // then locate the modulus minimum by a dense sweep plus golden section.
  auto line = [&](double t) {
    return mellin_det_scaled(sigma, Complex(-0.5, t), m, omega);
  };
  auto polish_segment = [&](double a, double b, int mult) {
    const int nscan = 64;
    double tbest = a, fbest = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= nscan; ++i) {
      const double t = a + (b - a) * i / nscan;
      const double v = std::abs(line(t));
      if (v < fbest) {
        fbest = v;
        tbest = t;
      }
    }
    const double w = (b - a) / nscan;
    const double t = rootfind::minimize_abs(line, std::max(a, tbest - w),
                                            std::min(b, tbest + w), 1e-14);
    const double resid = std::abs(line(t));
    for (int k = 0; k < mult; ++k)
      scan.roots.push_back({Complex(-0.5, t), m, RootKind::General, resid});
  };
  struct Seg {
    double a, b;
    int n;
  };
  std::vector<Seg> stack{{0.0, t_max, total.count}};
  int depth_budget = 64;
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    if (s.n == 0) continue;
    const bool narrow = (s.b - s.a) < 0.25;
    if ((s.n == 1 && narrow) || (s.b - s.a) < 1e-9 || depth_budget <= 0) {
      polish_segment(s.a, s.b, s.n);
      continue;
    }
    const double mid = 0.5 * (s.a + s.b);
    const auto left = count_in_box(sigma, omega, m, s.a, mid, delta);
    --depth_budget;
    if (!left.ok) {
      scan.status = ScanStatus::Unresolved;
      continue;
    }
    stack.push_back({s.a, mid, left.count});
    stack.push_back({mid, s.b, s.n - left.count});
  }
  std::sort(scan.roots.begin(), scan.roots.end(),
            [](const ComplexRoot& a, const ComplexRoot& b) {
              return a.lambda.imag() < b.lambda.imag();
            });
  if (static_cast<int>(scan.roots.size()) != total.count)
    scan.status = ScanStatus::Unresolved;
  return scan;
}

RegionGrid region_membership_grid(int m, const std::vector<double>& omega_grid,
                                  const std::vector<double>& sigma_grid,
                                  double t_max, int threads) {
  for (double w : omega_grid) validate_cone(w);
  for (double s : sigma_grid) mellin2d::validate_sigma(s);
  RegionGrid grid;
  grid.m = m;
  grid.omega = omega_grid;
  grid.sigma = sigma_grid;
  const std::size_t n = omega_grid.size() * sigma_grid.size();
  grid.num_roots.assign(n, 0);
  grid.in_region.assign(n, 0);
  grid.unresolved.assign(n, 0);
  grid.min_abs_det.assign(n, std::numeric_limits<double>::quiet_NaN());
  grid.first_root_t.assign(n, std::numeric_limits<double>::quiet_NaN());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= n) return;
      const std::size_t i = k / sigma_grid.size();
      const std::size_t j = k % sigma_grid.size();
      const double w = omega_grid[i];
      const double s = sigma_grid[j];
      const auto scan = critical_line_roots(s, w, m, t_max);
      grid.num_roots[k] = static_cast<int>(scan.roots.size());
      grid.in_region[k] = scan.roots.empty() ? 0 : 1;
      grid.unresolved[k] = scan.status == ScanStatus::Unresolved ? 1 : 0;
      if (!scan.roots.empty())
        grid.first_root_t[k] = scan.roots.front().lambda.imag();
      // coarse diagnostic sweep of |det| along the line
      if (scan.status != ScanStatus::BoundaryOfTheory) {
        double best = std::numeric_limits<double>::infinity();
        const int nt = 160;
        for (int q = 1; q <= nt; ++q) {
          const double t = t_max * q / nt;
          best = std::min(best,
                          std::abs(mellin_det_scaled(s, Complex(-0.5, t), m, w)));
        }
        grid.min_abs_det[k] = best;
      }
    }
  };
  const int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return grid;
}

}  // namespace cosserat::cone3d
