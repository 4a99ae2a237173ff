// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cosserat/cone3d.hpp"
#include "cosserat/rootfind.hpp"

using namespace cosserat;
using namespace cosserat::cone3d;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("cone matrix: concrete values at sigma=1/2, lambda=1, m=0, omega=pi/3") {
  // closed forms P^0_1(x) = x and P^0_2(x) = (3x^2-1)/2 at x = 1/2
  const auto M = mellin_matrix(0.5, {1.0, 0.0}, 0, kPi / 3);
  const double expect[3][3] = {{-0.25, 0.0, 0.25},
                               {-1.125, 0.0, -0.375},
                               {0.0, 0.75, 0.0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(M[i][j].real() - expect[i][j]) < 1e-13);
      CHECK(std::abs(M[i][j].imag()) < 1e-13);
    }
  CHECK(std::abs(mellin_det(0.5, {1.0, 0.0}, 0, kPi / 3) - Complex(-0.28125, 0.0)) < 1e-13);
}

TEST_CASE("m = 0 kills the m-carrying entries and the det reduces to a cofactor") {
  const Complex lam(-0.5, 1.3);
  const auto M = mellin_matrix(0.3, lam, 0, 1.1);
  CHECK(std::abs(M[2][0]) == 0.0);
  CHECK(std::abs(M[2][2]) == 0.0);
  CHECK(std::abs(M[0][1]) == 0.0);
  CHECK(std::abs(M[1][1]) == 0.0);
  const Complex det = mellin_det(0.3, lam, 0, 1.1);
  const Complex cof = -M[2][1] * (M[0][0] * M[1][2] - M[0][2] * M[1][0]);
  CHECK(std::abs(det - cof) < 1e-13 * std::abs(cof));
}

TEST_CASE("determinant conjugate symmetry and m <-> -m equality") {
  for (int m : {0, 1, 2}) {
    for (double w : {0.6, kPi / 2, 2.6}) {
      const Complex lam(-0.5, 0.7);
      const Complex a = mellin_det(0.4, std::conj(lam), m, w);
      const Complex b = std::conj(mellin_det(0.4, lam, m, w));
      CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(b)));
    }
  }
  for (double w : {0.8, 2.0}) {
    const Complex lam(-0.5, 1.9);
    const Complex d1 = mellin_det(0.7, lam, 1, w);
    const Complex d2 = mellin_det(0.7, lam, -1, w);
    CHECK(std::abs(d1 - d2) <= 1e-12 * std::abs(d1));
  }
}

TEST_CASE("misprint regression: the corrected (3,2) entry changes the m=1 determinant") {
  const Complex lam(-0.5, 1.3);
  const double sigma = 0.3, w = 2.0;
  const auto good = mellin_matrix(sigma, lam, 1, w);
  const auto bad = mellin_matrix_misprinted(sigma, lam, 1, w);
  auto det3 = [](const ConeMatrix& M) {
    return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
           M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
  };
  const Complex dg = det3(good), db = det3(bad);
  CHECK(std::abs(dg - db) > 1e-3 * std::abs(dg));
  // frozen reference for the corrected determinant (independent evaluation)
  CHECK(std::abs(dg - Complex(13.796563, 38.160706)) < 1e-4);
  // for m = 0 the two variants coincide
  const Complex v0 = mellin_det(sigma, lam, 0, w);
  const Complex v0m = det3(mellin_matrix_misprinted(sigma, lam, 0, w));
  CHECK(std::abs(v0 - v0m) == 0.0);
}

TEST_CASE("scaled determinant preserves phase and zeros") {
  const double sigma = 0.3, w = kPi / 3;
  for (double t : {0.4, 1.1, 3.0, 9.0}) {
    const Complex lam(-0.5, t);
    const Complex raw = mellin_det(sigma, lam, 0, w);
    const Complex scl = mellin_det_scaled(sigma, lam, 0, w);
    // same phase (ratio is real positive)
    const Complex ratio = raw / scl;
    CHECK(ratio.real() > 0.0);
    CHECK(std::abs(ratio.imag()) < 1e-9 * std::abs(ratio));
  }
}

TEST_CASE("critical line roots: frozen references") {
  // omega = 60 deg, sigma = 0.3, m = 0: root at t = 0.79790508710986
  {
    const auto scan = critical_line_roots(0.3, kPi / 3, 0, 8.0);
    CHECK(scan.status == ScanStatus::Resolved);
    REQUIRE(scan.roots.size() == 1);
    CHECK(scan.roots[0].lambda.real() == -0.5);
    CHECK(scan.roots[0].lambda.imag() == doctest::Approx(0.79790508710986).epsilon(1e-7));
    CHECK(scan.roots[0].residual < 1e-9);
    CHECK(scan.winding_count == 1);
  }
  // omega = 30 deg, sigma = 0.1, m = 0: root at t = 0.96910903397552
  {
    const auto scan = critical_line_roots(0.1, kPi / 6, 0, 8.0);
    REQUIRE(scan.roots.size() == 1);
    CHECK(scan.roots[0].lambda.imag() == doctest::Approx(0.96910903397552).epsilon(1e-7));
    CHECK(scan.roots[0].residual < 1e-9);
  }
  // outside the region: no roots, resolved
  {
    const auto scan = critical_line_roots(0.3, 170.0 * kPi / 180.0, 0, 8.0);
    CHECK(scan.status == ScanStatus::Resolved);
    CHECK(scan.roots.empty());
  }
  // sigma = 1/2 short-circuits (the determinant can vanish identically)
  {
    const auto scan = critical_line_roots(0.5, kPi / 2, 0, 8.0);
    CHECK(scan.status == ScanStatus::BoundaryOfTheory);
    CHECK(scan.roots.empty());
  }
}

TEST_CASE("winding count equals the number of polished roots") {
  for (double w : {kPi / 6, kPi / 3}) {
    for (double sigma : {0.1, 0.3, 0.8}) {
      const auto scan = critical_line_roots(sigma, w, 0, 10.0);
      if (scan.status != ScanStatus::Resolved) continue;
      CHECK(static_cast<int>(scan.roots.size()) == scan.winding_count);
      for (const auto& r : scan.roots)
        CHECK(std::abs(mellin_det_scaled(sigma, r.lambda, 0, w)) < 1e-9);
    }
  }
}

TEST_CASE("membership grid smoke: R^1 inside R^0, asymmetry about 1/2") {
  std::vector<double> omegas, sigmas;
  for (int i = 1; i <= 9; ++i) omegas.push_back(i * kPi / 10.0);
  for (int j = 0; j <= 10; ++j) sigmas.push_back(j / 10.0);
  const auto g0 = region_membership_grid(0, omegas, sigmas, 12.0, 2);
  const auto g1 = region_membership_grid(1, omegas, sigmas, 12.0, 2);
  bool r0_nonempty = false, asymmetric = false;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    for (std::size_t j = 0; j < sigmas.size(); ++j) {
      const auto k = g0.index(i, j);
      if (g0.unresolved[k] || g1.unresolved[k]) continue;
      if (g1.in_region[k]) CHECK(g0.in_region[k]);  // inclusion
      if (g0.in_region[k]) r0_nonempty = true;
      const auto kr = g0.index(i, sigmas.size() - 1 - j);
      if (!g0.unresolved[kr] && g0.in_region[k] != g0.in_region[kr])
        asymmetric = true;
    }
  }
  CHECK(r0_nonempty);
  CHECK(asymmetric);
}
