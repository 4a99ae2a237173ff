// SPDX-License-Identifier: Apache-2.0

#include "cosserat/legendre.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cosserat::legendre {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 7, n = 9 (Godfrey/Press tabulation).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex gamma_lanczos_core(Complex z) {
  // valid for Re z > 0; callers handle reflection
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

Complex gamma(Complex z) {
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * gamma_lanczos_core(1.0 - z));
  }
  return gamma_lanczos_core(z);
}

Complex log_gamma(Complex z) {
  if (z.real() < 0.5) {
    return std::log(kPi / std::sin(kPi * z)) - log_gamma(1.0 - z);
  }
  const Complex zm = z - 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zm + static_cast<double>(i));
  const Complex t = zm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t + std::log(x);
}

Complex digamma(Complex z) {
  // recurrence up to Re z >= 10, then the asymptotic series
  Complex shift(0.0, 0.0);
  while (z.real() < 10.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  static constexpr double kB[7] = {1.0 / 6.0,   -1.0 / 30.0, 1.0 / 42.0,
                                   -1.0 / 30.0, 5.0 / 66.0,  -691.0 / 2730.0,
                                   7.0 / 6.0};
  Complex r = std::log(z) - 0.5 / z;
  const Complex z2 = 1.0 / (z * z);
  Complex t = z2;
  for (int n = 1; n <= 7; ++n) {
    r -= kB[n - 1] / (2.0 * n) * t;
    t *= z2;
  }
  return r + shift;
}

namespace {

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

void check_domain(int m, double x) {
  if (m < 0) throw std::domain_error("order m must be nonnegative");
  if (!(x > -1.0 && x < 1.0))
    throw std::domain_error("Ferrers functions require -1 < x < 1");
}

}  // namespace

SeriesResult legendre_p_series(Complex nu, int m, double x, long max_terms) {
  check_domain(m, x);
  SeriesResult res;
  const double w = 0.5 * (1.0 - x);
  const Complex a = -nu, b = nu + 1.0;
  const double c = 1.0 + m;
  Complex term(1.0, 0.0);
  Complex sum = term;
  int consec = 0;
  long k = 0;
  for (; k < max_terms; ++k) {
    const double kd = static_cast<double>(k);
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * w;
    sum += term;
    if (std::abs(term) < 1e-15 * std::abs(sum)) {
      if (++consec >= 3) break;
    } else {
      consec = 0;
    }
  }
  res.terms = k;
  res.converged = consec >= 3;
  const double pref =
      std::pow((1.0 - x) / (1.0 + x), 0.5 * m) / factorial(m);
  res.value = pref * sum;
  return res;
}

Complex legendre_p(Complex nu, int m, double x) {
  const SeriesResult r = legendre_p_series(nu, m, x);
  if (!r.converged)
    throw std::runtime_error("Legendre series did not converge");
  return r.value;
}

Complex legendre_p_connection(Complex nu, int m, double x) {
  check_domain(m, x);
  const Complex a = -nu, b = nu + 1.0;  // c = a + b + m = 1 + m
  const double u = 0.5 * (1.0 + x);
  const double lnu = std::log(u);
  const double pref =
      std::pow((1.0 - x) / (1.0 + x), 0.5 * m) / factorial(m);
  Complex F;
  if (m == 0) {
    Complex coef(1.0, 0.0), sum(0.0, 0.0);
    Complex p1 = digamma(Complex(1.0, 0.0)), pa = digamma(a), pb = digamma(b);
    for (int n = 0; n < 4000; ++n) {
      const double nd = n;
      const Complex t = coef * (2.0 * p1 - pa - pb - lnu);
      sum += t;
      if (n > 4 && std::abs(t) < 1e-17 * std::abs(sum)) break;
      coef *= (a + nd) * (b + nd) / ((nd + 1.0) * (nd + 1.0)) * u;
      p1 += 1.0 / (nd + 1.0);
      pa += 1.0 / (a + nd);
      pb += 1.0 / (b + nd);
    }
    F = sum * std::exp(-log_gamma(a) - log_gamma(b));
  } else {
    const double md = static_cast<double>(m);
    // finite part: sum_{n<m} (a)_n (b)_n / (n! (1-m)_n) u^n
    Complex s1(0.0, 0.0), coef(1.0, 0.0);
    for (int n = 0; n < m; ++n) {
      s1 += coef;
      if (n + 1 < m) {
        const double nd = n;
        coef *= (a + nd) * (b + nd) / ((nd + 1.0) * (1.0 - md + nd)) * u;
      }
    }
    const Complex c1 =
        std::exp(log_gamma(Complex(md, 0.0)) + log_gamma(Complex(1.0 + md, 0.0)) -
                 log_gamma(a + md) - log_gamma(b + md));
    Complex s2(0.0, 0.0);
    coef = Complex(1.0, 0.0);
    Complex p1 = digamma(Complex(1.0, 0.0));
    Complex p2 = digamma(Complex(md + 1.0, 0.0));
    Complex pa = digamma(a + md);
    Complex pb = digamma(b + md);
    for (int n = 0; n < 4000; ++n) {
      const double nd = n;
      const Complex t = coef * (p1 + p2 - pa - pb - lnu);
      s2 += t;
      if (n > 4 && std::abs(t) < 1e-17 * std::abs(s2)) break;
      coef *= (a + md + nd) * (b + md + nd) / ((nd + 1.0) * (nd + md + 1.0)) * u;
      p1 += 1.0 / (nd + 1.0);
      p2 += 1.0 / (nd + md + 1.0);
      pa += 1.0 / (a + md + nd);
      pb += 1.0 / (b + md + nd);
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const Complex c2 =
        sign * std::exp(-log_gamma(a) - log_gamma(b)) * std::pow(u, m);
    F = c1 * s1 + c2 * s2;
  }
  return pref * F;
}

Complex legendre_p_fast(Complex nu, int m, double x) {
  if (x >= -0.98) return legendre_p(nu, m, x);
  // The connection formula degenerates when nu approaches an integer
  // (1/Gamma poles meet digamma poles); fall back to the series there.
  const double dist_re = std::abs(nu.real() - std::round(nu.real()));
  if (std::abs(nu.imag()) < 1e-8 && dist_re < 1e-8)
    return legendre_p(nu, m, x);
  return legendre_p_connection(nu, m, x);
}

}  // namespace cosserat::legendre
