// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

namespace cosserat::legendre {

using Complex = std::complex<double>;

/// Complex gamma function, Lanczos approximation (g = 7, 9 coefficients),
/// with reflection for Re z < 1/2. Relative accuracy about 1e-13.
Complex gamma(Complex z);
Complex log_gamma(Complex z);

/// Complex digamma via recurrence and the asymptotic Bernoulli series.
Complex digamma(Complex z);

/// Ferrers function of the first kind with negative integer order,
///   P^{-m}_nu(x) = (1/Gamma(1+m)) ((1-x)/(1+x))^{m/2}
///                  2F1(-nu, nu+1; 1+m; (1-x)/2),
/// for -1 < x < 1, m >= 0 and complex degree nu.
struct SeriesResult {
  Complex value{0.0, 0.0};
  bool converged = false;
  long terms = 0;
};

/// Direct hypergeometric series, truncated when the term magnitude stays
/// below 1e-15 of the partial sum for 3 consecutive terms.
SeriesResult legendre_p_series(Complex nu, int m, double x,
                               long max_terms = 2'000'000);

/// P^{-m}_nu(x); throws std::domain_error for |x| >= 1 or m < 0, and
/// std::runtime_error if the series fails to converge within the term budget.
Complex legendre_p(Complex nu, int m, double x);

/// Same function through the hypergeometric connection formula at argument
/// (1+x)/2 (log case, integer parameter difference). Accurate and cheap for
/// x close to -1; loses digits as x moves away from -1 when |Im nu| is large.
Complex legendre_p_connection(Complex nu, int m, double x);

/// Evaluation used by determinant scans: direct series for x >= -0.98,
/// connection formula closer to -1 (where the series needs 10^4..10^6 terms).
Complex legendre_p_fast(Complex nu, int m, double x);

}  // namespace cosserat::legendre
