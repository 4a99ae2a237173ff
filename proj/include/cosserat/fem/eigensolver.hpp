// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "cosserat/fem/assembly.hpp"

namespace cosserat::fem {

struct EigOptions {
  int k = 6;                  // nonzero eigenvalues wanted
  double tol = 1e-8;          // ||S q - sigma Mp q|| <= tol ||Mp q||
  double kernel_tol = 1e-10;  // Ritz values below this count as kernel
  std::uint64_t seed = 20140110;
  int max_subspace = 400;     // Lanczos steps per restart
  int max_restarts = 8;
};

struct EigPair {
  int index = 0;       // 1-based, ascending among nonzero eigenvalues
  double sigma = 0.0;
  Eigen::VectorXd q;   // Mp-orthonormal pressure eigenvector
  double residual = 0.0;
};

struct EigReport {
  std::vector<EigPair> eigs;  // ascending
  int kernel_dim = 0;         // constants plus any spurious zero modes
  bool converged = true;      // false when k pairs could not be certified
  int iterations = 0;         // total Lanczos steps
  long ndof_u = 0;
  long ndof_p = 0;
};

/// Smallest nonzero eigenvalues of the generalized problem
/// S q = sigma M_p q on the M_p-orthogonal complement of constants.
/// Lanczos iteration in the M_p inner product with full
/// reorthogonalization; the operator is touched only through schur_apply
/// and M_p solves. Deterministic for a fixed seed. Zero modes
/// (sigma < kernel_tol) are reported as discrete kernel, not as eigenvalues.
EigReport cosserat_eigs(const OperatorSet& ops, const EigOptions& opts = {});

}  // namespace cosserat::fem
