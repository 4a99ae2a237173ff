// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <array>
#include <memory>

#include "cosserat/fem/mesh.hpp"

namespace cosserat::fem {

/// Velocity/pressure tensor degrees: Q_{deg_u} with zero trace for each
/// velocity component, continuous Q_{deg_p} without boundary condition for
/// the pressure.
struct SpacePair {
  int deg_u = 2;
  int deg_p = 1;
};
void validate_spaces(const SpacePair& s);

using SparseMat = Eigen::SparseMatrix<double>;
using Factorization = Eigen::SimplicialLDLT<SparseMat>;

/// Assembled matrices of the discrete Stokes Schur complement
///   S = sum_k B_k R^{-1} B_k^T:
/// R the scalar stiffness matrix on interior velocity dofs, B_k the
/// divergence couplings (pressure rows, velocity columns), M_p the pressure
/// mass matrix. Factorizations of R and M_p are computed once here.
struct OperatorSet {
  Mesh mesh;
  SpacePair spaces;
  int dim = 2;
  long ndof_u = 0;  // interior scalar velocity dofs (per component)
  long ndof_p = 0;
  SparseMat R;
  SparseMat Mp;
  std::array<SparseMat, 3> B;
  std::shared_ptr<Factorization> R_solver;
  std::shared_ptr<Factorization> Mp_solver;
};

OperatorSet assemble(const Mesh& mesh, const SpacePair& spaces);

/// Action of the Schur complement on a pressure vector.
Eigen::VectorXd schur_apply(const OperatorSet& ops, const Eigen::VectorXd& q);

/// Velocity lift realizing the Schur quotient for a pressure vector:
/// u_k = R^{-1} B_k^T q, one interior scalar field per component.
std::array<Eigen::VectorXd, 3> velocity_lift(const OperatorSet& ops,
                                             const Eigen::VectorXd& q);

/// Solve (-Lap + kappa) psi = 1 on H^1_0 of a box prod (0, lengths[d]) with
/// Q_degree elements, cells_per_axis cells per axis. Returns
/// (integral of psi, measure of the box). Supports 1 or 2 dimensions; used
/// for channel cross-sections.
std::pair<double, double> reaction_unit_solve(
    const std::vector<double>& lengths, int cells_per_axis, int degree,
    double kappa);

}  // namespace cosserat::fem
