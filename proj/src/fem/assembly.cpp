// SPDX-License-Identifier: Apache-2.0

#include "cosserat/fem/assembly.hpp"

#include <stdexcept>
#include <vector>

#include "cosserat/fem/quadrature.hpp"

namespace cosserat::fem {

void validate_spaces(const SpacePair& s) {
  if (s.deg_u < 2) throw std::invalid_argument("velocity degree must be >= 2");
  if (s.deg_p < 1) throw std::invalid_argument("pressure degree must be >= 1");
  if (s.deg_p >= s.deg_u)
    throw std::invalid_argument("pressure degree must be below velocity degree");
}

namespace {

// Reference-cell 1D matrices; on a cell of width h they scale as
// K/h, M*h, G (scale free), C*h, Mp*h.
struct RefMats {
  Eigen::MatrixXd K;   // u' u'
  Eigen::MatrixXd M;   // u u
  Eigen::MatrixXd G;   // p u'
  Eigen::MatrixXd C;   // p u
  Eigen::MatrixXd Mp;  // p p
};

RefMats reference_matrices(const SpacePair& s) {
  const Basis1D bu(s.deg_u), bp(s.deg_p);
  const QuadRule quad = gauss_legendre(s.deg_u + 1);
  const int nu = s.deg_u + 1, np = s.deg_p + 1, nq = static_cast<int>(quad.points.size());
  Eigen::MatrixXd U(nq, nu), dU(nq, nu), P(nq, np);
  for (int q = 0; q < nq; ++q) {
    U.row(q) = bu.values(quad.points[q]).transpose();
    dU.row(q) = bu.derivatives(quad.points[q]).transpose();
    P.row(q) = bp.values(quad.points[q]).transpose();
  }
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(quad.weights.data(), nq);
  RefMats r;
  r.K = dU.transpose() * w.asDiagonal() * dU;
  r.M = U.transpose() * w.asDiagonal() * U;
  r.G = P.transpose() * w.asDiagonal() * dU;
  r.C = P.transpose() * w.asDiagonal() * U;
  r.Mp = P.transpose() * w.asDiagonal() * P;
  return r;
}

struct AxisMaps {
  int cells = 0;
  int nu_total = 0;   // 1D velocity nodes including the boundary pair
  int np_total = 0;   // 1D pressure nodes
  std::vector<double> h;
};

AxisMaps axis_maps(const std::vector<double>& breaks, const SpacePair& s) {
  AxisMaps a;
  a.cells = static_cast<int>(breaks.size()) - 1;
  a.nu_total = a.cells * s.deg_u + 1;
  a.np_total = a.cells * s.deg_p + 1;
  a.h.resize(a.cells);
  for (int c = 0; c < a.cells; ++c) {
    a.h[c] = breaks[c + 1] - breaks[c];
    if (!(a.h[c] > 0.0))
      throw std::invalid_argument("mesh breakpoints must be strictly increasing");
  }
  return a;
}

}  // namespace

OperatorSet assemble(const Mesh& mesh, const SpacePair& spaces) {
  validate_spaces(spaces);
  const int dim = mesh.dim;
  const RefMats ref = reference_matrices(spaces);
  const int nu = spaces.deg_u + 1, np = spaces.deg_p + 1;

  std::array<AxisMaps, 3> ax;
  for (int d = 0; d < dim; ++d) ax[d] = axis_maps(mesh.breaks[d], spaces);

  OperatorSet ops;
  ops.mesh = mesh;
  ops.spaces = spaces;
  ops.dim = dim;

  // interior velocity numbering: strip the first/last node per axis
  std::array<long, 3> nui{1, 1, 1}, npn{1, 1, 1};
  for (int d = 0; d < dim; ++d) {
    nui[d] = ax[d].nu_total - 2;
    npn[d] = ax[d].np_total;
    if (nui[d] < 1)
      throw std::invalid_argument("mesh too coarse: no interior velocity dofs");
  }
  ops.ndof_u = 1;
  ops.ndof_p = 1;
  for (int d = 0; d < dim; ++d) {
    ops.ndof_u *= nui[d];
    ops.ndof_p *= npn[d];
  }

  auto u_interior = [&](int d, int gid) -> long {
    return (gid >= 1 && gid <= ax[d].nu_total - 2) ? gid - 1 : -1;
  };

  std::vector<Eigen::Triplet<double>> tR, tMp;
  std::array<std::vector<Eigen::Triplet<double>>, 3> tB;
  const long ncells = mesh.num_cells();
  tR.reserve(static_cast<std::size_t>(ncells) * nu * nu * (dim == 2 ? nu * nu / 4 : 8));
  tMp.reserve(static_cast<std::size_t>(ncells) * np * np * (dim == 2 ? np * np : 8));

  std::array<int, 3> cell{0, 0, 0};
  std::array<int, 3> cmax{1, 1, 1};
  for (int d = 0; d < dim; ++d) cmax[d] = ax[d].cells;

  // local index helpers over tensor nodes
  const int nloc_u = (dim == 2) ? nu * nu : nu * nu * nu;
  const int nloc_p = (dim == 2) ? np * np : np * np * np;
  std::vector<std::array<int, 3>> uloc(nloc_u), ploc(nloc_p);
  for (int l = 0; l < nloc_u; ++l) {
    uloc[l] = {l % nu, (l / nu) % nu, (dim == 3) ? l / (nu * nu) : 0};
  }
  for (int l = 0; l < nloc_p; ++l) {
    ploc[l] = {l % np, (l / np) % np, (dim == 3) ? l / (np * np) : 0};
  }

  for (long ce = 0; ce < ncells; ++ce) {
    long rest = ce;
    for (int d = 0; d < dim; ++d) {
      cell[d] = static_cast<int>(rest % cmax[d]);
      rest /= cmax[d];
    }
    std::array<double, 3> h{1.0, 1.0, 1.0};
    for (int d = 0; d < dim; ++d) h[d] = ax[d].h[cell[d]];

    // per-axis scaled 1D matrices for this cell
    std::array<Eigen::MatrixXd, 3> K, M, G, C, MP;
    for (int d = 0; d < dim; ++d) {
      K[d] = ref.K / h[d];
      M[d] = ref.M * h[d];
      G[d] = ref.G;
      C[d] = ref.C * h[d];
      MP[d] = ref.Mp * h[d];
    }

    // global ids per axis/local node
    std::array<std::vector<long>, 3> ug, pg;
    for (int d = 0; d < dim; ++d) {
      ug[d].resize(nu);
      pg[d].resize(np);
      for (int i = 0; i < nu; ++i)
        ug[d][i] = u_interior(d, cell[d] * spaces.deg_u + i);
      for (int i = 0; i < np; ++i) pg[d][i] = cell[d] * spaces.deg_p + i;
    }

    auto uglobal = [&](const std::array<int, 3>& l) -> long {
      long idx = 0, stride = 1;
      for (int d = 0; d < dim; ++d) {
        const long g = ug[d][l[d]];
        if (g < 0) return -1;
        idx += g * stride;
        stride *= nui[d];
      }
      return idx;
    };
    auto pglobal = [&](const std::array<int, 3>& l) -> long {
      long idx = 0, stride = 1;
      for (int d = 0; d < dim; ++d) {
        idx += pg[d][l[d]] * stride;
        stride *= npn[d];
      }
      return idx;
    };

    for (int li = 0; li < nloc_u; ++li) {
      const long gi = uglobal(uloc[li]);
      if (gi < 0) continue;
      for (int lj = 0; lj < nloc_u; ++lj) {
        const long gj = uglobal(uloc[lj]);
        if (gj < 0) continue;
        double v = 0.0;
        for (int dd = 0; dd < dim; ++dd) {
          double prod = 1.0;
          for (int d = 0; d < dim; ++d) {
            const auto& mat = (d == dd) ? K[d] : M[d];
            prod *= mat(uloc[li][d], uloc[lj][d]);
          }
          v += prod;
        }
        tR.emplace_back(gi, gj, v);
      }
    }
    for (int li = 0; li < nloc_p; ++li) {
      const long gi = pglobal(ploc[li]);
      for (int lj = 0; lj < nloc_p; ++lj) {
        const long gj = pglobal(ploc[lj]);
        double v = 1.0;
        for (int d = 0; d < dim; ++d) v *= MP[d](ploc[li][d], ploc[lj][d]);
        tMp.emplace_back(gi, gj, v);
      }
      for (int lj = 0; lj < nloc_u; ++lj) {
        const long gj = uglobal(uloc[lj]);
        if (gj < 0) continue;
        for (int dd = 0; dd < dim; ++dd) {
          double v = 1.0;
          for (int d = 0; d < dim; ++d) {
            const auto& mat = (d == dd) ? G[d] : C[d];
            v *= mat(ploc[li][d], uloc[lj][d]);
          }
          tB[dd].emplace_back(gi, gj, v);
        }
      }
    }
  }

  ops.R.resize(ops.ndof_u, ops.ndof_u);
  ops.R.setFromTriplets(tR.begin(), tR.end());
  ops.Mp.resize(ops.ndof_p, ops.ndof_p);
  ops.Mp.setFromTriplets(tMp.begin(), tMp.end());
  for (int d = 0; d < dim; ++d) {
    ops.B[d].resize(ops.ndof_p, ops.ndof_u);
    ops.B[d].setFromTriplets(tB[d].begin(), tB[d].end());
  }

  ops.R_solver = std::make_shared<Factorization>();
  ops.R_solver->compute(ops.R);
  if (ops.R_solver->info() != Eigen::Success)
    throw std::runtime_error("stiffness factorization failed");
  ops.Mp_solver = std::make_shared<Factorization>();
  ops.Mp_solver->compute(ops.Mp);
  if (ops.Mp_solver->info() != Eigen::Success)
    throw std::runtime_error("pressure mass factorization failed");
  return ops;
}

Eigen::VectorXd schur_apply(const OperatorSet& ops, const Eigen::VectorXd& q) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(ops.ndof_p);
  for (int d = 0; d < ops.dim; ++d) {
    const Eigen::VectorXd rhs = ops.B[d].transpose() * q;
    out += ops.B[d] * ops.R_solver->solve(rhs);
  }
  return out;
}

std::array<Eigen::VectorXd, 3> velocity_lift(const OperatorSet& ops,
                                             const Eigen::VectorXd& q) {
  std::array<Eigen::VectorXd, 3> u;
  for (int d = 0; d < ops.dim; ++d)
    u[d] = ops.R_solver->solve(ops.B[d].transpose() * q);
  return u;
}

std::pair<double, double> reaction_unit_solve(
    const std::vector<double>& lengths, int cells_per_axis, int degree,
    double kappa) {
  const int dim = static_cast<int>(lengths.size());
  if (dim < 1 || dim > 2)
    throw std::invalid_argument("cross-section solver supports 1 or 2 dims");
  if (cells_per_axis < 1 || degree < 1)
    throw std::invalid_argument("invalid discretization parameters");

  const Basis1D basis(degree);
  const QuadRule quad = gauss_legendre(degree + 1);
  const int nb = degree + 1, nq = static_cast<int>(quad.points.size());
  Eigen::MatrixXd U(nq, nb), dU(nq, nb);
  for (int q = 0; q < nq; ++q) {
    U.row(q) = basis.values(quad.points[q]).transpose();
    dU.row(q) = basis.derivatives(quad.points[q]).transpose();
  }
  const Eigen::VectorXd w =
      Eigen::Map<const Eigen::VectorXd>(quad.weights.data(), nq);
  const Eigen::MatrixXd Kref = dU.transpose() * w.asDiagonal() * dU;
  const Eigen::MatrixXd Mref = U.transpose() * w.asDiagonal() * U;
  const Eigen::VectorXd Fref = U.transpose() * w;  // integral of each phi

  // 1D interior operators per axis
  std::vector<Eigen::MatrixXd> K1(dim), M1(dim);
  std::vector<Eigen::VectorXd> F1(dim);
  std::vector<long> ni(dim);
  double measure = 1.0;
  for (int d = 0; d < dim; ++d) {
    const double h = lengths[d] / cells_per_axis;
    const long ntot = static_cast<long>(cells_per_axis) * degree + 1;
    ni[d] = ntot - 2;
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(ntot, ntot), M = K;
    Eigen::VectorXd F = Eigen::VectorXd::Zero(ntot);
    for (int c = 0; c < cells_per_axis; ++c) {
      for (int i = 0; i < nb; ++i) {
        F[c * degree + i] += Fref[i] * h;
        for (int j = 0; j < nb; ++j) {
          K(c * degree + i, c * degree + j) += Kref(i, j) / h;
          M(c * degree + i, c * degree + j) += Mref(i, j) * h;
        }
      }
    }
    K1[d] = K.block(1, 1, ni[d], ni[d]);
    M1[d] = M.block(1, 1, ni[d], ni[d]);
    F1[d] = F.segment(1, ni[d]);
    measure *= lengths[d];
  }

  if (dim == 1) {
    Eigen::MatrixXd A = K1[0] + kappa * M1[0];
    const Eigen::VectorXd psi = A.ldlt().solve(F1[0]);
    return {F1[0].dot(psi), measure};
  }
  // dim == 2: A = K1 (x) M2 + M1 (x) K2 + kappa M1 (x) M2, F = F1 (x) F2
  const long n0 = ni[0], n1 = ni[1];
  Eigen::MatrixXd A(n0 * n1, n0 * n1);
  for (long i1 = 0; i1 < n1; ++i1)
    for (long i0 = 0; i0 < n0; ++i0)
      for (long j1 = 0; j1 < n1; ++j1)
        for (long j0 = 0; j0 < n0; ++j0)
          A(i0 + n0 * i1, j0 + n0 * j1) = K1[0](i0, j0) * M1[1](i1, j1) +
                                          M1[0](i0, j0) * K1[1](i1, j1) +
                                          kappa * M1[0](i0, j0) * M1[1](i1, j1);
  Eigen::VectorXd F(n0 * n1);
  for (long i1 = 0; i1 < n1; ++i1)
    for (long i0 = 0; i0 < n0; ++i0) F[i0 + n0 * i1] = F1[0][i0] * F1[1][i1];
  const Eigen::VectorXd psi = A.ldlt().solve(F);
  return {F.dot(psi), measure};
}

}  // namespace cosserat::fem
