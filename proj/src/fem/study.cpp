// SPDX-License-Identifier: Apache-2.0

#include "cosserat/fem/study.hpp"

#include <cmath>
#include <stdexcept>

#include "cosserat/fem/quadrature.hpp"

namespace cosserat::fem {

double fitted_rate(double s0, double s1, double s2) {
  const double d1 = s0 - s1, d2 = s1 - s2;
  if (d2 == 0.0 || d1 / d2 <= 0.0)
    return std::numeric_limits<double>::quiet_NaN();
  return std::log2(d1 / d2);
}

double richardson(double s_coarse, double s_fine, double rate) {
  const double rho = std::exp2(-rate);
  return s_fine - (s_coarse - s_fine) * rho / (1.0 - rho);
}

ConvergenceStudy convergence_study(const std::array<double, 3>& extents,
                                   int dim, const SpacePair& spaces,
                                   const std::vector<int>& levels, int k,
                                   const EigOptions& opts) {
  if (levels.size() < 3)
    throw std::invalid_argument("convergence study needs at least 3 levels");
  ConvergenceStudy st;
  st.levels = levels;
  for (int n : levels) {
    const Mesh mesh = build_mesh(extents, dim, MeshSpec::uniform(1 << n));
    const OperatorSet ops = assemble(mesh, spaces);
    EigOptions local = opts;
    local.k = k;
    const EigReport rep = cosserat_eigs(ops, local);
    if (!rep.converged)
      throw std::runtime_error("eigensolver did not converge at level " +
                               std::to_string(n));
    std::vector<double> s;
    s.reserve(k);
    for (const auto& e : rep.eigs) s.push_back(e.sigma);
    st.sigma.push_back(std::move(s));
    st.cells.push_back(mesh.num_cells());
  }
  const std::size_t L = levels.size();
  for (int j = 0; j < k; ++j) {
    const double s0 = st.sigma[L - 3][j], s1 = st.sigma[L - 2][j],
                 s2 = st.sigma[L - 1][j];
    const double r = fitted_rate(s0, s1, s2);
    const bool ok = std::isfinite(r) && r > 0.05 && r < 8.0;
    st.rate.push_back(r);
    st.rate_reliable.push_back(ok);
    st.extrapolated.push_back(ok ? richardson(s1, s2, r) : s2);
  }
  return st;
}

namespace {

// Locate the cell containing x along one axis and map to the reference cell.
std::pair<int, double> locate(const std::vector<double>& breaks, double x) {
  if (x < breaks.front() - 1e-12 || x > breaks.back() + 1e-12)
    throw std::out_of_range("sample point outside mesh");
  const int ncell = static_cast<int>(breaks.size()) - 1;
  int c = static_cast<int>(std::upper_bound(breaks.begin(), breaks.end(), x) -
                           breaks.begin()) -
          1;
  c = std::clamp(c, 0, ncell - 1);
  const double xi = (x - breaks[c]) / (breaks[c + 1] - breaks[c]);
  return {c, std::clamp(xi, 0.0, 1.0)};
}

}  // namespace

double eval_pressure(const OperatorSet& ops, const Eigen::VectorXd& q,
                     const std::array<double, 3>& x) {
  const int dim = ops.dim;
  const Basis1D bp(ops.spaces.deg_p);
  std::array<Eigen::VectorXd, 3> vals;
  std::array<long, 3> offset{0, 0, 0}, stride{1, 1, 1};
  long s = 1;
  for (int d = 0; d < dim; ++d) {
    const auto [c, xi] = locate(ops.mesh.breaks[d], x[d]);
    vals[d] = bp.values(xi);
    offset[d] = static_cast<long>(c) * ops.spaces.deg_p;
    stride[d] = s;
    s *= static_cast<long>(ops.mesh.cells(d)) * ops.spaces.deg_p + 1;
  }
  const int np = ops.spaces.deg_p + 1;
  double out = 0.0;
  const int nloc = (dim == 2) ? np * np : np * np * np;
  for (int l = 0; l < nloc; ++l) {
    const int i0 = l % np, i1 = (l / np) % np, i2 = (dim == 3) ? l / (np * np) : 0;
    double w = vals[0][i0] * vals[1][i1] * (dim == 3 ? vals[2][i2] : 1.0);
    const long g = (offset[0] + i0) * stride[0] + (offset[1] + i1) * stride[1] +
                   (dim == 3 ? (offset[2] + i2) * stride[2] : 0);
    out += w * q[g];
  }
  return out;
}

namespace {

double eval_velocity_comp(const OperatorSet& ops, const Eigen::VectorXd& u,
                          const std::array<double, 3>& x) {
  // interior-dof field; boundary nodes carry zero
  const int dim = ops.dim;
  const Basis1D bu(ops.spaces.deg_u);
  std::array<Eigen::VectorXd, 3> vals;
  std::array<long, 3> offset{0, 0, 0}, nui{1, 1, 1};
  for (int d = 0; d < dim; ++d) {
    const auto [c, xi] = locate(ops.mesh.breaks[d], x[d]);
    vals[d] = bu.values(xi);
    offset[d] = static_cast<long>(c) * ops.spaces.deg_u;
    nui[d] = static_cast<long>(ops.mesh.cells(d)) * ops.spaces.deg_u - 1;
  }
  const int nu = ops.spaces.deg_u + 1;
  const int nloc = (dim == 2) ? nu * nu : nu * nu * nu;
  double out = 0.0;
  for (int l = 0; l < nloc; ++l) {
    const int i0 = l % nu, i1 = (l / nu) % nu, i2 = (dim == 3) ? l / (nu * nu) : 0;
    const std::array<long, 3> g{offset[0] + i0, offset[1] + i1,
                                (dim == 3) ? offset[2] + i2 : 0};
    bool interior = true;
    long idx = 0, stridev = 1;
    for (int d = 0; d < dim; ++d) {
      const long ntot = static_cast<long>(ops.mesh.cells(d)) * ops.spaces.deg_u + 1;
      if (g[d] < 1 || g[d] > ntot - 2) {
        interior = false;
        break;
      }
      idx += (g[d] - 1) * stridev;
      stridev *= nui[d];
    }
    if (!interior) continue;
    out += vals[0][i0] * vals[1][i1] * (dim == 3 ? vals[2][i2] : 1.0) * u[idx];
  }
  return out;
}

}  // namespace

FieldSamples export_eigenfunction(const OperatorSet& ops,
                                  const Eigen::VectorXd& q,
                                  std::array<int, 3> samples_per_axis,
                                  bool with_velocity) {
  const int dim = ops.dim;
  FieldSamples out;
  out.dim = dim;
  std::array<Eigen::VectorXd, 3> u;
  if (with_velocity) u = velocity_lift(ops, q);

  std::array<int, 3> ns{1, 1, 1};
  for (int d = 0; d < dim; ++d) {
    ns[d] = std::max(2, samples_per_axis[d]);
    out.shape[d] = ns[d];
  }
  long total = 1;
  for (int d = 0; d < dim; ++d) total *= ns[d];
  out.points.reserve(total);
  out.pressure.reserve(total);
  for (long l = 0; l < total; ++l) {
    long rest = l;
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int d = 0; d < dim; ++d) {
      const int i = static_cast<int>(rest % ns[d]);
      rest /= ns[d];
      const auto& b = ops.mesh.breaks[d];
      x[d] = b.front() + (b.back() - b.front()) * i / (ns[d] - 1);
    }
    out.points.push_back(x);
    out.pressure.push_back(eval_pressure(ops, q, x));
    if (with_velocity) {
      std::array<double, 3> v{0.0, 0.0, 0.0};
      for (int d = 0; d < dim; ++d) v[d] = eval_velocity_comp(ops, u[d], x);
      out.velocity.push_back(v);
    }
  }
  return out;
}

}  // namespace cosserat::fem
