// SPDX-License-Identifier: Apache-2.0

#include "cosserat/fem/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cosserat::fem {

namespace {

struct Workspace {
  const OperatorSet& ops;
  std::vector<Eigen::VectorXd> locked;    // Mp-orthonormal: kernel + converged
  std::vector<Eigen::VectorXd> locked_M;  // Mp * locked

  explicit Workspace(const OperatorSet& o) : ops(o) {}

  Eigen::VectorXd mp(const Eigen::VectorXd& v) const { return ops.Mp * v; }

  void lock(const Eigen::VectorXd& v) {
    locked.push_back(v);
    locked_M.push_back(mp(v));
  }

  // remove locked components (two classical Gram-Schmidt passes)
  void deflate(Eigen::VectorXd& v) const {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < locked.size(); ++i)
        v -= locked_M[i].dot(v) * locked[i];
  }
};

}  // namespace

EigReport cosserat_eigs(const OperatorSet& ops, const EigOptions& opts) {
  const long n = ops.ndof_p;
  if (opts.k < 1) throw std::invalid_argument("k must be >= 1");
  if (opts.k > n - 1)
    throw std::invalid_argument("k must stay below the pressure dimension");

  EigReport report;
  report.ndof_u = ops.ndof_u;
  report.ndof_p = ops.ndof_p;

  Workspace ws(ops);
  // Exact zero mode: the constant pressure, Mp-normalized.
  {
    Eigen::VectorXd c = Eigen::VectorXd::Ones(n);
    c /= std::sqrt(c.dot(ws.mp(c)));
    ws.lock(c);
  }
  report.kernel_dim = 1;

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_vec = [&]() {
    Eigen::VectorXd v(n);
    for (long i = 0; i < n; ++i) v[i] = gauss(rng);
    return v;
  };

  auto op_apply = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return ops.Mp_solver->solve(schur_apply(ops, v));
  };

  struct Accepted {
    double sigma;
    Eigen::VectorXd q;
    double residual;
  };
  std::vector<Accepted> accepted;

  const double breakdown_tol = 1e-13;
  int restarts = 0;
  while (static_cast<int>(accepted.size()) < opts.k &&
         restarts <= opts.max_restarts &&
         static_cast<long>(ws.locked.size()) < n) {
    ++restarts;
    const long avail = n - static_cast<long>(ws.locked.size());
    const int m_cap =
        static_cast<int>(std::min<long>(avail, opts.max_subspace));

    Eigen::VectorXd v = random_vec();
    ws.deflate(v);
    double nv = std::sqrt(std::max(0.0, v.dot(ws.mp(v))));
    if (nv < 1e-12) break;  // deflation space exhausted
    v /= nv;

    std::vector<Eigen::VectorXd> V{v};
    std::vector<Eigen::VectorXd> MV{ws.mp(v)};
    std::vector<double> alpha, beta;
    bool breakdown = false;

    for (int j = 0; j < m_cap; ++j) {
      Eigen::VectorXd w = op_apply(V[j]);
      ++report.iterations;
      if (j > 0) w -= beta[j - 1] * V[j - 1];
      const double a = MV[j].dot(w);
      alpha.push_back(a);
      w -= a * V[j];
      // full reorthogonalization against basis and locked vectors
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < V.size(); ++i) w -= MV[i].dot(w) * V[i];
        ws.deflate(w);
      }
      const double b = std::sqrt(std::max(0.0, w.dot(ws.mp(w))));
      if (b < breakdown_tol) {
        breakdown = true;
        break;
      }
      beta.push_back(b);
      if (static_cast<long>(V.size()) >= avail) {
        breakdown = true;
        break;
      }
      V.push_back(w / b);
      MV.push_back(ws.mp(V.back()));
      // periodic convergence check on the smallest Ritz values
      const int mdim = static_cast<int>(alpha.size());
      if (!breakdown && (mdim % 10 == 0) && mdim > opts.k) {
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(mdim, mdim);
        for (int i = 0; i < mdim; ++i) {
          T(i, i) = alpha[i];
          if (i + 1 < mdim) T(i, i + 1) = T(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
        int want = opts.k - static_cast<int>(accepted.size());
        int good = 0;
        for (int i = 0; i < mdim && good < want + 1; ++i) {
          const double bound = std::abs(beta[mdim - 1] *
                                        es.eigenvectors()(mdim - 1, i));
          if (bound < 0.1 * opts.tol * std::max(1e-30, std::abs(es.eigenvalues()[i])) ||
              bound < 1e-14)
            ++good;
          else
            break;
        }
        if (good >= want + 1) break;
      }
    }

    const int mdim = static_cast<int>(alpha.size());
    if (mdim == 0) continue;
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(mdim, mdim);
    for (int i = 0; i < mdim; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < mdim) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);

    // Extract converged Ritz pairs from the small end.
    int taken = 0;
    for (int i = 0; i < mdim; ++i) {
      if (static_cast<int>(accepted.size()) >= opts.k && !breakdown) break;
      const double theta = es.eigenvalues()[i];
      Eigen::VectorXd q = Eigen::VectorXd::Zero(n);
      for (int l = 0; l < mdim; ++l) q += es.eigenvectors()(l, i) * V[l];
      const double qn = std::sqrt(std::max(0.0, q.dot(ws.mp(q))));
      if (qn < 1e-10) continue;
      q /= qn;
      const Eigen::VectorXd Mq = ws.mp(q);
      const Eigen::VectorXd r = schur_apply(ops, q) - theta * Mq;
      const double resid = r.norm();
      const double scale = Mq.norm();
      if (resid > opts.tol * std::max(scale, 1e-300)) {
        // not converged; stop taking Ritz pairs from this pass
        break;
      }
      ws.lock(q);
      ++taken;
      if (theta < opts.kernel_tol) {
        ++report.kernel_dim;
      } else {
        accepted.push_back({theta, q, resid});
      }
    }
    if (taken == 0 && !breakdown) {
      // no progress with this subspace size; give up rather than loop
      break;
    }
  }

  std::sort(accepted.begin(), accepted.end(),
            [](const Accepted& a, const Accepted& b) { return a.sigma < b.sigma; });
  if (static_cast<int>(accepted.size()) > opts.k) accepted.resize(opts.k);
  report.converged = static_cast<int>(accepted.size()) == opts.k;
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    report.eigs.push_back({static_cast<int>(i) + 1, accepted[i].sigma,
                           accepted[i].q, accepted[i].residual});
  }
  return report;
}

}  // namespace cosserat::fem
