#include "psifrac/solvers_colloc.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace psifrac {

namespace {

/// Lagrange interpolation data in t = psi(x): nodes, log-scaled barycentric
/// weights, and cardinal evaluation.
struct Barycentric {
  std::vector<double> t_nodes;
  std::vector<double> weights;

  explicit Barycentric(const std::vector<double>& tn) : t_nodes(tn) {
    const int n = static_cast<int>(tn.size());
    weights.resize(n);
    // Accumulate in logs: plain products overflow past ~100 nodes.
    for (int j = 0; j < n; ++j) {
      double lw = 0.0, sign = 1.0;
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        const double d = t_nodes[j] - t_nodes[i];
        lw += std::log(std::fabs(d));
        if (d < 0.0) sign = -sign;
      }
      weights[j] = sign * std::exp(-lw);
    }
    double wmax = 0.0;
    for (double w : weights) wmax = std::max(wmax, std::fabs(w));
    for (double& w : weights) w /= wmax;
  }

  /// All cardinal values at t; exact-node hits return a unit vector.
  std::vector<double> cardinal(double t) const {
    const int n = static_cast<int>(t_nodes.size());
    std::vector<double> v(n, 0.0);
    const double span = t_nodes.back() - t_nodes.front();
    for (int j = 0; j < n; ++j) {
      if (std::fabs(t - t_nodes[j]) <= 1e-14 * std::max(1.0, std::fabs(span))) {
        v[j] = 1.0;
        return v;
      }
    }
    double denom = 0.0;
    for (int j = 0; j < n; ++j) {
      v[j] = weights[j] / (t - t_nodes[j]);
      denom += v[j];
    }
    for (int j = 0; j < n; ++j) v[j] /= denom;
    return v;
  }

  double interpolate(double t, const std::vector<double>& values) const {
    const std::vector<double> c = cardinal(t);
    double acc = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) acc += c[j] * values[j];
    return acc;
  }
};

std::vector<double> psi_of(const PsiMap& map, const std::vector<double>& xs) {
  std::vector<double> t(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) t[i] = map.psi(xs[i]);
  return t;
}

std::function<double(double)> make_interpolant(const PsiMap& map,
                                               const std::vector<double>& x_nodes,
                                               const std::vector<double>& u) {
  auto bary = std::make_shared<Barycentric>(psi_of(map, x_nodes));
  auto values = std::make_shared<std::vector<double>>(u);
  return [map, bary, values](double x) { return bary->interpolate(map.psi(x), *values); };
}

double linf(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::vector<std::vector<double>> lagrange_to_legendre(const PsiMap& map,
                                                      const JacobiParams& node_params, int N) {
  if (N < 0) throw std::invalid_argument("lagrange_to_legendre: N must be >= 0");
  if (N == 0) return {{1.0}};
  const MappedQuadRule lob = mapped_rule(map, node_params, N + 1, QuadKind::GaussLobatto);
  const Barycentric bary(psi_of(map, lob.x_nodes));
  const MappedQuadRule gauss = mapped_rule(map, {0.0, 0.0}, N + 1, QuadKind::Gauss);

  std::vector<std::vector<double>> L(N + 1, std::vector<double>(N + 1, 0.0));
  std::vector<double> inv_norm(N + 1);
  for (int i = 0; i <= N; ++i) inv_norm[i] = 1.0 / jacobi_norm({0.0, 0.0}, i);
  for (int m = 0; m <= N; ++m) {
    const std::vector<double> card = bary.cardinal(map.psi(gauss.x_nodes[m]));
    for (int i = 0; i <= N; ++i) {
      const double pim = jacobi_eval({0.0, 0.0}, i, gauss.base.nodes[m]) * gauss.base.weights[m] *
                         inv_norm[i];
      for (int j = 0; j <= N; ++j) L[i][j] += card[j] * pim;
    }
  }
  return L;
}

DiffMatrix build_dmfd(const PsiMap& map, const JacobiParams& node_params, int N, double mu,
                      FracKind kind) {
  if (!(mu > 0.0 && mu < 2.0) || mu == 1.0) {
    throw std::invalid_argument("build_dmfd: requires mu in (0,1) or (1,2)");
  }
  if (N < 1) throw std::invalid_argument("build_dmfd: requires N >= 1");
  const std::vector<std::vector<double>> L = lagrange_to_legendre(map, node_params, N);
  const MappedQuadRule lob = mapped_rule(map, node_params, N + 1, QuadKind::GaussLobatto);

  DiffMatrix D;
  D.order = {mu, kind, FracSide::Left};
  D.node_params = node_params;
  D.x_nodes = lob.x_nodes;
  D.entries.assign(N + 1, std::vector<double>(N + 1, 0.0));

  // Derivative of the linear-in-psi Lagrange modes at x = a, needed by the
  // Caputo correction for mu in (1,2):
  // (delta_psi L_j)(a) = sum_{i>=1} L[i][j] * kappa (i+1)/2 * (-1)^{i-1} i.
  std::vector<double> dpsi_at_a;
  if (kind == FracKind::Caputo && mu > 1.0) {
    dpsi_at_a.assign(N + 1, 0.0);
    for (int j = 0; j <= N; ++j) {
      double acc = 0.0;
      double sign = 1.0;  // (-1)^{i-1} starting at i=1
      for (int i = 1; i <= N; ++i) {
        acc += L[i][j] * map.kappa * (i + 1.0) / 2.0 * sign * i;
        sign = -sign;
      }
      dpsi_at_a[j] = acc;
    }
  }

  const double psi_a = map.psi(map.a);
  for (int k = 1; k <= N; ++k) {
    std::vector<double> dv(N + 1);
    for (int i = 0; i <= N; ++i) dv[i] = frac_deriv_mjf_legendre(map, i, mu, lob.x_nodes[k]);
    for (int j = 0; j <= N; ++j) {
      double acc = 0.0;
      for (int i = 0; i <= N; ++i) acc += dv[i] * L[i][j];
      D.entries[k][j] = acc;
    }
    if (kind == FracKind::Caputo) {
      const double t = map.psi(lob.x_nodes[k]) - psi_a;
      if (mu < 1.0) {
        // Subtract the constant mode: L_j(a) = delta_{0j}.
        D.entries[k][0] -= std::pow(t, -mu) / std::tgamma(1.0 - mu);
      } else {
        D.entries[k][0] -= std::pow(t, -mu) / std::tgamma(1.0 - mu);
        const double lin = std::pow(t, 1.0 - mu) / std::tgamma(2.0 - mu);
        for (int j = 0; j <= N; ++j) D.entries[k][j] -= dpsi_at_a[j] * lin;
      }
    }
  }
  if (kind == FracKind::Caputo && mu < 1.0) {
    // Caputo derivatives of the polynomial basis all vanish at x = a.
    for (int j = 0; j <= N; ++j) D.entries[0][j] = 0.0;
  } else {
    // Identity surrogate: the equation row at x_0 is replaced by u(a) = 0.
    for (int j = 0; j <= N; ++j) D.entries[0][j] = 0.0;
    D.entries[0][0] = 1.0;
  }
  return D;
}

SolveReport solve_ivp_colloc(const IvpNonlinearSpec& spec, int N,
                             const JacobiParams& node_params) {
  if (spec.mu <= 0.0 || spec.mu >= 1.0) {
    throw std::invalid_argument("solve_ivp_colloc: requires mu in (0,1)");
  }
  if (!spec.f || !spec.df_du) {
    throw std::invalid_argument("solve_ivp_colloc: f and df_du must both be set");
  }
  if (N < 1) throw std::invalid_argument("solve_ivp_colloc: requires N >= 1");
  const auto t_start = std::chrono::steady_clock::now();

  const DiffMatrix D = build_dmfd(spec.map, node_params, N, spec.mu, spec.kind);
  Eigen::MatrixXd Dr(N, N);
  for (int k = 1; k <= N; ++k)
    for (int j = 1; j <= N; ++j) Dr(k - 1, j - 1) = D.entries[k][j];

  auto residual = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd r = Dr * v;
    for (int k = 0; k < N; ++k) r(k) -= spec.f(D.x_nodes[k + 1], v(k));
    return r;
  };

  Eigen::VectorXd u = Eigen::VectorXd::Zero(N);
  Eigen::VectorXd R = residual(u);
  const double scale = std::max(1.0, linf(R));
  const double tol = 1e-13 * scale;
  const double d_norm = Dr.cwiseAbs().rowwise().sum().maxCoeff();

  int iters = 0;
  bool converged = false;
  double best = linf(R);
  int stalled = 0;
  constexpr int kMaxIters = 50;
  for (int it = 0; it < kMaxIters; ++it) {
    const double nrm = linf(R);
    if (nrm <= tol) {
      converged = true;
      break;
    }
    if (nrm < best) {
      best = nrm;
      stalled = 0;
    } else if (++stalled >= 2) {
      // Residual has flattened out; accept if it sits at rounding level.
      const double plateau =
          std::max(tol, 1e3 * std::numeric_limits<double>::epsilon() * (1.0 + d_norm * linf(u)));
      converged = best <= plateau;
      break;
    }
    Eigen::MatrixXd J = Dr;
    for (int k = 0; k < N; ++k) J(k, k) -= spec.df_du(D.x_nodes[k + 1], u(k));
    const Eigen::VectorXd du = J.partialPivLu().solve(-R);
    if (!du.allFinite()) throw std::runtime_error("solve_ivp_colloc: singular Newton Jacobian");
    double step = 1.0;
    Eigen::VectorXd u_try, r_try;
    for (int d = 0; d < 10; ++d) {
      u_try = u + step * du;
      r_try = residual(u_try);
      if (linf(r_try) < nrm) break;
      step *= 0.5;
    }
    u = u_try;
    R = r_try;
    ++iters;
  }
  if (!converged) {
    throw std::runtime_error("solve_ivp_colloc: Newton did not converge in " +
                             std::to_string(iters) + " iterations (residual " +
                             std::to_string(linf(R)) + ")");
  }

  SolveReport rep;
  rep.x_nodes = D.x_nodes;
  rep.u.assign(N + 1, 0.0);
  for (int k = 1; k <= N; ++k) rep.u[k] = u(k - 1);
  rep.newton_iters = iters;
  rep.converged = true;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  rep.interpolant = make_interpolant(spec.map, rep.x_nodes, rep.u);
  return rep;
}

SolveReport solve_bvp_colloc(const BvpCollocSpec& spec, int N) {
  if (spec.mu <= 1.0 || spec.mu >= 2.0) {
    throw std::invalid_argument("solve_bvp_colloc: requires mu in (1,2)");
  }
  if (!spec.f) throw std::invalid_argument("solve_bvp_colloc: f must be set");
  if (N < 2) throw std::invalid_argument("solve_bvp_colloc: requires N >= 2");
  const auto t_start = std::chrono::steady_clock::now();

  const DiffMatrix D =
      build_dmfd(spec.map, spec.node_params, N, spec.mu, FracKind::RiemannLiouville);
  Eigen::MatrixXd A(N - 1, N - 1);
  for (int k = 1; k < N; ++k)
    for (int j = 1; j < N; ++j) A(k - 1, j - 1) = -D.entries[k][j];
  for (int k = 0; k < N - 1; ++k) A(k, k) += spec.lambda * spec.lambda;

  Eigen::VectorXd rhs(N - 1);
  for (int k = 1; k < N; ++k) rhs(k - 1) = spec.f(D.x_nodes[k]);
  const Eigen::VectorXd ui = A.partialPivLu().solve(rhs);
  if (!ui.allFinite()) throw std::runtime_error("solve_bvp_colloc: linear solve failed");

  SolveReport rep;
  rep.x_nodes = D.x_nodes;
  rep.u.assign(N + 1, 0.0);
  for (int k = 1; k < N; ++k) rep.u[k] = ui(k - 1);
  rep.newton_iters = 1;
  rep.converged = true;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  rep.interpolant = make_interpolant(spec.map, rep.x_nodes, rep.u);
  return rep;
}

}  // namespace psifrac
