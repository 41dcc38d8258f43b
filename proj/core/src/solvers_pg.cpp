#include "psifrac/solvers_pg.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace psifrac {

MjfExpansion solve_ivp_pg(const IvpLinearSpec& spec, int N) {
  if (spec.mu <= 0.0 || spec.mu >= 1.0) {
    throw std::invalid_argument("solve_ivp_pg: requires mu in (0,1)");
  }
  if (N < 1) throw std::invalid_argument("solve_ivp_pg: requires N >= 1");
  const double mu = spec.mu;

  // Interpolate the load at the (0,0) mapped Lobatto nodes, then scale mode by
  // mode: the fractional derivative maps the trial basis diagonally onto the
  // test basis, u_k = k!/Gamma(k+mu+1) f_k.
  const MjfExpansion fN = interpolate(spec.map, {0.0, 0.0}, N, spec.f);
  MjfExpansion u;
  u.map = spec.map;
  u.params = {-mu, mu};
  u.rho = mu;
  u.coeffs.assign(N + 1, 0.0);
  for (int k = 0; k <= N; ++k) {
    u.coeffs[k] = std::exp(std::lgamma(k + 1.0) - std::lgamma(k + mu + 1)) * fN.coeffs[k];
  }
  if (spec.g0 != 0.0) {
    if (spec.kind == FracKind::RiemannLiouville) {
      u.lift_coeff = spec.g0 / std::tgamma(mu);
      u.lift_exponent = mu - 1.0;
    } else {
      u.lift_coeff = spec.g0;
      u.lift_exponent = 0.0;
    }
  }
  return u;
}

namespace {

// Shared BVP plumbing: load vector (f, J_{i+1}^{-1,-1}) over i = 1..N-1 by an
// (N+2)-point mapped Gauss (0,0) rule, and the diagonal stiffness entries.
struct BvpAssembly {
  std::vector<double> load;   // index i-1
  std::vector<double> sdiag;  // kappa Gamma(i+mu) / ((2i+1) Gamma(i))
};

BvpAssembly assemble_bvp(const BvpLinearSpec& spec, int N) {
  const MappedQuadRule rule = mapped_rule(spec.map, {0.0, 0.0}, N + 2, QuadKind::Gauss);
  const int npts = static_cast<int>(rule.x_nodes.size());
  std::vector<double> fv(npts);
  for (int m = 0; m < npts; ++m) {
    fv[m] = spec.f(rule.x_nodes[m]);
    if (!std::isfinite(fv[m])) {
      throw std::invalid_argument("solve_bvp_pg: non-finite load at a quadrature node");
    }
  }
  BvpAssembly out;
  out.load.assign(N - 1, 0.0);
  out.sdiag.assign(N - 1, 0.0);
  for (int i = 1; i < N; ++i) {
    double acc = 0.0;
    for (int m = 0; m < npts; ++m) {
      acc += fv[m] * jacobi_eval({-1.0, -1.0}, i + 1, rule.base.nodes[m]) * rule.base.weights[m];
    }
    out.load[i - 1] = acc;
    out.sdiag[i - 1] = spec.map.kappa * gamma_ratio(i + spec.mu, static_cast<double>(i)) /
                       (2.0 * i + 1.0);
  }
  return out;
}

MjfExpansion coeffs_to_expansion(const BvpLinearSpec& spec, int N,
                                 const std::vector<double>& uh) {
  MjfExpansion u;
  u.map = spec.map;
  u.params = {1.0 - spec.mu, spec.mu - 1.0};
  u.rho = spec.mu - 1.0;
  u.coeffs.assign(N, 0.0);  // modes 0..N-1; mode 0 is absent from the trial space
  for (int i = 1; i < N; ++i) u.coeffs[i] = uh[i - 1];
  return u;
}

}  // namespace

MjfExpansion solve_bvp_pg(const BvpLinearSpec& spec, int N) {
  if (spec.mu <= 1.0 || spec.mu >= 2.0) {
    throw std::invalid_argument("solve_bvp_pg: requires mu in (1,2)");
  }
  if (spec.lambda != 0.0) {
    throw std::invalid_argument("solve_bvp_pg: lambda must be 0 (use solve_helmholtz_pg)");
  }
  if (N < 2) throw std::invalid_argument("solve_bvp_pg: requires N >= 2");
  const BvpAssembly a = assemble_bvp(spec, N);
  std::vector<double> uh(N - 1);
  for (int i = 0; i < N - 1; ++i) uh[i] = a.load[i] / a.sdiag[i];
  return coeffs_to_expansion(spec, N, uh);
}

MjfExpansion solve_helmholtz_pg(const BvpLinearSpec& spec, int N) {
  if (spec.mu <= 1.0 || spec.mu >= 2.0) {
    throw std::invalid_argument("solve_helmholtz_pg: requires mu in (1,2)");
  }
  if (N < 2) throw std::invalid_argument("solve_helmholtz_pg: requires N >= 2");
  if (spec.lambda == 0.0) return solve_bvp_pg(spec, N);

  const double mu = spec.mu;
  const double kap = spec.map.kappa;
  const BvpAssembly a = assemble_bvp(spec, N);

  // Mass entries m_ji = (phi_i, J_{j+1}^{-1,-1})_{varpi^{0,0}}: the Gauss rule
  // at parameters (0, mu-1) absorbs the (psi-psi_a)^{mu-1} trial prefactor, so
  // the remaining integrand is a polynomial and the rule is exact.
  const MappedQuadRule rule = mapped_rule(spec.map, {0.0, mu - 1.0}, N + 2, QuadKind::Gauss);
  const int npts = static_cast<int>(rule.x_nodes.size());
  Eigen::MatrixXd A(N - 1, N - 1);
  for (int i = 1; i < N; ++i) {
    for (int j = 1; j < N; ++j) {
      double acc = 0.0;
      for (int m = 0; m < npts; ++m) {
        acc += jacobi_eval({1.0 - mu, mu - 1.0}, i, rule.base.nodes[m]) *
               jacobi_eval({-1.0, -1.0}, j + 1, rule.base.nodes[m]) * rule.base.weights[m];
      }
      A(j - 1, i - 1) = spec.lambda * spec.lambda * std::pow(kap, 1.0 - mu) * acc;
    }
  }
  for (int i = 0; i < N - 1; ++i) A(i, i) += a.sdiag[i];

  Eigen::VectorXd rhs(N - 1);
  for (int i = 0; i < N - 1; ++i) rhs(i) = a.load[i];
  const Eigen::VectorXd sol = A.partialPivLu().solve(rhs);
  if (!sol.allFinite()) {
    throw std::runtime_error("solve_helmholtz_pg: linear solve failed");
  }
  std::vector<double> uh(N - 1);
  for (int i = 0; i < N - 1; ++i) uh[i] = sol(i);
  return coeffs_to_expansion(spec, N, uh);
}

}  // namespace psifrac
