#ifndef PSIFRAC_SOLVERS_COLLOC_HPP
#define PSIFRAC_SOLVERS_COLLOC_HPP

#include <functional>
#include <vector>

#include "psifrac/frac_ops.hpp"
#include "psifrac/mjf.hpp"
#include "psifrac/psi_map.hpp"

namespace psifrac {

/// Fractional differentiation matrix on mapped Lobatto nodes: entries[k][j] is
/// the mu-derivative of the j-th Lagrange cardinal function at node x_k, after
/// condition-row surgery (row 0 is the identity row for Riemann-Liouville and
/// the zero row for Caputo with mu < 1; rows k >= 1 hold derivative values).
struct DiffMatrix {
  FracOrder order;
  JacobiParams node_params;
  std::vector<double> x_nodes;
  std::vector<std::vector<double>> entries;
};

/// Initial-value problem D^mu u = f(x, u) with homogeneous initial datum.
/// df_du supplies the Jacobian of f with respect to u (required; pass a
/// lambda returning 0 for linear right-hand sides).
struct IvpNonlinearSpec {
  PsiMap map;
  double mu = 0.5;
  FracKind kind = FracKind::Caputo;
  std::function<double(double, double)> f;
  std::function<double(double, double)> df_du;
};

/// Boundary-value problem lambda^2 u - D^mu u = f with u(a) = u(b) = 0,
/// collocated at mapped Lobatto nodes with the given parameters.
struct BvpCollocSpec {
  PsiMap map;
  double mu = 1.5;
  double lambda = 0.0;
  std::function<double(double)> f;
  JacobiParams node_params{0.0, 0.0};
};

/// Node values plus a barycentric interpolant through them (in psi-space).
struct SolveReport {
  std::vector<double> x_nodes;
  std::vector<double> u;
  int newton_iters = 0;
  bool converged = true;
  double seconds = 0.0;
  std::function<double(double)> interpolant;
};

/// Expansion coefficients of every Lagrange cardinal function on the mapped
/// Lobatto (node_params) grid in the mapped Legendre family J^{0,0}:
/// L_j(x) = sum_i L[i][j] J_i^{0,0}(x). Computed with an (N+1)-point mapped
/// Gauss rule at (0,0), exact for the degree <= 2N integrand.
std::vector<std::vector<double>> lagrange_to_legendre(const PsiMap& map,
                                                      const JacobiParams& node_params, int N);

/// Builds the (N+1)x(N+1) differentiation matrix of D^mu on the mapped
/// Lobatto (node_params) grid, mu in (0,2). Caputo subtracts the modes
/// annihilated at x = a (the constant for mu < 1, constant and linear for
/// mu in (1,2)) from the Riemann-Liouville entries.
DiffMatrix build_dmfd(const PsiMap& map, const JacobiParams& node_params, int N, double mu,
                      FracKind kind);

/// Collocation solve of D^mu u = f(x,u), mu in (0,1), u(a) = 0, by damped
/// Newton iteration from the zero initial guess (linear problems converge in
/// one step). Throws on Newton failure.
SolveReport solve_ivp_colloc(const IvpNonlinearSpec& spec, int N,
                             const JacobiParams& node_params = {0.0, 0.0});

/// Collocation solve of lambda^2 u - D^mu u = f, mu in (1,2), homogeneous
/// Dirichlet data, by dense LU on the interior nodes.
SolveReport solve_bvp_colloc(const BvpCollocSpec& spec, int N);

}  // namespace psifrac

#endif  // PSIFRAC_SOLVERS_COLLOC_HPP
