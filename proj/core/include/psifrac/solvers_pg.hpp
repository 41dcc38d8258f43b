#ifndef PSIFRAC_SOLVERS_PG_HPP
#define PSIFRAC_SOLVERS_PG_HPP

#include <functional>

#include "psifrac/frac_ops.hpp"
#include "psifrac/mjf.hpp"
#include "psifrac/psi_map.hpp"

namespace psifrac {

/// Linear initial-value problem D^mu u = f on (a,b], mu in (0,1).
/// g0 is the initial datum: for RiemannLiouville the value of D^{-(1-mu)}u at a,
/// for Caputo the value u(a). Nonzero data are homogenized internally
/// (RL: u = v + g0 (psi-psi_a)^{mu-1}/Gamma(mu); Caputo: u = v + g0), and the
/// returned expansion carries the lift term.
struct IvpLinearSpec {
  PsiMap map;
  double mu = 0.5;
  FracKind kind = FracKind::RiemannLiouville;
  std::function<double(double)> f;
  double g0 = 0.0;
};

/// Linear boundary-value problem lambda^2 u - D^mu u = f, mu in (1,2), with
/// homogeneous fractional boundary conditions D^{-(2-mu)}u(a) = D^{-(2-mu)}u(b) = 0
/// (lambda = 0 gives the pure BVP -D^mu u = f).
struct BvpLinearSpec {
  PsiMap map;
  double mu = 1.5;
  std::function<double(double)> f;
  double lambda = 0.0;
};

/// Petrov-Galerkin IVP solve: returns the expansion with prefactor rho = mu and
/// parameters (-mu, mu); coefficients come from the closed diagonal formula
/// with the load interpolated at the N+1 mapped Lobatto (0,0) nodes.
MjfExpansion solve_ivp_pg(const IvpLinearSpec& spec, int N);

/// Petrov-Galerkin BVP solve for lambda = 0: returns the expansion with
/// prefactor rho = mu-1 and parameters (1-mu, mu-1); the stiffness matrix is
/// diagonal and the load uses an N+2-point mapped Gauss (0,0) rule.
MjfExpansion solve_bvp_pg(const BvpLinearSpec& spec, int N);

/// Helmholtz Petrov-Galerkin solve (lambda^2 M + S) u = f; reduces to
/// solve_bvp_pg when lambda = 0. The dense mass matrix is assembled with a
/// mapped Gauss rule at parameters (0, mu-1) that absorbs the trial prefactor.
MjfExpansion solve_helmholtz_pg(const BvpLinearSpec& spec, int N);

}  // namespace psifrac

#endif  // PSIFRAC_SOLVERS_PG_HPP
