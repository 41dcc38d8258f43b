#ifndef PSIFRAC_ORACLE_HPP
#define PSIFRAC_ORACLE_HPP

#include <functional>
#include <vector>

#include "psifrac/frac_ops.hpp"
#include "psifrac/psi_map.hpp"

namespace psifrac {

/// Tolerances for the adaptive fractional-integral quadrature.
struct AdaptiveQuadSpec {
  double abs_tol = 1e-14;
  double rel_tol = 1e-10;
  int max_depth = 15;
};

/// Fractional integral of an arbitrary function by substitution (first
/// t = psi(tau), then a power substitution absorbing the kernel singularity at
/// the moving endpoint) followed by adaptive Gauss-Kronrod refinement.
double oracle_frac_int(const PsiMap& map, double mu, const std::function<double(double)>& f,
                       double x, FracSide side = FracSide::Left,
                       const AdaptiveQuadSpec& quad = AdaptiveQuadSpec{});

/// Solution values on a grid graded toward a in the psi variable, with a
/// piecewise-linear-in-psi evaluator.
struct GridSolution {
  PsiMap map;
  std::vector<double> t_grid;  ///< psi values, ascending from psi_a to psi_b
  std::vector<double> x_grid;
  std::vector<double> u;
  int sweeps = 0;  ///< fixed-point sweeps used

  double operator()(double x) const;
};

/// Initial-value problem D^mu u = f(x, u) with homogeneous data, recast as the
/// equivalent second-kind Volterra equation. Riemann-Liouville and Caputo
/// coincide under zero data.
struct VolterraSpec {
  PsiMap map;
  double mu = 0.5;
  std::function<double(double, double)> f;  ///< f(x, u)
};

/// Product-integration (piecewise-linear-in-psi, kernel-exact) discretization
/// on a grid graded with exponent 2/mu, solved by sequential Gauss-Seidel
/// sweeps to a 1e-12 fixed point (a single sweep plus the convergence check
/// when f does not depend on u). Throws on fixed-point divergence.
GridSolution oracle_volterra_solve(const VolterraSpec& spec, int M);

/// Boundary-value problem D^mu u = p(x) u + q(x), mu in (1,2), recast as a
/// Volterra part plus a rank-one Fredholm correction. The kind selects the
/// boundary flavor: RiemannLiouville pairs with homogeneous fractional
/// conditions D^{-(2-mu)}u(a) = D^{-(2-mu)}u(b) = 0, Caputo with Dirichlet
/// u(a) = u(b) = 0.
struct FredholmSpec {
  PsiMap map;
  double mu = 1.5;
  FracKind kind = FracKind::Caputo;
  std::function<double(double)> p;
  std::function<double(double)> q;
};

/// Direct solve: the Fredholm scalar enters affinely, so two forward
/// substitution sweeps determine it exactly (plain Picard iteration on the
/// scalar diverges whenever the rank-one factor exceeds one in magnitude).
GridSolution oracle_fredholm_solve(const FredholmSpec& spec, int M);

/// D^{-nu} u evaluated at b directly from grid values by the same kernel-exact
/// product rule (no interpolation into a secondary quadrature).
double grid_frac_int_at_b(const GridSolution& g, double nu);

}  // namespace psifrac

#endif  // PSIFRAC_ORACLE_HPP
