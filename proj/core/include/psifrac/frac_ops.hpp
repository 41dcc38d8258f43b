#ifndef PSIFRAC_FRAC_OPS_HPP
#define PSIFRAC_FRAC_OPS_HPP

#include <vector>

#include "psifrac/jacobi.hpp"
#include "psifrac/mjf.hpp"
#include "psifrac/psi_map.hpp"

namespace psifrac {

enum class FracKind { RiemannLiouville, Caputo };
enum class FracSide { Left, Right };

/// Fractional order descriptor. Solver-facing orders live in (0,1) or (1,2);
/// integer orders route to delta_psi instead.
struct FracOrder {
  double mu = 0.5;
  FracKind kind = FracKind::RiemannLiouville;
  FracSide side = FracSide::Left;
  int n_ceil() const;
};

/// Power rule for the fractional integral: the left side maps
/// (psi-psi_a)^gamma to Gamma(gamma+1)/Gamma(gamma+mu+1) (psi-psi_a)^{gamma+mu};
/// the right side mirrors with psi_b-psi. Requires gamma > -1.
double frac_int_power(const PsiMap& map, double mu, double gamma, double x, FracSide side);

/// Power rule for the fractional derivative of (psi-psi_a)^gamma (left) or
/// (psi_b-psi)^gamma (right). Riemann-Liouville returns
/// Gamma(gamma+1)/Gamma(gamma-mu+1) (.)^{gamma-mu}, which is identically zero
/// when gamma-mu+1 is a non-positive integer (kernel annihilation). Caputo
/// additionally kills integer exponents gamma < ceil(mu).
double frac_deriv_power(const PsiMap& map, double mu, double gamma, double x, FracSide side,
                        FracKind kind);

/// Values S_0..S_{n_max} of the fractional integrals of J_n^{alpha,beta} at x,
/// computed by the forward three-term recurrence. The right side is evaluated
/// through the interval-reflection identity on the mirrored parameters.
std::vector<double> frac_int_mjf_recurrence(const PsiMap& map, const JacobiParams& params,
                                            double mu, int n_max, double x, FracSide side);

/// Closed form: the left fractional integral of (psi-psi_a)^beta J_n^{alpha,beta}
/// equals Gamma(n+beta+1)/Gamma(n+beta+mu+1) (psi-psi_a)^{beta+mu} J_n^{alpha-mu,beta+mu};
/// the right side mirrors with the (psi_b-psi)^alpha prefactor. Left requires
/// beta > -1, right requires alpha > -1.
double frac_int_weighted_mjf(const PsiMap& map, const JacobiParams& params, double mu, int n,
                             double x, FracSide side);

/// Closed form: the left fractional derivative of (psi-psi_a)^beta J_n^{alpha,beta}
/// equals Gamma(n+beta+1)/Gamma(n+beta-mu+1) (psi-psi_a)^{beta-mu} J_n^{alpha+mu,beta-mu};
/// right side mirrored. Left requires beta-mu > -1, right alpha-mu > -1.
double frac_deriv_weighted_mjf(const PsiMap& map, const JacobiParams& params, double mu, int n,
                               double x, FracSide side);

/// Left fractional derivative of the mapped Legendre function J_n^{0,0} for
/// mu in (0,1) or (1,2), assembled analytically (no numerical differentiation).
/// x must be interior: the value carries a negative power of psi(x)-psi_a.
double frac_deriv_mjf_legendre(const PsiMap& map, int n, double mu, double x);

/// Sturm-Liouville eigenvalue lambda_{n,mu}^{alpha,beta} =
/// Gamma(n+beta+1) Gamma(n+alpha+mu+1) / (Gamma(n+beta-mu+1) Gamma(n+alpha+1)).
double sturm_liouville_lambda(const JacobiParams& params, int n, double mu);

/// Norm gamma~_{n,mu}^{alpha,beta} of the fractional-derivative orthogonality
/// relation (the weighted derivatives are orthogonal under varpi^{alpha+mu,-beta+mu}).
double frac_deriv_norm(const PsiMap& map, const JacobiParams& params, int n, double mu);

}  // namespace psifrac

#endif  // PSIFRAC_FRAC_OPS_HPP
