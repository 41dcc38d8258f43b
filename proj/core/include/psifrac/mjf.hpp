#ifndef PSIFRAC_MJF_HPP
#define PSIFRAC_MJF_HPP

#include <functional>
#include <vector>

#include "psifrac/jacobi.hpp"
#include "psifrac/psi_map.hpp"

namespace psifrac {

/// Expansion u(x) = lift + (psi(x)-psi_a)^rho * sum_k coeffs[k] * J_k^{alpha,beta}(x),
/// where the optional lift term lift_coeff*(psi(x)-psi_a)^lift_exponent carries
/// a homogenized initial datum. rho = 0 represents a plain polynomial-in-psi
/// expansion; rho > 0 makes the prefactored part vanish at x = a.
struct MjfExpansion {
  PsiMap map;
  JacobiParams params;
  double rho = 0.0;
  std::vector<double> coeffs;
  double lift_coeff = 0.0;
  double lift_exponent = 0.0;

  /// Point evaluation; equivalent to expansion_eval(*this, x).
  double operator()(double x) const;
};

/// A Jacobi rule transplanted to [a,b]: x_j = psi^{-1}((s_j+1)/kappa + psi_a),
/// with weights equal to the reference weights.
struct MappedQuadRule {
  QuadRule base;
  PsiMap map;
  std::vector<double> x_nodes;
};

/// Mapped Jacobi function J_n^{alpha,beta}(x) = P_n^{alpha,beta}(s(x)).
double mjf_eval(const PsiMap& map, const JacobiParams& params, int n, double x);

/// Result of the derivative relation delta_psi^k J_n = factor * J_{n-k}^{alpha+k,beta+k}.
struct DerivRelation {
  double factor = 0.0;
  JacobiParams params;
  int degree = 0;
};

/// Coefficients of delta_psi^k J_n^{alpha,beta} = d_{n,k} J_{n-k}^{alpha+k,beta+k}
/// with d_{n,k} = kappa^k Gamma(n+k+alpha+beta+1) / (2^k Gamma(n+alpha+beta+1)).
/// k > n returns factor 0.
DerivRelation mjf_delta_deriv_coeffs(const JacobiParams& params, int n, int k, double kappa);

/// Coefficients of the antiderivative identity
/// J_n = delta_psi(a_n J_{n-1} + b_n J_n + c_n J_{n+1}), n >= 1.
struct AntiderivCombo {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

AntiderivCombo mjf_antideriv_combo(const JacobiParams& params, int n, double kappa);

/// Transplants a Gauss or Lobatto rule to [a,b] through the map.
MappedQuadRule mapped_rule(const PsiMap& map, const JacobiParams& params, int n_points,
                           QuadKind kind);

/// Evaluates the expansion; at x = a with rho > 0 the prefactored sum is 0.
double expansion_eval(const MjfExpansion& e, double x);

/// Interpolation at the N+1 mapped Lobatto nodes, returned as a rho = 0
/// expansion. The discrete transform uses the Lobatto rule itself with the
/// end-corrected top mode, so the expansion reproduces f at every node.
MjfExpansion interpolate(const PsiMap& map, const JacobiParams& params, int N,
                         const std::function<double(double)>& f);

}  // namespace psifrac

#endif  // PSIFRAC_MJF_HPP
