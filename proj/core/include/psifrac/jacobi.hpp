#ifndef PSIFRAC_JACOBI_HPP
#define PSIFRAC_JACOBI_HPP

#include <vector>

namespace psifrac {

/// Gamma function with pole detection: throws std::domain_error when x is a
/// non-positive integer.
double gamma_fn(double x);

/// Ratio Gamma(p)/Gamma(q) evaluated through log-gamma differences so that
/// large arguments never overflow. Negative non-integer arguments are handled
/// by reflection. A pole in the denominator yields 0 (the convention used by
/// the fractional power rule); a pole in the numerator alone is a domain error.
double gamma_ratio(double p, double q);

/// Jacobi parameter pair (alpha, beta). Orthogonality-dependent operations
/// (norms, quadrature) require alpha, beta > -1; evaluation also supports
/// negative-integer parameters through the degenerate transformation formulas.
struct JacobiParams {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Three-term recurrence coefficients: P_{n+1} = (A_n s - B_n) P_n - C_n P_{n-1}.
/// B_0 is the analytic limit (beta-alpha)/2 (the generic expression is 0/0 when
/// alpha+beta = 0); C_0 multiplies P_{-1} and is returned as 0.
struct RecurrenceCoeffs {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

RecurrenceCoeffs jacobi_recurrence_coeffs(const JacobiParams& params, int n);

/// Evaluates P_n^{alpha,beta}(s). Uses the three-term recurrence for
/// nondegenerate parameters; negative-integer alpha and/or beta route through
/// the degenerate product transformations, and degrees below the
/// transformation threshold fall back to the explicit series definition.
double jacobi_eval(const JacobiParams& params, int n, double s);

/// k-th s-derivative of P_n^{alpha,beta}: (n+alpha+beta+1)_k / 2^k *
/// P_{n-k}^{alpha+k,beta+k}(s); zero when k > n.
double jacobi_deriv(const JacobiParams& params, int n, double s, int k = 1);

/// Weighted L2 norm gamma_n^{alpha,beta} of P_n against (1-s)^alpha (1+s)^beta.
/// Requires alpha, beta > -1.
double jacobi_norm(const JacobiParams& params, int n);

enum class QuadKind { Gauss, GaussLobatto };

/// Quadrature rule on [-1,1] for the weight (1-s)^alpha (1+s)^beta.
/// Nodes ascend strictly; Lobatto rules include both endpoints.
struct QuadRule {
  QuadKind kind = QuadKind::Gauss;
  JacobiParams params;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule with n_points interior nodes (roots of P_{n_points}),
/// exact to degree 2*n_points - 1. Nodes are found by Newton iteration with
/// Chebyshev initial guesses and deflation of already-found roots.
QuadRule gauss_rule(const JacobiParams& params, int n_points);

/// Gauss-Jacobi-Lobatto rule: endpoints plus the roots of
/// P_{n_points-2}^{alpha+1,beta+1}, exact to degree 2*n_points - 3.
QuadRule lobatto_rule(const JacobiParams& params, int n_points);

}  // namespace psifrac

#endif  // PSIFRAC_JACOBI_HPP
