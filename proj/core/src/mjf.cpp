#include "psifrac/mjf.hpp"

#include <cmath>
#include <stdexcept>

namespace psifrac {

double mjf_eval(const PsiMap& map, const JacobiParams& params, int n, double x) {
  return jacobi_eval(params, n, to_reference(map, x));
}

DerivRelation mjf_delta_deriv_coeffs(const JacobiParams& params, int n, int k, double kappa) {
  if (k < 0 || n < 0) throw std::invalid_argument("mjf_delta_deriv_coeffs: negative order");
  if (k > n) return {0.0, params, 0};
  const double sum = n + params.alpha + params.beta + 1;
  const double factor =
      std::pow(kappa / 2.0, k) * gamma_ratio(sum + k, sum);
  return {factor, {params.alpha + k, params.beta + k}, n - k};
}

AntiderivCombo mjf_antideriv_combo(const JacobiParams& params, int n, double kappa) {
  if (n < 1) throw std::invalid_argument("mjf_antideriv_combo: requires n >= 1");
  const double al = params.alpha, be = params.beta;
  const double s = al + be;
  if (n + s == 0.0 || 2 * n + s == 0.0 || 2 * n + s + 1 == 0.0 || 2 * n + s + 2 == 0.0) {
    throw std::invalid_argument("mjf_antideriv_combo: zero denominator for these parameters");
  }
  AntiderivCombo c;
  c.a = -2.0 * (n + al) * (n + be) / (kappa * (n + s) * (2 * n + s) * (2 * n + s + 1));
  c.b = 2.0 * (al - be) / (kappa * (2 * n + s) * (2 * n + s + 2));
  c.c = 2.0 * (n + s + 1) / (kappa * (2 * n + s + 1) * (2 * n + s + 2));
  return c;
}

MappedQuadRule mapped_rule(const PsiMap& map, const JacobiParams& params, int n_points,
                           QuadKind kind) {
  MappedQuadRule r;
  r.base = (kind == QuadKind::Gauss) ? gauss_rule(params, n_points)
                                     : lobatto_rule(params, n_points);
  r.map = map;
  r.x_nodes.resize(r.base.nodes.size());
  for (std::size_t j = 0; j < r.base.nodes.size(); ++j) {
    r.x_nodes[j] = from_reference(map, r.base.nodes[j]);
  }
  return r;
}

double MjfExpansion::operator()(double x) const { return expansion_eval(*this, x); }

double expansion_eval(const MjfExpansion& e, double x) {
  const double t = e.map.psi(x) - e.map.psi_a;
  double value = 0.0;
  if (e.lift_coeff != 0.0) {
    value += (e.lift_exponent == 0.0) ? e.lift_coeff : e.lift_coeff * std::pow(t, e.lift_exponent);
  }
  if (e.rho > 0.0 && t <= 0.0) return value;  // prefactored part vanishes at x = a
  double sum = 0.0;
  const double s = to_reference(e.map, x);
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    if (e.coeffs[k] != 0.0) sum += e.coeffs[k] * jacobi_eval(e.params, static_cast<int>(k), s);
  }
  const double pref = (e.rho == 0.0) ? 1.0 : std::pow(t, e.rho);
  return value + pref * sum;
}

MjfExpansion interpolate(const PsiMap& map, const JacobiParams& params, int N,
                         const std::function<double(double)>& f) {
  const MappedQuadRule rule = mapped_rule(map, params, N + 1, QuadKind::GaussLobatto);
  std::vector<double> fv(N + 1);
  for (int j = 0; j <= N; ++j) {
    fv[j] = f(rule.x_nodes[j]);
    if (!std::isfinite(fv[j])) {
      throw std::invalid_argument("interpolate: non-finite sample at a Lobatto node");
    }
  }
  MjfExpansion e;
  e.map = map;
  e.params = params;
  e.rho = 0.0;
  e.coeffs.assign(N + 1, 0.0);
  for (int k = 0; k <= N; ++k) {
    double acc = 0.0;
    for (int j = 0; j <= N; ++j) {
      acc += fv[j] * jacobi_eval(params, k, rule.base.nodes[j]) * rule.base.weights[j];
    }
    // Discrete norm of the top mode exceeds gamma_N by the end-correction factor.
    const double denom = (k == N)
                             ? (2.0 + (params.alpha + params.beta + 1) / N) * jacobi_norm(params, N)
                             : jacobi_norm(params, k);
    e.coeffs[k] = acc / denom;
  }
  return e;
}

}  // namespace psifrac
