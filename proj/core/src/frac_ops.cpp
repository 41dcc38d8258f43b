#include "psifrac/frac_ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace psifrac {

namespace {

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

// Value of J_n at the left endpoint: P_n^{alpha,beta}(-1) = (-1)^n (beta+1)_n / n!.
double mjf_at_a(double beta, int n) {
  double v = 1.0;
  for (int i = 0; i < n; ++i) v *= (beta + 1 + i) / (i + 1);
  return (n % 2 == 0) ? v : -v;
}

// Forward recurrence for S_n = D^{-mu} J_n^{alpha,beta} as a function of the
// scalar t = psi(x) - psi_a alone; the right side reuses it on mirrored data.
std::vector<double> s_recurrence_core(double kappa, const JacobiParams& p, double mu, int n_max,
                                      double t) {
  std::vector<double> S(n_max + 1, 0.0);
  S[0] = std::pow(t, mu) / std::tgamma(mu + 1);
  if (n_max == 0) return S;
  const RecurrenceCoeffs c0 = jacobi_recurrence_coeffs(p, 0);
  S[1] = kappa * c0.A / std::tgamma(mu + 2) * std::pow(t, mu + 1) -
         (c0.A + c0.B) / std::tgamma(mu + 1) * std::pow(t, mu);
  const double tpow = std::pow(t, mu) / std::tgamma(mu);
  for (int n = 1; n < n_max; ++n) {
    const RecurrenceCoeffs rc = jacobi_recurrence_coeffs(p, n);
    const AntiderivCombo ac = mjf_antideriv_combo(p, n, kappa);
    const double E = 1.0 + mu * kappa * rc.A * ac.c;
    if (std::abs(E) < 1e-14) {
      throw std::runtime_error("frac_int_mjf_recurrence: breakdown E_n = 0 at n = " +
                               std::to_string(n));
    }
    const double F = tpow * (ac.a * mjf_at_a(p.beta, n - 1) + ac.b * mjf_at_a(p.beta, n) +
                             ac.c * mjf_at_a(p.beta, n + 1));
    S[n + 1] = (kappa * rc.A * t * S[n] - (mu * kappa * rc.A * ac.b + rc.A + rc.B) * S[n] -
                (mu * kappa * rc.A * ac.a + rc.C) * S[n - 1] + kappa * rc.A * F) /
               E;
  }
  return S;
}

}  // namespace

int FracOrder::n_ceil() const { return static_cast<int>(std::ceil(mu)); }

double frac_int_power(const PsiMap& map, double mu, double gamma, double x, FracSide side) {
  if (gamma <= -1.0) throw std::invalid_argument("frac_int_power: requires gamma > -1");
  const double t = (side == FracSide::Left) ? map.psi(x) - map.psi_a : map.psi_b - map.psi(x);
  return gamma_ratio(gamma + 1, gamma + mu + 1) * std::pow(t, gamma + mu);
}

double frac_deriv_power(const PsiMap& map, double mu, double gamma, double x, FracSide side,
                        FracKind kind) {
  const int nc = static_cast<int>(std::ceil(mu));
  if (kind == FracKind::Caputo) {
    if (gamma >= -0.5 && near_integer(gamma) && std::lround(gamma) < nc) return 0.0;
    if (gamma <= nc - 1) {
      throw std::invalid_argument("frac_deriv_power: Caputo requires gamma > ceil(mu)-1");
    }
  } else if (gamma <= -1.0) {
    throw std::invalid_argument("frac_deriv_power: requires gamma > -1");
  }
  const double ratio = gamma_ratio(gamma + 1, gamma - mu + 1);
  if (ratio == 0.0) return 0.0;  // kernel annihilation: gamma-mu is a negative integer
  const double t = (side == FracSide::Left) ? map.psi(x) - map.psi_a : map.psi_b - map.psi(x);
  return ratio * std::pow(t, gamma - mu);
}

std::vector<double> frac_int_mjf_recurrence(const PsiMap& map, const JacobiParams& params,
                                            double mu, int n_max, double x, FracSide side) {
  if (side == FracSide::Left) {
    return s_recurrence_core(map.kappa, params, mu, n_max, map.psi(x) - map.psi_a);
  }
  // Reflect the interval: the right integral of J_n^{alpha,beta} equals
  // (-1)^n times the left integral of J_n^{beta,alpha} at mirrored distance.
  std::vector<double> S = s_recurrence_core(map.kappa, {params.beta, params.alpha}, mu, n_max,
                                            map.psi_b - map.psi(x));
  for (int n = 1; n <= n_max; n += 2) S[n] = -S[n];
  return S;
}

double frac_int_weighted_mjf(const PsiMap& map, const JacobiParams& params, double mu, int n,
                             double x, FracSide side) {
  if (side == FracSide::Left) {
    if (params.beta <= -1.0) {
      throw std::invalid_argument("frac_int_weighted_mjf: left side requires beta > -1");
    }
    const double t = map.psi(x) - map.psi_a;
    return gamma_ratio(n + params.beta + 1, n + params.beta + mu + 1) *
           std::pow(t, params.beta + mu) *
           mjf_eval(map, {params.alpha - mu, params.beta + mu}, n, x);
  }
  if (params.alpha <= -1.0) {
    throw std::invalid_argument("frac_int_weighted_mjf: right side requires alpha > -1");
  }
  const double z = map.psi_b - map.psi(x);
  return gamma_ratio(n + params.alpha + 1, n + params.alpha + mu + 1) *
         std::pow(z, params.alpha + mu) *
         mjf_eval(map, {params.alpha + mu, params.beta - mu}, n, x);
}

double frac_deriv_weighted_mjf(const PsiMap& map, const JacobiParams& params, double mu, int n,
                               double x, FracSide side) {
  if (side == FracSide::Left) {
    if (params.beta - mu <= -1.0) {
      throw std::invalid_argument("frac_deriv_weighted_mjf: left side requires beta - mu > -1");
    }
    const double t = map.psi(x) - map.psi_a;
    if (t <= 0.0 && params.beta - mu < 0.0) {
      throw std::domain_error("frac_deriv_weighted_mjf: singular at x = a");
    }
    const double ratio = gamma_ratio(n + params.beta + 1, n + params.beta - mu + 1);
    if (ratio == 0.0) return 0.0;
    return ratio * std::pow(t, params.beta - mu) *
           mjf_eval(map, {params.alpha + mu, params.beta - mu}, n, x);
  }
  if (params.alpha - mu <= -1.0) {
    throw std::invalid_argument("frac_deriv_weighted_mjf: right side requires alpha - mu > -1");
  }
  const double z = map.psi_b - map.psi(x);
  if (z <= 0.0 && params.alpha - mu < 0.0) {
    throw std::domain_error("frac_deriv_weighted_mjf: singular at x = b");
  }
  const double ratio = gamma_ratio(n + params.alpha + 1, n + params.alpha - mu + 1);
  if (ratio == 0.0) return 0.0;
  return ratio * std::pow(z, params.alpha - mu) *
         mjf_eval(map, {params.alpha - mu, params.beta + mu}, n, x);
}

double frac_deriv_mjf_legendre(const PsiMap& map, int n, double mu, double x) {
  if (mu <= 0.0 || mu >= 2.0 || mu == 1.0) {
    throw std::invalid_argument("frac_deriv_mjf_legendre: requires mu in (0,1) or (1,2)");
  }
  const double t = map.psi(x) - map.psi_a;
  if (t <= 0.0) throw std::domain_error("frac_deriv_mjf_legendre: singular at x = a");
  if (mu < 1.0) {
    return gamma_ratio(n + 1.0, n - mu + 1) * std::pow(t, -mu) * mjf_eval(map, {mu, -mu}, n, x);
  }
  // mu in (1,2): one delta_psi layer over the mu-1 closed form, expanded by the
  // product rule (both pieces are closed forms; no numerical differentiation).
  const double c = std::exp(std::lgamma(n + 1.0) - std::lgamma(n - mu + 2));
  const double term1 = (1.0 - mu) * std::pow(t, -mu) * mjf_eval(map, {mu - 1, 1 - mu}, n, x);
  const double term2 = (n == 0) ? 0.0
                                : map.kappa * (n + 1) / 2.0 * std::pow(t, 1.0 - mu) *
                                      mjf_eval(map, {mu, 2 - mu}, n - 1, x);
  return c * (term1 + term2);
}

double sturm_liouville_lambda(const JacobiParams& params, int n, double mu) {
  return gamma_ratio(n + params.beta + 1, n + params.beta - mu + 1) *
         gamma_ratio(n + params.alpha + mu + 1, n + params.alpha + 1);
}

double frac_deriv_norm(const PsiMap& map, const JacobiParams& params, int n, double mu) {
  const double al = params.alpha, be = params.beta;
  if (be - mu <= -1.0) {
    throw std::invalid_argument("frac_deriv_norm: requires beta - mu > -1");
  }
  const double lg = 2.0 * std::lgamma(n + be + 1) + std::lgamma(n + al + mu + 1) -
                    std::lgamma(n + 1.0) - std::lgamma(n + al + be + 1) -
                    std::lgamma(n + be - mu + 1);
  return std::pow(map.kappa, 2.0 * (mu - be)) * std::pow(2.0, al + be + 1) /
         (2 * n + al + be + 1) * std::exp(lg);
}

}  // namespace psifrac
