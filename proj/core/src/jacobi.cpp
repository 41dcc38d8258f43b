#include "psifrac/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace psifrac {

namespace {

constexpr double kPi = 3.14159265358979323846;

// True when x sits (to within rounding noise) on a non-positive integer.
bool is_nonpos_int(double x) {
  return x < 0.5 && std::abs(x - std::round(x)) < 1e-12 && std::round(x) <= 0.0;
}

bool is_neg_int(double x) {
  return x < -0.5 && std::abs(x - std::round(x)) < 1e-12;
}

// Sign of Gamma(v) for non-pole v together with log|Gamma(v)|.
double signed_lgamma(double v, double& lg) {
  lg = std::lgamma(v);
  if (v > 0.0) return 1.0;
  return std::sin(kPi * v) < 0.0 ? -1.0 : 1.0;
}

// Explicit series sum_j (n+a+b+1)_j (a+j+1)_{n-j} / (j! (n-j)!) ((s-1)/2)^j,
// valid for every parameter pair; only used for modest degrees.
double jacobi_series(const JacobiParams& p, int n, double s) {
  const double z = (s - 1.0) / 2.0;
  double total = 0.0;
  for (int j = 0; j <= n; ++j) {
    double term = 1.0;
    for (int i = 0; i < j; ++i) term *= (n + p.alpha + p.beta + 1 + i);
    for (int i = 0; i < n - j; ++i) term *= (p.alpha + j + 1 + i);
    for (int i = 2; i <= j; ++i) term /= i;
    for (int i = 2; i <= n - j; ++i) term /= i;
    total += term * std::pow(z, j);
  }
  return total;
}

// Plain three-term recurrence; callers guarantee nondegenerate parameters.
double jacobi_recurrence(const JacobiParams& p, int n, double s) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = (p.alpha + p.beta + 2.0) / 2.0 * s + (p.alpha - p.beta) / 2.0;
  for (int k = 1; k < n; ++k) {
    const RecurrenceCoeffs c = jacobi_recurrence_coeffs(p, k);
    const double next = (c.A * s - c.B) * cur - c.C * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double pochhammer(double x, int k) {
  double v = 1.0;
  for (int i = 0; i < k; ++i) v *= (x + i);
  return v;
}

}  // namespace

double gamma_fn(double x) {
  if (is_nonpos_int(x)) {
    throw std::domain_error("gamma_fn: pole at x = " + std::to_string(x));
  }
  return std::tgamma(x);
}

double gamma_ratio(double p, double q) {
  const bool qp = is_nonpos_int(q);
  const bool pp = is_nonpos_int(p);
  if (qp && pp) {
    throw std::domain_error("gamma_ratio: poles in numerator and denominator");
  }
  if (qp) return 0.0;
  if (pp) throw std::domain_error("gamma_ratio: pole in numerator");
  double lp = 0.0, lq = 0.0;
  const double sp = signed_lgamma(p, lp);
  const double sq = signed_lgamma(q, lq);
  return sp * sq * std::exp(lp - lq);
}

RecurrenceCoeffs jacobi_recurrence_coeffs(const JacobiParams& p, int n) {
  const double al = p.alpha, be = p.beta;
  const double A =
      (2 * n + al + be + 1) * (2 * n + al + be + 2) / (2 * (n + 1) * (n + al + be + 1));
  if (n == 0) return {A, (be - al) / 2.0, 0.0};
  const double B = (be * be - al * al) * (2 * n + al + be + 1) /
                   (2 * (n + 1) * (n + al + be + 1) * (2 * n + al + be));
  const double C = (n + al) * (n + be) * (2 * n + al + be + 2) /
                   ((n + 1) * (n + al + be + 1) * (2 * n + al + be));
  return {A, B, C};
}

double jacobi_eval(const JacobiParams& p, int n, double s) {
  if (n < 0) throw std::invalid_argument("jacobi_eval: negative degree");
  if (n == 0) return 1.0;
  const bool ai = is_neg_int(p.alpha);
  const bool bi = is_neg_int(p.beta);
  if (!ai && !bi) return jacobi_recurrence(p, n, s);

  const int l = ai ? static_cast<int>(std::lround(-p.alpha)) : 0;
  const int m = bi ? static_cast<int>(std::lround(-p.beta)) : 0;
  if (n < l + m) return jacobi_series(p, n, s);

  const double z1 = (s - 1.0) / 2.0;
  const double z2 = (s + 1.0) / 2.0;
  if (ai && bi) {
    return std::pow(z1, l) * std::pow(z2, m) *
           jacobi_recurrence({static_cast<double>(l), static_cast<double>(m)}, n - l - m, s);
  }
  if (ai) {
    const double c = pochhammer(p.beta + n - l + 1, l) *
                     std::exp(std::lgamma(n - l + 1.0) - std::lgamma(n + 1.0));
    return c * std::pow(z1, l) * jacobi_recurrence({static_cast<double>(l), p.beta}, n - l, s);
  }
  const double c = pochhammer(p.alpha + n - m + 1, m) *
                   std::exp(std::lgamma(n - m + 1.0) - std::lgamma(n + 1.0));
  return c * std::pow(z2, m) * jacobi_recurrence({p.alpha, static_cast<double>(m)}, n - m, s);
}

double jacobi_deriv(const JacobiParams& p, int n, double s, int k) {
  if (k < 0) throw std::invalid_argument("jacobi_deriv: negative order");
  if (k == 0) return jacobi_eval(p, n, s);
  if (k > n) return 0.0;
  const double factor = pochhammer(n + p.alpha + p.beta + 1, k) / std::pow(2.0, k);
  return factor * jacobi_eval({p.alpha + k, p.beta + k}, n - k, s);
}

double jacobi_norm(const JacobiParams& p, int n) {
  if (p.alpha <= -1.0 || p.beta <= -1.0) {
    throw std::invalid_argument("jacobi_norm: requires alpha, beta > -1");
  }
  const double al = p.alpha, be = p.beta;
  if (n == 0) {
    // Beta-function form; the generic expression is 0/0 when alpha+beta+1 = 0.
    return std::pow(2.0, al + be + 1) *
           std::exp(std::lgamma(al + 1) + std::lgamma(be + 1) - std::lgamma(al + be + 2));
  }
  return std::pow(2.0, al + be + 1) / (2 * n + al + be + 1) *
         std::exp(std::lgamma(n + al + 1) + std::lgamma(n + be + 1) - std::lgamma(n + 1.0) -
                  std::lgamma(n + al + be + 1));
}

QuadRule gauss_rule(const JacobiParams& p, int npts) {
  if (p.alpha <= -1.0 || p.beta <= -1.0) {
    throw std::invalid_argument("gauss_rule: requires alpha, beta > -1");
  }
  if (npts < 1) throw std::invalid_argument("gauss_rule: need at least one point");

  QuadRule rule;
  rule.kind = QuadKind::Gauss;
  rule.params = p;
  rule.nodes.resize(npts);
  rule.weights.resize(npts);

  for (int j = 0; j < npts; ++j) {
    double s = -std::cos(kPi * (j + 0.5) / npts);  // ascending Chebyshev guess
    bool done = false;
    for (int it = 0; it < 100; ++it) {
      const double f = jacobi_eval(p, npts, s);
      double dp = jacobi_deriv(p, npts, s);
      for (int r = 0; r < j; ++r) dp -= f / (s - rule.nodes[r]);  // deflation
      const double step = f / dp;
      s -= step;
      if (std::abs(step) < 1e-15) {
        done = true;
        break;
      }
    }
    if (!done || std::abs(jacobi_eval(p, npts, s)) > 1e-12) {
      throw std::runtime_error("gauss_rule: Newton failed for node " + std::to_string(j));
    }
    rule.nodes[j] = s;
  }
  std::sort(rule.nodes.begin(), rule.nodes.end());

  const double lcw = (p.alpha + p.beta + 1) * std::log(2.0) + std::lgamma(npts + p.alpha + 1) +
                     std::lgamma(npts + p.beta + 1) - std::lgamma(npts + 1.0) -
                     std::lgamma(npts + p.alpha + p.beta + 1);
  for (int j = 0; j < npts; ++j) {
    const double s = rule.nodes[j];
    const double dp = jacobi_deriv(p, npts, s);
    rule.weights[j] = std::exp(lcw) / ((1.0 - s * s) * dp * dp);
  }
  return rule;
}

QuadRule lobatto_rule(const JacobiParams& p, int npts) {
  if (p.alpha <= -1.0 || p.beta <= -1.0) {
    throw std::invalid_argument("lobatto_rule: requires alpha, beta > -1");
  }
  if (npts < 2) throw std::invalid_argument("lobatto_rule: need at least two points");

  QuadRule rule;
  rule.kind = QuadKind::GaussLobatto;
  rule.params = p;
  rule.nodes.resize(npts);
  rule.nodes.front() = -1.0;
  rule.nodes.back() = 1.0;
  if (npts > 2) {
    const QuadRule interior = gauss_rule({p.alpha + 1, p.beta + 1}, npts - 2);
    std::copy(interior.nodes.begin(), interior.nodes.end(), rule.nodes.begin() + 1);
  }

  // Barycentric weights of the node set, log-accumulated (direct products
  // overflow near one hundred nodes) and normalized by the largest magnitude.
  std::vector<double> logb(npts, 0.0), sgn(npts, 1.0);
  for (int j = 0; j < npts; ++j) {
    for (int i = 0; i < npts; ++i) {
      if (i == j) continue;
      const double d = rule.nodes[j] - rule.nodes[i];
      logb[j] -= std::log(std::abs(d));
      if (d < 0) sgn[j] = -sgn[j];
    }
  }
  const double lmax = *std::max_element(logb.begin(), logb.end());
  std::vector<double> bary(npts);
  for (int j = 0; j < npts; ++j) bary[j] = sgn[j] * std::exp(logb[j] - lmax);

  // Every weight is the integral of the matching cardinal function, taken with
  // a same-parameter Gauss rule (exact: cardinals have degree npts-1).
  const QuadRule gauss = gauss_rule(p, npts);
  rule.weights.assign(npts, 0.0);
  std::vector<double> card(npts);
  for (int m = 0; m < npts; ++m) {
    const double sg = gauss.nodes[m];
    int hit = -1;
    for (int j = 0; j < npts; ++j) {
      if (std::abs(sg - rule.nodes[j]) < 1e-14) hit = j;
    }
    if (hit >= 0) {
      std::fill(card.begin(), card.end(), 0.0);
      card[hit] = 1.0;
    } else {
      double denom = 0.0;
      for (int j = 0; j < npts; ++j) {
        card[j] = bary[j] / (sg - rule.nodes[j]);
        denom += card[j];
      }
      for (int j = 0; j < npts; ++j) card[j] /= denom;
    }
    for (int j = 0; j < npts; ++j) rule.weights[j] += card[j] * gauss.weights[m];
  }
  return rule;
}

}  // namespace psifrac
