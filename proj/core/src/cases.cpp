#include "psifrac/cases.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "psifrac/mjf.hpp"

namespace psifrac {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// u = sum c_k (psi-psi_a)^{g_k} together with its left RL derivative
/// f = sum c_k Gamma(g_k+1)/Gamma(g_k-mu+1) (psi-psi_a)^{g_k-mu}.
struct PowerSeries {
  std::vector<double> exponents;
  std::vector<double> coeffs;

  double eval(const PsiMap& m, double x) const {
    const double t = m.psi(x) - m.psi_a;
    double acc = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      acc += coeffs[i] * std::pow(t, exponents[i]);
    }
    return acc;
  }

  double eval_rl_deriv(const PsiMap& m, double mu, double x) const {
    const double t = m.psi(x) - m.psi_a;
    double acc = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const double g = exponents[i];
      const double ratio = gamma_ratio(g + 1.0, g - mu + 1.0);
      if (ratio == 0.0) continue;
      acc += coeffs[i] * ratio * std::pow(t, g - mu);
    }
    return acc;
  }
};

/// exp series: sum_{k=0}^{terms-1} t^{shift+k}/k!.
PowerSeries exp_series(double shift, int terms) {
  PowerSeries s;
  double c = 1.0;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) c /= k;
    s.exponents.push_back(shift + k);
    s.coeffs.push_back(c);
  }
  return s;
}

/// sine series: sum_{m=0}^{terms-1} (-1)^m z^{2m+1}/(2m+1)! with z = scale*t,
/// expressed in powers t^{shift+2m+1}.
PowerSeries sin_series(double shift, double scale, int terms) {
  PowerSeries s;
  double c = scale;
  for (int m = 0; m < terms; ++m) {
    if (m > 0) c *= -scale * scale / ((2.0 * m) * (2.0 * m + 1.0));
    s.exponents.push_back(shift + 2.0 * m + 1.0);
    s.coeffs.push_back(c);
  }
  return s;
}

void require_mu(CaseId id, double mu, double lo, double hi) {
  if (!(mu > lo && mu < hi)) {
    throw std::invalid_argument("case " + case_name(id) + ": requires mu in (" +
                                std::to_string(lo) + "," + std::to_string(hi) + ")");
  }
}

}  // namespace

std::string case_name(CaseId id) {
  switch (id) {
    case CaseId::C11: return "C11";
    case CaseId::C12: return "C12";
    case CaseId::C13: return "C13";
    case CaseId::C14: return "C14";
    case CaseId::C21: return "C21";
    case CaseId::C22: return "C22";
    case CaseId::C31: return "C31";
    case CaseId::C32: return "C32";
    case CaseId::C33: return "C33";
  }
  throw std::invalid_argument("case_name: unknown case id");
}

CaseId parse_case_id(const std::string& name) {
  for (CaseId id : {CaseId::C11, CaseId::C12, CaseId::C13, CaseId::C14, CaseId::C21,
                    CaseId::C22, CaseId::C31, CaseId::C32, CaseId::C33}) {
    if (case_name(id) == name) return id;
  }
  throw std::invalid_argument("unknown case '" + name + "' (expected C11..C14, C21, C22, C31..C33)");
}

bool case_is_bvp(CaseId id) {
  return id == CaseId::C31 || id == CaseId::C32 || id == CaseId::C33;
}

bool case_is_nonlinear(CaseId id) { return id == CaseId::C21 || id == CaseId::C22; }

CaseProblem make_case(CaseId id, const PsiMap& map, double mu, double lambda) {
  CaseProblem p;
  p.id = id;
  p.map = map;
  p.mu = mu;
  p.lambda = lambda;
  if (!case_is_bvp(id) && lambda != 0.0) {
    throw std::invalid_argument("case " + case_name(id) + ": lambda applies to BVP cases only");
  }

  switch (id) {
    case CaseId::C11:
    case CaseId::C12:
    case CaseId::C13:
    case CaseId::C14: {
      require_mu(id, mu, 0.0, 1.0);
      p.kind = FracKind::RiemannLiouville;
      const bool weighted = (id == CaseId::C11 || id == CaseId::C12);
      const double shift = weighted ? mu : 1.0;
      const bool is_exp = (id == CaseId::C11 || id == CaseId::C13);
      PowerSeries series;
      if (is_exp) {
        p.series_terms = 60;
        series = exp_series(shift, p.series_terms);
      } else {
        p.series_terms = 30;
        series = sin_series(shift, kPi * map.kappa, p.series_terms);
      }
      const PsiMap m = map;
      if (is_exp) {
        p.exact = [m, shift](double x) {
          const double t = m.psi(x) - m.psi_a;
          if (t <= 0.0) return 0.0;
          return std::pow(t, shift) * std::exp(t);
        };
      } else {
        const double scale = kPi * map.kappa;
        p.exact = [m, shift, scale](double x) {
          const double t = m.psi(x) - m.psi_a;
          if (t <= 0.0) return 0.0;
          return std::pow(t, shift) * std::sin(scale * t);
        };
      }
      p.rhs = [m, mu, series](double x) { return series.eval_rl_deriv(m, mu, x); };
      break;
    }

    case CaseId::C21: {
      require_mu(id, mu, 0.0, 1.0);
      p.kind = FracKind::Caputo;
      p.nonlinear = true;
      p.series_terms = 30;
      const PsiMap m = map;
      const int K = p.series_terms;
      auto exact = [m, mu, K](double x) {
        const double t = m.psi(x) - m.psi_a;
        double acc = 0.0;
        for (int k = 1; k <= K; ++k) {
          acc += std::exp(std::lgamma(k - mu + 1.0) - std::lgamma(k + 1.0)) * std::pow(t, k);
        }
        return acc;
      };
      p.exact = exact;
      p.rhs_xu = [m, mu, K, exact](double x, double u) {
        const double t = m.psi(x) - m.psi_a;
        double g = 0.0;
        for (int k = 1; k <= K; ++k) g += std::pow(t, k - mu);
        const double ue = exact(x);
        return g + ue * ue - u * u;
      };
      p.drhs_du = [](double, double u) { return -2.0 * u; };
      break;
    }

    case CaseId::C22: {
      require_mu(id, mu, 0.0, 1.0);
      p.kind = FracKind::Caputo;
      p.nonlinear = true;
      const PsiMap m = map;
      auto exact = [m, mu](double x) {
        const double t = m.psi(x) - m.psi_a;
        if (t <= 0.0) return 0.0;
        return 120.0 * std::pow(t, 5.0 + mu) / std::tgamma(mu + 6.0) +
               std::tgamma(mu + 4.0) * std::pow(t, 3.0 + 2.0 * mu) / std::tgamma(2.0 * mu + 4.0) +
               std::tgamma(2.0 * mu + 3.0) * std::pow(t, 2.0 + 3.0 * mu) /
                   std::tgamma(3.0 * mu + 3.0);
      };
      p.exact = exact;
      p.rhs_xu = [m, mu, exact](double x, double u) {
        const double t = m.psi(x) - m.psi_a;
        const double g =
            std::pow(t, 5.0) + std::pow(t, 3.0 + mu) + std::pow(t, 2.0 + 2.0 * mu);
        const double ue = exact(x);
        return g + ue * ue - u * u;
      };
      p.drhs_du = [](double, double u) { return -2.0 * u; };
      break;
    }

    case CaseId::C31: {
      require_mu(id, mu, 1.0, 2.0);
      p.series_terms = 30;
      const PsiMap m = map;
      const int K = p.series_terms;
      p.exact = [m, mu, K](double x) {
        const double t = m.psi(x) - m.psi_a;
        if (t <= 0.0) return 0.0;
        double acc = 0.0, fact = 1.0;
        for (int k = 1; k <= K; ++k) {
          fact *= k;
          acc += mjf_eval(m, {1.0 - mu, mu - 1.0}, k, x) / fact;
        }
        return std::pow(t, mu - 1.0) * acc;
      };
      p.rhs = [m, mu, K, lambda](double x) {
        double d = 0.0;
        for (int k = 1; k <= K; ++k) {
          const double c = std::exp(std::lgamma(k + mu) - std::lgamma(static_cast<double>(k)) -
                                    std::lgamma(k + 1.0));
          d += c * m.kappa * (k + 1.0) / (2.0 * k) * mjf_eval(m, {1.0, 1.0}, k - 1, x);
        }
        if (lambda == 0.0) return -d;
        // General Helmholtz right-hand side needs the exact value again.
        double t = m.psi(x) - m.psi_a;
        double u = 0.0;
        if (t > 0.0) {
          double fact = 1.0, acc = 0.0;
          for (int k = 1; k <= K; ++k) {
            fact *= k;
            acc += mjf_eval(m, {1.0 - mu, mu - 1.0}, k, x) / fact;
          }
          u = std::pow(t, mu - 1.0) * acc;
        }
        return lambda * lambda * u - d;
      };
      break;
    }

    case CaseId::C32: {
      require_mu(id, mu, 1.0, 2.0);
      p.series_terms = 30;
      const PsiMap m = map;
      const int K = p.series_terms;
      const double scale = m.kappa * kPi;
      auto exact = [m, scale](double x) { return std::sin(scale * (m.psi(x) - m.psi_a)); };
      p.exact = exact;
      p.rhs = [m, mu, K, lambda, scale, exact](double x) {
        const double t = m.psi(x) - m.psi_a;
        double d = 0.0;
        if (t > 0.0) {
          double c = scale;  // (-1)^m scale^{2m+1} / (2m+1)!
          for (int mm = 0; mm < K; ++mm) {
            if (mm > 0) c *= -scale * scale / ((2.0 * mm) * (2.0 * mm + 1.0));
            const double po = 2.0 * mm + 1.0;
            d += c * gamma_ratio(po + 1.0, po + 1.0 - mu) * std::pow(t, po - mu);
          }
        }
        return lambda * lambda * exact(x) - d;
      };
      break;
    }

    case CaseId::C33: {
      require_mu(id, mu, 1.0, 2.0);
      const PsiMap m = map;
      const double span = m.psi(m.b) - m.psi_a;
      auto exact = [m, mu, span](double x) {
        const double t = m.psi(x) - m.psi_a;
        if (t <= 0.0) return 0.0;
        return (span - t) * std::pow(t, 2.0 * mu);
      };
      p.exact = exact;
      p.rhs = [m, mu, span, lambda, exact](double x) {
        const double t = m.psi(x) - m.psi_a;
        double d = 0.0;
        if (t > 0.0) {
          d = span * gamma_ratio(2.0 * mu + 1.0, mu + 1.0) * std::pow(t, mu) -
              gamma_ratio(2.0 * mu + 2.0, mu + 2.0) * std::pow(t, mu + 1.0);
        }
        return lambda * lambda * exact(x) - d;
      };
      break;
    }
  }
  return p;
}

}  // namespace psifrac
