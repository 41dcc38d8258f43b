#ifndef PSIFRAC_PSI_MAP_HPP
#define PSIFRAC_PSI_MAP_HPP

#include <functional>
#include <string>

namespace psifrac {

/// An increasing map psi on [a,b] together with its derivative and inverse.
/// Carries the affine transfer to the reference interval [-1,1]:
///   s(x) = kappa*(psi(x) - psi_a) - 1,   kappa = 2/(psi_b - psi_a).
struct PsiMap {
  std::string name;
  double a = 0.0;
  double b = 1.0;
  std::function<double(double)> psi;
  std::function<double(double)> dpsi;
  /// Inverse of psi on [psi_a, psi_b]. Always callable after construction;
  /// maps registered without an analytic inverse get a safeguarded
  /// bisection+Newton fallback (tolerance 1e-14).
  std::function<double(double)> inv;
  double psi_a = 0.0;
  double psi_b = 1.0;
  double kappa = 2.0;
};

/// Builds one of the registered maps on [a,b]:
/// "identity", "log", "exp", "quadratic" (x(x+1)/2), "tan", "sin",
/// "power" (x^{2.3}). All have analytic derivatives and inverses.
/// Monotonicity (psi' > 0) is validated by sampling 1000 points;
/// a nonpositive sample is a hard construction error.
PsiMap make_psi_map(const std::string& name, double a, double b);

/// Builds a user-supplied map. `inv` may be empty; a safeguarded numeric
/// inverse is attached in that case. Same monotonicity validation.
PsiMap make_custom_map(const std::string& name, double a, double b,
                       std::function<double(double)> psi,
                       std::function<double(double)> dpsi,
                       std::function<double(double)> inv = {});

/// s(x) = kappa*(psi(x)-psi_a) - 1; maps [a,b] onto [-1,1].
double to_reference(const PsiMap& map, double x);

/// x(s) = psi^{-1}((s+1)/kappa + psi_a); left inverse of to_reference.
double from_reference(const PsiMap& map, double s);

/// delta_psi^n f(x) = [(1/psi') d/dx]^n f(x) by nested central differences
/// with Richardson extrapolation. Test utility, not a solver kernel.
double delta_psi(const PsiMap& map, const std::function<double(double)>& f,
                 double x, int order);

}  // namespace psifrac

#endif  // PSIFRAC_PSI_MAP_HPP
