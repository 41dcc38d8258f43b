#ifndef PSIFRAC_CASES_HPP
#define PSIFRAC_CASES_HPP

#include <functional>
#include <string>

#include "psifrac/frac_ops.hpp"
#include "psifrac/psi_map.hpp"

namespace psifrac {

/// Built-in benchmark problems with known exact solutions. C11-C14 are linear
/// IVPs (mu in (0,1)), C21/C22 are nonlinear Caputo IVPs, C31-C33 are BVPs
/// (mu in (1,2)) for lambda^2 u - D^mu u = f.
enum class CaseId { C11, C12, C13, C14, C21, C22, C31, C32, C33 };

/// A fully-instantiated benchmark problem: exact solution plus the
/// manufactured right-hand side on a concrete map at a concrete order.
struct CaseProblem {
  CaseId id;
  PsiMap map;
  double mu = 0.5;
  double lambda = 0.0;
  FracKind kind = FracKind::RiemannLiouville;
  bool nonlinear = false;
  /// Truncation length of the manufactured power series (0 = closed form).
  int series_terms = 0;
  std::function<double(double)> exact;
  /// Linear right-hand side f(x); null for nonlinear cases.
  std::function<double(double)> rhs;
  /// Nonlinear right-hand side f(x, u) and its u-derivative; null otherwise.
  std::function<double(double, double)> rhs_xu;
  std::function<double(double, double)> drhs_du;
};

/// Case name like "C32"; parse throws std::invalid_argument on unknown names.
std::string case_name(CaseId id);
CaseId parse_case_id(const std::string& name);

/// True for the boundary-value cases C31/C32/C33 (mu in (1,2)).
bool case_is_bvp(CaseId id);

/// True for the nonlinear cases C21/C22.
bool case_is_nonlinear(CaseId id);

/// Instantiates the benchmark problem. Validates that mu lies in the range
/// the case is defined for; lambda applies to the BVP cases only.
CaseProblem make_case(CaseId id, const PsiMap& map, double mu, double lambda = 0.0);

}  // namespace psifrac

#endif  // PSIFRAC_CASES_HPP
