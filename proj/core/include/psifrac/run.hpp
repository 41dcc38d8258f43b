#ifndef PSIFRAC_RUN_HPP
#define PSIFRAC_RUN_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "psifrac/cases.hpp"
#include "psifrac/psi_map.hpp"

namespace psifrac {

/// Solver families exposed by the driver.
enum class Method { PgIvp, PgBvp, PgHelmholtz, CollocIvp, CollocBvp };

std::string method_name(Method m);
Method parse_method(const std::string& name);

/// One requested computation: a method applied to a case on a map over a list
/// of truncation sizes N.
struct RunConfig {
  Method method = Method::CollocBvp;
  CaseId case_id = CaseId::C32;
  std::string map_name = "identity";
  double a = 0.0;
  double b = 1.0;
  double mu = 0.5;
  double lambda = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<int> n_values;
};

/// One CSV row: the error and timing of a single solve.
struct RunRow {
  int n = 0;
  double mu = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
  std::string psi;
  std::string method;
  std::string case_label;
  double err = 0.0;
  double seconds = 0.0;
};

/// Validates method/case compatibility; throws std::invalid_argument with a
/// field-specific message on mismatch (e.g. nonlinear cases need colloc-ivp).
void validate_config(const RunConfig& config);

/// Solves one (config, N) instance and reports the error: max over 501
/// uniform points for Petrov-Galerkin methods, max over the collocation
/// nodes for collocation methods.
RunRow run_case(const RunConfig& config, int N);

/// Runs every N in config.n_values in order.
std::vector<RunRow> run_sweep(const RunConfig& config);

/// Observed convergence orders between consecutive rows:
/// order_i = log(err_i/err_{i+1}) / log(N_{i+1}/N_i). Pairs where either
/// error is at rounding level (< 1e-12) are excluded from the flags.
struct ConvergenceReport {
  std::vector<double> orders;
  /// Orders rise by >= 2 across the usable range (error curve bends down).
  bool spectral = false;
  /// Orders stay within +-1.5 across the usable range.
  bool algebraic = false;
};

ConvergenceReport convergence_orders(const std::vector<RunRow>& rows);

/// CSV emission. Header is exactly
/// `N,mu,alpha,beta,lambda,psi,method,case,err,seconds`; floats use
/// 6-significant-digit scientific notation; rows are written sorted by
/// (N, mu, alpha, beta, lambda, psi, method, case).
std::string csv_header();
std::string csv_row(const RunRow& row);
void write_csv(std::ostream& out, std::vector<RunRow> rows);

/// Named parameter grids reproducing the published tables (table1..table7)
/// and figure data (fig1..fig12). Throws on unknown preset names.
std::vector<RunConfig> preset_configs(const std::string& preset);

/// All valid preset names, in canonical order.
std::vector<std::string> preset_names();

}  // namespace psifrac

#endif  // PSIFRAC_RUN_HPP
