#include "psifrac/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "psifrac/solvers_colloc.hpp"
#include "psifrac/solvers_pg.hpp"

namespace psifrac {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string format_endpoint(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string psi_label(const RunConfig& c) {
  return c.map_name + "[" + format_endpoint(c.a) + ".." + format_endpoint(c.b) + "]";
}

double max_err_uniform(const std::function<double(double)>& approx,
                       const std::function<double(double)>& exact, const PsiMap& map) {
  double worst = 0.0;
  for (int i = 0; i <= 500; ++i) {
    const double x = map.a + (map.b - map.a) * i / 500.0;
    worst = std::max(worst, std::fabs(approx(x) - exact(x)));
  }
  return worst;
}

bool method_is_pg(Method m) {
  return m == Method::PgIvp || m == Method::PgBvp || m == Method::PgHelmholtz;
}

bool method_is_ivp(Method m) { return m == Method::PgIvp || m == Method::CollocIvp; }

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::PgIvp: return "pg-ivp";
    case Method::PgBvp: return "pg-bvp";
    case Method::PgHelmholtz: return "pg-helmholtz";
    case Method::CollocIvp: return "colloc-ivp";
    case Method::CollocBvp: return "colloc-bvp";
  }
  throw std::invalid_argument("method_name: unknown method");
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::PgIvp, Method::PgBvp, Method::PgHelmholtz, Method::CollocIvp,
                   Method::CollocBvp}) {
    if (method_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected pg-ivp, pg-bvp, pg-helmholtz, colloc-ivp, colloc-bvp)");
}

void validate_config(const RunConfig& c) {
  const bool bvp_case = case_is_bvp(c.case_id);
  if (method_is_ivp(c.method) && bvp_case) {
    throw std::invalid_argument("config: case " + case_name(c.case_id) +
                                " is a boundary-value case; method " + method_name(c.method) +
                                " solves initial-value problems");
  }
  if (!method_is_ivp(c.method) && !bvp_case) {
    throw std::invalid_argument("config: case " + case_name(c.case_id) +
                                " is an initial-value case; method " + method_name(c.method) +
                                " solves boundary-value problems");
  }
  if (case_is_nonlinear(c.case_id) && c.method != Method::CollocIvp) {
    throw std::invalid_argument("config: nonlinear case " + case_name(c.case_id) +
                                " requires method colloc-ivp");
  }
  if (c.method == Method::PgBvp && c.lambda != 0.0) {
    throw std::invalid_argument("config: pg-bvp requires lambda=0 (use pg-helmholtz)");
  }
  if (c.n_values.empty()) {
    throw std::invalid_argument("config: at least one N value is required");
  }
  for (int n : c.n_values) {
    if (n < 1) throw std::invalid_argument("config: N values must be positive");
  }
}

RunRow run_case(const RunConfig& c, int N) {
  const PsiMap map = make_psi_map(c.map_name, c.a, c.b);
  const CaseProblem prob = make_case(c.case_id, map, c.mu, c.lambda);

  RunRow row;
  row.n = N;
  row.mu = c.mu;
  row.alpha = c.alpha;
  row.beta = c.beta;
  row.lambda = c.lambda;
  row.psi = psi_label(c);
  row.method = method_name(c.method);
  row.case_label = case_name(c.case_id);

  using clock = std::chrono::steady_clock;
  switch (c.method) {
    case Method::PgIvp: {
      IvpLinearSpec spec;
      spec.map = map;
      spec.mu = c.mu;
      spec.kind = prob.kind;
      spec.f = prob.rhs;
      const auto t0 = clock::now();
      const MjfExpansion u = solve_ivp_pg(spec, N);
      row.seconds = std::chrono::duration<double>(clock::now() - t0).count();
      row.err = max_err_uniform([&u](double x) { return u(x); }, prob.exact, map);
      break;
    }
    case Method::PgBvp:
    case Method::PgHelmholtz: {
      BvpLinearSpec spec;
      spec.map = map;
      spec.mu = c.mu;
      spec.lambda = c.lambda;
      spec.f = prob.rhs;
      const auto t0 = clock::now();
      const MjfExpansion u =
          (c.method == Method::PgBvp) ? solve_bvp_pg(spec, N) : solve_helmholtz_pg(spec, N);
      row.seconds = std::chrono::duration<double>(clock::now() - t0).count();
      row.err = max_err_uniform([&u](double x) { return u(x); }, prob.exact, map);
      break;
    }
    case Method::CollocIvp: {
      IvpNonlinearSpec spec;
      spec.map = map;
      spec.mu = c.mu;
      spec.kind = prob.kind;
      if (prob.nonlinear) {
        spec.f = prob.rhs_xu;
        spec.df_du = prob.drhs_du;
      } else {
        const auto f = prob.rhs;
        spec.f = [f](double x, double) { return f(x); };
        spec.df_du = [](double, double) { return 0.0; };
      }
      const SolveReport rep = solve_ivp_colloc(spec, N, {c.alpha, c.beta});
      row.seconds = rep.seconds;
      double worst = 0.0;
      for (std::size_t k = 0; k < rep.u.size(); ++k) {
        worst = std::max(worst, std::fabs(rep.u[k] - prob.exact(rep.x_nodes[k])));
      }
      row.err = worst;
      break;
    }
    case Method::CollocBvp: {
      BvpCollocSpec spec;
      spec.map = map;
      spec.mu = c.mu;
      spec.lambda = c.lambda;
      spec.f = prob.rhs;
      spec.node_params = {c.alpha, c.beta};
      const SolveReport rep = solve_bvp_colloc(spec, N);
      row.seconds = rep.seconds;
      double worst = 0.0;
      for (std::size_t k = 0; k < rep.u.size(); ++k) {
        worst = std::max(worst, std::fabs(rep.u[k] - prob.exact(rep.x_nodes[k])));
      }
      row.err = worst;
      break;
    }
  }
  return row;
}

std::vector<RunRow> run_sweep(const RunConfig& c) {
  validate_config(c);
  std::vector<RunRow> rows;
  rows.reserve(c.n_values.size());
  for (int n : c.n_values) rows.push_back(run_case(c, n));
  return rows;
}

ConvergenceReport convergence_orders(const std::vector<RunRow>& rows) {
  ConvergenceReport rep;
  constexpr double kFloor = 1e-12;
  std::vector<double> usable;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double e0 = rows[i].err, e1 = rows[i + 1].err;
    const double n0 = rows[i].n, n1 = rows[i + 1].n;
    if (n1 <= n0 || e1 <= 0.0 || e0 <= 0.0) {
      rep.orders.push_back(0.0);
      continue;
    }
    const double order = std::log(e0 / e1) / std::log(n1 / n0);
    rep.orders.push_back(order);
    if (e0 > kFloor && e1 > kFloor) usable.push_back(order);
  }
  if (usable.size() >= 2) {
    const double rise = usable.back() - usable.front();
    rep.spectral = rise >= 2.0;
    rep.algebraic = std::fabs(rise) <= 1.5;
  }
  return rep;
}

std::string csv_header() { return "N,mu,alpha,beta,lambda,psi,method,case,err,seconds"; }

std::string csv_row(const RunRow& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d,%.5e,%.5e,%.5e,%.5e,%s,%s,%s,%.5e,%.5e", r.n, r.mu, r.alpha,
                r.beta, r.lambda, r.psi.c_str(), r.method.c_str(), r.case_label.c_str(), r.err,
                r.seconds);
  return buf;
}

void write_csv(std::ostream& out, std::vector<RunRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const RunRow& x, const RunRow& y) {
    return std::tie(x.n, x.mu, x.alpha, x.beta, x.lambda, x.psi, x.method, x.case_label) <
           std::tie(y.n, y.mu, y.alpha, y.beta, y.lambda, y.psi, y.method, y.case_label);
  });
  out << csv_header() << '\n';
  for (const RunRow& r : rows) out << csv_row(r) << '\n';
}

namespace {

struct MapSpec {
  const char* name;
  double a, b;
};

/// The five maps used by the nonlinear IVP table.
const MapSpec kFiveMaps[] = {{"quadratic", 0.0, 0.7},
                             {"tan", 0.0, kPi / 5.0},
                             {"sin", 0.0, kPi / 3.0},
                             {"log", 1.0, 2.718281828459045},
                             {"power", 0.0, 1.0}};

RunConfig base_config(Method method, CaseId id, const MapSpec& m, double mu, double lambda,
                      double alpha, double beta, std::vector<int> ns) {
  RunConfig c;
  c.method = method;
  c.case_id = id;
  c.map_name = m.name;
  c.a = m.a;
  c.b = m.b;
  c.mu = mu;
  c.lambda = lambda;
  c.alpha = alpha;
  c.beta = beta;
  c.n_values = std::move(ns);
  return c;
}

/// Figure grids (the published figures print no numbers; these grids cover
/// the plotted ranges). Spectral-decay cases use a dense small-N grid,
/// algebraic-decay cases use doubling N.
const std::vector<int> kSpectralNs = {4, 6, 8, 10, 12, 14, 16, 18, 20};
const std::vector<int> kAlgebraicNs = {4, 8, 16, 32, 64, 128};

std::vector<RunConfig> figure_configs(Method method, CaseId id, bool vary_map, bool vary_mu,
                                      bool spectral_grid) {
  const std::vector<int>& ns = spectral_grid ? kSpectralNs : kAlgebraicNs;
  std::vector<RunConfig> out;
  const MapSpec log_map = kFiveMaps[3];
  if (vary_map) {
    for (const MapSpec& m : kFiveMaps) {
      out.push_back(base_config(method, id, m, 0.5, 0.0, 0.0, 0.0, ns));
    }
  } else if (vary_mu) {
    for (double mu : {0.3, 0.5, 0.7}) {
      out.push_back(base_config(method, id, log_map, mu, 0.0, 0.0, 0.0, ns));
    }
  } else {
    out.push_back(base_config(method, id, log_map, 0.5, 0.0, 0.0, 0.0, ns));
  }
  return out;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (int i = 1; i <= 7; ++i) names.push_back("table" + std::to_string(i));
  for (int i = 1; i <= 12; ++i) names.push_back("fig" + std::to_string(i));
  return names;
}

std::vector<RunConfig> preset_configs(const std::string& preset) {
  std::vector<RunConfig> out;
  if (preset == "table1") {
    // Nonlinear IVP C21 at N=30: five maps x five orders.
    for (const MapSpec& m : kFiveMaps) {
      for (double mu : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        out.push_back(base_config(Method::CollocIvp, CaseId::C21, m, mu, 0.0, 0.0, 0.0, {30}));
      }
    }
  } else if (preset == "table2") {
    for (double mu : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      out.push_back(base_config(Method::CollocIvp, CaseId::C22, kFiveMaps[4], mu, 0.0, 0.0, 0.0,
                                {4, 8, 16, 32, 64}));
    }
  } else if (preset == "table3") {
    for (double mu : {1.1, 1.3, 1.5, 1.7, 1.9}) {
      out.push_back(base_config(Method::PgBvp, CaseId::C31, {"quadratic", 1.0, 3.0}, mu, 0.0, 0.0,
                                0.0, {4, 8, 12, 16, 18}));
    }
  } else if (preset == "table4") {
    for (double mu : {1.1, 1.3, 1.5, 1.7, 1.9}) {
      out.push_back(base_config(Method::CollocBvp, CaseId::C32, {"quadratic", 1.0, 4.0}, mu, 0.0,
                                0.0, 0.0, {4, 8, 12, 16, 20}));
    }
  } else if (preset == "table5") {
    for (double lambda : {1.0, 10.0, 100.0, 1000.0, 10000.0}) {
      out.push_back(base_config(Method::CollocBvp, CaseId::C32, {"tan", 0.0, kPi / 3.0}, 1.55,
                                lambda, 0.5, 0.5, {4, 8, 12, 16, 20}));
    }
  } else if (preset == "table6") {
    const double params[][2] = {{-0.5, -0.5}, {0.5, 0.5}, {1.0, 1.0}, {0.5, -0.5}, {-0.5, 2.0}};
    for (const auto& p : params) {
      out.push_back(base_config(Method::CollocBvp, CaseId::C32, {"sin", -kPi / 3.0, kPi / 3.0},
                                1.45, 10.0, p[0], p[1], {4, 8, 12, 16, 20}));
    }
  } else if (preset == "table7") {
    for (double mu : {1.02, 1.2, 1.4, 1.6, 1.8}) {
      out.push_back(base_config(Method::CollocBvp, CaseId::C33, {"sin", -kPi / 3.0, kPi / 3.0}, mu,
                                2.0, -0.5, -0.5, {4, 8, 16, 32, 64, 128, 256}));
    }
  } else if (preset == "fig1") {
    out = figure_configs(Method::PgIvp, CaseId::C11, true, false, true);
  } else if (preset == "fig2") {
    out = figure_configs(Method::PgIvp, CaseId::C11, false, true, true);
  } else if (preset == "fig3") {
    out = figure_configs(Method::PgIvp, CaseId::C12, false, true, true);
  } else if (preset == "fig4") {
    out = figure_configs(Method::PgIvp, CaseId::C13, false, true, false);
  } else if (preset == "fig5") {
    out = figure_configs(Method::PgIvp, CaseId::C14, true, false, false);
  } else if (preset == "fig6") {
    out = figure_configs(Method::PgIvp, CaseId::C14, false, true, false);
  } else if (preset == "fig7") {
    out = figure_configs(Method::CollocIvp, CaseId::C11, true, false, false);
  } else if (preset == "fig8") {
    out = figure_configs(Method::CollocIvp, CaseId::C11, false, true, false);
  } else if (preset == "fig9") {
    out = figure_configs(Method::CollocIvp, CaseId::C12, false, true, false);
  } else if (preset == "fig10") {
    out = figure_configs(Method::CollocIvp, CaseId::C13, false, true, true);
  } else if (preset == "fig11") {
    out = figure_configs(Method::CollocIvp, CaseId::C14, true, false, true);
  } else if (preset == "fig12") {
    out = figure_configs(Method::CollocIvp, CaseId::C14, false, true, true);
  } else {
    throw std::invalid_argument("unknown preset '" + preset +
                                "' (expected table1..table7 or fig1..fig12)");
  }
  return out;
}

}  // namespace psifrac
