#include "psifrac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace psifrac {

namespace {

// Kernel-exact weights of one product-integration panel [tj, tj1] for the
// target kernel (ti - t)^{mu-1} against a piecewise-linear integrand:
// wl multiplies the value at tj, wr the value at tj1.
void panel_weights(double ti, double tj, double tj1, double mu, double& wl, double& wr) {
  const double d0 = ti - tj;
  const double d1 = ti - tj1;
  const double h = tj1 - tj;
  const double A = (std::pow(d0, mu) - std::pow(d1, mu)) / mu;
  const double B = d0 * (std::pow(d0, mu) - std::pow(d1, mu)) / mu -
                   (std::pow(d0, mu + 1) - std::pow(d1, mu + 1)) / (mu + 1);
  wl = A - B / h;
  wr = B / h;
}

// Grid graded toward a in the psi variable with exponent 2/mu.
GridSolution make_graded_grid(const PsiMap& map, double mu, int M) {
  GridSolution g;
  g.map = map;
  g.t_grid.resize(M + 1);
  g.x_grid.resize(M + 1);
  g.u.assign(M + 1, 0.0);
  const double span = map.psi_b - map.psi_a;
  const double q = 2.0 / mu;
  for (int i = 0; i <= M; ++i) {
    double t = map.psi_a + span * std::pow(static_cast<double>(i) / M, q);
    t = std::min(t, map.psi_b);
    g.t_grid[i] = t;
    g.x_grid[i] = std::clamp(map.inv(t), map.a, map.b);
  }
  g.x_grid.front() = map.a;
  g.x_grid.back() = map.b;
  return g;
}

// Flat lower-triangle cache of the Volterra weights: row i holds the i panel
// weight pairs for target node i.
struct VolterraWeights {
  std::vector<double> wl, wr;
  std::vector<std::size_t> offset;

  explicit VolterraWeights(const std::vector<double>& t, double mu) {
    const std::size_t M = t.size() - 1;
    offset.resize(M + 2, 0);
    for (std::size_t i = 0; i <= M; ++i) offset[i + 1] = offset[i] + i;
    wl.resize(offset[M + 1]);
    wr.resize(offset[M + 1]);
    for (std::size_t i = 1; i <= M; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        panel_weights(t[i], t[j], t[j + 1], mu, wl[offset[i] + j], wr[offset[i] + j]);
      }
    }
  }
};

}  // namespace

double oracle_frac_int(const PsiMap& map, double mu, const std::function<double(double)>& f,
                       double x, FracSide side, const AdaptiveQuadSpec& quad) {
  const double tx = map.psi(x);
  const double base = (side == FracSide::Left) ? tx - map.psi_a : map.psi_b - tx;
  if (base <= 0.0) return 0.0;
  const double upper = std::pow(base, mu);
  auto g = [&](double sig) {
    double t = (side == FracSide::Left) ? tx - std::pow(sig, 1.0 / mu)
                                        : tx + std::pow(sig, 1.0 / mu);
    t = std::clamp(t, map.psi_a, map.psi_b);
    return f(std::clamp(map.inv(t), map.a, map.b));
  };
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      g, 0.0, upper, quad.max_depth, quad.rel_tol, &err);
  return v / (mu * std::tgamma(mu));
}

double GridSolution::operator()(double x) const {
  const double t = std::clamp(map.psi(x), t_grid.front(), t_grid.back());
  const auto it = std::upper_bound(t_grid.begin(), t_grid.end(), t);
  std::size_t j = (it == t_grid.begin()) ? 1 : static_cast<std::size_t>(it - t_grid.begin());
  j = std::min(j, t_grid.size() - 1);
  const double t0 = t_grid[j - 1], t1 = t_grid[j];
  const double w = (t1 > t0) ? (t - t0) / (t1 - t0) : 0.0;
  return (1.0 - w) * u[j - 1] + w * u[j];
}

GridSolution oracle_volterra_solve(const VolterraSpec& spec, int M) {
  if (M < 2) throw std::invalid_argument("oracle_volterra_solve: grid too small");
  GridSolution g = make_graded_grid(spec.map, spec.mu, M);
  const VolterraWeights W(g.t_grid, spec.mu);
  const double gm = std::tgamma(spec.mu);

  std::vector<double> fv(M + 1);
  constexpr int kMaxSweeps = 200;
  constexpr double kTol = 1e-12;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double delta = 0.0;
    for (int k = 0; k <= M; ++k) fv[k] = spec.f(g.x_grid[k], g.u[k]);
    for (int i = 1; i <= M; ++i) {
      const double* wl = &W.wl[W.offset[i]];
      const double* wr = &W.wr[W.offset[i]];
      double acc = 0.0;
      for (int j = 0; j < i - 1; ++j) acc += wl[j] * fv[j] + wr[j] * fv[j + 1];
      acc += wl[i - 1] * fv[i - 1] + wr[i - 1] * spec.f(g.x_grid[i], g.u[i]);
      const double next = acc / gm;
      delta = std::max(delta, std::abs(next - g.u[i]));
      g.u[i] = next;
      fv[i] = spec.f(g.x_grid[i], g.u[i]);
    }
    g.sweeps = sweep + 1;
    if (!std::isfinite(delta)) {
      throw std::runtime_error("oracle_volterra_solve: fixed point diverged");
    }
    if (delta < kTol) return g;
  }
  throw std::runtime_error("oracle_volterra_solve: no fixed point within sweep limit");
}

GridSolution oracle_fredholm_solve(const FredholmSpec& spec, int M) {
  if (spec.mu <= 1.0 || spec.mu >= 2.0) {
    throw std::invalid_argument("oracle_fredholm_solve: requires mu in (1,2)");
  }
  GridSolution g = make_graded_grid(spec.map, spec.mu, M);
  const VolterraWeights W(g.t_grid, spec.mu);
  const double gm = std::tgamma(spec.mu);
  const double kap = spec.map.kappa;
  const double tb = spec.map.psi_b;

  // Rank-one prefactor P(x) and the boundary kernel exponent of the flavor.
  std::vector<double> P(M + 1);
  const double nu_b = (spec.kind == FracKind::RiemannLiouville) ? 2.0 : spec.mu;
  for (int i = 0; i <= M; ++i) {
    const double t = g.t_grid[i] - spec.map.psi_a;
    P[i] = (spec.kind == FracKind::RiemannLiouville) ? kap * std::pow(t, spec.mu - 1) / 2.0
                                                     : kap * t / 2.0;
  }
  // Weights of the full-interval functional (1/Gamma(mu)) int (tb-t)^{nu_b - 1} w dt,
  // product-exact on the piecewise-linear hat functions.
  std::vector<double> FW(M + 1, 0.0);
  for (int j = 0; j < M; ++j) {
    const double tj = g.t_grid[j], tj1 = g.t_grid[j + 1];
    const double h = tj1 - tj;
    const double r0 = tb - tj, r1 = tb - tj1;
    const double A = (std::pow(r0, nu_b) - std::pow(r1, nu_b)) / nu_b;
    const double B = r0 * (std::pow(r0, nu_b) - std::pow(r1, nu_b)) / nu_b -
                     (std::pow(r0, nu_b + 1) - std::pow(r1, nu_b + 1)) / (nu_b + 1);
    FW[j] += A - B / h;
    FW[j + 1] += B / h;
  }

  std::vector<double> pv(M + 1), qv(M + 1);
  for (int i = 0; i <= M; ++i) {
    pv[i] = spec.p(g.x_grid[i]);
    qv[i] = spec.q(g.x_grid[i]);
  }

  // Forward substitution for a fixed Fredholm scalar c; returns the updated c.
  std::vector<double> w(M + 1);
  auto sweep_given_c = [&](double cval) {
    g.u[0] = 0.0;
    w[0] = qv[0];
    for (int i = 1; i <= M; ++i) {
      const double* wls = &W.wl[W.offset[i]];
      const double* wrs = &W.wr[W.offset[i]];
      double known = 0.0;
      for (int j = 0; j < i - 1; ++j) known += wls[j] * w[j] + wrs[j] * w[j + 1];
      known += wls[i - 1] * w[i - 1];
      const double wlast = wrs[i - 1] / gm;
      const double rhs = -P[i] * cval + known / gm + wlast * qv[i];
      const double denom = 1.0 - wlast * pv[i];
      if (std::abs(denom) < 1e-14) {
        throw std::runtime_error("oracle_fredholm_solve: singular node equation");
      }
      g.u[i] = rhs / denom;
      w[i] = pv[i] * g.u[i] + qv[i];
    }
    double c = 0.0;
    for (int i = 0; i <= M; ++i) c += FW[i] * w[i];
    return c / gm;
  };

  // The scalar c enters affinely: two sweeps determine the exact fixed point.
  const double c0 = sweep_given_c(0.0);
  const double c1 = sweep_given_c(1.0);
  const double denom = 1.0 - (c1 - c0);
  if (std::abs(denom) < 1e-12 || !std::isfinite(denom)) {
    throw std::runtime_error("oracle_fredholm_solve: Fredholm scalar not solvable");
  }
  sweep_given_c(c0 / denom);
  g.sweeps = 3;
  return g;
}

double grid_frac_int_at_b(const GridSolution& g, double nu) {
  if (nu <= 0.0) throw std::invalid_argument("grid_frac_int_at_b: requires nu > 0");
  const double tb = g.t_grid.back();
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < g.t_grid.size(); ++j) {
    const double tj = g.t_grid[j], tj1 = g.t_grid[j + 1];
    const double h = tj1 - tj;
    const double r0 = tb - tj, r1 = tb - tj1;
    const double A = (std::pow(r0, nu) - std::pow(r1, nu)) / nu;
    const double B = r0 * (std::pow(r0, nu) - std::pow(r1, nu)) / nu -
                     (std::pow(r0, nu + 1) - std::pow(r1, nu + 1)) / (nu + 1);
    acc += (A - B / h) * g.u[j] + (B / h) * g.u[j + 1];
  }
  return acc / std::tgamma(nu);
}

}  // namespace psifrac
