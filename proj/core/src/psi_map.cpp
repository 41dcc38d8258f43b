#include "psifrac/psi_map.hpp"

#include <cmath>
#include <stdexcept>

namespace psifrac {

namespace {

std::function<double(double)> numeric_inverse(std::function<double(double)> psi,
                                              std::function<double(double)> dpsi,
                                              double a, double b) {
  return [psi, dpsi, a, b](double y) {
    // Safeguarded bisection + Newton on [a,b]; psi is strictly increasing.
    double lo = a, hi = b;
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
      double r = psi(x) - y;
      if (r > 0.0) hi = x; else lo = x;
      double d = dpsi(x);
      double xn = x - r / d;
      if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
      if (std::abs(xn - x) <= 1e-14 * std::max(1.0, std::abs(x))) return xn;
      x = xn;
    }
    return x;
  };
}

void validate_monotone(const PsiMap& m) {
  // dpsi must be positive at interior samples; psi itself must ascend across
  // all samples (dpsi may legitimately vanish at an endpoint, e.g. x^2.3 at 0).
  constexpr int kSamples = 1000;
  double prev = m.psi(m.a);
  for (int i = 1; i <= kSamples; ++i) {
    double x = m.a + (m.b - m.a) * i / kSamples;
    double cur = m.psi(x);
    if (!(cur > prev) || (i < kSamples && !(m.dpsi(x) > 0.0)))
      throw std::invalid_argument("psi map '" + m.name +
                                  "' is not strictly increasing at x=" +
                                  std::to_string(x));
    prev = cur;
  }
}

PsiMap finish(PsiMap m) {
  if (!(m.a < m.b)) throw std::invalid_argument("psi map requires a < b");
  if (!m.inv) m.inv = numeric_inverse(m.psi, m.dpsi, m.a, m.b);
  validate_monotone(m);
  m.psi_a = m.psi(m.a);
  m.psi_b = m.psi(m.b);
  if (!(m.psi_a < m.psi_b))
    throw std::invalid_argument("psi map must satisfy psi(a) < psi(b)");
  m.kappa = 2.0 / (m.psi_b - m.psi_a);
  return m;
}

}  // namespace

PsiMap make_psi_map(const std::string& name, double a, double b) {
  PsiMap m;
  m.name = name;
  m.a = a;
  m.b = b;
  if (name == "identity") {
    m.psi = [](double x) { return x; };
    m.dpsi = [](double) { return 1.0; };
    m.inv = [](double y) { return y; };
  } else if (name == "log") {
    if (a <= 0.0) throw std::invalid_argument("log map requires a > 0");
    m.psi = [](double x) { return std::log(x); };
    m.dpsi = [](double x) { return 1.0 / x; };
    m.inv = [](double y) { return std::exp(y); };
  } else if (name == "exp") {
    m.psi = [](double x) { return std::exp(x); };
    m.dpsi = [](double x) { return std::exp(x); };
    m.inv = [](double y) { return std::log(y); };
  } else if (name == "quadratic") {
    if (a < -0.5)
      throw std::invalid_argument("quadratic map requires a >= -1/2");
    m.psi = [](double x) { return 0.5 * x * (x + 1.0); };
    m.dpsi = [](double x) { return x + 0.5; };
    m.inv = [](double y) { return 0.5 * (-1.0 + std::sqrt(1.0 + 8.0 * y)); };
  } else if (name == "tan") {
    m.psi = [](double x) { return std::tan(x); };
    m.dpsi = [](double x) { double c = std::cos(x); return 1.0 / (c * c); };
    m.inv = [](double y) { return std::atan(y); };
  } else if (name == "sin") {
    m.psi = [](double x) { return std::sin(x); };
    m.dpsi = [](double x) { return std::cos(x); };
    m.inv = [](double y) { return std::asin(y); };
  } else if (name == "power") {
    if (a < 0.0) throw std::invalid_argument("power map requires a >= 0");
    m.psi = [](double x) { return std::pow(x, 2.3); };
    m.dpsi = [](double x) { return 2.3 * std::pow(x, 1.3); };
    m.inv = [](double y) { return std::pow(y, 1.0 / 2.3); };
  } else {
    throw std::invalid_argument("unknown psi map name: " + name);
  }
  return finish(std::move(m));
}

PsiMap make_custom_map(const std::string& name, double a, double b,
                       std::function<double(double)> psi,
                       std::function<double(double)> dpsi,
                       std::function<double(double)> inv) {
  PsiMap m;
  m.name = name;
  m.a = a;
  m.b = b;
  m.psi = std::move(psi);
  m.dpsi = std::move(dpsi);
  m.inv = std::move(inv);
  return finish(std::move(m));
}

double to_reference(const PsiMap& map, double x) {
  if (x < map.a - 1e-12 * (map.b - map.a) || x > map.b + 1e-12 * (map.b - map.a))
    throw std::domain_error("to_reference: x outside [a,b]");
  if (x == map.a) return -1.0;
  if (x == map.b) return 1.0;
  return map.kappa * (map.psi(x) - map.psi_a) - 1.0;
}

double from_reference(const PsiMap& map, double s) {
  if (s < -1.0 - 1e-12 || s > 1.0 + 1e-12)
    throw std::domain_error("from_reference: s outside [-1,1]");
  if (s <= -1.0) return map.a;
  if (s >= 1.0) return map.b;
  // When the psi window is already [-1,1] the affine transfer is the
  // identity; skip it to avoid needless rounding.
  double t = (map.psi_a == -1.0 && map.psi_b == 1.0)
                 ? s
                 : map.psi_a + (s + 1.0) / map.kappa;
  return map.inv(t);
}

namespace {

// First derivative by central difference + one Richardson level.
double d1(const std::function<double(double)>& f, double x, double h) {
  auto cd = [&](double hh) { return (f(x + hh) - f(x - hh)) / (2.0 * hh); };
  double c1 = cd(h), c2 = cd(0.5 * h);
  return (4.0 * c2 - c1) / 3.0;
}

}  // namespace

double delta_psi(const PsiMap& map, const std::function<double(double)>& f,
                 double x, int order) {
  if (order < 0) throw std::invalid_argument("delta_psi: order must be >= 0");
  if (x <= map.a || x >= map.b)
    throw std::domain_error("delta_psi: x must be interior to [a,b]");
  if (order == 0) return f(x);
  double h = 1e-4 * (map.b - map.a);
  // Nested differences step up to order*h away from x; keep inside (a,b).
  h = std::min({h, 0.45 * (x - map.a) / order, 0.45 * (map.b - x) / order});
  std::function<double(double)> g = f;
  for (int k = 1; k < order; ++k) {
    auto prev = g;
    g = [&map, prev, h](double y) { return d1(prev, y, h) / map.dpsi(y); };
  }
  return d1(g, x, h) / map.dpsi(x);
}

}  // namespace psifrac
