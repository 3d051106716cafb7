#ifndef LTS_QUADRATURE_HPP
#define LTS_QUADRATURE_HPP

// Gauss-Legendre rules with Newton-iterated nodes, plus a doubly adaptive
// integrator built from a nested pair of those rules.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lts {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

inline GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and derivative
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

template <class F>
auto gl_integrate(F&& f, double a, double b, const GaussLegendreRule& rule)
    -> decltype(f(a) * 1.0) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  auto acc = f(c + h * rule.nodes[0]) * (h * rule.weights[0]);
  for (std::size_t i = 1; i < rule.nodes.size(); ++i)
    acc += f(c + h * rule.nodes[i]) * (h * rule.weights[i]);
  return acc;
}

template <class F>
auto gl_integrate(F&& f, double a, double b, int n) -> decltype(f(a) * 1.0) {
  return gl_integrate(f, a, b, gauss_legendre(n));
}

namespace detail {

template <class F>
double adaptive_step(F& f, double a, double b, double tol,
                     const GaussLegendreRule& lo, const GaussLegendreRule& hi,
                     int depth) {
  const double coarse = gl_integrate(f, a, b, lo);
  const double fine = gl_integrate(f, a, b, hi);
  const double err = std::abs(fine - coarse);
  if (err <= tol || depth >= 60) return fine;
  const double m = 0.5 * (a + b);
  return adaptive_step(f, a, m, 0.5 * tol, lo, hi, depth + 1) +
         adaptive_step(f, m, b, 0.5 * tol, lo, hi, depth + 1);
}

}  // namespace detail

// Adaptive integration of a real-valued smooth function; the error estimate
// compares nested 10- and 21-point Gauss rules per panel.
template <class F>
double adaptive_integrate(F&& f, double a, double b, double rel_tol = 1e-12,
                          double abs_tol = 1e-300) {
  if (a == b) return 0.0;
  static thread_local const GaussLegendreRule lo = gauss_legendre(10);
  static thread_local const GaussLegendreRule hi = gauss_legendre(21);
  const double rough = std::abs(gl_integrate(f, a, b, hi));
  const double tol = std::max(abs_tol, rel_tol * std::max(rough, 1e-300));
  return detail::adaptive_step(f, a, b, tol, lo, hi, 0);
}

// Trapezoid rule over a tabulated function (possibly non-smooth input data).
template <class T>
T trapezoid(const std::vector<double>& x, const std::vector<T>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("trapezoid: need matching tables of length >= 2");
  T acc = 0.5 * (x[1] - x[0]) * (y[0] + y[1]);
  for (std::size_t i = 1; i + 1 < x.size(); ++i)
    acc += 0.5 * (x[i + 1] - x[i]) * (y[i] + y[i + 1]);
  return acc;
}

}  // namespace lts

#endif  // LTS_QUADRATURE_HPP
