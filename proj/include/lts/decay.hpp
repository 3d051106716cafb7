#ifndef LTS_DECAY_HPP
#define LTS_DECAY_HPP

// Nonexponential decay laws: rational clock rates kappa(t), the local-time
// integral and survival probability, the mother-daughter chain ODE, and the
// printed closed forms for comparison.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lts/quadrature.hpp"

namespace lts {

// kappa(t) = P_n(t) / Q_n(t), positive on t > 0 and saturating to 1.
struct RationalClockRate {
  enum class Kind { Unit, CanonicalQuadratic, GeneralPolynomial };

  Kind kind = Kind::Unit;
  // canonical n = 2 parameters: P = a t + b t^2, Q = 1 + p t + b t^2
  double a = 0.0, b = 0.0, p = 0.0;
  // general form, ascending coefficients, same order, equal leading terms
  std::vector<double> p_coeffs, q_coeffs;

  static RationalClockRate unit() { return RationalClockRate{}; }

  static RationalClockRate canonical(double a, double b, double p) {
    if (a <= 0.0 || b <= 0.0 || p < 0.0)
      throw std::invalid_argument("canonical clock rate requires a > 0, b > 0, p >= 0");
    if (4.0 * b <= p * p)
      throw std::invalid_argument("canonical clock rate requires 4b > p^2");
    RationalClockRate r;
    r.kind = Kind::CanonicalQuadratic;
    r.a = a;
    r.b = b;
    r.p = p;
    return r;
  }

  static RationalClockRate polynomial(std::vector<double> num, std::vector<double> den) {
    if (num.size() != den.size() || num.size() < 2)
      throw std::invalid_argument("polynomial clock rate requires matching orders >= 1");
    for (double c : num)
      if (c < 0.0) throw std::invalid_argument("polynomial coefficients must be >= 0");
    for (double c : den)
      if (c < 0.0) throw std::invalid_argument("polynomial coefficients must be >= 0");
    if (num.back() <= 0.0 || std::abs(num.back() - den.back()) > 0.0)
      throw std::invalid_argument("leading coefficients must be positive and equal");
    if (den.front() <= 0.0)
      throw std::invalid_argument("denominator constant term must be positive");
    bool positive = false;
    for (std::size_t i = 1; i < num.size(); ++i) positive = positive || num[i] > 0.0;
    if (!positive)
      throw std::invalid_argument("numerator must be positive for t > 0");
    RationalClockRate r;
    r.kind = Kind::GeneralPolynomial;
    r.p_coeffs = std::move(num);
    r.q_coeffs = std::move(den);
    return r;
  }
};

namespace detail {
inline double horner(const std::vector<double>& c, double t) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}
}  // namespace detail

inline double kappa(const RationalClockRate& r, double t) {
  if (t < 0.0) throw std::invalid_argument("kappa: t must be >= 0");
  switch (r.kind) {
    case RationalClockRate::Kind::Unit:
      return 1.0;
    case RationalClockRate::Kind::CanonicalQuadratic:
      return (r.a * t + r.b * t * t) / (1.0 + r.p * t + r.b * t * t);
    case RationalClockRate::Kind::GeneralPolynomial:
      return detail::horner(r.p_coeffs, t) / detail::horner(r.q_coeffs, t);
  }
  return 1.0;
}

namespace detail {
// Antiderivative of the canonical kappa: t plus a bounded arctan term plus a
// slowly increasing log term; requires 4b > p^2.
inline double canonical_antiderivative(const RationalClockRate& r, double t) {
  const double s = std::sqrt(4.0 * r.b - r.p * r.p);
  const double atan_term = (r.p * r.p - r.a * r.p - 2.0 * r.b) *
                           std::atan((r.p + 2.0 * r.b * t) / s) / (r.b * s);
  const double log_term =
      (r.a - r.p) * std::log(1.0 + r.p * t + r.b * t * t) / (2.0 * r.b);
  return t + atan_term + log_term;
}
}  // namespace detail

// Definite integral of kappa from 0 to t.  Closed form for the canonical
// quadratic family, numeric for general polynomials, exactly t for the unit
// clock.
inline double local_time(const RationalClockRate& r, double t) {
  if (t < 0.0) throw std::invalid_argument("local_time: t must be >= 0");
  if (t == 0.0) return 0.0;
  switch (r.kind) {
    case RationalClockRate::Kind::Unit:
      return t;
    case RationalClockRate::Kind::CanonicalQuadratic:
      return detail::canonical_antiderivative(r, t) -
             detail::canonical_antiderivative(r, 0.0);
    case RationalClockRate::Kind::GeneralPolynomial:
      return adaptive_integrate([&](double s) { return kappa(r, s); }, 0.0, t, 1e-12);
  }
  return t;
}

// The printed short-time constant C = e^{lambda mu}; provided for comparison
// with the definite-integral convention used by survival().
inline double paper_C_constant(double lambda, double a, double b, double p) {
  if (4.0 * b <= p * p)
    throw std::invalid_argument("paper_C_constant: requires 4b > p^2");
  const double s = std::sqrt(4.0 * b - p * p);
  const double mu = (2.0 * b + a * p - p * p) * std::atan(p / s) / (b * s);
  return std::exp(lambda * mu);
}

struct DecaySpecies {
  double rate = 0.0;  // lambda, probability per unit laboratory time
  RationalClockRate clock;
  double initial_population = 0.0;
};

inline DecaySpecies make_species(double rate, RationalClockRate clock,
                                 double initial_population) {
  if (rate < 0.0) throw std::invalid_argument("decay rate must be >= 0");
  if (initial_population < 0.0)
    throw std::invalid_argument("initial population must be >= 0");
  return DecaySpecies{rate, std::move(clock), initial_population};
}

// p(t) = exp(-lambda * integral_0^t kappa); p(0) = 1 exactly.
inline double survival(const DecaySpecies& s, double t) {
  return std::exp(-s.rate * local_time(s.clock, t));
}

// ---------------------------------------------------------------------------
// Adaptive Dormand-Prince 5(4) integration of the two-species chain.

namespace detail {

template <class F>
void dormand_prince(F&& f, double t0, double t1, std::vector<double>& y,
                    double rel_tol, double abs_tol) {
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695,
                          e4 = 393.0 / 640, e5 = -92097.0 / 339200,
                          e6 = 187.0 / 2100, e7 = 1.0 / 40;
  const std::size_t n = y.size();
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n),
      y5(n), y4(n);
  double t = t0;
  double h = (t1 - t0) / 16.0;
  int steps = 0;
  while (t < t1) {
    if (++steps > 2000000)
      throw std::runtime_error("decay_chain_ode: step-size failure (too many steps)");
    if (t + h > t1) h = t1 - t;
    f(t, y, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    f(t + h / 5.0, tmp, k2);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(t + 3.0 * h / 10.0, tmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + 4.0 * h / 5.0, tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + 8.0 * h / 9.0, tmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                           a65 * k5[i]);
    f(t + h, tmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                          b6 * k6[i]);
    f(t + h, y5, k7);
    for (std::size_t i = 0; i < n; ++i)
      y4[i] = y[i] + h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                          e6 * k6[i] + e7 * k7[i]);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double scale = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(y5[i] - y4[i]) / scale);
    }
    if (err <= 1.0) {
      t += h;
      y = y5;
    }
    const double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h *= std::min(5.0, std::max(0.2, factor));
    if (h < 1e-15 * std::max(1.0, std::abs(t1)))
      throw std::runtime_error("decay_chain_ode: step size underflow");
  }
}

}  // namespace detail

struct ChainResult {
  std::vector<double> t;
  std::vector<double> population_a;
  std::vector<double> population_b;
};

// dN_A/dt = -lA kA N_A;  dN_B/dt = -lB kB N_B + lA kA N_A, N_B(0) = 0.
inline ChainResult decay_chain_ode(const DecaySpecies& a, const DecaySpecies& b,
                                   const std::vector<double>& t_grid,
                                   double rel_tol = 1e-13, double abs_tol = 1e-14) {
  if (!t_grid.empty() && t_grid.front() < 0.0)
    throw std::invalid_argument("decay_chain_ode: grid must start at t >= 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (t_grid[i] <= t_grid[i - 1])
      throw std::invalid_argument("decay_chain_ode: grid must be strictly increasing");
  auto rhs = [&](double t, const std::vector<double>& y, std::vector<double>& dy) {
    const double flow = a.rate * kappa(a.clock, t) * y[0];
    dy[0] = -flow;
    dy[1] = -b.rate * kappa(b.clock, t) * y[1] + flow;
  };
  ChainResult out;
  std::vector<double> y = {a.initial_population, 0.0};
  double t = 0.0;
  for (double target : t_grid) {
    if (target > t) {
      detail::dormand_prince(rhs, t, target, y, rel_tol, abs_tol);
      t = target;
    }
    out.t.push_back(target);
    out.population_a.push_back(y[0]);
    out.population_b.push_back(y[1]);
  }
  return out;
}

namespace detail {
// (1 - e^{-d}) / d, continuous at d = 0.
inline double expm1_ratio(double d) {
  if (d == 0.0) return 1.0;
  return -std::expm1(-d) / d;
}
}  // namespace detail

// Standard one-time daughter population (kappa == 1 both species), with the
// removable equal-rate singularity handled exactly.
inline double daughter_standard(double lambda_a, double lambda_b, double n_a0,
                                double t) {
  const double xa = lambda_a * t;
  return n_a0 * xa * std::exp(-xa) * detail::expm1_ratio((lambda_b - lambda_a) * t);
}

// The paper's closed-form ansatz for N_B(t) with nontrivial clocks; exact
// only for constant kappa, reported against the ODE integration elsewhere.
inline double decay_chain_paper(const DecaySpecies& a, const DecaySpecies& b,
                                double t) {
  const double xa = a.rate * local_time(a.clock, t);
  const double xb = b.rate * local_time(b.clock, t);
  return a.initial_population * xa * std::exp(-xa) * detail::expm1_ratio(xb - xa);
}

// Linear onset magnitude of the standard short-time limit.
inline double short_time_chain_standard(double lambda_a, double n_a0, double t) {
  return lambda_a * n_a0 * t;
}

}  // namespace lts

#endif  // LTS_DECAY_HPP
