#ifndef LTS_TIME_MAP_HPP
#define LTS_TIME_MAP_HPP

// The fundamental local-time map: Gaussian-averaged evolved projector over a
// truncated time window, the indeterminacy bound tau_min, and the
// truncated-Gaussian local-time sampler.

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "lts/core.hpp"
#include "lts/quadrature.hpp"

namespace lts {

inline constexpr double kPi = 3.14159265358979323846;

struct TimeWindow {
  double t0 = 0.0;          // center, > 0
  double half_width = 0.0;  // Delta t, > 0
  double sigma = 0.0;       // Gaussian width, >= 0 (0 collapses to t0)
};

inline TimeWindow make_window(double t0, double half_width, double sigma) {
  if (t0 <= 0.0) throw std::invalid_argument("TimeWindow: t0 must be > 0");
  if (half_width <= 0.0)
    throw std::invalid_argument("TimeWindow: half_width must be > 0");
  if (sigma < 0.0) throw std::invalid_argument("TimeWindow: sigma must be >= 0");
  return TimeWindow{t0, half_width, sigma};
}

// Sharply peaked default: sigma = half_width / 3.
inline TimeWindow make_window(double t0, double half_width) {
  return make_window(t0, half_width, half_width / 3.0);
}

inline double energy_mean(const SpectralDecomposition& h, const Vec& psi) {
  double e = 0.0;
  for (std::size_t p = 0; p < h.levels(); ++p)
    e += h.eigenvalues[p] * (psi.adjoint() * h.projectors[p] * psi).value().real();
  return e;
}

inline double energy_stddev(const SpectralDecomposition& h, const Vec& psi) {
  const double mean = energy_mean(h, psi);
  double m2 = 0.0;
  for (std::size_t p = 0; p < h.levels(); ++p)
    m2 += h.eigenvalues[p] * h.eigenvalues[p] *
          (psi.adjoint() * h.projectors[p] * psi).value().real();
  return std::sqrt(std::max(0.0, m2 - mean * mean));
}

// max( pi / (2 dH), pi / (2 (<H> - E_g)) ), hbar = 1.
inline double tau_min(const SpectralDecomposition& h, const StateVector& psi) {
  const double excess = energy_mean(h, psi.amplitudes) - h.ground_energy();
  const double dev = energy_stddev(h, psi.amplitudes);
  if (excess <= 1e-14 && dev <= 1e-14)
    throw std::invalid_argument(
        "tau_min: state is a ground eigenstate, no finite bound exists");
  // An eigenstate above the ground level has zero variance; the variance
  // term then dominates and the bound is unbounded.
  if (dev <= 1e-14) return std::numeric_limits<double>::infinity();
  return std::max(kPi / (2.0 * dev), kPi / (2.0 * excess));
}

// Validates half_width < tau_min and a positive overlap across the window.
inline TimeWindow make_checked_window(double t0, double half_width, double sigma,
                                      const SpectralDecomposition& h,
                                      const StateVector& psi) {
  TimeWindow w = make_window(t0, half_width, sigma);
  if (half_width >= tau_min(h, psi))
    throw std::invalid_argument("TimeWindow: half_width exceeds tau_min");
  const Vec fwd = evolve(psi.amplitudes, h, t0 + half_width);
  const Vec bwd = evolve(psi.amplitudes, h, t0 - half_width);
  if (std::abs((bwd.adjoint() * fwd).value()) <= 0.0)
    throw std::invalid_argument("TimeWindow: edge states are orthogonal");
  return w;
}

namespace detail {

// Quadrature weights of the truncated, renormalized Gaussian on the window.
struct WindowQuadrature {
  std::vector<double> times;
  std::vector<double> weights;  // sum exactly 1 after renormalization
};

inline WindowQuadrature window_quadrature(const TimeWindow& w, int n_nodes) {
  const GaussLegendreRule rule = gauss_legendre(n_nodes);
  WindowQuadrature q;
  q.times.resize(n_nodes);
  q.weights.resize(n_nodes);
  double total = 0.0;
  for (int i = 0; i < n_nodes; ++i) {
    const double t = w.t0 + w.half_width * rule.nodes[i];
    const double g =
        w.sigma > 0.0 ? std::exp(-0.5 * std::pow((t - w.t0) / w.sigma, 2)) : 1.0;
    q.times[i] = t;
    q.weights[i] = rule.weights[i] * g;
    total += q.weights[i];
  }
  for (double& x : q.weights) x /= total;
  return q;
}

}  // namespace detail

// Characteristic function of the window density at angular frequency omega:
// integral of rho(t) e^{-i omega t} dt over the truncated interval.
inline cxd window_characteristic(const TimeWindow& w, double omega, int n_nodes = 64) {
  const auto q = detail::window_quadrature(w, n_nodes);
  cxd acc = 0.0;
  for (std::size_t i = 0; i < q.times.size(); ++i)
    acc += q.weights[i] * std::exp(cxd(0.0, -omega * q.times[i]));
  return acc;
}

// sigma(t0) = integral rho(t) |Psi(t)><Psi(t)| dt, rho a truncated Gaussian
// renormalized on the window.  Doubling the node count must not move the
// result by more than 1e-8, else the quadrature has not converged.
inline DensityMatrix sigma_map(const StateVector& psi0, const SpectralDecomposition& h,
                               const TimeWindow& w, int n_nodes = 64) {
  if (n_nodes < 8) throw std::invalid_argument("sigma_map: n_nodes must be >= 8");
  if (psi0.dim() != h.dim) throw std::invalid_argument("sigma_map: dimension mismatch");
  auto accumulate = [&](int n) {
    const auto q = detail::window_quadrature(w, n);
    Mat acc = Mat::Zero(h.dim, h.dim);
    for (std::size_t i = 0; i < q.times.size(); ++i) {
      const Vec psi = evolve(psi0.amplitudes, h, q.times[i]);
      acc += q.weights[i] * (psi * psi.adjoint());
    }
    return acc;
  };
  const Mat coarse = accumulate(n_nodes);
  const Mat fine = accumulate(2 * n_nodes);
  if ((fine - coarse).cwiseAbs().maxCoeff() > 1e-8)
    throw std::runtime_error("sigma_map: quadrature did not converge at the "
                             "requested node count");
  return DensityMatrix{fine, psi0.dims};
}

// Mixed-state extension by linearity over an eigendecomposition of the input.
inline DensityMatrix sigma_map(const DensityMatrix& rho0, const SpectralDecomposition& h,
                               const TimeWindow& w, int n_nodes = 64) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho0.matrix);
  Mat acc = Mat::Zero(rho0.dim(), rho0.dim());
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    const double wgt = es.eigenvalues()[k];
    if (wgt < 1e-14) continue;
    const StateVector psi{es.eigenvectors().col(k), rho0.dims};
    acc += wgt * sigma_map(psi, h, w, n_nodes).matrix;
  }
  return DensityMatrix{acc, rho0.dims};
}

// Draw from the truncated, renormalized Gaussian on the window.
inline double sample_local_time(std::mt19937_64& rng, const TimeWindow& w) {
  if (w.sigma == 0.0) return w.t0;
  std::normal_distribution<double> gauss(w.t0, w.sigma);
  for (int i = 0; i < 100000; ++i) {
    const double t = gauss(rng);
    if (std::abs(t - w.t0) <= w.half_width) return t;
  }
  throw std::runtime_error("sample_local_time: rejection sampling failed");
}

}  // namespace lts

#endif  // LTS_TIME_MAP_HPP
