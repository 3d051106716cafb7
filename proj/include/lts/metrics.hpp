#ifndef LTS_METRICS_HPP
#define LTS_METRICS_HPP

// Distinguishability overlap S, individuality functional I, orthogonal
// state-transition time bounds, and random-coefficient moment statistics.

#include <cmath>
#include <random>
#include <vector>

#include "lts/core.hpp"
#include "lts/quadrature.hpp"
#include "lts/time_map.hpp"

namespace lts {

struct BlockSpectrum {
  std::vector<double> eigenvalues;
  std::vector<int> degeneracies;

  int dim() const {
    int d = 0;
    for (int g : degeneracies) d += g;
    return d;
  }
  // Energy per basis state, eigenvalues repeated by degeneracy.
  std::vector<double> state_energies() const {
    std::vector<double> e;
    e.reserve(dim());
    for (std::size_t p = 0; p < eigenvalues.size(); ++p)
      e.insert(e.end(), degeneracies[p], eigenvalues[p]);
    return e;
  }
};

inline BlockSpectrum make_block_spectrum(std::vector<double> eigenvalues,
                                         std::vector<int> degeneracies) {
  if (eigenvalues.size() != degeneracies.size() || eigenvalues.empty())
    throw std::invalid_argument("block spectrum: matching nonempty lists required");
  for (int g : degeneracies)
    if (g < 1) throw std::invalid_argument("block spectrum: degeneracy must be >= 1");
  return BlockSpectrum{std::move(eigenvalues), std::move(degeneracies)};
}

inline BlockSpectrum block_spectrum_of(const SpectralDecomposition& sd) {
  return BlockSpectrum{sd.eigenvalues, sd.degeneracies};
}

struct BlockSpectra {
  std::vector<BlockSpectrum> blocks;

  int total_dim() const {
    int d = 1;
    for (const auto& b : blocks) d *= b.dim();
    return d;
  }
};

// S = sum |c_m|^2 e^{-i sum_b E_b(m_b) dt_b}, psi expanded in the product
// energy eigenbasis of the blocks.
inline cxd overlap_S(const Vec& amplitudes, const BlockSpectra& spectra,
                     const std::vector<double>& offsets) {
  if (spectra.blocks.size() != offsets.size())
    throw std::invalid_argument("overlap_S: one offset per block required");
  if (amplitudes.size() != spectra.total_dim())
    throw std::invalid_argument("overlap_S: basis mismatch");
  std::vector<std::vector<double>> energies;
  std::vector<int> dims;
  for (const auto& b : spectra.blocks) {
    energies.push_back(b.state_energies());
    dims.push_back(b.dim());
  }
  cxd acc = 0.0;
  for (int m = 0; m < amplitudes.size(); ++m) {
    const double w = std::norm(amplitudes[m]);
    if (w == 0.0) continue;
    double phase = 0.0;
    int idx = m;
    for (int b = static_cast<int>(dims.size()) - 1; b >= 0; --b) {
      phase += energies[b][idx % dims[b]] * offsets[b];
      idx /= dims[b];
    }
    acc += w * std::exp(cxd(0.0, -phase));
  }
  return acc;
}

// Closed form of the uniform-density continuous limit: sqrt(2(1-cos r))/r.
inline double overlap_uniform_density(double r) {
  if (r < 0.0) throw std::invalid_argument("overlap_uniform_density: r must be >= 0");
  if (r < 1e-4) return 1.0 - r * r / 24.0;  // series limit at r -> 0
  return std::sqrt(2.0 * (1.0 - std::cos(r))) / r;
}

// Integral of a tabulated density against e^{-ix} on [0, r], trapezoid rule.
inline cxd overlap_density(const std::vector<double>& x, const std::vector<double>& p) {
  for (double v : p)
    if (v < 0.0) throw std::invalid_argument("overlap_density: density must be >= 0");
  const double total = trapezoid(x, p);
  if (std::abs(total - 1.0) > 1e-8)
    throw std::invalid_argument("overlap_density: density does not integrate to 1");
  std::vector<cxd> integrand(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    integrand[i] = p[i] * std::exp(cxd(0.0, -x[i]));
  return trapezoid(x, integrand);
}

// I = (1/d) sum e^{-i sum E dt} g_1i g_2j ...; factorizes over blocks.
inline cxd individuality_I(const BlockSpectra& spectra,
                           const std::vector<double>& offsets) {
  if (spectra.blocks.size() != offsets.size())
    throw std::invalid_argument("individuality_I: one offset per block required");
  cxd acc = 1.0;
  for (std::size_t b = 0; b < spectra.blocks.size(); ++b) {
    const auto& blk = spectra.blocks[b];
    cxd s = 0.0;
    for (std::size_t p = 0; p < blk.eigenvalues.size(); ++p)
      s += static_cast<double>(blk.degeneracies[p]) *
           std::exp(cxd(0.0, -blk.eigenvalues[p] * offsets[b]));
    acc *= s / static_cast<double>(blk.dim());
  }
  return acc;
}

// tau = h / (4 sum_i (<H_i> - E_i,g)) with h = 2 pi (hbar = 1).
inline double orthogonal_time_bound(const std::vector<double>& mean_excess_energies) {
  double total = 0.0;
  for (double e : mean_excess_energies) {
    if (e < 0.0)
      throw std::invalid_argument("orthogonal_time_bound: excess energies must be >= 0");
    total += e;
  }
  if (total <= 0.0)
    throw std::invalid_argument("orthogonal_time_bound: at least one positive entry required");
  return 2.0 * kPi / (4.0 * total);
}

// tau = max{ h / 4(<H> - E_g), h / (4 dH) }.
inline double margolus_bound(double mean_excess, double std_dev) {
  if (mean_excess < 0.0 || std_dev < 0.0)
    throw std::invalid_argument("margolus_bound: arguments must be >= 0");
  if (mean_excess == 0.0 && std_dev == 0.0)
    throw std::invalid_argument("margolus_bound: at least one argument must be positive");
  double tau = 0.0;
  const double h = 2.0 * kPi;
  if (mean_excess > 0.0) tau = std::max(tau, h / (4.0 * mean_excess));
  if (std_dev > 0.0) tau = std::max(tau, h / (4.0 * std_dev));
  if (mean_excess == 0.0 || std_dev == 0.0)
    return std::numeric_limits<double>::infinity();  // eigenstate never orthogonalizes
  return tau;
}

struct MomentReport {
  int dimension = 0;
  int n_samples = 0;
  double mean_c2 = 0.0;   // <|c_i|^2> for a fixed component
  double mean_c4 = 0.0;   // <|c_i|^4>
  double std_c2 = 0.0;    // Delta(|c_i|^2)
  double se_mean_c2 = 0.0;
  double se_mean_c4 = 0.0;
  double target_c2() const { return 1.0 / dimension; }
  double target_c4() const { return 2.0 / (static_cast<double>(dimension) * (dimension + 1)); }
  double target_std_c2() const {
    const double n = dimension;
    return std::sqrt((n - 1.0) / (n * n * (n + 1.0)));
  }
};

// Uniform states on the unit sphere via normalized complex Gaussian vectors;
// moments tracked for one fixed component (all components are exchangeable,
// and averaging over components of one sample is identically 1/N).
inline MomentReport haar_shell_moments(std::mt19937_64& rng, int dimension,
                                       int n_samples) {
  if (dimension < 2) throw std::invalid_argument("haar_shell_moments: N must be >= 2");
  if (n_samples < 1) throw std::invalid_argument("haar_shell_moments: n_samples must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  double s2 = 0.0, s4 = 0.0, s8 = 0.0;
  for (int k = 0; k < n_samples; ++k) {
    double norm2 = 0.0;
    double c0 = 0.0;
    for (int i = 0; i < dimension; ++i) {
      const double re = gauss(rng), im = gauss(rng);
      const double a2 = re * re + im * im;
      norm2 += a2;
      if (i == 0) c0 = a2;
    }
    const double u = c0 / norm2;  // |c_0|^2
    s2 += u;
    s4 += u * u;
    s8 += u * u * u * u;
  }
  MomentReport r;
  r.dimension = dimension;
  r.n_samples = n_samples;
  r.mean_c2 = s2 / n_samples;
  r.mean_c4 = s4 / n_samples;
  const double var_c2 = std::max(0.0, s4 / n_samples - r.mean_c2 * r.mean_c2);
  const double var_c4 = std::max(0.0, s8 / n_samples - r.mean_c4 * r.mean_c4);
  r.std_c2 = std::sqrt(var_c2);
  r.se_mean_c2 = std::sqrt(var_c2 / n_samples);
  r.se_mean_c4 = std::sqrt(var_c4 / n_samples);
  return r;
}

// Five-qubit / two-qubit pair with equal weights 1/18 and the maximal
// window offsets; returns |S|^2, independent of the omegas.
inline double appendix_a_scenario(double omega1 = 1.0, double omega2 = 1.0) {
  const std::vector<double> e1 = {-2.5 * omega1, -1.5 * omega1, -0.5 * omega1,
                                  0.5 * omega1, 1.5 * omega1, 2.5 * omega1};
  const std::vector<double> e2 = {-omega2, 0.0, omega2};
  const double tau1 = kPi / (5.0 * omega1);
  const double tau2 = kPi / (2.0 * omega2);
  cxd s = 0.0;
  for (double a : e1)
    for (double b : e2) s += std::exp(cxd(0.0, -(a * tau1 + b * tau2)));
  s /= 18.0;
  return std::norm(s);
}

}  // namespace lts

#endif  // LTS_METRICS_HPP
