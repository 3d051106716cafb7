#ifndef LTS_REVERSIBILITY_HPP
#define LTS_REVERSIBILITY_HPP

// Transition tables, relative entropy, detailed balance, the product-form
// local-time redistribution table, and the plain-irreversibility fidelity
// demonstration.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "lts/composite.hpp"
#include "lts/core.hpp"

namespace lts {

// Joint probabilities P(x -> x') over a forward label set and a target label
// set.  For a single-space table (from == to) the reverse probability of
// (x, x') is read off the same matrix at (x', x); a redistribution table
// carries its reverse matrix explicitly.
struct TransitionTable {
  std::vector<std::string> from_labels;
  std::vector<std::string> to_labels;
  RMat forward;  // |from| x |to|, entries >= 0, summing to 1
  RMat reverse;  // |to| x |from|, same normalization
  bool single_space = false;

  double reverse_of(int i, int j) const {
    return single_space ? forward(j, i) : reverse(j, i);
  }
};

inline TransitionTable make_table(std::vector<std::string> labels, RMat p) {
  const int n = static_cast<int>(labels.size());
  if (p.rows() != n || p.cols() != n)
    throw std::invalid_argument("transition table size mismatch");
  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (p(i, j) < 0.0) throw std::invalid_argument("negative transition probability");
      total += p(i, j);
    }
  if (std::abs(total - 1.0) > kNormTol)
    throw std::invalid_argument("transition probabilities must sum to 1");
  TransitionTable t;
  t.from_labels = labels;
  t.to_labels = std::move(labels);
  t.forward = std::move(p);
  t.reverse = t.forward.transpose();
  t.single_space = true;
  return t;
}

struct RelativeEntropyResult {
  double value = 0.0;
  bool infinite = false;  // some forward-positive pair has zero reverse
};

// Sum P(x->x') log( P(x->x') / P(x'->x) ), natural logarithm; zero-probability
// forward terms contribute 0, a positive forward term with zero reverse makes
// the result infinite.
inline RelativeEntropyResult relative_entropy(const TransitionTable& t) {
  RelativeEntropyResult r;
  for (int i = 0; i < t.forward.rows(); ++i)
    for (int j = 0; j < t.forward.cols(); ++j) {
      const double p = t.forward(i, j);
      if (p == 0.0) continue;
      const double q = t.reverse_of(i, j);
      if (q == 0.0) {
        r.infinite = true;
        continue;
      }
      r.value += p * std::log(p / q);
    }
  if (r.infinite) r.value = std::numeric_limits<double>::infinity();
  return r;
}

inline bool detailed_balance(const TransitionTable& t, double tol) {
  for (int i = 0; i < t.forward.rows(); ++i)
    for (int j = 0; j < t.forward.cols(); ++j)
      if (std::abs(t.forward(i, j) - t.reverse_of(i, j)) > tol) return false;
  return true;
}

// P(x -> x') = p_before(x) * p_after(x'): independent choices of the local
// times before and after a redistribution.  The inverse transition carries
// the same product, so detailed balance holds by construction.
inline TransitionTable redistribution_table(const std::vector<double>& p_before,
                                            const std::vector<double>& p_after) {
  auto check = [](const std::vector<double>& p, const char* which) {
    double total = 0.0;
    for (double v : p) {
      if (v < 0.0) throw std::invalid_argument(std::string(which) + ": negative weight");
      total += v;
    }
    if (std::abs(total - 1.0) > kNormTol)
      throw std::invalid_argument(std::string(which) + ": distribution not normalized");
  };
  check(p_before, "p_before");
  check(p_after, "p_after");
  TransitionTable t;
  for (std::size_t i = 0; i < p_before.size(); ++i)
    t.from_labels.push_back("x" + std::to_string(i));
  for (std::size_t j = 0; j < p_after.size(); ++j)
    t.to_labels.push_back("y" + std::to_string(j));
  t.forward.resize(p_before.size(), p_after.size());
  t.reverse.resize(p_after.size(), p_before.size());
  for (std::size_t i = 0; i < p_before.size(); ++i)
    for (std::size_t j = 0; j < p_after.size(); ++j) {
      t.forward(i, j) = p_before[i] * p_after[j];
      t.reverse(j, i) = p_after[j] * p_before[i];
    }
  t.single_space = false;
  return t;
}

// Coarse-grain a window's truncated Gaussian into bin weights (the discrete
// time distribution used by redistribution tables).
inline std::vector<double> window_bin_weights(const TimeWindow& w, int n_bins = 16) {
  if (n_bins < 1) throw std::invalid_argument("window_bin_weights: n_bins must be >= 1");
  std::vector<double> weights(n_bins, 0.0);
  const double lo = w.t0 - w.half_width;
  const double width = 2.0 * w.half_width / n_bins;
  double total = 0.0;
  for (int b = 0; b < n_bins; ++b) {
    const double tc = lo + (b + 0.5) * width;
    weights[b] = w.sigma > 0.0
                     ? std::exp(-0.5 * std::pow((tc - w.t0) / w.sigma, 2))
                     : 1.0;
    total += weights[b];
  }
  for (double& x : weights) x /= total;
  return weights;
}

struct IrreversibilityStats {
  double control_fidelity = 0.0;      // same times forward and back
  std::vector<double> fidelities;     // fresh-time inverse runs
  double min_fidelity = 0.0;
  double max_fidelity = 0.0;
  double mean_fidelity = 0.0;
};

// Forward evolution through the partition sequence with sampled times, then
// the structural inverse with freshly sampled times; the control run uses the
// recorded times and must return exactly.
inline IrreversibilityStats plain_irreversibility_demo(
    const StateVector& psi0, const CompositeHamiltonian& h,
    const std::vector<Partition>& sequence, std::mt19937_64& rng, int n_trials,
    double t0, double half_width, double sigma_fraction = 1.0 / 3.0) {
  if (sequence.size() < 2)
    throw std::invalid_argument(
        "plain_irreversibility_demo: need at least one forward and one inverse step");
  const TimeWindow window = make_window(t0, half_width, half_width * sigma_fraction);
  auto sample_times = [&](const Partition& p) {
    std::vector<double> t(p.block_count());
    for (double& x : t) x = sample_local_time(rng, window);
    return t;
  };
  IrreversibilityStats stats;
  stats.fidelities.reserve(n_trials);
  for (int trial = 0; trial < n_trials; ++trial) {
    StateVector state = psi0;
    std::vector<std::vector<double>> forward_times;
    for (const auto& p : sequence) {
      forward_times.push_back(sample_times(p));
      state = multi_time_evolve(state, h, p, forward_times.back());
    }
    // structural inverse: reverse order, negated fresh times
    StateVector fresh = state;
    for (int s = static_cast<int>(sequence.size()) - 1; s >= 0; --s) {
      std::vector<double> t = sample_times(sequence[s]);
      for (double& x : t) x = -x;
      fresh = multi_time_evolve(fresh, h, sequence[s], t);
    }
    stats.fidelities.push_back(
        std::abs((psi0.amplitudes.adjoint() * fresh.amplitudes).value()));
    if (trial == 0) {
      StateVector control = state;
      for (int s = static_cast<int>(sequence.size()) - 1; s >= 0; --s) {
        std::vector<double> t = forward_times[s];
        for (double& x : t) x = -x;
        control = multi_time_evolve(control, h, sequence[s], t);
      }
      stats.control_fidelity =
          std::abs((psi0.amplitudes.adjoint() * control.amplitudes).value());
    }
  }
  stats.min_fidelity = *std::min_element(stats.fidelities.begin(), stats.fidelities.end());
  stats.max_fidelity = *std::max_element(stats.fidelities.begin(), stats.fidelities.end());
  double sum = 0.0;
  for (double f : stats.fidelities) sum += f;
  stats.mean_fidelity = sum / stats.fidelities.size();
  return stats;
}

}  // namespace lts

#endif  // LTS_REVERSIBILITY_HPP
