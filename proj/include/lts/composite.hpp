#ifndef LTS_COMPOSITE_HPP
#define LTS_COMPOSITE_HPP

// Composite Hamiltonians with self terms and pair couplings, detection of
// approximately isolated blocks, per-block local-time assignment and
// multi-time product evolution, and the merge/split transition machinery.

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lts/core.hpp"
#include "lts/time_map.hpp"

namespace lts {

struct Subsystem {
  std::string id;
  int dim = 0;
};

struct CompositeHamiltonian {
  std::vector<Subsystem> subsystems;
  std::vector<Mat> self_terms;                   // one per subsystem
  std::map<std::pair<int, int>, Mat> pair_terms; // keyed (i, j), i < j

  std::vector<int> dims() const {
    std::vector<int> d;
    d.reserve(subsystems.size());
    for (const auto& s : subsystems) d.push_back(s.dim);
    return d;
  }
  int total_dim() const { return detail::checked_product(dims()); }
  int count() const { return static_cast<int>(subsystems.size()); }

  int index_of(const std::string& id) const {
    for (int i = 0; i < count(); ++i)
      if (subsystems[i].id == id) return i;
    throw std::invalid_argument("unknown subsystem id: " + id);
  }

  Mat full_hamiltonian() const {
    const auto d = dims();
    Mat h = Mat::Zero(total_dim(), total_dim());
    for (int i = 0; i < count(); ++i) h += embed_operator(self_terms[i], {i}, d);
    for (const auto& [key, op] : pair_terms)
      h += embed_operator(op, {key.first, key.second}, d);
    return h;
  }

  // Hamiltonian on the subspace of one block (ascending subsystem order):
  // self terms plus intra-block pair terms.
  Mat block_hamiltonian(const std::vector<int>& block) const {
    std::vector<int> b = block;
    std::sort(b.begin(), b.end());
    std::vector<int> bdims;
    for (int p : b) bdims.push_back(subsystems[p].dim);
    const int d = detail::checked_product(bdims);
    Mat h = Mat::Zero(d, d);
    for (std::size_t k = 0; k < b.size(); ++k)
      h += embed_operator(self_terms[b[k]], {static_cast<int>(k)}, bdims);
    for (const auto& [key, op] : pair_terms) {
      const auto it1 = std::find(b.begin(), b.end(), key.first);
      const auto it2 = std::find(b.begin(), b.end(), key.second);
      if (it1 == b.end() || it2 == b.end()) continue;
      h += embed_operator(op,
                          {static_cast<int>(it1 - b.begin()),
                           static_cast<int>(it2 - b.begin())},
                          bdims);
    }
    return h;
  }
};

inline CompositeHamiltonian make_composite(std::vector<Subsystem> subsystems,
                                           std::vector<Mat> self_terms,
                                           std::map<std::pair<int, int>, Mat> pair_terms) {
  if (subsystems.size() != self_terms.size())
    throw std::invalid_argument("one self term per subsystem required");
  for (std::size_t i = 0; i < subsystems.size(); ++i) {
    if (self_terms[i].rows() != subsystems[i].dim ||
        self_terms[i].cols() != subsystems[i].dim)
      throw std::invalid_argument("self term size mismatch at " + subsystems[i].id);
    if (hermiticity_defect(self_terms[i]) > kHermitianTol)
      throw std::invalid_argument("self term not Hermitian at " + subsystems[i].id);
  }
  const int n = static_cast<int>(subsystems.size());
  for (const auto& [key, op] : pair_terms) {
    if (key.first < 0 || key.second >= n || key.first >= key.second)
      throw std::invalid_argument("pair term key must satisfy 0 <= i < j < n");
    const int d = subsystems[key.first].dim * subsystems[key.second].dim;
    if (op.rows() != d || op.cols() != d)
      throw std::invalid_argument("pair term size mismatch");
    if (hermiticity_defect(op) > kHermitianTol)
      throw std::invalid_argument("pair term not Hermitian");
  }
  return CompositeHamiltonian{std::move(subsystems), std::move(self_terms),
                              std::move(pair_terms)};
}

// ---------------------------------------------------------------------------

struct Partition {
  std::vector<std::vector<int>> blocks;  // disjoint, covering, each ascending

  std::size_t block_count() const { return blocks.size(); }
};

inline Partition make_partition(std::vector<std::vector<int>> blocks, int n_subsystems) {
  std::vector<bool> seen(n_subsystems, false);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty partition block");
    std::sort(b.begin(), b.end());
    for (int p : b) {
      if (p < 0 || p >= n_subsystems)
        throw std::invalid_argument("partition index out of range");
      if (seen[p]) throw std::invalid_argument("partition blocks are not disjoint");
      seen[p] = true;
    }
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("partition does not cover all subsystems");
  std::sort(blocks.begin(), blocks.end());
  return Partition{std::move(blocks)};
}

inline Partition trivial_partition(int n_subsystems) {
  std::vector<std::vector<int>> blocks{std::vector<int>(n_subsystems)};
  std::iota(blocks[0].begin(), blocks[0].end(), 0);
  return Partition{std::move(blocks)};
}

// One time value per block, shared by every subsystem in the block (R2).
struct BlockTime {
  double time = 0.0;
  double t0 = 0.0;
  double half_width = 0.0;
};

struct LocalTimeAssignment {
  std::vector<BlockTime> entries;  // aligned with Partition::blocks
};

inline LocalTimeAssignment make_assignment(std::vector<BlockTime> entries,
                                           const Partition& partition) {
  if (entries.size() != partition.block_count())
    throw std::invalid_argument("one time per block required");
  for (const auto& e : entries)
    if (std::abs(e.time - e.t0) > e.half_width)
      throw std::invalid_argument("block time outside its window");
  return LocalTimeAssignment{std::move(entries)};
}

struct TrajectoryStep {
  StateVector state;
  Partition partition;
  LocalTimeAssignment times;
};

struct Trajectory {
  std::vector<TrajectoryStep> steps;
};

// ---------------------------------------------------------------------------
// Operations

inline std::map<std::pair<int, int>, double> interaction_means(
    const StateVector& psi, const CompositeHamiltonian& h) {
  if (psi.dim() != h.total_dim())
    throw std::invalid_argument("interaction_means: dimension mismatch");
  const auto d = h.dims();
  std::map<std::pair<int, int>, double> out;
  for (const auto& [key, op] : h.pair_terms) {
    const Mat full = embed_operator(op, {key.first, key.second}, d);
    out[key] = expectation(full, psi.amplitudes);
  }
  return out;
}

// Relative energy scale: max over subsystems of <H_i> - E_i,ground,
// floored at 1e-12 so a fully degenerate Hamiltonian still yields a scale.
inline double coupling_energy_scale(const StateVector& psi,
                                    const CompositeHamiltonian& h) {
  const auto d = h.dims();
  double scale = 0.0;
  for (int i = 0; i < h.count(); ++i) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h.self_terms[i], Eigen::EigenvaluesOnly);
    const Mat full = embed_operator(h.self_terms[i], {i}, d);
    scale = std::max(scale, expectation(full, psi.amplitudes) -
                                es.eigenvalues().minCoeff());
  }
  return std::max(scale, 1e-12);
}

// Graph with an edge (i, j) iff |<H_ij>| > epsilon * energy scale; blocks are
// the connected components.
inline Partition detect_partition(const StateVector& psi, const CompositeHamiltonian& h,
                                  double epsilon = 1e-3) {
  if (epsilon <= 0.0) throw std::invalid_argument("detect_partition: epsilon must be > 0");
  const double threshold = epsilon * coupling_energy_scale(psi, h);
  const auto means = interaction_means(psi, h);
  std::vector<int> parent(h.count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [key, mean] : means)
    if (std::abs(mean) > threshold) parent[find(key.first)] = find(key.second);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < h.count(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, members] : groups) blocks.push_back(std::move(members));
  return make_partition(std::move(blocks), h.count());
}

inline StateVector multi_time_evolve(const StateVector& psi, const CompositeHamiltonian& h,
                                     const Partition& partition,
                                     const std::vector<double>& block_times) {
  if (block_times.size() != partition.block_count())
    throw std::invalid_argument("multi_time_evolve: missing block time");
  if (psi.dim() != h.total_dim())
    throw std::invalid_argument("multi_time_evolve: dimension mismatch");
  const auto d = h.dims();
  Vec state = psi.amplitudes;
  for (std::size_t b = 0; b < partition.block_count(); ++b) {
    const auto& block = partition.blocks[b];
    const SpectralDecomposition hb = spectral_decompose(h.block_hamiltonian(block));
    const Mat u = embed_operator(propagator(hb, block_times[b]), block, d);
    state = u * state;
  }
  return StateVector{std::move(state), psi.dims};
}

inline StateVector multi_time_evolve(const StateVector& psi, const CompositeHamiltonian& h,
                                     const Partition& partition,
                                     const LocalTimeAssignment& times) {
  std::vector<double> t;
  t.reserve(times.entries.size());
  for (const auto& e : times.entries) t.push_back(e.time);
  return multi_time_evolve(psi, h, partition, t);
}

struct FactorizationDecision {
  double fidelity_a = 0.0;  // time-averaged |<exact|factored_A>|
  double fidelity_b = 0.0;
  int winner = 0;           // 0 -> partition A, 1 -> partition B
  bool degenerate = false;  // fidelities within 1e-9 of each other
};

// Evolve exactly under the full Hamiltonian and under each partition's
// block-local Hamiltonians at n_probe times in (0, horizon]; the candidate
// with the larger time-averaged overlap wins.  Ties go to the coarser
// partition and carry the degenerate flag.
inline FactorizationDecision compare_factorizations(
    const StateVector& psi, const CompositeHamiltonian& h, const Partition& a,
    const Partition& b, double horizon, int n_probe = 8) {
  if (horizon <= 0.0) throw std::invalid_argument("compare_factorizations: horizon <= 0");
  if (n_probe < 2) throw std::invalid_argument("compare_factorizations: n_probe < 2");
  const SpectralDecomposition full = spectral_decompose(h.full_hamiltonian());
  auto fidelity = [&](const Partition& p) {
    double acc = 0.0;
    for (int k = 1; k <= n_probe; ++k) {
      const double t = horizon * k / n_probe;
      const Vec exact = evolve(psi.amplitudes, full, t);
      const Vec factored =
          multi_time_evolve(psi, h, p, std::vector<double>(p.block_count(), t))
              .amplitudes;
      acc += std::abs((exact.adjoint() * factored).value());
    }
    return acc / n_probe;
  };
  FactorizationDecision d;
  d.fidelity_a = fidelity(a);
  d.fidelity_b = fidelity(b);
  if (std::abs(d.fidelity_a - d.fidelity_b) < 1e-9) {
    d.degenerate = true;
    d.winner = a.block_count() <= b.block_count() ? 0 : 1;
  } else {
    d.winner = d.fidelity_a > d.fidelity_b ? 0 : 1;
  }
  return d;
}

inline Trajectory start_trajectory(StateVector psi, Partition partition,
                                   LocalTimeAssignment times) {
  Trajectory traj;
  traj.steps.push_back(TrajectoryStep{std::move(psi), std::move(partition),
                                      std::move(times)});
  return traj;
}

inline Trajectory apply_transition_with_times(const Trajectory& traj,
                                              const CompositeHamiltonian& h,
                                              const Partition& new_partition,
                                              LocalTimeAssignment times);

// Sample fresh local times for every block of the new partition, evolve the
// last state, and append.  Previous times become frozen parameters.
inline Trajectory apply_transition(const Trajectory& traj,
                                   const CompositeHamiltonian& h,
                                   const Partition& new_partition, std::mt19937_64& rng,
                                   double t0, const std::vector<double>& half_widths,
                                   double sigma_fraction = 1.0 / 3.0) {
  if (traj.steps.empty()) throw std::invalid_argument("apply_transition: empty trajectory");
  if (half_widths.size() != new_partition.block_count())
    throw std::invalid_argument("apply_transition: one half-width per block required");
  std::vector<BlockTime> entries;
  entries.reserve(new_partition.block_count());
  for (std::size_t b = 0; b < new_partition.block_count(); ++b) {
    const TimeWindow w =
        make_window(t0, half_widths[b], half_widths[b] * sigma_fraction);
    entries.push_back(BlockTime{sample_local_time(rng, w), t0, half_widths[b]});
  }
  return apply_transition_with_times(
      traj, h, new_partition, make_assignment(std::move(entries), new_partition));
}

// Deterministic continuation with explicit times.
inline Trajectory apply_transition_with_times(const Trajectory& traj,
                                              const CompositeHamiltonian& h,
                                              const Partition& new_partition,
                                              LocalTimeAssignment times) {
  if (traj.steps.empty()) throw std::invalid_argument("apply_transition: empty trajectory");
  const StateVector next =
      multi_time_evolve(traj.steps.back().state, h, new_partition, times);
  Trajectory out = traj;
  out.steps.push_back(TrajectoryStep{next, new_partition, std::move(times)});
  return out;
}

// Replay the recorded unitaries; the largest deviation from the stored
// states over all steps.
inline double trajectory_replay_defect(const Trajectory& traj,
                                       const CompositeHamiltonian& h) {
  double defect = 0.0;
  for (std::size_t i = 1; i < traj.steps.size(); ++i) {
    const StateVector replay = multi_time_evolve(
        traj.steps[i - 1].state, h, traj.steps[i].partition, traj.steps[i].times);
    defect = std::max(defect, (replay.amplitudes - traj.steps[i].state.amplitudes)
                                  .cwiseAbs()
                                  .maxCoeff());
  }
  return defect;
}

}  // namespace lts

#endif  // LTS_COMPOSITE_HPP
