#ifndef LTS_SCENARIO_HPP
#define LTS_SCENARIO_HPP

// Scenario runners behind the CLI: each kind dispatches into the library,
// produces CSV rows with declared tolerances, and reports pass/fail.

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lts/composite.hpp"
#include "lts/config.hpp"
#include "lts/core.hpp"
#include "lts/decay.hpp"
#include "lts/metrics.hpp"
#include "lts/reduced.hpp"
#include "lts/reversibility.hpp"
#include "lts/time_map.hpp"

namespace lts {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CsvRow {
  std::string quantity;
  double param = std::numeric_limits<double>::quiet_NaN();
  double value = 0.0;
  double tolerance = std::numeric_limits<double>::quiet_NaN();
  std::string status = "ok";  // ok | pass | fail
};

struct ScenarioResult {
  std::string name;
  std::string kind;
  std::uint64_t seed = 0;
  std::vector<CsvRow> rows;

  bool passed() const {
    for (const auto& r : rows)
      if (r.status == "fail") return false;
    return true;
  }
};

inline std::string to_csv(const ScenarioResult& r) {
  std::string out = "scenario,quantity,param,value,tolerance,status\n";
  for (const auto& row : r.rows) {
    out += r.name + "," + row.quantity + ",";
    out += std::isnan(row.param) ? "" : format_double(row.param);
    out += "," + format_double(row.value) + ",";
    out += std::isnan(row.tolerance) ? "" : format_double(row.tolerance);
    out += "," + row.status + "\n";
  }
  return out;
}

// Per-scenario random stream: splitmix of the global seed and the name.
inline std::mt19937_64 scenario_rng(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return std::mt19937_64(h);
}

namespace detail {

inline Mat random_hermitian(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cxd(g(rng), g(rng));
  return 0.5 * (m + Mat(m.adjoint()));
}

inline Vec random_state_vec(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(d);
  for (int i = 0; i < d; ++i) v[i] = cxd(g(rng), g(rng));
  return v / v.norm();
}

inline Mat random_unitary(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cxd(g(rng), g(rng));
  const Eigen::HouseholderQR<Mat> qr(m);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

inline CsvRow check_row(std::string quantity, double value, double tolerance,
                        double param = std::numeric_limits<double>::quiet_NaN()) {
  CsvRow row;
  row.quantity = std::move(quantity);
  row.param = param;
  row.value = value;
  row.tolerance = tolerance;
  row.status = std::abs(value) <= tolerance ? "pass" : "fail";
  return row;
}

inline CsvRow target_row(std::string quantity, double value, double target,
                         double tolerance,
                         double param = std::numeric_limits<double>::quiet_NaN()) {
  CsvRow row;
  row.quantity = std::move(quantity);
  row.param = param;
  row.value = value;
  row.tolerance = tolerance;
  row.status = std::abs(value - target) <= tolerance ? "pass" : "fail";
  return row;
}

inline CsvRow info_row(std::string quantity, double value,
                       double param = std::numeric_limits<double>::quiet_NaN()) {
  CsvRow row;
  row.quantity = std::move(quantity);
  row.param = param;
  row.value = value;
  return row;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Kind runners

inline void run_appendix_a(const ScenarioConfig& cfg, ScenarioResult& out) {
  const double w1 = cfg.get_double("omega1", 1.0);
  const double w2 = cfg.get_double("omega2", 1.0);
  const double tol = cfg.get_double("tolerance", 5e-4);
  const double s2 = appendix_a_scenario(w1, w2);
  out.rows.push_back(detail::target_row("S2", s2, 0.0292, tol));
}

inline void run_overlap(const ScenarioConfig& cfg, ScenarioResult& out) {
  const double r = cfg.get_double("r", 10.0);
  const int n_points = static_cast<int>(cfg.get_int("n_points", 2001));
  const double closed = overlap_uniform_density(r);
  std::vector<double> x(n_points), p(n_points, 1.0 / r);
  for (int i = 0; i < n_points; ++i) x[i] = r * i / (n_points - 1.0);
  const double tabulated = std::abs(overlap_density(x, p));
  out.rows.push_back(detail::info_row("S_closed_form", closed, r));
  out.rows.push_back(detail::info_row("S_tabulated", tabulated, r));
  out.rows.push_back(detail::check_row("closed_vs_tabulated", closed - tabulated,
                                       cfg.get_double("tolerance", 1e-6), r));
  if (cfg.has("band_lo") || cfg.has("band_hi")) {
    const double lo = cfg.get_double("band_lo", 0.0);
    const double hi = cfg.get_double("band_hi", 1.0);
    CsvRow row = detail::info_row("S_band", closed, r);
    row.status = (closed >= lo && closed <= hi) ? "pass" : "fail";
    out.rows.push_back(row);
  }
}

inline void run_individuality(const ScenarioConfig& cfg, ScenarioResult& out) {
  // single-qubit curve |I| = |cos(dt/2)| for E = +-1/2, plus the exact
  // all-zero-offsets identity
  const double dt_max = cfg.get_double("offset_max", 2.0 * kPi);
  const int n = static_cast<int>(cfg.get_int("n_points", 33));
  BlockSpectra spectra{{make_block_spectrum({-0.5, 0.5}, {1, 1})}};
  out.rows.push_back(detail::target_row(
      "I_at_zero", std::abs(individuality_I(spectra, {0.0})), 1.0, 1e-12));
  for (int k = 0; k < n; ++k) {
    const double dt = dt_max * k / (n - 1.0);
    out.rows.push_back(
        detail::info_row("absI", std::abs(individuality_I(spectra, {dt})), dt));
  }
}

inline void run_bounds(const ScenarioConfig& cfg, ScenarioResult& out) {
  const std::vector<double> excess = cfg.get_list("excess", {1.0});
  const int n_max = static_cast<int>(cfg.get_int("n_max", 10));
  double previous = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<double> list;
    for (int i = 0; i < n; ++i) list.push_back(excess[i % excess.size()]);
    const double tau = orthogonal_time_bound(list);
    out.rows.push_back(detail::info_row("tau", tau, n));
    decreasing = decreasing && tau < previous;
    previous = tau;
  }
  CsvRow row = detail::info_row("tau_strictly_decreasing", decreasing ? 1.0 : 0.0);
  row.status = decreasing ? "pass" : "fail";
  out.rows.push_back(row);
}

inline void run_moments(const ScenarioConfig& cfg, std::mt19937_64& rng,
                        ScenarioResult& out) {
  const int dim = static_cast<int>(cfg.get_int("dimension", 16));
  const int samples = static_cast<int>(cfg.get_int("samples", 100000));
  const double n_se = cfg.get_double("n_standard_errors", 4.0);
  const MomentReport r = haar_shell_moments(rng, dim, samples);
  out.rows.push_back(detail::target_row("mean_c2", r.mean_c2, r.target_c2(),
                                        n_se * r.se_mean_c2));
  out.rows.push_back(detail::target_row("mean_c4", r.mean_c4, r.target_c4(),
                                        n_se * r.se_mean_c4));
  out.rows.push_back(detail::info_row("std_c2", r.std_c2));
  out.rows.push_back(detail::info_row("std_c2_target", r.target_std_c2()));
}

inline void run_sigma_map(const ScenarioConfig& cfg, std::mt19937_64& rng,
                          ScenarioResult& out) {
  const int dim = static_cast<int>(cfg.get_int("dimension", 4));
  const double tol = cfg.get_double("tolerance", 1e-10);
  const SpectralDecomposition h = spectral_decompose(detail::random_hermitian(rng, dim));
  const StateVector psi{detail::random_state_vec(rng, dim), {dim}};
  const double bound = tau_min(h, psi);
  const double half_width = cfg.get_double("half_width", 0.5 * bound);
  const TimeWindow w = make_checked_window(cfg.get_double("t0", 10.0 * bound),
                                           half_width,
                                           cfg.get_double("sigma", half_width / 3.0),
                                           h, psi);
  const DensityMatrix sigma =
      sigma_map(psi, h, w, static_cast<int>(cfg.get_int("nodes", 64)));
  out.rows.push_back(detail::check_row("trace_deviation",
                                       std::abs(sigma.matrix.trace() - cxd(1.0)), tol));
  const double e0 = energy_mean(h, psi.amplitudes);
  double e1 = 0.0;
  for (std::size_t p = 0; p < h.levels(); ++p)
    e1 += h.eigenvalues[p] * (sigma.matrix * h.projectors[p]).trace().real();
  out.rows.push_back(detail::check_row("energy_deviation", e1 - e0, tol));
  double proj_dev = 0.0;
  for (std::size_t p = 0; p < h.levels(); ++p)
    proj_dev = std::max(
        proj_dev,
        std::abs((sigma.matrix * h.projectors[p]).trace().real() -
                 (psi.amplitudes.adjoint() * h.projectors[p] * psi.amplitudes)
                     .value()
                     .real()));
  out.rows.push_back(detail::check_row("projector_deviation", proj_dev, tol));
  const DensityMatrix thermal = thermal_state(h, cfg.get_double("beta", 1.0), {dim});
  const DensityMatrix mapped = sigma_map(thermal, h, w);
  out.rows.push_back(detail::check_row(
      "thermal_deviation", (mapped.matrix - thermal.matrix).cwiseAbs().maxCoeff(), tol));
}

inline void run_trajectory(const ScenarioConfig& cfg, std::mt19937_64& rng,
                           ScenarioResult& out) {
  // four qubits, strong 1-2 and 3-4 couplings, then a strong 2-3 coupling
  const double g_pair = cfg.get_double("pair_coupling", 1.0);
  const double t0 = cfg.get_double("t0", 20.0);
  const double half_width = cfg.get_double("half_width", 0.5);
  std::vector<Subsystem> subs;
  std::vector<Mat> selfs;
  for (int i = 0; i < 4; ++i) {
    subs.push_back(Subsystem{"q" + std::to_string(i), 2});
    selfs.push_back(0.5 * pauli_z());
  }
  const Mat zz = tensor_product(pauli_z(), pauli_z());
  CompositeHamiltonian stage1 = make_composite(
      subs, selfs, {{{0, 1}, g_pair * zz}, {{2, 3}, g_pair * zz}});
  const StateVector psi{detail::random_state_vec(rng, 16), {2, 2, 2, 2}};
  const Partition p1 = detect_partition(psi, stage1);
  out.rows.push_back(detail::info_row("stage1_blocks", static_cast<double>(p1.block_count())));
  Trajectory traj = start_trajectory(
      psi, trivial_partition(4),
      make_assignment({BlockTime{0.0, 0.0, 0.0}}, trivial_partition(4)));
  traj = apply_transition(traj, stage1, p1, rng, t0,
                          std::vector<double>(p1.block_count(), half_width));
  CompositeHamiltonian stage2 =
      make_composite(subs, selfs, {{{1, 2}, g_pair * zz}});
  const Partition p2 = detect_partition(traj.steps.back().state, stage2);
  out.rows.push_back(detail::info_row("stage2_blocks", static_cast<double>(p2.block_count())));
  traj = apply_transition(traj, stage2, p2, rng, t0,
                          std::vector<double>(p2.block_count(), half_width));
  // replay per stage with the matching Hamiltonian
  const StateVector replay1 =
      multi_time_evolve(traj.steps[0].state, stage1, traj.steps[1].partition,
                        traj.steps[1].times);
  const StateVector replay2 =
      multi_time_evolve(traj.steps[1].state, stage2, traj.steps[2].partition,
                        traj.steps[2].times);
  const double defect = std::max(
      (replay1.amplitudes - traj.steps[1].state.amplitudes).cwiseAbs().maxCoeff(),
      (replay2.amplitudes - traj.steps[2].state.amplitudes).cwiseAbs().maxCoeff());
  out.rows.push_back(
      detail::check_row("replay_defect", defect, cfg.get_double("tolerance", 1e-10)));
  for (std::size_t s = 1; s < traj.steps.size(); ++s)
    for (std::size_t b = 0; b < traj.steps[s].times.entries.size(); ++b)
      out.rows.push_back(detail::info_row(
          "local_time_step" + std::to_string(s) + "_block" + std::to_string(b),
          traj.steps[s].times.entries[b].time));
}

inline void run_reversibility(const ScenarioConfig& cfg, std::mt19937_64& rng,
                              ScenarioResult& out) {
  const int bins = static_cast<int>(cfg.get_int("bins", 16));
  const TimeWindow w = make_window(cfg.get_double("t0", 20.0),
                                   cfg.get_double("half_width", 0.5));
  const std::vector<double> weights = window_bin_weights(w, bins);
  const TransitionTable table = redistribution_table(weights, weights);
  const RelativeEntropyResult re = relative_entropy(table);
  out.rows.push_back(detail::check_row("redistribution_relative_entropy", re.value,
                                       cfg.get_double("tolerance", 1e-12)));
  CsvRow db = detail::info_row("detailed_balance",
                               detailed_balance(table, 1e-12) ? 1.0 : 0.0);
  db.status = detailed_balance(table, 1e-12) ? "pass" : "fail";
  out.rows.push_back(db);

  // fidelity demonstration on a two-qubit merge/split
  std::vector<Subsystem> subs{{"a", 2}, {"b", 2}};
  std::vector<Mat> selfs{0.5 * pauli_z(), 0.5 * pauli_z()};
  CompositeHamiltonian h = make_composite(
      subs, selfs, {{{0, 1}, 0.7 * tensor_product(pauli_x(), pauli_x())}});
  const StateVector psi{detail::random_state_vec(rng, 4), {2, 2}};
  const std::vector<Partition> seq{make_partition({{0}, {1}}, 2),
                                   make_partition({{0, 1}}, 2)};
  const int trials = static_cast<int>(cfg.get_int("trials", 20));
  const IrreversibilityStats stats = plain_irreversibility_demo(
      psi, h, seq, rng, trials, w.t0, w.half_width);
  out.rows.push_back(detail::target_row("control_fidelity", stats.control_fidelity,
                                        1.0, 1e-10));
  CsvRow fresh = detail::info_row("max_fresh_fidelity", stats.max_fidelity);
  fresh.status = stats.max_fidelity < 1.0 ? "pass" : "fail";
  out.rows.push_back(fresh);
  out.rows.push_back(detail::info_row("mean_fresh_fidelity", stats.mean_fidelity));
}

inline void run_decay(const ScenarioConfig& cfg, ScenarioResult& out) {
  const double lambda_a = cfg.get_double("lambda_a", 0.5);
  const double lambda_b = cfg.get_double("lambda_b", 0.2);
  const double n_a0 = cfg.get_double("initial_a", 1.0);
  RationalClockRate clock_a = RationalClockRate::unit();
  RationalClockRate clock_b = RationalClockRate::unit();
  if (cfg.has("a")) {
    clock_a = RationalClockRate::canonical(cfg.get_double("a", 1.0),
                                           cfg.get_double("b", 25.0),
                                           cfg.get_double("p", 1.0));
    clock_b = clock_a;
  }
  const DecaySpecies a = make_species(lambda_a, clock_a, n_a0);
  const DecaySpecies b = make_species(lambda_b, clock_b, 0.0);
  const double t_max = cfg.get_double("t_max", 10.0 / std::min(lambda_a, lambda_b));
  const int n_points = static_cast<int>(cfg.get_int("n_points", 64));
  std::vector<double> grid;
  for (int i = 1; i <= n_points; ++i) grid.push_back(t_max * i / n_points);
  const ChainResult ode = decay_chain_ode(a, b, grid);
  double standard_dev = 0.0, paper_dev = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    out.rows.push_back(detail::info_row("N_A", ode.population_a[i], t));
    out.rows.push_back(detail::info_row("N_B", ode.population_b[i], t));
    out.rows.push_back(detail::info_row("survival", survival(a, t), t));
    out.rows.push_back(detail::info_row("kappa_A", kappa(a.clock, t), t));
    const double closed = decay_chain_paper(a, b, t);
    const double scale = std::max(1e-300, std::abs(ode.population_b[i]));
    paper_dev = std::max(paper_dev, std::abs(closed - ode.population_b[i]) / scale);
    if (clock_a.kind == RationalClockRate::Kind::Unit) {
      const double eq22 = daughter_standard(lambda_a, lambda_b, n_a0, t);
      standard_dev =
          std::max(standard_dev, std::abs(ode.population_b[i] - eq22) / scale);
    }
  }
  if (clock_a.kind == RationalClockRate::Kind::Unit)
    out.rows.push_back(detail::check_row("ode_vs_standard_closed_form", standard_dev,
                                         cfg.get_double("tolerance", 1e-10)));
  // closed-form ansatz vs ODE: deviation is reported, never asserted
  out.rows.push_back(detail::info_row("ansatz_vs_ode_max_rel_dev", paper_dev));
}

inline void run_reduced(const ScenarioConfig& cfg, std::mt19937_64& rng,
                        ScenarioResult& out) {
  const double tol = cfg.get_double("tolerance", 1e-10);
  const std::vector<int> dims{2, 2, 2, 2};
  const SpectralDecomposition h12 =
      spectral_decompose(detail::random_hermitian(rng, 4));
  const SpectralDecomposition h34 =
      spectral_decompose(detail::random_hermitian(rng, 4));
  const double t12 = 1.3, t34 = 0.7;
  const PairSchmidtData s12 =
      pair_schmidt_from_evolution(h12, t12, 2, 2, correlated_seeds(2, 2));
  const PairSchmidtData s34 =
      pair_schmidt_from_evolution(h34, t34, 2, 2, correlated_seeds(2, 2));
  Mat d_target(2, 2);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) d_target(p, q) = cxd(g(rng), g(rng));
  d_target /= d_target.norm();
  const FourBodyAmplitudes amp = four_body_from_merged(d_target, s12, s34, dims);
  const Mat d = merged_amplitudes(amp, s12, s34);
  out.rows.push_back(detail::check_row("merged_amplitudes_roundtrip",
                                       (d - d_target).cwiseAbs().maxCoeff(), 1e-12));
  const StateVector full = build_merged_state(d, dims);
  const DensityMatrix oracle1 = partial_trace(pure_density(full), {0});
  const DensityMatrix closed1 = merged_reduced(amp, s12, s34, 0);
  out.rows.push_back(detail::check_row(
      "stage1_oracle_deviation",
      (oracle1.matrix - closed1.matrix).cwiseAbs().maxCoeff(), tol));
  double r_sum = -1.0;
  for (double r : merged_weights(d)) r_sum += r;
  out.rows.push_back(detail::check_row("stage1_weight_sum_deviation", r_sum, 1e-10));
  const SpectralDecomposition h23 =
      spectral_decompose(detail::random_hermitian(rng, 4));
  const Merge23Data s23 = merge23_from_evolution(h23, 0.9, 2, 2, 2, 2);
  const SpectralDecomposition h1 = spectral_decompose(detail::random_hermitian(rng, 2));
  const SpectralDecomposition h4 = spectral_decompose(detail::random_hermitian(rng, 2));
  const double t1 = 0.4, t4 = 1.7;
  const StateVector full2 = build_restructured_state(d, s23, h1, t1, h4, t4, dims);
  const DensityMatrix oracle2a = partial_trace(pure_density(full2), {0});
  const DensityMatrix closed2a = restructured_reduced(d, s23, h1, t1, 0);
  out.rows.push_back(detail::check_row(
      "stage2_subsystem1_oracle_deviation",
      (oracle2a.matrix - closed2a.matrix).cwiseAbs().maxCoeff(), tol));
  const DensityMatrix oracle2b = partial_trace(pure_density(full2), {1});
  const DensityMatrix closed2b = restructured_reduced(d, s23, h1, t1, 1);
  out.rows.push_back(detail::check_row(
      "stage2_subsystem2_oracle_deviation",
      (oracle2b.matrix - closed2b.matrix).cwiseAbs().maxCoeff(), tol));
  double l_sum = -1.0;
  for (double l : restructured_weights(d, s23)) l_sum += l;
  out.rows.push_back(detail::check_row("stage2_weight_sum_deviation", l_sum, 1e-10));
  // t34-independence of the (1,2)-side reduced state
  const PairSchmidtData s34_other =
      pair_schmidt_from_evolution(h34, t34 + 2.1, 2, 2, correlated_seeds(2, 2));
  const FourBodyAmplitudes amp_other = four_body_from_merged(
      merged_amplitudes(amp, s12, s34) /* same d */, s12, s34_other, dims);
  const DensityMatrix closed1_other = merged_reduced(amp_other, s12, s34_other, 0);
  out.rows.push_back(detail::check_row(
      "t34_independence",
      (closed1.matrix - closed1_other.matrix).cwiseAbs().maxCoeff(),
      cfg.get_double("independence_tolerance", 1e-12)));
}

// ---------------------------------------------------------------------------
// Dispatch and output

struct RunOptions {
  std::uint64_t seed = 1;
  std::string out_dir = ".";
};

inline ScenarioResult run_scenario(const ScenarioConfig& cfg, const RunOptions& opts) {
  ScenarioResult out;
  out.name = cfg.name;
  out.kind = cfg.kind;
  out.seed = static_cast<std::uint64_t>(cfg.get_int("seed", static_cast<std::int64_t>(opts.seed)));
  std::mt19937_64 rng = scenario_rng(out.seed, cfg.name);
  if (cfg.kind == "appendix-a")
    run_appendix_a(cfg, out);
  else if (cfg.kind == "overlap")
    run_overlap(cfg, out);
  else if (cfg.kind == "individuality")
    run_individuality(cfg, out);
  else if (cfg.kind == "bounds")
    run_bounds(cfg, out);
  else if (cfg.kind == "moments")
    run_moments(cfg, rng, out);
  else if (cfg.kind == "sigma-map")
    run_sigma_map(cfg, rng, out);
  else if (cfg.kind == "trajectory")
    run_trajectory(cfg, rng, out);
  else if (cfg.kind == "reversibility")
    run_reversibility(cfg, rng, out);
  else if (cfg.kind == "decay")
    run_decay(cfg, out);
  else if (cfg.kind == "reduced-dynamics")
    run_reduced(cfg, rng, out);
  else
    throw std::invalid_argument("unknown scenario kind: " + cfg.kind);
  return out;
}

// Atomic per-scenario CSV write: temp file then rename.
inline std::filesystem::path write_result(const ScenarioResult& r,
                                          const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path target = out_dir / (r.name + ".csv");
  const std::filesystem::path tmp = out_dir / (r.name + ".csv.tmp");
  {
    std::ofstream f(tmp);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f << to_csv(r);
    f << "# seed=" << r.seed << " kind=" << r.kind << "\n";
  }
  std::filesystem::rename(tmp, target);
  return target;
}

struct CatalogEntry {
  std::string kind;
  std::string description;
  std::string parameters;
};

inline std::vector<CatalogEntry> scenario_catalog() {
  return {
      {"appendix-a", "golden five-qubit/two-qubit overlap |S|^2",
       "omega1=1 omega2=1 tolerance=5e-4"},
      {"overlap", "uniform-density continuous-limit overlap",
       "r=10 n_points=2001 tolerance=1e-6 [band_lo band_hi]"},
      {"individuality", "single-qubit individuality curve |I|(dt)",
       "offset_max=6.2832 n_points=33"},
      {"bounds", "orthogonal-transition time bound vs subsystem count",
       "excess=1 n_max=10"},
      {"moments", "uniform-sphere coefficient moment statistics",
       "dimension=16 samples=100000 n_standard_errors=4 seed"},
      {"sigma-map", "time-window map invariance checks on a random Hamiltonian",
       "dimension=4 t0 half_width sigma nodes=64 beta=1 tolerance=1e-10 seed"},
      {"trajectory", "four-qubit restructuring trajectory with sampled local times",
       "pair_coupling=1 t0=20 half_width=0.5 tolerance=1e-10 seed"},
      {"reversibility", "redistribution-table entropy and inverse-evolution fidelity",
       "bins=16 t0=20 half_width=0.5 trials=20 tolerance=1e-12 seed"},
      {"decay", "clocked two-species decay curves and closed-form comparisons",
       "lambda_a=0.5 lambda_b=0.2 initial_a=1 [a b p] t_max n_points=64"},
      {"reduced-dynamics", "four-qubit reduced-state cascade vs partial-trace oracle",
       "tolerance=1e-10 independence_tolerance=1e-12 seed"},
  };
}

// Builtin golden set exercised by `run --all-golden`.
inline std::vector<ScenarioConfig> golden_scenarios() {
  std::vector<ScenarioConfig> s;
  s.push_back({"golden-appendix-a", "appendix-a", {{"tolerance", "5e-4"}}});
  s.push_back({"golden-overlap-uniform",
               "overlap",
               {{"r", "10"}, {"band_lo", "0.188"}, {"band_hi", "0.195"}}});
  s.push_back({"golden-sigma-map", "sigma-map", {{"tolerance", "1e-10"}}});
  s.push_back({"golden-bounds", "bounds", {}});
  s.push_back({"golden-moments", "moments", {}});
  s.push_back({"golden-decay-standard", "decay", {{"tolerance", "1e-10"}}});
  s.push_back({"golden-reversibility", "reversibility", {}});
  s.push_back({"golden-reduced", "reduced-dynamics", {}});
  return s;
}

}  // namespace lts

#endif  // LTS_SCENARIO_HPP
