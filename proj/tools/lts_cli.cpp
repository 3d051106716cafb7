// Scenario runner: parses a sectioned key-value config, dispatches each
// scenario to the library, and writes one CSV per scenario.
//
// Exit codes: 0 ok, 1 tolerance failure, 2 config parse error,
// 3 validation error, 4 numerical-convergence failure.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lts/scenario.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitConvergence = 4;

std::string default_out_dir() {
  const char* env = std::getenv("LTS_OUT_DIR");
  return env != nullptr && *env != '\0' ? env : ".";
}

struct ScenarioOutcome {
  int exit_code = 0;
  std::string summary;
};

ScenarioOutcome run_one(const lts::ScenarioConfig& cfg, const lts::RunOptions& opts) {
  ScenarioOutcome o;
  try {
    const lts::ScenarioResult result = lts::run_scenario(cfg, opts);
    lts::write_result(result, opts.out_dir);
    int pass = 0, fail = 0;
    for (const auto& row : result.rows) {
      if (row.status == "pass") ++pass;
      if (row.status == "fail") ++fail;
    }
    std::ostringstream line;
    line << (result.passed() ? "PASS" : "FAIL") << "  " << cfg.name << " ("
         << cfg.kind << "): " << pass << " checks passed, " << fail << " failed";
    o.summary = line.str();
    o.exit_code = result.passed() ? 0 : kExitFail;
  } catch (const std::invalid_argument& e) {
    o.summary = "ERROR " + cfg.name + ": " + e.what();
    o.exit_code = kExitValidation;
  } catch (const std::runtime_error& e) {
    o.summary = "ERROR " + cfg.name + ": " + e.what();
    o.exit_code = kExitConvergence;
  }
  return o;
}

int run_all(const std::vector<lts::ScenarioConfig>& scenarios,
            const lts::RunOptions& opts, int threads) {
  std::atomic<std::size_t> next{0};
  std::vector<ScenarioOutcome> outcomes(scenarios.size());
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < scenarios.size();
         i = next.fetch_add(1))
      outcomes[i] = run_one(scenarios[i], opts);
  };
  if (threads <= 1 || scenarios.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int n = std::min<int>(threads, static_cast<int>(scenarios.size()));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  int exit_code = 0;
  for (const auto& o : outcomes) {
    std::cout << o.summary << "\n";
    exit_code = std::max(exit_code, o.exit_code);
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local-time scheme scenario runner"};
  app.require_subcommand(1);

  std::string config_path;
  bool all_golden = false;
  lts::RunOptions opts;
  opts.out_dir = default_out_dir();
  int threads = 1;

  CLI::App* run = app.add_subcommand("run", "run scenarios from a config file");
  run->add_option("config", config_path, "scenario config file");
  run->add_flag("--all-golden", all_golden, "run the builtin golden scenario set");
  run->add_option("--out-dir", opts.out_dir, "output directory for CSV files");
  run->add_option("--seed", opts.seed, "base random seed");
  run->add_option("--threads", threads, "worker thread count");

  bool machine_readable = false;
  CLI::App* list = app.add_subcommand("list", "list builtin scenario kinds");
  list->add_flag("--machine-readable", machine_readable,
                 "tab-separated kind/description/parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  if (list->parsed()) {
    for (const auto& entry : lts::scenario_catalog()) {
      if (machine_readable)
        std::cout << entry.kind << "\t" << entry.description << "\t"
                  << entry.parameters << "\n";
      else
        std::cout << entry.kind << "\n    " << entry.description
                  << "\n    parameters: " << entry.parameters << "\n";
    }
    return 0;
  }

  std::vector<lts::ScenarioConfig> scenarios;
  if (all_golden) {
    scenarios = lts::golden_scenarios();
  } else if (!config_path.empty()) {
    std::ifstream f(config_path);
    if (!f) {
      std::cerr << "cannot open config file: " << config_path << "\n";
      return kExitParse;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    try {
      scenarios = lts::parse_config(buf.str());
    } catch (const lts::ConfigParseError& e) {
      std::cerr << config_path << ": " << e.what() << "\n";
      return kExitParse;
    }
  } else {
    std::cerr << "run: need a config file or --all-golden\n";
    return kExitParse;
  }
  if (scenarios.empty()) {
    std::cerr << "config contains no scenarios\n";
    return kExitValidation;
  }
  return run_all(scenarios, opts, threads);
}
