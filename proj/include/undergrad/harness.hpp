#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "undergrad/algorithms.hpp"
#include "undergrad/analysis.hpp"

namespace undergrad {

struct AlgorithmConfig {
  /// undergrad | unixgrad | aeg | mirror_prox | dual_extrapolation
  std::string name;
  /// File-name-safe series label; derived from the name when empty.
  std::string label;
  /// unixgrad: step_scale = factor * eta_1 (default 1).
  std::optional<double> step_scale_factor;
  /// aeg: eta = factor * eta_1 (default 1).
  std::optional<double> eta_factor;
  /// dual_extrapolation: constant step.
  std::optional<double> alpha;
  /// mirror_prox: bg | lg_deterministic | lg_stochastic, and its constant.
  std::optional<std::string> mode;
  std::optional<double> constant;
};

struct ProblemConfig {
  std::string name;
  long dimension = 0;
  std::uint64_t seed = 0;
  /// entropic | euclidean_set; only read by the simplex problems.
  std::string geometry = "entropic";
};

/// Absolute parameter values that win over the per-algorithm defaults.
struct Overrides {
  std::optional<double> theta;
  std::optional<double> delta;
  std::optional<double> step_scale;
  std::optional<double> eta;
};

struct ExperimentConfig {
  std::string name = "experiment";
  std::vector<AlgorithmConfig> algorithms;
  ProblemConfig problem;
  long T = 0;
  double sigma = 0.0;
  /// Noise model name; the geometry's hard-bounded default when absent.
  std::optional<std::string> noise;
  std::vector<std::uint64_t> seeds;
  StepWeights weights;
  Overrides overrides;
  std::string output_dir;
};

/// Parses and validates a config document. Unknown keys, missing required
/// keys and out-of-range values raise ConfigError.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig parse_config_file(const std::string& path);
nlohmann::json to_json(const ExperimentConfig& config);
/// FNV-1a over the canonical JSON dump, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);
std::string series_label(const AlgorithmConfig& algo);

struct RunnerOptions {
  unsigned threads = 1;
  /// Base seed for the oracle streams; UNDERGRAD_SEED overrides it.
  std::uint64_t base_seed = 0;
  /// Write real wall-clock values into the CSV wall_ns column.
  bool csv_timing = false;
  bool write_files = true;
};

/// Reads UNDERGRAD_SEED when set, otherwise returns `fallback`.
std::uint64_t base_seed_from_env(std::uint64_t fallback = 0);

struct SeriesSummary {
  std::string label;
  std::string algorithm;
  std::map<std::string, double> parameters;
  std::vector<long> t;
  std::vector<double> mean_gap;
  std::vector<std::pair<std::uint64_t, double>> final_gap;
  std::optional<RateFit> fit;
  std::map<std::string, std::vector<double>> bounds;
  std::int64_t wall_ns_total = 0;
  std::vector<Trajectory> runs;
};

struct RunSummary {
  std::string experiment;
  std::string config_hash;
  ExperimentConfig config;
  std::vector<SeriesSummary> series;
  std::int64_t wall_ns_total = 0;
};

/// Runs every (algorithm, seed) pair on a worker pool and, when requested,
/// writes <label>_seed<s>.csv, <label>_mean.csv and summary.json into
/// config.output_dir. A numerical failure in any run is rethrown with the run
/// identified in the message.
RunSummary run_experiment(const ExperimentConfig& config, const RunnerOptions& options = {});

/// Executes a single (algorithm, seed) pair.
Trajectory run_single(const ExperimentConfig& config, const AlgorithmConfig& algo,
                      std::uint64_t seed, std::uint64_t base_seed, bool measure_time);

nlohmann::json summary_to_json(const RunSummary& summary);

inline constexpr const char* kCsvHeader = "run_id,t,f_value,gap,eta,S,queries,wall_ns";
/// 17 significant digits.
std::string format_double(double v);
void write_trajectory_csv(const std::string& path, const std::string& run_id,
                          const Trajectory& traj, bool timing);

struct RegistryEntry {
  std::string name;
  std::string description;
  std::vector<ExperimentConfig> experiments;
};

const std::vector<RegistryEntry>& registry();
const RegistryEntry& registry_lookup(const std::string& name);

/// Reads summary.json files matching `pattern` and writes, per summary, a
/// whitespace-separated series file and an SVG log-log plot into out_dir.
/// Returns the paths written.
std::vector<std::string> plot(const std::string& pattern, const std::string& out_dir);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  /// Soft checks are reported but do not affect the overall verdict.
  bool soft = false;
};

/// Replaceable pieces for mutation testing of the verification suites.
struct VerifyHooks {
  std::function<double(const Regularizer&, const PrimalPoint&, const DualVector&,
                       const DualVector&)>
      three_point = check_three_point;
};

/// Suites: geometry, lemmas, algorithms, rates. ConfigError for anything else.
std::vector<CheckResult> verify(const std::string& suite, const VerifyHooks& hooks = {});
const std::vector<std::string>& verify_suites();

/// Acceptance criteria A1..A9 individually.
CheckResult acceptance_check(int index);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace undergrad
