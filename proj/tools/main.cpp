#include <cstdio>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "undergrad/errors.hpp"
#include "undergrad/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerify = 3;

int print_report(const std::vector<undergrad::CheckResult>& results) {
  for (const auto& r : results) {
    const char* status = r.passed ? "PASS" : (r.soft ? "FAIL (soft)" : "FAIL");
    std::printf("%-48s %-12s %s\n", r.name.c_str(), status, r.detail.c_str());
  }
  const bool ok = undergrad::all_passed(results);
  std::printf("%s\n", ok ? "all checks passed" : "verification failed");
  return ok ? kExitOk : kExitVerify;
}

void print_summary(const undergrad::RunSummary& s) {
  std::printf("%s (config %s) -> %s\n", s.experiment.c_str(), s.config_hash.c_str(),
              s.config.output_dir.c_str());
  for (const auto& series : s.series) {
    const double final_gap = series.mean_gap.empty() ? 0.0 : series.mean_gap.back();
    if (series.fit) {
      std::printf("  %-20s final mean gap %.6g  slope %.4f (r^2 %.3f)\n", series.label.c_str(),
                  final_gap, series.fit->slope, series.fit->r_squared);
    } else {
      std::printf("  %-20s final mean gap %.6g  slope n/a\n", series.label.c_str(), final_gap);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal dual-extrapolation optimizers and benchmark harness"};
  app.require_subcommand(1);
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--threads", threads, "Worker threads for seed sweeps")->check(CLI::PositiveNumber);

  auto* run = app.add_subcommand("run", "Run an experiment from a config file or the registry");
  std::string config_path, registry_name, output_dir;
  bool timing = false;
  auto* config_opt = run->add_option("--config", config_path, "Experiment config (JSON)");
  auto* registry_opt = run->add_option("--registry", registry_name, "Registry entry name");
  config_opt->excludes(registry_opt);
  run->add_option("--output-dir", output_dir, "Override the output directory");
  run->add_flag("--timing", timing, "Write wall-clock nanoseconds into the CSV files");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  verify->add_option("--suite", suite, "geometry | lemmas | algorithms | rates")->required();

  auto* plot = app.add_subcommand("plot", "Render summaries as series files and SVG");
  std::string input, out_dir;
  plot->add_option("--input", input, "Glob of summary.json files")->required();
  plot->add_option("--out", out_dir, "Output directory")->required();

  app.add_subcommand("list", "List registry entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) {
      if (config_path.empty() == registry_name.empty()) {
        throw undergrad::ConfigError("run needs exactly one of --config or --registry");
      }
      std::vector<undergrad::ExperimentConfig> configs;
      if (!config_path.empty()) {
        configs.push_back(undergrad::parse_config_file(config_path));
      } else {
        configs = undergrad::registry_lookup(registry_name).experiments;
      }
      undergrad::RunnerOptions opts;
      opts.threads = threads;
      opts.base_seed = undergrad::base_seed_from_env(0);
      opts.csv_timing = timing;
      for (auto& c : configs) {
        if (!output_dir.empty()) {
          c.output_dir = configs.size() == 1 ? output_dir : output_dir + "/" + c.name;
        }
        print_summary(undergrad::run_experiment(c, opts));
      }
      return kExitOk;
    }
    if (*verify) {
      return print_report(undergrad::verify(suite));
    }
    if (*plot) {
      for (const auto& path : undergrad::plot(input, out_dir)) std::printf("%s\n", path.c_str());
      return kExitOk;
    }
    for (const auto& e : undergrad::registry()) {
      std::printf("%-10s %s\n", e.name.c_str(), e.description.c_str());
    }
    return kExitOk;
  } catch (const undergrad::NumericalFailure& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
}
