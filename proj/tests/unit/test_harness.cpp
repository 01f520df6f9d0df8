#include <doctest.h>

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "undergrad/errors.hpp"
#include "undergrad/harness.hpp"

using namespace undergrad;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() /
                     ("undergrad_test_" + tag + "_" +
                      std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
  fs::create_directories(p);
  return p;
}

json small_config(const fs::path& out) {
  return json{{"name", "small"},
              {"algorithm", json::array({{{"name", "undergrad"}},
                                         {{"name", "unixgrad"}, {"step_scale_factor", 0.5}}})},
              {"problem", {{"name", "linear_simplex"}, {"dimension", 12}, {"seed", 3}}},
              {"T", 200},
              {"sigma", 0.05},
              {"seeds", {0, 1, 2}},
              {"weights", "linear"},
              {"output_dir", out.string()}};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

int cli(const std::string& args) {
  const std::string cmd = std::string(UNDERGRAD_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("config parsing accepts the documented keys") {
  const ExperimentConfig c = parse_config(small_config("/tmp/x"));
  CHECK(c.name == "small");
  CHECK(c.algorithms.size() == 2);
  CHECK(series_label(c.algorithms[1]) == "UnixGrad_x0.5");
  CHECK(c.problem.dimension == 12);
  CHECK(c.T == 200);
  CHECK(c.seeds.size() == 3);
  CHECK(c.weights.rule == WeightRule::kLinear);

  json single = small_config("/tmp/x");
  single["algorithm"] = {{"name", "aeg"}, {"eta_factor", 2.0}};
  single["overrides"] = {{"theta", 1.5}};
  single["noise"] = "truncated_normal";
  const ExperimentConfig s = parse_config(single);
  CHECK(s.algorithms.size() == 1);
  CHECK(*s.overrides.theta == 1.5);
  CHECK(*s.noise == "truncated_normal");
  CHECK(parse_config(to_json(s)).T == s.T);
}

TEST_CASE("config parsing rejects bad documents") {
  auto with = [](const std::string& key, const json& value) {
    json j = small_config("/tmp/x");
    j[key] = value;
    return j;
  };
  CHECK_THROWS_AS(parse_config(with("extra", 1)), ConfigError);
  CHECK_THROWS_AS(parse_config(with("T", 0)), ConfigError);
  CHECK_THROWS_AS(parse_config(with("T", "many")), ConfigError);
  CHECK_THROWS_AS(parse_config(with("sigma", -0.1)), ConfigError);
  CHECK_THROWS_AS(parse_config(with("seeds", json::array())), ConfigError);
  CHECK_THROWS_AS(parse_config(with("seeds", {1, 1})), ConfigError);
  CHECK_THROWS_AS(parse_config(with("weights", "cubic")), ConfigError);
  CHECK_THROWS_AS(parse_config(with("noise", "cauchy")), ConfigError);
  CHECK_THROWS_AS(parse_config(with("algorithm", {{"name", "adam"}})), ConfigError);
  CHECK_THROWS_AS(parse_config(with("algorithm", {{"name", "undergrad"}, {"lr", 1}})), ConfigError);
  CHECK_THROWS_AS(parse_config(with("algorithm", {{"name", "dual_extrapolation"}})), ConfigError);
  CHECK_THROWS_AS(
      parse_config(with("algorithm", json::array({{{"name", "undergrad"}}, {{"name", "undergrad"}}}))),
      ConfigError);
  CHECK_THROWS_AS(parse_config(with("problem", {{"name", "rosenbrock"}, {"dimension", 3}})),
                  ConfigError);
  CHECK_THROWS_AS(
      parse_config(with("problem", {{"name", "linear_simplex"}, {"dimension", 3}, {"size", 2}})),
      ConfigError);
  CHECK_THROWS_AS(parse_config(with("overrides", {{"theta", -1.0}})), ConfigError);
  json missing = small_config("/tmp/x");
  missing.erase("T");
  CHECK_THROWS_AS(parse_config(missing), ConfigError);
  CHECK_THROWS_AS(parse_config_file("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("config hash ignores the output directory only") {
  const ExperimentConfig a = parse_config(small_config("/tmp/a"));
  const ExperimentConfig b = parse_config(small_config("/tmp/b"));
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a).size() == 16);
  json changed = small_config("/tmp/a");
  changed["T"] = 201;
  CHECK(config_hash(parse_config(changed)) != config_hash(a));
}

TEST_CASE("run_experiment writes per-seed, mean and summary files") {
  const fs::path out = scratch("run");
  const ExperimentConfig c = parse_config(small_config(out));
  const RunSummary s = run_experiment(c, {});
  CHECK(s.series.size() == 2);
  CHECK(fs::exists(out / "summary.json"));
  for (const auto& series : s.series) {
    CHECK(series.t.size() == 200);
    CHECK(series.final_gap.size() == 3);
    CHECK(series.bounds.count("bg") == 1);
    for (int seed = 0; seed < 3; ++seed) {
      CHECK(fs::exists(out / (series.label + "_seed" + std::to_string(seed) + ".csv")));
    }
  }

  const auto rows = read_csv(out / "UnderGrad_seed1.csv");
  REQUIRE(rows.size() == 201);
  CHECK(rows[0] == std::vector<std::string>{"run_id", "t", "f_value", "gap", "eta", "S", "queries",
                                            "wall_ns"});
  CHECK(rows[1][0] == "UnderGrad/seed1");
  CHECK(rows[1][1] == "1");
  CHECK(rows[1][6] == "2");
  CHECK(rows[1][7] == "0");
  // 17 significant digits round-trip exactly
  const double f = std::strtod(rows[5][2].c_str(), nullptr);
  CHECK(format_double(f) == rows[5][2]);

  // the aggregate equals the mean of the per-seed files
  const auto mean = read_csv(out / "UnderGrad_mean.csv");
  std::vector<std::vector<std::vector<std::string>>> seeds;
  for (int seed = 0; seed < 3; ++seed) {
    seeds.push_back(read_csv(out / ("UnderGrad_seed" + std::to_string(seed) + ".csv")));
  }
  for (std::size_t r = 1; r < mean.size(); ++r) {
    for (std::size_t col : {2u, 3u, 4u, 5u}) {
      double sum = 0.0;
      for (const auto& s_rows : seeds) sum += std::strtod(s_rows[r][col].c_str(), nullptr);
      CHECK(mean[r][col] == format_double(sum / 3.0));
    }
  }

  const json summary = json::parse(slurp(out / "summary.json"));
  CHECK(summary.at("config_hash") == config_hash(c));
  CHECK(summary.at("series").size() == 2);
  fs::remove_all(out);
}

TEST_CASE("reruns are byte-identical regardless of thread count") {
  const fs::path a = scratch("det_a");
  const fs::path b = scratch("det_b");
  RunnerOptions one;
  one.threads = 1;
  RunnerOptions three;
  three.threads = 3;
  run_experiment(parse_config(small_config(a)), one);
  run_experiment(parse_config(small_config(b)), three);
  int compared = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    if (entry.path().extension() != ".csv") continue;
    CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
    ++compared;
  }
  CHECK(compared == 8);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("base seed comes from UNDERGRAD_SEED") {
  ::unsetenv("UNDERGRAD_SEED");
  CHECK(base_seed_from_env(5) == 5);
  ::setenv("UNDERGRAD_SEED", "123", 1);
  CHECK(base_seed_from_env(5) == 123);
  ::setenv("UNDERGRAD_SEED", "abc", 1);
  CHECK_THROWS_AS(base_seed_from_env(5), ConfigError);
  ::unsetenv("UNDERGRAD_SEED");

  const ExperimentConfig c = parse_config(small_config("/tmp/x"));
  const Trajectory x = run_single(c, c.algorithms[0], 0, 0, false);
  const Trajectory y = run_single(c, c.algorithms[0], 0, 1, false);
  CHECK(x.records.back().f_value != y.records.back().f_value);
}

TEST_CASE("registry entries") {
  const RegistryEntry& fig1 = registry_lookup("fig1");
  REQUIRE(fig1.experiments.size() == 1);
  const ExperimentConfig& c1 = fig1.experiments.front();
  CHECK(c1.algorithms.size() == 5);
  CHECK(c1.problem.name == "linear_simplex");
  CHECK(c1.problem.dimension == 100);
  CHECK(c1.sigma == 0.0);
  CHECK(c1.T == 10000);
  CHECK(c1.seeds.size() == 1);

  const ExperimentConfig& c3 = registry_lookup("fig3").experiments.front();
  CHECK(c3.sigma == 0.1);
  CHECK(c3.seeds.size() == 20);
  CHECK(c3.algorithms.size() == 5);

  const RegistryEntry& fig4 = registry_lookup("fig4");
  REQUIRE(fig4.experiments.size() == 4);
  std::vector<double> sigmas;
  for (const auto& c : fig4.experiments) sigmas.push_back(c.sigma);
  CHECK(sigmas == std::vector<double>{0.0, 0.01, 0.1, 1.0});
  CHECK_THROWS_AS(registry_lookup("fig2"), ConfigError);
  for (const auto& e : registry()) {
    for (const auto& c : e.experiments) CHECK_NOTHROW(parse_config(to_json(c)));
  }
}

TEST_CASE("numerical failures name the run") {
  json j = small_config("/tmp/unused");
  j["algorithm"] = {{"name", "unixgrad"}};
  j["problem"] = {{"name", "quadratic_unbounded"}, {"dimension", 3}, {"seed", 1}};
  j["overrides"] = {{"step_scale", 1e200}};
  j["sigma"] = 0.0;
  RunnerOptions ro;
  ro.write_files = false;
  try {
    run_experiment(parse_config(j), ro);
    FAIL("expected a numerical failure");
  } catch (const NumericalFailure& e) {
    CHECK(std::string(e.what()).find("seed 0") != std::string::npos);
    CHECK(e.iteration() >= 1);
  }
}

TEST_CASE("plot writes one series file and one SVG per summary") {
  const fs::path out = scratch("plot");
  run_experiment(parse_config(small_config(out / "run")), {});
  const auto written = plot((out / "run" / "summary.json").string(), (out / "plots").string());
  REQUIRE(written.size() == 2);
  CHECK(fs::exists(out / "plots" / "small.dat"));
  const std::string svg = slurp(out / "plots" / "small.svg");
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("UnderGrad") != std::string::npos);
  const std::string dat = slurp(out / "plots" / "small.dat");
  CHECK(dat.rfind("# t UnderGrad UnixGrad_x0.5", 0) == 0);

  json broken = json::parse(slurp(out / "run" / "summary.json"));
  broken["series"][0]["mean_gap"] = json::array();
  broken["series"][0]["t"] = json::array();
  {
    std::ofstream f(out / "broken.json");
    f << broken.dump();
  }
  CHECK_THROWS_AS(plot((out / "broken.json").string(), (out / "plots2").string()), ConfigError);
  CHECK_THROWS_AS(plot((out / "none*.json").string(), (out / "plots3").string()), ConfigError);
  fs::remove_all(out);
}

TEST_CASE("verify detects a tampered three-point implementation") {
  VerifyHooks hooks;
  hooks.three_point = [](const Regularizer& reg, const PrimalPoint& p, const DualVector& y,
                         const DualVector& yp) {
    // drops the cross term <y+ - y, Q(y) - p>
    const PrimalPoint q = mirror_map(reg, y);
    return std::abs(fenchel_coupling(reg, p, yp) - fenchel_coupling(reg, p, y) -
                    fenchel_coupling(reg, q, yp));
  };
  const auto results = verify("lemmas", hooks);
  bool named = false;
  for (const auto& r : results) {
    if (r.name == "lemmas.three_point_identity") named = !r.passed;
  }
  CHECK(named);
  CHECK_FALSE(all_passed(results));
  CHECK_THROWS_AS(verify("everything"), ConfigError);
}

TEST_CASE("CLI exit codes") {
  CHECK(cli("list") == 0);
  CHECK(cli("verify --suite nope") == 1);
  CHECK(cli("run --config /nonexistent.json") == 1);
  CHECK(cli("plot --input '/nonexistent/*.json' --out /tmp/x") == 1);
  CHECK(cli("frobnicate") == 1);

  const fs::path dir = scratch("cli");
  json j = small_config(dir / "out");
  j["algorithm"] = {{"name", "unixgrad"}};
  j["problem"] = {{"name", "quadratic_unbounded"}, {"dimension", 3}, {"seed", 1}};
  j["overrides"] = {{"step_scale", 1e200}};
  j["sigma"] = 0.0;
  {
    std::ofstream f(dir / "diverge.json");
    f << j.dump();
  }
  CHECK(cli("run --config " + (dir / "diverge.json").string()) == 2);

  j = small_config(dir / "ok");
  {
    std::ofstream f(dir / "ok.json");
    f << j.dump();
  }
  CHECK(cli("--threads 2 run --config " + (dir / "ok.json").string()) == 0);
  CHECK(fs::exists(dir / "ok" / "UnderGrad_mean.csv"));
  CHECK(cli("verify --suite algorithms") == 0);
  fs::remove_all(dir);
}
