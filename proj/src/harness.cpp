#include "undergrad/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "undergrad/errors.hpp"

namespace undergrad {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::set<std::string> kAlgorithms = {"undergrad", "unixgrad", "aeg", "mirror_prox",
                                           "dual_extrapolation"};
const std::set<std::string> kProblems = {"linear_simplex", "quadratic_simplex",
                                         "capacity_spectrahedron", "quadratic_unbounded"};

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) throw ConfigError("unknown key '" + it.key() + "' in " + where);
  }
}

template <typename T>
T get_required(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError("missing key '" + key + "' in " + where);
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("bad value for '" + key + "' in " + where + ": " + e.what());
  }
}

template <typename T>
std::optional<T> get_optional(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) return std::nullopt;
  return get_required<T>(obj, key, where);
}

std::optional<double> positive_optional(const json& obj, const std::string& key,
                                        const std::string& where) {
  auto v = get_optional<double>(obj, key, where);
  if (v && !(*v > 0.0 && std::isfinite(*v))) {
    throw ConfigError("'" + key + "' in " + where + " must be positive and finite");
  }
  return v;
}

AlgorithmConfig parse_algorithm(const json& obj) {
  const std::string where = "algorithm";
  reject_unknown(obj,
                 {"name", "label", "step_scale_factor", "eta_factor", "alpha", "mode", "constant"},
                 where);
  AlgorithmConfig a;
  a.name = get_required<std::string>(obj, "name", where);
  if (!kAlgorithms.count(a.name)) throw ConfigError("unknown algorithm '" + a.name + "'");
  a.label = get_optional<std::string>(obj, "label", where).value_or("");
  a.step_scale_factor = positive_optional(obj, "step_scale_factor", where);
  a.eta_factor = positive_optional(obj, "eta_factor", where);
  a.alpha = positive_optional(obj, "alpha", where);
  a.mode = get_optional<std::string>(obj, "mode", where);
  a.constant = positive_optional(obj, "constant", where);
  if (a.mode) mirror_prox_mode_from_string(*a.mode);
  if (a.name == "dual_extrapolation" && !a.alpha) {
    throw ConfigError("dual_extrapolation needs 'alpha'");
  }
  for (char c : a.label) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) {
      throw ConfigError("label '" + a.label + "' may only use [A-Za-z0-9_.-]");
    }
  }
  return a;
}

std::string fmt_factor(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Parameters shared by every run of one experiment.
struct Resolved {
  ProblemInstance problem;
  UnderGradParams params;
  double eta1;
};

Resolved resolve(const ExperimentConfig& config) {
  const Geometry geometry = geometry_from_string(config.problem.geometry);
  ProblemInstance problem =
      make_problem(config.problem.name, config.problem.dimension, config.problem.seed, geometry);
  UnderGradParams params{config.overrides.theta, config.overrides.delta};
  if (!problem.regularizer.bounded()) {
    // unbounded domains: theta = delta = sqrt(K) unless overridden
    const double root_k = std::sqrt(problem.regularizer.K());
    if (!params.theta) params.theta = root_k;
    if (!params.delta) params.delta = root_k;
  }
  const double eta1 = initial_eta(problem.regularizer, params);
  return {std::move(problem), params, eta1};
}

Trajectory dispatch(const Resolved& r, const ExperimentConfig& config, const AlgorithmConfig& algo,
                    OracleHandle& oracle, const RunOptions& opts) {
  if (algo.name == "undergrad") return undergrad_run(r.problem, oracle, opts, r.params);
  if (algo.name == "aeg") {
    const double eta = config.overrides.eta ? *config.overrides.eta
                                            : algo.eta_factor.value_or(1.0) * r.eta1;
    return fixed_lr_accelerated_run(r.problem, oracle, opts, eta);
  }
  if (algo.name == "unixgrad") {
    const double scale = config.overrides.step_scale
                             ? *config.overrides.step_scale
                             : algo.step_scale_factor.value_or(1.0) * r.eta1;
    return unixgrad_run(r.problem, oracle, opts, scale);
  }
  if (algo.name == "mirror_prox") {
    MirrorProxConstants c;
    c.constant = algo.constant.value_or(1.0);
    return mirror_prox_run(r.problem, oracle, opts,
                           mirror_prox_mode_from_string(algo.mode.value_or("bg")), c);
  }
  if (algo.name == "dual_extrapolation") {
    return dual_extrapolation_run(r.problem, oracle, opts, *algo.alpha);
  }
  throw ConfigError("unknown algorithm '" + algo.name + "'");
}

OracleHandle make_oracle(const ExperimentConfig& config, const ProblemInstance& problem, Rng rng) {
  NoiseModel noise = default_noise(problem.regularizer, config.sigma);
  if (config.noise && config.sigma > 0.0) noise = {noise_kind_from_string(*config.noise)};
  return OracleHandle(problem.gradient, problem.regularizer, noise, config.sigma, std::move(rng));
}

std::map<std::string, std::vector<double>> bounds_for(const std::string& algorithm,
                                                      const ProblemInstance& problem, double sigma,
                                                      const std::vector<long>& ts) {
  std::map<std::string, std::vector<double>> out;
  const Regularizer& reg = problem.regularizer;
  if (!reg.bounded()) return out;
  auto fill = [&](const std::string& key, auto fn) {
    std::vector<double> v;
    v.reserve(ts.size());
    for (long t : ts) v.push_back(fn(static_cast<double>(t)));
    out[key] = std::move(v);
  };
  const bool undergrad_type =
      algorithm == "UnderGrad" || algorithm == "UnixGrad" || algorithm == "AEG";
  if (undergrad_type) {
    if (std::isfinite(problem.G)) {
      fill("bg", [&](double t) {
        return bg_bound(reg.K(), reg.Omega(), reg.Diam(), problem.G, sigma, t);
      });
    }
    if (std::isfinite(problem.L)) {
      fill("lg", [&](double t) {
        return lg_bound(reg.K(), reg.Omega(), reg.Diam(), problem.L, sigma, t);
      });
    }
  } else {
    if (std::isfinite(problem.G)) {
      fill("mp_bg", [&](double t) { return mp_bg_bound(reg.K(), reg.Omega(), problem.G, sigma, t); });
    }
    if (std::isfinite(problem.L)) {
      fill("mp_lg", [&](double t) { return mp_lg_bound(reg.K(), reg.Omega(), problem.L, sigma, t); });
    }
  }
  return out;
}

}  // namespace

ExperimentConfig parse_config(const json& doc) {
  const std::string where = "config";
  reject_unknown(doc,
                 {"name", "algorithm", "problem", "T", "sigma", "noise", "seeds", "weights",
                  "overrides", "output_dir"},
                 where);
  ExperimentConfig c;
  c.name = get_optional<std::string>(doc, "name", where).value_or("experiment");

  if (!doc.contains("algorithm")) throw ConfigError("missing key 'algorithm' in config");
  const json& algo = doc.at("algorithm");
  if (algo.is_array()) {
    for (const auto& a : algo) c.algorithms.push_back(parse_algorithm(a));
  } else {
    c.algorithms.push_back(parse_algorithm(algo));
  }
  if (c.algorithms.empty()) throw ConfigError("'algorithm' must name at least one algorithm");
  std::set<std::string> labels;
  for (const auto& a : c.algorithms) {
    if (!labels.insert(series_label(a)).second) {
      throw ConfigError("duplicate series label '" + series_label(a) + "'");
    }
  }

  if (!doc.contains("problem")) throw ConfigError("missing key 'problem' in config");
  const json& prob = doc.at("problem");
  reject_unknown(prob, {"name", "dimension", "seed", "geometry"}, "problem");
  c.problem.name = get_required<std::string>(prob, "name", "problem");
  if (!kProblems.count(c.problem.name)) throw ConfigError("unknown problem '" + c.problem.name + "'");
  c.problem.dimension = get_required<long>(prob, "dimension", "problem");
  if (c.problem.dimension < 1) throw ConfigError("problem dimension must be positive");
  c.problem.seed = get_optional<std::uint64_t>(prob, "seed", "problem").value_or(0);
  c.problem.geometry = get_optional<std::string>(prob, "geometry", "problem").value_or("entropic");
  geometry_from_string(c.problem.geometry);

  c.T = get_required<long>(doc, "T", where);
  if (c.T < 1) throw ConfigError("T must be at least 1");
  c.sigma = get_optional<double>(doc, "sigma", where).value_or(0.0);
  if (!(c.sigma >= 0.0) || !std::isfinite(c.sigma)) throw ConfigError("sigma must be >= 0");
  c.noise = get_optional<std::string>(doc, "noise", where);
  if (c.noise) noise_kind_from_string(*c.noise);

  c.seeds = get_optional<std::vector<std::uint64_t>>(doc, "seeds", where)
                .value_or(std::vector<std::uint64_t>{0});
  if (c.seeds.empty()) throw ConfigError("seeds must be non-empty");
  if (std::set<std::uint64_t>(c.seeds.begin(), c.seeds.end()).size() != c.seeds.size()) {
    throw ConfigError("seeds must be distinct");
  }
  c.weights.rule =
      weight_rule_from_string(get_optional<std::string>(doc, "weights", where).value_or("linear"));

  if (doc.contains("overrides")) {
    const json& ov = doc.at("overrides");
    reject_unknown(ov, {"theta", "delta", "step_scale", "eta"}, "overrides");
    c.overrides.theta = positive_optional(ov, "theta", "overrides");
    c.overrides.delta = positive_optional(ov, "delta", "overrides");
    c.overrides.step_scale = positive_optional(ov, "step_scale", "overrides");
    c.overrides.eta = positive_optional(ov, "eta", "overrides");
  }
  c.output_dir = get_optional<std::string>(doc, "output_dir", where).value_or("results/" + c.name);
  return c;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

json to_json(const ExperimentConfig& c) {
  json algos = json::array();
  for (const auto& a : c.algorithms) {
    json j = {{"name", a.name}, {"label", series_label(a)}};
    if (a.step_scale_factor) j["step_scale_factor"] = *a.step_scale_factor;
    if (a.eta_factor) j["eta_factor"] = *a.eta_factor;
    if (a.alpha) j["alpha"] = *a.alpha;
    if (a.mode) j["mode"] = *a.mode;
    if (a.constant) j["constant"] = *a.constant;
    algos.push_back(j);
  }
  json doc = {
      {"name", c.name},
      {"algorithm", algos},
      {"problem",
       {{"name", c.problem.name},
        {"dimension", c.problem.dimension},
        {"seed", c.problem.seed},
        {"geometry", c.problem.geometry}}},
      {"T", c.T},
      {"sigma", c.sigma},
      {"seeds", c.seeds},
      {"weights", to_string(c.weights.rule)},
      {"output_dir", c.output_dir},
  };
  if (c.noise) doc["noise"] = *c.noise;
  json ov = json::object();
  if (c.overrides.theta) ov["theta"] = *c.overrides.theta;
  if (c.overrides.delta) ov["delta"] = *c.overrides.delta;
  if (c.overrides.step_scale) ov["step_scale"] = *c.overrides.step_scale;
  if (c.overrides.eta) ov["eta"] = *c.overrides.eta;
  if (!ov.empty()) doc["overrides"] = ov;
  return doc;
}

std::string config_hash(const ExperimentConfig& config) {
  json doc = to_json(config);
  doc.erase("output_dir");
  const std::string text = doc.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string series_label(const AlgorithmConfig& a) {
  if (!a.label.empty()) return a.label;
  if (a.name == "undergrad") return "UnderGrad";
  if (a.name == "aeg") return "AEG";
  if (a.name == "unixgrad") return "UnixGrad_x" + fmt_factor(a.step_scale_factor.value_or(1.0));
  if (a.name == "mirror_prox") return "MirrorProx_" + a.mode.value_or("bg");
  if (a.name == "dual_extrapolation") return "DualExtrapolation";
  return a.name;
}

std::uint64_t base_seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("UNDERGRAD_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') throw ConfigError("UNDERGRAD_SEED must be an unsigned integer");
  return v;
}

Trajectory run_single(const ExperimentConfig& config, const AlgorithmConfig& algo,
                      std::uint64_t seed, std::uint64_t base_seed, bool measure_time) {
  const Resolved r = resolve(config);
  OracleHandle oracle = make_oracle(config, r.problem, derive_stream(base_seed, seed));
  RunOptions opts;
  opts.T = config.T;
  opts.weights = config.weights;
  opts.measure_time = measure_time;
  Trajectory traj = dispatch(r, config, algo, oracle, opts);
  traj.seed = seed;
  return traj;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trajectory_csv(const std::string& path, const std::string& run_id,
                          const Trajectory& traj, bool timing) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << kCsvHeader << '\n';
  for (const auto& r : traj.records) {
    out << run_id << ',' << r.t << ',' << format_double(r.f_value) << ',' << format_double(r.gap)
        << ',' << format_double(r.eta) << ',' << format_double(r.S) << ',' << r.queries << ','
        << (timing ? r.wall_ns : 0) << '\n';
  }
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

namespace {

void write_mean_csv(const std::string& path, const std::string& run_id,
                    const std::vector<Trajectory>& runs) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << kCsvHeader << '\n';
  const double n = static_cast<double>(runs.size());
  const std::size_t rows = runs.front().records.size();
  for (std::size_t i = 0; i < rows; ++i) {
    double f = 0.0, gap = 0.0, eta = 0.0, S = 0.0, q = 0.0;
    for (const auto& run : runs) {
      const auto& r = run.records[i];
      f += r.f_value;
      gap += r.gap;
      eta += r.eta;
      S += r.S;
      q += static_cast<double>(r.queries);
    }
    out << run_id << ',' << runs.front().records[i].t << ',' << format_double(f / n) << ','
        << format_double(gap / n) << ',' << format_double(eta / n) << ',' << format_double(S / n)
        << ',' << format_double(q / n) << ',' << 0 << '\n';
  }
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

json fit_json(const std::optional<RateFit>& fit) {
  if (!fit) return nullptr;
  return {{"slope", fit->slope},
          {"intercept", fit->intercept},
          {"t_min", fit->window.t_min},
          {"t_max", fit->window.t_max},
          {"r_squared", fit->r_squared},
          {"points", fit->points}};
}

}  // namespace

RunSummary run_experiment(const ExperimentConfig& config, const RunnerOptions& options) {
  const Resolved resolved = resolve(config);

  struct Job {
    std::size_t algo;
    std::size_t seed_index;
  };
  std::vector<Job> jobs;
  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    for (std::size_t s = 0; s < config.seeds.size(); ++s) jobs.push_back({a, s});
  }

  std::vector<Trajectory> results(jobs.size());
  std::vector<std::int64_t> wall(jobs.size(), 0);
  std::mutex collector;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failed_job = 0;

  auto worker = [&]() {
    for (;;) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs.size()) return;
      const auto start = std::chrono::steady_clock::now();
      try {
        const AlgorithmConfig& algo = config.algorithms[jobs[j].algo];
        OracleHandle oracle = make_oracle(config, resolved.problem,
                                          derive_stream(options.base_seed, config.seeds[jobs[j].seed_index]));
        RunOptions opts;
        opts.T = config.T;
        opts.weights = config.weights;
        opts.measure_time = options.csv_timing;
        Trajectory traj = dispatch(resolved, config, algo, oracle, opts);
        traj.seed = config.seeds[jobs[j].seed_index];
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::lock_guard<std::mutex> lock(collector);
        results[j] = std::move(traj);
        wall[j] = ns;
      } catch (...) {
        std::lock_guard<std::mutex> lock(collector);
        if (!failure || j < failed_job) {
          failure = std::current_exception();
          failed_job = j;
        }
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads,
                                                           static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  if (failure) {
    const std::string id = series_label(config.algorithms[jobs[failed_job].algo]) + " seed " +
                           std::to_string(config.seeds[jobs[failed_job].seed_index]);
    try {
      std::rethrow_exception(failure);
    } catch (const NumericalFailure& e) {
      throw NumericalFailure(config.name + "/" + id + ": " + e.what(), e.iteration());
    }
  }

  RunSummary summary;
  summary.experiment = config.name;
  summary.config_hash = config_hash(config);
  summary.config = config;
  if (options.write_files) fs::create_directories(config.output_dir);

  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    SeriesSummary s;
    s.label = series_label(config.algorithms[a]);
    for (std::size_t k = 0; k < config.seeds.size(); ++k) {
      const std::size_t j = a * config.seeds.size() + k;
      s.runs.push_back(std::move(results[j]));
      s.wall_ns_total += wall[j];
    }
    const Trajectory& first = s.runs.front();
    s.algorithm = first.algorithm;
    s.parameters = first.parameters;
    for (const auto& r : first.records) s.t.push_back(r.t);
    s.mean_gap.assign(s.t.size(), 0.0);
    for (const auto& run : s.runs) {
      if (run.records.size() != s.t.size()) {
        throw NumericalFailure("checkpoint grids differ across seeds in " + config.name);
      }
      for (std::size_t i = 0; i < s.t.size(); ++i) s.mean_gap[i] += run.records[i].gap;
      s.final_gap.emplace_back(run.seed, run.records.back().gap);
    }
    for (double& g : s.mean_gap) g /= static_cast<double>(s.runs.size());
    try {
      std::vector<double> td(s.t.begin(), s.t.end());
      s.fit = rate_slope(td, s.mean_gap, default_window(config.T));
    } catch (const InsufficientData&) {
      s.fit.reset();
    }
    s.bounds = bounds_for(s.algorithm, resolved.problem, config.sigma, s.t);
    summary.wall_ns_total += s.wall_ns_total;

    if (options.write_files) {
      for (const auto& run : s.runs) {
        const std::string id = s.label + "/seed" + std::to_string(run.seed);
        write_trajectory_csv(
            (fs::path(config.output_dir) / (s.label + "_seed" + std::to_string(run.seed) + ".csv"))
                .string(),
            id, run, options.csv_timing);
      }
      write_mean_csv((fs::path(config.output_dir) / (s.label + "_mean.csv")).string(),
                     s.label + "/mean", s.runs);
    }
    summary.series.push_back(std::move(s));
  }

  if (options.write_files) {
    std::ofstream out(fs::path(config.output_dir) / "summary.json", std::ios::trunc);
    out << summary_to_json(summary).dump(2) << '\n';
    if (!out) throw ConfigError("failed writing summary in '" + config.output_dir + "'");
  }
  return summary;
}

json summary_to_json(const RunSummary& summary) {
  json series = json::array();
  for (const auto& s : summary.series) {
    json finals = json::array();
    for (const auto& [seed, gap] : s.final_gap) finals.push_back({{"seed", seed}, {"gap", gap}});
    json bounds = json::object();
    for (const auto& [k, v] : s.bounds) bounds[k] = v;
    series.push_back({{"label", s.label},
                      {"algorithm", s.algorithm},
                      {"parameters", s.parameters},
                      {"t", s.t},
                      {"mean_gap", s.mean_gap},
                      {"final_gap", finals},
                      {"rate_fit", fit_json(s.fit)},
                      {"bounds", bounds},
                      {"wall_ns_total", s.wall_ns_total}});
  }
  return {{"experiment", summary.experiment},
          {"config_hash", summary.config_hash},
          {"config", to_json(summary.config)},
          {"series", series},
          {"wall_ns_total", summary.wall_ns_total}};
}

namespace {

ExperimentConfig base_linear(const std::string& name, double sigma, std::size_t seeds) {
  ExperimentConfig c;
  c.name = name;
  c.problem = {"linear_simplex", 100, 7, "entropic"};
  c.T = 10000;
  c.sigma = sigma;
  for (std::size_t s = 0; s < seeds; ++s) c.seeds.push_back(s);
  c.output_dir = "results/" + name;
  c.algorithms = {
      {"undergrad", "", {}, {}, {}, {}, {}},
      {"unixgrad", "UnixGrad_x0.001", 1e-3, {}, {}, {}, {}},
      {"unixgrad", "UnixGrad_x1", 1.0, {}, {}, {}, {}},
      {"unixgrad", "UnixGrad_x10", 10.0, {}, {}, {}, {}},
      {"aeg", "", {}, 1.0, {}, {}, {}},
  };
  return c;
}

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> reg;
  reg.push_back({"fig1",
                 "UnderGrad, UnixGrad at {1e-3, 1, 10} x eta_1 and AEG on a linear loss over the "
                 "100-simplex, perfect oracle",
                 {base_linear("fig1", 0.0, 1)}});
  reg.push_back({"fig3", "fig1 with a noisy oracle (sigma = 0.1), 20 seeds",
                 {base_linear("fig3", 0.1, 20)}});
  {
    RegistryEntry e{"fig4", "UnderGrad on the fig1 problem across sigma in {0, 0.01, 0.1, 1}", {}};
    for (double sigma : {0.0, 0.01, 0.1, 1.0}) {
      ExperimentConfig c = base_linear("fig4_sigma" + fmt_factor(sigma), sigma, 20);
      c.algorithms = {{"undergrad", "", {}, {}, {}, {}, {}}};
      c.output_dir = "results/fig4/sigma_" + fmt_factor(sigma);
      e.experiments.push_back(c);
    }
    reg.push_back(e);
  }
  {
    ExperimentConfig c;
    c.name = "quadratic";
    c.problem = {"quadratic_simplex", 50, 7, "entropic"};
    c.T = 10000;
    c.seeds = {0};
    c.algorithms = {{"undergrad", "", {}, {}, {}, {}, {}},
                    {"unixgrad", "UnixGrad_x1", 1.0, {}, {}, {}, {}},
                    {"mirror_prox", "", {}, {}, {}, std::string("lg_deterministic"), {}}};
    c.output_dir = "results/quadratic";
    reg.push_back({"quadratic", "Smooth quadratic on the 50-simplex, perfect oracle", {c}});
  }
  {
    ExperimentConfig c;
    c.name = "capacity";
    c.problem = {"capacity_spectrahedron", 4, 7, "von_neumann"};
    c.T = 2000;
    c.seeds = {0};
    c.algorithms = {{"undergrad", "", {}, {}, {}, {}, {}},
                    {"mirror_prox", "", {}, {}, {}, std::string("lg_deterministic"), {}}};
    c.output_dir = "results/capacity";
    reg.push_back({"capacity", "Channel-capacity objective on the 4x4 spectrahedron", {c}});
  }
  {
    ExperimentConfig c;
    c.name = "unbounded";
    c.problem = {"quadratic_unbounded", 20, 7, "euclidean_unbounded"};
    c.T = 10000;
    c.seeds = {0};
    c.algorithms = {{"undergrad", "", {}, {}, {}, {}, {}}};
    c.output_dir = "results/unbounded";
    reg.push_back({"unbounded", "UnderGrad with theta = delta = sqrt(K) on an unbounded quadratic",
                   {c}});
  }
  {
    ExperimentConfig c;
    c.name = "baselines";
    c.problem = {"linear_simplex", 10, 7, "entropic"};
    c.T = 10000;
    c.seeds = {0};
    c.algorithms = {{"undergrad", "", {}, {}, {}, {}, {}},
                    {"mirror_prox", "", {}, {}, {}, std::string("bg"), {}},
                    {"dual_extrapolation", "", {}, {}, 0.01, {}, {}}};
    c.output_dir = "results/baselines";
    reg.push_back({"baselines", "UnderGrad against mirror-prox and dual extrapolation", {c}});
  }
  return reg;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = build_registry();
  return entries;
}

const RegistryEntry& registry_lookup(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw ConfigError("unknown registry entry '" + name + "'");
}

}  // namespace undergrad
