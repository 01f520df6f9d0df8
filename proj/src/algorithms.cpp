#include "undergrad/algorithms.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "undergrad/errors.hpp"

namespace undergrad {

namespace {

void check_options(const RunOptions& options) {
  if (options.T < 1) throw InvalidInput("run: T must be at least 1");
}

void require_finite(const Eigen::VectorXd& v, const char* what, long t) {
  if (!v.allFinite()) {
    throw NumericalFailure(std::string("non-finite ") + what + " at iteration " + std::to_string(t),
                           t);
  }
}

void require_finite(double v, const char* what, long t) {
  if (!std::isfinite(v)) {
    throw NumericalFailure(std::string("non-finite ") + what + " at iteration " + std::to_string(t),
                           t);
  }
}

// Checkpoint bookkeeping shared by every method.
class Recorder {
 public:
  Recorder(const ProblemInstance& problem, const OracleHandle& oracle, const RunOptions& options,
           Trajectory& traj)
      : problem_(problem),
        oracle_(oracle),
        options_(options),
        traj_(traj),
        schedule_(checkpoint_schedule(options.T)),
        start_(std::chrono::steady_clock::now()) {
    traj_.problem = problem.name;
    traj_.sigma = oracle.sigma();
    traj_.weights = options.weights;
    traj_.T = options.T;
    traj_.has_vectors = options.record_vectors;
    traj_.records.reserve(options.record_vectors ? static_cast<std::size_t>(options.T)
                                                 : schedule_.size());
  }

  bool due(long t) const {
    return options_.record_vectors || (next_ < schedule_.size() && schedule_[next_] == t);
  }

  void record(TrajectoryRecord rec, const PrimalPoint& output) {
    if (next_ < schedule_.size() && schedule_[next_] == rec.t) ++next_;
    rec.f_value = problem_.objective(output);
    rec.gap = rec.f_value - problem_.f_min;
    rec.queries = oracle_.query_count();
    if (options_.measure_time) {
      rec.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    }
    require_finite(rec.f_value, "objective value", rec.t);
    traj_.records.push_back(std::move(rec));
  }

 private:
  const ProblemInstance& problem_;
  const OracleHandle& oracle_;
  const RunOptions& options_;
  Trajectory& traj_;
  std::vector<long> schedule_;
  std::size_t next_ = 0;
  std::chrono::steady_clock::time_point start_;
};

// Shared loop for UnderGrad and its fixed-rate variant.
Trajectory undergrad_loop(const ProblemInstance& problem, OracleHandle& oracle,
                          const RunOptions& options, double theta, double delta,
                          std::optional<double> fixed_eta) {
  check_options(options);
  const Regularizer& reg = problem.regularizer;
  const NormPair& norms = reg.norms();
  const Eigen::Index d = reg.dim();

  Trajectory traj;
  Recorder recorder(problem, oracle, options, traj);

  DualVector y = DualVector::Zero(d);
  PrimalPoint w = PrimalPoint::Zero(d);
  double S = delta * delta;
  PrimalPoint xbar_half;

  for (long t = 1; t <= options.T; ++t) {
    const double eta = fixed_eta ? *fixed_eta : theta / std::sqrt(S);
    const double gamma = options.weights.gamma(t);
    const double gamma_sum = options.weights.cumulative(t);

    const PrimalPoint x = mirror_map(reg, eta * y);
    const PrimalPoint xbar = (gamma * x + w) / gamma_sum;
    const DualVector g = oracle.query(xbar);
    require_finite(g, "gradient", t);

    const DualVector y_half = y - gamma * g;
    const PrimalPoint x_half = mirror_map(reg, eta * y_half);
    xbar_half = (gamma * x_half + w) / gamma_sum;
    const DualVector g_half = oracle.query(xbar_half);
    require_finite(g_half, "gradient", t);

    y -= gamma * g_half;
    const double S_t = S;
    if (!fixed_eta) {
      const double diff = norms.dual(g_half - g);
      S += gamma * gamma * diff * diff;
    }
    w += gamma * x_half;

    require_finite(y, "dual state", t);
    require_finite(x_half, "iterate", t);
    require_finite(S, "preconditioner", t);

    if (recorder.due(t)) {
      TrajectoryRecord rec;
      rec.t = t;
      rec.gamma = gamma;
      rec.eta = eta;
      rec.S = S_t;
      if (options.record_vectors) {
        rec.x = x;
        rec.x_half = x_half;
        rec.xbar = xbar;
        rec.xbar_half = xbar_half;
        rec.g = g;
        rec.g_half = g_half;
      }
      recorder.record(std::move(rec), xbar_half);
    }
  }
  traj.output = xbar_half;
  traj.final_eta = fixed_eta ? *fixed_eta : theta / std::sqrt(S);
  return traj;
}

}  // namespace

const char* to_string(WeightRule rule) {
  return rule == WeightRule::kLinear ? "linear" : "constant";
}

WeightRule weight_rule_from_string(const std::string& name) {
  if (name == "linear") return WeightRule::kLinear;
  if (name == "constant") return WeightRule::kConstant;
  throw ConfigError("unknown weight rule '" + name + "'");
}

double StepWeights::gamma(long t) const {
  return rule == WeightRule::kLinear ? static_cast<double>(t) : 1.0;
}

double StepWeights::cumulative(long t) const {
  const double td = static_cast<double>(t);
  return rule == WeightRule::kLinear ? 0.5 * td * (td + 1.0) : td;
}

std::vector<long> checkpoint_schedule(long T) {
  constexpr long kDense = 10000;
  std::vector<long> out;
  for (long t = 1; t <= std::min(T, kDense); ++t) out.push_back(t);
  double next = static_cast<double>(kDense);
  long last = std::min(T, kDense);
  while (last < T) {
    next *= 1.05;
    const long t = std::min(T, static_cast<long>(std::ceil(next)));
    if (t > last) {
      out.push_back(t);
      last = t;
    }
  }
  return out;
}

void ErgodicAverage::add(const PrimalPoint& x, double weight) {
  sum_ += weight * x;
  weight_ += weight;
}

PrimalPoint ErgodicAverage::mean() const {
  if (weight_ <= 0.0) throw InvalidInput("ErgodicAverage: no weight accumulated");
  return sum_ / weight_;
}

double default_delta(const Regularizer& reg) { return std::sqrt(reg.K()); }

double default_theta(const Regularizer& reg) {
  if (!reg.bounded()) {
    throw ConfigError("UnderGrad on an unbounded domain needs explicit theta and delta");
  }
  const double K = reg.K();
  return std::sqrt(K * (reg.Omega() + K * reg.Diam() * reg.Diam()));
}

double initial_eta(const Regularizer& reg, const UnderGradParams& params) {
  const double theta = params.theta ? *params.theta : default_theta(reg);
  const double delta = params.delta ? *params.delta : default_delta(reg);
  return theta / delta;
}

Trajectory undergrad_run(const ProblemInstance& problem, OracleHandle& oracle,
                         const RunOptions& options, const UnderGradParams& params) {
  const Regularizer& reg = problem.regularizer;
  if (!reg.bounded() && !(params.theta && params.delta)) {
    throw ConfigError("UnderGrad on an unbounded domain needs explicit theta and delta");
  }
  const double theta = params.theta ? *params.theta : default_theta(reg);
  const double delta = params.delta ? *params.delta : default_delta(reg);
  if (!(theta > 0.0) || !(delta > 0.0) || !std::isfinite(theta) || !std::isfinite(delta)) {
    throw InvalidInput("undergrad_run: theta and delta must be positive and finite");
  }
  Trajectory traj = undergrad_loop(problem, oracle, options, theta, delta, std::nullopt);
  traj.algorithm = "UnderGrad";
  traj.parameters = {{"theta", theta}, {"delta", delta}};
  return traj;
}

Trajectory fixed_lr_accelerated_run(const ProblemInstance& problem, OracleHandle& oracle,
                                    const RunOptions& options, double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw InvalidInput("fixed_lr_accelerated_run: eta must be positive and finite");
  }
  Trajectory traj = undergrad_loop(problem, oracle, options, 0.0, 1.0, eta);
  traj.algorithm = "AEG";
  traj.parameters = {{"eta", eta}};
  return traj;
}

Trajectory unixgrad_run(const ProblemInstance& problem, OracleHandle& oracle,
                        const RunOptions& options, double step_scale) {
  check_options(options);
  if (!(step_scale > 0.0) || !std::isfinite(step_scale)) {
    throw InvalidInput("unixgrad_run: step_scale must be positive and finite");
  }
  const Regularizer& reg = problem.regularizer;
  const NormPair& norms = reg.norms();
  const Eigen::Index d = reg.dim();

  Trajectory traj;
  traj.algorithm = "UnixGrad";
  traj.parameters = {{"step_scale", step_scale}};
  Recorder recorder(problem, oracle, options, traj);

  // Q(0) is the prox-center, so z = 0 represents X_1.
  DualVector z = DualVector::Zero(d);
  PrimalPoint w = PrimalPoint::Zero(d);
  double acc = 0.0;
  PrimalPoint xbar_half;

  for (long t = 1; t <= options.T; ++t) {
    const double gamma = options.weights.gamma(t);
    const double gamma_sum = options.weights.cumulative(t);
    const double alpha = step_scale * gamma / std::sqrt(1.0 + acc);

    const PrimalPoint x = mirror_map(reg, z);
    const PrimalPoint xbar = (gamma * x + w) / gamma_sum;
    const DualVector g = oracle.query(xbar);
    require_finite(g, "gradient", t);

    const DualVector z_half = prox_step_dual(reg, z, -alpha * g);
    const PrimalPoint x_half = mirror_map(reg, z_half);
    xbar_half = (gamma * x_half + w) / gamma_sum;
    const DualVector g_half = oracle.query(xbar_half);
    require_finite(g_half, "gradient", t);

    z = prox_step_dual(reg, z, -alpha * g_half);
    const double acc_t = acc;
    const double diff = norms.dual(g_half - g);
    acc += gamma * gamma * diff * diff;
    w += gamma * x_half;

    require_finite(z, "base state", t);
    require_finite(x_half, "iterate", t);
    require_finite(acc, "step accumulator", t);

    if (recorder.due(t)) {
      TrajectoryRecord rec;
      rec.t = t;
      rec.gamma = gamma;
      rec.eta = alpha;
      rec.S = 1.0 + acc_t;
      if (options.record_vectors) {
        rec.x = x;
        rec.x_half = x_half;
        rec.xbar = xbar;
        rec.xbar_half = xbar_half;
        rec.g = g;
        rec.g_half = g_half;
      }
      recorder.record(std::move(rec), xbar_half);
    }
  }
  traj.output = xbar_half;
  const long next = options.T + 1;
  traj.final_eta = step_scale * options.weights.gamma(next) / std::sqrt(1.0 + acc);
  return traj;
}

const char* to_string(MirrorProxMode mode) {
  switch (mode) {
    case MirrorProxMode::kBoundedGradient: return "bg";
    case MirrorProxMode::kLipschitzDeterministic: return "lg_deterministic";
    case MirrorProxMode::kLipschitzStochastic: return "lg_stochastic";
  }
  return "unknown";
}

MirrorProxMode mirror_prox_mode_from_string(const std::string& name) {
  if (name == "bg") return MirrorProxMode::kBoundedGradient;
  if (name == "lg_deterministic") return MirrorProxMode::kLipschitzDeterministic;
  if (name == "lg_stochastic") return MirrorProxMode::kLipschitzStochastic;
  throw ConfigError("unknown mirror-prox step mode '" + name + "'");
}

double mirror_prox_step(MirrorProxMode mode, double K, long T, double G, double L, double sigma,
                        double constant) {
  if (T < 1) throw InvalidInput("mirror_prox_step: T must be at least 1");
  if (!(constant > 0.0) || !std::isfinite(constant)) {
    throw ConfigError("mirror_prox_step: constant must be positive and finite");
  }
  const double td = static_cast<double>(T);
  switch (mode) {
    case MirrorProxMode::kBoundedGradient: {
      const double energy = G * G + sigma * sigma;
      if (!std::isfinite(energy) || !(energy > 0.0)) {
        throw ConfigError("mirror-prox BG step needs finite G and sigma with G^2 + sigma^2 > 0");
      }
      return constant / std::sqrt(energy * td);
    }
    case MirrorProxMode::kLipschitzDeterministic:
      if (!std::isfinite(L) || !(L > 0.0)) {
        throw ConfigError("mirror-prox LG step needs a finite positive L");
      }
      return constant * K / L;
    case MirrorProxMode::kLipschitzStochastic:
      if (!std::isfinite(sigma) || !(sigma > 0.0)) {
        throw ConfigError("mirror-prox stochastic LG step needs a finite positive sigma");
      }
      return constant / (sigma * std::sqrt(td));
  }
  throw ConfigError("unknown mirror-prox step mode");
}

Trajectory mirror_prox_run(const ProblemInstance& problem, OracleHandle& oracle,
                           const RunOptions& options, MirrorProxMode mode,
                           const MirrorProxConstants& constants) {
  check_options(options);
  const Regularizer& reg = problem.regularizer;
  const double G = constants.G ? *constants.G : problem.G;
  const double L = constants.L ? *constants.L : problem.L;
  const double sigma = constants.sigma ? *constants.sigma : oracle.sigma();
  const double alpha = mirror_prox_step(mode, reg.K(), options.T, G, L, sigma, constants.constant);

  Trajectory traj;
  traj.algorithm = "MirrorProx";
  traj.parameters = {{"alpha", alpha}, {"constant", constants.constant}};
  Recorder recorder(problem, oracle, options, traj);

  DualVector z = DualVector::Zero(reg.dim());
  ErgodicAverage average(reg.dim());

  for (long t = 1; t <= options.T; ++t) {
    const PrimalPoint x = mirror_map(reg, z);
    const DualVector g = oracle.query(x);
    require_finite(g, "gradient", t);
    const DualVector z_half = prox_step_dual(reg, z, -alpha * g);
    const PrimalPoint x_half = mirror_map(reg, z_half);
    const DualVector g_half = oracle.query(x_half);
    require_finite(g_half, "gradient", t);
    z = prox_step_dual(reg, z, -alpha * g_half);
    average.add(x_half, alpha);

    require_finite(z, "base state", t);

    if (recorder.due(t)) {
      TrajectoryRecord rec;
      rec.t = t;
      rec.gamma = alpha;
      rec.eta = alpha;
      if (options.record_vectors) {
        rec.x = x;
        rec.x_half = x_half;
        rec.xbar = x;
        rec.xbar_half = x_half;
        rec.g = g;
        rec.g_half = g_half;
      }
      recorder.record(std::move(rec), average.mean());
    }
  }
  traj.output = average.mean();
  traj.final_eta = alpha;
  return traj;
}

Trajectory dual_extrapolation_run(const ProblemInstance& problem, OracleHandle& oracle,
                                  const RunOptions& options, double alpha) {
  check_options(options);
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidInput("dual_extrapolation_run: alpha must be positive and finite");
  }
  const Regularizer& reg = problem.regularizer;

  Trajectory traj;
  traj.algorithm = "DualExtrapolation";
  traj.parameters = {{"alpha", alpha}};
  Recorder recorder(problem, oracle, options, traj);

  DualVector y = DualVector::Zero(reg.dim());
  ErgodicAverage average(reg.dim());

  for (long t = 1; t <= options.T; ++t) {
    const DualVector z = alpha * y;
    const PrimalPoint x = mirror_map(reg, z);
    const DualVector g = oracle.query(x);
    require_finite(g, "gradient", t);
    const PrimalPoint x_half = mirror_map(reg, prox_step_dual(reg, z, -alpha * g));
    const DualVector g_half = oracle.query(x_half);
    require_finite(g_half, "gradient", t);
    y -= g_half;
    average.add(x_half, 1.0);

    require_finite(y, "dual state", t);

    if (recorder.due(t)) {
      TrajectoryRecord rec;
      rec.t = t;
      rec.gamma = 1.0;
      rec.eta = alpha;
      if (options.record_vectors) {
        rec.x = x;
        rec.x_half = x_half;
        rec.xbar = x;
        rec.xbar_half = x_half;
        rec.g = g;
        rec.g_half = g_half;
      }
      recorder.record(std::move(rec), average.mean());
    }
  }
  traj.output = average.mean();
  traj.final_eta = alpha;
  return traj;
}

}  // namespace undergrad
