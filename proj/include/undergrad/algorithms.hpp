#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "undergrad/geometry.hpp"
#include "undergrad/oracle.hpp"
#include "undergrad/problems.hpp"

namespace undergrad {

enum class WeightRule { kLinear, kConstant };

/// Averaging weights: gamma_t = t (linear) or gamma_t = 1 (constant).
struct StepWeights {
  WeightRule rule = WeightRule::kLinear;

  double gamma(long t) const;
  /// sum_{s <= t} gamma_s in closed form.
  double cumulative(long t) const;
};

const char* to_string(WeightRule rule);
WeightRule weight_rule_from_string(const std::string& name);

struct TrajectoryRecord {
  long t = 0;
  double gamma = 0.0;
  double f_value = 0.0;
  double gap = 0.0;
  double eta = 0.0;
  double S = 0.0;
  long queries = 0;
  std::int64_t wall_ns = 0;

  // Filled only when the run records vectors. For the mirror-prox style
  // baselines x and x_half hold the leading states X_t and X_{t+1/2}.
  PrimalPoint x, x_half, xbar, xbar_half;
  DualVector g, g_half;
};

struct Trajectory {
  std::string algorithm;
  std::string problem;
  std::uint64_t seed = 0;
  double sigma = 0.0;
  std::map<std::string, double> parameters;
  StepWeights weights;
  long T = 0;
  bool has_vectors = false;
  std::vector<TrajectoryRecord> records;
  /// Output point after T iterations.
  PrimalPoint output;
  /// Learning rate (or step) the next iteration would use, i.e. eta_{T+1}.
  double final_eta = 0.0;
};

struct RunOptions {
  long T = 1;
  StepWeights weights;
  /// Keep every iterate and gradient (forces a record per iteration).
  bool record_vectors = false;
  /// Fill wall_ns; left at zero otherwise so outputs stay reproducible.
  bool measure_time = false;
};

/// Iterations at which gap is evaluated: every t up to 10^4, then geometric
/// with ratio 1.05, always ending at T.
std::vector<long> checkpoint_schedule(long T);

/// Running weighted mean of primal points.
class ErgodicAverage {
 public:
  explicit ErgodicAverage(Eigen::Index dim) : sum_(PrimalPoint::Zero(dim)) {}
  void add(const PrimalPoint& x, double weight);
  PrimalPoint mean() const;
  double total_weight() const { return weight_; }

 private:
  PrimalPoint sum_;
  double weight_ = 0.0;
};

struct UnderGradParams {
  std::optional<double> theta;
  std::optional<double> delta;
};

/// delta = sqrt(K).
double default_delta(const Regularizer& reg);
/// theta = sqrt(K (Omega + K Diam^2)); ConfigError on unbounded domains.
double default_theta(const Regularizer& reg);
/// eta_1 = theta / delta with the defaults filled in.
double initial_eta(const Regularizer& reg, const UnderGradParams& params = {});

Trajectory undergrad_run(const ProblemInstance& problem, OracleHandle& oracle,
                         const RunOptions& options, const UnderGradParams& params = {});

/// The UnderGrad loop with eta frozen and no preconditioner update.
Trajectory fixed_lr_accelerated_run(const ProblemInstance& problem, OracleHandle& oracle,
                                    const RunOptions& options, double eta);

/// Mirror-prox with averaged query states and the adaptive step
/// alpha_t = step_scale * gamma_t / sqrt(1 + sum_{s<t} gamma_s^2 ||g_{s+1/2} - g_s||_*^2).
Trajectory unixgrad_run(const ProblemInstance& problem, OracleHandle& oracle,
                        const RunOptions& options, double step_scale);

enum class MirrorProxMode { kBoundedGradient, kLipschitzDeterministic, kLipschitzStochastic };

const char* to_string(MirrorProxMode mode);
MirrorProxMode mirror_prox_mode_from_string(const std::string& name);

/// Constants for the step-size rule. Unset entries fall back to the problem's
/// G, L and the oracle's sigma; a required constant that is still not finite
/// is a ConfigError.
struct MirrorProxConstants {
  std::optional<double> G;
  std::optional<double> L;
  std::optional<double> sigma;
  double constant = 1.0;
};

/// c/sqrt((G^2 + sigma^2) T), c K / L, or c / (sigma sqrt(T)).
double mirror_prox_step(MirrorProxMode mode, double K, long T, double G, double L, double sigma,
                        double constant);

Trajectory mirror_prox_run(const ProblemInstance& problem, OracleHandle& oracle,
                           const RunOptions& options, MirrorProxMode mode,
                           const MirrorProxConstants& constants = {});

Trajectory dual_extrapolation_run(const ProblemInstance& problem, OracleHandle& oracle,
                                  const RunOptions& options, double alpha);

}  // namespace undergrad
