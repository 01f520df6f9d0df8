#include "undergrad/analysis.hpp"

#include <cmath>
#include <limits>

#include "undergrad/errors.hpp"

namespace undergrad {

namespace {

void require_finite_args(std::initializer_list<double> args, const char* who) {
  for (double a : args) {
    if (!std::isfinite(a)) throw InvalidInput(std::string(who) + ": arguments must be finite");
  }
}

void require_positive(double K, double T, const char* who) {
  if (!(K > 0.0)) throw InvalidInput(std::string(who) + ": K must be positive");
  if (!(T >= 1.0)) throw InvalidInput(std::string(who) + ": T must be at least 1");
}

double h_const(double K, double Omega, double Diam) { return std::sqrt(Omega + K * Diam * Diam); }

void require_vectors(const Trajectory& traj, const char* who) {
  if (!traj.has_vectors || traj.records.empty() ||
      traj.records.size() != static_cast<std::size_t>(traj.T)) {
    throw InvalidInput(std::string(who) + ": trajectory must record vectors at every iteration");
  }
}

}  // namespace

double bg_bound(double K, double Omega, double Diam, double G, double sigma, double T) {
  require_finite_args({K, Omega, Diam, G, sigma, T}, "bg_bound");
  require_positive(K, T, "bg_bound");
  const double H = h_const(K, Omega, Diam);
  return 2.0 * H * std::sqrt((K + 8.0 * (G * G + sigma * sigma)) / (K * T));
}

double lg_bound(double K, double Omega, double Diam, double L, double sigma, double T) {
  require_finite_args({K, Omega, Diam, L, sigma, T}, "lg_bound");
  require_positive(K, T, "lg_bound");
  const double H = h_const(K, Omega, Diam);
  const double r2 = std::sqrt(2.0);
  return 32.0 * r2 * H * H * L / (K * T * T) + 8.0 * r2 * H * sigma / std::sqrt(K * T);
}

double mp_bg_bound(double K, double D_init, double G, double sigma, double T, double constant) {
  require_finite_args({K, D_init, G, sigma, T, constant}, "mp_bg_bound");
  require_positive(K, T, "mp_bg_bound");
  return constant * std::sqrt((G * G + sigma * sigma) / K * D_init / T);
}

double mp_lg_bound(double K, double D_init, double L, double sigma, double T, double constant) {
  require_finite_args({K, D_init, L, sigma, T, constant}, "mp_lg_bound");
  require_positive(K, T, "mp_lg_bound");
  return constant * (L * D_init / (K * T) + sigma * std::sqrt(D_init / (K * T)));
}

double shape_factor(double K, double G, double L, double sigma) {
  if (!(K > 0.0)) throw InvalidInput("shape_factor: K must be positive");
  if (std::isinf(L)) return std::sqrt((G * G + sigma * sigma) / K);
  if (sigma == 0.0) return std::sqrt(L / K);
  return sigma / std::sqrt(K);
}

FitWindow default_window(long T) {
  return {static_cast<double>(T) / 100.0, static_cast<double>(T)};
}

RateFit rate_slope(const std::vector<double>& t, const std::vector<double>& gap, FitWindow window) {
  if (t.size() != gap.size()) throw InvalidInput("rate_slope: t and gap differ in length");
  if (!(window.t_min < window.t_max)) throw InvalidInput("rate_slope: empty window");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= window.t_min && t[i] <= window.t_max && gap[i] > 0.0 && std::isfinite(gap[i])) {
      lx.push_back(std::log(t[i]));
      ly.push_back(std::log(gap[i]));
    }
  }
  if (lx.size() < 10) {
    throw InsufficientData("rate_slope: fewer than 10 positive-gap checkpoints in window");
  }
  const double n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw InsufficientData("rate_slope: all checkpoints share one t");
  const double slope = sxy / sxx;
  // a flat series (up to rounding in the mean) is fit exactly
  const double flat_tol = 1e-24 * n * (1.0 + my * my);
  const double r2 = syy <= flat_tol ? 1.0 : (sxy * sxy) / (sxx * syy);
  return {slope, my - slope * mx, window, r2, lx.size()};
}

RateFit rate_slope(const Trajectory& traj, FitWindow window) {
  std::vector<double> t, gap;
  t.reserve(traj.records.size());
  gap.reserve(traj.records.size());
  for (const auto& r : traj.records) {
    t.push_back(static_cast<double>(r.t));
    gap.push_back(r.gap);
  }
  return rate_slope(t, gap, window);
}

RateFit rate_slope(const Trajectory& traj) { return rate_slope(traj, default_window(traj.T)); }

SqrtLemmaResult check_sqrt_lemma(double delta, const std::vector<double>& seq) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw InvalidInput("check_sqrt_lemma: delta must be finite and nonnegative");
  }
  const double d2 = delta * delta;
  double prefix = 0.0;
  double middle = delta;
  for (double a : seq) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw InvalidInput("check_sqrt_lemma: entries must be finite and nonnegative");
    }
    prefix += a;
    const double denom = std::sqrt(d2 + prefix);
    if (denom > 0.0) middle += a / denom;
  }
  const double outer = std::sqrt(d2 + prefix);
  const double lower = middle - outer;
  const double upper = 2.0 * outer - middle;
  const double tol = 1e-12 * std::max(1.0, outer);
  return {lower >= -tol && upper >= -tol, lower, upper};
}

double check_three_point(const Regularizer& reg, const PrimalPoint& p, const DualVector& y,
                         const DualVector& y_plus) {
  const PrimalPoint q = mirror_map(reg, y);
  const double lhs = fenchel_coupling(reg, p, y_plus);
  const double rhs =
      fenchel_coupling(reg, p, y) + fenchel_coupling(reg, q, y_plus) + inner(y_plus - y, q - p);
  return std::abs(lhs - rhs);
}

double check_fenchel_bound(const Regularizer& reg, const PrimalPoint& p, const DualVector& y) {
  const double dist = reg.norms().primal(mirror_map(reg, y) - p);
  return fenchel_coupling(reg, p, y) - 0.5 * reg.K() * dist * dist;
}

double check_mirror_prox_link(const Regularizer& reg, const DualVector& y) {
  const PrimalPoint& center = reg.prox_center();
  const PrimalPoint via_prox = prox_map(reg, center, y - reg_grad(reg, center));
  return reg.norms().primal(mirror_map(reg, y) - via_prox);
}

std::vector<double> check_template_inequality(const Trajectory& traj, const Regularizer& reg,
                                              const PrimalPoint& x_ref) {
  if (traj.sigma != 0.0) {
    throw InvalidInput("check_template_inequality: only deterministic runs can be checked");
  }
  if (traj.algorithm != "UnderGrad" && traj.algorithm != "AEG") {
    throw InvalidInput("check_template_inequality: needs an UnderGrad-type trajectory");
  }
  require_vectors(traj, "check_template_inequality");

  const double K = reg.K();
  const NormPair& norms = reg.norms();
  const auto& recs = traj.records;
  DualVector y = DualVector::Zero(reg.dim());
  double lhs = 0.0;
  double coupling = 0.0;
  double penalty = 0.0;
  std::vector<double> slack;
  slack.reserve(recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const TrajectoryRecord& r = recs[i];
    y -= r.gamma * r.g_half;
    const double eta_next = i + 1 < recs.size() ? recs[i + 1].eta : traj.final_eta;
    const PrimalPoint x_next = mirror_map(reg, eta_next * y);

    lhs += r.gamma * inner(r.g_half, r.x_half - x_ref);
    coupling += r.gamma * inner(r.g_half - r.g, r.x_half - x_next);
    const double a = norms.primal(x_next - r.x_half);
    const double b = norms.primal(r.x_half - r.x);
    penalty += K / (2.0 * r.eta) * (a * a + b * b);

    const double rhs = reg.Omega() / eta_next + coupling - penalty;
    slack.push_back(lhs - rhs);
  }
  return slack;
}

RegretToRate check_regret_to_rate(const Trajectory& traj, const ProblemInstance& problem,
                                  const PrimalPoint& x_star) {
  if (traj.sigma != 0.0) {
    throw InvalidInput("check_regret_to_rate: only deterministic runs can be checked");
  }
  require_vectors(traj, "check_regret_to_rate");
  double regret = 0.0;
  for (const auto& r : traj.records) {
    regret += r.gamma * inner(problem.gradient(r.xbar_half), r.x_half - x_star);
  }
  const double T = static_cast<double>(traj.T);
  const double gap = problem.gap(traj.output);
  const double bound = 2.0 / (T * T) * regret + 1e-9;
  return {gap, bound, bound - gap};
}

double check_averaging_identity(const Trajectory& traj) {
  require_vectors(traj, "check_averaging_identity");
  double worst = 0.0;
  PrimalPoint w = PrimalPoint::Zero(traj.records.front().x_half.size());
  double weight = 0.0;
  for (const auto& r : traj.records) {
    w += r.gamma * r.x_half;
    weight += r.gamma;
    worst = std::max(worst, (w / weight - r.xbar_half).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace undergrad
