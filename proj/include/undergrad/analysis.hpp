#pragma once

#include <cstddef>
#include <vector>

#include "undergrad/algorithms.hpp"
#include "undergrad/geometry.hpp"
#include "undergrad/problems.hpp"

namespace undergrad {

/// 2H sqrt((K + 8(G^2 + sigma^2)) / (K T)), H = sqrt(Omega + K Diam^2).
double bg_bound(double K, double Omega, double Diam, double G, double sigma, double T);

/// 32 sqrt(2) H^2 L / (K T^2) + 8 sqrt(2) H sigma / sqrt(K T).
double lg_bound(double K, double Omega, double Diam, double L, double sigma, double T);

/// Mirror-prox rates with an explicit absolute constant. D_init is the
/// initial Bregman distance; it equals Omega when starting at the prox-center.
///   BG: c sqrt((G^2 + sigma^2) / K * D_init / T)
///   LG: c (L D_init / (K T) + sigma sqrt(D_init / (K T)))
double mp_bg_bound(double K, double D_init, double G, double sigma, double T,
                   double constant = 1.0);
double mp_lg_bound(double K, double D_init, double L, double sigma, double T,
                   double constant = 1.0);

/// sqrt((G^2 + sigma^2)/K) if L = inf, sqrt(L/K) if sigma = 0, sigma/sqrt(K) otherwise.
double shape_factor(double K, double G, double L, double sigma);

struct FitWindow {
  double t_min;
  double t_max;
};

/// [T/100, T].
FitWindow default_window(long T);

struct RateFit {
  double slope;
  double intercept;
  FitWindow window;
  double r_squared;
  std::size_t points;
};

/// Least-squares fit of log(gap) on log(t) over points with t in the window and
/// gap > 0. Throws InsufficientData with fewer than 10 such points.
RateFit rate_slope(const std::vector<double>& t, const std::vector<double>& gap, FitWindow window);
RateFit rate_slope(const Trajectory& traj, FitWindow window);
RateFit rate_slope(const Trajectory& traj);

struct SqrtLemmaResult {
  bool holds;
  /// middle - sqrt(delta^2 + sum a)
  double lower_margin;
  /// 2 sqrt(delta^2 + sum a) - middle
  double upper_margin;
};

/// Checks sqrt(d^2 + S_T) <= d + sum_t a_t / sqrt(d^2 + S_t) <= 2 sqrt(d^2 + S_T)
/// with S_t the prefix sums; terms with a zero denominator contribute zero.
SqrtLemmaResult check_sqrt_lemma(double delta, const std::vector<double>& seq);

/// |F(p, y+) - F(p, y) - F(Q(y), y+) - <y+ - y, Q(y) - p>|.
double check_three_point(const Regularizer& reg, const PrimalPoint& p, const DualVector& y,
                         const DualVector& y_plus);

/// F(p, y) - (K/2) ||Q(y) - p||^2; nonnegative when the bound holds.
double check_fenchel_bound(const Regularizer& reg, const PrimalPoint& p, const DualVector& y);

/// ||Q(y) - prox(center, y - grad h(center))|| in the primal norm.
double check_mirror_prox_link(const Regularizer& reg, const DualVector& y);

/// LHS - RHS of the template inequality at every record, for a deterministic
/// UnderGrad or AEG trajectory recorded with vectors. x_{t+1} is rebuilt as
/// Q(eta_{t+1} y_{t+1}).
std::vector<double> check_template_inequality(const Trajectory& traj, const Regularizer& reg,
                                              const PrimalPoint& x_ref);

struct RegretToRate {
  double gap;
  double bound;
  /// bound - gap; nonnegative when the conversion holds.
  double margin;
};

/// gap(xbar_{T+1/2}) <= (2/T^2) sum_t gamma_t <grad f(xbar_{t+1/2}), x_{t+1/2} - x*> + 1e-9.
RegretToRate check_regret_to_rate(const Trajectory& traj, const ProblemInstance& problem,
                                  const PrimalPoint& x_star);

/// Largest deviation between the recorded xbar_{t+1/2} and a from-scratch
/// weighted average of the recorded x_{s+1/2}.
double check_averaging_identity(const Trajectory& traj);

}  // namespace undergrad
