#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "undergrad/geometry.hpp"

namespace undergrad {

/// An objective over a regularized domain with its regularity constants.
/// G and L are measured in the regularizer's norm pair; either may be +inf.
struct ProblemInstance {
  std::string name;
  Regularizer regularizer;
  std::function<double(const PrimalPoint&)> objective;
  std::function<DualVector(const PrimalPoint&)> gradient;
  double G;
  double L;
  double f_min;
  std::optional<PrimalPoint> x_star;

  double gap(const PrimalPoint& x) const { return objective(x) - f_min; }
};

/// <c, x> on the simplex. Geometry must be kEntropicSimplex or kEuclideanSet.
ProblemInstance make_linear_simplex(const Eigen::VectorXd& cost,
                                    Geometry geometry = Geometry::kEntropicSimplex);
/// Cost drawn i.i.d. uniform[0, 1] from a generator seeded with `seed`.
ProblemInstance make_linear_simplex(Eigen::Index d, std::uint64_t seed,
                                    Geometry geometry = Geometry::kEntropicSimplex);
Eigen::VectorXd sample_linear_cost(Eigen::Index d, std::uint64_t seed);

/// (1/2)||x - p||_2^2 on the simplex for a target p in the simplex.
ProblemInstance make_quadratic_simplex(const Eigen::VectorXd& target,
                                       Geometry geometry = Geometry::kEntropicSimplex);
/// Target drawn from the flat Dirichlet distribution.
ProblemInstance make_quadratic_simplex(Eigen::Index d, std::uint64_t seed,
                                       Geometry geometry = Geometry::kEntropicSimplex);

/// -log det(I + M^{1/2} Q M^{1/2}) over {Q >= 0, tr Q <= 1} for a PSD Gram
/// matrix M. The optimum is computed by water-filling on the spectrum of M.
ProblemInstance make_capacity_spectrahedron(const Eigen::MatrixXd& gram);
/// M = H^T H with H an n x n matrix of N(0, 1/n) entries; requires n >= 2.
ProblemInstance make_capacity_spectrahedron(Eigen::Index n, std::uint64_t seed);

/// (1/2)(x - b)^T A (x - b) on R^d; A must be symmetric positive definite.
ProblemInstance make_quadratic_unbounded(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);
/// A = R diag(lambda) R^T with lambda uniform in [1, 10] and R Haar-orthogonal,
/// b ~ N(0, I).
ProblemInstance make_quadratic_unbounded(Eigen::Index d, std::uint64_t seed);

/// Builds a problem from its registry name ("linear_simplex",
/// "quadratic_simplex", "capacity_spectrahedron", "quadratic_unbounded").
ProblemInstance make_problem(const std::string& name, Eigen::Index dim, std::uint64_t seed,
                             Geometry geometry = Geometry::kEntropicSimplex);

}  // namespace undergrad
