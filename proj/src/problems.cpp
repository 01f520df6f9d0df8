#include "undergrad/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "undergrad/errors.hpp"
#include "undergrad/symlinalg.hpp"

namespace undergrad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Regularizer simplex_regularizer(Eigen::Index d, Geometry geometry) {
  switch (geometry) {
    case Geometry::kEntropicSimplex: return Regularizer::entropic_simplex(d);
    case Geometry::kEuclideanSet: return Regularizer::euclidean_simplex(d);
    default: break;
  }
  throw InvalidInput(std::string("simplex problems do not support geometry ") +
                     to_string(geometry));
}

Eigen::MatrixXd haar_orthogonal(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (r(k, k) < 0.0) q.col(k) = -q.col(k);
  }
  return q;
}

Eigen::MatrixXd as_matrix(const PrimalPoint& flat, Eigen::Index n) {
  return Eigen::Map<const Eigen::MatrixXd>(flat.data(), n, n);
}

PrimalPoint as_flat(const Eigen::MatrixXd& m) {
  return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

}  // namespace

Eigen::VectorXd sample_linear_cost(Eigen::Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd c(d);
  for (Eigen::Index i = 0; i < d; ++i) c(i) = unit(rng);
  return c;
}

ProblemInstance make_linear_simplex(const Eigen::VectorXd& cost, Geometry geometry) {
  const Eigen::Index d = cost.size();
  if (d < 2) throw InvalidInput("make_linear_simplex: d must be at least 2");
  if (!cost.allFinite()) throw InvalidInput("make_linear_simplex: costs must be finite");
  Regularizer reg = simplex_regularizer(d, geometry);

  Eigen::Index arg = 0;
  const double f_min = cost.minCoeff(&arg);
  PrimalPoint vertex = PrimalPoint::Zero(d);
  vertex(arg) = 1.0;
  const double G = reg.norms().dual(cost);

  return ProblemInstance{
      "linear_simplex",
      reg,
      [cost](const PrimalPoint& x) { return cost.dot(x); },
      [cost](const PrimalPoint&) -> DualVector { return cost; },
      G,
      0.0,
      f_min,
      vertex,
  };
}

ProblemInstance make_linear_simplex(Eigen::Index d, std::uint64_t seed, Geometry geometry) {
  if (d < 2) throw InvalidInput("make_linear_simplex: d must be at least 2");
  return make_linear_simplex(sample_linear_cost(d, seed), geometry);
}

ProblemInstance make_quadratic_simplex(const Eigen::VectorXd& target, Geometry geometry) {
  const Eigen::Index d = target.size();
  if (d < 2) throw InvalidInput("make_quadratic_simplex: d must be at least 2");
  Regularizer reg = simplex_regularizer(d, geometry);
  check_in_domain(reg, target);

  // ||x - p|| is convex in x, so its supremum over the simplex sits at a vertex.
  double G = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    PrimalPoint e = PrimalPoint::Zero(d);
    e(i) = 1.0;
    G = std::max(G, reg.norms().dual(e - target));
  }

  return ProblemInstance{
      "quadratic_simplex",
      reg,
      [target](const PrimalPoint& x) { return 0.5 * (x - target).squaredNorm(); },
      [target](const PrimalPoint& x) -> DualVector { return x - target; },
      G,
      1.0,
      0.0,
      target,
  };
}

ProblemInstance make_quadratic_simplex(Eigen::Index d, std::uint64_t seed, Geometry geometry) {
  if (d < 2) throw InvalidInput("make_quadratic_simplex: d must be at least 2");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  Eigen::VectorXd p(d);
  for (Eigen::Index i = 0; i < d; ++i) p(i) = expo(rng);
  p /= p.sum();
  return make_quadratic_simplex(p, geometry);
}

ProblemInstance make_capacity_spectrahedron(const Eigen::MatrixXd& gram) {
  using linalg::SymMatrix;
  const Eigen::Index n = gram.rows();
  if (n < 1 || gram.cols() != n) {
    throw InvalidInput("make_capacity_spectrahedron: gram matrix must be square and non-empty");
  }
  const SymMatrix m(linalg::symmetrize(gram));
  const linalg::EigDecomposition eig = linalg::sym_eig(m);
  if (!eig.values.allFinite() || !eig.vectors.allFinite()) {
    throw NumericalFailure("make_capacity_spectrahedron: channel spectrum is not finite");
  }
  if (eig.values.minCoeff() < -1e-10 * std::max(1.0, eig.values.cwiseAbs().maxCoeff())) {
    throw InvalidInput("make_capacity_spectrahedron: gram matrix must be positive semidefinite");
  }
  const Eigen::MatrixXd root =
      linalg::matrix_fn(eig, [](double v) { return std::sqrt(std::max(v, 0.0)); }).matrix();

  // Water-filling: p_i = (nu - 1/m_i)^+ with sum p = 1 over the positive modes.
  const Eigen::VectorXd mvals = eig.values.cwiseMax(0.0);
  const double m_max = mvals.maxCoeff();
  Eigen::VectorXd power = Eigen::VectorXd::Zero(n);
  double f_min = 0.0;
  if (m_max > 0.0) {
    std::vector<double> inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (mvals(i) > 0.0) inv.push_back(1.0 / mvals(i));
    }
    // values are sorted descending, so inv is ascending
    double nu = 0.0;
    double acc = 0.0;
    for (std::size_t k = 0; k < inv.size(); ++k) {
      acc += inv[k];
      const double cand = (1.0 + acc) / static_cast<double>(k + 1);
      if (cand > inv[k]) nu = cand;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (mvals(i) > 0.0) power(i) = std::max(0.0, nu - 1.0 / mvals(i));
    }
    power /= power.sum();
    for (Eigen::Index i = 0; i < n; ++i) f_min -= std::log1p(mvals(i) * power(i));
  }
  const Eigen::MatrixXd q_star =
      linalg::symmetrize(eig.vectors * power.asDiagonal() * eig.vectors.transpose());

  auto inner_matrix = [root, n](const PrimalPoint& x) {
    return linalg::SymMatrix(linalg::symmetrize(Eigen::MatrixXd::Identity(n, n) +
                                                root * as_matrix(x, n) * root));
  };

  ProblemInstance out{
      "capacity_spectrahedron",
      Regularizer::von_neumann(n),
      [inner_matrix](const PrimalPoint& x) { return -linalg::sym_logdet(inner_matrix(x)); },
      [inner_matrix, root](const PrimalPoint& x) -> DualVector {
        const Eigen::MatrixXd inv = linalg::sym_logdet_grad(inner_matrix(x)).matrix();
        return as_flat(linalg::symmetrize(-root * inv * root));
      },
      m_max,
      m_max * m_max,
      f_min,
      as_flat(q_star),
  };
  return out;
}

ProblemInstance make_capacity_spectrahedron(Eigen::Index n, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("make_capacity_spectrahedron: n must be at least 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(static_cast<double>(n)));
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) h(i, j) = normal(rng);
  }
  return make_capacity_spectrahedron(h.transpose() * h);
}

ProblemInstance make_quadratic_unbounded(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  const Eigen::Index d = b.size();
  if (d < 1 || a.rows() != d || a.cols() != d) {
    throw InvalidInput("make_quadratic_unbounded: A must be d x d with d = dim(b) >= 1");
  }
  const linalg::SymMatrix sym(a);
  const Eigen::VectorXd lambda = linalg::sym_eig(sym).values;
  if (!(lambda.minCoeff() > 0.0)) {
    throw InvalidInput("make_quadratic_unbounded: A must be positive definite");
  }
  const Eigen::MatrixXd am = sym.matrix();
  return ProblemInstance{
      "quadratic_unbounded",
      Regularizer::euclidean_unbounded(d),
      [am, b](const PrimalPoint& x) {
        const Eigen::VectorXd r = x - b;
        return 0.5 * r.dot(am * r);
      },
      [am, b](const PrimalPoint& x) -> DualVector { return am * (x - b); },
      kInf,
      lambda.maxCoeff(),
      0.0,
      b,
  };
}

ProblemInstance make_quadratic_unbounded(Eigen::Index d, std::uint64_t seed) {
  if (d < 1) throw InvalidInput("make_quadratic_unbounded: d must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> spread(1.0, 10.0);
  Eigen::VectorXd lambda(d);
  for (Eigen::Index i = 0; i < d; ++i) lambda(i) = spread(rng);
  const Eigen::MatrixXd r = haar_orthogonal(rng, d);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd b(d);
  for (Eigen::Index i = 0; i < d; ++i) b(i) = normal(rng);
  const Eigen::MatrixXd a = linalg::symmetrize(r * lambda.asDiagonal() * r.transpose());
  return make_quadratic_unbounded(a, b);
}

ProblemInstance make_problem(const std::string& name, Eigen::Index dim, std::uint64_t seed,
                             Geometry geometry) {
  if (name == "linear_simplex") return make_linear_simplex(dim, seed, geometry);
  if (name == "quadratic_simplex") return make_quadratic_simplex(dim, seed, geometry);
  if (name == "capacity_spectrahedron") return make_capacity_spectrahedron(dim, seed);
  if (name == "quadratic_unbounded") return make_quadratic_unbounded(dim, seed);
  throw ConfigError("unknown problem '" + name + "'");
}

}  // namespace undergrad
