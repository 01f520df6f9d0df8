#include "undergrad/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "undergrad/errors.hpp"
#include "undergrad/symlinalg.hpp"

namespace undergrad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Smallest admissible entry of an entropic prox base point.
constexpr double kProxFloor = 1e-300;
constexpr double kSimplexTolerance = 1e-12;
constexpr double kEigenvalueFloor = -1e-10;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void require_finite(const Eigen::VectorXd& v, const char* what) {
  if (!v.allFinite()) throw InvalidInput(std::string(what) + ": non-finite input");
}

void require_size(const Regularizer& reg, const Eigen::VectorXd& v, const char* what) {
  if (v.size() != reg.dim()) {
    throw InvalidInput(std::string(what) + ": expected dimension " + std::to_string(reg.dim()) +
                       ", got " + std::to_string(v.size()));
  }
}

linalg::EigDecomposition eig_of_flat(const Eigen::VectorXd& flat, Eigen::Index n) {
  return linalg::sym_eig(
      linalg::SymMatrix(linalg::symmetrize(Eigen::Map<const Eigen::MatrixXd>(flat.data(), n, n))));
}

Eigen::VectorXd flatten(const Eigen::MatrixXd& m) {
  return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

Eigen::VectorXd spectral_map(const linalg::EigDecomposition& eig,
                             const Eigen::VectorXd& mapped_values) {
  return flatten(linalg::symmetrize(eig.vectors * mapped_values.asDiagonal() *
                                    eig.vectors.transpose()));
}

double log_sum_exp(const Eigen::VectorXd& y) {
  const double m = y.maxCoeff();
  return m + std::log((y.array() - m).exp().sum());
}

Eigen::VectorXd softmax(const Eigen::VectorXd& y) {
  Eigen::VectorXd e = (y.array() - y.maxCoeff()).exp();
  return e / e.sum();
}

// Mirror weights exp(l_i) / (1 + sum_j exp(l_j)) for the von Neumann map,
// evaluated with a shift by max(0, max l).
Eigen::VectorXd vn_weights(const Eigen::VectorXd& lambda) {
  const double m = std::max(0.0, lambda.maxCoeff());
  Eigen::VectorXd e = (lambda.array() - m).exp();
  return e / (std::exp(-m) + e.sum());
}

void check_entropic_prox_domain(const PrimalPoint& x, const char* what) {
  if (x.minCoeff() < kProxFloor) {
    throw DomainError(std::string(what) + ": base point has an entry below 1e-300 (outside the prox-domain)");
  }
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kNumericalFailure: return "numerical-failure";
    case ErrorKind::kConfig: return "config";
    case ErrorKind::kInsufficientData: return "insufficient-data";
  }
  return "unknown";
}

const char* to_string(Geometry g) {
  switch (g) {
    case Geometry::kEntropicSimplex: return "entropic";
    case Geometry::kVonNeumannSpectrahedron: return "von_neumann";
    case Geometry::kEuclideanSet: return "euclidean_set";
    case Geometry::kEuclideanUnbounded: return "euclidean_unbounded";
  }
  return "unknown";
}

const char* to_string(NormKind n) {
  switch (n) {
    case NormKind::kL1LInf: return "L1/Linf";
    case NormKind::kL2L2: return "L2/L2";
    case NormKind::kNuclearSpectral: return "nuclear/spectral";
  }
  return "unknown";
}

Geometry geometry_from_string(const std::string& name) {
  if (name == "entropic") return Geometry::kEntropicSimplex;
  if (name == "von_neumann") return Geometry::kVonNeumannSpectrahedron;
  if (name == "euclidean_set") return Geometry::kEuclideanSet;
  if (name == "euclidean_unbounded") return Geometry::kEuclideanUnbounded;
  throw ConfigError("unknown geometry '" + name + "'");
}

double NormPair::primal(const PrimalPoint& x) const {
  switch (kind_) {
    case NormKind::kL1LInf: return x.lpNorm<1>();
    case NormKind::kL2L2: return x.norm();
    case NormKind::kNuclearSpectral: return eig_of_flat(x, side_).values.cwiseAbs().sum();
  }
  return 0.0;
}

double NormPair::dual(const DualVector& v) const {
  switch (kind_) {
    case NormKind::kL1LInf: return v.lpNorm<Eigen::Infinity>();
    case NormKind::kL2L2: return v.norm();
    case NormKind::kNuclearSpectral: return eig_of_flat(v, side_).values.cwiseAbs().maxCoeff();
  }
  return 0.0;
}

Regularizer::Regularizer(Geometry g, Eigen::Index dim, Eigen::Index side, double K, double omega,
                         double diam, NormKind norm, PrimalPoint center)
    : geometry_(g),
      dim_(dim),
      side_(side),
      K_(K),
      omega_(omega),
      diam_(diam),
      norms_(norm, side),
      prox_center_(std::move(center)) {}

Regularizer Regularizer::entropic_simplex(Eigen::Index d) {
  if (d < 1) throw InvalidInput("entropic_simplex: dimension must be positive");
  return Regularizer(Geometry::kEntropicSimplex, d, d, 1.0, std::log(static_cast<double>(d)), 1.0,
                     NormKind::kL1LInf, Eigen::VectorXd::Constant(d, 1.0 / static_cast<double>(d)));
}

Regularizer Regularizer::von_neumann(Eigen::Index n) {
  if (n < 1) throw InvalidInput("von_neumann: side must be positive");
  const Eigen::MatrixXd center =
      Eigen::MatrixXd::Identity(n, n) / static_cast<double>(n + 1);
  return Regularizer(Geometry::kVonNeumannSpectrahedron, n * n, n, 1.0,
                     std::log(static_cast<double>(n)), 1.0, NormKind::kNuclearSpectral,
                     flatten(center));
}

Regularizer Regularizer::euclidean_simplex(Eigen::Index d) {
  if (d < 1) throw InvalidInput("euclidean_simplex: dimension must be positive");
  const double dd = static_cast<double>(d);
  return Regularizer(Geometry::kEuclideanSet, d, d, 1.0, 0.5 * (1.0 - 1.0 / dd), std::sqrt(2.0),
                     NormKind::kL2L2, Eigen::VectorXd::Constant(d, 1.0 / dd));
}

Regularizer Regularizer::euclidean_unbounded(Eigen::Index d) {
  if (d < 1) throw InvalidInput("euclidean_unbounded: dimension must be positive");
  return Regularizer(Geometry::kEuclideanUnbounded, d, d, 1.0, kInf, kInf, NormKind::kL2L2,
                     Eigen::VectorXd::Zero(d));
}

bool Regularizer::is_legendre() const {
  return geometry_ == Geometry::kEntropicSimplex ||
         geometry_ == Geometry::kVonNeumannSpectrahedron;
}

bool Regularizer::bounded() const { return std::isfinite(omega_) && std::isfinite(diam_); }

double Regularizer::H() const { return std::sqrt(omega_ + K_ * diam_ * diam_); }

double Regularizer::value(const PrimalPoint& x) const {
  check_in_domain(*this, x);
  switch (geometry_) {
    case Geometry::kEntropicSimplex: {
      double s = 0.0;
      for (Eigen::Index i = 0; i < x.size(); ++i) s += xlogx(x(i));
      return s;
    }
    case Geometry::kVonNeumannSpectrahedron: {
      const auto eig = eig_of_flat(x, side_);
      double s = 0.0;
      for (Eigen::Index i = 0; i < eig.values.size(); ++i) s += xlogx(std::max(0.0, eig.values(i)));
      const double slack = std::max(0.0, 1.0 - eig.values.sum());
      return s + xlogx(slack);
    }
    case Geometry::kEuclideanSet:
    case Geometry::kEuclideanUnbounded:
      return 0.5 * x.squaredNorm();
  }
  return 0.0;
}

double inner(const DualVector& y, const PrimalPoint& x) { return y.dot(x); }

bool in_domain(const Regularizer& reg, const PrimalPoint& x) {
  if (x.size() != reg.dim() || !x.allFinite()) return false;
  switch (reg.geometry()) {
    case Geometry::kEntropicSimplex:
    case Geometry::kEuclideanSet:
      return x.minCoeff() >= 0.0 && std::abs(x.sum() - 1.0) <= kSimplexTolerance;
    case Geometry::kVonNeumannSpectrahedron: {
      const Eigen::Index n = reg.side();
      const Eigen::Map<const Eigen::MatrixXd> m(x.data(), n, n);
      if ((m - m.transpose()).cwiseAbs().maxCoeff() > linalg::SymMatrix::kSymmetryTolerance) {
        return false;
      }
      if (m.trace() > 1.0 + kSimplexTolerance) return false;
      return eig_of_flat(x, n).values.minCoeff() >= kEigenvalueFloor;
    }
    case Geometry::kEuclideanUnbounded:
      return true;
  }
  return false;
}

void check_in_domain(const Regularizer& reg, const PrimalPoint& x) {
  if (!in_domain(reg, x)) {
    throw DomainError(std::string("point outside the ") + to_string(reg.geometry()) + " domain");
  }
}

Eigen::VectorXd project_simplex(const Eigen::VectorXd& v) {
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double running = 0.0;
  double tau = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    running += u[k];
    const double candidate = (running - 1.0) / static_cast<double>(k + 1);
    if (u[k] - candidate > 0.0) tau = candidate;
  }
  return (v.array() - tau).max(0.0);
}

PrimalPoint mirror_map(const Regularizer& reg, const DualVector& y) {
  require_size(reg, y, "mirror_map");
  require_finite(y, "mirror_map");
  switch (reg.geometry()) {
    case Geometry::kEntropicSimplex:
      return softmax(y);
    case Geometry::kVonNeumannSpectrahedron: {
      const auto eig = eig_of_flat(y, reg.side());
      return spectral_map(eig, vn_weights(eig.values));
    }
    case Geometry::kEuclideanSet:
      return project_simplex(y);
    case Geometry::kEuclideanUnbounded:
      return y;
  }
  return y;
}

DualVector reg_grad(const Regularizer& reg, const PrimalPoint& x) {
  require_size(reg, x, "reg_grad");
  check_in_domain(reg, x);
  switch (reg.geometry()) {
    case Geometry::kEntropicSimplex:
      check_entropic_prox_domain(x, "reg_grad");
      return (1.0 + x.array().log()).matrix();
    case Geometry::kVonNeumannSpectrahedron: {
      const auto eig = eig_of_flat(x, reg.side());
      const double slack = 1.0 - eig.values.sum();
      if (eig.values.minCoeff() <= 0.0 || slack <= 0.0) {
        throw DomainError("reg_grad: matrix is not in the von Neumann prox-domain");
      }
      return spectral_map(eig, (eig.values.array().log() - std::log(slack)).matrix());
    }
    case Geometry::kEuclideanSet:
    case Geometry::kEuclideanUnbounded:
      return x;
  }
  return x;
}

PrimalPoint prox_map(const Regularizer& reg, const PrimalPoint& x, const DualVector& v) {
  require_size(reg, x, "prox_map");
  require_size(reg, v, "prox_map");
  require_finite(v, "prox_map");
  check_in_domain(reg, x);
  switch (reg.geometry()) {
    case Geometry::kEntropicSimplex:
      // multiplicative weights x_i exp(v_i), renormalized in log space
      check_entropic_prox_domain(x, "prox_map");
      return softmax((x.array().log() + v.array()).matrix());
    case Geometry::kVonNeumannSpectrahedron:
      return mirror_map(reg, reg_grad(reg, x) + v);
    case Geometry::kEuclideanSet:
      return project_simplex(x + v);
    case Geometry::kEuclideanUnbounded:
      return x + v;
  }
  return x;
}

double bregman_div(const Regularizer& reg, const PrimalPoint& p, const PrimalPoint& x) {
  require_size(reg, p, "bregman_div");
  check_in_domain(reg, p);
  if (reg.geometry() == Geometry::kEntropicSimplex) {
    check_in_domain(reg, x);
    check_entropic_prox_domain(x, "bregman_div");
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (p(i) > 0.0) s += p(i) * (std::log(p(i)) - std::log(x(i)));
    }
    return s - (p.sum() - x.sum());
  }
  const DualVector g = reg_grad(reg, x);
  return reg.value(p) - reg.value(x) - inner(g, p - x);
}

double conjugate_value(const Regularizer& reg, const DualVector& y) {
  require_size(reg, y, "conjugate_value");
  require_finite(y, "conjugate_value");
  switch (reg.geometry()) {
    case Geometry::kEntropicSimplex:
      return log_sum_exp(y);
    case Geometry::kVonNeumannSpectrahedron: {
      // log(1 + sum_i exp(lambda_i))
      const auto eig = eig_of_flat(y, reg.side());
      const double m = std::max(0.0, eig.values.maxCoeff());
      return m + std::log(std::exp(-m) + (eig.values.array() - m).exp().sum());
    }
    case Geometry::kEuclideanSet: {
      const PrimalPoint x = project_simplex(y);
      return inner(y, x) - 0.5 * x.squaredNorm();
    }
    case Geometry::kEuclideanUnbounded:
      return 0.5 * y.squaredNorm();
  }
  return 0.0;
}

double fenchel_coupling(const Regularizer& reg, const PrimalPoint& p, const DualVector& y) {
  require_size(reg, p, "fenchel_coupling");
  return reg.value(p) + conjugate_value(reg, y) - inner(y, p);
}

DualVector prox_step_dual(const Regularizer& reg, const DualVector& z, const DualVector& v) {
  if (reg.is_legendre()) return z + v;
  return mirror_map(reg, z) + v;
}

}  // namespace undergrad
