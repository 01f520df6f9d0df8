#include "undergrad/symlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "undergrad/errors.hpp"

namespace undergrad::linalg {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-14;

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

// Applies the rotation J(p, q, c, s) as A <- J^T A J and V <- V J.
void rotate(Eigen::MatrixXd& a, Eigen::MatrixXd& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  // the annihilated pair is set exactly
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SymMatrix::SymMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw InvalidInput("SymMatrix: expected a non-empty square matrix");
  }
  if (!entries_.allFinite()) throw InvalidInput("SymMatrix: non-finite entry");
  const double residual = (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
  if (residual > kSymmetryTolerance) {
    throw InvalidInput("SymMatrix: symmetry residual " + std::to_string(residual));
  }
}

SymMatrix SymMatrix::identity(Eigen::Index n) {
  return SymMatrix(Eigen::MatrixXd::Identity(n, n));
}

SymMatrix SymMatrix::diagonal(const Eigen::VectorXd& diag) {
  return SymMatrix(Eigen::MatrixXd(diag.asDiagonal()));
}

SymMatrix SymMatrix::from_flat(const Eigen::VectorXd& flat, Eigen::Index n) {
  if (flat.size() != n * n) throw InvalidInput("SymMatrix: flat size is not n*n");
  return SymMatrix(Eigen::Map<const Eigen::MatrixXd>(flat.data(), n, n));
}

Eigen::VectorXd SymMatrix::flat() const {
  return Eigen::Map<const Eigen::VectorXd>(entries_.data(), entries_.size());
}

Eigen::MatrixXd EigDecomposition::reconstruct() const {
  return vectors * values.asDiagonal() * vectors.transpose();
}

EigDecomposition sym_eig(const SymMatrix& input) {
  Eigen::MatrixXd a = input.matrix();
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  const double scale = a.norm();
  bool converged = off_diagonal_norm(a) <= kOffDiagonalTolerance * scale;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    converged = off_diagonal_norm(a) <= kOffDiagonalTolerance * scale;
  }
  if (!converged) {
    throw NumericalFailure("sym_eig: Jacobi iteration did not converge in 100 sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

  EigDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src);
    Eigen::VectorXd col = v.col(src);
    Eigen::Index pivot = 0;
    col.cwiseAbs().maxCoeff(&pivot);
    if (col(pivot) < 0.0) col = -col;
    out.vectors.col(k) = col;
  }
  return out;
}

SymMatrix matrix_fn(const EigDecomposition& eig, const std::function<double(double)>& f) {
  Eigen::VectorXd mapped(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    mapped(i) = f(eig.values(i));
    if (!std::isfinite(mapped(i))) {
      throw DomainError("matrix_fn: function undefined at eigenvalue " +
                        std::to_string(eig.values(i)));
    }
  }
  return SymMatrix(symmetrize(eig.vectors * mapped.asDiagonal() * eig.vectors.transpose()));
}

SymMatrix matrix_fn(const SymMatrix& a, const std::function<double(double)>& f) {
  return matrix_fn(sym_eig(a), f);
}

SymMatrix sym_logdet_grad(const SymMatrix& a) {
  const EigDecomposition eig = sym_eig(a);
  if (eig.values.minCoeff() <= 0.0) {
    throw DomainError("sym_logdet_grad: matrix is not positive definite");
  }
  return matrix_fn(eig, [](double x) { return 1.0 / x; });
}

double sym_logdet(const SymMatrix& a) {
  const EigDecomposition eig = sym_eig(a);
  if (eig.values.minCoeff() <= 0.0) {
    throw DomainError("sym_logdet: matrix is not positive definite");
  }
  return eig.values.array().log().sum();
}

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m) {
  return 0.5 * (m + m.transpose());
}

}  // namespace undergrad::linalg
