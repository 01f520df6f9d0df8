#pragma once

#include <functional>

#include <Eigen/Dense>

namespace undergrad::linalg {

/// Dense real symmetric matrix. Construction validates finiteness and a
/// symmetry residual max|A_ij - A_ji| <= 1e-12.
class SymMatrix {
 public:
  static constexpr double kSymmetryTolerance = 1e-12;

  explicit SymMatrix(Eigen::MatrixXd entries);

  static SymMatrix identity(Eigen::Index n);
  static SymMatrix diagonal(const Eigen::VectorXd& diag);
  /// Wraps a column-major flattened n*n vector.
  static SymMatrix from_flat(const Eigen::VectorXd& flat, Eigen::Index n);

  Eigen::Index side() const { return entries_.rows(); }
  const Eigen::MatrixXd& matrix() const { return entries_; }
  Eigen::VectorXd flat() const;

 private:
  Eigen::MatrixXd entries_;
};

/// Spectral factors A = V diag(values) V^T with eigenvalues sorted in
/// descending order and each eigenvector's largest-magnitude entry positive.
struct EigDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;

  Eigen::MatrixXd reconstruct() const;
};

/// Cyclic Jacobi eigensolver. Stops once the off-diagonal Frobenius norm drops
/// below 1e-14 * ||A||_F; throws NumericalFailure after 100 sweeps.
EigDecomposition sym_eig(const SymMatrix& a);

/// V f(Lambda) V^T. Throws DomainError if f is not finite at some eigenvalue.
SymMatrix matrix_fn(const SymMatrix& a, const std::function<double(double)>& f);
SymMatrix matrix_fn(const EigDecomposition& eig, const std::function<double(double)>& f);

/// Gradient of log det, i.e. A^{-1}, for symmetric positive definite A.
SymMatrix sym_logdet_grad(const SymMatrix& a);

/// log det A for symmetric positive definite A.
double sym_logdet(const SymMatrix& a);

/// Symmetric part (M + M^T) / 2 of an arbitrary square matrix.
Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m);

}  // namespace undergrad::linalg
