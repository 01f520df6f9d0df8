#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

#include "undergrad/errors.hpp"
#include "undergrad/symlinalg.hpp"

using namespace undergrad;
using namespace undergrad::linalg;

namespace {

Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = normal(rng);
  return 0.5 * (m + m.transpose());
}

}  // namespace

TEST_CASE("SymMatrix validates its input") {
  Eigen::MatrixXd bad(2, 2);
  bad << 1.0, 2.0, 2.1, 1.0;
  CHECK_THROWS_AS(SymMatrix{bad}, InvalidInput);
  CHECK_THROWS_AS(SymMatrix{Eigen::MatrixXd(2, 3)}, InvalidInput);
  CHECK_THROWS_AS(SymMatrix{Eigen::MatrixXd(0, 0)}, InvalidInput);
  Eigen::MatrixXd nan = Eigen::MatrixXd::Identity(2, 2);
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(SymMatrix{nan}, InvalidInput);
  CHECK(SymMatrix::identity(3).matrix().isIdentity());
}

TEST_CASE("sym_eig of a diagonal matrix sorts descending") {
  Eigen::VectorXd d(3);
  d << 1.0, 3.0, 2.0;
  const EigDecomposition e = sym_eig(SymMatrix::diagonal(d));
  CHECK(e.values(0) == doctest::Approx(3.0));
  CHECK(e.values(1) == doctest::Approx(2.0));
  CHECK(e.values(2) == doctest::Approx(1.0));
}

TEST_CASE("sym_eig on the 2x2 matrix [[2,1],[1,2]]") {
  Eigen::MatrixXd a(2, 2);
  a << 2.0, 1.0, 1.0, 2.0;
  const EigDecomposition e = sym_eig(SymMatrix(a));
  CHECK(e.values(0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(e.values(1) == doctest::Approx(1.0).epsilon(1e-14));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(e.vectors(0, 0) == doctest::Approx(r));
  CHECK(e.vectors(1, 0) == doctest::Approx(r));
}

TEST_CASE("sym_eig agrees with Eigen's self-adjoint solver") {
  std::mt19937_64 rng(11);
  for (Eigen::Index n : {1, 2, 3, 5, 8, 16, 32}) {
    const Eigen::MatrixXd a = random_symmetric(rng, n);
    const EigDecomposition e = sym_eig(SymMatrix(a));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);
    Eigen::VectorXd expected = ref.eigenvalues().reverse();
    CHECK((e.values - expected).cwiseAbs().maxCoeff() < 1e-11);
    CHECK((e.reconstruct() - a).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((e.vectors.transpose() * e.vectors - Eigen::MatrixXd::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index arg = 0;
      e.vectors.col(k).cwiseAbs().maxCoeff(&arg);
      CHECK(e.vectors(arg, k) > 0.0);
    }
  }
}

TEST_CASE("sym_eig handles repeated eigenvalues") {
  const EigDecomposition e = sym_eig(SymMatrix::identity(6));
  CHECK((e.values.array() - 1.0).abs().maxCoeff() < 1e-15);
  CHECK((e.reconstruct() - Eigen::MatrixXd::Identity(6, 6)).norm() < 1e-14);
}

TEST_CASE("matrix_fn reproduces exp through Eigen's solver") {
  std::mt19937_64 rng(5);
  const Eigen::MatrixXd a = random_symmetric(rng, 6);
  const SymMatrix ex = matrix_fn(SymMatrix(a), [](double v) { return std::exp(v); });
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);
  const Eigen::MatrixXd expected = ref.eigenvectors() *
                                   ref.eigenvalues().array().exp().matrix().asDiagonal() *
                                   ref.eigenvectors().transpose();
  CHECK((ex.matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("matrix_fn rejects non-finite values") {
  Eigen::VectorXd d(2);
  d << -1.0, 1.0;
  CHECK_THROWS_AS(matrix_fn(SymMatrix::diagonal(d), [](double v) { return std::log(v); }),
                  DomainError);
}

TEST_CASE("log det and its gradient") {
  std::mt19937_64 rng(9);
  const Eigen::MatrixXd b = random_symmetric(rng, 5);
  const Eigen::MatrixXd a = b * b + Eigen::MatrixXd::Identity(5, 5);
  const Eigen::LLT<Eigen::MatrixXd> llt(a);
  const double expected = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  CHECK(sym_logdet(SymMatrix(a)) == doctest::Approx(expected).epsilon(1e-13));
  CHECK((sym_logdet_grad(SymMatrix(a)).matrix() - a.inverse()).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::VectorXd d(2);
  d << 1.0, -0.5;
  CHECK_THROWS_AS(sym_logdet(SymMatrix::diagonal(d)), DomainError);
  CHECK_THROWS_AS(sym_logdet_grad(SymMatrix::diagonal(d)), DomainError);
}

TEST_CASE("from_flat uses column-major order") {
  Eigen::VectorXd flat(4);
  flat << 1.0, 2.0, 2.0, 5.0;
  const SymMatrix m = SymMatrix::from_flat(flat, 2);
  CHECK(m.matrix()(1, 0) == 2.0);
  CHECK(m.matrix()(1, 1) == 5.0);
  CHECK(m.flat() == flat);
  CHECK_THROWS_AS(SymMatrix::from_flat(flat, 3), InvalidInput);
}
