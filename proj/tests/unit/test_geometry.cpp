#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "undergrad/errors.hpp"
#include "undergrad/geometry.hpp"

using namespace undergrad;

namespace {

Eigen::VectorXd normal_vec(std::mt19937_64& rng, Eigen::Index n, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

Eigen::VectorXd sym_flat(std::mt19937_64& rng, Eigen::Index n, double scale = 1.0) {
  Eigen::MatrixXd m = Eigen::Map<const Eigen::MatrixXd>(normal_vec(rng, n * n, scale).data(), n, n);
  m = (0.5 * (m + m.transpose())).eval();
  return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

Eigen::MatrixXd as_mat(const Eigen::VectorXd& flat, Eigen::Index n) {
  return Eigen::Map<const Eigen::MatrixXd>(flat.data(), n, n);
}

// Threshold found by bisection: sum max(v - tau, 0) = 1.
Eigen::VectorXd bisection_projection(const Eigen::VectorXd& v) {
  double lo = v.minCoeff() - 1.0, hi = v.maxCoeff();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((v.array() - mid).max(0.0).sum() > 1.0) lo = mid; else hi = mid;
  }
  return (v.array() - 0.5 * (lo + hi)).max(0.0);
}

std::vector<Regularizer> all_geometries() {
  return {Regularizer::entropic_simplex(5), Regularizer::von_neumann(3),
          Regularizer::euclidean_simplex(5), Regularizer::euclidean_unbounded(5)};
}

Eigen::VectorXd random_dual(std::mt19937_64& rng, const Regularizer& reg, double scale) {
  return reg.geometry() == Geometry::kVonNeumannSpectrahedron ? sym_flat(rng, reg.side(), scale)
                                                              : normal_vec(rng, reg.dim(), scale);
}

}  // namespace

TEST_CASE("regularizer constants") {
  const Regularizer e = Regularizer::entropic_simplex(100);
  CHECK(e.K() == 1.0);
  CHECK(e.Omega() == doctest::Approx(std::log(100.0)));
  CHECK(e.Diam() == 1.0);
  CHECK(e.norms().kind() == NormKind::kL1LInf);
  CHECK(e.H() == doctest::Approx(std::sqrt(std::log(100.0) + 1.0)));

  const Regularizer v = Regularizer::von_neumann(4);
  CHECK(v.dim() == 16);
  CHECK(v.side() == 4);
  CHECK(v.Omega() == doctest::Approx(std::log(4.0)));
  CHECK(v.Diam() == 1.0);
  CHECK(v.is_legendre());

  const Regularizer s = Regularizer::euclidean_simplex(4);
  CHECK(s.Omega() == doctest::Approx(0.5 * (1.0 - 0.25)));
  CHECK(s.Diam() == doctest::Approx(std::sqrt(2.0)));
  CHECK_FALSE(s.is_legendre());

  const Regularizer u = Regularizer::euclidean_unbounded(3);
  CHECK_FALSE(u.bounded());
  CHECK(std::isinf(u.Omega()));
  CHECK(u.prox_center().isZero());

  CHECK_THROWS_AS(Regularizer::entropic_simplex(0), InvalidInput);
  CHECK_THROWS_AS(geometry_from_string("hyperbolic"), ConfigError);
  CHECK(geometry_from_string("von_neumann") == Geometry::kVonNeumannSpectrahedron);
}

TEST_CASE("prox-center is in the domain and stationary for h") {
  for (const Regularizer& reg : all_geometries()) {
    CAPTURE(to_string(reg.geometry()));
    const PrimalPoint& c = reg.prox_center();
    CHECK(in_domain(reg, c));
    const DualVector g = reg_grad(reg, c);
    if (reg.geometry() == Geometry::kVonNeumannSpectrahedron ||
        reg.geometry() == Geometry::kEuclideanUnbounded) {
      CHECK(g.cwiseAbs().maxCoeff() < 1e-14);
    } else {
      // normal to the simplex: a constant vector
      CHECK(g.maxCoeff() - g.minCoeff() < 1e-14);
    }
    CHECK((mirror_map(reg, DualVector::Zero(reg.dim())) - c).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("entropic mirror map is the softmax") {
  Eigen::VectorXd y(3);
  y << 0.0, std::log(2.0), std::log(3.0);
  const PrimalPoint x = mirror_map(Regularizer::entropic_simplex(3), y);
  CHECK(x(0) == doctest::Approx(1.0 / 6.0));
  CHECK(x(1) == doctest::Approx(2.0 / 6.0));
  CHECK(x(2) == doctest::Approx(3.0 / 6.0));

  // a large shift must not overflow
  Eigen::VectorXd big(2);
  big << 1000.0, 1000.0;
  const PrimalPoint half = mirror_map(Regularizer::entropic_simplex(2), big);
  CHECK(half(0) == doctest::Approx(0.5));
}

TEST_CASE("von Neumann mirror map matches exp(Y)/(1 + tr exp(Y))") {
  std::mt19937_64 rng(3);
  for (Eigen::Index n : {1, 2, 4, 6}) {
    const Regularizer reg = Regularizer::von_neumann(n);
    const Eigen::VectorXd y = sym_flat(rng, n, 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(as_mat(y, n));
    const Eigen::MatrixXd ex = es.eigenvectors() *
                               es.eigenvalues().array().exp().matrix().asDiagonal() *
                               es.eigenvectors().transpose();
    const Eigen::MatrixXd expected = ex / (1.0 + ex.trace());
    const Eigen::MatrixXd got = as_mat(mirror_map(reg, y), n);
    CHECK((got - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  // scalar case: the logistic sigmoid
  Eigen::VectorXd y1(1);
  y1 << 0.7;
  CHECK(mirror_map(Regularizer::von_neumann(1), y1)(0) ==
        doctest::Approx(1.0 / (1.0 + std::exp(-0.7))));
}

TEST_CASE("simplex projection agrees with a bisection oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::VectorXd v = normal_vec(rng, 2 + trial % 9, 2.0);
    CHECK((project_simplex(v) - bisection_projection(v)).cwiseAbs().maxCoeff() < 1e-12);
  }
  Eigen::VectorXd inside(3);
  inside << 0.2, 0.3, 0.5;
  CHECK((project_simplex(inside) - inside).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("mirror map maximizes <y, x> - h(x)") {
  std::mt19937_64 rng(23);
  for (const Regularizer& reg : all_geometries()) {
    CAPTURE(to_string(reg.geometry()));
    for (int trial = 0; trial < 50; ++trial) {
      const DualVector y = random_dual(rng, reg, 1.5);
      const PrimalPoint q = mirror_map(reg, y);
      CHECK(in_domain(reg, q));
      const double best = inner(y, q) - reg.value(q);
      CHECK(conjugate_value(reg, y) == doctest::Approx(best).epsilon(1e-12));
      for (int k = 0; k < 20; ++k) {
        const PrimalPoint x = mirror_map(reg, random_dual(rng, reg, 3.0));
        CHECK(inner(y, x) - reg.value(x) <= best + 1e-12);
      }
    }
  }
}

TEST_CASE("norm pairs: duality against a vertex oracle, homogeneity, triangle inequality") {
  std::mt19937_64 rng(29);
  const NormPair l1(NormKind::kL1LInf, 4);
  const NormPair l2(NormKind::kL2L2, 4);
  const NormPair nuc(NormKind::kNuclearSpectral, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::VectorXd v = normal_vec(rng, 4);
    const Eigen::VectorXd w = normal_vec(rng, 4);
    double vertex = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i) vertex = std::max(vertex, std::abs(v(i)));
    CHECK(l1.dual(v) == doctest::Approx(vertex));
    CHECK(l1.primal(v) == doctest::Approx(v.cwiseAbs().sum()));
    CHECK(l2.dual(v) == doctest::Approx(v.norm()));
    CHECK(l1.primal(v + w) <= l1.primal(v) + l1.primal(w) + 1e-14);
    CHECK(l1.dual(-2.5 * v) == doctest::Approx(2.5 * l1.dual(v)));

    const Eigen::VectorXd m = sym_flat(rng, 3);
    const Eigen::VectorXd m2 = sym_flat(rng, 3);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(as_mat(m, 3));
    CHECK(nuc.primal(m) == doctest::Approx(es.eigenvalues().cwiseAbs().sum()));
    CHECK(nuc.dual(m) == doctest::Approx(es.eigenvalues().cwiseAbs().maxCoeff()));
    CHECK(nuc.dual(m + m2) <= nuc.dual(m) + nuc.dual(m2) + 1e-13);
    // extreme points of the unit nuclear ball are +-u u^T
    for (int k = 0; k < 10; ++k) {
      Eigen::VectorXd u = normal_vec(rng, 3);
      u.normalize();
      const Eigen::MatrixXd uu = u * u.transpose();
      CHECK(std::abs(inner(m, Eigen::Map<const Eigen::VectorXd>(uu.data(), 9))) <=
            nuc.dual(m) + 1e-13);
    }
  }
}

TEST_CASE("Bregman divergence: KL form, nonnegativity, zero on the diagonal") {
  const Regularizer reg = Regularizer::entropic_simplex(3);
  Eigen::VectorXd p(3), x(3);
  p << 0.5, 0.25, 0.25;
  x << 1.0 / 3, 1.0 / 3, 1.0 / 3;
  const double kl = 0.5 * std::log(1.5) + 0.5 * std::log(0.75);
  CHECK(bregman_div(reg, p, x) == doctest::Approx(kl));
  CHECK(bregman_div(reg, p, p) == doctest::Approx(0.0));

  std::mt19937_64 rng(31);
  for (const Regularizer& r : all_geometries()) {
    for (int trial = 0; trial < 50; ++trial) {
      const PrimalPoint a = mirror_map(r, random_dual(rng, r, 2.0));
      const PrimalPoint b = mirror_map(r, random_dual(rng, r, 2.0));
      CHECK(bregman_div(r, a, b) >= -1e-12);
    }
  }
}

TEST_CASE("prox-mapping stays in the domain and equals the mirror step from grad h") {
  std::mt19937_64 rng(37);
  for (const Regularizer& reg : all_geometries()) {
    for (int trial = 0; trial < 50; ++trial) {
      const PrimalPoint x = mirror_map(reg, random_dual(rng, reg, 1.0));
      const DualVector v = random_dual(rng, reg, 1.0);
      const PrimalPoint p = prox_map(reg, x, v);
      CHECK(in_domain(reg, p));
      CHECK((p - mirror_map(reg, reg_grad(reg, x) + v)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("Fenchel coupling vanishes at p = Q(y) and is nonnegative elsewhere") {
  std::mt19937_64 rng(41);
  for (const Regularizer& reg : all_geometries()) {
    const DualVector y = random_dual(rng, reg, 1.0);
    CHECK(std::abs(fenchel_coupling(reg, mirror_map(reg, y), y)) < 1e-12);
    const PrimalPoint p = mirror_map(reg, random_dual(rng, reg, 1.0));
    CHECK(fenchel_coupling(reg, p, y) >= -1e-12);
  }
}

TEST_CASE("domain checks and error kinds") {
  const Regularizer reg = Regularizer::entropic_simplex(3);
  Eigen::VectorXd off(3);
  off << 0.5, 0.5, 0.5;
  CHECK_FALSE(in_domain(reg, off));
  CHECK_THROWS_AS(reg.value(off), DomainError);
  CHECK_THROWS_AS(mirror_map(reg, Eigen::VectorXd::Zero(2)), InvalidInput);

  Eigen::VectorXd vertex(3);
  vertex << 1.0, 0.0, 0.0;
  CHECK(in_domain(reg, vertex));
  CHECK_THROWS_AS(prox_map(reg, vertex, Eigen::VectorXd::Zero(3)), DomainError);
  // the dual-representative step never needs the boundary point itself
  Eigen::VectorXd z(3);
  z << 800.0, 0.0, 0.0;
  const DualVector step = prox_step_dual(reg, z, Eigen::VectorXd::Ones(3));
  CHECK(in_domain(reg, mirror_map(reg, step)));

  const Regularizer vn = Regularizer::von_neumann(2);
  Eigen::VectorXd heavy(4);
  heavy << 0.8, 0.0, 0.0, 0.8;
  CHECK_FALSE(in_domain(vn, heavy));
  Eigen::VectorXd asym(4);
  asym << 0.2, 0.1, 0.0, 0.2;
  CHECK_FALSE(in_domain(vn, asym));
}
