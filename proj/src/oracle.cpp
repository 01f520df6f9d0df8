#include "undergrad/oracle.hpp"

#include <cmath>

#include "undergrad/errors.hpp"

namespace undergrad {

namespace {

Eigen::VectorXd gaussian_vector(Rng& rng, Eigen::Index n, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

Eigen::MatrixXd gaussian_symmetric(Rng& rng, Eigen::Index n, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j; i < n; ++i) {
      m(i, j) = normal(rng);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

// Haar-distributed orthogonal matrix from the QR factors of a Gaussian matrix.
Eigen::MatrixXd haar_orthogonal(Rng& rng, Eigen::Index n) {
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

}  // namespace

const char* to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kNone: return "none";
    case NoiseKind::kCoordinateRademacher: return "rademacher";
    case NoiseKind::kSphericalUniform: return "spherical";
    case NoiseKind::kSpectralRademacher: return "spectral";
    case NoiseKind::kTruncatedNormal: return "truncated_normal";
  }
  return "unknown";
}

NoiseKind noise_kind_from_string(const std::string& name) {
  if (name == "none") return NoiseKind::kNone;
  if (name == "rademacher") return NoiseKind::kCoordinateRademacher;
  if (name == "spherical") return NoiseKind::kSphericalUniform;
  if (name == "spectral") return NoiseKind::kSpectralRademacher;
  if (name == "truncated_normal") return NoiseKind::kTruncatedNormal;
  throw ConfigError("unknown noise model '" + name + "'");
}

NoiseModel default_noise(const Regularizer& reg, double sigma) {
  if (sigma == 0.0) return {NoiseKind::kNone};
  switch (reg.norms().kind()) {
    case NormKind::kL1LInf: return {NoiseKind::kCoordinateRademacher};
    case NormKind::kL2L2: return {NoiseKind::kSphericalUniform};
    case NormKind::kNuclearSpectral: return {NoiseKind::kSpectralRademacher};
  }
  return {NoiseKind::kNone};
}

Rng derive_stream(std::uint64_t base_seed, std::uint64_t run_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(base_seed),
                    static_cast<std::uint32_t>(base_seed >> 32),
                    static_cast<std::uint32_t>(run_index),
                    static_cast<std::uint32_t>(run_index >> 32)};
  return Rng(seq);
}

OracleHandle::OracleHandle(GradientFn gradient, Regularizer reg, NoiseModel noise, double sigma,
                           Rng rng)
    : gradient_(std::move(gradient)),
      reg_(std::move(reg)),
      noise_(noise),
      sigma_(sigma),
      rng_(std::move(rng)) {
  if (!(sigma_ >= 0.0) || !std::isfinite(sigma_)) {
    throw InvalidInput("oracle: sigma must be finite and nonnegative");
  }
  if ((noise_.kind == NoiseKind::kNone) != (sigma_ == 0.0)) {
    throw InvalidInput("oracle: noise kind 'none' must be paired with sigma = 0");
  }
  if (noise_.kind == NoiseKind::kCoordinateRademacher &&
      reg_.norms().kind() != NormKind::kL1LInf) {
    throw InvalidInput("oracle: Rademacher coordinate noise is bounded only in the L-infinity norm");
  }
  if (noise_.kind == NoiseKind::kSpectralRademacher &&
      reg_.geometry() != Geometry::kVonNeumannSpectrahedron) {
    throw InvalidInput("oracle: spectral noise requires matrix-valued points");
  }
}

DualVector OracleHandle::query(const PrimalPoint& x) {
  check_in_domain(reg_, x);
  ++query_count_;
  DualVector g = gradient_(x);
  if (noise_.kind != NoiseKind::kNone) g += sample_noise();
  return g;
}

DualVector OracleHandle::sample_noise() {
  switch (noise_.kind) {
    case NoiseKind::kNone: return DualVector::Zero(reg_.dim());
    case NoiseKind::kCoordinateRademacher: return rademacher();
    case NoiseKind::kSphericalUniform: return spherical();
    case NoiseKind::kSpectralRademacher: return spectral();
    case NoiseKind::kTruncatedNormal: return truncated_normal();
  }
  return DualVector::Zero(reg_.dim());
}

DualVector OracleHandle::rademacher() {
  std::bernoulli_distribution coin(0.5);
  DualVector u(reg_.dim());
  for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = coin(rng_) ? sigma_ : -sigma_;
  return u;
}

DualVector OracleHandle::spherical() {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  DualVector z = gaussian_vector(rng_, reg_.dim(), 1.0);
  const double norm = z.norm();
  const double radius = sigma_ * unit(rng_);
  if (norm == 0.0) return DualVector::Zero(reg_.dim());
  return z * (radius / norm);
}

DualVector OracleHandle::spectral() {
  const Eigen::Index n = reg_.side();
  const Eigen::MatrixXd r = haar_orthogonal(rng_, n);
  std::bernoulli_distribution coin(0.5);
  Eigen::VectorXd signs(n);
  for (Eigen::Index i = 0; i < n; ++i) signs(i) = coin(rng_) ? sigma_ : -sigma_;
  Eigen::MatrixXd u = r * signs.asDiagonal() * r.transpose();
  u = (0.5 * (u + u.transpose())).eval();
  return Eigen::Map<const Eigen::VectorXd>(u.data(), u.size());
}

DualVector OracleHandle::truncated_normal() {
  switch (reg_.norms().kind()) {
    case NormKind::kL1LInf: {
      // coordinates are independent under the L-infinity bound
      std::normal_distribution<double> normal(0.0, 0.5 * sigma_);
      DualVector u(reg_.dim());
      for (Eigen::Index i = 0; i < u.size(); ++i) {
        double v = normal(rng_);
        while (std::abs(v) > sigma_) v = normal(rng_);
        u(i) = v;
      }
      return u;
    }
    case NormKind::kL2L2: {
      const double scale = 0.5 * sigma_ / std::sqrt(static_cast<double>(reg_.dim()));
      for (;;) {
        DualVector u = gaussian_vector(rng_, reg_.dim(), scale);
        if (u.norm() <= sigma_) return u;
      }
    }
    case NormKind::kNuclearSpectral: {
      const Eigen::Index n = reg_.side();
      const double scale = 0.25 * sigma_ / std::sqrt(static_cast<double>(n));
      for (;;) {
        const Eigen::MatrixXd m = gaussian_symmetric(rng_, n, scale);
        DualVector u = Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
        if (reg_.norms().dual(u) <= sigma_) return u;
      }
    }
  }
  return DualVector::Zero(reg_.dim());
}

}  // namespace undergrad
