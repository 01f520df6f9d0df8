#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "undergrad/geometry.hpp"

namespace undergrad {

using Rng = std::mt19937_64;
using GradientFn = std::function<DualVector(const PrimalPoint&)>;

enum class NoiseKind {
  kNone,
  /// Independent +-sigma per coordinate; saturates the L-infinity bound.
  kCoordinateRademacher,
  /// Uniform direction with radius sigma * u, u ~ U[0, 1]; L2 bound.
  kSphericalUniform,
  /// R diag(+-sigma) R^T with R Haar-orthogonal; spectral-norm bound.
  kSpectralRademacher,
  /// Zero-mean normal, rejected outside the dual-norm ball of radius sigma.
  kTruncatedNormal,
};

const char* to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(const std::string& name);

struct NoiseModel {
  NoiseKind kind = NoiseKind::kNone;
};

/// Hard-bounded default for the geometry's dual norm, or None when sigma = 0.
NoiseModel default_noise(const Regularizer& reg, double sigma);

/// Independent generator state for a (seed, run) pair.
Rng derive_stream(std::uint64_t base_seed, std::uint64_t run_index);

/// Stochastic first-order oracle: g = grad f(x) + U with fresh bounded noise U
/// on every query. Single consumer; not thread safe.
class OracleHandle {
 public:
  OracleHandle(GradientFn gradient, Regularizer reg, NoiseModel noise, double sigma, Rng rng);

  /// Throws DomainError if x is outside the domain.
  DualVector query(const PrimalPoint& x);

  /// One draw from the noise model (does not count as a query).
  DualVector sample_noise();

  long query_count() const { return query_count_; }
  double sigma() const { return sigma_; }
  const NoiseModel& noise() const { return noise_; }
  const Regularizer& regularizer() const { return reg_; }

 private:
  DualVector rademacher();
  DualVector spherical();
  DualVector spectral();
  DualVector truncated_normal();

  GradientFn gradient_;
  Regularizer reg_;
  NoiseModel noise_;
  double sigma_;
  Rng rng_;
  long query_count_ = 0;
};

}  // namespace undergrad
