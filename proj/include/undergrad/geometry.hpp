#pragma once

#include <string>

#include <Eigen/Dense>

namespace undergrad {

/// Primal points and dual vectors share one representation: a dense vector
/// for the simplex and Euclidean geometries, and the column-major flattening of
/// an n x n symmetric matrix for the spectrahedron. With that layout the
/// Frobenius pairing tr(Y X) is the ordinary dot product.
using PrimalPoint = Eigen::VectorXd;
using DualVector = Eigen::VectorXd;

enum class Geometry {
  kEntropicSimplex,
  kVonNeumannSpectrahedron,
  kEuclideanSet,
  kEuclideanUnbounded,
};

enum class NormKind { kL1LInf, kL2L2, kNuclearSpectral };

const char* to_string(Geometry g);
const char* to_string(NormKind n);
Geometry geometry_from_string(const std::string& name);

/// A primal norm together with its dual. Matrix norms need the side length.
class NormPair {
 public:
  NormPair(NormKind kind, Eigen::Index side) : kind_(kind), side_(side) {}

  NormKind kind() const { return kind_; }
  double primal(const PrimalPoint& x) const;
  double dual(const DualVector& v) const;

 private:
  NormKind kind_;
  Eigen::Index side_;
};

/// A Bregman regularizer together with the constants the rate analysis needs.
/// Values are immutable after construction.
class Regularizer {
 public:
  /// Negative entropy sum x_i log x_i on the simplex of R^d.
  static Regularizer entropic_simplex(Eigen::Index d);
  /// tr(X log X) + (1 - tr X) log(1 - tr X) on {X >= 0, tr X <= 1}, side n.
  /// Omega is stored as log n.
  static Regularizer von_neumann(Eigen::Index n);
  /// ||x||^2 / 2 restricted to the simplex of R^d.
  static Regularizer euclidean_simplex(Eigen::Index d);
  /// ||x||^2 / 2 on all of R^d.
  static Regularizer euclidean_unbounded(Eigen::Index d);

  Geometry geometry() const { return geometry_; }
  /// Length of the vector representation (n^2 for the spectrahedron).
  Eigen::Index dim() const { return dim_; }
  /// Matrix side for the spectrahedron, dim() otherwise.
  Eigen::Index side() const { return side_; }
  double K() const { return K_; }
  double Omega() const { return omega_; }
  double Diam() const { return diam_; }
  const NormPair& norms() const { return norms_; }
  const PrimalPoint& prox_center() const { return prox_center_; }

  /// True for the Legendre (entropy-type) regularizers whose gradient blows up
  /// at the boundary.
  bool is_legendre() const;
  bool bounded() const;

  /// sqrt(Omega + K Diam^2).
  double H() const;

  /// h(x); throws DomainError when x is outside the domain.
  double value(const PrimalPoint& x) const;

 private:
  Regularizer(Geometry g, Eigen::Index dim, Eigen::Index side, double K, double omega,
              double diam, NormKind norm, PrimalPoint center);

  Geometry geometry_;
  Eigen::Index dim_;
  Eigen::Index side_;
  double K_;
  double omega_;
  double diam_;
  NormPair norms_;
  PrimalPoint prox_center_;
};

double inner(const DualVector& y, const PrimalPoint& x);

/// Throws DomainError unless x satisfies the domain invariants of the geometry
/// (simplex: x >= 0 and sum 1 within 1e-12; spectrahedron: symmetric within
/// 1e-12, eigenvalues >= -1e-10, trace <= 1 + 1e-12; all: finite).
void check_in_domain(const Regularizer& reg, const PrimalPoint& x);
bool in_domain(const Regularizer& reg, const PrimalPoint& x);

/// argmax_x <y, x> - h(x).
PrimalPoint mirror_map(const Regularizer& reg, const DualVector& y);

/// argmin_x' <v, x - x'> + D(x', x). The base point must lie in the
/// prox-domain.
PrimalPoint prox_map(const Regularizer& reg, const PrimalPoint& x, const DualVector& v);

/// Bregman divergence D(p, x) = h(p) - h(x) - <grad h(x), p - x>.
double bregman_div(const Regularizer& reg, const PrimalPoint& p, const PrimalPoint& x);

/// h*(y) = <y, Q(y)> - h(Q(y)).
double conjugate_value(const Regularizer& reg, const DualVector& y);

/// F(p, y) = h(p) + h*(y) - <y, p>.
double fenchel_coupling(const Regularizer& reg, const PrimalPoint& p, const DualVector& y);

/// Continuous selection of the subgradient of h on the prox-domain.
DualVector reg_grad(const Regularizer& reg, const PrimalPoint& x);

/// Given a dual representative z of the base point X = Q(z), returns a dual
/// representative of prox_map(X, v). For Legendre regularizers this is z + v,
/// which never leaves the prox-domain even when X has underflowed entries.
DualVector prox_step_dual(const Regularizer& reg, const DualVector& z, const DualVector& v);

/// Euclidean projection onto the unit simplex (sort-and-threshold).
Eigen::VectorXd project_simplex(const Eigen::VectorXd& v);

}  // namespace undergrad
