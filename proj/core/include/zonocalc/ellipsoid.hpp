#pragma once

#include <span>
#include <vector>

#include "zonocalc/linalg.hpp"

namespace zonocalc {

class RngStream;

/// L2-zonoid: the body U B_2^m = sqrt(U U*) B_2^n for an n x m generator
/// matrix U, i.e. an ellipsoid, possibly living in a lower-dimensional
/// subspace. The PSD shape matrix Q = U U* is cached at construction.
class EllipsoidL2 {
 public:
  explicit EllipsoidL2(Matrix gen_matrix);
  static EllipsoidL2 ball(int n, Mode m);
  /// Axis-aligned ellipsoid with the given semi-axes (U diagonal).
  static EllipsoidL2 diagonal(const std::vector<Scalar>& semi_axes);

  int dim() const { return u_.rows(); }
  int num_generators() const { return u_.cols(); }
  Mode mode() const { return u_.mode(); }
  const Matrix& gen_matrix() const { return u_; }
  const Matrix& shape() const { return q_; }

  bool full_dimensional() const;
  EllipsoidL2 to_float() const;

 private:
  Matrix u_;
  Matrix q_;
};

/// Firey 2-sum: generator matrices concatenate columnwise, shapes add.
EllipsoidL2 oplus2(const EllipsoidL2& a, const EllipsoidL2& b);

/// |B_2^n| sqrt(det Q); by Cauchy-Binet det Q = sum over n-subsets det(U_I)^2.
Scalar volume(const EllipsoidL2& a);

/// Sum over n-subsets I of det(U_I)^2 (exact in Exact mode): the subset-sum
/// route of the volume formula, equal to det Q.
Scalar subset_det_sq_sum(const EllipsoidL2& a);

/// Sum over (n-r)-subsets I of det([U_I | b_1 ... b_r])^2: the squared
/// projection volume times prod ||b_j||^2 / |B^(n-r)|^2, rational whenever
/// inputs are. Basis must be pairwise orthogonal (exact) / orthonormal (float).
Scalar projection_det_sq_sum(const EllipsoidL2& a, std::span<const Vector> basis);

/// (n-r)-volume of the projection onto span(basis)^perp (Float).
Scalar projection_volume(const EllipsoidL2& a, std::span<const Vector> basis);

/// Radial function rho(u) = 1/sqrt(<Q^-1 u, u>) for unit u (Float).
/// Rank-deficient bodies are rejected with DegenerateError.
Scalar radial(const EllipsoidL2& a, const Vector& u);

/// Equality test for the squared projection-ratio inequality: true iff u is
/// an eigenvector of Q_A Q_B^-1 within angular tolerance 1e-8.
bool equality_case(const EllipsoidL2& a, const EllipsoidL2& b, const Vector& u);

struct MonteCarloEstimate {
  double value;
  double std_error;
};

/// Surface area |dA| = n |A| E_u ||u||_A over uniform directions, estimated by
/// Monte Carlo with the given sample count; reports the standard error.
MonteCarloEstimate surface_area_mc(const EllipsoidL2& a, int samples, RngStream& rng);

/// h2(t) = (|A oplus2 sqrt(t) B| / |P_{u^perp}(A oplus2 sqrt(t) B)|)^2,
/// the squared ratio whose concavity in t is under test.
double ratio_sq_interpolated(const EllipsoidL2& a, const EllipsoidL2& b, const Vector& u, double t);

}  // namespace zonocalc
