#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zonocalc/linalg.hpp"
#include "zonocalc/steiner.hpp"

namespace zonocalc {

/// Z = sum of segments [0, u_i]. The empty generator list is the origin.
/// Degenerate (non-spanning) zonotopes are legal everywhere and have volume 0.
class Zonotope {
 public:
  Zonotope(int dim, std::vector<Vector> generators, Mode mode);
  static Zonotope cube(int dim, Mode m);
  static Zonotope segment(const Vector& u);
  static Zonotope point(int dim, Mode m);

  int dim() const { return dim_; }
  Mode mode() const { return mode_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const std::vector<Vector>& generators() const { return gens_; }
  const Vector& generator(int i) const { return gens_[static_cast<size_t>(i)]; }

  Zonotope to_float() const;
  /// Generators sorted lexicographically; applied before hashing/serialization.
  Zonotope canonicalized() const;

 private:
  int dim_;
  std::vector<Vector> gens_;
  Mode mode_;
};

/// Generator-list concatenation (the Minkowski sum of zonotopes).
Zonotope minkowski_sum(const Zonotope& a, const Zonotope& b);

/// |Z| = sum over n-subsets I of |det(u_i : i in I)|; 0 when fewer than n
/// generators. Exact in Exact mode.
Scalar volume(const Zonotope& z);

/// Generators mapped through T (rows x dim(Z) allowed; flat images are legal).
Zonotope apply_linear(const Matrix& t, const Zonotope& z);

/// Orthogonal projection onto the complement of span(basis), represented
/// extrinsically in ambient coordinates. Basis vectors must be pairwise
/// orthogonal: exactly in Exact mode (any rational lengths; normalization is
/// carried as squared norms), within 1e-12 as unit vectors in Float mode.
Zonotope project(const Zonotope& z, std::span<const Vector> basis);

/// sum over (n-r)-subsets I of |det(u_I | b_1 ... b_r)|. This is the
/// projection volume scaled by prod ||b_j||, rational whenever inputs are;
/// exact checks compare these scaled values so irrational factors cancel.
Scalar projection_det_sum(const Zonotope& z, std::span<const Vector> basis);

/// (n-r)-dimensional volume of the projection of Z onto span(basis)^perp.
/// Float unless every basis vector lies on a coordinate axis (then exact
/// coordinate-dropping applies and Exact inputs stay exact).
Scalar projection_volume(const Zonotope& z, std::span<const Vector> basis);

/// V(Z_1,...,Z_n) = (1/n!) sum over one generator per slot of |det|.
/// Repeated-slot shorthand K[m] is expanded by the caller.
Scalar mixed_volume(std::span<const Zonotope> slots);

/// Surface area 2 sum_{|I|=k-1} (k-1)-volume of the generator parallelepipeds,
/// where k defaults to the ambient dimension. Pass k < n for bodies that live
/// in a k-dimensional subspace. Always Float.
Scalar surface_area(const Zonotope& z);
Scalar surface_area_intrinsic(const Zonotope& z, int k);

/// Coefficients of |Z + t B_2^3| for Z in R^3:
/// (|Z|, |dZ|, pi * sum ||u_i||, 4 pi / 3), constant term first.
SteinerPoly steiner3(const Zonotope& z);

/// A = a + sum [0, w_i] with linearly independent edges.
class Parallelotope {
 public:
  Parallelotope(Vector base, std::vector<Vector> edges);

  int dim() const { return base_.dim(); }
  Mode mode() const { return base_.mode(); }
  const Vector& base() const { return base_; }
  const std::vector<Vector>& edges() const { return edges_; }
  /// Translation-free zonotope with the same edges.
  Zonotope as_zonotope() const;

 private:
  Vector base_;
  std::vector<Vector> edges_;
};

/// Volume of the projection of P along the coordinate directions in `dropped`
/// (projection onto span{e_i : i not in dropped}), via the inverse-edge-matrix
/// subset formula |det T| * sum_{|J|=m} |det({w_i^J})|, w_i = T^{-1} e_i.
Scalar parallelotope_projection_volume(const Parallelotope& p, std::span<const int> dropped);

}  // namespace zonocalc
