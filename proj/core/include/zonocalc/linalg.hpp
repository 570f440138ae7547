#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "zonocalc/scalar.hpp"

namespace zonocalc {

/// Dense vector with uniform-mode Scalar coordinates, dim >= 1.
class Vector {
 public:
  explicit Vector(std::vector<Scalar> coords);
  static Vector zero(int dim, Mode m);
  static Vector unit(int dim, int axis, Mode m);
  /// Integer coordinates as an exact vector.
  static Vector lattice(std::initializer_list<long> coords);
  static Vector real(std::initializer_list<double> coords);

  int dim() const { return static_cast<int>(x_.size()); }
  Mode mode() const { return x_[0].mode(); }
  const Scalar& operator[](int i) const { return x_[static_cast<size_t>(i)]; }
  Scalar& operator[](int i) { return x_[static_cast<size_t>(i)]; }
  const std::vector<Scalar>& coords() const { return x_; }

  Vector to_float() const;
  Vector operator-() const;
  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator*(const Scalar& c, const Vector& v);
  bool operator==(const Vector& o) const;

 private:
  std::vector<Scalar> x_;
};

Scalar dot(const Vector& a, const Vector& b);
Scalar norm_sq(const Vector& v);
double norm(const Vector& v);
Vector cross3(const Vector& a, const Vector& b);

/// Row-major dense matrix, uniform mode.
class Matrix {
 public:
  Matrix(int rows, int cols, Mode m);
  static Matrix identity(int n, Mode m);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  /// Columns given as vectors (generator matrices store one body column per generator).
  static Matrix from_columns(const std::vector<Vector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Mode mode() const { return a_[0].mode(); }
  const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Vector column(int c) const;
  Vector row(int r) const;
  Matrix transpose() const;
  Matrix to_float() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  Vector apply(const Vector& v) const;

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Determinant of a square matrix, n <= config::kMaxDim.
/// Exact mode: fraction-free Bareiss elimination over the integers after
/// clearing row denominators. Float mode: partially pivoted elimination.
Scalar det(const Matrix& m);

/// Determinant of the square matrix whose columns are the given vectors.
Scalar det_of_columns(std::span<const Vector> cols);

/// sqrt(det G), G_ij = <v_i, v_j>: the k-volume of the parallelepiped spanned
/// by the vectors. Always a Float scalar; 0 for dependent sets.
Scalar gram_det_sqrt(std::span<const Vector> vectors);

/// Rank of the span of the vectors (exact elimination in Exact mode,
/// relative pivot tolerance 1e-12 in Float mode).
int rank(std::span<const Vector> vectors);

/// Exact inverse (throws DegenerateError when singular).
Matrix inverse_exact(const Matrix& m);
/// Solve M x = b. Exact: Gauss-Jordan; Float: partial pivoting with relative
/// pivot tolerance 1e-12 (throws DegenerateError on rank deficiency).
Vector solve(const Matrix& m, const Vector& b);

}  // namespace zonocalc
