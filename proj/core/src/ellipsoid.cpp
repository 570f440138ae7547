#include "zonocalc/ellipsoid.hpp"

#include <cmath>

#include "zonocalc/combinatorics.hpp"
#include "zonocalc/config.hpp"
#include "zonocalc/rng.hpp"
#include "zonocalc/special_functions.hpp"

namespace zonocalc {

namespace {

void check_basis(int dim, Mode mode, std::span<const Vector> basis) {
  for (const Vector& b : basis) {
    if (b.dim() != dim) throw DimensionError("projection basis dim mismatch");
    if (b.mode() != mode) throw ModeError("projection basis mode mismatch");
    if (norm_sq(b).is_zero()) throw DegenerateError("projection basis contains zero vector");
  }
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Scalar d = dot(basis[i], basis[j]);
      if (mode == Mode::Exact) {
        if (!d.is_zero()) throw DegenerateError("projection basis not orthogonal");
      } else if (std::fabs(d.to_double()) > 1e-12) {
        throw DegenerateError("projection basis not orthonormal within 1e-12");
      }
    }
  if (mode == Mode::Float)
    for (const Vector& b : basis)
      if (std::fabs(norm_sq(b).to_double() - 1.0) > 1e-12)
        throw DegenerateError("projection basis not orthonormal within 1e-12");
}

}  // namespace

EllipsoidL2::EllipsoidL2(Matrix gen_matrix)
    : u_(std::move(gen_matrix)), q_(u_ * u_.transpose()) {
  if (u_.rows() > config::kMaxDim) throw CapError("ellipsoid dimension cap exceeded");
}

EllipsoidL2 EllipsoidL2::ball(int n, Mode m) { return EllipsoidL2(Matrix::identity(n, m)); }

EllipsoidL2 EllipsoidL2::diagonal(const std::vector<Scalar>& semi_axes) {
  const int n = static_cast<int>(semi_axes.size());
  Matrix u(n, n, semi_axes[0].mode());
  for (int i = 0; i < n; ++i) u.at(i, i) = semi_axes[static_cast<size_t>(i)];
  return EllipsoidL2(std::move(u));
}

bool EllipsoidL2::full_dimensional() const {
  if (mode() == Mode::Exact) return !det(q_).is_zero();
  double scale = 0.0;
  for (int i = 0; i < dim(); ++i) scale = std::max(scale, std::fabs(q_.at(i, i).to_double()));
  if (scale == 0.0) return false;
  double d = det(q_).to_double();
  return d > std::pow(1e-10 * scale, dim());
}

EllipsoidL2 EllipsoidL2::to_float() const { return EllipsoidL2(u_.to_float()); }

EllipsoidL2 oplus2(const EllipsoidL2& a, const EllipsoidL2& b) {
  if (a.dim() != b.dim()) throw DimensionError("oplus2: dim mismatch");
  if (a.mode() != b.mode()) throw ModeError("oplus2: mode mismatch");
  std::vector<Vector> cols;
  for (int j = 0; j < a.num_generators(); ++j) cols.push_back(a.gen_matrix().column(j));
  for (int j = 0; j < b.num_generators(); ++j) cols.push_back(b.gen_matrix().column(j));
  return EllipsoidL2(Matrix::from_columns(cols));
}

Scalar volume(const EllipsoidL2& a) {
  double dq = det(a.shape()).to_double();
  if (dq < 0.0) dq = 0.0;
  return Scalar::real(ball_volume(a.dim()).to_double() * std::sqrt(dq));
}

Scalar subset_det_sq_sum(const EllipsoidL2& a) {
  const int n = a.dim();
  const int m = a.num_generators();
  if (m < n) return Scalar::zero(a.mode());
  if (binomial(m, n) > config::max_subsets()) throw CapError("subset enumeration cap exceeded");
  Scalar total = Scalar::zero(a.mode());
  std::vector<Vector> cols;
  for (CombinationIter it(m, n); !it.done(); it.next()) {
    cols.clear();
    for (int i : it.current()) cols.push_back(a.gen_matrix().column(i));
    Scalar d = det_of_columns(cols);
    total += d * d;
  }
  return total;
}

Scalar projection_det_sq_sum(const EllipsoidL2& a, std::span<const Vector> basis) {
  check_basis(a.dim(), a.mode(), basis);
  const int n = a.dim();
  const int r = static_cast<int>(basis.size());
  const int k = n - r;
  if (k < 0) throw DimensionError("projection basis larger than dim");
  const int m = a.num_generators();
  if (m < k) return Scalar::zero(a.mode());
  if (binomial(m, k) > config::max_subsets()) throw CapError("subset enumeration cap exceeded");
  Scalar total = Scalar::zero(a.mode());
  std::vector<Vector> cols;
  for (CombinationIter it(m, k); !it.done(); it.next()) {
    cols.clear();
    for (int i : it.current()) cols.push_back(a.gen_matrix().column(i));
    for (const Vector& b : basis) cols.push_back(b);
    Scalar d = det_of_columns(cols);
    total += d * d;
  }
  return total;
}

Scalar projection_volume(const EllipsoidL2& a, std::span<const Vector> basis) {
  const int k = a.dim() - static_cast<int>(basis.size());
  if (k == 0) return Scalar::real(0.0);
  Scalar sum = projection_det_sq_sum(a, basis);
  double denom = 1.0;
  for (const Vector& b : basis) denom *= norm(b);
  return Scalar::real(ball_volume(k).to_double() * std::sqrt(sum.to_double()) / denom);
}

Scalar radial(const EllipsoidL2& a, const Vector& u) {
  if (u.dim() != a.dim()) throw DimensionError("radial: dim mismatch");
  if (!a.full_dimensional()) throw DegenerateError("radial of a rank-deficient body");
  Matrix q = a.shape().mode() == Mode::Float ? a.shape() : a.shape().to_float();
  Vector uf = u.mode() == Mode::Float ? u : u.to_float();
  Vector x = solve(q, uf);
  double qq = dot(x, uf).to_double();
  if (qq <= 0.0) throw DegenerateError("radial: direction outside the body's span");
  return Scalar::real(1.0 / std::sqrt(qq));
}

bool equality_case(const EllipsoidL2& a, const EllipsoidL2& b, const Vector& u) {
  if (!a.full_dimensional() || !b.full_dimensional())
    throw DegenerateError("equality_case requires full-dimensional bodies");
  // w = Q_A Q_B^-1 u; test the angle between w and u.
  Matrix qa = a.shape().mode() == Mode::Float ? a.shape() : a.shape().to_float();
  Matrix qb = b.shape().mode() == Mode::Float ? b.shape() : b.shape().to_float();
  Vector uf = u.mode() == Mode::Float ? u : u.to_float();
  Vector w = qa.apply(solve(qb, uf));
  double ww = norm_sq(w).to_double();
  double uu = norm_sq(uf).to_double();
  double wu = dot(w, uf).to_double();
  if (ww == 0.0 || uu == 0.0) return false;
  double cos_sq = (wu * wu) / (ww * uu);
  double sin_val = std::sqrt(std::max(0.0, 1.0 - cos_sq));
  return sin_val <= 1e-8;
}

MonteCarloEstimate surface_area_mc(const EllipsoidL2& a, int samples, RngStream& rng) {
  if (!a.full_dimensional()) throw DegenerateError("surface_area_mc: rank-deficient body");
  const int n = a.dim();
  Matrix q = a.shape().mode() == Mode::Float ? a.shape() : a.shape().to_float();
  double vol = volume(a).to_double();
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < samples; ++s) {
    std::vector<Scalar> g;
    double nn = 0.0;
    for (int i = 0; i < n; ++i) {
      double x = rng.next_gaussian();
      g.push_back(Scalar::real(x));
      nn += x * x;
    }
    if (nn == 0.0) {
      --s;
      continue;
    }
    Vector u(std::move(g));
    Vector x = solve(q, u);
    double f = std::sqrt(dot(x, u).to_double() / nn);  // ||T^-1 u|| for unit u
    sum += f;
    sum_sq += f * f;
  }
  double mean = sum / samples;
  double var = (sum_sq / samples - mean * mean) / std::max(1, samples - 1);
  return {n * vol * mean, n * vol * std::sqrt(std::max(0.0, var))};
}

double ratio_sq_interpolated(const EllipsoidL2& a, const EllipsoidL2& b, const Vector& u, double t) {
  Matrix qa = a.shape().mode() == Mode::Float ? a.shape() : a.shape().to_float();
  Matrix qb = b.shape().mode() == Mode::Float ? b.shape() : b.shape().to_float();
  Matrix qt(qa.rows(), qa.cols(), Mode::Float);
  for (int i = 0; i < qa.rows(); ++i)
    for (int j = 0; j < qa.cols(); ++j)
      qt.at(i, j) = Scalar::real(qa.at(i, j).float_value() + t * qb.at(i, j).float_value());
  Vector uf = u.mode() == Mode::Float ? u : u.to_float();
  Vector x = solve(qt, uf);
  double quad = dot(x, uf).to_double() / norm_sq(uf).to_double();
  const int n = a.dim();
  double c = ball_volume(n).to_double() / ball_volume(n - 1).to_double();
  return c * c / quad;
}

}  // namespace zonocalc
