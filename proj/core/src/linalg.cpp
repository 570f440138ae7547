#include "zonocalc/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "zonocalc/config.hpp"

namespace zonocalc {

Vector::Vector(std::vector<Scalar> coords) : x_(std::move(coords)) {
  if (x_.empty()) throw DimensionError("vector must have dim >= 1");
  for (const Scalar& c : x_)
    if (c.mode() != x_[0].mode()) throw ModeError("vector with mixed-mode coordinates");
}

Vector Vector::zero(int dim, Mode m) {
  return Vector(std::vector<Scalar>(static_cast<size_t>(dim), Scalar::zero(m)));
}

Vector Vector::unit(int dim, int axis, Mode m) {
  Vector v = zero(dim, m);
  v[axis] = Scalar::one(m);
  return v;
}

Vector Vector::lattice(std::initializer_list<long> coords) {
  std::vector<Scalar> x;
  for (long c : coords) x.push_back(Scalar::exact(c));
  return Vector(std::move(x));
}

Vector Vector::real(std::initializer_list<double> coords) {
  std::vector<Scalar> x;
  for (double c : coords) x.push_back(Scalar::real(c));
  return Vector(std::move(x));
}

Vector Vector::to_float() const {
  std::vector<Scalar> x;
  x.reserve(x_.size());
  for (const Scalar& c : x_) x.push_back(c.to_float());
  return Vector(std::move(x));
}

Vector Vector::operator-() const {
  std::vector<Scalar> x;
  x.reserve(x_.size());
  for (const Scalar& c : x_) x.push_back(-c);
  return Vector(std::move(x));
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw DimensionError("vector dim mismatch");
  std::vector<Scalar> x;
  x.reserve(a.x_.size());
  for (int i = 0; i < a.dim(); ++i) x.push_back(a[i] + b[i]);
  return Vector(std::move(x));
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw DimensionError("vector dim mismatch");
  std::vector<Scalar> x;
  x.reserve(a.x_.size());
  for (int i = 0; i < a.dim(); ++i) x.push_back(a[i] - b[i]);
  return Vector(std::move(x));
}

Vector operator*(const Scalar& c, const Vector& v) {
  std::vector<Scalar> x;
  x.reserve(v.x_.size());
  for (int i = 0; i < v.dim(); ++i) x.push_back(c * v[i]);
  return Vector(std::move(x));
}

bool Vector::operator==(const Vector& o) const {
  if (dim() != o.dim() || mode() != o.mode()) return false;
  for (int i = 0; i < dim(); ++i)
    if (x_[static_cast<size_t>(i)] != o[i]) return false;
  return true;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw DimensionError("dot: dim mismatch");
  Scalar s = Scalar::zero(a.mode());
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Scalar norm_sq(const Vector& v) { return dot(v, v); }

double norm(const Vector& v) { return std::sqrt(norm_sq(v).to_double()); }

Vector cross3(const Vector& a, const Vector& b) {
  if (a.dim() != 3 || b.dim() != 3) throw DimensionError("cross3 needs dim 3");
  return Vector({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                 a[0] * b[1] - a[1] * b[0]});
}

Matrix::Matrix(int rows, int cols, Mode m)
    : rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar::zero(m)) {
  if (rows < 1 || cols < 1) throw DimensionError("matrix must be at least 1x1");
}

Matrix Matrix::identity(int n, Mode m) {
  Matrix r(n, n, m);
  for (int i = 0; i < n; ++i) r.at(i, i) = Scalar::one(m);
  return r;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty() || rows[0].empty()) throw DimensionError("empty matrix");
  Matrix r(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), rows[0][0].mode());
  for (int i = 0; i < r.rows_; ++i) {
    if (rows[static_cast<size_t>(i)].size() != static_cast<size_t>(r.cols_))
      throw DimensionError("ragged rows");
    for (int j = 0; j < r.cols_; ++j) r.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return r;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  if (cols.empty()) throw DimensionError("matrix needs at least one column");
  Matrix r(cols[0].dim(), static_cast<int>(cols.size()), cols[0].mode());
  for (int j = 0; j < r.cols_; ++j) {
    if (cols[static_cast<size_t>(j)].dim() != r.rows_) throw DimensionError("column dim mismatch");
    for (int i = 0; i < r.rows_; ++i) r.at(i, j) = cols[static_cast<size_t>(j)][i];
  }
  return r;
}

Vector Matrix::column(int c) const {
  std::vector<Scalar> x;
  for (int i = 0; i < rows_; ++i) x.push_back(at(i, c));
  return Vector(std::move(x));
}

Vector Matrix::row(int r) const {
  std::vector<Scalar> x;
  for (int j = 0; j < cols_; ++j) x.push_back(at(r, j));
  return Vector(std::move(x));
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, mode());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::to_float() const {
  Matrix r(rows_, cols_, Mode::Float);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).to_float();
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matmul shape mismatch");
  Matrix r(a.rows_, b.cols_, a.mode());
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix add shape mismatch");
  Matrix r(a.rows_, a.cols_, a.mode());
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.dim() != cols_) throw DimensionError("matrix apply: dim mismatch");
  std::vector<Scalar> out(static_cast<size_t>(rows_), Scalar::zero(mode()));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(i)] += at(i, j) * v[j];
  return Vector(std::move(out));
}

namespace {

Scalar det_exact(const Matrix& m) {
  const int n = m.rows();
  // Clear denominators row by row; track the combined scale.
  std::vector<std::vector<mpz_class>> a(static_cast<size_t>(n),
                                        std::vector<mpz_class>(static_cast<size_t>(n)));
  mpz_class scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).rational().get_den().get_mpz_t());
    for (int j = 0; j < n; ++j) {
      const mpq_class& q = m.at(i, j).rational();
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }

  // Fraction-free Bareiss: every division below is exact over Z.
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Scalar::exact(0);
    if (pivot != k) {
      std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(k)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                      a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        mpz_divexact(a[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
    }
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  mpz_class d = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  if (sign < 0) d = -d;
  return Scalar::exact(mpq_class(d, scale));
}

Scalar det_float(const Matrix& m) {
  const int n = m.rows();
  std::vector<double> a(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j).float_value();
  double d = 1.0;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(a[static_cast<size_t>(i) * n + k]) > std::fabs(a[static_cast<size_t>(pivot) * n + k]))
        pivot = i;
    if (a[static_cast<size_t>(pivot) * n + k] == 0.0) return Scalar::real(0.0);
    if (pivot != k) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(pivot) * n + j], a[static_cast<size_t>(k) * n + j]);
      d = -d;
    }
    d *= a[static_cast<size_t>(k) * n + k];
    for (int i = k + 1; i < n; ++i) {
      double f = a[static_cast<size_t>(i) * n + k] / a[static_cast<size_t>(k) * n + k];
      for (int j = k; j < n; ++j) a[static_cast<size_t>(i) * n + j] -= f * a[static_cast<size_t>(k) * n + j];
    }
  }
  return Scalar::real(d);
}

}  // namespace

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("det of non-square matrix");
  const int n = m.rows();
  if (n > config::kMaxDim) throw CapError("det: dimension cap exceeded");
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (n == 3)
    return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
  return m.mode() == Mode::Exact ? det_exact(m) : det_float(m);
}

Scalar det_of_columns(std::span<const Vector> cols) {
  if (cols.empty()) throw DimensionError("det_of_columns: no columns");
  Matrix m(cols[0].dim(), static_cast<int>(cols.size()), cols[0].mode());
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    if (cols[static_cast<size_t>(j)].dim() != m.rows()) throw DimensionError("column dim mismatch");
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) = cols[static_cast<size_t>(j)][i];
  }
  return det(m);
}

Scalar gram_det_sqrt(std::span<const Vector> vectors) {
  if (vectors.empty()) return Scalar::real(1.0);  // empty parallelepiped has 0-volume 1
  const int k = static_cast<int>(vectors.size());
  const Vector& first = vectors[0];
  for (const Vector& v : vectors)
    if (v.dim() != first.dim() || v.mode() != first.mode())
      throw DimensionError("gram_det_sqrt: inconsistent vectors");
  if (k > first.dim()) return Scalar::real(0.0);
  Matrix g(k, k, first.mode());
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      Scalar d = dot(vectors[static_cast<size_t>(i)], vectors[static_cast<size_t>(j)]);
      g.at(i, j) = d;
      g.at(j, i) = d;
    }
  double dg = det(g).to_double();
  return Scalar::real(dg > 0.0 ? std::sqrt(dg) : 0.0);
}

int rank(std::span<const Vector> vectors) {
  if (vectors.empty()) return 0;
  const int dim = vectors[0].dim();
  const Mode mode = vectors[0].mode();
  std::vector<std::vector<double>> frows;
  std::vector<std::vector<mpq_class>> qrows;
  double scale = 0.0;
  for (const Vector& v : vectors) {
    if (v.dim() != dim || v.mode() != mode) throw DimensionError("rank: inconsistent vectors");
    if (mode == Mode::Exact) {
      std::vector<mpq_class> r;
      for (int i = 0; i < dim; ++i) r.push_back(v[i].rational());
      qrows.push_back(std::move(r));
    } else {
      std::vector<double> r;
      for (int i = 0; i < dim; ++i) {
        r.push_back(v[i].float_value());
        scale = std::max(scale, std::fabs(r.back()));
      }
      frows.push_back(std::move(r));
    }
  }
  int rk = 0;
  if (mode == Mode::Exact) {
    for (int col = 0; col < dim && rk < static_cast<int>(qrows.size()); ++col) {
      int pivot = -1;
      for (int i = rk; i < static_cast<int>(qrows.size()); ++i)
        if (qrows[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      std::swap(qrows[static_cast<size_t>(pivot)], qrows[static_cast<size_t>(rk)]);
      for (int i = rk + 1; i < static_cast<int>(qrows.size()); ++i) {
        mpq_class f = qrows[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                      qrows[static_cast<size_t>(rk)][static_cast<size_t>(col)];
        for (int j = col; j < dim; ++j)
          qrows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
              f * qrows[static_cast<size_t>(rk)][static_cast<size_t>(j)];
      }
      ++rk;
    }
    return rk;
  }
  if (scale == 0.0) return 0;
  for (int col = 0; col < dim && rk < static_cast<int>(frows.size()); ++col) {
    int pivot = rk;
    for (int i = rk + 1; i < static_cast<int>(frows.size()); ++i)
      if (std::fabs(frows[static_cast<size_t>(i)][static_cast<size_t>(col)]) >
          std::fabs(frows[static_cast<size_t>(pivot)][static_cast<size_t>(col)]))
        pivot = i;
    if (std::fabs(frows[static_cast<size_t>(pivot)][static_cast<size_t>(col)]) <= 1e-12 * scale)
      continue;
    std::swap(frows[static_cast<size_t>(pivot)], frows[static_cast<size_t>(rk)]);
    for (int i = rk + 1; i < static_cast<int>(frows.size()); ++i) {
      double f = frows[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                 frows[static_cast<size_t>(rk)][static_cast<size_t>(col)];
      for (int j = col; j < dim; ++j)
        frows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            f * frows[static_cast<size_t>(rk)][static_cast<size_t>(j)];
    }
    ++rk;
  }
  return rk;
}

Matrix inverse_exact(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  if (m.mode() != Mode::Exact) throw ModeError("inverse_exact needs exact entries");
  const int n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n, Mode::Exact);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!a.at(i, k).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw DegenerateError("inverse of singular matrix");
    if (pivot != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(k, j));
        std::swap(inv.at(pivot, j), inv.at(k, j));
      }
    Scalar p = a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) /= p;
      inv.at(k, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a.at(i, k).is_zero()) continue;
      Scalar f = a.at(i, k);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

Vector solve(const Matrix& m, const Vector& b) {
  if (m.rows() != m.cols() || b.dim() != m.rows()) throw DimensionError("solve: shape mismatch");
  const int n = m.rows();
  if (m.mode() == Mode::Exact) {
    Matrix inv = inverse_exact(m);
    return inv.apply(b);
  }
  Matrix a = m;
  std::vector<double> rhs(static_cast<size_t>(n));
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    rhs[static_cast<size_t>(i)] = b[i].float_value();
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a.at(i, j).float_value()));
  }
  if (scale == 0.0) throw DegenerateError("solve: zero matrix");
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(a.at(i, k).float_value()) > std::fabs(a.at(pivot, k).float_value())) pivot = i;
    if (std::fabs(a.at(pivot, k).float_value()) <= 1e-12 * scale)
      throw DegenerateError("solve: rank-deficient matrix");
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
      std::swap(rhs[static_cast<size_t>(pivot)], rhs[static_cast<size_t>(k)]);
    }
    for (int i = k + 1; i < n; ++i) {
      double f = a.at(i, k).float_value() / a.at(k, k).float_value();
      for (int j = k; j < n; ++j)
        a.at(i, j) = Scalar::real(a.at(i, j).float_value() - f * a.at(k, j).float_value());
      rhs[static_cast<size_t>(i)] -= f * rhs[static_cast<size_t>(k)];
    }
  }
  std::vector<Scalar> x(static_cast<size_t>(n), Scalar::real(0.0));
  for (int i = n - 1; i >= 0; --i) {
    double s = rhs[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= a.at(i, j).float_value() * x[static_cast<size_t>(j)].float_value();
    x[static_cast<size_t>(i)] = Scalar::real(s / a.at(i, i).float_value());
  }
  return Vector(std::move(x));
}

}  // namespace zonocalc
