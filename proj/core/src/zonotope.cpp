#include "zonocalc/zonotope.hpp"

#include <algorithm>
#include <cmath>

#include "zonocalc/combinatorics.hpp"
#include "zonocalc/config.hpp"
#include "zonocalc/special_functions.hpp"

namespace zonocalc {

namespace {

void check_caps(int dim, int gens) {
  if (dim < 1 || dim > config::kMaxDim) throw CapError("zonotope dimension cap exceeded");
  if (gens > config::kMaxGeneratorsHard) throw CapError("zonotope generator cap exceeded");
}

void check_subset_cap(int m, int k) {
  if (binomial(m, k) > config::max_subsets())
    throw CapError("subset enumeration cap exceeded (see ZONOCALC_MAX_SUBSETS)");
}

/// Index of the coordinate axis the vector lies on, or nullopt.
std::optional<int> axis_of(const Vector& v) {
  int axis = -1;
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (axis >= 0) return std::nullopt;
    axis = i;
  }
  if (axis < 0) return std::nullopt;
  return axis;
}

}  // namespace

Zonotope::Zonotope(int dim, std::vector<Vector> generators, Mode mode)
    : dim_(dim), gens_(std::move(generators)), mode_(mode) {
  check_caps(dim, static_cast<int>(gens_.size()));
  for (const Vector& g : gens_) {
    if (g.dim() != dim) throw DimensionError("generator dimension mismatch");
    if (g.mode() != mode) throw ModeError("generator mode mismatch");
  }
}

Zonotope Zonotope::cube(int dim, Mode m) {
  std::vector<Vector> gens;
  for (int i = 0; i < dim; ++i) gens.push_back(Vector::unit(dim, i, m));
  return Zonotope(dim, std::move(gens), m);
}

Zonotope Zonotope::segment(const Vector& u) { return Zonotope(u.dim(), {u}, u.mode()); }

Zonotope Zonotope::point(int dim, Mode m) { return Zonotope(dim, {}, m); }

Zonotope Zonotope::to_float() const {
  std::vector<Vector> gens;
  gens.reserve(gens_.size());
  for (const Vector& g : gens_) gens.push_back(g.to_float());
  return Zonotope(dim_, std::move(gens), Mode::Float);
}

Zonotope Zonotope::canonicalized() const {
  std::vector<Vector> gens = gens_;
  std::sort(gens.begin(), gens.end(), [](const Vector& a, const Vector& b) {
    for (int i = 0; i < a.dim(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  });
  return Zonotope(dim_, std::move(gens), mode_);
}

Zonotope minkowski_sum(const Zonotope& a, const Zonotope& b) {
  if (a.dim() != b.dim()) throw DimensionError("minkowski_sum: dim mismatch");
  if (a.mode() != b.mode()) throw ModeError("minkowski_sum: mode mismatch");
  std::vector<Vector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Zonotope(a.dim(), std::move(gens), a.mode());
}

Scalar volume(const Zonotope& z) {
  const int n = z.dim();
  const int m = z.num_generators();
  if (m < n) return Scalar::zero(z.mode());
  check_subset_cap(m, n);
  Scalar total = Scalar::zero(z.mode());
  std::vector<Vector> cols;
  for (CombinationIter it(m, n); !it.done(); it.next()) {
    cols.clear();
    for (int i : it.current()) cols.push_back(z.generator(i));
    total += abs(det_of_columns(cols));
  }
  return total;
}

Zonotope apply_linear(const Matrix& t, const Zonotope& z) {
  if (t.cols() != z.dim()) throw DimensionError("apply_linear: shape mismatch");
  if (t.mode() != z.mode()) throw ModeError("apply_linear: mode mismatch");
  std::vector<Vector> gens;
  gens.reserve(static_cast<size_t>(z.num_generators()));
  for (const Vector& g : z.generators()) gens.push_back(t.apply(g));
  return Zonotope(t.rows(), std::move(gens), z.mode());
}

namespace {

void check_projection_basis(int dim, Mode mode, std::span<const Vector> basis) {
  if (basis.empty()) throw DimensionError("projection: empty basis");
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

Vector project_vector(const Vector& v, std::span<const Vector> basis) {
  Vector r = v;
  for (const Vector& b : basis) {
    Scalar c = dot(r, b) / norm_sq(b);
    r = r - c * b;
  }
  return r;
}

}  // namespace

Zonotope project(const Zonotope& z, std::span<const Vector> basis) {
  check_projection_basis(z.dim(), z.mode(), basis);
  std::vector<Vector> gens;
  gens.reserve(static_cast<size_t>(z.num_generators()));
  for (const Vector& g : z.generators()) gens.push_back(project_vector(g, basis));
  return Zonotope(z.dim(), std::move(gens), z.mode());
}

Scalar projection_det_sum(const Zonotope& z, std::span<const Vector> basis) {
  check_projection_basis(z.dim(), z.mode(), basis);
  const int n = z.dim();
  const int r = static_cast<int>(basis.size());
  const int k = n - r;
  if (k < 0) throw DimensionError("projection basis larger than dim");
  const int m = z.num_generators();
  if (m < k) return Scalar::zero(z.mode());
  check_subset_cap(m, k);
  Scalar total = Scalar::zero(z.mode());
  std::vector<Vector> cols;
  for (CombinationIter it(m, k); !it.done(); it.next()) {
    cols.clear();
    for (int i : it.current()) cols.push_back(z.generator(i));
    for (const Vector& b : basis) cols.push_back(b);
    total += abs(det_of_columns(cols));
  }
  return total;
}

Scalar projection_volume(const Zonotope& z, std::span<const Vector> basis) {
  check_projection_basis(z.dim(), z.mode(), basis);
  const int n = z.dim();
  const int r = static_cast<int>(basis.size());
  if (n - r == 0) return Scalar::zero(z.mode());  // point has 0-dim volume... by convention 0

  // Coordinate-axis basis: drop coordinates, stays exact in Exact mode.
  bool coordinate = true;
  for (const Vector& b : basis)
    if (!axis_of(b)) {
      coordinate = false;
      break;
    }
  if (coordinate) {
    Scalar sum = projection_det_sum(z, basis);
    Scalar scale = Scalar::one(z.mode());
    for (const Vector& b : basis) scale *= abs(b[*axis_of(b)]);
    return sum / scale;
  }

  Scalar sum = projection_det_sum(z, basis);
  double denom = 1.0;
  for (const Vector& b : basis) denom *= norm(b);
  return Scalar::real(sum.to_double() / denom);
}

Scalar mixed_volume(std::span<const Zonotope> slots) {
  if (slots.empty()) throw DimensionError("mixed_volume: no slots");
  const int n = slots[0].dim();
  if (static_cast<int>(slots.size()) != n)
    throw DimensionError("mixed_volume: need exactly n bodies in R^n");
  const Mode mode = slots[0].mode();
  std::uint64_t products = 1;
  for (const Zonotope& s : slots) {
    if (s.dim() != n) throw DimensionError("mixed_volume: dim mismatch");
    if (s.mode() != mode) throw ModeError("mixed_volume: mode mismatch");
    if (s.num_generators() == 0) return Scalar::zero(mode);
    products *= static_cast<std::uint64_t>(s.num_generators());
    if (products > config::kMaxMixedVolumeProducts)
      throw CapError("mixed_volume: product enumeration cap exceeded");
  }

  Scalar total = Scalar::zero(mode);
  std::vector<int> pick(static_cast<size_t>(n), 0);
  std::vector<Vector> cols;
  for (;;) {
    cols.clear();
    for (int j = 0; j < n; ++j) cols.push_back(slots[static_cast<size_t>(j)].generator(pick[static_cast<size_t>(j)]));
    total += abs(det_of_columns(cols));
    int j = n - 1;
    while (j >= 0 && pick[static_cast<size_t>(j)] + 1 == slots[static_cast<size_t>(j)].num_generators()) {
      pick[static_cast<size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++pick[static_cast<size_t>(j)];
  }
  Scalar fact = Scalar::one(mode);
  for (int i = 2; i <= n; ++i)
    fact *= (mode == Mode::Exact ? Scalar::exact(i) : Scalar::real(i));
  return total / fact;
}

Scalar surface_area(const Zonotope& z) { return surface_area_intrinsic(z, z.dim()); }

Scalar surface_area_intrinsic(const Zonotope& z, int k) {
  if (k < 1 || k > z.dim()) throw DimensionError("surface_area: bad intrinsic dimension");
  const int m = z.num_generators();
  if (m < k - 1) return Scalar::real(0.0);
  check_subset_cap(m, k - 1);
  double total = 0.0;
  std::vector<Vector> sub;
  for (CombinationIter it(m, k - 1); !it.done(); it.next()) {
    sub.clear();
    for (int i : it.current()) sub.push_back(z.generator(i));
    total += gram_det_sqrt(sub).float_value();
  }
  return Scalar::real(2.0 * total);
}

SteinerPoly steiner3(const Zonotope& z) {
  if (z.dim() != 3) throw DimensionError("steiner3 requires dim 3");
  double c0 = volume(z).to_double();
  double c1 = surface_area(z).to_double();
  double gen_lengths = 0.0;
  for (const Vector& g : z.generators()) gen_lengths += norm(g);
  double c2 = M_PI * gen_lengths;
  double c3 = ball_volume(3).to_double();
  return SteinerPoly({Scalar::real(c0), Scalar::real(c1), Scalar::real(c2), Scalar::real(c3)});
}

Parallelotope::Parallelotope(Vector base, std::vector<Vector> edges)
    : base_(std::move(base)), edges_(std::move(edges)) {
  const int n = base_.dim();
  if (static_cast<int>(edges_.size()) != n)
    throw DimensionError("parallelotope needs exactly n edges");
  for (const Vector& e : edges_) {
    if (e.dim() != n) throw DimensionError("parallelotope edge dim mismatch");
    if (e.mode() != base_.mode()) throw ModeError("parallelotope edge mode mismatch");
  }
  if (det_of_columns(edges_).is_zero())
    throw DegenerateError("parallelotope edges must be linearly independent");
}

Zonotope Parallelotope::as_zonotope() const { return Zonotope(dim(), edges_, mode()); }

Scalar parallelotope_projection_volume(const Parallelotope& p, std::span<const int> dropped) {
  const int n = p.dim();
  const int m = static_cast<int>(dropped.size());
  if (m < 1 || m >= n) throw DimensionError("need 1 <= #dropped < n coordinates");
  for (int d : dropped)
    if (d < 0 || d >= n) throw DimensionError("dropped coordinate out of range");

  const Matrix t = Matrix::from_columns(p.edges());
  Scalar abs_det_t = abs(det(t));
  const Matrix w = p.mode() == Mode::Exact
                       ? inverse_exact(t)
                       : [&] {
                           // Column-wise float inverse via solves.
                           Matrix inv(n, n, Mode::Float);
                           for (int j = 0; j < n; ++j) {
                             Vector col = solve(t, Vector::unit(n, j, Mode::Float));
                             for (int i = 0; i < n; ++i) inv.at(i, j) = col[i];
                           }
                           return inv;
                         }();

  // w_i = T^{-1} e_{dropped[i]}; sum over coordinate m-subsets J of
  // |det of the J-rows of [w_1 ... w_m]|.
  std::vector<Vector> wcols;
  for (int d : dropped) wcols.push_back(w.column(d));
  Scalar sum = Scalar::zero(p.mode());
  for (CombinationIter it(n, m); !it.done(); it.next()) {
    Matrix sub(m, m, p.mode());
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) sub.at(r, c) = wcols[static_cast<size_t>(c)][it.current()[static_cast<size_t>(r)]];
    sum += abs(det(sub));
  }
  return abs_det_t * sum;
}

}  // namespace zonocalc
