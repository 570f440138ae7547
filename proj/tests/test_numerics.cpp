#include <cmath>

#include "doctest.h"
#include "zonocalc/combinatorics.hpp"
#include "zonocalc/linalg.hpp"
#include "zonocalc/rng.hpp"
#include "zonocalc/special_functions.hpp"

using namespace zonocalc;

namespace {

Matrix exact_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.push_back(Scalar::exact(v));
    s.push_back(std::move(row));
  }
  return Matrix::from_rows(s);
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(det(Matrix::identity(3, Mode::Exact)) == Scalar::exact(1));
  CHECK(det(exact_matrix({{1, -1}, {1, 1}})) == Scalar::exact(2));
  CHECK(det(exact_matrix({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})) == Scalar::exact(0));
  CHECK_THROWS_AS(det(Matrix(2, 3, Mode::Exact)), DimensionError);
}

TEST_CASE("determinant dimension cap") {
  CHECK_THROWS_AS(det(Matrix::identity(13, Mode::Exact)), CapError);
}

TEST_CASE("bareiss handles rational entries and pivoting") {
  std::vector<std::vector<Scalar>> rows{
      {Scalar::exact(0), Scalar::exact(1, 2), Scalar::exact(1), Scalar::exact(2)},
      {Scalar::exact(1, 3), Scalar::exact(0), Scalar::exact(1), Scalar::exact(-1)},
      {Scalar::exact(2), Scalar::exact(3), Scalar::exact(0, 1), Scalar::exact(1, 7)},
      {Scalar::exact(5), Scalar::exact(-1, 2), Scalar::exact(1), Scalar::exact(0)}};
  Matrix m = Matrix::from_rows(rows);
  // Laplace-expansion oracle on the first row, computed with the 3x3 cofactor path.
  Scalar expected = Scalar::exact(0);
  int sign = 1;
  for (int j = 0; j < 4; ++j) {
    std::vector<std::vector<Scalar>> minor;
    for (int i = 1; i < 4; ++i) {
      std::vector<Scalar> r;
      for (int k = 0; k < 4; ++k)
        if (k != j) r.push_back(m.at(i, k));
      minor.push_back(std::move(r));
    }
    Scalar term = m.at(0, j) * det(Matrix::from_rows(minor));
    expected += sign > 0 ? term : -term;
    sign = -sign;
  }
  CHECK(det(m) == expected);
}

TEST_CASE("det is alternating: swapping two rows flips the sign exactly") {
  RngStream rng(11, 0);
  for (int trial = 0; trial < 50; ++trial) {
    int n = static_cast<int>(rng.next_int(2, 5));
    std::vector<std::vector<Scalar>> rows;
    for (int i = 0; i < n; ++i) {
      std::vector<Scalar> r;
      for (int j = 0; j < n; ++j) r.push_back(Scalar::exact(rng.next_int(-10, 10)));
      rows.push_back(std::move(r));
    }
    Matrix m = Matrix::from_rows(rows);
    int a = static_cast<int>(rng.next_int(0, n - 1));
    int b = static_cast<int>(rng.next_int(0, n - 1));
    if (a == b) continue;
    std::swap(rows[a], rows[b]);
    CHECK(det(Matrix::from_rows(rows)) == -det(m));
  }
}

TEST_CASE("exact and float determinants agree to 1e-9 relative") {
  RngStream rng(12, 0);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng.next_int(1, 6));
    std::vector<std::vector<Scalar>> rows;
    for (int i = 0; i < n; ++i) {
      std::vector<Scalar> r;
      for (int j = 0; j < n; ++j) r.push_back(Scalar::exact(rng.next_int(-10, 10)));
      rows.push_back(std::move(r));
    }
    Matrix m = Matrix::from_rows(rows);
    double de = det(m).to_double();
    double df = det(m.to_float()).float_value();
    CHECK(std::fabs(de - df) <= 1e-9 * std::max(1.0, std::fabs(de)));
  }
}

TEST_CASE("gram_det_sqrt examples") {
  Vector e1 = Vector::unit(3, 0, Mode::Exact), e2 = Vector::unit(3, 1, Mode::Exact);
  std::vector<Vector> pair{e1, e2};
  CHECK(gram_det_sqrt(pair).float_value() == doctest::Approx(1.0).epsilon(1e-14));
  std::vector<Vector> single{Vector::lattice({1, 1, 0})};
  CHECK(gram_det_sqrt(single).float_value() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  std::vector<Vector> repeated{e1, e1};
  CHECK(gram_det_sqrt(repeated).float_value() == 0.0);
}

TEST_CASE("gram_det_sqrt squared equals the gram determinant") {
  RngStream rng(13, 0);
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(rng.next_int(2, 5));
    int k = static_cast<int>(rng.next_int(1, n));
    std::vector<Vector> vs;
    for (int i = 0; i < k; ++i) {
      std::vector<Scalar> x;
      for (int j = 0; j < n; ++j) x.push_back(Scalar::exact(rng.next_int(-5, 5)));
      vs.push_back(Vector(std::move(x)));
    }
    Matrix g(k, k, Mode::Exact);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) g.at(i, j) = dot(vs[i], vs[j]);
    double dg = det(g).to_double();
    double s = gram_det_sqrt(vs).float_value();
    CHECK(std::fabs(s * s - dg) <= 1e-12 * std::max(1.0, std::fabs(dg)));
  }
}

TEST_CASE("combinations enumerate lexicographically without materializing") {
  std::vector<std::vector<int>> got;
  for (CombinationIter it(3, 2); !it.done(); it.next()) got.push_back(it.current());
  CHECK(got == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

  int count_empty = 0;
  for (CombinationIter it(4, 0); !it.done(); it.next()) ++count_empty;
  CHECK(count_empty == 1);

  // Pascal-triangle oracle for C(8,3).
  long pascal[9][9] = {};
  for (int i = 0; i <= 8; ++i) {
    pascal[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      pascal[i][j] = pascal[i - 1][j - 1] + (j <= i - 1 ? pascal[i - 1][j] : 0);
  }
  int count = 0;
  for (CombinationIter it(8, 3); !it.done(); it.next()) ++count;
  CHECK(count == pascal[8][3]);
  CHECK(count == 56);
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(24, 12) == 2704156);
}

TEST_CASE("ball volumes and ln_gamma") {
  CHECK(ball_volume(2).float_value() == doctest::Approx(M_PI).epsilon(1e-14));
  CHECK(ball_volume(3).float_value() == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));
  CHECK(ball_volume(0).float_value() == 1.0);
  CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));
  CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  // recursion Gamma(x+1) = x Gamma(x) in log form
  for (double x : {0.3, 1.7, 4.2, 9.9})
    CHECK(ln_gamma(x + 1.0) - ln_gamma(x) == doctest::Approx(std::log(x)).epsilon(1e-12));
  CHECK_THROWS_AS(ln_gamma(0.0), Error);
}

TEST_CASE("ball volume recursion |B^n| = (2 pi / n)|B^{n-2}|") {
  for (int n = 2; n <= 12; ++n) {
    double lhs = ball_volume(n).float_value();
    double rhs = (2.0 * M_PI / n) * ball_volume(n - 2).float_value();
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * lhs);
  }
}

TEST_CASE("exact inverse and solve") {
  Matrix m = exact_matrix({{2, 1}, {1, 1}});
  Matrix inv = inverse_exact(m);
  Matrix prod = m * inv;
  CHECK(prod.at(0, 0) == Scalar::exact(1));
  CHECK(prod.at(0, 1) == Scalar::exact(0));
  Vector x = solve(m, Vector::lattice({3, 2}));
  CHECK(x[0] == Scalar::exact(1));
  CHECK(x[1] == Scalar::exact(1));
  CHECK_THROWS_AS(inverse_exact(exact_matrix({{1, 2}, {2, 4}})), DegenerateError);
}

TEST_CASE("rank") {
  std::vector<Vector> vs{Vector::lattice({1, 0, 0}), Vector::lattice({0, 1, 0}),
                         Vector::lattice({1, 1, 0})};
  CHECK(rank(vs) == 2);
  vs.push_back(Vector::lattice({0, 0, 2}));
  CHECK(rank(vs) == 3);
}
