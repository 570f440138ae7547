#include "zonocalc/lp_cases.hpp"

#include <cmath>

#include "zonocalc/combinatorics.hpp"
#include "zonocalc/config.hpp"
#include "zonocalc/json_io.hpp"
#include "zonocalc/special_functions.hpp"

namespace zonocalc {

LpExponent LpExponent::of(double p) {
  if (!(p >= 1.0)) throw Error("LpExponent requires p >= 1");
  LpExponent e;
  e.p = p;
  if (p == 1.0) {
    e.q = std::numeric_limits<double>::infinity();
    e.infinite_q = true;
  } else {
    e.q = p / (p - 1.0);
    e.infinite_q = false;
    double resid = std::fabs(1.0 / e.p + 1.0 / e.q - 1.0);
    if (resid > 1e-12) throw Error("conjugate exponent identity failed");
  }
  return e;
}

std::optional<long> LpExponent::integral_p() const {
  double r = std::round(p);
  if (std::fabs(p - r) <= 1e-12 && r >= 1.0) return static_cast<long>(r);
  return std::nullopt;
}

CheckResult gamma_ball_check(int n, double p) {
  if (n < 2) throw DimensionError("gamma_ball_check: n >= 2");
  if (!(p >= 1.0)) throw Error("gamma_ball_check: p >= 1");
  // Grouped as two differences so p = 2 yields a margin of exactly zero.
  double lhs_part = ln_gamma((p + n) / 2.0) - ln_gamma((p + n - 1) / 2.0);
  double rhs_part = ln_gamma((n + 2) / 2.0) - ln_gamma((n + 1) / 2.0);
  nlohmann::json w{{"instance", {{"n", n}, {"p", p}}}};
  return make_check_result("gamma.ball", Scalar::real(lhs_part), Scalar::real(rhs_part),
                           1e-14 * (std::fabs(lhs_part) + std::fabs(rhs_part) + 1.0), std::move(w));
}

Scalar lp_direct_sum_volume(const Scalar& vol_k, int n1, const Scalar& vol_l, int n2,
                            const LpExponent& p) {
  if (n1 < 1 || n2 < 1) throw DimensionError("lp_direct_sum_volume: n1, n2 >= 1");
  if (p.infinite_q)
    throw DegenerateError("lp_direct_sum_volume: q = infinity (p = 1) has no defined constant here");
  double c = std::exp(ln_gamma(n1 / p.q + 1.0) + ln_gamma(n2 / p.q + 1.0) -
                      ln_gamma((n1 + n2) / p.q + 1.0));
  return Scalar::real(c * vol_k.to_double() * vol_l.to_double());
}

CheckResult lp_polygon_counterexample(const Scalar& a, double p) {
  double ad = a.to_double();
  if (!(ad > 0.0 && ad < 1.0)) throw Error("lp_polygon_counterexample: a in (0,1)");
  if (!(p > 1.0)) throw Error("lp_polygon_counterexample: p > 1");

  LpExponent e = LpExponent::of(p);
  auto ip = e.integral_p();
  nlohmann::json w{{"instance", {{"a", a.str()}, {"p", p}}}};

  if (ip && a.is_exact()) {
    // |A| = 4 - 2a^2 vs 4(1-a) + 4a (2-a)^(1-p), all rational.
    Scalar four = Scalar::exact(4), two = Scalar::exact(2);
    Scalar lhs = four - two * a * a;
    Scalar rhs = four * (Scalar::exact(1) - a) + four * a * pow_int(two - a, 1 - *ip);
    return make_check_result("lp.polygon", lhs, rhs, 0.0, std::move(w));
  }
  double lhs = 4.0 - 2.0 * ad * ad;
  double rhs = 4.0 * (1.0 - ad) + 4.0 * ad * std::pow(2.0 - ad, 1.0 - p);
  return make_check_result("lp.polygon", Scalar::real(lhs), Scalar::real(rhs),
                           relative_tolerance(1e-12, lhs, rhs), std::move(w));
}

namespace {

/// sum |det|^p over k-subsets of the columns, with `extra` appended to each
/// determinant. Exact for integral p when the matrix is exact.
Scalar abs_det_pow_sum(const Matrix& columns, const std::vector<int>& subset_pool, int k,
                       const std::vector<Vector>& extra, double p, std::optional<long> ip) {
  const bool exact = columns.mode() == Mode::Exact && ip.has_value();
  Scalar total = exact ? Scalar::exact(0) : Scalar::real(0.0);
  const int pool = static_cast<int>(subset_pool.size());
  if (k < 0 || k > pool) return total;
  if (binomial(pool, k) > config::max_subsets()) throw CapError("subset enumeration cap exceeded");
  std::vector<Vector> cols;
  for (CombinationIter it(pool, k); !it.done(); it.next()) {
    cols.clear();
    for (int i : it.current()) cols.push_back(columns.column(subset_pool[static_cast<size_t>(i)]));
    for (const Vector& v : extra) cols.push_back(v);
    Scalar d = abs(det_of_columns(cols));
    if (exact)
      total += pow_int(d, *ip);
    else
      total += Scalar::real(std::pow(d.to_double(), p));
  }
  return total;
}

}  // namespace

Matrix lp_counterexample_matrix(Mode m) {
  auto s = [&](long v) { return m == Mode::Exact ? Scalar::exact(v) : Scalar::real(static_cast<double>(v)); };
  return Matrix::from_rows({{s(1), s(-1), s(0)}, {s(1), s(1), s(1)}});
}

CheckResult lp_determinant_check(const Matrix& columns, int split, double p,
                                 std::optional<Vector> direction) {
  const int n = columns.rows();
  const int total_cols = columns.cols();
  if (split < 0 || split > total_cols) throw Error("lp_determinant_check: bad split");
  if (!(p >= 1.0)) throw Error("lp_determinant_check: p >= 1");

  Vector u = direction ? *direction : Vector::unit(n, 0, columns.mode());
  if (u.dim() != n) throw DimensionError("lp_determinant_check: direction dim mismatch");
  if (u.mode() != columns.mode()) throw ModeError("lp_determinant_check: direction mode mismatch");

  auto ip = LpExponent::of(p).integral_p();
  const bool exact = columns.mode() == Mode::Exact && ip.has_value();

  std::vector<int> first, second, all;
  for (int i = 0; i < total_cols; ++i) {
    all.push_back(i);
    (i < split ? first : second).push_back(i);
  }
  std::vector<Vector> dir{u};

  nlohmann::json jcols = nlohmann::json::array();
  for (int i = 0; i < total_cols; ++i) jcols.push_back(vector_to_json(columns.column(i)));
  nlohmann::json w{{"instance", {{"columns", std::move(jcols)},
                                 {"split", split},
                                 {"p", p},
                                 {"direction", vector_to_json(u)}}}};

  auto ratio = [&](const std::vector<int>& pool, Scalar* out) -> bool {
    Scalar num = abs_det_pow_sum(columns, pool, n, {}, p, exact ? ip : std::nullopt);
    Scalar den = abs_det_pow_sum(columns, pool, n - 1, dir, p, exact ? ip : std::nullopt);
    if (den.is_zero()) return false;
    *out = num / den;
    return true;
  };

  Scalar ra = exact ? Scalar::exact(0) : Scalar::real(0.0);
  Scalar rb = ra, rfull = ra;
  if (!ratio(first, &ra) || !ratio(second, &rb) || !ratio(all, &rfull))
    return make_inconclusive("lp.det", "zero projected determinant sum", std::move(w));

  Scalar lhs = ra + rb;
  double tol = exact ? 0.0 : relative_tolerance(1e-9, lhs.to_double(), rfull.to_double());
  return make_check_result("lp.det", lhs, rfull, tol, std::move(w));
}

}  // namespace zonocalc
