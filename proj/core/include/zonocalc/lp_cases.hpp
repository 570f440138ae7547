#pragma once

#include <optional>

#include "zonocalc/check_result.hpp"
#include "zonocalc/linalg.hpp"

namespace zonocalc {

/// Exponent p >= 1 with its Hoelder conjugate q (q = infinity flagged at p=1).
struct LpExponent {
  double p;
  double q;
  bool infinite_q;

  static LpExponent of(double p);
  /// p as an exact integer when it is one (within 1e-12), for rational powers.
  std::optional<long> integral_p() const;
};

/// Gamma-product projection test for the unit ball: evaluates
///   lnG((n+1)/2) + lnG((p+n)/2) - lnG((n+2)/2) - lnG((p+n-1)/2),
/// which is <= 0 exactly when p <= 2. Margin is the negation (>= 0 == holds),
/// grouped so the p = 2 margin is exactly zero.
CheckResult gamma_ball_check(int n, double p);

/// |K oplus_p L| for K, L in complementary coordinate subspaces:
///   G(n1/q+1) G(n2/q+1) / G((n1+n2)/q+1) * |K| * |L|.
/// p = 1 (q = infinity) is rejected: the limiting constant is not defined here.
Scalar lp_direct_sum_volume(const Scalar& vol_k, int n1, const Scalar& vol_l, int n2,
                            const LpExponent& p);

/// Octagon family A = {|x_i| <= 1, |x1 +- x2| <= 2 - a}: compares
/// |A| = 4 - 2a^2 against 4(1-a) + 4a(2-a)^{1-p}. Violated (the projection
/// ratio inequality fails at A) exactly when a < 2 - 2^{1/p}.
/// Exact for rational a and integral p.
CheckResult lp_polygon_counterexample(const Scalar& a, double p);

/// Three-ratio subset-determinant inequality with exponent p: columns split
/// into the first `split` and the rest; each ratio is
///   sum_{|I|=n} |det U_I|^p / sum_{|I|=n-1} |det(U_I | u)|^p
/// (the common ||u||^p factor cancels across the three ratios). direction
/// defaults to e_1. Exact for integral p and rational inputs.
CheckResult lp_determinant_check(const Matrix& columns, int split, double p,
                                 std::optional<Vector> direction = std::nullopt);

/// The 2x3 counterexample matrix [[1,-1,0],[1,1,1]] used by the built-in repro.
Matrix lp_counterexample_matrix(Mode m);

}  // namespace zonocalc
