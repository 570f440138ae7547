#pragma once

#include <complex>
#include <vector>

#include "zonocalc/check_result.hpp"
#include "zonocalc/scalar.hpp"

namespace zonocalc {

/// Polynomial with Scalar coefficients, constant term first, degree <= 12.
class SteinerPoly {
 public:
  explicit SteinerPoly(std::vector<Scalar> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Mode mode() const { return coeffs_[0].mode(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }

  Scalar eval(const Scalar& t) const;
  SteinerPoly derivative() const;
  /// Drops leading (near-)zero coefficients; zero polynomial is rejected.
  SteinerPoly trimmed() const;
  SteinerPoly to_float() const;

 private:
  std::vector<Scalar> coeffs_;
};

enum class RootVerdict { AllReal, NotAllReal, Inconclusive };

struct RootReport {
  RootVerdict verdict;
  /// Distinct real roots, ascending. For the float path these are the real
  /// parts of roots whose imaginary part is inside tolerance.
  std::vector<double> real_roots;
  /// Largest |Im| over computed roots (float path; 0 for the exact path).
  double max_imaginary = 0.0;
};

/// Decides real-rootedness. Exact coefficients: Sturm sequences on the
/// square-free part (definitive). Float coefficients: all complex roots by
/// Durand-Kerner iteration with imaginary-part tolerance 1e-8; verdicts inside
/// the band [1e-8, 1e-6] (relative to root scale) are Inconclusive.
RootReport all_roots_real(const SteinerPoly& p);

/// Number of distinct real roots by Sturm sign-change counting (exact input).
int sturm_distinct_real_roots(const SteinerPoly& p);

/// All complex roots by Durand-Kerner iteration (any input mode).
std::vector<std::complex<double>> complex_roots(const SteinerPoly& p);

/// Steiner polynomial of the flat disk B_2^2 x {0} in R^n, n >= 3:
/// t^{n-2} |B^2| Integral_{B^{n-2}} (1 + t sqrt(1-|x|^2))^2 dx, expanded via
/// the moment formula Integral_{B^d} (1-|x|^2)^{s/2} dx
///   = |B^d| Gamma(d/2+1) Gamma(s/2+1) / Gamma((d+s)/2+1).
SteinerPoly flat_disk_steiner(int n);

/// sqrt-concavity of a degree-2 polynomial with positive coefficients on
/// t >= 0: concave iff the discriminant c1^2 - 4 c0 c2 >= 0, equivalently
/// 2 P(0) P''(0) <= P'(0)^2. Margin is the discriminant.
CheckResult sqrt_concavity_check(const SteinerPoly& p);

/// Quadratic discriminants: c1^2 - 4 c0 c2 for c0 + c1 t + c2 t^2.
Scalar discriminant2(const Scalar& c0, const Scalar& c1, const Scalar& c2);
/// Cubic discriminant of c0 + c1 t + c2 t^2 + c3 t^3 (positive: three distinct
/// real roots; negative: one real root and a complex pair).
Scalar discriminant3(const Scalar& c0, const Scalar& c1, const Scalar& c2, const Scalar& c3);

}  // namespace zonocalc
