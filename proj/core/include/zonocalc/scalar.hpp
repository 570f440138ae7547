#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "zonocalc/error.hpp"

namespace zonocalc {

enum class Mode { Exact, Float };

const char* to_string(Mode m);

/// Dual-mode number carried through all geometry: an arbitrary-precision
/// rational (Exact) or an IEEE-754 double (Float).
///
/// Binary operations require both operands in the same mode; crossing modes
/// throws ModeError. Use to_float() / to_exact() to convert explicitly.
/// Exact values are always stored reduced with positive denominator.
class Scalar {
 public:
  Scalar() : rep_(0.0) {}

  static Scalar exact(long num, long den = 1);
  static Scalar exact(mpq_class q);
  static Scalar real(double x) { return Scalar(x); }
  static Scalar zero(Mode m) { return m == Mode::Exact ? exact(0) : real(0.0); }
  static Scalar one(Mode m) { return m == Mode::Exact ? exact(1) : real(1.0); }

  Mode mode() const { return is_exact() ? Mode::Exact : Mode::Float; }
  bool is_exact() const { return std::holds_alternative<mpq_class>(rep_); }

  const mpq_class& rational() const;
  double float_value() const;

  /// Numeric value in either mode (rounds Exact values).
  double to_double() const;
  Scalar to_float() const { return Scalar(to_double()); }
  /// Float -> the exact dyadic rational equal to the double. Exact -> copy.
  Scalar to_exact() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  int sgn() const;
  bool is_zero() const { return sgn() == 0; }

  bool operator==(const Scalar& o) const { return cmp(o) == 0; }
  bool operator!=(const Scalar& o) const { return cmp(o) != 0; }
  bool operator<(const Scalar& o) const { return cmp(o) < 0; }
  bool operator<=(const Scalar& o) const { return cmp(o) <= 0; }
  bool operator>(const Scalar& o) const { return cmp(o) > 0; }
  bool operator>=(const Scalar& o) const { return cmp(o) >= 0; }

  /// "p/q" for exact values, %.17g for floats.
  std::string str() const;

 private:
  explicit Scalar(double x) : rep_(x) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  int cmp(const Scalar& o) const;
  void check_same_mode(const Scalar& o) const;

  std::variant<double, mpq_class> rep_;
};

Scalar abs(const Scalar& s);
/// s^k for integer k >= 0 (k < 0 requires s != 0).
Scalar pow_int(const Scalar& s, long k);
/// sqrt as a Float scalar; requires s >= 0 (works in either input mode).
Scalar sqrt_to_float(const Scalar& s);

}  // namespace zonocalc
