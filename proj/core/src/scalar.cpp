#include "zonocalc/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace zonocalc {

const char* to_string(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::exact(mpq_class q) {
  if (q.get_den() == 0) throw Error("rational with zero denominator");
  q.canonicalize();
  return Scalar(std::move(q));
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) throw ModeError("rational() on a Float scalar");
  return std::get<mpq_class>(rep_);
}

double Scalar::float_value() const {
  if (is_exact()) throw ModeError("float_value() on an Exact scalar");
  return std::get<double>(rep_);
}

double Scalar::to_double() const {
  return is_exact() ? std::get<mpq_class>(rep_).get_d() : std::get<double>(rep_);
}

Scalar Scalar::to_exact() const {
  if (is_exact()) return *this;
  double x = std::get<double>(rep_);
  if (!std::isfinite(x)) throw Error("cannot convert non-finite float to exact");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Scalar(std::move(q));
}

void Scalar::check_same_mode(const Scalar& o) const {
  if (is_exact() != o.is_exact())
    throw ModeError("mixed exact/float arithmetic; convert explicitly");
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
  return Scalar(-std::get<double>(rep_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_mode(o);
  if (is_exact())
    std::get<mpq_class>(rep_) += std::get<mpq_class>(o.rep_);
  else
    std::get<double>(rep_) += std::get<double>(o.rep_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_mode(o);
  if (is_exact())
    std::get<mpq_class>(rep_) -= std::get<mpq_class>(o.rep_);
  else
    std::get<double>(rep_) -= std::get<double>(o.rep_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_mode(o);
  if (is_exact())
    std::get<mpq_class>(rep_) *= std::get<mpq_class>(o.rep_);
  else
    std::get<double>(rep_) *= std::get<double>(o.rep_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_mode(o);
  if (o.sgn() == 0 && o.is_exact()) throw Error("exact division by zero");
  if (is_exact())
    std::get<mpq_class>(rep_) /= std::get<mpq_class>(o.rep_);
  else
    std::get<double>(rep_) /= std::get<double>(o.rep_);
  return *this;
}

int Scalar::sgn() const {
  if (is_exact()) return ::sgn(std::get<mpq_class>(rep_));
  double x = std::get<double>(rep_);
  return (x > 0.0) - (x < 0.0);
}

int Scalar::cmp(const Scalar& o) const {
  check_same_mode(o);
  if (is_exact()) return ::cmp(std::get<mpq_class>(rep_), std::get<mpq_class>(o.rep_));
  double a = std::get<double>(rep_), b = std::get<double>(o.rep_);
  return (a > b) - (a < b);
}

std::string Scalar::str() const {
  if (is_exact()) {
    const mpq_class& q = std::get<mpq_class>(rep_);
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(rep_));
  return buf;
}

Scalar abs(const Scalar& s) { return s.sgn() < 0 ? -s : s; }

Scalar pow_int(const Scalar& s, long k) {
  if (k < 0) {
    if (s.is_zero()) throw Error("pow_int: negative power of zero");
    return Scalar::one(s.mode()) / pow_int(s, -k);
  }
  if (s.is_exact()) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), s.rational().get_num().get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(den.get_mpz_t(), s.rational().get_den().get_mpz_t(), static_cast<unsigned long>(k));
    return Scalar::exact(mpq_class(num, den));
  }
  return Scalar::real(std::pow(s.float_value(), static_cast<double>(k)));
}

Scalar sqrt_to_float(const Scalar& s) {
  if (s.sgn() < 0) throw Error("sqrt of negative value");
  return Scalar::real(std::sqrt(s.to_double()));
}

}  // namespace zonocalc
