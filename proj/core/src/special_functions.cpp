#include "zonocalc/special_functions.hpp"

#include <cmath>

#include "zonocalc/error.hpp"

namespace zonocalc {

double ln_gamma(double x) {
  if (!(x > 0.0)) throw Error("ln_gamma requires x > 0");
  return std::lgamma(x);
}

Scalar ball_volume(int n) {
  if (n < 0) throw Error("ball_volume: n >= 0");
  if (n == 0) return Scalar::real(1.0);
  double half = 0.5 * static_cast<double>(n);
  return Scalar::real(std::exp(half * std::log(M_PI) - ln_gamma(half + 1.0)));
}

}  // namespace zonocalc
