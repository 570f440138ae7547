#pragma once

#include "zonocalc/scalar.hpp"

namespace zonocalc {

/// log Gamma(x) for x > 0, relative accuracy better than 1e-12.
double ln_gamma(double x);

/// |B_2^n| = pi^(n/2) / Gamma(n/2 + 1), n >= 0.
Scalar ball_volume(int n);

}  // namespace zonocalc
