#pragma once

#include <cstdint>

namespace zonocalc {

/// Counter-based deterministic stream keyed by (seed, trial). Streams for
/// different trials are independent, so campaigns can replay any single trial
/// in isolation and parallelize without coordination.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t trial = 0);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double next_double();
  /// Uniform integer in [lo, hi] inclusive.
  long next_int(long lo, long hi);
  /// Standard normal via Box-Muller (pairs cached deterministically).
  double next_gaussian();

 private:
  std::uint64_t state_;
  double cached_gaussian_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace zonocalc
