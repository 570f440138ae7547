#pragma once

#include <cstdint>

namespace zonocalc::config {

// Caps keeping worst-case subset enumeration tractable.
inline constexpr int kMaxDim = 12;
// Default generator budget for campaigns; C(24,12) ~ 2.7M subsets.
inline constexpr int kMaxGenerators = 24;
// Hard sanity bound on stored generators. Actual enumeration work is governed
// by max_subsets(), so long fine approximations (disk zonogons) stay legal.
inline constexpr int kMaxGeneratorsHard = 512;
inline constexpr std::uint64_t kDefaultMaxSubsets = 2704156;  // C(24,12)
inline constexpr std::uint64_t kMaxMixedVolumeProducts = 10'000'000;

/// Subset-enumeration cap. Initialized from ZONOCALC_MAX_SUBSETS if set.
std::uint64_t max_subsets();
void set_max_subsets(std::uint64_t value);

}  // namespace zonocalc::config
