#include "zonocalc/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace zonocalc::config {

namespace {

std::uint64_t initial_max_subsets() {
  if (const char* env = std::getenv("ZONOCALC_MAX_SUBSETS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
  }
  return kDefaultMaxSubsets;
}

std::atomic<std::uint64_t> g_max_subsets{initial_max_subsets()};

}  // namespace

std::uint64_t max_subsets() { return g_max_subsets.load(std::memory_order_relaxed); }

void set_max_subsets(std::uint64_t value) {
  g_max_subsets.store(value == 0 ? kDefaultMaxSubsets : value, std::memory_order_relaxed);
}

}  // namespace zonocalc::config
