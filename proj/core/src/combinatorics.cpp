#include "zonocalc/combinatorics.hpp"

#include "zonocalc/error.hpp"

namespace zonocalc {

std::uint64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(m - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

CombinationIter::CombinationIter(int m, int k) : m_(m), k_(k) {
  if (k < 0 || k > m || m < 0) throw Error("combinations: need 0 <= k <= m");
  idx_.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx_[static_cast<size_t>(i)] = i;
}

void CombinationIter::next() {
  if (k_ == 0) {
    done_ = true;  // exactly one empty subset
    return;
  }
  int i = k_ - 1;
  while (i >= 0 && idx_[static_cast<size_t>(i)] == m_ - k_ + i) --i;
  if (i < 0) {
    done_ = true;
    return;
  }
  ++idx_[static_cast<size_t>(i)];
  for (int j = i + 1; j < k_; ++j) idx_[static_cast<size_t>(j)] = idx_[static_cast<size_t>(j - 1)] + 1;
}

}  // namespace zonocalc
