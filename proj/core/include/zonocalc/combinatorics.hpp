#pragma once

#include <cstdint>
#include <vector>

namespace zonocalc {

std::uint64_t binomial(int m, int k);

/// Streaming lexicographic enumeration of all k-subsets of {0,...,m-1}.
/// No materialized list; current() is valid until next() is called.
class CombinationIter {
 public:
  CombinationIter(int m, int k);
  bool done() const { return done_; }
  const std::vector<int>& current() const { return idx_; }
  void next();

 private:
  int m_, k_;
  std::vector<int> idx_;
  bool done_ = false;
};

}  // namespace zonocalc
