#include <benchmark/benchmark.h>

#include "zonocalc/linalg.hpp"
#include "zonocalc/rng.hpp"

using namespace zonocalc;

namespace {

Matrix random_matrix(int n, Mode mode, std::uint64_t seed) {
  RngStream rng(seed, 0);
  Matrix m(n, n, mode);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long v = rng.next_int(-10, 10);
      m.at(i, j) = mode == Mode::Exact ? Scalar::exact(v) : Scalar::real(static_cast<double>(v));
    }
  return m;
}

}  // namespace

static void DetExact(benchmark::State& state) {
  Matrix m = random_matrix(static_cast<int>(state.range(0)), Mode::Exact, 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(DetExact)->DenseRange(2, 10, 2)->Complexity();

static void DetFloat(benchmark::State& state) {
  Matrix m = random_matrix(static_cast<int>(state.range(0)), Mode::Float, 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(DetFloat)->DenseRange(2, 10, 2)->Complexity();

static void GramDetSqrt(benchmark::State& state) {
  RngStream rng(2, 0);
  std::vector<Vector> vs;
  for (int i = 0; i < state.range(0); ++i) {
    std::vector<Scalar> x;
    for (int j = 0; j < 6; ++j) x.push_back(Scalar::real(rng.next_gaussian()));
    vs.push_back(Vector(std::move(x)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(gram_det_sqrt(vs));
}
BENCHMARK(GramDetSqrt)->DenseRange(1, 5, 1);
