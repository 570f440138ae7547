#include <benchmark/benchmark.h>

#include "zonocalc/checks.hpp"
#include "zonocalc/zonotope.hpp"

using namespace zonocalc;

namespace {

Zonotope bench_zonotope(int dim, int gens, Mode mode, std::uint64_t seed) {
  RngStream rng(seed, 0);
  InstanceConfig cfg;
  cfg.dim = dim;
  cfg.gens_min = gens;
  cfg.gens_max = gens;
  Zonotope z = random_zonotope(rng, cfg);
  return mode == Mode::Float ? z.to_float() : z;
}

}  // namespace

static void VolumeExact(benchmark::State& state) {
  Zonotope z = bench_zonotope(3, static_cast<int>(state.range(0)), Mode::Exact, 3);
  for (auto _ : state) benchmark::DoNotOptimize(volume(z));
}
BENCHMARK(VolumeExact)->DenseRange(4, 20, 4);

static void VolumeFloat(benchmark::State& state) {
  Zonotope z = bench_zonotope(3, static_cast<int>(state.range(0)), Mode::Float, 3);
  for (auto _ : state) benchmark::DoNotOptimize(volume(z));
}
BENCHMARK(VolumeFloat)->DenseRange(4, 20, 4);

static void MixedVolume(benchmark::State& state) {
  Zonotope a = bench_zonotope(3, static_cast<int>(state.range(0)), Mode::Exact, 4);
  Zonotope b = bench_zonotope(3, static_cast<int>(state.range(0)), Mode::Exact, 5);
  Zonotope c = bench_zonotope(3, static_cast<int>(state.range(0)), Mode::Exact, 6);
  std::vector<Zonotope> slots{a, b, c};
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume(slots));
}
BENCHMARK(MixedVolume)->DenseRange(3, 9, 3);

static void ProjectionVolume(benchmark::State& state) {
  Zonotope z = bench_zonotope(3, static_cast<int>(state.range(0)), Mode::Exact, 7);
  std::vector<Vector> basis{Vector::unit(3, 0, Mode::Exact)};
  for (auto _ : state) benchmark::DoNotOptimize(projection_volume(z, basis));
}
BENCHMARK(ProjectionVolume)->DenseRange(4, 20, 4);

static void SurfaceArea(benchmark::State& state) {
  Zonotope z = bench_zonotope(3, static_cast<int>(state.range(0)), Mode::Float, 8);
  for (auto _ : state) benchmark::DoNotOptimize(surface_area(z));
}
BENCHMARK(SurfaceArea)->DenseRange(4, 20, 4);
