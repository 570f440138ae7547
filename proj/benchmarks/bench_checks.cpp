#include <benchmark/benchmark.h>

#include "zonocalc/search.hpp"

using namespace zonocalc;

static void CheckTrial(benchmark::State& state, const char* id, Mode mode) {
  const CheckInfo& info = require_check(id);
  InstanceConfig cfg;
  cfg.dim = 3;
  cfg.gens_min = 4;
  cfg.gens_max = 6;
  cfg.mode = mode;
  if (mode == Mode::Float) cfg.dist = InstanceConfig::Dist::Gaussian;
  std::uint64_t trial = 0;
  for (auto _ : state) {
    RngStream rng(42, trial++);
    benchmark::DoNotOptimize(info.evaluate(info.generate(rng, cfg)));
  }
}

BENCHMARK_CAPTURE(CheckTrial, hope_exact, "hope.r3", Mode::Exact);
BENCHMARK_CAPTURE(CheckTrial, logsubmod_exact, "logsubmod.zonotope", Mode::Exact);
BENCHMARK_CAPTURE(CheckTrial, courtade_exact, "courtade.2d", Mode::Exact);
BENCHMARK_CAPTURE(CheckTrial, l2_strong, "l2.strong", Mode::Exact);
BENCHMARK_CAPTURE(CheckTrial, zonequiv_exact, "zonequiv.r3", Mode::Exact);

static void CampaignHope(benchmark::State& state) {
  Campaign c;
  c.check_id = "hope.r3";
  c.trials = static_cast<std::uint64_t>(state.range(0));
  c.seed = 99;
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(c, nullptr));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(CampaignHope)->Arg(100)->Arg(1000);
