#pragma once

#include <ostream>
#include <string>

#include "zonocalc/checks.hpp"

namespace zonocalc {

/// Seeded randomized falsification campaign over one registry check.
struct Campaign {
  std::string check_id;
  InstanceConfig instance;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
  static Campaign from_json(const nlohmann::json& j);
  /// FNV-1a hash of the canonical config JSON, recorded for provenance.
  std::string config_hash() const;
};

struct CampaignSummary {
  std::uint64_t trials = 0;
  std::uint64_t holds = 0;
  std::uint64_t equality = 0;
  std::uint64_t violated = 0;
  std::uint64_t inconclusive = 0;
  /// Trial index and result achieving the minimum margin (inconclusive
  /// results without a margin are excluded).
  std::uint64_t min_margin_trial = 0;
  CheckResult min_margin_result;
  std::string config_hash;

  nlohmann::json to_json() const;
};

/// Runs the campaign. When `records` is non-null, writes one JSON line per
/// trial ({"trial", "result"}) followed by a summary footer line. Output is
/// deterministic: re-running with the same seed is byte-identical, and trial
/// k can be replayed in isolation via RngStream(seed, k).
CampaignSummary run_campaign(const Campaign& c, std::ostream* records = nullptr);

/// Re-evaluates a persisted witness record against the registry; Exact
/// margins reproduce bit-for-bit.
CheckResult replay(const nlohmann::json& record);

/// Built-in counterexample reproductions: "marcus.flat-disk", "lp.det.p3",
/// "lp.polygon", "gamma.threshold", "c3.note".
CheckResult repro(const std::string& case_id);
std::vector<std::string> repro_case_ids();

/// Adds eps-scaled pseudorandom offsets to every generator coordinate
/// (rational offsets in Exact mode, so perturbed bodies stay exact).
Zonotope perturb(const Zonotope& z, double eps, RngStream& rng);

/// Locates the sign change of the gamma.ball margin in p for fixed n by
/// bisection on [1, 4]; the crossing sits at p = 2.
double gamma_threshold_crossing(int n, double tol = 1e-9);

/// Zonogon approximation of the flat disk B_2^2 x {0} in R^3 with m segments
/// of total turning pi (a 2m-gon slab as m grows).
Zonotope flat_disk_zonotope(int m);

}  // namespace zonocalc
