#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "zonocalc/scalar.hpp"

namespace zonocalc {

enum class Verdict { Holds, Equality, Violated, Inconclusive };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Uniformly-shaped outcome of a named inequality check. Margin is rhs - lhs
/// in the orientation where margin >= 0 means the inequality holds.
///
/// Exact mode: verdict is the sign of the margin, zero reporting "equality",
/// never "violated". Float mode: |margin| <= tolerance is "inconclusive",
/// never "violated"; an exactly-zero float margin reports "equality".
struct CheckResult {
  std::string check_id;
  Scalar lhs = Scalar::real(0.0);
  Scalar rhs = Scalar::real(0.0);
  Scalar margin = Scalar::real(0.0);
  Mode mode = Mode::Float;
  double tolerance = 0.0;  // absolute; 0 in Exact mode
  Verdict verdict = Verdict::Inconclusive;
  nlohmann::json witness;  // serialized inputs + check-specific details
  std::optional<std::uint64_t> seed;
  std::string note;  // reason for inconclusive verdicts

  /// Exit code contract: 0 holds/equality, 2 violated, 3 inconclusive.
  int exit_code() const;
};

Verdict classify(const Scalar& margin, Mode mode, double tolerance);

/// Builds a result from lhs/rhs with the tie/zero policy applied.
CheckResult make_check_result(std::string check_id, const Scalar& lhs, const Scalar& rhs,
                              double tolerance, nlohmann::json witness);
/// An inconclusive result carrying a reason (degenerate geometry etc.).
CheckResult make_inconclusive(std::string check_id, std::string reason, nlohmann::json witness);

/// Absolute tolerance at relative level `rel` against the magnitudes involved.
double relative_tolerance(double rel, double lhs, double rhs);

}  // namespace zonocalc
