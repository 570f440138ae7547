#include "zonocalc/check_result.hpp"

#include <cmath>

namespace zonocalc {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Equality: return "equality";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "holds") return Verdict::Holds;
  if (s == "equality") return Verdict::Equality;
  if (s == "violated") return Verdict::Violated;
  if (s == "inconclusive") return Verdict::Inconclusive;
  throw InputError("unknown verdict: " + s);
}

int CheckResult::exit_code() const {
  switch (verdict) {
    case Verdict::Holds:
    case Verdict::Equality: return 0;
    case Verdict::Violated: return 2;
    case Verdict::Inconclusive: return 3;
  }
  return 3;
}

Verdict classify(const Scalar& margin, Mode mode, double tolerance) {
  if (mode == Mode::Exact) {
    int s = margin.sgn();
    return s > 0 ? Verdict::Holds : (s == 0 ? Verdict::Equality : Verdict::Violated);
  }
  double m = margin.to_double();
  if (m == 0.0) return Verdict::Equality;
  if (std::fabs(m) <= tolerance) return Verdict::Inconclusive;
  return m > 0.0 ? Verdict::Holds : Verdict::Violated;
}

CheckResult make_check_result(std::string check_id, const Scalar& lhs, const Scalar& rhs,
                              double tolerance, nlohmann::json witness) {
  CheckResult r;
  r.check_id = std::move(check_id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.mode = lhs.mode();
  r.tolerance = r.mode == Mode::Exact ? 0.0 : tolerance;
  r.verdict = classify(r.margin, r.mode, r.tolerance);
  r.witness = std::move(witness);
  return r;
}

CheckResult make_inconclusive(std::string check_id, std::string reason, nlohmann::json witness) {
  CheckResult r;
  r.check_id = std::move(check_id);
  r.verdict = Verdict::Inconclusive;
  r.note = std::move(reason);
  r.witness = std::move(witness);
  return r;
}

double relative_tolerance(double rel, double lhs, double rhs) {
  double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
  return rel * scale;
}

}  // namespace zonocalc
