#include "zonocalc/search.hpp"

#include <cmath>

#include "zonocalc/json_io.hpp"
#include "zonocalc/lp_cases.hpp"
#include "zonocalc/special_functions.hpp"
#include "zonocalc/steiner.hpp"

namespace zonocalc {

namespace {

const char* dist_name(InstanceConfig::Dist d) {
  switch (d) {
    case InstanceConfig::Dist::IntegerLattice: return "integer-lattice";
    case InstanceConfig::Dist::Gaussian: return "gaussian";
    case InstanceConfig::Dist::SphereUniform: return "sphere-uniform";
    case InstanceConfig::Dist::Flat: return "flat";
    case InstanceConfig::Dist::NearParallel: return "near-parallel";
  }
  return "integer-lattice";
}

InstanceConfig::Dist dist_from_name(const std::string& s) {
  if (s == "integer-lattice") return InstanceConfig::Dist::IntegerLattice;
  if (s == "gaussian") return InstanceConfig::Dist::Gaussian;
  if (s == "sphere-uniform") return InstanceConfig::Dist::SphereUniform;
  if (s == "flat") return InstanceConfig::Dist::Flat;
  if (s == "near-parallel") return InstanceConfig::Dist::NearParallel;
  throw InputError("unknown generator distribution: " + s);
}

}  // namespace

nlohmann::json Campaign::to_json() const {
  return nlohmann::json{{"check_id", check_id},
                        {"dim", instance.dim},
                        {"gens_min", instance.gens_min},
                        {"gens_max", instance.gens_max},
                        {"distribution", dist_name(instance.dist)},
                        {"lattice_range", instance.lattice_range},
                        {"flat_codim", instance.flat_codim},
                        {"near_parallel_eps", instance.near_parallel_eps},
                        {"mode", to_string(instance.mode)},
                        {"p", instance.p},
                        {"trials", trials},
                        {"seed", seed}};
}

Campaign Campaign::from_json(const nlohmann::json& j) {
  Campaign c;
  c.check_id = j.at("check_id").get<std::string>();
  c.instance.dim = j.value("dim", 3);
  c.instance.gens_min = j.value("gens_min", 3);
  c.instance.gens_max = j.value("gens_max", 6);
  c.instance.dist = dist_from_name(j.value("distribution", std::string("integer-lattice")));
  c.instance.lattice_range = j.value("lattice_range", 10);
  c.instance.flat_codim = j.value("flat_codim", 1);
  c.instance.near_parallel_eps = j.value("near_parallel_eps", 1e-3);
  c.instance.mode = j.value("mode", std::string("exact")) == "float" ? Mode::Float : Mode::Exact;
  c.instance.p = j.value("p", 3.0);
  c.trials = j.value("trials", std::uint64_t{100});
  c.seed = j.value("seed", std::uint64_t{0});
  if (c.trials < 1) throw InputError("campaign needs trials >= 1");
  return c;
}

std::string Campaign::config_hash() const {
  std::string s = to_json().dump();
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json CampaignSummary::to_json() const {
  return nlohmann::json{{"summary",
                         {{"trials", trials},
                          {"holds", holds},
                          {"equality", equality},
                          {"violated", violated},
                          {"inconclusive", inconclusive},
                          {"min_margin_trial", min_margin_trial},
                          {"min_margin", check_result_to_json(min_margin_result)},
                          {"config_hash", config_hash}}}};
}

CampaignSummary run_campaign(const Campaign& c, std::ostream* records) {
  const CheckInfo& check = require_check(c.check_id);
  CampaignSummary s;
  s.config_hash = c.config_hash();
  bool have_min = false;
  double min_margin = 0.0;

  for (std::uint64_t k = 0; k < c.trials; ++k) {
    RngStream rng(c.seed, k);
    nlohmann::json instance = check.generate(rng, c.instance);
    CheckResult r = check.evaluate(instance);
    r.seed = c.seed;
    ++s.trials;
    switch (r.verdict) {
      case Verdict::Holds: ++s.holds; break;
      case Verdict::Equality: ++s.equality; break;
      case Verdict::Violated: ++s.violated; break;
      case Verdict::Inconclusive: ++s.inconclusive; break;
    }
    if (r.verdict != Verdict::Inconclusive) {
      double m = r.margin.to_double();
      if (!have_min || m < min_margin) {
        have_min = true;
        min_margin = m;
        s.min_margin_trial = k;
        s.min_margin_result = r;
      }
    }
    if (records) {
      nlohmann::json line{{"trial", k}, {"result", check_result_to_json(r)}};
      *records << line.dump() << "\n";
    }
  }
  if (!have_min) s.min_margin_result = make_inconclusive(c.check_id, "all trials inconclusive", {});
  if (records) *records << s.to_json().dump() << "\n";
  return s;
}

CheckResult replay(const nlohmann::json& record) {
  const nlohmann::json& result = record.contains("result") ? record.at("result") : record;
  CheckResult stored = check_result_from_json(result);
  const CheckInfo& check = require_check(stored.check_id);
  if (!stored.witness.contains("instance"))
    throw InputError("witness record has no instance to replay");
  CheckResult fresh = check.evaluate(stored.witness.at("instance"));
  fresh.seed = stored.seed;
  return fresh;
}

Zonotope flat_disk_zonotope(int m) {
  if (m < 2) throw Error("flat_disk_zonotope: m >= 2");
  std::vector<Vector> gens;
  const double r = M_PI / m;
  for (int k = 0; k < m; ++k) {
    double theta = M_PI * k / m;
    gens.push_back(Vector({Scalar::real(r * std::cos(theta)), Scalar::real(r * std::sin(theta)),
                           Scalar::real(0.0)}));
  }
  return Zonotope(3, std::move(gens), Mode::Float);
}

Zonotope perturb(const Zonotope& z, double eps, RngStream& rng) {
  if (eps == 0.0) return z;
  std::vector<Vector> gens;
  if (z.mode() == Mode::Exact) {
    Scalar e = Scalar::real(eps).to_exact();
    for (const Vector& g : z.generators()) {
      std::vector<Scalar> x;
      for (int i = 0; i < z.dim(); ++i)
        x.push_back(g[i] + e * Scalar::exact(rng.next_int(-1000, 1000), 1000));
      gens.push_back(Vector(std::move(x)));
    }
  } else {
    for (const Vector& g : z.generators()) {
      std::vector<Scalar> x;
      for (int i = 0; i < z.dim(); ++i)
        x.push_back(Scalar::real(g[i].float_value() + eps * (2.0 * rng.next_double() - 1.0)));
      gens.push_back(Vector(std::move(x)));
    }
  }
  return Zonotope(z.dim(), std::move(gens), z.mode());
}

double gamma_threshold_crossing(int n, double tol) {
  // margin(p) is strictly decreasing with a single sign change.
  double lo = 1.0, hi = 4.0;
  double mlo = gamma_ball_check(n, lo).margin.to_double();
  double mhi = gamma_ball_check(n, hi).margin.to_double();
  if (!(mlo > 0.0 && mhi < 0.0)) throw Error("gamma margin did not bracket a crossing");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    double m = gamma_ball_check(n, mid).margin.to_double();
    if (m > 0.0)
      lo = mid;
    else if (m < 0.0)
      hi = mid;
    else
      return mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<std::string> repro_case_ids() {
  return {"marcus.flat-disk", "lp.det.p3", "lp.polygon", "gamma.threshold", "c3.note"};
}

CheckResult repro(const std::string& case_id) {
  if (case_id == "marcus.flat-disk") {
    SteinerPoly disk = flat_disk_steiner(3);
    RootReport roots = all_roots_real(disk);
    double disc = marcus_quadratic_discriminant(disk);

    // The zonogon slab approximation must carry a negative discriminant too.
    CheckResult approx = check_steiner_marcus(flat_disk_zonotope(32));

    CheckResult r;
    r.check_id = "steiner.marcus";
    r.lhs = Scalar::real(0.0);
    r.rhs = Scalar::real(disc);
    r.margin = Scalar::real(disc);
    r.mode = Mode::Float;
    r.tolerance = 1e-10;
    r.verdict = roots.verdict == RootVerdict::NotAllReal ? Verdict::Violated : Verdict::Inconclusive;
    r.witness = {{"case", "marcus.flat-disk"},
                 {"coefficients", poly_to_json(disk)},
                 {"quadratic_discriminant", disc},
                 {"max_imaginary", roots.max_imaginary},
                 {"zonogon_m32_margin", approx.margin.to_double()},
                 {"zonogon_m32_verdict", to_string(approx.verdict)}};
    r.note = "Steiner polynomial of the flat disk has a conjugate pair of non-real roots";
    return r;
  }
  if (case_id == "lp.det.p3") {
    CheckResult r = lp_determinant_check(lp_counterexample_matrix(Mode::Exact), 2, 3.0);
    r.witness["case"] = "lp.det.p3";
    return r;
  }
  if (case_id == "lp.polygon") {
    CheckResult r = lp_polygon_counterexample(Scalar::exact(1, 2), 4.0);
    r.witness["case"] = "lp.polygon";
    return r;
  }
  if (case_id == "gamma.threshold") {
    double crossing = gamma_threshold_crossing(2, 1e-9);
    double err = std::fabs(crossing - 2.0);
    CheckResult r = make_check_result("gamma.threshold", Scalar::real(err), Scalar::real(1e-6),
                                      0.0, nlohmann::json{{"case", "gamma.threshold"}});
    r.witness["crossing"] = crossing;
    r.note = "sign change of the gamma.ball margin located by bisection (n = 2)";
    return r;
  }
  if (case_id == "c3.note") {
    CheckResult r = make_inconclusive(
        "c3.note",
        "context only: for |A||A+B1+B2| <= c_n |A+B1||A+B2| over all convex bodies, the best "
        "constants are c_2 = 1 and c_3 = 4/3; the golden-ratio bound phi^n always holds and the "
        "best constant grows at least like (4/3 + o(1))^n",
        nlohmann::json{{"case", "c3.note"}, {"c2", "1"}, {"c3", "4/3"}});
    return r;
  }
  throw InputError("unknown repro case: " + case_id);
}

}  // namespace zonocalc
