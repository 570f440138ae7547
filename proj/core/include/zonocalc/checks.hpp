#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zonocalc/check_result.hpp"
#include "zonocalc/ellipsoid.hpp"
#include "zonocalc/polygon2d.hpp"
#include "zonocalc/rng.hpp"
#include "zonocalc/zonotope.hpp"

namespace zonocalc {

/// Knobs the instance generators understand (campaign configuration).
struct InstanceConfig {
  int dim = 3;
  int gens_min = 3;
  int gens_max = 6;
  enum class Dist { IntegerLattice, Gaussian, SphereUniform, Flat, NearParallel } dist =
      Dist::IntegerLattice;
  int lattice_range = 10;
  int flat_codim = 1;
  double near_parallel_eps = 1e-3;
  Mode mode = Mode::Exact;
  double p = 3.0;  // lp checks
};

/// One registry entry: a named inequality with a uniform evaluate signature
/// and a matching random-instance generator.
struct CheckInfo {
  std::string id;
  /// The inequality by its standard mathematical name, printed by list-checks
  /// and the human output format.
  std::string statement;
  bool exact_capable;
  std::function<CheckResult(const nlohmann::json& instance)> evaluate;
  std::function<nlohmann::json(RngStream& rng, const InstanceConfig& cfg)> generate;
};

const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(const std::string& id);
/// Throws InputError for unknown ids.
const CheckInfo& require_check(const std::string& id);

// Direct typed entry points (the registry wraps these).
CheckResult check_logsubmod(const Zonotope& a, const Zonotope& b1, const Zonotope& b2);
CheckResult check_local_af(const Zonotope& a, const Zonotope& z1, const Zonotope& z2);
CheckResult check_fenchel2(const Zonotope& a, const Zonotope& z1, const Zonotope& z2);
CheckResult check_hope(const Zonotope& a, const Vector& u, const Vector& v);
CheckResult check_surface_ratio_projection(const Zonotope& a, const Vector& u);
CheckResult check_linear_equivalents(const Zonotope& a, const Vector& u, const Vector& v);
CheckResult check_zon_equivalents(const Zonotope& a, const Vector& u, const Vector& v);
CheckResult check_parallelotope(const Parallelotope& a, const Vector& u, const Vector& v);
CheckResult check_parallelotope_subspaces(const Parallelotope& a, std::vector<int> drop_e,
                                          std::vector<int> drop_f);
CheckResult check_courtade2(const ConvexPolygon& a, const ConvexPolygon& b, const ConvexPolygon& c);
CheckResult check_fenchel_2d(const ConvexPolygon& a, const ConvexPolygon& b, const ConvexPolygon& c);
CheckResult check_logsubmod_2d(const ConvexPolygon& a, const ConvexPolygon& b1,
                               const ConvexPolygon& b2);
CheckResult check_bonnesen2(const ConvexPolygon& a, const ConvexPolygon& b, const Vector& u);
CheckResult check_dct_ratio(const Zonotope& a, const Zonotope& b);
CheckResult check_l2_strong(const EllipsoidL2& a, const EllipsoidL2& b, const Vector& u);
CheckResult check_l2_det2(const Matrix& columns, int split, std::optional<Vector> direction);
CheckResult check_l2_proj(const EllipsoidL2& a, const EllipsoidL2& b,
                          const std::vector<Vector>& basis);
CheckResult check_l2_mixed(const EllipsoidL2& a, const EllipsoidL2& b,
                           const std::vector<Vector>& segments);
CheckResult check_l2_surface(const EllipsoidL2& a, const EllipsoidL2& b, int samples,
                             std::uint64_t seed);
CheckResult check_l2_concavity(const EllipsoidL2& a, const EllipsoidL2& b, const Vector& u);
CheckResult check_steiner_marcus(const Zonotope& z);
CheckResult check_steiner_real3(const Zonotope& z, const Vector& u, const Vector& v);
CheckResult check_steiner_c2(const Zonotope& z, const std::vector<Vector>& c_generators);

/// Discriminant of the quadratic factor of a Steiner polynomial in R^3 with
/// zero constant term, normalized so the flat disk yields pi^2 - 32/3.
double marcus_quadratic_discriminant(const SteinerPoly& p);

// Shared random-instance helpers (used by campaigns and tests).
Zonotope random_zonotope(RngStream& rng, const InstanceConfig& cfg);
Vector random_lattice_vector(RngStream& rng, int dim, int range);
/// Nonzero rational pair with <u, v> = 0 (exact mode).
std::pair<Vector, Vector> random_orthogonal_rational_pair(RngStream& rng, int dim, int range);
Vector random_unit_vector(RngStream& rng, int dim);
EllipsoidL2 random_full_dim_ellipsoid(RngStream& rng, const InstanceConfig& cfg);
Parallelotope random_parallelotope(RngStream& rng, const InstanceConfig& cfg);

}  // namespace zonocalc
