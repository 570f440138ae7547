#include <algorithm>
#include <cmath>

#include "zonocalc/checks.hpp"
#include "zonocalc/json_io.hpp"
#include "zonocalc/lp_cases.hpp"
#include "zonocalc/submodular.hpp"

namespace zonocalc {

Vector random_lattice_vector(RngStream& rng, int dim, int range) {
  std::vector<Scalar> x;
  for (int i = 0; i < dim; ++i) x.push_back(Scalar::exact(rng.next_int(-range, range)));
  return Vector(std::move(x));
}

Vector random_unit_vector(RngStream& rng, int dim) {
  for (;;) {
    std::vector<Scalar> x;
    double nn = 0.0;
    for (int i = 0; i < dim; ++i) {
      double g = rng.next_gaussian();
      x.push_back(Scalar::real(g));
      nn += g * g;
    }
    if (nn < 1e-12) continue;
    double inv = 1.0 / std::sqrt(nn);
    for (Scalar& c : x) c = Scalar::real(c.float_value() * inv);
    return Vector(std::move(x));
  }
}

std::pair<Vector, Vector> random_orthogonal_rational_pair(RngStream& rng, int dim, int range) {
  for (;;) {
    Vector u = random_lattice_vector(rng, dim, range);
    if (norm_sq(u).is_zero()) continue;
    Vector w = random_lattice_vector(rng, dim, range);
    // v = <u,u> w - <w,u> u is integral and orthogonal to u.
    Vector v = norm_sq(u) * w - dot(w, u) * u;
    if (norm_sq(v).is_zero()) continue;
    return {u, v};
  }
}

Zonotope random_zonotope(RngStream& rng, const InstanceConfig& cfg) {
  const int m = static_cast<int>(rng.next_int(cfg.gens_min, std::max(cfg.gens_min, cfg.gens_max)));
  std::vector<Vector> gens;
  switch (cfg.dist) {
    case InstanceConfig::Dist::IntegerLattice:
      for (int i = 0; i < m; ++i) gens.push_back(random_lattice_vector(rng, cfg.dim, cfg.lattice_range));
      break;
    case InstanceConfig::Dist::Gaussian:
      if (cfg.mode == Mode::Exact)
        throw InputError("gaussian generator distribution requires float mode");
      for (int i = 0; i < m; ++i) {
        std::vector<Scalar> x;
        for (int d = 0; d < cfg.dim; ++d) x.push_back(Scalar::real(rng.next_gaussian()));
        gens.push_back(Vector(std::move(x)));
      }
      break;
    case InstanceConfig::Dist::SphereUniform:
      if (cfg.mode == Mode::Exact)
        throw InputError("sphere-uniform generator distribution requires float mode");
      for (int i = 0; i < m; ++i) gens.push_back(random_unit_vector(rng, cfg.dim));
      break;
    case InstanceConfig::Dist::Flat: {
      const int live = std::max(1, cfg.dim - cfg.flat_codim);
      for (int i = 0; i < m; ++i) {
        std::vector<Scalar> x;
        for (int d = 0; d < cfg.dim; ++d)
          x.push_back(d < live ? Scalar::exact(rng.next_int(-cfg.lattice_range, cfg.lattice_range))
                               : Scalar::exact(0));
        gens.push_back(Vector(std::move(x)));
      }
      break;
    }
    case InstanceConfig::Dist::NearParallel: {
      Vector base = random_lattice_vector(rng, cfg.dim, cfg.lattice_range);
      while (norm_sq(base).is_zero()) base = random_lattice_vector(rng, cfg.dim, cfg.lattice_range);
      Scalar eps = Scalar::real(cfg.near_parallel_eps).to_exact();
      for (int i = 0; i < m; ++i) {
        Scalar k = Scalar::exact(rng.next_int(1, 3));
        Vector noise = random_lattice_vector(rng, cfg.dim, cfg.lattice_range);
        gens.push_back(k * base + eps * noise);
      }
      break;
    }
  }
  Mode built = gens.empty() ? cfg.mode : gens[0].mode();
  Zonotope z(cfg.dim, std::move(gens), built);
  return cfg.mode == Mode::Float && built == Mode::Exact ? z.to_float() : z;
}

EllipsoidL2 random_full_dim_ellipsoid(RngStream& rng, const InstanceConfig& cfg) {
  const int n = cfg.dim;
  for (;;) {
    const int m = static_cast<int>(rng.next_int(std::max(n, cfg.gens_min),
                                                std::max(n, cfg.gens_max)));
    std::vector<Vector> cols;
    for (int i = 0; i < m; ++i) cols.push_back(random_lattice_vector(rng, n, cfg.lattice_range));
    EllipsoidL2 e(Matrix::from_columns(cols));
    if (!e.full_dimensional()) continue;
    return cfg.mode == Mode::Float ? e.to_float() : e;
  }
}

Parallelotope random_parallelotope(RngStream& rng, const InstanceConfig& cfg) {
  const int n = cfg.dim;
  for (;;) {
    std::vector<Vector> edges;
    for (int i = 0; i < n; ++i) edges.push_back(random_lattice_vector(rng, n, cfg.lattice_range));
    if (det_of_columns(edges).is_zero()) continue;
    Vector base = random_lattice_vector(rng, n, cfg.lattice_range);
    if (cfg.mode == Mode::Float) {
      for (Vector& e : edges) e = e.to_float();
      base = base.to_float();
    }
    return Parallelotope(std::move(base), std::move(edges));
  }
}

namespace {

Vector direction_for(RngStream& rng, const InstanceConfig& cfg) {
  if (cfg.mode == Mode::Exact) {
    Vector u = random_lattice_vector(rng, cfg.dim, cfg.lattice_range);
    while (norm_sq(u).is_zero()) u = random_lattice_vector(rng, cfg.dim, cfg.lattice_range);
    return u;
  }
  return random_unit_vector(rng, cfg.dim);
}

nlohmann::json gen_zono_triple(RngStream& rng, const InstanceConfig& cfg) {
  InstanceConfig small = cfg;
  small.gens_min = std::max(1, cfg.gens_min - 2);
  small.gens_max = std::max(1, cfg.gens_max - 2);
  return {{"A", zonotope_to_json(random_zonotope(rng, cfg))},
          {"B1", zonotope_to_json(random_zonotope(rng, small))},
          {"B2", zonotope_to_json(random_zonotope(rng, small))}};
}

nlohmann::json gen_zono_uv(RngStream& rng, const InstanceConfig& cfg, bool orthogonal) {
  nlohmann::json j{{"A", zonotope_to_json(random_zonotope(rng, cfg))}};
  if (cfg.mode == Mode::Exact && orthogonal) {
    auto [u, v] = random_orthogonal_rational_pair(rng, cfg.dim, cfg.lattice_range);
    j["u"] = vector_to_json(u);
    j["v"] = vector_to_json(v);
  } else if (cfg.mode == Mode::Exact) {
    j["u"] = vector_to_json(direction_for(rng, cfg));
    j["v"] = vector_to_json(direction_for(rng, cfg));
  } else {
    Vector u = random_unit_vector(rng, cfg.dim);
    Vector v = random_unit_vector(rng, cfg.dim);
    if (orthogonal) {
      // Gram-Schmidt v against u.
      v = v - dot(v, u) * u;
      double nn = norm(v);
      if (nn < 1e-9) return gen_zono_uv(rng, cfg, orthogonal);
      v = Scalar::real(1.0 / nn) * v;
    }
    j["u"] = vector_to_json(u);
    j["v"] = vector_to_json(v);
  }
  return j;
}

nlohmann::json gen_polygon_triple(RngStream& rng, const InstanceConfig& cfg) {
  auto poly = [&] {
    return polygon_to_json(random_polygon(rng, static_cast<int>(rng.next_int(3, 8)),
                                          cfg.lattice_range / 10.0 + 0.5, cfg.mode));
  };
  return {{"A", poly()}, {"B", poly()}, {"C", poly()}};
}

Zonotope zono_from(const nlohmann::json& j) { return zonotope_from_json(j); }

std::vector<Vector> basis_from(const nlohmann::json& j) {
  std::vector<Vector> b;
  for (const auto& v : j) b.push_back(vector_from_json(v));
  return b;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> registry = [] {
    std::vector<CheckInfo> r;

    r.push_back({"logsubmod.zonotope",
                 "log-submodularity of volume |A||A+B1+B2| <= |A+B1||A+B2| (Pluennecke-Ruzsa type)",
                 true,
                 [](const nlohmann::json& in) {
                   return check_logsubmod(zono_from(in.at("A")), zono_from(in.at("B1")),
                                          zono_from(in.at("B2")));
                 },
                 gen_zono_triple});

    r.push_back({"localaf.zonotope",
                 "local Alexandrov-Fenchel form with factor n/(n-1)",
                 true,
                 [](const nlohmann::json& in) {
                   return check_local_af(zono_from(in.at("A")), zono_from(in.at("Z1")),
                                         zono_from(in.at("Z2")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   nlohmann::json j = gen_zono_triple(rng, cfg);
                   return nlohmann::json{{"A", j["A"]}, {"Z1", j["B1"]}, {"Z2", j["B2"]}};
                 }});

    r.push_back({"fenchel2.zonotope",
                 "Fenchel's local inequality with the sharp constant 2",
                 true,
                 [](const nlohmann::json& in) {
                   return check_fenchel2(zono_from(in.at("A")), zono_from(in.at("Z1")),
                                         zono_from(in.at("Z2")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   nlohmann::json j = gen_zono_triple(rng, cfg);
                   return nlohmann::json{{"A", j["A"]}, {"Z1", j["B1"]}, {"Z2", j["B2"]}};
                 }});

    r.push_back({"hope.r3",
                 "projection product inequality |A||P_[u,v]perp A| sqrt(1-<u,v>^2) <= |P_u A||P_v A| in R^3",
                 true,
                 [](const nlohmann::json& in) {
                   return check_hope(zono_from(in.at("A")), vector_from_json(in.at("u")),
                                     vector_from_json(in.at("v")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   InstanceConfig c3 = cfg;
                   c3.dim = 3;
                   return gen_zono_uv(rng, c3, true);
                 }});

    r.push_back({"surfproj.zonotope",
                 "surface-to-volume ratio under hyperplane projection (strict and 2(n-1)/n weakened)",
                 false,
                 [](const nlohmann::json& in) {
                   return check_surface_ratio_projection(zono_from(in.at("A")),
                                                         vector_from_json(in.at("u")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   return nlohmann::json{{"A", zonotope_to_json(random_zonotope(rng, cfg))},
                                         {"u", vector_to_json(random_unit_vector(rng, cfg.dim))}};
                 }});

    r.push_back({"linear-equiv.zonotope",
                 "linear-invariant equivalent forms (segment sums, projections, real roots)",
                 true,
                 [](const nlohmann::json& in) {
                   return check_linear_equivalents(zono_from(in.at("A")),
                                                   vector_from_json(in.at("u")),
                                                   vector_from_json(in.at("v")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   return gen_zono_uv(rng, cfg, false);
                 }});

    r.push_back({"zonequiv.r3",
                 "equivalent volume/determinant/projection/mixed-volume forms on one instance",
                 true,
                 [](const nlohmann::json& in) {
                   return check_zon_equivalents(zono_from(in.at("A")), vector_from_json(in.at("u")),
                                                vector_from_json(in.at("v")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   InstanceConfig c3 = cfg;
                   c3.dim = std::max(3, cfg.dim);
                   return gen_zono_uv(rng, c3, false);
                 }});

    r.push_back({"parallelotope.uv",
                 "Loomis-Whitney type projection inequality for parallelotopes with split equality case",
                 true,
                 [](const nlohmann::json& in) {
                   return check_parallelotope(parallelotope_from_json(in.at("P")),
                                              vector_from_json(in.at("u")),
                                              vector_from_json(in.at("v")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   Parallelotope p = random_parallelotope(rng, cfg);
                   return nlohmann::json{{"P", parallelotope_to_json(p)},
                                         {"u", vector_to_json(direction_for(rng, cfg))},
                                         {"v", vector_to_json(direction_for(rng, cfg))}};
                 }});

    r.push_back({"parallelotope.subspaces",
                 "projection product inequality |A||P_{E cap F}A| <= |P_E A||P_F A| for parallelotopes",
                 true,
                 [](const nlohmann::json& in) {
                   return check_parallelotope_subspaces(parallelotope_from_json(in.at("P")),
                                                        in.at("drop_e").get<std::vector<int>>(),
                                                        in.at("drop_f").get<std::vector<int>>());
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   InstanceConfig c = cfg;
                   c.dim = std::max(3, cfg.dim);
                   Parallelotope p = random_parallelotope(rng, c);
                   std::vector<int> perm;
                   for (int i = 0; i < c.dim; ++i) perm.push_back(i);
                   for (int i = c.dim - 1; i > 0; --i)
                     std::swap(perm[static_cast<size_t>(i)],
                               perm[static_cast<size_t>(rng.next_int(0, i))]);
                   int me = static_cast<int>(rng.next_int(1, c.dim - 2));
                   int mf = static_cast<int>(rng.next_int(1, c.dim - 1 - me));
                   std::vector<int> de(perm.begin(), perm.begin() + me);
                   std::vector<int> df(perm.begin() + me, perm.begin() + me + mf);
                   return nlohmann::json{{"P", parallelotope_to_json(p)}, {"drop_e", de},
                                         {"drop_f", df}};
                 }});

    r.push_back({"courtade.2d",
                 "planar product inequality sqrt(|A||A+B+C|) + sqrt(|B||C|) <= sqrt(|A+B||A+C|)",
                 false,
                 [](const nlohmann::json& in) {
                   return check_courtade2(polygon_from_json(in.at("A")), polygon_from_json(in.at("B")),
                                          polygon_from_json(in.at("C")));
                 },
                 gen_polygon_triple});

    r.push_back({"fenchel.2d",
                 "planar Fenchel quadratic-form inequality in mixed areas",
                 true,
                 [](const nlohmann::json& in) {
                   return check_fenchel_2d(polygon_from_json(in.at("A")), polygon_from_json(in.at("B")),
                                           polygon_from_json(in.at("C")));
                 },
                 gen_polygon_triple});

    r.push_back({"logsubmod.2d",
                 "log-submodularity of area for planar convex bodies",
                 true,
                 [](const nlohmann::json& in) {
                   return check_logsubmod_2d(polygon_from_json(in.at("A")),
                                             polygon_from_json(in.at("B")),
                                             polygon_from_json(in.at("C")));
                 },
                 gen_polygon_triple});

    r.push_back({"bonnesen.2d",
                 "Bonnesen projection inequality in the plane",
                 true,
                 [](const nlohmann::json& in) {
                   return check_bonnesen2(polygon_from_json(in.at("A")), polygon_from_json(in.at("B")),
                                          vector_from_json(in.at("u")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   nlohmann::json t = gen_polygon_triple(rng, cfg);
                   InstanceConfig c2 = cfg;
                   c2.dim = 2;
                   return nlohmann::json{{"A", t["A"]}, {"B", t["B"]},
                                         {"u", vector_to_json(direction_for(rng, c2))}};
                 }});

    r.push_back({"dct.ratio",
                 "volume-to-surface ratio concavity and monotonicity probes (Dembo-Cover-Thomas)",
                 false,
                 [](const nlohmann::json& in) {
                   return check_dct_ratio(zono_from(in.at("A")), zono_from(in.at("B")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   return nlohmann::json{{"A", zonotope_to_json(random_zonotope(rng, cfg))},
                                         {"B", zonotope_to_json(random_zonotope(rng, cfg))}};
                 }});

    r.push_back({"l2.strong",
                 "squared volume-to-projection ratio superadditivity under the 2-sum",
                 false,
                 [](const nlohmann::json& in) {
                   return check_l2_strong(ellipsoid_from_json(in.at("A")),
                                          ellipsoid_from_json(in.at("B")),
                                          vector_from_json(in.at("u")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   return nlohmann::json{
                       {"A", ellipsoid_to_json(random_full_dim_ellipsoid(rng, cfg))},
                       {"B", ellipsoid_to_json(random_full_dim_ellipsoid(rng, cfg))},
                       {"u", vector_to_json(random_unit_vector(rng, cfg.dim))}};
                 }});

    r.push_back({"l2.det2",
                 "Cauchy-Binet squared-determinant ratio superadditivity over a column split",
                 true,
                 [](const nlohmann::json& in) {
                   std::vector<Vector> cols = basis_from(in.at("columns"));
                   std::optional<Vector> dir;
                   if (in.contains("direction")) dir = vector_from_json(in.at("direction"));
                   return check_l2_det2(Matrix::from_columns(cols), in.at("split").get<int>(), dir);
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   const int n = cfg.dim;
                   const int total = std::max({2 * n, n + 2, cfg.gens_max, 4});
                   nlohmann::json cols = nlohmann::json::array();
                   for (int i = 0; i < total; ++i)
                     cols.push_back(vector_to_json(random_lattice_vector(rng, n, cfg.lattice_range)));
                   int split = static_cast<int>(rng.next_int(n - 1, total - (n - 1)));
                   return nlohmann::json{{"columns", cols}, {"split", split}};
                 }});

    r.push_back({"l2.proj",
                 "codimension-k projection ratio inequality with exponent 2/k",
                 false,
                 [](const nlohmann::json& in) {
                   return check_l2_proj(ellipsoid_from_json(in.at("A")),
                                        ellipsoid_from_json(in.at("B")), basis_from(in.at("basis")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   const int k = static_cast<int>(rng.next_int(1, std::max(1, cfg.dim - 1)));
                   std::vector<Vector> basis;
                   while (static_cast<int>(basis.size()) < k) {
                     Vector v = random_unit_vector(rng, cfg.dim);
                     for (const Vector& q : basis) v = v - dot(v, q) * q;
                     double nn = norm(v);
                     if (nn < 1e-6) continue;
                     basis.push_back(Scalar::real(1.0 / nn) * v);
                   }
                   nlohmann::json jb = nlohmann::json::array();
                   for (const Vector& v : basis) jb.push_back(vector_to_json(v));
                   return nlohmann::json{
                       {"A", ellipsoid_to_json(random_full_dim_ellipsoid(rng, cfg))},
                       {"B", ellipsoid_to_json(random_full_dim_ellipsoid(rng, cfg))},
                       {"basis", jb}};
                 }});

    r.push_back({"l2.mixed",
                 "mixed-volume ratio inequality with segment slots under the 2-sum",
                 false,
                 [](const nlohmann::json& in) {
                   return check_l2_mixed(ellipsoid_from_json(in.at("A")),
                                         ellipsoid_from_json(in.at("B")),
                                         basis_from(in.at("segments")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   const int k = static_cast<int>(rng.next_int(1, std::max(1, cfg.dim - 1)));
                   nlohmann::json js = nlohmann::json::array();
                   for (int i = 0; i < k; ++i)
                     js.push_back(vector_to_json(random_unit_vector(rng, cfg.dim)));
                   return nlohmann::json{
                       {"A", ellipsoid_to_json(random_full_dim_ellipsoid(rng, cfg))},
                       {"B", ellipsoid_to_json(random_full_dim_ellipsoid(rng, cfg))},
                       {"segments", js}};
                 }});

    r.push_back({"l2.surface",
                 "volume-to-surface ratio superadditivity under the 2-sum (Monte Carlo surfaces)",
                 false,
                 [](const nlohmann::json& in) {
                   return check_l2_surface(ellipsoid_from_json(in.at("A")),
                                           ellipsoid_from_json(in.at("B")),
                                           in.value("samples", 100000),
                                           in.value("mc_seed", std::uint64_t{1}));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   return nlohmann::json{
                       {"A", ellipsoid_to_json(random_full_dim_ellipsoid(rng, cfg))},
                       {"B", ellipsoid_to_json(random_full_dim_ellipsoid(rng, cfg))},
                       {"samples", 20000},
                       {"mc_seed", rng.next_u64()}};
                 }});

    r.push_back({"l2.concavity",
                 "discrete concavity of the squared projection ratio along the sqrt(t) interpolation",
                 false,
                 [](const nlohmann::json& in) {
                   return check_l2_concavity(ellipsoid_from_json(in.at("A")),
                                             ellipsoid_from_json(in.at("B")),
                                             vector_from_json(in.at("u")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   return nlohmann::json{
                       {"A", ellipsoid_to_json(random_full_dim_ellipsoid(rng, cfg))},
                       {"B", ellipsoid_to_json(random_full_dim_ellipsoid(rng, cfg))},
                       {"u", vector_to_json(random_unit_vector(rng, cfg.dim))}};
                 }});

    r.push_back({"gamma.ball",
                 "Gamma-function log-convexity threshold at p = 2 for ball projections",
                 false,
                 [](const nlohmann::json& in) {
                   return gamma_ball_check(in.at("n").get<int>(), in.at("p").get<double>());
                 },
                 [](RngStream& rng, const InstanceConfig&) {
                   return nlohmann::json{{"n", rng.next_int(2, 8)},
                                         {"p", 1.0 + 3.0 * rng.next_double()}};
                 }});

    r.push_back({"lp.det",
                 "subset |det|^p ratio superadditivity over a column split (fails for p > 2)",
                 true,
                 [](const nlohmann::json& in) {
                   std::vector<Vector> cols = basis_from(in.at("columns"));
                   std::optional<Vector> dir;
                   if (in.contains("direction")) dir = vector_from_json(in.at("direction"));
                   return lp_determinant_check(Matrix::from_columns(cols), in.at("split").get<int>(),
                                               in.at("p").get<double>(), dir);
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   const int n = cfg.dim;
                   const int total = std::max({2 * n, n + 2, cfg.gens_max, 4});
                   nlohmann::json cols = nlohmann::json::array();
                   for (int i = 0; i < total; ++i)
                     cols.push_back(vector_to_json(random_lattice_vector(rng, n, cfg.lattice_range)));
                   int split = static_cast<int>(rng.next_int(n - 1, total - (n - 1)));
                   return nlohmann::json{{"columns", cols}, {"split", split}, {"p", cfg.p}};
                 }});

    r.push_back({"lp.polygon",
                 "octagon family counterexample with threshold a = 2 - 2^(1/p)",
                 true,
                 [](const nlohmann::json& in) {
                   return lp_polygon_counterexample(scalar_from_json(in.at("a")),
                                                    in.at("p").get<double>());
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   long num = rng.next_int(1, 999);
                   return nlohmann::json{{"a", Scalar::exact(num, 1000).str()}, {"p", cfg.p}};
                 }});

    r.push_back({"steiner.marcus",
                 "real-rootedness of the Steiner polynomial |Z + t B| (Marcus question)",
                 false,
                 [](const nlohmann::json& in) { return check_steiner_marcus(zono_from(in.at("Z"))); },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   InstanceConfig c3 = cfg;
                   c3.dim = 3;
                   return nlohmann::json{{"Z", zonotope_to_json(random_zonotope(rng, c3))}};
                 }});

    r.push_back({"steiner.real3",
                 "real-rootedness of |Z + t([0,u]+[0,v])| in R^3",
                 true,
                 [](const nlohmann::json& in) {
                   return check_steiner_real3(zono_from(in.at("Z")), vector_from_json(in.at("u")),
                                              vector_from_json(in.at("v")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   InstanceConfig c3 = cfg;
                   c3.dim = 3;
                   nlohmann::json j = gen_zono_uv(rng, c3, false);
                   return nlohmann::json{{"Z", j["A"]}, {"u", j["u"]}, {"v", j["v"]}};
                 }});

    r.push_back({"steiner.c2",
                 "real-rootedness of |Z + tC| for a planar zonogon C (open probe)",
                 true,
                 [](const nlohmann::json& in) {
                   return check_steiner_c2(zono_from(in.at("Z")), basis_from(in.at("C_generators")));
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   InstanceConfig c3 = cfg;
                   c3.dim = 3;
                   Vector a = random_lattice_vector(rng, 3, cfg.lattice_range);
                   Vector b = random_lattice_vector(rng, 3, cfg.lattice_range);
                   nlohmann::json gens = nlohmann::json::array();
                   const int k = static_cast<int>(rng.next_int(2, 5));
                   for (int i = 0; i < k; ++i) {
                     Scalar al = Scalar::exact(rng.next_int(-3, 3));
                     Scalar be = Scalar::exact(rng.next_int(-3, 3));
                     gens.push_back(vector_to_json(al * a + be * b));
                   }
                   return nlohmann::json{{"Z", zonotope_to_json(random_zonotope(rng, c3))},
                                         {"C_generators", gens}};
                 }});

    r.push_back({"submod.compression",
                 "compression ordering sum inequality for submodular set functions",
                 true,
                 [](const nlohmann::json& in) {
                   const int m = in.at("m").get<int>();
                   std::vector<Scalar> table;
                   for (const auto& v : in.at("table")) table.push_back(scalar_from_json(v));
                   SetFunction f(m, std::move(table));
                   std::vector<std::uint32_t> sets;
                   for (const auto& s : in.at("sets")) sets.push_back(s.get<std::uint32_t>());
                   MultiHypergraph h(m, std::move(sets));
                   std::vector<std::pair<int, int>> steps;
                   for (const auto& st : in.at("steps"))
                     steps.emplace_back(st[0].get<int>(), st[1].get<int>());
                   return compression_sum_check(f, h, steps);
                 },
                 [](RngStream& rng, const InstanceConfig& cfg) {
                   // Coverage function F(S) = |union of random A_i| is submodular.
                   const int m = static_cast<int>(rng.next_int(2, 5));
                   const int universe = 10;
                   std::vector<std::uint32_t> cover;
                   for (int i = 0; i < m; ++i)
                     cover.push_back(static_cast<std::uint32_t>(rng.next_int(1, (1 << universe) - 1)));
                   nlohmann::json table = nlohmann::json::array();
                   for (std::uint32_t s = 0; s < (1u << m); ++s) {
                     std::uint32_t un = 0;
                     for (int i = 0; i < m; ++i)
                       if (s & (1u << i)) un |= cover[static_cast<size_t>(i)];
                     long count = 0;
                     for (int b = 0; b < universe; ++b)
                       if (un & (1u << b)) ++count;
                     if (cfg.mode == Mode::Exact)
                       table.push_back(Scalar::exact(count).str());
                     else
                       table.push_back(static_cast<double>(count));
                   }
                   // Random hypergraph and a valid random compression sequence.
                   std::vector<std::uint32_t> sets;
                   const int hsize = static_cast<int>(rng.next_int(3, 6));
                   for (int i = 0; i < hsize; ++i)
                     sets.push_back(static_cast<std::uint32_t>(rng.next_int(1, (1 << m) - 1)));
                   MultiHypergraph h(m, sets);
                   nlohmann::json steps = nlohmann::json::array();
                   MultiHypergraph cur = h;
                   for (int step = 0; step < 10; ++step) {
                     std::vector<std::pair<int, int>> candidates;
                     const auto& ss = cur.sets();
                     for (int i = 0; i < static_cast<int>(ss.size()); ++i)
                       for (int j = i + 1; j < static_cast<int>(ss.size()); ++j) {
                         std::uint32_t a = ss[static_cast<size_t>(i)], b = ss[static_cast<size_t>(j)];
                         if ((a & b) != a && (a & b) != b) candidates.emplace_back(i, j);
                       }
                     if (candidates.empty()) break;
                     auto [i, j] = candidates[static_cast<size_t>(
                         rng.next_int(0, static_cast<long>(candidates.size()) - 1))];
                     steps.push_back(nlohmann::json::array({i, j}));
                     cur = elementary_compression(cur, i, j);
                   }
                   return nlohmann::json{{"m", m}, {"table", table}, {"sets", sets}, {"steps", steps}};
                 }});

    return r;
  }();
  return registry;
}

const CheckInfo* find_check(const std::string& id) {
  for (const CheckInfo& c : check_registry())
    if (c.id == id) return &c;
  return nullptr;
}

const CheckInfo& require_check(const std::string& id) {
  const CheckInfo* c = find_check(id);
  if (!c) throw InputError("unknown check id: " + id);
  return *c;
}

}  // namespace zonocalc
