#include <cmath>

#include "doctest.h"
#include "zonocalc/checks.hpp"
#include "zonocalc/json_io.hpp"
#include "zonocalc/rng.hpp"

using namespace zonocalc;

namespace {

Zonotope zono(std::vector<std::vector<long>> gens, int dim) {
  std::vector<Vector> vs;
  for (auto& g : gens) {
    std::vector<Scalar> x;
    for (long c : g) x.push_back(Scalar::exact(c));
    vs.push_back(Vector(std::move(x)));
  }
  return Zonotope(dim, std::move(vs), Mode::Exact);
}

bool held(Verdict v) { return v == Verdict::Holds || v == Verdict::Equality; }

}  // namespace

TEST_CASE("registry exposes the stable ids") {
  for (const char* id :
       {"logsubmod.zonotope", "localaf.zonotope", "fenchel2.zonotope", "hope.r3",
        "surfproj.zonotope", "linear-equiv.zonotope", "zonequiv.r3", "parallelotope.uv",
        "parallelotope.subspaces", "courtade.2d", "fenchel.2d", "logsubmod.2d", "bonnesen.2d",
        "dct.ratio", "l2.strong", "l2.det2", "l2.proj", "l2.mixed", "l2.surface", "l2.concavity",
        "gamma.ball", "lp.det", "lp.polygon", "steiner.marcus", "steiner.real3", "steiner.c2",
        "submod.compression"}) {
    CAPTURE(id);
    CHECK(find_check(id) != nullptr);
  }
  CHECK(find_check("no.such.check") == nullptr);
  CHECK_THROWS_AS(require_check("no.such.check"), InputError);
  for (const CheckInfo& c : check_registry()) CHECK_FALSE(c.statement.empty());
}

TEST_CASE("logsubmod square equality example") {
  Zonotope a = Zonotope::cube(2, Mode::Exact);
  Zonotope b1 = zono({{1, 0}}, 2);
  Zonotope b2 = zono({{0, 1}}, 2);
  CheckResult r = check_logsubmod(a, b1, b2);
  CHECK(r.lhs == Scalar::exact(4));  // 1 * 4
  CHECK(r.rhs == Scalar::exact(4));  // 2 * 2
  CHECK(r.verdict == Verdict::Equality);

  // points for both summands: trivial equality
  CheckResult triv = check_logsubmod(a, Zonotope::point(2, Mode::Exact), Zonotope::point(2, Mode::Exact));
  CHECK(triv.verdict == Verdict::Equality);
}

TEST_CASE("local alexandrov-fenchel cube equality example") {
  Zonotope cube = Zonotope::cube(3, Mode::Exact);
  CheckResult r = check_local_af(cube, zono({{1, 0, 0}}, 3), zono({{0, 1, 0}}, 3));
  // (3/2) (1/3)(1/3) - 1 (1/6) = 0
  CHECK(r.lhs == Scalar::exact(1, 6));
  CHECK(r.rhs == Scalar::exact(1, 6));
  CHECK(r.verdict == Verdict::Equality);

  // Z1 = Z2 holds with room thanks to n/(n-1) > 1 (M2 gives the constant-free form)
  Zonotope z = zono({{1, 2, 0}, {0, 1, 1}}, 3);
  CheckResult same = check_local_af(cube, z, z);
  CHECK(held(same.verdict));
}

TEST_CASE("localaf margin never exceeds fenchel2 margin") {
  RngStream rng(81, 0);
  InstanceConfig cfg;
  cfg.dim = 3;
  cfg.gens_min = 2;
  cfg.gens_max = 5;
  for (int trial = 0; trial < 40; ++trial) {
    Zonotope a = random_zonotope(rng, cfg);
    Zonotope z1 = random_zonotope(rng, cfg);
    Zonotope z2 = random_zonotope(rng, cfg);
    CheckResult laf = check_local_af(a, z1, z2);
    CheckResult f2 = check_fenchel2(a, z1, z2);
    CHECK((f2.margin - laf.margin).sgn() >= 0);
    CHECK(laf.verdict != Verdict::Violated);
    CHECK(f2.verdict != Verdict::Violated);
  }
}

TEST_CASE("hope.r3 cube equality and exactness") {
  Zonotope cube = Zonotope::cube(3, Mode::Exact);
  CheckResult r = check_hope(cube, Vector::lattice({1, 0, 0}), Vector::lattice({0, 1, 0}));
  CHECK(r.lhs == Scalar::exact(1));
  CHECK(r.rhs == Scalar::exact(1));
  CHECK(r.verdict == Verdict::Equality);

  // rotated orthonormal-generator frame: equality is exact for rational pairs
  Zonotope rot = zono({{2, 2, 1}, {-2, 1, 2}, {1, -2, 2}}, 3);  // orthogonal columns, norm 3
  RngStream rng(82, 0);
  for (int trial = 0; trial < 20; ++trial) {
    auto [u, v] = random_orthogonal_rational_pair(rng, 3, 5);
    CheckResult rr = check_hope(rot, u, v);
    CHECK(rr.mode == Mode::Exact);
    CHECK(rr.verdict != Verdict::Violated);
  }
}

TEST_CASE("check margins are invariant under argument swap") {
  RngStream rng(83, 0);
  InstanceConfig cfg;
  cfg.dim = 3;
  cfg.gens_min = 3;
  cfg.gens_max = 5;
  for (int trial = 0; trial < 20; ++trial) {
    Zonotope a = random_zonotope(rng, cfg);
    Zonotope b1 = random_zonotope(rng, cfg);
    Zonotope b2 = random_zonotope(rng, cfg);
    CHECK(check_logsubmod(a, b1, b2).margin == check_logsubmod(a, b2, b1).margin);
    CHECK(check_local_af(a, b1, b2).margin == check_local_af(a, b2, b1).margin);
    auto [u, v] = random_orthogonal_rational_pair(rng, 3, 5);
    CHECK(check_hope(a, u, v).margin == check_hope(a, v, u).margin);
  }
}

TEST_CASE("margins transform consistently under unimodular maps") {
  // for the linear-invariant checks the verdict and margin sign are preserved
  RngStream rng(84, 0);
  InstanceConfig cfg;
  cfg.dim = 3;
  cfg.gens_min = 3;
  cfg.gens_max = 5;
  Matrix t = Matrix::from_rows({{Scalar::exact(1), Scalar::exact(2), Scalar::exact(0)},
                                {Scalar::exact(0), Scalar::exact(1), Scalar::exact(3)},
                                {Scalar::exact(0), Scalar::exact(0), Scalar::exact(1)}});
  CHECK(det(t) == Scalar::exact(1));
  for (int trial = 0; trial < 20; ++trial) {
    Zonotope a = random_zonotope(rng, cfg);
    Vector u = random_lattice_vector(rng, 3, 4);
    Vector v = random_lattice_vector(rng, 3, 4);
    CheckResult before = check_hope(a, u, v);
    CheckResult after = check_hope(apply_linear(t, a), t.apply(u), t.apply(v));
    CHECK(before.margin.sgn() == after.margin.sgn());
    CHECK(before.verdict == after.verdict);

    CheckResult le_before = check_linear_equivalents(a, u, v);
    CheckResult le_after = check_linear_equivalents(apply_linear(t, a), t.apply(u), t.apply(v));
    CHECK(le_before.margin.sgn() == le_after.margin.sgn());
  }
}

TEST_CASE("relabeling generators leaves margins unchanged") {
  RngStream rng(85, 0);
  InstanceConfig cfg;
  cfg.dim = 3;
  cfg.gens_min = 3;
  cfg.gens_max = 5;
  for (int trial = 0; trial < 10; ++trial) {
    Zonotope a = random_zonotope(rng, cfg);
    std::vector<Vector> rev(a.generators().rbegin(), a.generators().rend());
    Zonotope b(3, rev, Mode::Exact);
    Vector u = random_lattice_vector(rng, 3, 4);
    Vector v = random_lattice_vector(rng, 3, 4);
    CHECK(check_hope(a, u, v).margin == check_hope(b, u, v).margin);
  }
}

TEST_CASE("zonequiv items agree on the cube") {
  Zonotope cube = Zonotope::cube(3, Mode::Exact);
  CheckResult r = check_zon_equivalents(cube, Vector::lattice({1, 0, 0}), Vector::lattice({0, 1, 0}));
  CHECK(r.witness["details"]["agree"].get<bool>());
  // item 3 on the cube: 1 * 1 = 1 * 1; item 4: Loomis-Whitney equality
  CHECK(r.witness["details"]["item3"] == "equality");
  CHECK(r.witness["details"]["item4"] == "equality");
  CHECK(r.witness["details"]["item5"] == "equality");
}

TEST_CASE("zonequiv items never disagree on random R^3 instances") {
  RngStream rng(86, 0);
  const CheckInfo& info = require_check("zonequiv.r3");
  InstanceConfig cfg;
  cfg.dim = 3;
  cfg.gens_min = 3;
  cfg.gens_max = 5;
  for (int trial = 0; trial < 60; ++trial) {
    RngStream stream(86, trial);
    CheckResult r = info.evaluate(info.generate(stream, cfg));
    CHECK(r.witness["details"]["agree"].get<bool>());
    CHECK(r.verdict != Verdict::Violated);
  }
  (void)rng;
}

TEST_CASE("parallelotope check with equality detector") {
  // cube with u, v in complementary coordinate spans: exact equality
  Parallelotope cube(Vector::lattice({0, 0, 0}),
                     {Vector::lattice({1, 0, 0}), Vector::lattice({0, 1, 0}),
                      Vector::lattice({0, 0, 1})});
  CheckResult eq = check_parallelotope(cube, Vector::lattice({2, 3, 0}), Vector::lattice({0, 0, 5}));
  CHECK(eq.verdict == Verdict::Equality);
  CHECK(eq.witness["details"]["split_condition"].get<bool>());

  CheckResult generic = check_parallelotope(cube, Vector::lattice({1, 1, 1}), Vector::lattice({1, -1, 2}));
  CHECK(generic.verdict == Verdict::Holds);
  CHECK_FALSE(generic.witness["details"]["split_condition"].get<bool>());
}

TEST_CASE("parallelotope subspace product inequality") {
  RngStream rng(87, 0);
  InstanceConfig cfg;
  cfg.dim = 4;
  for (int trial = 0; trial < 30; ++trial) {
    Parallelotope p = random_parallelotope(rng, cfg);
    CheckResult r = check_parallelotope_subspaces(p, {0}, {1});
    CHECK(r.mode == Mode::Exact);
    CHECK(r.verdict != Verdict::Violated);
    CheckResult r2 = check_parallelotope_subspaces(p, {0, 2}, {1});
    CHECK(r2.verdict != Verdict::Violated);
  }
  CHECK_THROWS_AS(check_parallelotope_subspaces(random_parallelotope(rng, cfg), {0}, {0}),
                  InputError);
}

TEST_CASE("courtade square triple equality") {
  ConvexPolygon sq = ConvexPolygon::unit_square(Mode::Exact);
  CheckResult r = check_courtade2(sq, sq, sq);
  // sqrt(4*4) - (sqrt(1*9) + sqrt(1*1)) = 0
  CHECK(std::fabs(r.margin.to_double()) < 1e-12);

  // B = C = point: reduces to equality
  ConvexPolygon pt({{Scalar::exact(0), Scalar::exact(0)}});
  CheckResult triv = check_courtade2(sq, pt, pt);
  CHECK(std::fabs(triv.margin.to_double()) < 1e-12);
}

TEST_CASE("steiner.c2 rejects non-planar generator families") {
  Zonotope z = Zonotope::cube(3, Mode::Exact);
  std::vector<Vector> full{Vector::lattice({1, 0, 0}), Vector::lattice({0, 1, 0}),
                           Vector::lattice({0, 0, 1})};
  CHECK_THROWS_AS(check_steiner_c2(z, full), InputError);
  std::vector<Vector> planar{Vector::lattice({1, 0, 0}), Vector::lattice({0, 1, 0}),
                             Vector::lattice({1, 1, 0})};
  CheckResult r = check_steiner_c2(z, planar);
  CHECK(r.mode == Mode::Exact);
}

TEST_CASE("gamma.ball float-band verdicts never report violated inside tolerance") {
  // a float margin inside the tolerance band must come back inconclusive
  CheckResult r = make_check_result("x", Scalar::real(1.0), Scalar::real(1.0 + 1e-12), 1e-9, {});
  CHECK(r.verdict == Verdict::Inconclusive);
  CheckResult eq = make_check_result("x", Scalar::real(1.0), Scalar::real(1.0), 1e-9, {});
  CHECK(eq.verdict == Verdict::Equality);
  CheckResult ex = make_check_result("x", Scalar::exact(1), Scalar::exact(1), 0.0, {});
  CHECK(ex.verdict == Verdict::Equality);
  CheckResult bad = make_check_result("x", Scalar::exact(2), Scalar::exact(1), 0.0, {});
  CHECK(bad.verdict == Verdict::Violated);
}

TEST_CASE("every check evaluates its own generated instances") {
  InstanceConfig cfg;
  cfg.dim = 3;
  cfg.gens_min = 3;
  cfg.gens_max = 5;
  for (const CheckInfo& c : check_registry()) {
    CAPTURE(c.id);
    for (std::uint64_t trial = 0; trial < 3; ++trial) {
      RngStream rng(91, trial);
      InstanceConfig use = cfg;
      if (c.id == "l2.surface") continue;  // slow path, covered elsewhere
      nlohmann::json inst = c.generate(rng, use);
      CheckResult r = c.evaluate(inst);
      CHECK_FALSE(r.check_id.empty());
    }
  }
}

TEST_CASE("surfproj strict margin holds for R^3 zonotopes and carries the weak margin") {
  RngStream rng(92, 0);
  InstanceConfig cfg;
  cfg.dim = 3;
  cfg.gens_min = 3;
  cfg.gens_max = 6;
  cfg.mode = Mode::Float;
  cfg.dist = InstanceConfig::Dist::Gaussian;
  for (int trial = 0; trial < 30; ++trial) {
    Zonotope a = random_zonotope(rng, cfg);
    Vector u = random_unit_vector(rng, 3);
    CheckResult r = check_surface_ratio_projection(a, u);
    if (r.verdict == Verdict::Inconclusive) continue;
    CHECK(r.verdict != Verdict::Violated);
    CHECK(r.witness["details"]["weak_margin"].get<double>() >= -1e-9);
  }
}

TEST_CASE("dct ratio probe reports both margins on zonotopes") {
  RngStream rng(93, 0);
  InstanceConfig cfg;
  cfg.dim = 3;
  cfg.gens_min = 3;
  cfg.gens_max = 6;
  for (int trial = 0; trial < 20; ++trial) {
    Zonotope a = random_zonotope(rng, cfg);
    Zonotope b = random_zonotope(rng, cfg);
    CheckResult r = check_dct_ratio(a, b);
    if (r.verdict == Verdict::Inconclusive) continue;
    CHECK(r.witness["details"].contains("weak_margin"));
  }
}
