#include <cmath>

#include "doctest.h"
#include "zonocalc/checks.hpp"
#include "zonocalc/rng.hpp"
#include "zonocalc/search.hpp"
#include "zonocalc/special_functions.hpp"
#include "zonocalc/steiner.hpp"

using namespace zonocalc;

namespace {

SteinerPoly qpoly(std::vector<std::pair<long, long>> coeffs) {
  std::vector<Scalar> c;
  for (auto [n, d] : coeffs) c.push_back(Scalar::exact(n, d));
  return SteinerPoly(std::move(c));
}

// Adaptive Simpson on [a,b].
double simpson(const std::function<double(double)>& f, double a, double b, double eps, int depth) {
  double m = 0.5 * (a + b);
  auto s = [&](double x0, double x2) {
    double x1 = 0.5 * (x0 + x2);
    return (x2 - x0) / 6.0 * (f(x0) + 4.0 * f(x1) + f(x2));
  };
  double whole = s(a, b), left = s(a, m), right = s(m, b);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * eps) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson(f, a, m, eps / 2, depth - 1) + simpson(f, m, b, eps / 2, depth - 1);
}

// Integral over B^d of (1-|x|^2)^(s/2) by the radial formula with r = sin(theta).
double moment_quadrature(int d, int s) {
  auto integrand = [&](double th) {
    return std::pow(std::sin(th), d - 1) * std::pow(std::cos(th), s + 1);
  };
  double radial = simpson(integrand, 0.0, M_PI / 2.0, 1e-13, 40);
  return d * ball_volume(d).float_value() * radial;
}

}  // namespace

TEST_CASE("polynomial basics") {
  SteinerPoly p = qpoly({{2, 1}, {-3, 1}, {1, 1}});  // 2 - 3t + t^2
  CHECK(p.degree() == 2);
  CHECK(p.eval(Scalar::exact(2)) == Scalar::exact(0));
  SteinerPoly d = p.derivative();
  CHECK(d.coeff(0) == Scalar::exact(-3));
  CHECK(d.coeff(1) == Scalar::exact(2));
  CHECK_THROWS_AS(SteinerPoly({Scalar::exact(0)}).trimmed(), DegenerateError);
  std::vector<Scalar> too_long(14, Scalar::real(1.0));
  CHECK_THROWS_AS(SteinerPoly(std::move(too_long)), CapError);
}

TEST_CASE("all_roots_real examples") {
  // t^2 - 3t + 2 has roots 1, 2
  RootReport two = all_roots_real(qpoly({{2, 1}, {-3, 1}, {1, 1}}));
  CHECK(two.verdict == RootVerdict::AllReal);
  REQUIRE(two.real_roots.size() == 2);
  CHECK(two.real_roots[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(two.real_roots[1] == doctest::Approx(2.0).epsilon(1e-10));

  RootReport none = all_roots_real(qpoly({{1, 1}, {0, 1}, {1, 1}}));  // t^2 + 1
  CHECK(none.verdict == RootVerdict::NotAllReal);
  CHECK(none.real_roots.empty());

  // the flat-disk Steiner polynomial pi t (2 + pi t + 4/3 t^2)
  SteinerPoly marcus = flat_disk_steiner(3);
  RootReport rep = all_roots_real(marcus);
  CHECK(rep.verdict == RootVerdict::NotAllReal);
  CHECK(discriminant2(Scalar::real(2.0), Scalar::real(M_PI), Scalar::real(4.0 / 3.0))
            .float_value() == doctest::Approx(M_PI * M_PI - 32.0 / 3.0).epsilon(1e-14));

  CHECK_THROWS_AS(all_roots_real(qpoly({{5, 1}})), DegenerateError);
}

TEST_CASE("sturm handles repeated roots through the square-free part") {
  // (t-1)^2 (t+2)
  SteinerPoly p = qpoly({{2, 1}, {-3, 1}, {0, 1}, {1, 1}});
  RootReport rep = all_roots_real(p);
  CHECK(rep.verdict == RootVerdict::AllReal);
  REQUIRE(rep.real_roots.size() == 2);  // distinct roots -2, 1
  CHECK(rep.real_roots[0] == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(rep.real_roots[1] == doctest::Approx(1.0).epsilon(1e-9));

  // (t^2+1)(t-3): not all real even though one real root exists
  SteinerPoly q = qpoly({{-3, 1}, {1, 1}, {-3, 1}, {1, 1}});
  CHECK(all_roots_real(q).verdict == RootVerdict::NotAllReal);
}

TEST_CASE("sturm and the float root path agree on separated rational roots") {
  RngStream rng(61, 0);
  for (int trial = 0; trial < 60; ++trial) {
    int deg = static_cast<int>(rng.next_int(2, 6));
    // build a polynomial from random rational roots separated by >= 1e-4,
    // sometimes swapping a quadratic factor with complex roots in
    std::vector<Scalar> coeffs{Scalar::exact(1)};
    auto mul_linear = [&](Scalar root) {
      std::vector<Scalar> next(coeffs.size() + 1, Scalar::exact(0));
      for (size_t i = 0; i < coeffs.size(); ++i) {
        next[i + 1] += coeffs[i];
        next[i] -= root * coeffs[i];
      }
      coeffs = std::move(next);
    };
    bool complex_pair = rng.next_double() < 0.4 && deg >= 2;
    std::vector<long> used;
    int linear = complex_pair ? deg - 2 : deg;
    for (int i = 0; i < linear; ++i) {
      long r = rng.next_int(-20, 20);
      while (std::find(used.begin(), used.end(), r) != used.end()) r = rng.next_int(-20, 20);
      used.push_back(r);
      mul_linear(Scalar::exact(r, 2));  // roots at half-integers, separated by >= 1/2
    }
    if (complex_pair) {
      // multiply by (t^2 + bt + c) with negative discriminant
      long b = rng.next_int(-3, 3);
      long c = b * b + 1 + rng.next_int(1, 5);
      std::vector<Scalar> next(coeffs.size() + 2, Scalar::exact(0));
      for (size_t i = 0; i < coeffs.size(); ++i) {
        next[i + 2] += coeffs[i];
        next[i + 1] += Scalar::exact(b) * coeffs[i];
        next[i] += Scalar::exact(c, 4) * coeffs[i];
      }
      coeffs = std::move(next);
    }
    SteinerPoly exact(coeffs);
    RootReport se = all_roots_real(exact);
    RootReport fl = all_roots_real(exact.to_float());
    CHECK(se.verdict == (complex_pair ? RootVerdict::NotAllReal : RootVerdict::AllReal));
    if (fl.verdict != RootVerdict::Inconclusive) CHECK(fl.verdict == se.verdict);
    if (se.verdict == RootVerdict::AllReal && fl.verdict == RootVerdict::AllReal) {
      REQUIRE(fl.real_roots.size() >= se.real_roots.size());
      for (size_t i = 0; i < se.real_roots.size(); ++i) {
        double best = 1e9;
        for (double r : fl.real_roots) best = std::min(best, std::fabs(r - se.real_roots[i]));
        CHECK(best < 1e-6);
      }
    }
  }
}

TEST_CASE("beta moment closed form matches quadrature") {
  for (int d = 1; d <= 4; ++d)
    for (int s = 0; s <= 2; ++s) {
      double closed = ball_volume(d).float_value() *
                      std::exp(ln_gamma(d / 2.0 + 1.0) + ln_gamma(s / 2.0 + 1.0) -
                               ln_gamma((d + s) / 2.0 + 1.0));
      CHECK(closed == doctest::Approx(moment_quadrature(d, s)).epsilon(1e-9));
    }
}

TEST_CASE("flat disk steiner polynomial") {
  SteinerPoly p3 = flat_disk_steiner(3);
  CHECK(p3.degree() == 3);
  CHECK(p3.coeff(0).float_value() == 0.0);
  CHECK(p3.coeff(1).float_value() == doctest::Approx(2.0 * M_PI).epsilon(1e-13));
  CHECK(p3.coeff(2).float_value() == doctest::Approx(M_PI * M_PI).epsilon(1e-13));
  CHECK(p3.coeff(3).float_value() == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-13));

  for (int n = 3; n <= 6; ++n) {
    SteinerPoly p = flat_disk_steiner(n);
    CHECK(p.degree() == n);
    // evaluate at t = 1 against the radial quadrature of |B^2| Int (1+sqrt(1-|x|^2))^2
    int d = n - 2;
    auto integrand = [&](double th) {
      double c = std::cos(th);
      return std::pow(std::sin(th), d - 1) * c * (1.0 + c) * (1.0 + c);
    };
    double oracle = M_PI * d * ball_volume(d).float_value() *
                    simpson(integrand, 0.0, M_PI / 2.0, 1e-13, 40);
    CHECK(p.eval(Scalar::real(1.0)).float_value() == doctest::Approx(oracle).epsilon(1e-8));
  }
}

TEST_CASE("sqrt concavity of quadratics via the discriminant") {
  // (1+t)^2: discriminant 0, concave
  CHECK(discriminant2(Scalar::exact(1), Scalar::exact(2), Scalar::exact(1)) == Scalar::exact(0));
  // cube + t([0,e1]+[0,e2]): P = 1 + 2t + t^2
  Zonotope cube = Zonotope::cube(3, Mode::Exact);
  CheckResult r = check_steiner_real3(cube, Vector::unit(3, 0, Mode::Exact),
                                      Vector::unit(3, 1, Mode::Exact));
  CHECK(r.witness["details"]["c0"].get<double>() == doctest::Approx(1.0));
  CHECK(r.witness["details"]["c1"].get<double>() == doctest::Approx(2.0));
  CHECK(r.witness["details"]["c2"].get<double>() == doctest::Approx(1.0));
  CHECK(r.verdict == Verdict::Equality);  // discriminant exactly 0
  // 2 + pi t + (4/3) t^2 is not concave: discriminant pi^2 - 32/3 < 0
  CHECK(discriminant2(Scalar::real(2.0), Scalar::real(M_PI), Scalar::real(4.0 / 3.0)).sgn() < 0);
}

TEST_CASE("|Z + t([0,u]+[0,v])| has real roots for R^3 zonotopes") {
  RngStream rng(62, 0);
  InstanceConfig cfg;
  cfg.dim = 3;
  cfg.gens_min = 3;
  cfg.gens_max = 6;
  for (int trial = 0; trial < 60; ++trial) {
    Zonotope z = random_zonotope(rng, cfg);
    Vector u = random_lattice_vector(rng, 3, 5);
    Vector v = random_lattice_vector(rng, 3, 5);
    CheckResult r = check_steiner_real3(z, u, v);
    CHECK(r.mode == Mode::Exact);
    CHECK(r.verdict != Verdict::Violated);
  }
}

TEST_CASE("cubic discriminant signs") {
  // (t-1)(t-2)(t-3): positive discriminant
  CHECK(discriminant3(Scalar::exact(-6), Scalar::exact(11), Scalar::exact(-6), Scalar::exact(1))
            .sgn() > 0);
  // t^3 + t + 1: one real root
  CHECK(discriminant3(Scalar::exact(1), Scalar::exact(1), Scalar::exact(0), Scalar::exact(1))
            .sgn() < 0);
}

TEST_CASE("marcus discriminant for the m-gon zonogon approximations") {
  // the slab zonogon has an exactly flat Steiner polynomial; its normalized
  // quadratic-factor discriminant converges to pi^2 - 32/3
  CheckResult m64 = check_steiner_marcus(flat_disk_zonotope(64));
  CHECK(m64.witness["details"]["flat"].get<bool>());
  CHECK(m64.margin.to_double() < 0.0);
  CHECK(m64.margin.to_double() == doctest::Approx(M_PI * M_PI - 32.0 / 3.0).epsilon(1e-2));

  // the parallelogram slab (m = 2) stays real-rooted
  CheckResult m2 = check_steiner_marcus(flat_disk_zonotope(2));
  CHECK(m2.margin.to_double() > 0.0);
}

TEST_CASE("sqrt_concavity_check on the named quadratics") {
  // (1+t)^2: concave with discriminant exactly 0
  SteinerPoly sq({Scalar::exact(1), Scalar::exact(2), Scalar::exact(1)});
  CheckResult r1 = sqrt_concavity_check(sq);
  CHECK(r1.verdict == Verdict::Equality);
  CHECK(r1.margin == Scalar::exact(0));

  // cube + t([0,e1]+[0,e2]): P = 1 + 2t + t^2, concave
  SteinerPoly cube_poly({Scalar::exact(1), Scalar::exact(2), Scalar::exact(1)});
  CHECK(sqrt_concavity_check(cube_poly).verdict != Verdict::Violated);

  // 2 + pi t + (4/3) t^2: discriminant pi^2 - 32/3 < 0, not concave
  SteinerPoly marcus({Scalar::real(2.0), Scalar::real(M_PI), Scalar::real(4.0 / 3.0)});
  CheckResult r3 = sqrt_concavity_check(marcus);
  CHECK(r3.verdict == Verdict::Violated);
  CHECK(r3.margin.to_double() == doctest::Approx(M_PI * M_PI - 32.0 / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(sqrt_concavity_check(SteinerPoly({Scalar::exact(1), Scalar::exact(1)})),
                  DimensionError);
}
