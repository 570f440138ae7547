#include <cmath>

#include "doctest.h"
#include "zonocalc/checks.hpp"
#include "zonocalc/polygon2d.hpp"
#include "zonocalc/rng.hpp"
#include "zonocalc/submodular.hpp"

using namespace zonocalc;

namespace {

SetFunction cardinality(int m) {
  std::vector<Scalar> t;
  for (std::uint32_t s = 0; s < (1u << m); ++s)
    t.push_back(Scalar::exact(__builtin_popcount(s)));
  return SetFunction(m, std::move(t));
}

SetFunction cardinality_squared(int m) {
  std::vector<Scalar> t;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    long c = __builtin_popcount(s);
    t.push_back(Scalar::exact(c * c));
  }
  return SetFunction(m, std::move(t));
}

SetFunction random_coverage(RngStream& rng, int m, int universe) {
  std::vector<std::uint32_t> cover;
  for (int i = 0; i < m; ++i)
    cover.push_back(static_cast<std::uint32_t>(rng.next_int(0, (1 << universe) - 1)));
  std::vector<Scalar> t;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    std::uint32_t u = 0;
    for (int i = 0; i < m; ++i)
      if (s & (1u << i)) u |= cover[i];
    t.push_back(Scalar::exact(__builtin_popcount(u)));
  }
  return SetFunction(m, std::move(t));
}

SetFunction random_table(RngStream& rng, int m) {
  std::vector<Scalar> t;
  for (std::uint32_t s = 0; s < (1u << m); ++s) t.push_back(Scalar::exact(rng.next_int(0, 8)));
  return SetFunction(m, std::move(t));
}

}  // namespace

TEST_CASE("submodularity examples") {
  CHECK(is_submodular(cardinality(4)).submodular);  // modular
  SubmodularityReport sq = is_submodular(cardinality_squared(2));
  CHECK_FALSE(sq.submodular);
  CHECK(sq.worst_margin == Scalar::exact(-2));  // 1 + 1 - 4 - 0

  // log-areas of A=[0,1]^2, B1=[0,e1], B2=[0,e2]: |A|=1, |A+Bi|=2, |A+B1+B2|=4
  ConvexPolygon a = ConvexPolygon::unit_square(Mode::Exact);
  ConvexPolygon b1({{Scalar::exact(0), Scalar::exact(0)}, {Scalar::exact(1), Scalar::exact(0)}});
  ConvexPolygon b2({{Scalar::exact(0), Scalar::exact(0)}, {Scalar::exact(0), Scalar::exact(1)}});
  std::vector<Scalar> t;
  for (std::uint32_t s = 0; s < 4; ++s) {
    ConvexPolygon sum = a;
    if (s & 1) sum = minkowski_sum(sum, b1);
    if (s & 2) sum = minkowski_sum(sum, b2);
    t.push_back(Scalar::real(std::log(area(sum).to_double())));
  }
  SubmodularityReport rep = is_submodular(SetFunction(2, std::move(t)));
  CHECK(rep.submodular);
  CHECK(std::fabs(rep.worst_margin.to_double()) < 1e-12);  // log 4 = log 2 + log 2
}

TEST_CASE("local and pairwise submodularity checks agree on random tables") {
  RngStream rng(71, 0);
  int disagreements = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    int m = static_cast<int>(rng.next_int(2, 5));
    SetFunction f = random_table(rng, m);
    if (is_submodular(f).submodular != is_submodular_pairwise(f).submodular) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("elementary compression examples") {
  MultiHypergraph h1(2, {0b01, 0b10});
  MultiHypergraph c1 = elementary_compression(h1, 0, 1);
  CHECK(c1.canonical() == std::vector<std::uint32_t>{0b11});  // empty intersection dropped

  MultiHypergraph h2(3, {0b011, 0b110});
  MultiHypergraph c2 = elementary_compression(h2, 0, 1);
  CHECK(c2.canonical() == std::vector<std::uint32_t>{0b010, 0b111});

  MultiHypergraph nested(2, {0b01, 0b11});
  CHECK_THROWS_AS(elementary_compression(nested, 0, 1), DegenerateError);
}

TEST_CASE("minimal hypergraph") {
  MultiHypergraph h(3, {0b011, 0b110, 0b010});
  // element counts: e0 in 1 set, e1 in 3 sets, e2 in 1 set
  MultiHypergraph m = minimal_hypergraph(h);
  CHECK(m.canonical() == std::vector<std::uint32_t>{0b010, 0b010, 0b111});
}

TEST_CASE("greedy compression reaches the minimal hypergraph with smaller sums") {
  RngStream rng(72, 0);
  for (int trial = 0; trial < 200; ++trial) {
    int m = static_cast<int>(rng.next_int(2, 5));
    SetFunction f = random_coverage(rng, m, 10);
    std::vector<std::uint32_t> sets;
    int hsize = static_cast<int>(rng.next_int(2, 6));
    for (int i = 0; i < hsize; ++i)
      sets.push_back(static_cast<std::uint32_t>(rng.next_int(1, (1 << m) - 1)));
    MultiHypergraph h(m, sets);
    MultiHypergraph cur = h;
    for (;;) {
      int ci = -1, cj = -1;
      const auto& ss = cur.sets();
      for (int i = 0; i < static_cast<int>(ss.size()) && ci < 0; ++i)
        for (int j = i + 1; j < static_cast<int>(ss.size()); ++j) {
          std::uint32_t a = ss[i], b = ss[j];
          if ((a & b) != a && (a & b) != b) {
            ci = i;
            cj = j;
            break;
          }
        }
      if (ci < 0) break;
      MultiHypergraph next = elementary_compression(cur, ci, cj);
      // each step never increases the sum for submodular F
      CHECK((hypergraph_sum(f, cur) - hypergraph_sum(f, next)).sgn() >= 0);
      cur = next;
    }
    CHECK(cur.canonical() == minimal_hypergraph(h).canonical());
    CHECK((hypergraph_sum(f, h) - hypergraph_sum(f, cur)).sgn() >= 0);
  }
}

TEST_CASE("compression sum check: modular functions give equality at every step") {
  SetFunction f = cardinality(4);
  MultiHypergraph h(4, {0b0011, 0b0110, 0b1100});
  std::vector<std::pair<int, int>> steps{{0, 1}, {0, 1}, {0, 1}};
  CheckResult r = compression_sum_check(f, h, steps);
  CHECK(r.verdict == Verdict::Equality);
}

TEST_CASE("compression sum check holds over random submodular instances") {
  RngStream rng(73, 0);
  const CheckInfo& info = require_check("submod.compression");
  InstanceConfig cfg;
  for (int trial = 0; trial < 300; ++trial) {
    RngStream stream(73, trial);
    nlohmann::json inst = info.generate(stream, cfg);
    CheckResult r = info.evaluate(inst);
    CHECK(r.verdict != Verdict::Violated);
  }
  (void)rng;
}

TEST_CASE("grid second differences of log-volume match the mixed-volume margin sign") {
  // w(x) = log|A + x1 B1 + x2 B2| on a grid; the discrete mixed second
  // difference is <= 0 exactly when the local Alexandrov-Fenchel margin >= 0.
  RngStream rng(74, 0);
  InstanceConfig cfg;
  cfg.dim = 3;
  cfg.gens_min = 3;
  cfg.gens_max = 5;
  for (int trial = 0; trial < 10; ++trial) {
    Zonotope a = random_zonotope(rng, cfg);
    if (volume(a).is_zero()) continue;
    Vector u = random_lattice_vector(rng, 3, 4);
    Vector v = random_lattice_vector(rng, 3, 4);
    if (norm_sq(u).is_zero() || norm_sq(v).is_zero()) continue;
    Zonotope b1 = Zonotope::segment(u), b2 = Zonotope::segment(v);

    const double h = 0.25;
    auto w = [&](int i, int j) {
      Zonotope sum = a.to_float();
      Scalar si = Scalar::real(i * h), sj = Scalar::real(j * h);
      sum = minkowski_sum(sum, Zonotope::segment(si * u.to_float()));
      sum = minkowski_sum(sum, Zonotope::segment(sj * v.to_float()));
      return std::log(volume(sum).to_double());
    };
    double mixed_diff = w(1, 1) - w(1, 0) - w(0, 1) + w(0, 0);
    CheckResult af = check_local_af(a, b1, b2);
    // both must agree that the instance is log-submodular
    CHECK(mixed_diff <= 1e-9);
    CHECK(af.verdict != Verdict::Violated);
  }
}

TEST_CASE("product inequality on zonotope families implies table submodularity") {
  // build the full set function S -> log|A + sum_{i in S} B_i| and check it
  RngStream rng(75, 0);
  InstanceConfig cfg;
  cfg.dim = 3;
  cfg.gens_min = 3;
  cfg.gens_max = 4;
  for (int trial = 0; trial < 10; ++trial) {
    Zonotope a = random_zonotope(rng, cfg);
    if (volume(a).is_zero()) continue;
    std::vector<Zonotope> bs;
    for (int i = 0; i < 3; ++i) {
      Vector u = random_lattice_vector(rng, 3, 4);
      if (norm_sq(u).is_zero()) u = Vector::unit(3, 0, Mode::Exact);
      bs.push_back(Zonotope::segment(u));
    }
    std::vector<Scalar> table;
    for (std::uint32_t s = 0; s < 8; ++s) {
      Zonotope sum = a;
      for (int i = 0; i < 3; ++i)
        if (s & (1u << i)) sum = minkowski_sum(sum, bs[i]);
      table.push_back(Scalar::real(std::log(volume(sum).to_double())));
    }
    SubmodularityReport rep = is_submodular(SetFunction(3, std::move(table)));
    CHECK(rep.worst_margin.to_double() >= -1e-9);
  }
}
