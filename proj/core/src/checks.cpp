#include "zonocalc/checks.hpp"

#include <cmath>

#include "zonocalc/combinatorics.hpp"
#include "zonocalc/config.hpp"
#include "zonocalc/json_io.hpp"
#include "zonocalc/special_functions.hpp"

namespace zonocalc {

namespace {

constexpr double kRelTol = 1e-9;

Scalar frac(long a, long b, Mode m) {
  return m == Mode::Exact ? Scalar::exact(a, b)
                          : Scalar::real(static_cast<double>(a) / static_cast<double>(b));
}

/// sum over k-subsets I of the generators of |det(g_I | extras)|.
/// The workhorse of the exact checks: equals the corresponding projection or
/// mixed-volume quantity times a positive factor that cancels across both
/// sides of each inequality.
Scalar subset_det_sum(const Zonotope& z, int k, std::span<const Vector> extras) {
  const int m = z.num_generators();
  Scalar total = Scalar::zero(z.mode());
  if (k < 0 || k > m) return total;
  if (binomial(m, k) > config::max_subsets()) throw CapError("subset enumeration cap exceeded");
  std::vector<Vector> cols;
  for (CombinationIter it(m, k); !it.done(); it.next()) {
    cols.clear();
    for (int i : it.current()) cols.push_back(z.generator(i));
    for (const Vector& e : extras) cols.push_back(e);
    total += abs(det_of_columns(cols));
  }
  return total;
}

double rel_tol_for(const Scalar& lhs, const Scalar& rhs) {
  return relative_tolerance(kRelTol, lhs.to_double(), rhs.to_double());
}

CheckResult result_auto(std::string id, const Scalar& lhs, const Scalar& rhs, nlohmann::json w) {
  double tol = lhs.mode() == Mode::Exact ? 0.0 : rel_tol_for(lhs, rhs);
  return make_check_result(std::move(id), lhs, rhs, tol, std::move(w));
}

}  // namespace

CheckResult check_logsubmod(const Zonotope& a, const Zonotope& b1, const Zonotope& b2) {
  nlohmann::json w{{"instance", {{"A", zonotope_to_json(a)}, {"B1", zonotope_to_json(b1)},
                                 {"B2", zonotope_to_json(b2)}}}};
  Scalar lhs = volume(a) * volume(minkowski_sum(a, minkowski_sum(b1, b2)));
  Scalar rhs = volume(minkowski_sum(a, b1)) * volume(minkowski_sum(a, b2));
  return result_auto("logsubmod.zonotope", lhs, rhs, std::move(w));
}

namespace {

CheckResult local_af_general(const std::string& id, const Zonotope& a, const Zonotope& z1,
                             const Zonotope& z2, long cnum, long cden) {
  const int n = a.dim();
  if (n < 2) throw DimensionError("needs dim >= 2");
  nlohmann::json w{{"instance", {{"A", zonotope_to_json(a)}, {"Z1", zonotope_to_json(z1)},
                                 {"Z2", zonotope_to_json(z2)}}}};
  if (z1.num_generators() == 0 || z2.num_generators() == 0)
    return result_auto(id, Scalar::zero(a.mode()), Scalar::zero(a.mode()), std::move(w));

  std::vector<Zonotope> mixed_slots(static_cast<size_t>(n - 2), a);
  mixed_slots.push_back(z1);
  mixed_slots.push_back(z2);
  Scalar v_a_z1z2 = mixed_volume(mixed_slots);

  std::vector<Zonotope> s1(static_cast<size_t>(n - 1), a);
  s1.push_back(z1);
  Scalar v1 = mixed_volume(s1);
  std::vector<Zonotope> s2(static_cast<size_t>(n - 1), a);
  s2.push_back(z2);
  Scalar v2 = mixed_volume(s2);

  Scalar lhs = volume(a) * v_a_z1z2;
  Scalar rhs = frac(cnum, cden, a.mode()) * v1 * v2;
  return result_auto(id, lhs, rhs, std::move(w));
}

}  // namespace

CheckResult check_local_af(const Zonotope& a, const Zonotope& z1, const Zonotope& z2) {
  return local_af_general("localaf.zonotope", a, z1, z2, a.dim(), a.dim() - 1);
}

CheckResult check_fenchel2(const Zonotope& a, const Zonotope& z1, const Zonotope& z2) {
  return local_af_general("fenchel2.zonotope", a, z1, z2, 2, 1);
}

CheckResult check_hope(const Zonotope& a, const Vector& u, const Vector& v) {
  if (a.dim() != 3) throw DimensionError("hope.r3 lives in R^3");
  nlohmann::json w{{"instance", {{"A", zonotope_to_json(a)}, {"u", vector_to_json(u)},
                                 {"v", vector_to_json(v)}}}};
  // Scaled determinant form: both sides carry the factor ||u|| ||v||, so the
  // sign (and the equality case) is exact on rational inputs for any u, v.
  Vector uv[2] = {u, v};
  Scalar s_u = subset_det_sum(a, 2, std::span<const Vector>(&uv[0], 1));
  Scalar s_v = subset_det_sum(a, 2, std::span<const Vector>(&uv[1], 1));
  Scalar s_uv = subset_det_sum(a, 1, std::span<const Vector>(uv, 2));
  Scalar lhs = volume(a) * s_uv;
  Scalar rhs = s_u * s_v;
  return result_auto("hope.r3", lhs, rhs, std::move(w));
}

CheckResult check_surface_ratio_projection(const Zonotope& a, const Vector& u) {
  const int n = a.dim();
  nlohmann::json w{{"instance", {{"A", zonotope_to_json(a)}, {"u", vector_to_json(u)}}}};
  Zonotope af = a.mode() == Mode::Float ? a : a.to_float();
  Vector uf = u.mode() == Mode::Float ? u : u.to_float();
  double nn = norm(uf);
  if (nn == 0.0) return make_inconclusive("surfproj.zonotope", "zero direction", std::move(w));
  uf = Scalar::real(1.0 / nn) * uf;

  double vol_a = volume(af).to_double();
  if (vol_a <= 0.0)
    return make_inconclusive("surfproj.zonotope", "flat body (zero volume)", std::move(w));
  double surf_a = surface_area(af).to_double();
  std::vector<Vector> basis{uf};
  Zonotope proj = project(af, basis);
  double vol_p = projection_volume(af, basis).to_double();
  double surf_p = surface_area_intrinsic(proj, n - 1).to_double();
  if (vol_p <= 0.0)
    return make_inconclusive("surfproj.zonotope", "zero projection volume", std::move(w));

  Scalar lhs = Scalar::real(vol_a * surf_p);
  Scalar rhs = Scalar::real(surf_a * vol_p);
  CheckResult r = make_check_result("surfproj.zonotope", lhs, rhs, rel_tol_for(lhs, rhs), std::move(w));
  double weak = (2.0 * (n - 1) / n) * surf_a * vol_p - vol_a * surf_p;
  r.witness["details"] = {{"weak_margin", weak}};
  return r;
}

CheckResult check_linear_equivalents(const Zonotope& a, const Vector& u, const Vector& v) {
  const int n = a.dim();
  if (n < 2) throw DimensionError("needs dim >= 2");
  nlohmann::json w{{"instance", {{"A", zonotope_to_json(a)}, {"u", vector_to_json(u)},
                                 {"v", vector_to_json(v)}}}};

  // Item 3 (primary): |A| S_uv <= S_u S_v, exact-capable for any u, v.
  Vector uv[2] = {u, v};
  Scalar s_u = subset_det_sum(a, n - 1, std::span<const Vector>(&uv[0], 1));
  Scalar s_v = subset_det_sum(a, n - 1, std::span<const Vector>(&uv[1], 1));
  Scalar s_uv = subset_det_sum(a, n - 2, std::span<const Vector>(uv, 2));
  Scalar vol_a = volume(a);
  Scalar lhs3 = vol_a * s_uv;
  Scalar rhs3 = s_u * s_v;
  Verdict v3 = classify(rhs3 - lhs3, a.mode(),
                        a.mode() == Mode::Exact ? 0.0 : rel_tol_for(lhs3, rhs3));

  // Item 4: |A+[0,u]+[0,v]| |A| <= |A+[0,u]| |A+[0,v]| (exact-capable).
  Zonotope au = minkowski_sum(a, Zonotope::segment(u));
  Zonotope av = minkowski_sum(a, Zonotope::segment(v));
  Zonotope auv = minkowski_sum(au, Zonotope::segment(v));
  Scalar lhs4 = vol_a * volume(auv);
  Scalar rhs4 = volume(au) * volume(av);
  Verdict v4 = classify(rhs4 - lhs4, a.mode(),
                        a.mode() == Mode::Exact ? 0.0 : rel_tol_for(lhs4, rhs4));

  // Item 6: real-rootedness of |A + t([0,u]+[0,v])| (exact discriminant).
  Zonotope l(n, {u, v}, a.mode());
  std::vector<Zonotope> s_slots(static_cast<size_t>(n - 1), a);
  s_slots.push_back(l);
  Scalar c1 = frac(n, 1, a.mode()) * mixed_volume(s_slots);
  std::vector<Zonotope> s2_slots(static_cast<size_t>(n - 2), a);
  s2_slots.push_back(l);
  s2_slots.push_back(l);
  Scalar c2 = frac(static_cast<long>(binomial(n, 2)), 1, a.mode()) * mixed_volume(s2_slots);
  Scalar disc = c1 * c1 - frac(4, 1, a.mode()) * c2 * vol_a;
  Verdict v6 = classify(disc, a.mode(),
                        a.mode() == Mode::Exact ? 0.0 : 1e-9 * std::fabs(c1.to_double() * c1.to_double()) + 1e-300);

  // Items 1 and 2 involve surface areas: float only.
  Zonotope af = a.mode() == Mode::Float ? a : a.to_float();
  Vector ufl = u.mode() == Mode::Float ? u : u.to_float();
  double surf_a = surface_area(af).to_double();
  double vol_af = vol_a.to_double();
  Zonotope auf = minkowski_sum(af, Zonotope::segment(ufl));
  Scalar lhs1 = Scalar::real(vol_af * surface_area(auf).to_double());
  Scalar rhs1 = Scalar::real(surf_a * volume(auf).to_double());
  Verdict v1 = classify(rhs1 - lhs1, Mode::Float, rel_tol_for(lhs1, rhs1));

  Verdict v2 = Verdict::Inconclusive;
  double un = norm(ufl);
  if (un > 0.0 && vol_af > 0.0) {
    Vector uhat = Scalar::real(1.0 / un) * ufl;
    std::vector<Vector> basis{uhat};
    double vol_p = projection_volume(af, basis).to_double();
    double surf_p = surface_area_intrinsic(project(af, basis), n - 1).to_double();
    if (vol_p > 0.0) {
      Scalar lhs2 = Scalar::real(vol_af * surf_p);
      Scalar rhs2 = Scalar::real(surf_a * vol_p);
      v2 = classify(rhs2 - lhs2, Mode::Float, rel_tol_for(lhs2, rhs2));
    }
  }

  auto held = [](Verdict x) { return x == Verdict::Holds || x == Verdict::Equality; };
  bool any_violated = false, any_held = false;
  for (Verdict x : {v1, v2, v3, v4, v6}) {
    any_violated |= x == Verdict::Violated;
    any_held |= held(x);
  }
  CheckResult r = result_auto("linear-equiv.zonotope", lhs3, rhs3, std::move(w));
  if (any_violated) r.verdict = Verdict::Violated;
  r.witness["details"] = {{"item1", to_string(v1)}, {"item2", to_string(v2)},
                          {"item3", to_string(v3)}, {"item4", to_string(v4)},
                          {"item6", to_string(v6)}, {"discriminant", disc.to_double()},
                          {"agree", !(any_violated && any_held)}};
  return r;
}

CheckResult check_zon_equivalents(const Zonotope& a, const Vector& u, const Vector& v) {
  const int n = a.dim();
  if (n < 3) throw DimensionError("zonequiv needs dim >= 3");
  nlohmann::json w{{"instance", {{"A", zonotope_to_json(a)}, {"u", vector_to_json(u)},
                                 {"v", vector_to_json(v)}}}};
  const Mode mode = a.mode();
  Scalar vol_a = volume(a);
  auto classify_pair = [&](const Scalar& lhs, const Scalar& rhs) {
    return classify(rhs - lhs, mode, mode == Mode::Exact ? 0.0 : rel_tol_for(lhs, rhs));
  };

  // 1: log-submodularity with segment summands.
  Zonotope au = minkowski_sum(a, Zonotope::segment(u));
  Zonotope av = minkowski_sum(a, Zonotope::segment(v));
  Zonotope auv = minkowski_sum(au, Zonotope::segment(v));
  Scalar lhs1 = vol_a * volume(auv);
  Scalar rhs1 = volume(au) * volume(av);
  Verdict v1 = classify_pair(lhs1, rhs1);

  // 2: subset-determinant form.
  Vector uv[2] = {u, v};
  Scalar s_u = subset_det_sum(a, n - 1, std::span<const Vector>(&uv[0], 1));
  Scalar s_v = subset_det_sum(a, n - 1, std::span<const Vector>(&uv[1], 1));
  Scalar s_uv = subset_det_sum(a, n - 2, std::span<const Vector>(uv, 2));
  Scalar lhs2 = vol_a * s_uv;
  Scalar rhs2 = s_u * s_v;
  Verdict v2 = classify_pair(lhs2, rhs2);

  // 3: coordinate subspaces E = e1^perp, F = e2^perp (E^perp inside F).
  Vector e1 = Vector::unit(n, 0, mode), e2 = Vector::unit(n, 1, mode);
  std::vector<Vector> b1{e1}, b2{e2}, b12{e1, e2};
  Scalar pe = projection_volume(a, b1);
  Scalar pf = projection_volume(a, b2);
  Scalar pef = projection_volume(a, b12);
  Scalar lhs3 = vol_a * pef;
  Scalar rhs3 = pe * pf;
  Verdict v3 = classify_pair(lhs3, rhs3);

  // 4: m = n coordinate directions: Loomis-Whitney |A|^{n-1} <= prod |P_{e_i^perp}A|.
  Scalar lhs4 = Scalar::one(mode);
  for (int i = 0; i < n - 1; ++i) lhs4 *= vol_a;
  Scalar rhs4 = Scalar::one(mode);
  for (int i = 0; i < n; ++i) {
    std::vector<Vector> bi{Vector::unit(n, i, mode)};
    rhs4 *= projection_volume(a, bi);
  }
  Verdict v4 = classify_pair(lhs4, rhs4);

  // 5: mixed-volume route with m = 2 segment slots.
  std::vector<Zonotope> mm(static_cast<size_t>(n - 2), a);
  mm.push_back(Zonotope::segment(u));
  mm.push_back(Zonotope::segment(v));
  Scalar vmix = mixed_volume(mm);
  std::vector<Zonotope> m1(static_cast<size_t>(n - 1), a);
  m1.push_back(Zonotope::segment(u));
  Scalar vu = mixed_volume(m1);
  std::vector<Zonotope> m2(static_cast<size_t>(n - 1), a);
  m2.push_back(Zonotope::segment(v));
  Scalar vv = mixed_volume(m2);
  // constant n^m (n-m)! / n! with m = 2.
  long fact_nm = 1, fact_n = 1;
  for (long i = 2; i <= n - 2; ++i) fact_nm *= i;
  for (long i = 2; i <= n; ++i) fact_n *= i;
  Scalar cst = frac(n * n * fact_nm, fact_n, mode);
  Scalar lhs5 = vol_a * vmix;
  Scalar rhs5 = cst * vu * vv;
  Verdict v5 = classify_pair(lhs5, rhs5);

  bool any_violated = false, any_held = false;
  for (Verdict x : {v1, v2, v3, v4, v5}) {
    any_violated |= x == Verdict::Violated;
    any_held |= x == Verdict::Holds || x == Verdict::Equality;
  }
  CheckResult r = result_auto("zonequiv.r3", lhs2, rhs2, std::move(w));
  if (any_violated) r.verdict = Verdict::Violated;
  r.witness["details"] = {{"item1", to_string(v1)}, {"item2", to_string(v2)},
                          {"item3", to_string(v3)}, {"item4", to_string(v4)},
                          {"item5", to_string(v5)}, {"agree", !(any_violated && any_held)}};
  return r;
}

CheckResult check_parallelotope(const Parallelotope& a, const Vector& u, const Vector& v) {
  const int n = a.dim();
  nlohmann::json w{{"instance", {{"P", parallelotope_to_json(a)}, {"u", vector_to_json(u)},
                                 {"v", vector_to_json(v)}}}};
  if (norm_sq(u).is_zero() || norm_sq(v).is_zero())
    return make_inconclusive("parallelotope.uv", "zero direction", std::move(w));
  Zonotope z = a.as_zonotope();
  Vector uv[2] = {u, v};
  Scalar s_u = subset_det_sum(z, n - 1, std::span<const Vector>(&uv[0], 1));
  Scalar s_v = subset_det_sum(z, n - 1, std::span<const Vector>(&uv[1], 1));
  Scalar s_uv = subset_det_sum(z, n - 2, std::span<const Vector>(uv, 2));
  Scalar lhs = volume(z) * s_uv;
  Scalar rhs = s_u * s_v;
  CheckResult r = result_auto("parallelotope.uv", lhs, rhs, std::move(w));

  // Equality detector: in edge coordinates u = sum_I lam_i w_i and
  // v = sum_{I^c} mu_i w_i, i.e. lam_i mu_i = 0 for every i.
  bool split = false;
  try {
    Matrix t = Matrix::from_columns(a.edges());
    Vector lam = solve(t, u);
    Vector mu = solve(t, v);
    split = true;
    for (int i = 0; i < n; ++i) {
      bool li = a.mode() == Mode::Exact ? lam[i].is_zero() : std::fabs(lam[i].to_double()) < 1e-10;
      bool mi = a.mode() == Mode::Exact ? mu[i].is_zero() : std::fabs(mu[i].to_double()) < 1e-10;
      if (!li && !mi) {
        split = false;
        break;
      }
    }
  } catch (const DegenerateError&) {
    split = false;
  }
  r.witness["details"] = {{"split_condition", split}};
  return r;
}

CheckResult check_parallelotope_subspaces(const Parallelotope& a, std::vector<int> drop_e,
                                          std::vector<int> drop_f) {
  const int n = a.dim();
  nlohmann::json w{{"instance", {{"P", parallelotope_to_json(a)}, {"drop_e", drop_e},
                                 {"drop_f", drop_f}}}};
  for (int i : drop_e)
    for (int j : drop_f)
      if (i == j) throw InputError("parallelotope.subspaces: E, F coordinate sets must be disjoint");
  if (drop_e.empty() || drop_f.empty() ||
      static_cast<int>(drop_e.size() + drop_f.size()) >= n)
    throw InputError("parallelotope.subspaces: need disjoint nonempty sets with union smaller than n");

  Scalar pe = parallelotope_projection_volume(a, drop_e);
  Scalar pf = parallelotope_projection_volume(a, drop_f);
  std::vector<int> both = drop_e;
  both.insert(both.end(), drop_f.begin(), drop_f.end());
  Scalar pef = parallelotope_projection_volume(a, both);
  Scalar vol = abs(det(Matrix::from_columns(a.edges())));
  Scalar lhs = vol * pef;
  Scalar rhs = pe * pf;
  return result_auto("parallelotope.subspaces", lhs, rhs, std::move(w));
}

CheckResult check_courtade2(const ConvexPolygon& a, const ConvexPolygon& b, const ConvexPolygon& c) {
  nlohmann::json w{{"instance", {{"A", polygon_to_json(a)}, {"B", polygon_to_json(b)},
                                 {"C", polygon_to_json(c)}}}};
  double va = area(a).to_double();
  double vb = area(b).to_double();
  double vc = area(c).to_double();
  double vab = area(minkowski_sum(a, b)).to_double();
  double vac = area(minkowski_sum(a, c)).to_double();
  double vabc = area(minkowski_sum(minkowski_sum(a, b), c)).to_double();
  Scalar lhs = Scalar::real(std::sqrt(va * vabc) + std::sqrt(vb * vc));
  Scalar rhs = Scalar::real(std::sqrt(vab * vac));
  return make_check_result("courtade.2d", lhs, rhs, rel_tol_for(lhs, rhs), std::move(w));
}

CheckResult check_fenchel_2d(const ConvexPolygon& a, const ConvexPolygon& b, const ConvexPolygon& c) {
  nlohmann::json w{{"instance", {{"A", polygon_to_json(a)}, {"B", polygon_to_json(b)},
                                 {"C", polygon_to_json(c)}}}};
  Scalar va = area(a), vb = area(b), vc = area(c);
  Scalar vab = mixed_area(a, b), vac = mixed_area(a, c), vbc = mixed_area(b, c);
  Scalar two = frac(2, 1, a.mode());
  Scalar lhs = vc * vab * vab + vb * vac * vac + va * vbc * vbc;
  Scalar rhs = va * vb * vc + two * vab * vac * vbc;
  return result_auto("fenchel.2d", lhs, rhs, std::move(w));
}

CheckResult check_logsubmod_2d(const ConvexPolygon& a, const ConvexPolygon& b1,
                               const ConvexPolygon& b2) {
  nlohmann::json w{{"instance", {{"A", polygon_to_json(a)}, {"B", polygon_to_json(b1)},
                                 {"C", polygon_to_json(b2)}}}};
  Scalar lhs = area(a) * area(minkowski_sum(a, minkowski_sum(b1, b2)));
  Scalar rhs = area(minkowski_sum(a, b1)) * area(minkowski_sum(a, b2));
  return result_auto("logsubmod.2d", lhs, rhs, std::move(w));
}

CheckResult check_bonnesen2(const ConvexPolygon& a, const ConvexPolygon& b, const Vector& u) {
  nlohmann::json w{{"instance", {{"A", polygon_to_json(a)}, {"B", polygon_to_json(b)},
                                 {"u", vector_to_json(u)}}}};
  Scalar wa = projection_length(a, u);
  Scalar wb = projection_length(b, u);
  if (wa.is_zero() || wb.is_zero())
    return make_inconclusive("bonnesen.2d", "zero projection length", std::move(w));
  Scalar lhs = (wa + wb) * (area(a) / wa + area(b) / wb);
  Scalar rhs = area(minkowski_sum(a, b));
  return result_auto("bonnesen.2d", lhs, rhs, std::move(w));
}

CheckResult check_dct_ratio(const Zonotope& a, const Zonotope& b) {
  nlohmann::json w{{"instance", {{"A", zonotope_to_json(a)}, {"B", zonotope_to_json(b)}}}};
  Zonotope af = a.mode() == Mode::Float ? a : a.to_float();
  Zonotope bf = b.mode() == Mode::Float ? b : b.to_float();
  double sa = surface_area(af).to_double();
  double sb = surface_area(bf).to_double();
  Zonotope ab = minkowski_sum(af, bf);
  double sab = surface_area(ab).to_double();
  if (sa == 0.0 || sb == 0.0 || sab == 0.0)
    return make_inconclusive("dct.ratio", "zero surface area", std::move(w));
  double ra = volume(af).to_double() / sa;
  double rb = volume(bf).to_double() / sb;
  double rab = volume(ab).to_double() / sab;
  Scalar lhs = Scalar::real(ra + rb);
  Scalar rhs = Scalar::real(rab);
  CheckResult r = make_check_result("dct.ratio", lhs, rhs, rel_tol_for(lhs, rhs), std::move(w));
  r.witness["details"] = {{"weak_margin", rab - ra}};
  return r;
}

CheckResult check_l2_strong(const EllipsoidL2& a, const EllipsoidL2& b, const Vector& u) {
  nlohmann::json w{{"instance", {{"A", ellipsoid_to_json(a)}, {"B", ellipsoid_to_json(b)},
                                 {"u", vector_to_json(u)}}}};
  if (!a.full_dimensional() || !b.full_dimensional())
    return make_inconclusive("l2.strong", "rank-deficient body", std::move(w));
  double r_a = ratio_sq_interpolated(a, b, u, 0.0);
  EllipsoidL2 ab = oplus2(a, b);
  double r_ab = ratio_sq_interpolated(a, b, u, 1.0);
  // (|B|/|P B|)^2 via the same inverse-quadratic route with roles swapped.
  double r_b = ratio_sq_interpolated(b, a, u, 0.0);
  Scalar lhs = Scalar::real(r_a + r_b);
  Scalar rhs = Scalar::real(r_ab);
  CheckResult r = make_check_result("l2.strong", lhs, rhs, rel_tol_for(lhs, rhs), std::move(w));
  r.witness["details"] = {{"equality_case", equality_case(a, b, u)},
                          {"volume_sum", volume(ab).to_double()}};
  return r;
}

CheckResult check_l2_det2(const Matrix& columns, int split, std::optional<Vector> direction) {
  const int n = columns.rows();
  const int total = columns.cols();
  if (split < 0 || split > total) throw InputError("l2.det2: bad split");
  Vector u = direction ? *direction : Vector::unit(n, 0, columns.mode());
  nlohmann::json jcols = nlohmann::json::array();
  for (int i = 0; i < total; ++i) jcols.push_back(vector_to_json(columns.column(i)));
  nlohmann::json w{{"instance", {{"columns", std::move(jcols)},
                                 {"split", split},
                                 {"direction", vector_to_json(u)}}}};

  auto det_sq_ratio = [&](int lo, int hi, Scalar* out) -> bool {
    // columns with indices in [lo, hi)
    std::vector<int> pool;
    for (int i = lo; i < hi; ++i) pool.push_back(i);
    auto sum_for = [&](int k, bool with_dir) {
      Scalar total_s = Scalar::zero(columns.mode());
      if (k < 0 || k > static_cast<int>(pool.size())) return total_s;
      std::vector<Vector> cols;
      for (CombinationIter it(static_cast<int>(pool.size()), k); !it.done(); it.next()) {
        cols.clear();
        for (int i : it.current()) cols.push_back(columns.column(pool[static_cast<size_t>(i)]));
        if (with_dir) cols.push_back(u);
        Scalar d = det_of_columns(cols);
        total_s += d * d;
      }
      return total_s;
    };
    Scalar num = sum_for(n, false);
    Scalar den = sum_for(n - 1, true);
    if (den.is_zero()) return false;
    *out = num / den;
    return true;
  };

  Scalar ra = Scalar::zero(columns.mode()), rb = ra, rfull = ra;
  if (!det_sq_ratio(0, split, &ra) || !det_sq_ratio(split, total, &rb) ||
      !det_sq_ratio(0, total, &rfull))
    return make_inconclusive("l2.det2", "zero projected determinant sum", std::move(w));
  Scalar lhs = ra + rb;
  return result_auto("l2.det2", lhs, rfull, std::move(w));
}

CheckResult check_l2_proj(const EllipsoidL2& a, const EllipsoidL2& b,
                          const std::vector<Vector>& basis) {
  nlohmann::json jb = nlohmann::json::array();
  for (const Vector& v : basis) jb.push_back(vector_to_json(v));
  nlohmann::json w{{"instance", {{"A", ellipsoid_to_json(a)}, {"B", ellipsoid_to_json(b)},
                                 {"basis", std::move(jb)}}}};
  const int k = static_cast<int>(basis.size());
  if (k < 1 || k >= a.dim()) throw InputError("l2.proj: need 1 <= k < n directions");

  EllipsoidL2 af = a.mode() == Mode::Float ? a : a.to_float();
  EllipsoidL2 bf = b.mode() == Mode::Float ? b : b.to_float();
  EllipsoidL2 ab = oplus2(af, bf);
  auto term = [&](const EllipsoidL2& x, double* out) -> bool {
    double vol = volume(x).to_double();
    double pv = projection_volume(x, basis).to_double();
    if (pv <= 0.0 || vol <= 0.0) return false;
    *out = std::pow(vol / pv, 2.0 / k);
    return true;
  };
  double ta = 0, tb = 0, tab = 0;
  if (!term(af, &ta) || !term(bf, &tb) || !term(ab, &tab))
    return make_inconclusive("l2.proj", "flat body or zero projection", std::move(w));
  Scalar lhs = Scalar::real(ta + tb);
  Scalar rhs = Scalar::real(tab);
  return make_check_result("l2.proj", lhs, rhs, rel_tol_for(lhs, rhs), std::move(w));
}

CheckResult check_l2_mixed(const EllipsoidL2& a, const EllipsoidL2& b,
                           const std::vector<Vector>& segments) {
  nlohmann::json js = nlohmann::json::array();
  for (const Vector& v : segments) js.push_back(vector_to_json(v));
  nlohmann::json w{{"instance", {{"A", ellipsoid_to_json(a)}, {"B", ellipsoid_to_json(b)},
                                 {"segments", std::move(js)}}}};
  const int n = a.dim();
  const int k = static_cast<int>(segments.size());
  if (k < 1 || k >= n) throw InputError("l2.mixed: need 1 <= k < n segments");

  // V(X[n-k], [0,z_1],...,[0,z_k]) = vol_k(z) (n-k)!/n! |P_{span(z)^perp} X|.
  std::vector<Vector> segf;
  for (const Vector& s : segments) segf.push_back(s.mode() == Mode::Float ? s : s.to_float());
  double volk = gram_det_sqrt(segf).to_double();
  if (volk <= 0.0)
    return make_inconclusive("l2.mixed", "dependent segment directions", std::move(w));
  // Orthonormal basis of span(z) by Gram-Schmidt.
  std::vector<Vector> basis;
  for (const Vector& s : segf) {
    Vector r = s;
    for (const Vector& q : basis) r = r - dot(r, q) * q;
    double nn = norm(r);
    if (nn < 1e-12) continue;
    basis.push_back(Scalar::real(1.0 / nn) * r);
  }
  if (static_cast<int>(basis.size()) != k)
    return make_inconclusive("l2.mixed", "dependent segment directions", std::move(w));

  double factor = volk;
  for (int i = 2; i <= n; ++i) factor /= i;
  for (int i = 2; i <= n - k; ++i) factor *= i;

  EllipsoidL2 af = a.mode() == Mode::Float ? a : a.to_float();
  EllipsoidL2 bf = b.mode() == Mode::Float ? b : b.to_float();
  EllipsoidL2 ab = oplus2(af, bf);
  auto term = [&](const EllipsoidL2& x, double* out) -> bool {
    double vol = volume(x).to_double();
    double mv = factor * projection_volume(x, basis).to_double();
    if (mv <= 0.0 || vol <= 0.0) return false;
    *out = std::pow(vol / mv, 2.0 / k);
    return true;
  };
  double ta = 0, tb = 0, tab = 0;
  if (!term(af, &ta) || !term(bf, &tb) || !term(ab, &tab))
    return make_inconclusive("l2.mixed", "flat body or zero mixed volume", std::move(w));
  Scalar lhs = Scalar::real(ta + tb);
  Scalar rhs = Scalar::real(tab);
  return make_check_result("l2.mixed", lhs, rhs, rel_tol_for(lhs, rhs), std::move(w));
}

CheckResult check_l2_surface(const EllipsoidL2& a, const EllipsoidL2& b, int samples,
                             std::uint64_t seed) {
  nlohmann::json w{{"instance", {{"A", ellipsoid_to_json(a)}, {"B", ellipsoid_to_json(b)},
                                 {"samples", samples}, {"mc_seed", seed}}}};
  if (!a.full_dimensional() || !b.full_dimensional())
    return make_inconclusive("l2.surface", "rank-deficient body", std::move(w));
  EllipsoidL2 ab = oplus2(a, b);
  RngStream r0(seed, 0), r1(seed, 1), r2(seed, 2);
  MonteCarloEstimate sa = surface_area_mc(a, samples, r0);
  MonteCarloEstimate sb = surface_area_mc(b, samples, r1);
  MonteCarloEstimate sab = surface_area_mc(ab, samples, r2);
  double va = volume(a).to_double(), vb = volume(b).to_double(), vab = volume(ab).to_double();
  auto ratio_sq = [](double v, double s) { return (v / s) * (v / s); };
  double lhs = ratio_sq(va, sa.value) + ratio_sq(vb, sb.value);
  double rhs = ratio_sq(vab, sab.value);
  // Delta-method error bars: d(v/s)^2/ds = -2 v^2 / s^3.
  auto sigma = [](double v, double s, double se) { return 2.0 * v * v / (s * s * s) * se; };
  double sig = std::sqrt(std::pow(sigma(va, sa.value, sa.std_error), 2) +
                         std::pow(sigma(vb, sb.value, sb.std_error), 2) +
                         std::pow(sigma(vab, sab.value, sab.std_error), 2));
  CheckResult r = make_check_result("l2.surface", Scalar::real(lhs), Scalar::real(rhs),
                                    3.0 * sig, std::move(w));
  r.witness["details"] = {{"std_error", sig},
                          {"surface_estimates", {sa.value, sb.value, sab.value}}};
  return r;
}

CheckResult check_l2_concavity(const EllipsoidL2& a, const EllipsoidL2& b, const Vector& u) {
  nlohmann::json w{{"instance", {{"A", ellipsoid_to_json(a)}, {"B", ellipsoid_to_json(b)},
                                 {"u", vector_to_json(u)}}}};
  if (!a.full_dimensional() || !b.full_dimensional())
    return make_inconclusive("l2.concavity", "rank-deficient body", std::move(w));
  // Midpoint concavity of h2 on the grid t = 0, 0.1, ..., 3.
  std::vector<double> h;
  for (int i = 0; i <= 30; ++i) h.push_back(ratio_sq_interpolated(a, b, u, 0.1 * i));
  double worst = std::numeric_limits<double>::infinity();
  double scale = 0.0;
  for (size_t i = 1; i + 1 < h.size(); ++i) {
    worst = std::min(worst, 2.0 * h[i] - h[i - 1] - h[i + 1]);
    scale = std::max(scale, std::fabs(h[i]));
  }
  Scalar lhs = Scalar::real(0.0);
  Scalar rhs = Scalar::real(worst);
  CheckResult r = make_check_result("l2.concavity", lhs, rhs,
                                    relative_tolerance(kRelTol, scale, scale), std::move(w));
  r.witness["details"] = {{"grid_points", h.size()}};
  return r;
}

double marcus_quadratic_discriminant(const SteinerPoly& p) {
  if (p.degree() != 3) throw DimensionError("expected a cubic Steiner polynomial");
  double c1 = p.coeff(1).to_double();
  double c2 = p.coeff(2).to_double();
  double c3 = p.coeff(3).to_double();
  double s = 0.75 * c3;  // the leading pi for an R^3 Steiner polynomial
  return (c2 / s) * (c2 / s) - 4.0 * (c1 / s) * (c3 / s);
}

CheckResult check_steiner_marcus(const Zonotope& z) {
  nlohmann::json w{{"instance", {{"Z", zonotope_to_json(z)}}}};
  SteinerPoly p = steiner3(z.mode() == Mode::Float ? z : z.to_float());
  double c0 = p.coeff(0).to_double();
  Scalar margin;
  nlohmann::json details;
  if (c0 == 0.0) {
    double disc = marcus_quadratic_discriminant(p);
    margin = Scalar::real(disc);
    details = {{"flat", true}, {"quadratic_discriminant", disc}};
  } else {
    double s = 0.75 * p.coeff(3).to_double();
    Scalar q0 = Scalar::real(c0 / s), q1 = Scalar::real(p.coeff(1).to_double() / s),
           q2 = Scalar::real(p.coeff(2).to_double() / s), q3 = Scalar::real(p.coeff(3).to_double() / s);
    margin = discriminant3(q0, q1, q2, q3);
    details = {{"flat", false}, {"cubic_discriminant", margin.to_double()}};
  }
  double scale = std::max(1.0, std::fabs(margin.to_double()));
  CheckResult r = make_check_result("steiner.marcus", Scalar::real(0.0), margin, 1e-9 * scale,
                                    std::move(w));
  r.witness["details"] = std::move(details);
  r.witness["details"]["coefficients"] = poly_to_json(p);
  return r;
}

namespace {

CheckResult steiner_quadratic_disc(const std::string& id, const Zonotope& z, const Zonotope& l,
                                   nlohmann::json w) {
  const int n = z.dim();
  std::vector<Zonotope> s1(static_cast<size_t>(n - 1), z);
  s1.push_back(l);
  Scalar c1 = frac(n, 1, z.mode()) * mixed_volume(s1);
  std::vector<Zonotope> s2(static_cast<size_t>(n - 2), z);
  s2.push_back(l);
  s2.push_back(l);
  Scalar c2 = frac(static_cast<long>(binomial(n, 2)), 1, z.mode()) * mixed_volume(s2);
  Scalar c0 = volume(z);
  Scalar disc = c1 * c1 - frac(4, 1, z.mode()) * c0 * c2;
  double tol = z.mode() == Mode::Exact
                   ? 0.0
                   : relative_tolerance(kRelTol, c1.to_double() * c1.to_double(),
                                        4.0 * c0.to_double() * c2.to_double());
  CheckResult r = make_check_result(id, Scalar::zero(z.mode()), disc, tol, std::move(w));
  r.witness["details"] = {{"c0", c0.to_double()}, {"c1", c1.to_double()}, {"c2", c2.to_double()}};
  return r;
}

}  // namespace

CheckResult check_steiner_real3(const Zonotope& z, const Vector& u, const Vector& v) {
  if (z.dim() != 3) throw DimensionError("steiner.real3 lives in R^3");
  nlohmann::json w{{"instance", {{"Z", zonotope_to_json(z)}, {"u", vector_to_json(u)},
                                 {"v", vector_to_json(v)}}}};
  Zonotope l(3, {u, v}, z.mode());
  return steiner_quadratic_disc("steiner.real3", z, l, std::move(w));
}

CheckResult check_steiner_c2(const Zonotope& z, const std::vector<Vector>& c_generators) {
  nlohmann::json jg = nlohmann::json::array();
  for (const Vector& g : c_generators) jg.push_back(vector_to_json(g));
  nlohmann::json w{{"instance", {{"Z", zonotope_to_json(z)}, {"C_generators", std::move(jg)}}}};
  if (c_generators.size() < 2) throw InputError("steiner.c2: need at least two generators for C");
  // C must be at most 2-dimensional so |Z + tC| is quadratic in t.
  if (rank(c_generators) > 2)
    throw InputError("steiner.c2: generator family must span at most a plane");
  Zonotope l(z.dim(), c_generators, z.mode());
  return steiner_quadratic_disc("steiner.c2", z, l, std::move(w));
}

}  // namespace zonocalc
