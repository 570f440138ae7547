#include "zonocalc/steiner.hpp"

#include <algorithm>
#include <cmath>

#include "zonocalc/special_functions.hpp"

namespace zonocalc {

namespace {

constexpr int kMaxDegree = 12;
constexpr double kImagTolInner = 1e-8;
constexpr double kImagTolOuter = 1e-6;

using QPoly = std::vector<mpq_class>;  // ascending coefficients

int qdeg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly qtrim(QPoly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

QPoly qderiv(const QPoly& p) {
  if (p.size() <= 1) return {0};
  QPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return qtrim(d);
}

bool qis_zero(const QPoly& p) { return p.size() == 1 && p[0] == 0; }

/// Remainder of a by b (b nonzero).
QPoly qrem(QPoly a, QPoly b) {
  a = qtrim(std::move(a));
  b = qtrim(std::move(b));
  while (!qis_zero(a) && qdeg(a) >= qdeg(b)) {
    mpq_class f = a.back() / b.back();
    int shift = qdeg(a) - qdeg(b);
    for (int i = 0; i <= qdeg(b); ++i)
      a[static_cast<size_t>(i + shift)] -= f * b[static_cast<size_t>(i)];
    a = qtrim(std::move(a));
  }
  return a;
}

QPoly qdiv(QPoly a, QPoly b) {
  a = qtrim(std::move(a));
  b = qtrim(std::move(b));
  if (qdeg(a) < qdeg(b)) return {0};
  QPoly q(static_cast<size_t>(qdeg(a) - qdeg(b)) + 1, mpq_class(0));
  while (!qis_zero(a) && qdeg(a) >= qdeg(b)) {
    mpq_class f = a.back() / b.back();
    int shift = qdeg(a) - qdeg(b);
    q[static_cast<size_t>(shift)] = f;
    for (int i = 0; i <= qdeg(b); ++i)
      a[static_cast<size_t>(i + shift)] -= f * b[static_cast<size_t>(i)];
    a = qtrim(std::move(a));
  }
  return qtrim(std::move(q));
}

void qmonic(QPoly& p) {
  if (!qis_zero(p)) {
    mpq_class lead = p.back();
    for (mpq_class& c : p) c /= lead;
  }
}

QPoly qgcd(QPoly a, QPoly b) {
  a = qtrim(std::move(a));
  b = qtrim(std::move(b));
  while (!qis_zero(b)) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
    qmonic(b);  // normalize to tame coefficient growth
  }
  qmonic(a);
  return a;
}

mpq_class qeval(const QPoly& p, const mpq_class& x) {
  mpq_class r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain;
  chain.push_back(qtrim(p));
  QPoly d = qderiv(chain[0]);
  if (!(d.size() == 1 && d[0] == 0)) chain.push_back(d);
  while (chain.size() >= 2) {
    QPoly r = qrem(chain[chain.size() - 2], chain.back());
    if (r.size() == 1 && r[0] == 0) break;
    for (mpq_class& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes_at(const std::vector<QPoly>& chain, const mpq_class& x) {
  int changes = 0, last = 0;
  for (const QPoly& p : chain) {
    int s = sgn(qeval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_changes_at_inf(const std::vector<QPoly>& chain, int dir) {
  int changes = 0, last = 0;
  for (const QPoly& p : chain) {
    int s = sgn(p.back());
    if (dir < 0 && qdeg(p) % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Roots in (a, b] counted by the chain.
int roots_in(const std::vector<QPoly>& chain, const mpq_class& a, const mpq_class& b) {
  return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

mpq_class cauchy_bound(const QPoly& p) {
  mpq_class m = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    mpq_class r = abs(p[i] / p.back());
    if (r > m) m = r;
  }
  return m + 1;
}

void isolate_roots(const std::vector<QPoly>& chain, const mpq_class& lo, const mpq_class& hi,
                   int count, std::vector<double>* out) {
  if (count == 0) return;
  mpq_class width = hi - lo;
  if (count == 1 && width < mpq_class(1, 1000000000000L)) {
    out->push_back(mpq_class((lo + hi) / 2).get_d());
    return;
  }
  mpq_class mid = (lo + hi) / 2;
  // Nudge off a root of the chain head so interval counts stay consistent.
  while (qeval(chain[0], mid) == 0) {
    if (count == 1) {
      out->push_back(mid.get_d());
      return;
    }
    mid = (lo + mid) / 2;
  }
  int left = roots_in(chain, lo, mid);
  isolate_roots(chain, lo, mid, left, out);
  isolate_roots(chain, mid, hi, count - left, out);
}

QPoly to_qpoly(const SteinerPoly& p) {
  QPoly q;
  for (const Scalar& c : p.coeffs()) q.push_back(c.rational());
  return qtrim(q);
}

}  // namespace

SteinerPoly::SteinerPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error("polynomial needs at least one coefficient");
  if (static_cast<int>(coeffs_.size()) - 1 > kMaxDegree)
    throw CapError("polynomial degree cap exceeded");
  for (const Scalar& c : coeffs_) {
    if (c.mode() != coeffs_[0].mode()) throw ModeError("polynomial with mixed-mode coefficients");
    if (!c.is_exact() && !std::isfinite(c.float_value()))
      throw Error("polynomial with non-finite coefficient");
  }
}

Scalar SteinerPoly::eval(const Scalar& t) const {
  Scalar r = Scalar::zero(mode());
  for (size_t i = coeffs_.size(); i-- > 0;) r = r * t + coeffs_[i];
  return r;
}

SteinerPoly SteinerPoly::derivative() const {
  if (coeffs_.size() == 1) return SteinerPoly({Scalar::zero(mode())});
  std::vector<Scalar> d;
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    Scalar k = mode() == Mode::Exact ? Scalar::exact(static_cast<long>(i))
                                     : Scalar::real(static_cast<double>(i));
    d.push_back(k * coeffs_[i]);
  }
  return SteinerPoly(std::move(d));
}

SteinerPoly SteinerPoly::trimmed() const {
  std::vector<Scalar> c = coeffs_;
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
  if (c.size() == 1 && c[0].is_zero()) throw DegenerateError("zero polynomial");
  return SteinerPoly(std::move(c));
}

SteinerPoly SteinerPoly::to_float() const {
  std::vector<Scalar> c;
  for (const Scalar& x : coeffs_) c.push_back(x.to_float());
  return SteinerPoly(std::move(c));
}

int sturm_distinct_real_roots(const SteinerPoly& p) {
  if (p.mode() != Mode::Exact) throw ModeError("Sturm counting needs exact coefficients");
  QPoly q = to_qpoly(p.trimmed());
  if (qdeg(q) == 0) return 0;
  auto chain = sturm_chain(q);
  return sign_changes_at_inf(chain, -1) - sign_changes_at_inf(chain, +1);
}

std::vector<std::complex<double>> complex_roots(const SteinerPoly& p) {
  SteinerPoly t = p.trimmed();
  const int d = t.degree();
  std::vector<std::complex<double>> roots;
  if (d == 0) return roots;
  std::vector<double> c(static_cast<size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) c[static_cast<size_t>(i)] = t.coeff(i).to_double();
  for (int i = 0; i <= d; ++i) c[static_cast<size_t>(i)] /= c[static_cast<size_t>(d)];

  double bound = 0.0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, std::fabs(c[static_cast<size_t>(i)]));
  bound += 1.0;

  // Durand-Kerner from a deliberately asymmetric start circle.
  roots.resize(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    double angle = 2.0 * M_PI * i / d + 0.4;
    roots[static_cast<size_t>(i)] = std::polar(0.5 * bound + 0.1, angle);
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> r = 1.0;
    for (int i = d - 1; i >= 0; --i) r = r * x + c[static_cast<size_t>(i)];
    return r;
  };
  for (int iter = 0; iter < 600; ++iter) {
    double moved = 0.0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> denom = 1.0;
      for (int j = 0; j < d; ++j)
        if (j != i) denom *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
      if (denom == std::complex<double>(0.0)) denom = 1e-30;
      std::complex<double> delta = eval(roots[static_cast<size_t>(i)]) / denom;
      roots[static_cast<size_t>(i)] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14 * (1.0 + bound)) break;
  }
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

RootReport all_roots_real(const SteinerPoly& p) {
  SteinerPoly t = p.trimmed();
  if (t.degree() < 1) throw DegenerateError("root analysis needs degree >= 1");

  if (t.mode() == Mode::Exact) {
    QPoly q = to_qpoly(t);
    qmonic(q);
    QPoly g = qgcd(q, qderiv(q));
    QPoly h = qdeg(g) > 0 ? qdiv(q, g) : q;  // square-free part
    auto chain = sturm_chain(h);
    int distinct = sign_changes_at_inf(chain, -1) - sign_changes_at_inf(chain, +1);
    RootReport rep;
    rep.verdict = (distinct == qdeg(h)) ? RootVerdict::AllReal : RootVerdict::NotAllReal;
    mpq_class bound = cauchy_bound(h);
    isolate_roots(chain, -bound, bound, roots_in(chain, -bound, bound), &rep.real_roots);
    std::sort(rep.real_roots.begin(), rep.real_roots.end());
    return rep;
  }

  auto roots = complex_roots(t);
  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r));
  RootReport rep;
  rep.max_imaginary = 0.0;
  for (const auto& r : roots) rep.max_imaginary = std::max(rep.max_imaginary, std::fabs(r.imag()));
  double rel = rep.max_imaginary / scale;
  if (rel <= kImagTolInner)
    rep.verdict = RootVerdict::AllReal;
  else if (rel >= kImagTolOuter)
    rep.verdict = RootVerdict::NotAllReal;
  else
    rep.verdict = RootVerdict::Inconclusive;
  for (const auto& r : roots)
    if (std::fabs(r.imag()) <= kImagTolInner * scale) rep.real_roots.push_back(r.real());
  std::sort(rep.real_roots.begin(), rep.real_roots.end());
  return rep;
}

SteinerPoly flat_disk_steiner(int n) {
  if (n < 3) throw DimensionError("flat_disk_steiner needs n >= 3");
  const int d = n - 2;
  double ball_d = ball_volume(d).to_double();
  auto moment = [&](int s) {
    // Integral over B^d of (1-|x|^2)^(s/2).
    return ball_d * std::exp(ln_gamma(d / 2.0 + 1.0) + ln_gamma(s / 2.0 + 1.0) -
                             ln_gamma((d + s) / 2.0 + 1.0));
  };
  std::vector<Scalar> coeffs(static_cast<size_t>(n) + 1, Scalar::real(0.0));
  coeffs[static_cast<size_t>(n - 2)] = Scalar::real(M_PI * moment(0));
  coeffs[static_cast<size_t>(n - 1)] = Scalar::real(M_PI * 2.0 * moment(1));
  coeffs[static_cast<size_t>(n)] = Scalar::real(M_PI * moment(2));
  return SteinerPoly(std::move(coeffs));
}

CheckResult sqrt_concavity_check(const SteinerPoly& p) {
  SteinerPoly t = p.trimmed();
  if (t.degree() != 2) throw DimensionError("sqrt_concavity_check expects a quadratic");
  nlohmann::json w{{"instance", {{"coefficients", nlohmann::json::array()}}}};
  for (const Scalar& c : t.coeffs()) {
    if (c.sgn() < 0) throw Error("sqrt_concavity_check expects nonnegative coefficients");
    w["instance"]["coefficients"].push_back(c.is_exact() ? nlohmann::json(c.str())
                                                         : nlohmann::json(c.to_double()));
  }
  Scalar four = t.mode() == Mode::Exact ? Scalar::exact(4) : Scalar::real(4.0);
  Scalar lhs = four * t.coeff(0) * t.coeff(2);  // 2 P(0) P''(0)
  Scalar rhs = t.coeff(1) * t.coeff(1);         // P'(0)^2
  double tol = t.mode() == Mode::Exact
                   ? 0.0
                   : relative_tolerance(1e-9, lhs.to_double(), rhs.to_double());
  return make_check_result("steiner.sqrt-concavity", lhs, rhs, tol, std::move(w));
}

Scalar discriminant2(const Scalar& c0, const Scalar& c1, const Scalar& c2) {
  Scalar four = c0.mode() == Mode::Exact ? Scalar::exact(4) : Scalar::real(4.0);
  return c1 * c1 - four * c0 * c2;
}

Scalar discriminant3(const Scalar& c0, const Scalar& c1, const Scalar& c2, const Scalar& c3) {
  auto k = [&](long v) { return c0.mode() == Mode::Exact ? Scalar::exact(v) : Scalar::real(static_cast<double>(v)); };
  return k(18) * c3 * c2 * c1 * c0 - k(4) * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 -
         k(4) * c3 * c1 * c1 * c1 - k(27) * c3 * c3 * c0 * c0;
}

}  // namespace zonocalc
