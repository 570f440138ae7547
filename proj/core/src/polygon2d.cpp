#include "zonocalc/polygon2d.hpp"

#include <algorithm>
#include <cmath>

#include "zonocalc/rng.hpp"

namespace zonocalc {

Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }

Scalar orient2(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

namespace {

bool lex_less(const Point2& a, const Point2& b) {
  if (a.x < b.x) return true;
  if (b.x < a.x) return false;
  return a.y < b.y;
}

/// Andrew monotone chain with strict turns; output ccw, starts at lex-min.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return pts;
  std::vector<Point2> hull(static_cast<size_t>(2 * n));
  int k = 0;
  for (int i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && orient2(hull[static_cast<size_t>(k - 2)], hull[static_cast<size_t>(k - 1)], pts[static_cast<size_t>(i)]).sgn() <= 0)
      --k;
    hull[static_cast<size_t>(k++)] = pts[static_cast<size_t>(i)];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {  // upper chain
    while (k >= lower && orient2(hull[static_cast<size_t>(k - 2)], hull[static_cast<size_t>(k - 1)], pts[static_cast<size_t>(i)]).sgn() <= 0)
      --k;
    hull[static_cast<size_t>(k++)] = pts[static_cast<size_t>(i)];
  }
  hull.resize(static_cast<size_t>(k - 1));
  if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
  return hull;
}

/// Angular order of nonzero edge vectors, ccw from the positive x-axis.
/// Returns -1/0/+1 like a three-way comparison.
int angle_cmp(const Point2& a, const Point2& b) {
  auto half = [](const Point2& v) {
    // 0 for angles in [0, pi), 1 for [pi, 2 pi).
    if (v.y.sgn() > 0) return 0;
    if (v.y.sgn() < 0) return 1;
    return v.x.sgn() > 0 ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb ? -1 : 1;
  Scalar cr = a.x * b.y - a.y * b.x;
  return cr.sgn() > 0 ? -1 : (cr.sgn() < 0 ? 1 : 0);
}

int bottom_most_index(const std::vector<Point2>& v) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(v.size()); ++i) {
    const Point2& p = v[static_cast<size_t>(i)];
    const Point2& q = v[static_cast<size_t>(best)];
    if (p.y < q.y || (p.y == q.y && p.x < q.x)) best = i;
  }
  return best;
}

/// Edge vectors in ccw order starting from the bottom-most vertex.
/// A segment contributes its two opposite edges; a point contributes none.
std::vector<Point2> edges_from(const std::vector<Point2>& v, int start) {
  std::vector<Point2> e;
  const int n = static_cast<int>(v.size());
  if (n == 2) {
    const Point2 d = v[static_cast<size_t>(1 - start)] - v[static_cast<size_t>(start)];
    e.push_back(d);
    e.push_back(Point2{-d.x, -d.y});
    return e;
  }
  for (int i = 0; i < n && n >= 3; ++i) {
    int a = (start + i) % n, b = (start + i + 1) % n;
    e.push_back(v[static_cast<size_t>(b)] - v[static_cast<size_t>(a)]);
  }
  return e;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point2> points) {
  if (points.empty()) throw DimensionError("polygon needs at least one point");
  for (const Point2& p : points)
    if (p.mode() != points[0].mode() || p.x.mode() != p.y.mode())
      throw ModeError("polygon with mixed-mode points");
  v_ = convex_hull(std::move(points));
}

ConvexPolygon ConvexPolygon::unit_square(Mode m) {
  Scalar z = Scalar::zero(m), o = Scalar::one(m);
  return ConvexPolygon({{z, z}, {o, z}, {o, o}, {z, o}});
}

Scalar area(const ConvexPolygon& p) {
  const int n = p.size();
  Scalar two_a = Scalar::zero(p.mode());
  if (n < 3) return two_a;
  for (int i = 0; i < n; ++i) {
    const Point2& a = p.vertex(i);
    const Point2& b = p.vertex((i + 1) % n);
    two_a += a.x * b.y - b.x * a.y;
  }
  Scalar two = p.mode() == Mode::Exact ? Scalar::exact(2) : Scalar::real(2.0);
  return two_a / two;
}

Scalar perimeter(const ConvexPolygon& p) {
  const int n = p.size();
  if (n == 1) return Scalar::real(0.0);
  double total = 0.0;
  const int edges = n == 2 ? 1 : n;
  for (int i = 0; i < edges; ++i) {
    Point2 d = p.vertex((i + 1) % n) - p.vertex(i);
    total += std::sqrt((d.x * d.x + d.y * d.y).to_double());
  }
  return Scalar::real(n == 2 ? 2.0 * total : total);
}

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.mode() != q.mode()) throw ModeError("minkowski_sum: mode mismatch");
  if (p.size() == 1) {
    std::vector<Point2> shifted;
    for (const Point2& v : q.vertices()) shifted.push_back(v + p.vertex(0));
    return ConvexPolygon(std::move(shifted));
  }
  if (q.size() == 1) return minkowski_sum(q, p);

  const int ps = bottom_most_index(p.vertices());
  const int qs = bottom_most_index(q.vertices());
  std::vector<Point2> pe = edges_from(p.vertices(), ps);
  std::vector<Point2> qe = edges_from(q.vertices(), qs);

  std::vector<Point2> verts;
  Point2 cur = p.vertex(ps) + q.vertex(qs);
  verts.push_back(cur);
  size_t i = 0, j = 0;
  while (i < pe.size() || j < qe.size()) {
    Point2 step = [&] {
      if (i == pe.size()) return qe[j++];
      if (j == qe.size()) return pe[i++];
      int c = angle_cmp(pe[i], qe[j]);
      if (c < 0) return pe[i++];
      if (c > 0) return qe[j++];
      Point2 s = pe[i] + qe[j];
      ++i;
      ++j;
      return s;
    }();
    cur = cur + step;
    verts.push_back(cur);
  }
  return ConvexPolygon(std::move(verts));  // canonicalization merges collinear edges
}

Scalar mixed_area(const ConvexPolygon& p, const ConvexPolygon& q) {
  Scalar s = area(minkowski_sum(p, q)) - area(p) - area(q);
  Scalar two = p.mode() == Mode::Exact ? Scalar::exact(2) : Scalar::real(2.0);
  return s / two;
}

Scalar width(const ConvexPolygon& p, const Vector& d) {
  if (d.dim() != 2) throw DimensionError("width: direction must be planar");
  bool first = true;
  Scalar lo = Scalar::zero(p.mode()), hi = lo;
  for (const Point2& v : p.vertices()) {
    Scalar t = v.x * d[0] + v.y * d[1];
    if (first) {
      lo = hi = t;
      first = false;
    } else {
      if (t < lo) lo = t;
      if (t > hi) hi = t;
    }
  }
  return hi - lo;
}

Scalar projection_length(const ConvexPolygon& p, const Vector& u) {
  if (u.dim() != 2) throw DimensionError("projection_length: direction must be planar");
  return width(p, Vector({-u[1], u[0]}));
}

ConvexPolygon random_polygon(RngStream& rng, int k, double scale, Mode mode) {
  if (k < 3) throw Error("random_polygon: need k >= 3");
  const long range = std::max(1L, std::lround(10.0 * scale));
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Point2> pts;
    for (int i = 0; i < k; ++i) {
      if (mode == Mode::Exact)
        pts.push_back({Scalar::exact(rng.next_int(-range, range)),
                       Scalar::exact(rng.next_int(-range, range))});
      else
        pts.push_back({Scalar::real((2.0 * rng.next_double() - 1.0) * scale),
                       Scalar::real((2.0 * rng.next_double() - 1.0) * scale)});
    }
    ConvexPolygon poly(std::move(pts));
    if (!poly.is_degenerate()) return poly;
  }
  throw Error("random_polygon: could not produce a non-degenerate hull");
}

}  // namespace zonocalc
