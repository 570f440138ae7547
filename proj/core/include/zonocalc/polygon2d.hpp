#pragma once

#include <vector>

#include "zonocalc/linalg.hpp"

namespace zonocalc {

class RngStream;

/// Point in R^2 with dual-mode coordinates.
struct Point2 {
  Scalar x, y;
  Mode mode() const { return x.mode(); }
  bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
};

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);

/// cross(b-a, c-a): positive for a left turn.
Scalar orient2(const Point2& a, const Point2& b, const Point2& c);

/// Convex polygon as a counter-clockwise vertex list. Canonical form is
/// strictly convex (collinear triples merged), starting at the
/// lexicographically smallest vertex. Points (1 vertex) and segments
/// (2 vertices) are first-class degenerate polygons.
class ConvexPolygon {
 public:
  /// Canonicalizes: convex hull of the given points.
  explicit ConvexPolygon(std::vector<Point2> points);
  static ConvexPolygon unit_square(Mode m);

  int size() const { return static_cast<int>(v_.size()); }
  Mode mode() const { return v_[0].mode(); }
  const std::vector<Point2>& vertices() const { return v_; }
  const Point2& vertex(int i) const { return v_[static_cast<size_t>(i)]; }
  bool is_degenerate() const { return size() < 3; }

 private:
  std::vector<Point2> v_;
};

/// Shoelace area (exact in Exact mode).
Scalar area(const ConvexPolygon& p);
/// Sum of edge lengths (Float).
Scalar perimeter(const ConvexPolygon& p);

/// Edge-vector merge by angle; exact on rational inputs.
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

/// (|P+Q| - |P| - |Q|) / 2; symmetric, exact in Exact mode.
Scalar mixed_area(const ConvexPolygon& p, const ConvexPolygon& q);

/// Length of the projection of P onto the line orthogonal to u:
/// the width max<v,u'> - min<v,u'> with u' = u rotated by 90 degrees.
Scalar projection_length(const ConvexPolygon& p, const Vector& u);
/// Width in direction d itself: max<v,d> - min<v,d>.
Scalar width(const ConvexPolygon& p, const Vector& d);

/// Convex hull of k i.i.d. points; retries until the hull has >= 3 vertices.
/// Exact mode draws integer coordinates in [-10*scale, 10*scale].
ConvexPolygon random_polygon(RngStream& rng, int k, double scale, Mode mode);

}  // namespace zonocalc
