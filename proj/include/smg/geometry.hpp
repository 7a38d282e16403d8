#pragma once

#include <vector>

#include "smg/rational.hpp"

namespace smg {

struct Point {
  Rational u;
  Rational v;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Twice the signed area of (a, b, c); positive for a left turn.
Rational cross(const Point& a, const Point& b, const Point& c);

/// Convex hull, counterclockwise, starting from the lexicographically smallest
/// point, with collinear points dropped. A single point or a segment comes
/// back as one or two vertices.
std::vector<Point> convex_hull(std::vector<Point> points);

/// Closed convex polygon in the payoff plane. May be empty, a point or a
/// segment.
class PayoffPolygon {
 public:
  PayoffPolygon() = default;
  static PayoffPolygon hull_of(std::vector<Point> points);

  const std::vector<Point>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  bool contains(const Point& p) const;

  /// Intersection with the half-plane a*u + b*v >= c.
  PayoffPolygon clip(const Rational& a, const Rational& b, const Rational& c) const;
  /// Intersection with {u >= lo_u, v >= lo_v}; a missing bound is ignored.
  PayoffPolygon clip_lower(const LowerBound& lo_u, const LowerBound& lo_v) const;

  /// Barycentric weights of p over the vertices (fan from vertex 0).
  /// Throws std::invalid_argument if p is outside.
  std::vector<Rational> weights_of(const Point& p) const;

 private:
  std::vector<Point> vertices_;
};

}  // namespace smg
