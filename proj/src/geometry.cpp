#include "smg/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace smg {

Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u);
}

std::vector<Point> convex_hull(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;

  // Andrew's monotone chain; "<= 0" pops collinear points as well.
  std::vector<Point> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]).sign() <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

PayoffPolygon PayoffPolygon::hull_of(std::vector<Point> points) {
  PayoffPolygon poly;
  poly.vertices_ = convex_hull(std::move(points));
  return poly;
}

bool PayoffPolygon::contains(const Point& p) const {
  const auto n = vertices_.size();
  if (n == 0) return false;
  if (n == 1) return vertices_[0] == p;
  if (n == 2) {
    const auto& a = vertices_[0];
    const auto& b = vertices_[1];
    if (cross(a, b, p).sign() != 0) return false;
    return std::min(a.u, b.u) <= p.u && p.u <= std::max(a.u, b.u) && std::min(a.v, b.v) <= p.v &&
           p.v <= std::max(a.v, b.v);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (cross(vertices_[k], vertices_[(k + 1) % n], p).sign() < 0) return false;
  }
  return true;
}

PayoffPolygon PayoffPolygon::clip(const Rational& a, const Rational& b, const Rational& c) const {
  auto side = [&](const Point& p) { return a * p.u + b * p.v - c; };
  std::vector<Point> kept;
  const auto n = vertices_.size();
  for (const auto& p : vertices_) {
    if (side(p).sign() >= 0) kept.push_back(p);
  }
  const std::size_t edges = n < 2 ? 0 : (n == 2 ? 1 : n);
  for (std::size_t k = 0; k < edges; ++k) {
    const auto& p = vertices_[k];
    const auto& q = vertices_[(k + 1) % n];
    const Rational sp = side(p);
    const Rational sq = side(q);
    if ((sp.sign() < 0 && sq.sign() > 0) || (sp.sign() > 0 && sq.sign() < 0)) {
      const Rational t = sp / (sp - sq);
      kept.push_back({p.u + t * (q.u - p.u), p.v + t * (q.v - p.v)});
    }
  }
  return hull_of(std::move(kept));
}

PayoffPolygon PayoffPolygon::clip_lower(const LowerBound& lo_u, const LowerBound& lo_v) const {
  PayoffPolygon out = *this;
  if (lo_u) out = out.clip(1, 0, *lo_u);
  if (lo_v) out = out.clip(0, 1, *lo_v);
  return out;
}

std::vector<Rational> PayoffPolygon::weights_of(const Point& p) const {
  const auto n = vertices_.size();
  std::vector<Rational> w(n, Rational(0));
  if (!contains(p)) throw std::invalid_argument("point lies outside the payoff polygon");
  if (n == 1) {
    w[0] = 1;
    return w;
  }
  if (n == 2) {
    const auto& a = vertices_[0];
    const auto& b = vertices_[1];
    const Rational t = a.u != b.u ? (p.u - a.u) / (b.u - a.u) : (p.v - a.v) / (b.v - a.v);
    w[0] = Rational(1) - t;
    w[1] = t;
    return w;
  }
  const auto& a = vertices_[0];
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const auto& b = vertices_[k];
    const auto& c = vertices_[k + 1];
    const Rational d = cross(a, b, c);
    const Rational la = cross(p, b, c) / d;
    const Rational lb = cross(a, p, c) / d;
    const Rational lc = cross(a, b, p) / d;
    if (la.sign() >= 0 && lb.sign() >= 0 && lc.sign() >= 0) {
      w[0] = la;
      w[k] = lb;
      w[k + 1] = lc;
      return w;
    }
  }
  throw std::logic_error("fan triangulation missed an interior point");
}

}  // namespace smg
