#include "smg/piecewise.hpp"

#include <stdexcept>

namespace smg {

namespace {

Rational interpolate(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1, const Rational& x) {
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<Breakpoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw std::invalid_argument("piecewise-linear map needs at least two breakpoints");
  for (std::size_t k = 1; k < points_.size(); ++k) {
    if (!(points_[k - 1].first < points_[k].first)) {
      throw std::invalid_argument("piecewise-linear breakpoints must have strictly increasing x");
    }
    if (!(points_[k - 1].second < points_[k].second)) {
      throw std::invalid_argument("piecewise-linear map must be strictly increasing");
    }
  }
}

PiecewiseLinear PiecewiseLinear::affine(const Rational& slope, const Rational& intercept) {
  return PiecewiseLinear({{Rational(0), intercept}, {Rational(1), slope + intercept}});
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
  std::size_t k = 1;
  while (k + 1 < points_.size() && points_[k].first < x) ++k;
  const auto& [x0, y0] = points_[k - 1];
  const auto& [x1, y1] = points_[k];
  return interpolate(x0, y0, x1, y1, x);
}

Rational PiecewiseLinear::inverse(const Rational& y) const {
  std::size_t k = 1;
  while (k + 1 < points_.size() && points_[k].second < y) ++k;
  const auto& [x0, y0] = points_[k - 1];
  const auto& [x1, y1] = points_[k];
  return interpolate(y0, x0, y1, x1, y);
}

Rational PiecewiseLinear::max_slope() const {
  Rational best = (points_[1].second - points_[0].second) / (points_[1].first - points_[0].first);
  for (std::size_t k = 2; k < points_.size(); ++k) {
    Rational s = (points_[k].second - points_[k - 1].second) / (points_[k].first - points_[k - 1].first);
    if (s > best) best = s;
  }
  return best;
}

}  // namespace smg
