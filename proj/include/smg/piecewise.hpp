#pragma once

#include <utility>
#include <vector>

#include "smg/rational.hpp"

namespace smg {

/// Strictly increasing piecewise-linear map given by breakpoints. Outside the
/// breakpoint range the first and last segments are extended, so the map is
/// a bijection of the whole line and has an exact inverse.
class PiecewiseLinear {
 public:
  using Breakpoint = std::pair<Rational, Rational>;

  PiecewiseLinear() = default;
  /// Throws std::invalid_argument unless there are at least two breakpoints
  /// with strictly increasing x and strictly increasing y.
  explicit PiecewiseLinear(std::vector<Breakpoint> points);

  static PiecewiseLinear affine(const Rational& slope, const Rational& intercept);
  static PiecewiseLinear identity() { return affine(1, 0); }

  Rational operator()(const Rational& x) const;
  Rational inverse(const Rational& y) const;
  Rational max_slope() const;

  const std::vector<Breakpoint>& breakpoints() const { return points_; }

  friend bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b) { return a.points_ == b.points_; }

 private:
  std::vector<Breakpoint> points_;
};

}  // namespace smg
