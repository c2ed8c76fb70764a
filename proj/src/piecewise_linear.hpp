#pragma once

#include <span>
#include <vector>

#include "expstr/rational.hpp"

namespace expstr::detail {

struct Breakpoint {
  Rational x;
  Rational y;
};

/// Continuous piecewise-linear function on a closed interval, given by its
/// breakpoints in strictly increasing x. A single breakpoint is a function
/// on a one-point domain.
class PiecewiseLinear {
 public:
  explicit PiecewiseLinear(std::vector<Breakpoint> points);

  const Rational& lo() const { return points_.front().x; }
  const Rational& hi() const { return points_.back().x; }
  const std::vector<Breakpoint>& points() const { return points_; }

  bool defined_at(const Rational& x) const { return lo() <= x && x <= hi(); }
  /// Requires lo() <= x <= hi().
  Rational operator()(const Rational& x) const;

  /// Restriction to [a, b] ∩ domain; requires a nonempty intersection.
  PiecewiseLinear restricted(const Rational& a, const Rational& b) const;

  /// x ↦ f(x - shift).
  PiecewiseLinear shifted(const Rational& shift) const;
  /// x ↦ f(pivot - x).
  PiecewiseLinear reflected(const Rational& pivot) const;
  /// x ↦ f(x) + slope * x + intercept.
  PiecewiseLinear plus_linear(const Rational& slope, const Rational& intercept) const;

  /// Drops breakpoints that are collinear with their neighbours.
  PiecewiseLinear simplified() const;

 private:
  std::vector<Breakpoint> points_;
};

/// Pointwise minimum over [lo, hi] of functions whose domains jointly cover
/// the interval. Functions are continuous, so the result is too.
PiecewiseLinear lower_envelope(std::span<const PiecewiseLinear> fs, const Rational& lo, const Rational& hi);

}  // namespace expstr::detail
