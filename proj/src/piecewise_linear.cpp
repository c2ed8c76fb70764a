#include "piecewise_linear.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace expstr::detail {

namespace {

Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& x) {
  if (a.x == b.x) return a.y;
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

void sort_unique(std::vector<Rational>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<Breakpoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("piecewise-linear function needs a breakpoint");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (!(points_[i - 1].x < points_[i].x)) throw std::invalid_argument("breakpoints must be strictly increasing");
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
  if (!defined_at(x)) throw std::out_of_range("piecewise-linear evaluation outside its domain");
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const Breakpoint& p, const Rational& v) { return p.x < v; });
  if (it->x == x) return it->y;
  return interpolate(*(it - 1), *it, x);
}

PiecewiseLinear PiecewiseLinear::restricted(const Rational& a, const Rational& b) const {
  Rational from = std::max(a, lo());
  Rational to = std::min(b, hi());
  if (from > to) throw std::invalid_argument("restriction to an empty interval");
  std::vector<Breakpoint> out{{from, (*this)(from)}};
  for (const auto& p : points_)
    if (from < p.x && p.x < to) out.push_back(p);
  if (to != from) out.push_back({to, (*this)(to)});
  return PiecewiseLinear(std::move(out));
}

PiecewiseLinear PiecewiseLinear::shifted(const Rational& shift) const {
  std::vector<Breakpoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back({p.x + shift, p.y});
  return PiecewiseLinear(std::move(out));
}

PiecewiseLinear PiecewiseLinear::reflected(const Rational& pivot) const {
  std::vector<Breakpoint> out;
  out.reserve(points_.size());
  for (auto it = points_.rbegin(); it != points_.rend(); ++it) out.push_back({pivot - it->x, it->y});
  return PiecewiseLinear(std::move(out));
}

PiecewiseLinear PiecewiseLinear::plus_linear(const Rational& slope, const Rational& intercept) const {
  std::vector<Breakpoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back({p.x, p.y + slope * p.x + intercept});
  return PiecewiseLinear(std::move(out));
}

PiecewiseLinear PiecewiseLinear::simplified() const {
  if (points_.size() <= 2) return *this;
  std::vector<Breakpoint> out{points_.front()};
  for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
    const auto& a = out.back();
    const auto& b = points_[i];
    const auto& c = points_[i + 1];
    // Keep b unless slope(a,b) == slope(b,c).
    if ((b.y - a.y) * (c.x - b.x) != (c.y - b.y) * (b.x - a.x)) out.push_back(b);
  }
  out.push_back(points_.back());
  return PiecewiseLinear(std::move(out));
}

PiecewiseLinear lower_envelope(std::span<const PiecewiseLinear> fs, const Rational& lo, const Rational& hi) {
  std::vector<Rational> xs{lo, hi};
  for (const auto& f : fs)
    for (const auto& p : f.points())
      if (lo <= p.x && p.x <= hi) xs.push_back(p.x);
  sort_unique(xs);

  auto min_at = [&](const Rational& x) {
    std::optional<Rational> best;
    for (const auto& f : fs)
      if (f.defined_at(x)) {
        Rational v = f(x);
        if (!best || v < *best) best = std::move(v);
      }
    if (!best) throw std::logic_error("lower envelope: domain not covered");
    return *best;
  };

  std::vector<Breakpoint> out{{xs.front(), min_at(xs.front())}};
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const Rational& a = xs[k];
    const Rational& b = xs[k + 1];
    struct Line {
      Rational at_a, at_b;
    };
    std::vector<Line> lines;
    for (const auto& f : fs)
      if (f.lo() <= a && b <= f.hi()) lines.push_back({f(a), f(b)});
    if (lines.empty()) throw std::logic_error("lower envelope: domain not covered");

    std::vector<Rational> cuts;
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        Rational da = lines[i].at_a - lines[j].at_a;
        Rational db = lines[i].at_b - lines[j].at_b;
        if (sgn(da) * sgn(db) < 0) cuts.push_back(a + (b - a) * da / (da - db));
      }
    sort_unique(cuts);
    auto envelope_at = [&](const Rational& x) {
      Rational t = (x - a) / (b - a);
      Rational best = lines[0].at_a + (lines[0].at_b - lines[0].at_a) * t;
      for (std::size_t i = 1; i < lines.size(); ++i) {
        Rational v = lines[i].at_a + (lines[i].at_b - lines[i].at_a) * t;
        if (v < best) best = v;
      }
      return best;
    };
    for (const auto& c : cuts) out.push_back({c, envelope_at(c)});
    Rational end_value = envelope_at(b);
    // A one-point candidate may undercut the interval lines only at b.
    Rational at_b = min_at(b);
    out.push_back({b, std::min(end_value, at_b)});
  }
  return PiecewiseLinear(std::move(out)).simplified();
}

}  // namespace expstr::detail
