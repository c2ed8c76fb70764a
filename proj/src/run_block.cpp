// Unit-cost edit distance on run-length strings.
//
// The DP table D(x, y) is never materialized. For every block of the run
// grid (run i of w1 against run j of w2) only the values along its left and
// bottom edges are kept, as exact piecewise-linear functions. Inside a block
// every character pair is the same, so the cheapest path between two points
// depends only on the displacement (dx, dy):
//
//   equal symbols:     |dx - dy|      (diagonal moves are free)
//   different symbols: max(dx, dy)    (every move costs 1)
//
// The right and top edges of a block are then lower envelopes of the edge
// functions shifted through that kernel. The minimum over an entry point is
// attained at an input breakpoint, at the kernel's kink (dx == dy), or at a
// domain end, which is what the candidate lists below enumerate.

#include <vector>

#include "expstr/distance.hpp"
#include "piecewise_linear.hpp"

namespace expstr {

namespace {

using detail::Breakpoint;
using detail::PiecewiseLinear;

struct Kernel {
  bool same_symbol;

  Rational operator()(const Rational& dx, const Rational& dy) const {
    if (same_symbol) return abs(Rational(dx - dy));
    return dx < dy ? dy : dx;
  }
};

/// Samples `eval` on [lo, hi] at the ends and at `kink` when it falls inside.
template <typename Eval>
PiecewiseLinear kinked(const Rational& lo, const Rational& hi, const Rational& kink, Eval eval) {
  std::vector<Breakpoint> pts{{lo, eval(lo)}};
  if (lo < kink && kink < hi) pts.push_back({kink, eval(kink)});
  if (lo < hi) pts.push_back({hi, eval(hi)});
  return PiecewiseLinear(std::move(pts));
}

struct BlockEdges {
  PiecewiseLinear right;
  PiecewiseLinear top;
};

BlockEdges propagate(const PiecewiseLinear& left, const PiecewiseLinear& bottom, const Rational& width,
                     const Rational& height, Kernel k) {
  const Rational zero = 0;
  const Rational& A = width;
  const Rational& B = height;

  std::vector<PiecewiseLinear> right;
  for (const auto& [u, v] : left.points())
    right.push_back(kinked(u, B, u + A, [&](const Rational& t) -> Rational { return v + k(A, t - u); }));
  if (A <= B) right.push_back(left.restricted(zero, B - A).shifted(A).plus_linear(0, k(A, A)));
  right.push_back(left.plus_linear(0, A));
  for (const auto& [s, v] : bottom.points())
    right.push_back(kinked(zero, B, A - s, [&](const Rational& t) -> Rational { return v + k(A - s, t); }));
  {
    const Rational& reach = A < B ? A : B;
    auto mirrored = bottom.reflected(A).restricted(zero, reach);
    right.push_back(k.same_symbol ? mirrored : mirrored.plus_linear(1, 0));
  }

  std::vector<PiecewiseLinear> top;
  for (const auto& [u, v] : left.points())
    top.push_back(kinked(zero, A, B - u, [&](const Rational& s) -> Rational { return v + k(s, B - u); }));
  {
    const Rational& reach = A < B ? A : B;
    auto mirrored = left.reflected(B).restricted(zero, reach);
    top.push_back(k.same_symbol ? mirrored : mirrored.plus_linear(1, 0));
  }
  for (const auto& [s0, v] : bottom.points())
    top.push_back(kinked(s0, A, s0 + B, [&](const Rational& s) -> Rational { return v + k(s - s0, B); }));
  if (B <= A) top.push_back(bottom.restricted(zero, A - B).shifted(B).plus_linear(0, k(B, B)));
  top.push_back(bottom.plus_linear(0, B));

  return {detail::lower_envelope(right, zero, B), detail::lower_envelope(top, zero, A)};
}

}  // namespace

Rational string_edit_distance_run_block(const ExpString& w1, const ExpString& w2) {
  if (w1.empty()) return len(w2);
  if (w2.empty()) return len(w1);

  // column_edges[j]: values on the vertical line at the current x boundary,
  // restricted to run j of w2 (local coordinate t in [0, d_j]).
  std::vector<PiecewiseLinear> column_edges;
  Rational y0 = 0;
  for (const auto& g : w2.factors()) {
    const Rational& d = g.exponent.value();
    column_edges.push_back(PiecewiseLinear({{0, y0}, {d, y0 + d}}));
    y0 += d;
  }

  Rational x0 = 0;
  for (const auto& f : w1.factors()) {
    const Rational& c = f.exponent.value();
    PiecewiseLinear bottom({{0, x0}, {c, x0 + c}});
    for (std::size_t j = 0; j < w2.flen(); ++j) {
      const auto& g = w2[j];
      auto edges = propagate(column_edges[j], bottom, c, g.exponent.value(), Kernel{f.symbol == g.symbol});
      column_edges[j] = std::move(edges.right);
      bottom = std::move(edges.top);
    }
    x0 += c;
  }
  const auto& last = column_edges.back();
  return last(last.hi());
}

}  // namespace expstr
