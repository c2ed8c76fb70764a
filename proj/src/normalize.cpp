#include <algorithm>

#include "expstr/matching.hpp"
#include "matching_internal.hpp"

namespace expstr {

ExpMatching normalize(const ExpMatching& e, const BoxGrid& grid) {
  if (auto why = matching_violation(e)) throw std::invalid_argument("invalid exp-matching: " + *why);

  struct Placed {
    Segment s;
    std::size_t row;
    std::size_t col;
  };

  // Clip at box boundaries.
  std::vector<Placed> segs;
  for (const auto& s : e.segments)
    for (auto& piece : detail::box_pieces(s, grid)) segs.push_back({std::move(piece.segment), piece.row, piece.col});
  std::sort(segs.begin(), segs.end(), [](const Placed& a, const Placed& b) { return a.s.x0 < b.s.x0; });

  // Non-crossing segments are ordered the same way along both axes, so the
  // rightmost segment is also the topmost; sweep from the back.
  for (std::size_t k = segs.size(); k-- > 0;) {
    Segment& s = segs[k].s;
    Rational limit = grid.xs[segs[k].row + 1];
    if (k + 1 < segs.size() && segs[k + 1].s.x0 < limit) limit = segs[k + 1].s.x0;
    s.x0 = limit - s.h;
  }
  for (std::size_t k = segs.size(); k-- > 0;) {
    Segment& s = segs[k].s;
    Rational limit = grid.ys[segs[k].col + 1];
    if (k + 1 < segs.size() && segs[k + 1].s.y0 < limit) limit = segs[k + 1].s.y0;
    s.y0 = limit - s.h;
  }

  // Merge continuous pieces that share a box.
  ExpMatching out{{}, e.width, e.height};
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const auto& cur = segs[k];
    if (!out.segments.empty() && segs[k - 1].row == cur.row && segs[k - 1].col == cur.col &&
        out.segments.back().x1() == cur.s.x0 && out.segments.back().y1() == cur.s.y0) {
      out.segments.back().h += cur.s.h;
    } else {
      out.segments.push_back(cur.s);
    }
  }
  return out;
}

}  // namespace expstr
