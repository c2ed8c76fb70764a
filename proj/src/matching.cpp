#include "expstr/matching.hpp"

#include <algorithm>
#include <sstream>

#include "matching_internal.hpp"

namespace expstr {

namespace detail {

std::vector<BoxPiece> box_pieces(const Segment& s, const BoxGrid& grid) {
  std::vector<Rational> cuts{Rational(0), s.h};
  for (const auto& x : grid.xs)
    if (s.x0 < x && x < s.x1()) cuts.push_back(x - s.x0);
  for (const auto& y : grid.ys)
    if (s.y0 < y && y < s.y1()) cuts.push_back(y - s.y0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<BoxPiece> out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Segment piece{s.x0 + cuts[k], s.y0 + cuts[k], cuts[k + 1] - cuts[k]};
    auto [i, j] = grid.box_of(piece.x0, piece.y0);
    out.push_back({std::move(piece), i, j});
  }
  return out;
}

std::vector<std::pair<Symbol, Rational>> pieces_of(const ExpString& p, const Rational& from, const Rational& to) {
  std::vector<std::pair<Symbol, Rational>> out;
  if (from >= to) return out;
  ExpString piece = slice(p, from, to);
  for (const auto& f : piece.factors()) out.emplace_back(f.symbol, f.exponent.value());
  return out;
}

}  // namespace detail

namespace {

bool disjoint(const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1) {
  return a1 <= b0 || b1 <= a0;
}

void sort_by_x(std::vector<Segment>& segs) {
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return a.x0 < b.x0; });
}

void require_valid(const ExpMatching& e, const ExpString& p, const ExpString& q) {
  if (auto why = matching_violation(e)) throw std::invalid_argument("invalid exp-matching: " + *why);
  if (e.width != len(p) || e.height != len(q))
    throw std::invalid_argument("matching bounds do not match the string lengths");
}

}  // namespace

std::optional<std::string> matching_violation(const ExpMatching& e) {
  const auto& segs = e.segments;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const auto& s = segs[k];
    std::string tag = "segment " + std::to_string(k);
    if (sgn(s.h) <= 0) return tag + " has non-positive extent";
    if (sgn(s.x0) < 0 || sgn(s.y0) < 0) return tag + " starts outside the rectangle";
    if (s.x1() > e.width || s.y1() > e.height) return tag + " leaves the rectangle";
  }
  for (std::size_t a = 0; a < segs.size(); ++a)
    for (std::size_t b = a + 1; b < segs.size(); ++b) {
      const auto& s = segs[a];
      const auto& t = segs[b];
      std::string tag = "segments " + std::to_string(a) + " and " + std::to_string(b);
      if (!disjoint(s.x0, s.x1(), t.x0, t.x1())) return tag + " overlap in X";
      if (!disjoint(s.y0, s.y1(), t.y0, t.y1())) return tag + " overlap in Y";
      bool s_left = s.x0 < t.x0;
      bool s_below = s.y0 < t.y0;
      if (s_left != s_below) return tag + " cross";
    }
  return std::nullopt;
}

ExpMatching canonical_matching(ExpMatching e) {
  sort_by_x(e.segments);
  std::vector<Segment> out;
  for (auto& s : e.segments) {
    if (!out.empty() && out.back().x1() == s.x0 && out.back().y1() == s.y0)
      out.back().h += s.h;
    else
      out.push_back(std::move(s));
  }
  e.segments = std::move(out);
  return e;
}

std::pair<std::size_t, std::size_t> BoxGrid::box_of(const Rational& x, const Rational& y) const {
  auto row = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin() - 1;
  auto col = std::upper_bound(ys.begin(), ys.end(), y) - ys.begin() - 1;
  if (row < 0 || col < 0 || static_cast<std::size_t>(row) >= rows.size() ||
      static_cast<std::size_t>(col) >= cols.size())
    throw std::out_of_range("point lies outside the box grid");
  return {static_cast<std::size_t>(row), static_cast<std::size_t>(col)};
}

BoxGrid box_grid(const ExpString& p, const ExpString& q) {
  BoxGrid g;
  g.xs.push_back(0);
  for (const auto& f : p.factors()) {
    g.xs.push_back(g.xs.back() + f.exponent.value());
    g.rows.push_back(f.symbol);
  }
  g.ys.push_back(0);
  for (const auto& f : q.factors()) {
    g.ys.push_back(g.ys.back() + f.exponent.value());
    g.cols.push_back(f.symbol);
  }
  return g;
}

Rational matching_cost(const ExpMatching& e, const ExpString& p, const ExpString& q, const CostModel& m) {
  require_valid(e, p, q);
  BoxGrid grid = box_grid(p, q);

  std::vector<Rational> row_cover(grid.row_count()), col_cover(grid.col_count());
  Rational substitution = 0;
  for (const auto& s : e.segments)
    for (const auto& piece : detail::box_pieces(s, grid)) {
      row_cover[piece.row] += piece.segment.h;
      col_cover[piece.col] += piece.segment.h;
      substitution += piece.segment.h * m.sub(grid.rows[piece.row], grid.cols[piece.col]);
    }

  Rational deletion = 0, insertion = 0;
  for (std::size_t i = 0; i < grid.row_count(); ++i)
    deletion += (grid.xs[i + 1] - grid.xs[i] - row_cover[i]) * m.del(grid.rows[i]);
  for (std::size_t j = 0; j < grid.col_count(); ++j)
    insertion += (grid.ys[j + 1] - grid.ys[j] - col_cover[j]) * m.ins(grid.cols[j]);
  return deletion + insertion + substitution;
}

std::vector<std::vector<std::size_t>> segments_per_box(const ExpMatching& e, const BoxGrid& grid) {
  std::vector<std::vector<std::size_t>> counts(grid.row_count(), std::vector<std::size_t>(grid.col_count(), 0));
  for (const auto& s : e.segments) {
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& piece : detail::box_pieces(s, grid)) {
      std::pair<std::size_t, std::size_t> box{piece.row, piece.col};
      if (std::find(seen.begin(), seen.end(), box) != seen.end()) continue;
      seen.push_back(box);
      ++counts[piece.row][piece.col];
    }
  }
  return counts;
}

ExpMatching matching_from_chain(const BoxChain& chain, const std::vector<Rational>& extents, const BoxGrid& grid) {
  if (chain.size() != extents.size()) throw std::invalid_argument("one extent per chain box is required");
  ExpMatching e;
  e.width = grid.xs.back();
  e.height = grid.ys.back();
  std::vector<Rational> row_used(grid.row_count()), col_used(grid.col_count());
  for (std::size_t v = 0; v < chain.size(); ++v) {
    auto [i, j] = chain[v];
    if (sgn(extents[v]) <= 0) continue;
    e.segments.push_back({grid.xs[i] + row_used[i], grid.ys[j] + col_used[j], extents[v]});
    row_used[i] += extents[v];
    col_used[j] += extents[v];
  }
  return canonical_matching(std::move(e));
}

ExpMatching matching_from_script(const ExpString& p, const ExpString& q, const EditScript& script) {
  if (apply_script(p, script) != q) throw std::invalid_argument("script does not transform the source into the target");

  std::vector<Segment> map;
  if (!p.empty()) map.push_back({0, 0, len(p)});

  for (const auto& step : script) {
    std::vector<Segment> next;
    const Rational& at = step.position;
    std::visit(
        [&](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          const Rational& amount = op.amount.value();
          for (const auto& s : map) {
            if constexpr (std::is_same_v<T, Substitution>) {
              next.push_back(s);
            } else if constexpr (std::is_same_v<T, Insertion>) {
              if (s.y1() <= at) {
                next.push_back(s);
              } else if (s.y0 >= at) {
                next.push_back({s.x0, s.y0 + amount, s.h});
              } else {
                Rational head = at - s.y0;
                next.push_back({s.x0, s.y0, head});
                next.push_back({s.x0 + head, at + amount, s.h - head});
              }
            } else {
              Rational gap_end = at + amount;
              // keep [y0, min(y1, at)), drop [at, gap_end), shift [gap_end, y1)
              if (s.y0 < at) {
                Rational end = std::min(s.y1(), at);
                next.push_back({s.x0, s.y0, end - s.y0});
              }
              if (s.y1() > gap_end) {
                Rational start = std::max(s.y0, gap_end);
                next.push_back({s.x0 + (start - s.y0), start - amount, s.y1() - start});
              }
            }
          }
        },
        step.op);
    map = std::move(next);
  }
  return canonical_matching(ExpMatching{std::move(map), len(p), len(q)});
}

EditScript script_from_matching(const ExpMatching& e, const ExpString& p, const ExpString& q) {
  if (auto why = matching_violation(e)) throw std::invalid_argument("invalid exp-matching: " + *why);
  BoxGrid grid = box_grid(p, q);
  std::vector<Segment> segs = e.segments;
  sort_by_x(segs);

  EditScript script;
  Rational position = 0;
  auto remove = [&](const Rational& from, const Rational& to) {
    for (auto& [symbol, amount] : detail::pieces_of(p, from, to))
      script.push_back({position, Deletion{symbol, Exponent(amount)}});
  };
  auto insert = [&](const Rational& from, const Rational& to) {
    for (auto& [symbol, amount] : detail::pieces_of(q, from, to)) {
      script.push_back({position, Insertion{symbol, Exponent(amount)}});
      position += amount;
    }
  };

  Rational x = 0, y = 0;
  for (const auto& s : segs) {
    remove(x, s.x0);
    insert(y, s.y0);
    for (const auto& piece : detail::box_pieces(s, grid)) {
      Symbol a = grid.rows[piece.row];
      Symbol b = grid.cols[piece.col];
      if (a != b) script.push_back({position, Substitution{a, b, Exponent(piece.segment.h)}});
      position += piece.segment.h;
    }
    x = s.x1();
    y = s.y1();
  }
  remove(x, len(p));
  insert(y, len(q));
  return script;
}

std::string dump_matching(const ExpMatching& e) {
  std::ostringstream out;
  for (const auto& s : e.segments) out << to_string(s.x0) << ' ' << to_string(s.y0) << ' ' << to_string(s.h) << '\n';
  return out.str();
}

ExpMatching parse_matching_dump(std::string_view text, const Rational& width, const Rational& height) {
  ExpMatching e{{}, width, height};
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string x0, y0, h, extra;
    if (!(fields >> x0 >> y0 >> h) || (fields >> extra))
      throw std::invalid_argument("matching dump line " + std::to_string(line_no) + ": expected 'x0 y0 h'");
    e.segments.push_back({parse_rational(x0), parse_rational(y0), parse_rational(h)});
  }
  if (auto why = matching_violation(e)) throw std::invalid_argument("invalid exp-matching: " + *why);
  return e;
}

}  // namespace expstr
