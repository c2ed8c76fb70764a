#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "expstr/cost_model.hpp"
#include "expstr/distance.hpp"
#include "expstr/edit_script.hpp"
#include "expstr/exp_string.hpp"

namespace expstr {

/// The slope-1 segment {(x0 + t, y0 + t) : 0 <= t < h}. Its Euclidean
/// length is h·√2; only the horizontal extent h is stored so that every
/// quantity stays rational.
struct Segment {
  Rational x0;
  Rational y0;
  Rational h;

  Rational x1() const { return x0 + h; }
  Rational y1() const { return y0 + h; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// A finite union of slope-1 segments inside [0, width) x [0, height) whose
/// X- and Y-projections are pairwise disjoint and which never cross
/// (x1 < x2 implies y1 <= y2).
struct ExpMatching {
  std::vector<Segment> segments;
  Rational width;
  Rational height;

  friend bool operator==(const ExpMatching&, const ExpMatching&) = default;
};

/// Why a matching is invalid, or nullopt when it is valid.
std::optional<std::string> matching_violation(const ExpMatching& e);

/// Segments sorted by x0 with touching collinear pieces joined.
ExpMatching canonical_matching(ExpMatching e);

/// The grid of factor boundaries of two strings. Box (i, j) is
/// [xs[i], xs[i+1]) x [ys[j], ys[j+1]) and pairs symbol rows[i] of the first
/// string with cols[j] of the second (indices are 0-based).
struct BoxGrid {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  std::vector<Symbol> rows;
  std::vector<Symbol> cols;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return cols.size(); }
  /// Box containing the half-open point (x, y).
  std::pair<std::size_t, std::size_t> box_of(const Rational& x, const Rational& y) const;
};

BoxGrid box_grid(const ExpString& p, const ExpString& q);

/// Deletion of the unmatched part of p, insertion of the unmatched part of q,
/// and substitution along the segments (per unit of horizontal extent).
/// Throws std::invalid_argument for an invalid matching or mismatched bounds.
Rational matching_cost(const ExpMatching& e, const ExpString& p, const ExpString& q, const CostModel& m);

/// Clips segments at box boundaries, pushes each right then up as far as its
/// box and the disjoint-projection rule allow, and joins continuous pieces.
/// Leaves at most one segment per box and preserves the cost.
ExpMatching normalize(const ExpMatching& e, const BoxGrid& grid);

/// Number of segments lying in each box, indexed [row][col].
std::vector<std::vector<std::size_t>> segments_per_box(const ExpMatching& e, const BoxGrid& grid);

/// Box indices (row, col), 0-based, ordered so both coordinates are
/// nondecreasing.
using BoxChain = std::vector<std::pair<std::size_t, std::size_t>>;

inline constexpr std::size_t kDefaultOracleFlen = 4;

/// Every nonempty set of boxes in which i0 < i1 implies j0 <= j1.
/// Throws GuardExceeded when either string has more than `max_flen` factors.
std::vector<BoxChain> enumerate_box_chains(const ExpString& p, const ExpString& q,
                                           std::size_t max_flen = kDefaultOracleFlen);

struct ChainSolution {
  Rational cost;
  /// Horizontal extent of the segment placed in each box of the chain.
  std::vector<Rational> extents;
};

/// Minimizes the matching cost over matchings whose segments lie in the
/// chain's boxes, as an exact linear program in the segment extents.
ChainSolution chain_lp_solve(const BoxChain& chain, const ExpString& p, const ExpString& q, const CostModel& m);

/// Places one segment of the given extent per chain box, packed toward the
/// lower-left of each row and column slab.
ExpMatching matching_from_chain(const BoxChain& chain, const std::vector<Rational>& extents, const BoxGrid& grid);

struct OracleResult {
  Rational distance;
  ExpMatching matching;
  std::size_t chains_examined = 0;
};

/// Minimum matching cost over all box chains (plus the empty matching).
/// Independent of the dynamic-programming path; desk-scale inputs only.
OracleResult oracle_solve(const ExpString& p, const ExpString& q, const CostModel& m,
                          std::size_t max_flen = kDefaultOracleFlen);

Rational oracle_distance(const ExpString& p, const ExpString& q, const CostModel& m,
                         std::size_t max_flen = kDefaultOracleFlen);

/// The graph of the position map induced by replaying the script on p.
/// Throws std::invalid_argument if the script does not turn p into q.
ExpMatching matching_from_script(const ExpString& p, const ExpString& q, const EditScript& script);

/// Substitutes along every segment, deletes the unmatched part of p and
/// inserts the unmatched part of q. Its cost equals matching_cost(e).
EditScript script_from_matching(const ExpMatching& e, const ExpString& p, const ExpString& q);

/// One "x0 y0 h" line per segment, rationals as p/q.
std::string dump_matching(const ExpMatching& e);
ExpMatching parse_matching_dump(std::string_view text, const Rational& width, const Rational& height);

}  // namespace expstr
