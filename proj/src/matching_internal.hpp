#pragma once

#include <utility>
#include <vector>

#include "expstr/matching.hpp"

namespace expstr::detail {

struct BoxPiece {
  Segment segment;
  std::size_t row;
  std::size_t col;
};

/// Splits a segment at every grid line it crosses.
std::vector<BoxPiece> box_pieces(const Segment& s, const BoxGrid& grid);

/// Factor pieces of p restricted to [from, to).
std::vector<std::pair<Symbol, Rational>> pieces_of(const ExpString& p, const Rational& from, const Rational& to);

}  // namespace expstr::detail
