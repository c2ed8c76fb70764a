#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "expstr/cost_model.hpp"
#include "expstr/edit_script.hpp"
#include "expstr/exp_string.hpp"

namespace expstr {

/// Raised when a computation would exceed its configured size limit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Backend {
  expanded,   ///< alignment DP over the expanded characters
  run_block,  ///< unit-cost DP over the run grid, independent of run lengths
};

std::string_view to_string(Backend b);
/// Accepts "expanded", "run-block" and "run_block".
Backend parse_backend(std::string_view name);

inline constexpr std::size_t kDefaultCellGuard = 1'000'000;

struct DistanceOptions {
  Backend backend = Backend::expanded;
  bool want_script = false;
  /// Maximum number of DP cells for the expanded backend.
  std::size_t cell_guard = kDefaultCellGuard;
};

struct DistanceReport {
  Rational distance;
  Backend backend = Backend::expanded;
  std::optional<EditScript> script;
};

/// Both inputs scaled by their common denominator into integer-exponent
/// strings.
struct ScaledPair {
  Integer denominator;
  ExpString first;
  ExpString second;
};

/// Least common multiple of every exponent denominator of p and q; 1 when
/// both are empty.
Integer common_denominator(const ExpString& p, const ExpString& q);

ScaledPair scale_to_integers(const ExpString& p, const ExpString& q);

struct StringEditResult {
  Rational distance;
  EditScript script;
};

/// Textbook alignment DP over the expanded characters of two integer-exponent
/// strings. Ties in the backtrace prefer substitution, then deletion, then
/// insertion; runs of identical operations are merged.
/// Throws GuardExceeded when (len(w1)+1)(len(w2)+1) > cell_guard.
StringEditResult string_edit_distance_expanded(const ExpString& w1, const ExpString& w2, const CostModel& m,
                                               std::size_t cell_guard = kDefaultCellGuard);

/// Unit-cost edit distance over run-length form, with work depending on the
/// number of runs rather than their lengths.
Rational string_edit_distance_run_block(const ExpString& w1, const ExpString& w2);

/// Exp-edit distance from p to q.
///
/// Empty inputs are answered in closed form. Otherwise both strings are
/// scaled by their common denominator C, the integer edit distance d is
/// computed by the chosen backend, and d / C is returned. A requested
/// script is expressed in the original (unscaled) exponents.
///
/// Throws MissingCost when m does not cover the symbols of p and q,
/// std::invalid_argument for the run-block backend with a non-unit model
/// or with a script request, and GuardExceeded from the expanded backend.
DistanceReport exp_edit_distance(const ExpString& p, const ExpString& q, const CostModel& m,
                                 const DistanceOptions& options = {});

}  // namespace expstr
