#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "expstr/cost_model.hpp"

namespace expstr {

/// The file could not be read as a cost document (bad JSON, bad shape,
/// malformed number). Distinct from a well-formed but invalid model.
class CostFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedCostModel {
  CostModel model;
  /// Declared "alphabet", or every symbol the document mentions.
  std::vector<Symbol> alphabet;
};

/// Reads a JSON cost document:
///
///   {
///     "alphabet": "abc",                      (optional)
///     "ins": {"a": 1, "b": "3/2"},
///     "del": {"a": "0.5", "b": 1},
///     "sub": [["a", "b", "5/4"], ...]          (optional)
///   }
///
/// Costs are integers, "p/q" strings or decimal strings. Missing
/// off-diagonal substitutions become del(a) + ins(b); the diagonal is 0.
LoadedCostModel parse_cost_document(std::string_view json_text);

/// Inverse of parse_cost_document (all substitutions written out).
std::string write_cost_document(const CostModel& m, const std::vector<Symbol>& alphabet);

}  // namespace expstr
