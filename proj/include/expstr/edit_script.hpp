#pragma once

#include <string>
#include <vector>

#include "expstr/cost_model.hpp"
#include "expstr/exp_string.hpp"

namespace expstr {

/// One exp-edit operation applied at `position` of the string as it stands
/// when the step runs. Deletions and substitutions act on
/// [position, position + q); insertions splice in at `position`.
struct ScriptStep {
  Rational position;
  EditOperation op;

  friend bool operator==(const ScriptStep&, const ScriptStep&) = default;
};

using EditScript = std::vector<ScriptStep>;

/// Replays the script. Throws std::invalid_argument when a step's position
/// is out of range or the text under it does not match the operation.
ExpString apply_script(const ExpString& p, const EditScript& script);

Rational script_cost(const CostModel& m, const EditScript& script);

/// One line per step, e.g. "del a^1/2 @ 0".
std::string format_script(const EditScript& script);

}  // namespace expstr
