#include "expstr/edit_script.hpp"

#include <sstream>
#include <stdexcept>

namespace expstr {

namespace {

ExpString single(Symbol s, const Exponent& q) {
  Factor f{s, q};
  return ExpString::canonical(std::span<const Factor>(&f, 1));
}

std::string step_error(std::size_t index, const std::string& what) {
  return "script step " + std::to_string(index) + ": " + what;
}

}  // namespace

ExpString apply_script(const ExpString& p, const EditScript& script) {
  ExpString current = p;
  for (std::size_t i = 0; i < script.size(); ++i) {
    const auto& step = script[i];
    Rational total = len(current);
    if (sgn(step.position) < 0 || step.position > total)
      throw std::invalid_argument(step_error(i, "position " + to_string(step.position) + " outside [0, " +
                                                    to_string(total) + "]"));
    auto [head, rest] = split_at(current, step.position);

    std::visit(
        [&](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, Insertion>) {
            current = concat(concat(head, single(op.symbol, op.amount)), rest);
          } else {
            if (op.amount.value() > len(rest))
              throw std::invalid_argument(step_error(i, "operation runs past the end of the string"));
            auto [body, tail] = split_at(rest, op.amount.value());
            Symbol expected = [&] {
              if constexpr (std::is_same_v<T, Deletion>)
                return op.symbol;
              else
                return op.from;
            }();
            if (body != single(expected, op.amount))
              throw std::invalid_argument(step_error(i, "expected " + expected.utf8() + "^" +
                                                            to_string(op.amount.value()) + " at " +
                                                            to_string(step.position) + ", found " +
                                                            debug_string(body)));
            if constexpr (std::is_same_v<T, Deletion>)
              current = concat(head, tail);
            else
              current = concat(concat(head, single(op.to, op.amount)), tail);
          }
        },
        step.op);
  }
  return current;
}

Rational script_cost(const CostModel& m, const EditScript& script) {
  Rational total = 0;
  for (const auto& step : script) total += op_cost(m, step.op);
  return total;
}

std::string format_script(const EditScript& script) {
  std::ostringstream out;
  for (const auto& step : script) {
    std::visit(
        [&](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, Insertion>)
            out << "ins " << op.symbol.utf8() << '^' << to_string(op.amount.value());
          else if constexpr (std::is_same_v<T, Deletion>)
            out << "del " << op.symbol.utf8() << '^' << to_string(op.amount.value());
          else
            out << "sub " << op.from.utf8() << "->" << op.to.utf8() << '^' << to_string(op.amount.value());
        },
        step.op);
    out << " @ " << to_string(step.position) << '\n';
  }
  return out.str();
}

}  // namespace expstr
