#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "expstr/exponent.hpp"
#include "expstr/rational.hpp"
#include "expstr/symbol.hpp"

namespace expstr {

/// Raised when a cost lookup hits a symbol or pair the model does not define.
class MissingCost : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-symbol insertion/deletion weights and per-pair substitution weights.
/// Exponent-weighted operation costs are q times these.
class CostModel {
 public:
  void set_insertion(Symbol s, Rational cost) { ins_[s] = std::move(cost); }
  void set_deletion(Symbol s, Rational cost) { del_[s] = std::move(cost); }
  void set_substitution(Symbol from, Symbol to, Rational cost) { sub_[{from, to}] = std::move(cost); }

  std::optional<Rational> find_insertion(Symbol s) const;
  std::optional<Rational> find_deletion(Symbol s) const;
  /// The diagonal defaults to 0 when not set explicitly.
  std::optional<Rational> find_substitution(Symbol from, Symbol to) const;

  // Throwing lookups; MissingCost when undefined.
  const Rational& ins(Symbol s) const;
  const Rational& del(Symbol s) const;
  Rational sub(Symbol from, Symbol to) const;

  /// True when every entry over the alphabet is defined.
  bool covers(std::span<const Symbol> alphabet) const;

  /// True for the Levenshtein model over the alphabet: ins = del = 1 and
  /// sub(a,b) = [a != b].
  bool is_unit(std::span<const Symbol> alphabet) const;

  /// Fills every undefined off-diagonal substitution with del(a) + ins(b).
  void complete_substitutions(std::span<const Symbol> alphabet);

  std::set<Symbol> defined_symbols() const;

 private:
  std::map<Symbol, Rational> ins_;
  std::map<Symbol, Rational> del_;
  std::map<std::pair<Symbol, Symbol>, Rational> sub_;
};

/// ins = del = 1, sub(a,b) = 1 for a != b, sub(a,a) = 0.
/// Throws std::invalid_argument for an empty alphabet.
CostModel unit_cost_model(std::span<const Symbol> alphabet);

/// A vertex of the triangle check; nullopt stands for the empty string.
using CostVertex = std::optional<Symbol>;

std::string to_string(const CostVertex& v);

struct CostValidation {
  enum class Status { valid, invalid, incomplete };

  Status status = Status::valid;
  std::string message;
  /// For a triangle violation: w(first -> third) > w(first -> middle) + w(middle -> third).
  std::optional<std::array<CostVertex, 3>> witness;

  bool ok() const noexcept { return status == Status::valid; }
};

/// Checks positivity, the zero diagonal, and the triangle inequality over
/// the alphabet extended with the empty string. Reports the first violation
/// found in (first, third, middle) order with the empty string ordered
/// before every symbol.
CostValidation validate(const CostModel& m, std::span<const Symbol> alphabet);

/// Cost of rewriting `from` into `to` where either may be the empty string.
std::optional<Rational> vertex_cost(const CostModel& m, const CostVertex& from, const CostVertex& to);

// -- exp-edit operations ----------------------------------------------------

/// λ → b^q
struct Insertion {
  Symbol symbol;
  Exponent amount;
  friend bool operator==(const Insertion&, const Insertion&) = default;
};

/// a^q → λ
struct Deletion {
  Symbol symbol;
  Exponent amount;
  friend bool operator==(const Deletion&, const Deletion&) = default;
};

/// a^q → b^q. The exponent is preserved by a substitution.
struct Substitution {
  Symbol from;
  Symbol to;
  Exponent amount;
  friend bool operator==(const Substitution&, const Substitution&) = default;
};

using EditOperation = std::variant<Insertion, Deletion, Substitution>;

/// Builds a^q → b^r; throws std::invalid_argument unless q == r.
Substitution make_substitution(Symbol from, const Exponent& q, Symbol to, const Exponent& r);

/// q times the per-symbol cost of the operation.
Rational op_cost(const CostModel& m, const EditOperation& op);

/// The reverse operation (insertion <-> deletion, a->b <-> b->a).
EditOperation reversed(const EditOperation& op);

}  // namespace expstr
