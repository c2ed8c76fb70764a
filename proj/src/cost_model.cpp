#include "expstr/cost_model.hpp"

#include <vector>

namespace expstr {

std::optional<Rational> CostModel::find_insertion(Symbol s) const {
  if (auto it = ins_.find(s); it != ins_.end()) return it->second;
  return std::nullopt;
}

std::optional<Rational> CostModel::find_deletion(Symbol s) const {
  if (auto it = del_.find(s); it != del_.end()) return it->second;
  return std::nullopt;
}

std::optional<Rational> CostModel::find_substitution(Symbol from, Symbol to) const {
  if (auto it = sub_.find({from, to}); it != sub_.end()) return it->second;
  if (from == to) return Rational(0);
  return std::nullopt;
}

const Rational& CostModel::ins(Symbol s) const {
  if (auto it = ins_.find(s); it != ins_.end()) return it->second;
  throw MissingCost("no insertion cost for '" + s.utf8() + "'");
}

const Rational& CostModel::del(Symbol s) const {
  if (auto it = del_.find(s); it != del_.end()) return it->second;
  throw MissingCost("no deletion cost for '" + s.utf8() + "'");
}

Rational CostModel::sub(Symbol from, Symbol to) const {
  if (auto c = find_substitution(from, to)) return *c;
  throw MissingCost("no substitution cost for '" + from.utf8() + "' -> '" + to.utf8() + "'");
}

bool CostModel::covers(std::span<const Symbol> alphabet) const {
  for (Symbol a : alphabet) {
    if (!ins_.contains(a) || !del_.contains(a)) return false;
    for (Symbol b : alphabet)
      if (!find_substitution(a, b)) return false;
  }
  return true;
}

bool CostModel::is_unit(std::span<const Symbol> alphabet) const {
  for (Symbol a : alphabet) {
    if (find_insertion(a) != Rational(1) || find_deletion(a) != Rational(1)) return false;
    for (Symbol b : alphabet)
      if (find_substitution(a, b) != Rational(a == b ? 0 : 1)) return false;
  }
  return true;
}

void CostModel::complete_substitutions(std::span<const Symbol> alphabet) {
  for (Symbol a : alphabet)
    for (Symbol b : alphabet)
      if (a != b && !sub_.contains({a, b})) {
        auto d = find_deletion(a);
        auto i = find_insertion(b);
        if (d && i) sub_[{a, b}] = *d + *i;
      }
}

std::set<Symbol> CostModel::defined_symbols() const {
  std::set<Symbol> out;
  for (const auto& [s, _] : ins_) out.insert(s);
  for (const auto& [s, _] : del_) out.insert(s);
  for (const auto& [pair, _] : sub_) {
    out.insert(pair.first);
    out.insert(pair.second);
  }
  return out;
}

CostModel unit_cost_model(std::span<const Symbol> alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("unit cost model needs a nonempty alphabet");
  CostModel m;
  for (Symbol a : alphabet) {
    m.set_insertion(a, 1);
    m.set_deletion(a, 1);
    for (Symbol b : alphabet) m.set_substitution(a, b, a == b ? 0 : 1);
  }
  return m;
}

std::string to_string(const CostVertex& v) { return v ? v->utf8() : std::string("λ"); }

std::optional<Rational> vertex_cost(const CostModel& m, const CostVertex& from, const CostVertex& to) {
  if (!from && !to) return Rational(0);
  if (!from) return m.find_insertion(*to);
  if (!to) return m.find_deletion(*from);
  return m.find_substitution(*from, *to);
}

CostValidation validate(const CostModel& m, std::span<const Symbol> alphabet) {
  CostValidation out;
  auto fail = [&](CostValidation::Status status, std::string message) {
    out.status = status;
    out.message = std::move(message);
    return out;
  };

  for (Symbol a : alphabet) {
    if (!m.find_insertion(a)) return fail(CostValidation::Status::incomplete, "missing insertion cost for " + a.utf8());
    if (!m.find_deletion(a)) return fail(CostValidation::Status::incomplete, "missing deletion cost for " + a.utf8());
    for (Symbol b : alphabet)
      if (!m.find_substitution(a, b))
        return fail(CostValidation::Status::incomplete,
                    "missing substitution cost for " + a.utf8() + " -> " + b.utf8());
  }

  for (Symbol a : alphabet) {
    if (sgn(*m.find_insertion(a)) <= 0) return fail(CostValidation::Status::invalid, "insertion cost of " + a.utf8() + " is not positive");
    if (sgn(*m.find_deletion(a)) <= 0) return fail(CostValidation::Status::invalid, "deletion cost of " + a.utf8() + " is not positive");
    for (Symbol b : alphabet) {
      Rational s = *m.find_substitution(a, b);
      if (a == b && sgn(s) != 0)
        return fail(CostValidation::Status::invalid, "substitution " + a.utf8() + " -> " + a.utf8() + " must cost 0");
      if (a != b && sgn(s) <= 0)
        return fail(CostValidation::Status::invalid,
                    "substitution " + a.utf8() + " -> " + b.utf8() + " must be positive");
    }
  }

  std::vector<CostVertex> vertices{std::nullopt};
  vertices.insert(vertices.end(), alphabet.begin(), alphabet.end());
  for (const auto& x : vertices)
    for (const auto& z : vertices) {
      if (x == z) continue;
      Rational direct = *vertex_cost(m, x, z);
      for (const auto& y : vertices) {
        if (y == x || y == z) continue;
        if (direct > *vertex_cost(m, x, y) + *vertex_cost(m, y, z)) {
          out.witness = std::array<CostVertex, 3>{x, y, z};
          return fail(CostValidation::Status::invalid, "triangle inequality violated: w(" + to_string(x) + "->" +
                                                           to_string(z) + ") > w(" + to_string(x) + "->" +
                                                           to_string(y) + ") + w(" + to_string(y) + "->" +
                                                           to_string(z) + ")");
        }
      }
    }
  return out;
}

Substitution make_substitution(Symbol from, const Exponent& q, Symbol to, const Exponent& r) {
  if (q != r)
    throw std::invalid_argument("substitution must preserve the exponent: " + to_string(q.value()) +
                                " != " + to_string(r.value()));
  return Substitution{from, to, q};
}

Rational op_cost(const CostModel& m, const EditOperation& op) {
  return std::visit(
      [&](const auto& o) -> Rational {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Insertion>)
          return o.amount.value() * m.ins(o.symbol);
        else if constexpr (std::is_same_v<T, Deletion>)
          return o.amount.value() * m.del(o.symbol);
        else
          return o.amount.value() * m.sub(o.from, o.to);
      },
      op);
}

EditOperation reversed(const EditOperation& op) {
  return std::visit(
      [](const auto& o) -> EditOperation {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Insertion>)
          return Deletion{o.symbol, o.amount};
        else if constexpr (std::is_same_v<T, Deletion>)
          return Insertion{o.symbol, o.amount};
        else
          return Substitution{o.to, o.from, o.amount};
      },
      op);
}

}  // namespace expstr
