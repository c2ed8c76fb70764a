#include "expstr/distance.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace expstr {

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::expanded:
      return "expanded";
    case Backend::run_block:
      return "run-block";
  }
  return "unknown";
}

Backend parse_backend(std::string_view name) {
  if (name == "expanded") return Backend::expanded;
  if (name == "run-block" || name == "run_block") return Backend::run_block;
  throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

Integer common_denominator(const ExpString& p, const ExpString& q) {
  Integer c = 1;
  for (const auto* s : {&p, &q})
    for (const auto& f : s->factors()) c = lcm(c, f.exponent.value().get_den());
  return c;
}

ScaledPair scale_to_integers(const ExpString& p, const ExpString& q) {
  Integer c = common_denominator(p, q);
  Rational k(c);
  return {c, p.empty() ? p : scale(p, k), q.empty() ? q : scale(q, k)};
}

namespace {

std::size_t expanded_length(const ExpString& w, const char* which) {
  Integer total = 0;
  for (const auto& f : w.factors()) {
    if (!is_integer(f.exponent.value()))
      throw std::invalid_argument(std::string(which) + " has a non-integer exponent");
    total += f.exponent.value().get_num();
  }
  if (!total.fits_ulong_p()) throw GuardExceeded("expanded length does not fit in memory");
  return total.get_ui();
}

enum class Step { substitute, remove, insert };

struct AlignedStep {
  Step kind;
  Symbol from;
  Symbol to;
};

/// Turns unit alignment steps into merged, position-annotated operations,
/// each unit weighing `unit`.
EditScript to_script(const std::vector<AlignedStep>& steps, const Rational& unit) {
  EditScript script;
  Integer position = 0;  // in units
  Integer run_start = 0;
  Integer run_length = 0;
  std::optional<AlignedStep> run;

  auto flush = [&] {
    if (!run || run_length == 0) return;
    Exponent amount(Rational(run_length) * unit);
    Rational at = Rational(run_start) * unit;
    switch (run->kind) {
      case Step::substitute:
        script.push_back({at, Substitution{run->from, run->to, amount}});
        break;
      case Step::remove:
        script.push_back({at, Deletion{run->from, amount}});
        break;
      case Step::insert:
        script.push_back({at, Insertion{run->to, amount}});
        break;
    }
    run.reset();
    run_length = 0;
  };

  for (const auto& s : steps) {
    if (s.kind == Step::substitute && s.from == s.to) {
      flush();
      position += 1;
      continue;
    }
    bool extends = run && run->kind == s.kind;
    if (extends && s.kind != Step::insert) extends = run->from == s.from;
    if (extends && s.kind != Step::remove) extends = run->to == s.to;
    if (!extends) {
      flush();
      run = s;
      run_start = position;
    }
    run_length += 1;
    if (s.kind != Step::remove) position += 1;
  }
  flush();
  return script;
}

void require_coverage(const CostModel& m, const ExpString& p, const ExpString& q) {
  auto alphabet = symbols_of(concat(p, q));
  for (Symbol a : alphabet) {
    (void)m.ins(a);
    (void)m.del(a);
    for (Symbol b : alphabet) (void)m.sub(a, b);
  }
}

}  // namespace

namespace {

/// Per-character weights with symbols replaced by dense indices, so the
/// inner loop does no map lookups. `Value` is Rational, or std::int64_t when
/// every weight scaled by `scale` is an integer small enough that no DP cell
/// can overflow.
template <typename Value>
struct DenseCosts {
  std::vector<std::size_t> a, b;  // symbol index per character
  std::vector<Symbol> symbols;
  std::vector<Value> del, ins;  // indexed by symbol
  std::vector<Value> sub;       // [from * size + to]

  const Value& substitute(std::size_t i, std::size_t j) const { return sub[a[i] * symbols.size() + b[j]]; }
};

struct Weights {
  std::vector<std::size_t> a, b;
  std::vector<Symbol> symbols;
  std::vector<Rational> del, ins, sub;
};

Weights gather_weights(const std::u32string& x, const std::u32string& y, const CostModel& m) {
  Weights w;
  auto index = [&](char32_t c) {
    for (std::size_t i = 0; i < w.symbols.size(); ++i)
      if (w.symbols[i].code() == c) return i;
    w.symbols.emplace_back(c);
    return w.symbols.size() - 1;
  };
  for (char32_t c : x) w.a.push_back(index(c));
  for (char32_t c : y) w.b.push_back(index(c));
  for (Symbol s : w.symbols) {
    w.del.push_back(m.del(s));
    w.ins.push_back(m.ins(s));
  }
  for (Symbol s : w.symbols)
    for (Symbol t : w.symbols) w.sub.push_back(m.sub(s, t));
  return w;
}

template <typename Value, typename Convert>
DenseCosts<Value> densify(const Weights& w, Convert convert) {
  DenseCosts<Value> out{w.a, w.b, w.symbols, {}, {}, {}};
  for (const auto& v : w.del) out.del.push_back(convert(v));
  for (const auto& v : w.ins) out.ins.push_back(convert(v));
  for (const auto& v : w.sub) out.sub.push_back(convert(v));
  return out;
}

/// Alignment DP plus optional backtrace; returns the distance in Value units.
template <typename Value>
std::pair<Value, std::vector<AlignedStep>> align(const DenseCosts<Value>& w, bool with_script) {
  const std::size_t n = w.a.size(), k = w.b.size();
  const std::size_t stride = k + 1;
  // The whole table is kept only when a backtrace is needed.
  std::vector<Value> dp((with_script ? n + 1 : 2) * stride);
  auto at = [&](std::size_t i, std::size_t j) -> Value& { return dp[(with_script ? i : i % 2) * stride + j]; };
  for (std::size_t j = 1; j <= k; ++j) at(0, j) = at(0, j - 1) + w.ins[w.b[j - 1]];
  Value candidate{};
  for (std::size_t i = 1; i <= n; ++i) {
    const Value& del = w.del[w.a[i - 1]];
    at(i, 0) = at(i - 1, 0) + del;
    for (std::size_t j = 1; j <= k; ++j) {
      Value& cell = at(i, j);
      cell = at(i - 1, j - 1) + w.substitute(i - 1, j - 1);
      candidate = at(i - 1, j) + del;
      if (candidate < cell) cell = candidate;
      candidate = at(i, j - 1) + w.ins[w.b[j - 1]];
      if (candidate < cell) cell = candidate;
    }
  }
  std::vector<AlignedStep> steps;
  if (!with_script) return {at(n, k), steps};

  for (std::size_t i = n, j = k; i > 0 || j > 0;) {
    if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + w.substitute(i - 1, j - 1)) {
      steps.push_back({Step::substitute, w.symbols[w.a[i - 1]], w.symbols[w.b[j - 1]]});
      --i;
      --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + w.del[w.a[i - 1]]) {
      steps.push_back({Step::remove, w.symbols[w.a[i - 1]], w.symbols[w.a[i - 1]]});
      --i;
    } else {
      steps.push_back({Step::insert, w.symbols[w.b[j - 1]], w.symbols[w.b[j - 1]]});
      --j;
    }
  }
  std::reverse(steps.begin(), steps.end());
  return {at(n, k), std::move(steps)};
}

StringEditResult expanded_dp(const ExpString& w1, const ExpString& w2, const CostModel& m, std::size_t cell_guard,
                             bool with_script) {
  std::size_t n = expanded_length(w1, "first string");
  std::size_t k = expanded_length(w2, "second string");
  if (Integer(n + 1) * Integer(k + 1) > Integer(cell_guard))
    throw GuardExceeded("expanded DP needs " + std::to_string(n + 1) + " x " + std::to_string(k + 1) +
                        " cells, limit is " + std::to_string(cell_guard));

  Weights w = gather_weights(to_plain_string(w1), to_plain_string(w2), m);

  // Every cell is a sum of at most n + k weights, so integer weights below
  // 2^62 / (n + k + 1) cannot overflow.
  Integer scale = 1;
  Integer largest = 0;
  for (const auto* list : {&w.del, &w.ins, &w.sub})
    for (const auto& v : *list) scale = lcm(scale, v.get_den());
  for (const auto* list : {&w.del, &w.ins, &w.sub})
    for (const auto& v : *list) largest = std::max(largest, Integer(v.get_num() * (scale / v.get_den())));
  const Integer bound = (Integer(1) << 62) / Integer(n + k + 1);
  if (largest < bound) {
    auto dense = densify<std::int64_t>(w, [&](const Rational& v) {
      Integer scaled = v.get_num() * (scale / v.get_den());
      return static_cast<std::int64_t>(scaled.get_si());
    });
    auto [value, steps] = align(dense, with_script);
    Rational distance(Integer(static_cast<long>(value)), scale);
    distance.canonicalize();
    return {distance, with_script ? to_script(steps, Rational(1)) : EditScript{}};
  }
  auto dense = densify<Rational>(w, [](const Rational& v) { return v; });
  auto [value, steps] = align(dense, with_script);
  return {value, with_script ? to_script(steps, Rational(1)) : EditScript{}};
}

}  // namespace

StringEditResult string_edit_distance_expanded(const ExpString& w1, const ExpString& w2, const CostModel& m,
                                               std::size_t cell_guard) {
  return expanded_dp(w1, w2, m, cell_guard, true);
}

DistanceReport exp_edit_distance(const ExpString& p, const ExpString& q, const CostModel& m,
                                 const DistanceOptions& options) {
  require_coverage(m, p, q);
  DistanceReport report;
  report.backend = options.backend;

  if (options.backend == Backend::run_block) {
    auto alphabet = symbols_of(concat(p, q));
    if (!m.is_unit(alphabet)) throw std::invalid_argument("run-block backend supports only the unit cost model");
    if (options.want_script) throw std::invalid_argument("run-block backend does not recover edit scripts");
  }

  if (p.empty() || q.empty()) {
    EditScript script;
    Rational total = 0;
    Rational position = 0;
    for (const auto& f : q.factors()) {
      total += f.exponent.value() * m.ins(f.symbol);
      script.push_back({position, Insertion{f.symbol, f.exponent}});
      position += f.exponent.value();
    }
    for (const auto& f : p.factors()) {
      total += f.exponent.value() * m.del(f.symbol);
      script.push_back({0, Deletion{f.symbol, f.exponent}});
    }
    report.distance = total;
    if (options.want_script) report.script = std::move(script);
    return report;
  }

  ScaledPair scaled = scale_to_integers(p, q);
  Rational unit(Integer(1), scaled.denominator);
  if (options.backend == Backend::run_block) {
    report.distance = string_edit_distance_run_block(scaled.first, scaled.second) * unit;
    return report;
  }

  auto result = expanded_dp(scaled.first, scaled.second, m, options.cell_guard, options.want_script);
  report.distance = result.distance * unit;
  if (options.want_script) {
    EditScript script;
    for (auto& step : result.script) {
      Rational position = step.position * unit;
      EditOperation op = std::visit(
          [&](const auto& o) -> EditOperation {
            auto copy = o;
            copy.amount = Exponent(Rational(o.amount.value() * unit));
            return copy;
          },
          step.op);
      script.push_back({position, op});
    }
    report.script = std::move(script);
  }
  return report;
}

}  // namespace expstr
