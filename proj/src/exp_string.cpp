#include "expstr/exp_string.hpp"

#include <stdexcept>

namespace expstr {

ExpString parse_factors(std::span<const std::pair<Symbol, Rational>> raw) {
  std::vector<Factor> factors;
  factors.reserve(raw.size());
  for (const auto& [symbol, exponent] : raw) factors.push_back(Factor{symbol, Exponent(exponent)});
  return ExpString::canonical(factors);
}

ExpString make_exp_string(std::initializer_list<std::pair<char32_t, const char*>> raw) {
  std::vector<std::pair<Symbol, Rational>> factors;
  for (const auto& [code, exponent] : raw) factors.emplace_back(Symbol(code), parse_rational(exponent));
  return parse_factors(factors);
}

Rational len(const ExpString& p) {
  Rational total = 0;
  for (const auto& f : p.factors()) total += f.exponent.value();
  return total;
}

Symbol char_at(const ExpString& p, const Rational& x) {
  if (sgn(x) < 0) throw std::out_of_range("position " + to_string(x) + " is negative");
  Rational end = 0;
  for (const auto& f : p.factors()) {
    end += f.exponent.value();
    if (x < end) return f.symbol;
  }
  throw std::out_of_range("position " + to_string(x) + " is outside [0, " + to_string(end) + ")");
}

std::pair<ExpString, ExpString> split_at(const ExpString& p, const Rational& x) {
  if (sgn(x) < 0) throw std::out_of_range("split position " + to_string(x) + " is negative");
  std::vector<Factor> left, right;
  Rational start = 0;
  for (const auto& f : p.factors()) {
    Rational end = start + f.exponent.value();
    if (end <= x) {
      left.push_back(f);
    } else if (start >= x) {
      right.push_back(f);
    } else {
      left.push_back(Factor{f.symbol, Exponent(Rational(x - start))});
      right.push_back(Factor{f.symbol, Exponent(Rational(end - x))});
    }
    start = end;
  }
  if (x > start) throw std::out_of_range("split position " + to_string(x) + " exceeds length " + to_string(start));
  return {ExpString::canonical(left), ExpString::canonical(right)};
}

ExpString slice(const ExpString& p, const Rational& from, const Rational& to) {
  if (from > to) throw std::out_of_range("slice bounds are reversed");
  auto tail = split_at(p, from).second;
  return split_at(tail, Rational(to - from)).first;
}

bool is_prefix(const ExpString& q, const ExpString& p) {
  Rational lq = len(q);
  if (lq > len(p)) return false;
  return split_at(p, lq).first == q;
}

bool is_suffix(const ExpString& q, const ExpString& p) {
  Rational lq = len(q), lp = len(p);
  if (lq > lp) return false;
  return split_at(p, Rational(lp - lq)).second == q;
}

bool is_infix(const ExpString& q, const ExpString& p) {
  if (q.empty()) return true;
  Rational lq = len(q), lp = len(p);
  if (lq > lp) return false;

  const Factor& head = q[0];
  if (q.flen() == 1) {
    for (const auto& f : p.factors())
      if (f.symbol == head.symbol && f.exponent >= head.exponent) return true;
    return false;
  }
  // With two or more factors the first factor of q must end exactly where
  // a factor of p with the same symbol ends.
  Rational boundary = 0;
  for (std::size_t k = 0; k + 1 < p.flen(); ++k) {
    boundary += p[k].exponent.value();
    if (p[k].symbol != head.symbol) continue;
    Rational start = boundary - head.exponent.value();
    if (sgn(start) < 0 || start + lq > lp) continue;
    if (slice(p, start, Rational(start + lq)) == q) return true;
  }
  return false;
}

std::u32string to_plain_string(const ExpString& p) {
  std::u32string out;
  for (const auto& f : p.factors()) {
    if (!is_integer(f.exponent.value()))
      throw std::invalid_argument("exponent " + to_string(f.exponent.value()) + " is not a natural number");
    const Integer& n = f.exponent.value().get_num();
    if (!n.fits_ulong_p()) throw std::length_error("exponent too large to expand");
    out.append(n.get_ui(), f.symbol.code());
  }
  return out;
}

std::u32string to_plain_string(const RunString& p) {
  std::u32string out;
  for (const auto& f : p.factors()) out.append(f.exponent.value(), f.symbol.code());
  return out;
}

RunString run_length_encode(std::u32string_view s) {
  std::vector<BasicFactor<Count>> factors;
  for (char32_t c : s) factors.push_back({Symbol(c), Count(1)});
  return RunString::canonical(factors);
}

ExpString from_plain_string(std::u32string_view s) {
  std::vector<Factor> factors;
  RunString runs = run_length_encode(s);
  for (const auto& f : runs.factors())
    factors.push_back(Factor{f.symbol, Exponent(Rational(Integer(f.exponent.value())))});
  return ExpString::canonical(factors);
}

ExpString scale(const ExpString& p, const Rational& k) {
  if (sgn(k) <= 0) throw std::invalid_argument("scale factor must be positive, got " + to_string(k));
  std::vector<Factor> factors;
  factors.reserve(p.flen());
  for (const auto& f : p.factors()) factors.push_back(Factor{f.symbol, Exponent(Rational(f.exponent.value() * k))});
  return ExpString::canonical(factors);
}

std::vector<Symbol> symbols_of(const ExpString& p) {
  std::vector<Symbol> out;
  for (const auto& f : p.factors()) {
    bool seen = false;
    for (Symbol s : out) seen = seen || s == f.symbol;
    if (!seen) out.push_back(f.symbol);
  }
  return out;
}

std::string debug_string(const ExpString& p) {
  if (p.empty()) return "λ";
  std::string out;
  for (const auto& f : p.factors()) {
    if (!out.empty()) out += ' ';
    out += f.symbol.utf8();
    out += '^';
    out += to_string(f.exponent.value());
  }
  return out;
}

}  // namespace expstr
