#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expstr/exponent.hpp"
#include "expstr/rational.hpp"
#include "expstr/symbol.hpp"

namespace expstr {

template <ExponentSemigroup E>
struct BasicFactor {
  Symbol symbol;
  E exponent;

  friend bool operator==(const BasicFactor&, const BasicFactor&) = default;
};

/// A string whose characters carry exponents from the semigroup `E`.
///
/// Always held in contraction form: adjacent factors have distinct symbols.
/// The empty string is the identity of concatenation.
template <ExponentSemigroup E>
class BasicExpString {
 public:
  using exponent_type = E;
  using factor_type = BasicFactor<E>;

  BasicExpString() = default;

  /// Builds the contraction form of an arbitrary factor sequence by merging
  /// maximal runs of equal adjacent symbols.
  static BasicExpString canonical(std::span<const factor_type> raw) {
    BasicExpString out;
    out.factors_.reserve(raw.size());
    for (const auto& f : raw) out.push_back_merging(f);
    return out;
  }

  const std::vector<factor_type>& factors() const noexcept { return factors_; }
  const factor_type& operator[](std::size_t i) const { return factors_[i]; }
  std::size_t flen() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }

  friend bool operator==(const BasicExpString&, const BasicExpString&) = default;

  friend BasicExpString concat(const BasicExpString& p, const BasicExpString& q) {
    BasicExpString out = p;
    out.factors_.reserve(p.flen() + q.flen());
    for (const auto& f : q.factors_) out.push_back_merging(f);
    return out;
  }

 private:
  void push_back_merging(const factor_type& f) {
    if (!factors_.empty() && factors_.back().symbol == f.symbol)
      factors_.back().exponent = combine(factors_.back().exponent, f.exponent);
    else
      factors_.push_back(f);
  }

  std::vector<factor_type> factors_;
};

template <ExponentSemigroup E>
BasicExpString<E> parse_factors(std::span<const BasicFactor<E>> raw) {
  return BasicExpString<E>::canonical(raw);
}

template <ExponentSemigroup E>
std::size_t flen(const BasicExpString<E>& p) {
  return p.flen();
}

using Factor = BasicFactor<Exponent>;
using ExpString = BasicExpString<Exponent>;
using RunString = BasicExpString<Count>;

/// Canonicalizes raw (symbol, rational) pairs; throws std::invalid_argument
/// if any exponent is not positive.
ExpString parse_factors(std::span<const std::pair<Symbol, Rational>> raw);

/// Convenience for literals in code and tests: {{'a', "3/2"}, {'b', "1"}}.
ExpString make_exp_string(std::initializer_list<std::pair<char32_t, const char*>> raw);

/// Sum of exponents; zero for the empty string.
Rational len(const ExpString& p);

/// Symbol at position x, using left-closed intervals [start_i, end_i).
/// Throws std::out_of_range when x < 0 or x >= len(p).
Symbol char_at(const ExpString& p, const Rational& x);

/// Splits p at position x into (u, v) with p = u v and len(u) = x.
/// Throws std::out_of_range unless 0 <= x <= len(p).
std::pair<ExpString, ExpString> split_at(const ExpString& p, const Rational& x);

/// The infix occupying [from, to). Requires 0 <= from <= to <= len(p).
ExpString slice(const ExpString& p, const Rational& from, const Rational& to);

bool is_prefix(const ExpString& q, const ExpString& p);
bool is_suffix(const ExpString& q, const ExpString& p);
bool is_infix(const ExpString& q, const ExpString& p);

/// Expands a^n into n copies of a. Throws std::invalid_argument on a
/// non-integer exponent.
std::u32string to_plain_string(const ExpString& p);
std::u32string to_plain_string(const RunString& p);

/// Run-length encodes a plain character sequence.
ExpString from_plain_string(std::u32string_view s);
RunString run_length_encode(std::u32string_view s);

/// Multiplies every exponent by k > 0.
ExpString scale(const ExpString& p, const Rational& k);

/// The set of distinct symbols in p, in first-occurrence order.
std::vector<Symbol> symbols_of(const ExpString& p);

/// Fraction-style rendering used by diagnostics ("a^3/2 b").
std::string debug_string(const ExpString& p);

}  // namespace expstr
