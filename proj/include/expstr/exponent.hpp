#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>

#include "expstr/rational.hpp"

namespace expstr {

/// An exponent type is a semigroup: an associative `combine` found by ADL,
/// plus equality. No identity element is required.
template <typename E>
concept ExponentSemigroup = std::equality_comparable<E> && std::copy_constructible<E> &&
                            requires(const E& a, const E& b) {
                              { combine(a, b) } -> std::convertible_to<E>;
                            };

/// Positive rational under addition.
class Exponent {
 public:
  explicit Exponent(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    if (sgn(value_) <= 0) throw std::invalid_argument("exponent must be positive, got " + to_string(value_));
  }
  explicit Exponent(long value) : Exponent(Rational(value)) {}

  const Rational& value() const noexcept { return value_; }

  friend Exponent combine(const Exponent& a, const Exponent& b) { return Exponent(a.value_ + b.value_); }

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  Rational value_;
};

/// Positive natural number under addition; the exponents of run-length
/// encoded strings.
class Count {
 public:
  explicit Count(std::uint64_t value) : value_(value) {
    if (value == 0) throw std::invalid_argument("count exponent must be positive");
  }

  std::uint64_t value() const noexcept { return value_; }

  friend Count combine(Count a, Count b) { return Count(a.value_ + b.value_); }
  friend bool operator==(Count, Count) = default;
  friend auto operator<=>(Count, Count) = default;

 private:
  std::uint64_t value_;
};

static_assert(ExponentSemigroup<Exponent>);
static_assert(ExponentSemigroup<Count>);

}  // namespace expstr
