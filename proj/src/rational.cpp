#include "expstr/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace expstr {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer pow10(std::size_t n) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, n);
  return out;
}

Rational parse_unsigned_decimal(std::string_view text, std::string_view original) {
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (dot != std::string_view::npos && frac.empty() && whole.empty())
    throw std::invalid_argument("malformed number: '" + std::string(original) + "'");
  if (!whole.empty() && !all_digits(whole))
    throw std::invalid_argument("malformed number: '" + std::string(original) + "'");
  if (dot != std::string_view::npos && !frac.empty() && !all_digits(frac))
    throw std::invalid_argument("malformed number: '" + std::string(original) + "'");
  if (dot != std::string_view::npos && frac.empty())
    throw std::invalid_argument("malformed number: '" + std::string(original) + "'");

  std::string digits(whole);
  digits.append(frac);
  Integer numerator(digits.empty() ? std::string("0") : digits, 10);
  Rational out(numerator, pow10(frac.size()));
  out.canonicalize();
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view original = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty number");

  Rational out;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed fraction: '" + std::string(original) + "'");
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(original) + "'");
    out = Rational(Integer(std::string(num), 10), d);
    out.canonicalize();
  } else {
    out = parse_unsigned_decimal(text, original);
  }
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::optional<std::string> to_exact_decimal(const Rational& value) {
  Integer den = value.get_den();
  std::size_t twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;

  std::size_t places = std::max(twos, fives);
  Integer scaled = value.get_num() * pow10(places) / value.get_den();
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

std::string to_approx_decimal(const Rational& value, int significant_digits) {
  if (auto exact = to_exact_decimal(value); exact && exact->size() <= 24) return *exact;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value.get_d());
  return buf;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace expstr
