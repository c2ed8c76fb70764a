#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace expstr {

/// One character of the alphabet, stored as a Unicode code point.
/// The notation characters `^ / . [ ]` and whitespace are reserved.
class Symbol {
 public:
  /// Throws std::invalid_argument for reserved or invalid code points.
  explicit Symbol(char32_t code);

  char32_t code() const noexcept { return code_; }
  std::string utf8() const;

  friend bool operator==(Symbol, Symbol) = default;
  friend auto operator<=>(Symbol, Symbol) = default;

 private:
  char32_t code_;
};

bool is_reserved_code_point(char32_t code) noexcept;

// UTF-8 helpers shared by the notation parser and plain-string conversions.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(char32_t code);
std::string encode_utf8(std::u32string_view text);

}  // namespace expstr

template <>
struct std::hash<expstr::Symbol> {
  std::size_t operator()(expstr::Symbol s) const noexcept { return std::hash<char32_t>{}(s.code()); }
};
