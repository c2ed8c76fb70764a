#include "expstr/symbol.hpp"

#include <stdexcept>

namespace expstr {

bool is_reserved_code_point(char32_t code) noexcept {
  switch (code) {
    case U'^':
    case U'/':
    case U'.':
    case U'[':
    case U']':
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
      return true;
    default:
      return false;
  }
}

Symbol::Symbol(char32_t code) : code_(code) {
  if (code == 0 || code > 0x10FFFF || (code >= 0xD800 && code <= 0xDFFF))
    throw std::invalid_argument("invalid code point for symbol");
  if (is_reserved_code_point(code))
    throw std::invalid_argument("reserved character cannot be a symbol: '" + encode_utf8(code) + "'");
}

std::string Symbol::utf8() const { return encode_utf8(code_); }

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    auto lead = static_cast<unsigned char>(text[i]);
    std::size_t extra;
    char32_t code;
    if (lead < 0x80) {
      extra = 0;
      code = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      code = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      code = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      code = lead & 0x07;
    } else {
      throw std::invalid_argument("invalid UTF-8 lead byte");
    }
    if (i + extra >= text.size() && extra > 0)
      throw std::invalid_argument("truncated UTF-8 sequence");
    for (std::size_t k = 1; k <= extra; ++k) {
      auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) throw std::invalid_argument("invalid UTF-8 continuation byte");
      code = (code << 6) | (cont & 0x3F);
    }
    out.push_back(code);
    i += extra + 1;
  }
  return out;
}

std::string encode_utf8(char32_t code) {
  std::string out;
  if (code < 0x80) {
    out.push_back(static_cast<char>(code));
  } else if (code < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (code >> 6)));
    out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
  } else if (code < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (code >> 12)));
    out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (code >> 18)));
    out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  for (char32_t c : text) out += encode_utf8(c);
  return out;
}

}  // namespace expstr
