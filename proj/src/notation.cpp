#include "expstr/notation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace expstr {

namespace {

bool is_space(char32_t c) { return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' || c == U'\f'; }
bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

class NotationParser {
 public:
  explicit NotationParser(std::string_view text) : text_(decode_utf8(text)) {}

  ExpString parse() {
    skip_space();
    bool bracketed = peek() == U'[';
    if (bracketed) {
      ++pos_;
      skip_space();
    }
    std::vector<std::pair<Symbol, Rational>> items;
    while (pos_ < text_.size() && !(bracketed && peek() == U']')) {
      items.push_back(item());
      skip_space();
    }
    if (bracketed) {
      if (peek() != U']') fail("missing closing ']'");
      ++pos_;
      skip_space();
    }
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return parse_factors(items);
  }

 private:
  char32_t peek() const { return pos_ < text_.size() ? text_[pos_] : U'\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("notation error at character " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::pair<Symbol, Rational> item() {
    char32_t c = peek();
    if (is_reserved_code_point(c)) fail("reserved character '" + encode_utf8(c) + "' cannot be a symbol");
    Symbol symbol(c);
    ++pos_;
    if (peek() != U'^') return {symbol, Rational(1)};
    ++pos_;
    std::size_t start = pos_;
    Rational value = exponent();
    if (sgn(value) <= 0) {
      pos_ = start;
      fail("exponent must be positive");
    }
    return {symbol, value};
  }

  Rational exponent() {
    std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    if (peek() == U'/') {
      if (pos_ == start) fail("fraction without numerator");
      ++pos_;
      std::size_t den_start = pos_;
      while (is_digit(peek())) ++pos_;
      if (pos_ == den_start) fail("fraction without denominator");
    } else if (peek() == U'.') {
      ++pos_;
      std::size_t frac_start = pos_;
      while (is_digit(peek())) ++pos_;
      if (pos_ == frac_start) fail("decimal point without digits");
    }
    if (pos_ == start) fail("missing exponent after '^'");
    std::string literal = encode_utf8(std::u32string_view(text_).substr(start, pos_ - start));
    try {
      return parse_rational(literal);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  std::u32string text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    fn(line_no, line);
  }
}

}  // namespace

ExpString parse_notation(std::string_view text) { return NotationParser(text).parse(); }

std::string format_notation(const ExpString& p, NotationStyle style) {
  std::string out;
  bool previous_had_exponent = false;
  for (const auto& f : p.factors()) {
    if (previous_had_exponent && is_digit(f.symbol.code())) out += ' ';
    out += f.symbol.utf8();
    const Rational& e = f.exponent.value();
    previous_had_exponent = e != 1;
    if (!previous_had_exponent) continue;
    out += '^';
    if (style == NotationStyle::decimal_if_exact) {
      if (auto decimal = to_exact_decimal(e)) {
        out += *decimal;
        continue;
      }
    }
    out += to_string(e);
  }
  return out;
}

void SymbolMap::add(std::string token, std::string replacement) {
  if (token.empty()) throw std::invalid_argument("symbol map token must not be empty");
  if (decode_utf8(replacement).size() != 1)
    throw std::invalid_argument("symbol map replacement for '" + token + "' must be a single character");
  (void)Symbol(decode_utf8(replacement).front());
  entries_.emplace_back(std::move(token), std::move(replacement));
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
}

std::string SymbolMap::apply(std::string_view text) const {
  if (entries_.empty()) return std::string(text);
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    bool replaced = false;
    for (const auto& [token, replacement] : entries_) {
      if (text.substr(i, token.size()) == token) {
        out += replacement;
        i += token.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out += text[i++];
  }
  return out;
}

SymbolMap parse_symbol_map(std::string_view text) {
  SymbolMap map;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw std::invalid_argument("symbol map line " + std::to_string(line_no) + ": expected 'token<TAB>symbol'");
    map.add(std::string(trim(line.substr(0, tab))), std::string(trim(line.substr(tab + 1))));
  });
  return map;
}

NotationDocument parse_document(std::string_view text, const SymbolMap& symbols) {
  NotationDocument doc;
  std::set<std::string> ids;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw std::invalid_argument("document line " + std::to_string(line_no) + ": expected 'id<TAB>notation'");
    std::string id(trim(line.substr(0, tab)));
    if (id.empty()) throw std::invalid_argument("document line " + std::to_string(line_no) + ": empty id");
    if (!ids.insert(id).second)
      throw std::invalid_argument("document line " + std::to_string(line_no) + ": duplicate id '" + id + "'");
    try {
      doc.entries.push_back({id, parse_notation(symbols.apply(line.substr(tab + 1)))});
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("document line " + std::to_string(line_no) + " ('" + id + "'): " + e.what());
    }
  });
  return doc;
}

}  // namespace expstr
