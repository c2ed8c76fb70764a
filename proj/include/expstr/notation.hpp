#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "expstr/exp_string.hpp"

namespace expstr {

/// Text form of exponent-strings.
///
///   notation := '['? item* ']'?
///   item     := symbol ('^' exponent)?
///   exponent := digits ('.' digits)? | '.' digits | digits '/' digits
///
/// Whitespace between items is ignored and a missing exponent means 1.
/// Decimals are read exactly. Throws std::invalid_argument with the byte
/// offset of the problem.
ExpString parse_notation(std::string_view text);

enum class NotationStyle {
  fraction,         ///< a^3/2
  decimal_if_exact  ///< a^1.5, falling back to a fraction when not terminating
};

/// Unit exponents are omitted; a space separates items only where the next
/// symbol would otherwise be read as part of the exponent.
std::string format_notation(const ExpString& p, NotationStyle style = NotationStyle::fraction);

/// Rewrites multi-character tokens (e.g. IPA digraphs) to single symbols
/// before parsing. Longest match wins.
class SymbolMap {
 public:
  void add(std::string token, std::string replacement);
  std::string apply(std::string_view text) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// "token<TAB>replacement" per line; '#' comments and blank lines ignored.
SymbolMap parse_symbol_map(std::string_view text);

struct NotationEntry {
  std::string id;
  ExpString value;
};

/// Entries with unique ids, in file order.
struct NotationDocument {
  std::vector<NotationEntry> entries;
};

/// "id<TAB>notation" per line; '#' comments and blank lines ignored.
/// Throws std::invalid_argument on duplicate ids or bad notation, naming
/// the line.
NotationDocument parse_document(std::string_view text, const SymbolMap& symbols = {});

}  // namespace expstr
