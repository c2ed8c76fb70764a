#include "expstr/cost_file.hpp"

#include <algorithm>

#include "json.hpp"

namespace expstr {

namespace {

using nlohmann::json;

Symbol symbol_from(const std::string& text) {
  auto code = decode_utf8(text);
  if (code.size() != 1) throw CostFileError("cost document: '" + text + "' is not a single-character symbol");
  try {
    return Symbol(code.front());
  } catch (const std::invalid_argument& e) {
    throw CostFileError(std::string("cost document: ") + e.what());
  }
}

Rational cost_from(const json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) return Rational(value.get<long>());
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw CostFileError("cost document: " + where + ": " + e.what());
  }
  throw CostFileError("cost document: " + where + ": cost must be an integer or a \"p/q\" / decimal string");
}

void remember(std::vector<Symbol>& seen, Symbol s) {
  if (std::find(seen.begin(), seen.end(), s) == seen.end()) seen.push_back(s);
}

}  // namespace

LoadedCostModel parse_cost_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CostFileError(std::string("cost document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CostFileError("cost document must be a JSON object");

  LoadedCostModel out;
  std::vector<Symbol> mentioned;

  for (const char* key : {"ins", "del"}) {
    if (!doc.contains(key)) continue;
    if (!doc[key].is_object()) throw CostFileError(std::string("cost document: '") + key + "' must be an object");
    for (const auto& [name, value] : doc[key].items()) {
      Symbol s = symbol_from(name);
      remember(mentioned, s);
      Rational c = cost_from(value, std::string(key) + "." + name);
      if (key[0] == 'i')
        out.model.set_insertion(s, c);
      else
        out.model.set_deletion(s, c);
    }
  }

  if (doc.contains("sub")) {
    if (!doc["sub"].is_array()) throw CostFileError("cost document: 'sub' must be an array of [from, to, cost]");
    for (const auto& entry : doc["sub"]) {
      if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() || !entry[1].is_string())
        throw CostFileError("cost document: each 'sub' entry must be [from, to, cost]");
      Symbol from = symbol_from(entry[0].get<std::string>());
      Symbol to = symbol_from(entry[1].get<std::string>());
      remember(mentioned, from);
      remember(mentioned, to);
      out.model.set_substitution(from, to, cost_from(entry[2], "sub " + from.utf8() + "->" + to.utf8()));
    }
  }

  if (doc.contains("alphabet")) {
    if (!doc["alphabet"].is_string()) throw CostFileError("cost document: 'alphabet' must be a string");
    for (char32_t c : decode_utf8(doc["alphabet"].get<std::string>())) {
      try {
        remember(out.alphabet, Symbol(c));
      } catch (const std::invalid_argument& e) {
        throw CostFileError(std::string("cost document: alphabet: ") + e.what());
      }
    }
  } else {
    out.alphabet = mentioned;
  }

  out.model.complete_substitutions(out.alphabet);
  return out;
}

std::string write_cost_document(const CostModel& m, const std::vector<Symbol>& alphabet) {
  json doc = json::object();
  std::string letters;
  for (Symbol s : alphabet) letters += s.utf8();
  doc["alphabet"] = letters;
  doc["ins"] = json::object();
  doc["del"] = json::object();
  doc["sub"] = json::array();
  for (Symbol a : alphabet) {
    if (auto c = m.find_insertion(a)) doc["ins"][a.utf8()] = to_string(*c);
    if (auto c = m.find_deletion(a)) doc["del"][a.utf8()] = to_string(*c);
    for (Symbol b : alphabet)
      if (auto c = m.find_substitution(a, b); c && a != b) doc["sub"].push_back({a.utf8(), b.utf8(), to_string(*c)});
  }
  return doc.dump(2);
}

}  // namespace expstr
