#include <gtest/gtest.h>

#include "expstr/cost_file.hpp"
#include "expstr/notation.hpp"
#include "test_support.hpp"

namespace expstr {
namespace {

using testing::Rng;

TEST(ParseNotation, Examples) {
  EXPECT_EQ(parse_notation("b^1i^1.9t^1"), make_exp_string({{'b', "1"}, {'i', "19/10"}, {'t', "1"}}));
  EXPECT_EQ(parse_notation("a^2c^1.5b^3"), make_exp_string({{'a', "2"}, {'c', "3/2"}, {'b', "3"}}));
  EXPECT_EQ(parse_notation("abba"), make_exp_string({{'a', "1"}, {'b', "2"}, {'a', "1"}}));
  EXPECT_EQ(parse_notation("[f^1ɔ^1.7t^1]"), make_exp_string({{'f', "1"}, {U'ɔ', "17/10"}, {'t', "1"}}));
  EXPECT_EQ(parse_notation(" a^.5  b^3/4 "), make_exp_string({{'a', "1/2"}, {'b', "3/4"}}));
  EXPECT_TRUE(parse_notation("").empty());
  EXPECT_TRUE(parse_notation("[]").empty());
}

TEST(ParseNotation, Errors) {
  for (const char* bad : {"a^0", "a^", "a^-1", "a^1/0", "a^1.", "^2", "a^2/", "[ab", "a]b", "a^0/3"})
    EXPECT_THROW(parse_notation(bad), std::invalid_argument) << bad;
}

TEST(ParseNotation, ErrorsNameTheOffset) {
  try {
    parse_notation("ab^0");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos) << e.what();
  }
}

TEST(FormatNotation, Examples) {
  auto p = parse_notation("a^3/2");
  EXPECT_EQ(format_notation(p), "a^3/2");
  EXPECT_EQ(format_notation(p, NotationStyle::decimal_if_exact), "a^1.5");
  EXPECT_EQ(format_notation(parse_notation("a^1/3"), NotationStyle::decimal_if_exact), "a^1/3");
  EXPECT_EQ(format_notation(ExpString{}), "");
  EXPECT_EQ(format_notation(parse_notation("ab")), "ab");
}

TEST(FormatNotation, SeparatesDigitSymbols) {
  auto p = make_exp_string({{'a', "2"}, {'7', "1"}});
  EXPECT_EQ(parse_notation(format_notation(p)), p);
}

TEST(FormatNotation, RoundTripsInBothStyles) {
  Rng rng(61);
  for (int trial = 0; trial < 500; ++trial) {
    auto p = testing::random_exp_string(rng, 6, U"ab1ɔ", 30, 12);
    EXPECT_EQ(parse_notation(format_notation(p)), p) << format_notation(p);
    EXPECT_EQ(parse_notation(format_notation(p, NotationStyle::decimal_if_exact)), p);
  }
}

TEST(SymbolMap, LongestMatchWins) {
  auto map = parse_symbol_map("# digraphs\naɪ\tA\na\tx\n\n");
  EXPECT_EQ(map.apply("aɪ^2 a"), "A^2 x");
  EXPECT_TRUE(SymbolMap{}.empty());
  EXPECT_THROW(parse_symbol_map("nota-tab\n"), std::invalid_argument);
}

TEST(Document, ReadsEntriesInOrder) {
  auto doc = parse_document("# Table\nbeat\t[b^1i^1.9t^1]\n\nbead\tb i^3.5 d\n");
  ASSERT_EQ(doc.entries.size(), 2u);
  EXPECT_EQ(doc.entries[0].id, "beat");
  EXPECT_EQ(doc.entries[1].value, parse_notation("b i^3.5 d"));
  EXPECT_TRUE(parse_document("").entries.empty());
}

TEST(Document, RejectsDuplicatesAndBadLines) {
  EXPECT_THROW(parse_document("x\ta\nx\tb\n"), std::invalid_argument);
  EXPECT_THROW(parse_document("x\ta^0\n"), std::invalid_argument);
  EXPECT_THROW(parse_document("no tab here\n"), std::invalid_argument);
}

TEST(Document, AppliesTheSymbolMap) {
  auto map = parse_symbol_map("ɔː\tO\n");
  auto doc = parse_document("fort\tf ɔː^1.7 t\n", map);
  EXPECT_EQ(doc.entries[0].value, make_exp_string({{'f', "1"}, {'O', "17/10"}, {'t', "1"}}));
}

TEST(CostDocument, ReadsAndCompletes) {
  auto loaded = parse_cost_document(R"({"ins": {"a": 1, "b": "3/2"}, "del": {"a": "0.5", "b": 1}, "sub": [["a", "b", 2]]})");
  EXPECT_EQ(loaded.alphabet.size(), 2u);
  EXPECT_EQ(loaded.model.ins(Symbol('b')), Rational(3, 2));
  EXPECT_EQ(loaded.model.del(Symbol('a')), Rational(1, 2));
  EXPECT_EQ(loaded.model.sub(Symbol('a'), Symbol('b')), 2);
  EXPECT_EQ(loaded.model.sub(Symbol('b'), Symbol('a')), 2);  // del(b) + ins(a)
  auto again = parse_cost_document(write_cost_document(loaded.model, loaded.alphabet));
  for (Symbol a : loaded.alphabet)
    for (Symbol b : loaded.alphabet) EXPECT_EQ(again.model.sub(a, b), loaded.model.sub(a, b));
}

TEST(CostDocument, RejectsMalformedInput) {
  EXPECT_THROW(parse_cost_document("{"), CostFileError);
  EXPECT_THROW(parse_cost_document("[]"), CostFileError);
  EXPECT_THROW(parse_cost_document(R"({"ins": {"ab": 1}})"), CostFileError);
  EXPECT_THROW(parse_cost_document(R"({"ins": {"a": 1.5}})"), CostFileError);
  EXPECT_THROW(parse_cost_document(R"({"sub": [["a", "b"]]})"), CostFileError);
}

}  // namespace
}  // namespace expstr
