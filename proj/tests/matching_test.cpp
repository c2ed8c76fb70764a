#include <gtest/gtest.h>

#include "expstr/matching.hpp"
#include "expstr/notation.hpp"
#include "test_support.hpp"

namespace expstr {
namespace {

using testing::alphabet_of;
using testing::Rng;

const std::vector<Symbol> kLetters = alphabet_of(U"abcd");
const CostModel kUnit = unit_cost_model(kLetters);

Rational r(const char* text) { return parse_rational(text); }

TEST(Validity, AcceptsDisjointMonotoneSegments) {
  ExpMatching e{{{0, 0, 1}, {2, 1, r("1/2")}}, 3, 2};
  EXPECT_FALSE(matching_violation(e).has_value());
  EXPECT_FALSE(matching_violation(ExpMatching{{}, 0, 0}).has_value());
}

TEST(Validity, RejectsEachBrokenCondition) {
  EXPECT_TRUE(matching_violation({{{0, 0, 0}}, 2, 2}));                    // empty segment
  EXPECT_TRUE(matching_violation({{{1, 0, 2}}, 2, 2}));                    // leaves the rectangle
  EXPECT_TRUE(matching_violation({{{0, 0, 1}, {r("1/2"), 1, 1}}, 3, 3}));  // X-projections overlap
  EXPECT_TRUE(matching_violation({{{0, 0, 1}, {1, r("1/2"), 1}}, 3, 3}));  // Y-projections overlap
  EXPECT_TRUE(matching_violation({{{0, 2, 1}, {2, 0, 1}}, 3, 3}));         // crossing
  EXPECT_THROW(matching_cost({{{0, 2, 1}, {2, 0, 1}}, 3, 3}, parse_notation("a^3"), parse_notation("a^3"), kUnit),
               std::invalid_argument);
}

TEST(Cost, Examples) {
  auto p = parse_notation("a b^2.5 c");
  auto q = parse_notation("c b^1.5 d");
  EXPECT_EQ(matching_cost({{}, len(p), len(q)}, p, q, kUnit), 8);
  EXPECT_EQ(matching_cost({{{0, 0, 3}}, 3, 3}, parse_notation("a^3"), parse_notation("a^3"), kUnit), 0);
  // b matched to b, a to c and c to d.
  ExpMatching e{{{0, 0, 1}, {1, 1, r("3/2")}, {r("7/2"), r("5/2"), 1}}, len(p), len(q)};
  EXPECT_EQ(matching_cost(e, p, q, kUnit), 3);
  EXPECT_THROW(matching_cost({{}, 1, 1}, p, q, kUnit), std::invalid_argument);
}

TEST(Cost, CrossesBoxBoundaries) {
  auto p = parse_notation("a^2 b^2");
  auto q = parse_notation("a b^3");
  // One segment over the whole diagonal: a/a for 1, a/b for 1, b/b for 2.
  EXPECT_EQ(matching_cost({{{0, 0, 4}}, 4, 4}, p, q, kUnit), 1);
}

TEST(Normalize, ClipsPushesAndMerges) {
  auto p = parse_notation("a^2 b^2");
  auto q = parse_notation("a b^3");
  auto grid = box_grid(p, q);
  ExpMatching e{{{0, 0, 4}}, 4, 4};
  auto n = normalize(e, grid);
  EXPECT_FALSE(matching_violation(n).has_value());
  EXPECT_EQ(matching_cost(n, p, q, kUnit), matching_cost(e, p, q, kUnit));
  for (const auto& row : segments_per_box(n, grid))
    for (std::size_t count : row) EXPECT_LE(count, 1u);
  EXPECT_EQ(normalize(n, grid), n);
}

TEST(Normalize, FourStepExampleKeepsCost) {
  auto p = parse_notation("a^1.5 c b");
  auto q = parse_notation("c b^1.5 d");
  auto grid = box_grid(p, q);
  ExpMatching e{{{r("1/4"), 0, r("1/2")}, {1, r("3/4"), r("3/2")}, {r("13/4"), r("11/4"), r("1/4")}}, len(p), len(q)};
  ASSERT_FALSE(matching_violation(e).has_value());
  auto n = normalize(e, grid);
  EXPECT_EQ(matching_cost(n, p, q, kUnit), matching_cost(e, p, q, kUnit));
}

TEST(Normalize, RandomMatchingsKeepCostAndBecomeCanonical) {
  Rng rng(51);
  auto sigma = alphabet_of(U"abc");
  for (int trial = 0; trial < 200; ++trial) {
    auto p = testing::random_exp_string(rng, 4, U"abc", 6, 3, 1);
    auto q = testing::random_exp_string(rng, 4, U"abc", 6, 3, 1);
    auto m = trial % 2 ? kUnit : testing::random_valid_cost_model(rng, sigma);
    auto e = testing::random_matching(rng, len(p), len(q), 4);
    ASSERT_FALSE(matching_violation(e).has_value());
    auto grid = box_grid(p, q);
    auto n = normalize(e, grid);
    ASSERT_FALSE(matching_violation(n).has_value()) << dump_matching(e);
    EXPECT_EQ(matching_cost(n, p, q, m), matching_cost(e, p, q, m)) << dump_matching(e);
    for (const auto& row : segments_per_box(n, grid))
      for (std::size_t count : row) EXPECT_LE(count, 1u);
    EXPECT_EQ(normalize(n, grid), n);
  }
}

TEST(Chains, CountsMatchBruteForce) {
  EXPECT_EQ(enumerate_box_chains(parse_notation("a"), parse_notation("b")).size(), 1u);
  EXPECT_EQ(enumerate_box_chains(parse_notation("ab"), parse_notation("ab")).size(), 11u);
  EXPECT_EQ(enumerate_box_chains(parse_notation("ab"), parse_notation("abc")).size(), 31u);
  EXPECT_EQ(enumerate_box_chains(parse_notation("abc"), parse_notation("abc")).size(), 103u);
  EXPECT_TRUE(enumerate_box_chains(ExpString{}, parse_notation("ab")).empty());
  EXPECT_THROW(enumerate_box_chains(parse_notation("abab"), parse_notation("a"), 3), GuardExceeded);
}

TEST(Chains, AreMonotone) {
  for (const auto& chain : enumerate_box_chains(parse_notation("abc"), parse_notation("abca")))
    for (const auto& [i0, j0] : chain)
      for (const auto& [i1, j1] : chain) EXPECT_FALSE(i0 < i1 && j0 > j1);
}

TEST(ChainLp, SingleBox) {
  auto p = parse_notation("a^2");
  auto sol = chain_lp_solve({{0, 0}}, p, p, kUnit);
  EXPECT_EQ(sol.cost, 0);
  ASSERT_EQ(sol.extents.size(), 1u);
  EXPECT_EQ(sol.extents[0], 2);
}

TEST(ChainLp, ZeroGainLeavesTheConstantTerm) {
  auto p = parse_notation("a^2");
  auto q = parse_notation("b^3");
  auto m = kUnit;
  m.set_substitution(Symbol('a'), Symbol('b'), 2);
  EXPECT_EQ(chain_lp_solve({{0, 0}}, p, q, m).cost, 5);
}

TEST(ChainLp, FourBoxChain) {
  auto p = parse_notation("a^1.5 c b");
  auto q = parse_notation("c b^1.5 d");
  auto sol = chain_lp_solve({{0, 0}, {0, 1}, {0, 2}, {2, 2}}, p, q, kUnit);
  EXPECT_EQ(sol.cost, r("9/2"));
  Rational row0 = sol.extents[0] + sol.extents[1] + sol.extents[2];
  EXPECT_LE(row0, r("3/2"));
  auto e = matching_from_chain({{0, 0}, {0, 1}, {0, 2}, {2, 2}}, sol.extents, box_grid(p, q));
  EXPECT_FALSE(matching_violation(e).has_value());
  EXPECT_EQ(matching_cost(e, p, q, kUnit), sol.cost);
}

TEST(Oracle, Examples) {
  auto p = parse_notation("a^1.5 c b");
  auto q = parse_notation("c b^1.5 d");
  EXPECT_EQ(oracle_distance(p, p, kUnit), 0);
  EXPECT_EQ(oracle_distance(ExpString{}, q, kUnit), r("7/2"));
  EXPECT_EQ(oracle_distance(p, q, kUnit), 3);
  EXPECT_EQ(oracle_distance(parse_notation("a b^2.5 c"), q, kUnit), 3);
  auto result = oracle_solve(p, q, kUnit);
  EXPECT_EQ(matching_cost(result.matching, p, q, kUnit), 3);
  EXPECT_GT(result.chains_examined, 0u);
}

TEST(Oracle, AgreesWithTheDistance) {
  Rng rng(52);
  auto sigma = alphabet_of(U"abc");
  for (int trial = 0; trial < 60; ++trial) {
    auto p = testing::random_exp_string(rng, 3, U"abc", 6, 4);
    auto q = testing::random_exp_string(rng, 3, U"abc", 6, 4);
    auto m = trial % 2 ? kUnit : testing::random_valid_cost_model(rng, sigma);
    EXPECT_EQ(oracle_distance(p, q, m), exp_edit_distance(p, q, m).distance)
        << debug_string(p) << " / " << debug_string(q);
  }
}

TEST(Oracle, IntegerInputsGiveIntegerExtents) {
  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = testing::random_exp_string(rng, 3, U"abc", 4, 1, 1);
    auto q = testing::random_exp_string(rng, 3, U"abc", 4, 1, 1);
    auto result = oracle_solve(p, q, kUnit);
    for (const auto& s : result.matching.segments) EXPECT_TRUE(is_integer(s.h)) << dump_matching(result.matching);
  }
}

TEST(Scripts, DeletionFromTheMiddleLeavesAGap) {
  auto p = parse_notation("a b^2 c");
  auto q = parse_notation("a b c");
  auto e = matching_from_script(p, q, {{1, Deletion{Symbol('b'), Exponent(1)}}});
  ASSERT_EQ(e.segments.size(), 2u);
  EXPECT_EQ(e.segments[0], (Segment{0, 0, 1}));
  EXPECT_EQ(e.segments[1], (Segment{2, 1, 2}));
  EXPECT_EQ(matching_cost(e, p, q, kUnit), 1);
}

TEST(Scripts, IdentityScriptIsTheDiagonal) {
  auto p = parse_notation("a^1/2 b");
  auto e = matching_from_script(p, p, {});
  EXPECT_EQ(e.segments, (std::vector<Segment>{{0, 0, r("3/2")}}));
  EXPECT_EQ(matching_cost(e, p, p, kUnit), 0);
  EXPECT_THROW(matching_from_script(p, parse_notation("a"), {}), std::invalid_argument);
}

TEST(Scripts, SandwichBothWays) {
  Rng rng(54);
  auto sigma = alphabet_of(U"abc");
  for (int trial = 0; trial < 150; ++trial) {
    auto p = testing::random_exp_string(rng, 4, U"abc", 6, 3);
    auto q = testing::random_exp_string(rng, 4, U"abc", 6, 3);
    auto m = trial % 2 ? kUnit : testing::random_valid_cost_model(rng, sigma);
    auto report = exp_edit_distance(p, q, m, {Backend::expanded, true});
    auto e = matching_from_script(p, q, *report.script);
    ASSERT_FALSE(matching_violation(e).has_value());
    EXPECT_LE(matching_cost(e, p, q, m), script_cost(m, *report.script));
    EXPECT_EQ(matching_cost(e, p, q, m), report.distance);

    auto any = testing::random_matching(rng, len(p), len(q), 3);
    auto realized = script_from_matching(any, p, q);
    EXPECT_EQ(apply_script(p, realized), q);
    EXPECT_EQ(script_cost(m, realized), matching_cost(any, p, q, m));
  }
}

TEST(Dump, RoundTrips) {
  ExpMatching e{{{0, 0, r("1/2")}, {r("3/4"), 1, 2}}, 5, 4};
  EXPECT_EQ(dump_matching(e), "0 0 1/2\n3/4 1 2\n");
  EXPECT_EQ(parse_matching_dump(dump_matching(e), 5, 4), e);
  EXPECT_THROW(parse_matching_dump("0 0\n", 1, 1), std::invalid_argument);
}

}  // namespace
}  // namespace expstr
