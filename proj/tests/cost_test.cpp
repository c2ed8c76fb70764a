#include <gtest/gtest.h>

#include "expstr/cost_model.hpp"
#include "test_support.hpp"

namespace expstr {
namespace {

using testing::alphabet_of;
using testing::Rng;
using testing::sym;

TEST(UnitCostModel, IsLevenshtein) {
  auto sigma = alphabet_of(U"ab");
  auto m = unit_cost_model(sigma);
  EXPECT_EQ(m.ins(sym('a')), 1);
  EXPECT_EQ(m.del(sym('b')), 1);
  EXPECT_EQ(m.sub(sym('a'), sym('b')), 1);
  EXPECT_EQ(m.sub(sym('b'), sym('a')), 1);
  EXPECT_EQ(m.sub(sym('a'), sym('a')), 0);
  EXPECT_TRUE(m.is_unit(sigma));
  EXPECT_THROW(unit_cost_model(std::vector<Symbol>{}), std::invalid_argument);
}

TEST(UnitCostModel, AlwaysValid) {
  for (auto letters : {U"a", U"ab", U"abc", U"abcdefgh"}) {
    auto sigma = alphabet_of(letters);
    EXPECT_TRUE(validate(unit_cost_model(sigma), sigma).ok());
  }
}

TEST(CostModel, MissingEntriesThrow) {
  CostModel m;
  m.set_insertion(sym('a'), 1);
  EXPECT_THROW(m.del(sym('a')), MissingCost);
  EXPECT_THROW(m.sub(sym('a'), sym('b')), MissingCost);
  EXPECT_EQ(m.sub(sym('z'), sym('z')), 0);
  EXPECT_FALSE(m.covers(alphabet_of(U"a")));
}

TEST(Validate, ReportsTriangleWitnessThroughLambda) {
  auto sigma = alphabet_of(U"ab");
  auto m = unit_cost_model(sigma);
  m.set_substitution(sym('a'), sym('b'), 5);
  auto v = validate(m, sigma);
  EXPECT_EQ(v.status, CostValidation::Status::invalid);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ((*v.witness)[0], CostVertex(sym('a')));
  EXPECT_EQ((*v.witness)[1], CostVertex(std::nullopt));
  EXPECT_EQ((*v.witness)[2], CostVertex(sym('b')));
}

TEST(Validate, DiagonalMustBeZero) {
  auto sigma = alphabet_of(U"ab");
  auto m = unit_cost_model(sigma);
  m.set_substitution(sym('a'), sym('a'), 1);
  EXPECT_EQ(validate(m, sigma).status, CostValidation::Status::invalid);
}

TEST(Validate, OffDiagonalMustBePositive) {
  auto sigma = alphabet_of(U"ab");
  auto m = unit_cost_model(sigma);
  m.set_substitution(sym('a'), sym('b'), 0);
  EXPECT_EQ(validate(m, sigma).status, CostValidation::Status::invalid);
  auto n = unit_cost_model(sigma);
  n.set_insertion(sym('b'), 0);
  EXPECT_EQ(validate(n, sigma).status, CostValidation::Status::invalid);
}

TEST(Validate, IncompleteIsDistinctFromInvalid) {
  CostModel m;
  m.set_insertion(sym('a'), 1);
  m.set_deletion(sym('a'), 1);
  m.set_insertion(sym('b'), 1);
  auto v = validate(m, alphabet_of(U"ab"));
  EXPECT_EQ(v.status, CostValidation::Status::incomplete);
  EXPECT_FALSE(v.message.empty());
}

TEST(Validate, DefaultCompletionIsTriangleSafe) {
  CostModel m;
  auto sigma = alphabet_of(U"abc");
  for (Symbol s : sigma) {
    m.set_insertion(s, 1);
    m.set_deletion(s, 1);
  }
  m.set_substitution(sym('a'), sym('b'), 1);
  m.complete_substitutions(sigma);
  EXPECT_EQ(m.sub(sym('b'), sym('c')), 2);
  EXPECT_TRUE(validate(m, sigma).ok());
}

// Independent re-check: every (x, y, z) over the alphabet plus λ.
bool brute_force_triangles(const CostModel& m, const std::vector<Symbol>& sigma) {
  std::vector<CostVertex> vs{std::nullopt};
  for (Symbol s : sigma) vs.emplace_back(s);
  auto w = [&](const CostVertex& a, const CostVertex& b) -> Rational {
    if (!a && !b) return 0;
    if (!a) return m.ins(*b);
    if (!b) return m.del(*a);
    return m.sub(*a, *b);
  };
  for (const auto& x : vs)
    for (const auto& y : vs)
      for (const auto& z : vs)
        if (w(x, z) > w(x, y) + w(y, z)) return false;
  return true;
}

TEST(Validate, AgreesWithExhaustiveTripleCheck) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto sigma = alphabet_of(std::u32string(U"abcdefgh").substr(0, testing::uniform(rng, 1, 8)));
    CostModel m;
    for (Symbol a : sigma) {
      m.set_insertion(a, testing::random_exponent(rng, 6, 2));
      m.set_deletion(a, testing::random_exponent(rng, 6, 2));
      for (Symbol b : sigma)
        if (a != b) m.set_substitution(a, b, testing::random_exponent(rng, 12, 2));
    }
    EXPECT_EQ(validate(m, sigma).ok(), brute_force_triangles(m, sigma));
  }
}

TEST(Validate, ClosedRandomModelsAreValid) {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    auto sigma = alphabet_of(U"abcd");
    auto m = testing::random_valid_cost_model(rng, sigma);
    auto v = validate(m, sigma);
    EXPECT_TRUE(v.ok()) << v.message;
  }
}

TEST(OpCost, Examples) {
  auto sigma = alphabet_of(U"ab");
  auto unit = unit_cost_model(sigma);
  EXPECT_EQ(op_cost(unit, Deletion{sym('a'), Exponent(Rational(1, 2))}), Rational(1, 2));
  EXPECT_EQ(op_cost(unit, Substitution{sym('a'), sym('a'), Exponent(Rational(7, 3))}), 0);
  auto m = unit;
  m.set_insertion(sym('b'), 2);
  EXPECT_EQ(op_cost(m, Insertion{sym('b'), Exponent(Rational(7, 3))}), Rational(14, 3));
}

TEST(OpCost, SubstitutionPreservesTheExponent) {
  EXPECT_THROW(make_substitution(sym('a'), Exponent(2), sym('b'), Exponent(3)), std::invalid_argument);
  auto s = make_substitution(sym('a'), Exponent(Rational(1, 2)), sym('b'), Exponent(Rational(2, 4)));
  EXPECT_EQ(s.amount.value(), Rational(1, 2));
}

TEST(OpCost, LinearInTheExponent) {
  Rng rng(23);
  auto sigma = alphabet_of(U"abc");
  for (int trial = 0; trial < 200; ++trial) {
    auto m = testing::random_valid_cost_model(rng, sigma);
    Symbol a = sigma[testing::uniform(rng, 0, 2)];
    Symbol b = sigma[testing::uniform(rng, 0, 2)];
    Rational q = testing::random_exponent(rng, 30, 7);
    EXPECT_EQ(op_cost(m, Insertion{a, Exponent(q)}), q * op_cost(m, Insertion{a, Exponent(1)}));
    EXPECT_EQ(op_cost(m, Deletion{a, Exponent(q)}), q * op_cost(m, Deletion{a, Exponent(1)}));
    EXPECT_EQ(op_cost(m, Substitution{a, b, Exponent(q)}), q * op_cost(m, Substitution{a, b, Exponent(1)}));
  }
}

TEST(OpCost, SymmetricModelsGiveSymmetricReversals) {
  auto sigma = alphabet_of(U"abc");
  auto m = unit_cost_model(sigma);
  Rng rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    Exponent q(testing::random_exponent(rng, 9, 5));
    Symbol a = sigma[testing::uniform(rng, 0, 2)], b = sigma[testing::uniform(rng, 0, 2)];
    for (EditOperation op : {EditOperation(Insertion{a, q}), EditOperation(Deletion{a, q}),
                             EditOperation(Substitution{a, b, q})})
      EXPECT_EQ(op_cost(m, reversed(op)), op_cost(m, op));
  }
  EXPECT_TRUE(std::holds_alternative<Deletion>(reversed(Insertion{sym('a'), Exponent(1)})));
}

}  // namespace
}  // namespace expstr
