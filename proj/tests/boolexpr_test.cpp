// Copyright 2026 The pathsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "pathsum/boolexpr.hpp"

#include <gtest/gtest.h>

#include "pathsum/errors.hpp"
#include "pathsum/generators.hpp"
#include "test_util.hpp"

namespace pathsum {
namespace {

using testing::truth_table;

class BoolExprTest : public ::testing::Test {
 protected:
  Context ctx;
  Var x = ctx.fresh("x");
  Var y = ctx.fresh("y");
  Var z = ctx.fresh("z");
  BoolExpr X = BoolExpr::var(x);
  BoolExpr Y = BoolExpr::var(y);
  BoolExpr Z = BoolExpr::var(z);
};

TEST_F(BoolExprTest, BooleanRingIdentities) {
  EXPECT_TRUE((X ^ X).is_zero());
  EXPECT_EQ(X * X, X);
  EXPECT_EQ(X * BoolExpr::one(), X);
  EXPECT_TRUE((X * BoolExpr::zero()).is_zero());
  EXPECT_EQ(bnot(bnot(X ^ Y * Z)), X ^ Y * Z);
  EXPECT_EQ(X * (Y ^ Z), (X * Y) ^ (X * Z));
  EXPECT_EQ(X * bnot(X), BoolExpr::zero());
}

TEST_F(BoolExprTest, FromMonomialsCanonicalizes) {
  EXPECT_TRUE(BoolExpr::from_monomials({{x, y}, {y, x}}).is_zero());
  EXPECT_EQ(BoolExpr::from_monomials({{x, x}}), X);
  EXPECT_EQ(BoolExpr::from_monomials({{z, y}, {}, {x}}), BoolExpr::one() ^ X ^ Y * Z);
  EXPECT_TRUE(BoolExpr::from_monomials({{}, {}}).is_zero());
}

TEST_F(BoolExprTest, Queries) {
  auto f = X ^ Y * Z;
  EXPECT_TRUE(f.depends_on(z));
  EXPECT_FALSE((X ^ BoolExpr::one()).depends_on(y));
  EXPECT_EQ(f.free_vars(), (std::vector<Var>{x, y, z}));
  EXPECT_EQ(X.as_var(), x);
  EXPECT_FALSE(f.as_var().has_value());
  EXPECT_EQ(BoolExpr::one().constant_value(), true);
  EXPECT_EQ(BoolExpr::zero().constant_value(), false);
  EXPECT_FALSE(X.constant_value().has_value());
}

TEST_F(BoolExprTest, SplitOnRecombines) {
  auto f = X ^ X * Y ^ Z ^ BoolExpr::one();
  auto c = split_on(f, x);
  EXPECT_FALSE(c.with.depends_on(x));
  EXPECT_FALSE(c.without.depends_on(x));
  EXPECT_EQ((X * c.with) ^ c.without, f);
}

TEST_F(BoolExprTest, UnassignedVariableThrows) {
  Assignment sigma;
  sigma.set(x, true);
  EXPECT_TRUE(beval(X, sigma));
  EXPECT_THROW(beval(X * Y, sigma), UnassignedVariable);
  sigma.unset(x);
  EXPECT_THROW(beval(X, sigma), UnassignedVariable);
}

TEST_F(BoolExprTest, EqIndicatorMatchesTruthTable) {
  std::vector<BoolExpr> u{X, Y};
  std::vector<BoolExpr> v{Z, BoolExpr::one()};
  auto e = eq_indicator(u, v);
  std::vector<Var> vars{x, y, z};
  auto table = truth_table(e, vars);
  for (std::size_t i = 0; i < 8; ++i) {
    bool bx = i & 4, by = i & 2, bz = i & 1;
    EXPECT_EQ(table[i], bx == bz && by) << i;
  }
  EXPECT_THROW(eq_indicator(std::vector<BoolExpr>{X}, std::vector<BoolExpr>{}), ArityMismatch);
}

TEST_F(BoolExprTest, RenameAndToString) {
  Var w = ctx.fresh("w");
  EXPECT_EQ(brename(X ^ Y, {{x.id, w}}), BoolExpr::var(w) ^ Y);
  EXPECT_EQ(to_string(BoolExpr::zero()), "0");
  EXPECT_EQ(to_string(BoolExpr::one()), "1");
  EXPECT_EQ(to_string(X ^ Y * Z, ctx.namer()), to_string(Y * Z ^ X, ctx.namer()));
}

// Operations agree with their truth tables on random expressions; ANF
// equality coincides with truth-table equality.
TEST(BoolExprProperty, TruthTablesAgree) {
  gen::Rng rng(7);
  Context ctx;
  auto vars = testing::fresh_vars(ctx, 4);
  for (int i = 0; i < 400; ++i) {
    auto f = gen::boolexpr(rng, vars, 4, 3);
    auto g = gen::boolexpr(rng, vars, 4, 3);
    auto tf = truth_table(f, vars);
    auto tg = truth_table(g, vars);
    auto txor = truth_table(f ^ g, vars);
    auto tmul = truth_table(f * g, vars);
    auto tnot = truth_table(bnot(f), vars);
    auto tsub = truth_table(bsubst(f, vars[0], g), vars);
    for (std::size_t k = 0; k < tf.size(); ++k) {
      ASSERT_EQ(txor[k], tf[k] != tg[k]);
      ASSERT_EQ(tmul[k], tf[k] && tg[k]);
      ASSERT_EQ(tnot[k], !tf[k]);
      auto sigma = testing::assign(vars, k);
      sigma.set(vars[0], tg[k]);
      ASSERT_EQ(tsub[k], beval(f, sigma));
    }
    ASSERT_EQ(f == g, tf == tg);
  }
}

}  // namespace
}  // namespace pathsum
