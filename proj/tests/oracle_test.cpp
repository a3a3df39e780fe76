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
#include "pathsum/oracle.hpp"

#include <gtest/gtest.h>

#include "pathsum/errors.hpp"
#include "test_util.hpp"

namespace pathsum {
namespace {

using testing::ints;

TEST(DenseMatrix, ProductAndKronecker) {
  Ring z = Ring::integers();
  auto a = ints(z, 2, 2, {1, 2, 3, 4});
  auto b = ints(z, 2, 2, {0, 1, 1, 0});
  EXPECT_TRUE(matrices_equal(a * b, ints(z, 2, 2, {2, 1, 4, 3})));
  EXPECT_TRUE(matrices_equal(kron(b, ints(z, 1, 2, {5, 6})), ints(z, 2, 4, {0, 0, 5, 6, 5, 6, 0, 0})));
  EXPECT_TRUE(matrices_equal(a * DenseMatrix::identity(z, 2), a));
  EXPECT_FALSE(matrices_equal(a, ints(z, 1, 4, {1, 2, 3, 4})));
  EXPECT_EQ(vectorize(a), (std::vector<RingElem>{z.from_int(1), z.from_int(3), z.from_int(2), z.from_int(4)}));
  EXPECT_THROW(a * ints(z, 1, 2, {1, 1}), ArityMismatch);
  EXPECT_THROW(a * DenseMatrix::identity(Ring::rationals(), 2), RingMismatch);
}

// Σ_y (−1)^{x y} |y⟩ is the unnormalized Hadamard matrix.
TEST(DenseOracle, EnumeratesPaths) {
  Ring z = Ring::integers();
  Context ctx;
  Var x = ctx.fresh();
  Var y = ctx.fresh();
  auto amp = RExpr::pow(RExpr::constant(z.from_int(-1)), BoolExpr::var(x) * BoolExpr::var(y));
  PathSum psi(z, {x}, {y}, amp, {BoolExpr::var(y)});
  EXPECT_TRUE(matrices_equal(dense_matrix(psi), ints(z, 2, 2, {1, 1, 1, -1})));

  // Σ_{y1 y2} 2^{y1 + y2} |y1 ⊕ y2⟩: weights 1 + 4 and 2 + 2
  Var y1 = ctx.fresh();
  Var y2 = ctx.fresh();
  auto two = RExpr::constant(z.from_int(2));
  PathSum sum(z, {}, {y1, y2}, RExpr::pow(two, BoolExpr::var(y1)) * RExpr::pow(two, BoolExpr::var(y2)),
              {BoolExpr::var(y1) ^ BoolExpr::var(y2)});
  EXPECT_TRUE(matrices_equal(dense_matrix(sum), ints(z, 2, 1, {5, 4})));
}

TEST(DenseOracle, RespectsTheCap) {
  Ring z = Ring::integers();
  Context ctx;
  auto ys = testing::fresh_vars(ctx, 3, "y");
  PathSum psi(z, {}, ys, RExpr::constant(z.one()), {});
  EXPECT_TRUE(matrices_equal(dense_matrix(psi), ints(z, 1, 1, {8})));
  EXPECT_THROW(dense_matrix(psi, 2), SizeCapExceeded);
}

TEST(DenseMatrix, ToStringListsRows) {
  Ring z = Ring::integers();
  auto text = to_string(ints(z, 2, 2, {7, 0, 0, -1}));
  EXPECT_NE(text.find("7"), std::string::npos);
  EXPECT_NE(text.find("-1"), std::string::npos);
  EXPECT_LT(text.find("7"), text.find("-1"));
}

}  // namespace
}  // namespace pathsum
