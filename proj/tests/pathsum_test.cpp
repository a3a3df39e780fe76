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
#include "pathsum/pathsum.hpp"

#include <gtest/gtest.h>

#include "pathsum/errors.hpp"
#include "pathsum/generators.hpp"
#include "pathsum/oracle.hpp"
#include "test_util.hpp"

namespace pathsum {
namespace {

using testing::ints;
using testing::mat;

class GateMatrices : public ::testing::Test {
 protected:
  Ring r = Ring::dyadic_cyclotomic8();
  Context ctx;
  RingElem o = r.zero();
  RingElem l = r.one();

  DenseMatrix of(GateKind kind) { return dense_matrix(gate(ctx, r, kind)); }
};

TEST_F(GateMatrices, SingleQubit) {
  auto h = r.inv_sqrt2();
  EXPECT_TRUE(matrices_equal(of(GateKind::I), ints(r, 2, 2, {1, 0, 0, 1})));
  EXPECT_TRUE(matrices_equal(of(GateKind::X), ints(r, 2, 2, {0, 1, 1, 0})));
  EXPECT_TRUE(matrices_equal(of(GateKind::Z), ints(r, 2, 2, {1, 0, 0, -1})));
  EXPECT_TRUE(matrices_equal(of(GateKind::S), mat(2, 2, {l, o, o, r.imag()})));
  EXPECT_TRUE(matrices_equal(of(GateKind::T), mat(2, 2, {l, o, o, r.omega()})));
  EXPECT_TRUE(matrices_equal(of(GateKind::H), mat(2, 2, {h, h, h, -h})));
}

TEST_F(GateMatrices, MultiQubit) {
  EXPECT_TRUE(matrices_equal(of(GateKind::CX), ints(r, 4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0})));
  auto ccx = of(GateKind::CCX);
  for (std::size_t c = 0; c < 8; ++c) {
    std::size_t target = c >= 6 ? c ^ 1 : c;
    for (std::size_t row = 0; row < 8; ++row) EXPECT_EQ(ccx(row, c), row == target ? l : o);
  }
  auto h = r.inv_sqrt2();
  EXPECT_TRUE(matrices_equal(of(GateKind::CH), mat(4, 4, {l, o, o, o, o, l, o, o, o, o, h, h, o, o, h, -h})));
  EXPECT_TRUE(matrices_equal(dense_matrix(controlled_h_balanced(ctx, r)), of(GateKind::CH)));
}

TEST_F(GateMatrices, ZxAndZhGenerators) {
  auto a = r.omega_pow(3);
  EXPECT_TRUE(matrices_equal(dense_matrix(gate(ctx, r, GateKind::ZSpider, &a, 1, 1)), mat(2, 2, {l, o, o, a})));
  EXPECT_TRUE(matrices_equal(dense_matrix(gate(ctx, r, GateKind::ZSpider, &a, 0, 1)), mat(2, 1, {l, a})));
  EXPECT_TRUE(matrices_equal(dense_matrix(gate(ctx, r, GateKind::ZSpider, &a, 0, 0)), mat(1, 1, {l + a})));
  EXPECT_TRUE(matrices_equal(dense_matrix(gate(ctx, r, GateKind::HBox, &a, 1, 1)), mat(2, 2, {l, l, l, a})));
  EXPECT_TRUE(matrices_equal(dense_matrix(gate(ctx, r, GateKind::Cup)), ints(r, 4, 1, {1, 0, 0, 1})));
  EXPECT_TRUE(matrices_equal(dense_matrix(gate(ctx, r, GateKind::Cap)), ints(r, 1, 4, {1, 0, 0, 1})));
  // X spider with one input and output and the matching scalar is H Z(α) H.
  auto s = r.half();
  auto h = dense_matrix(gate(ctx, r, GateKind::H));
  auto z = dense_matrix(gate(ctx, r, GateKind::ZSpider, &a, 1, 1));
  EXPECT_TRUE(matrices_equal(dense_matrix(x_spider(ctx, r, a, 1, 1, s)), h * z * h));
  EXPECT_THROW(gate(ctx, r, GateKind::HBox), Unsupported);
}

TEST(PathSumConstruction, Validation) {
  Ring ring = Ring::integers();
  Context ctx;
  Var x = ctx.fresh();
  Var y = ctx.fresh();
  auto one = RExpr::constant(ring.one());
  EXPECT_THROW(PathSum(ring, {x}, {x}, one, {BoolExpr::var(x)}), InvalidPathSum);
  EXPECT_THROW(PathSum(ring, {x}, {y, y}, one, {}), InvalidPathSum);
  EXPECT_THROW(PathSum(ring, {x}, {}, one, {BoolExpr::var(y)}), InvalidPathSum);
  EXPECT_THROW(PathSum(ring, {x}, {}, RExpr::pow(one, BoolExpr::var(y)), {}), InvalidPathSum);
  EXPECT_THROW(PathSum(Ring::rationals(), {x}, {}, one, {}), RingMismatch);
  PathSum ok(ring, {x}, {y}, one, {BoolExpr::var(y)});
  EXPECT_TRUE(ok.is_bound(y));
  EXPECT_FALSE(ok.is_bound(x));
  EXPECT_FALSE(ok.is_closed());
}

TEST(PathSumOperations, CompositionAndTensorMatchTheOracle) {
  gen::Rng rng(5);
  Ring ring = Ring::dyadic_cyclotomic8();
  int composed = 0;
  for (int i = 0; i < 300; ++i) {
    Context ctx;
    auto a = gen::open_sum(ctx, rng, ring, 2, i % 2 == 0);
    auto b = gen::open_sum(ctx, rng, ring, 2, i % 3 == 0);
    auto ma = dense_matrix(a);
    auto mb = dense_matrix(b);
    ASSERT_TRUE(matrices_equal(dense_matrix(tensor(ctx, a, b)), kron(ma, mb)));
    if (a.input_arity() == b.output_arity()) {
      ASSERT_TRUE(matrices_equal(dense_matrix(compose(ctx, a, b)), ma * mb));
      ++composed;
    } else {
      ASSERT_THROW(compose(ctx, a, b), ArityMismatch);
    }
    ASSERT_TRUE(matrices_equal(dense_matrix(rename_apart(ctx, a)), ma));
  }
  EXPECT_GT(composed, 50);
}

TEST(PathSumOperations, ToStateVectorizesColumnMajor) {
  gen::Rng rng(6);
  Ring ring = Ring::rationals();
  for (int i = 0; i < 100; ++i) {
    Context ctx;
    auto a = gen::open_sum(ctx, rng, ring, 2, false);
    auto state = to_state(a);
    ASSERT_TRUE(state.is_closed());
    auto column = dense_matrix(state);
    ASSERT_EQ(column.cols(), 1u);
    ASSERT_EQ(column.entries(), vectorize(dense_matrix(a)));
  }
}

TEST(PathSumOperations, FromMatrixRoundTrips) {
  gen::Rng rng(8);
  for (const Ring& ring : {Ring::integers(), Ring::dyadic_cyclotomic8(), Ring::prime_field(7)}) {
    for (std::size_t rows : {1u, 2u, 4u}) {
      for (std::size_t cols : {1u, 2u, 4u}) {
        Context ctx;
        auto m = gen::matrix(rng, ring, rows, cols);
        ASSERT_TRUE(matrices_equal(dense_matrix(from_matrix(ctx, m)), m));
      }
    }
  }
  Context ctx;
  EXPECT_THROW(from_matrix(ctx, DenseMatrix(Ring::integers(), 3, 2)), ArityMismatch);
}

TEST(PathSumOperations, ApplyOnWires) {
  Ring ring = Ring::integers();
  Context ctx;
  auto cx = gate(ctx, ring, GateKind::CX);
  auto reversed = apply_on_wires(ctx, identity(ctx, ring, 2), cx, {1, 0});
  // control on the second wire
  EXPECT_TRUE(matrices_equal(dense_matrix(reversed), ints(ring, 4, 4, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0})));
  auto x = gate(ctx, ring, GateKind::X);
  auto on_last = apply_on_wires(ctx, identity(ctx, ring, 3), x, {2});
  auto expected = kron(DenseMatrix::identity(ring, 4), dense_matrix(x));
  EXPECT_TRUE(matrices_equal(dense_matrix(on_last), expected));
  EXPECT_THROW(apply_on_wires(ctx, identity(ctx, ring, 2), cx, {0, 0}), ArityMismatch);
  EXPECT_THROW(apply_on_wires(ctx, identity(ctx, ring, 2), cx, {0, 2}), ArityMismatch);
}

}  // namespace
}  // namespace pathsum
