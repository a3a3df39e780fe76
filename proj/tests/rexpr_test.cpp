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
#include "pathsum/rexpr.hpp"

#include <gtest/gtest.h>

#include "pathsum/errors.hpp"
#include "pathsum/generators.hpp"
#include "test_util.hpp"

namespace pathsum {
namespace {

using testing::values;

RExpr k(const Ring& ring, long n) { return RExpr::constant(ring.from_int(n)); }

TEST(RExpr, ZeroToTheZeroIsOne) {
  Ring ring = Ring::integers();
  Context ctx;
  Var x = ctx.fresh();
  auto r = RExpr::pow(k(ring, 0), BoolExpr::var(x));
  std::vector<Var> vars{x};
  EXPECT_EQ(values(r, vars), (std::vector<RingElem>{ring.one(), ring.zero()}));
  EXPECT_TRUE(reval(RExpr::pow(k(ring, 0), BoolExpr::zero()), Assignment{}).is_one());
}

TEST(RExpr, ModesAndStructure) {
  Ring ring = Ring::rationals();
  Context ctx;
  Var x = ctx.fresh();
  auto p = RExpr::pow(k(ring, 3), BoolExpr::var(x));
  EXPECT_TRUE((p * k(ring, 2)).is_multiplicative());
  EXPECT_EQ((p + k(ring, 2)).mode(), AmplitudeMode::Full);
  EXPECT_EQ(RExpr::pow(p + k(ring, 1), BoolExpr::var(x)).mode(), AmplitudeMode::Full);
  EXPECT_EQ((p * p).free_vars(), std::vector<Var>{x});
  EXPECT_EQ(flatten_product(p * (p * k(ring, 2))).size(), 3u);
  EXPECT_THROW(k(ring, 1) + RExpr::constant(Ring::integers().one()), RingMismatch);
}

TEST(RExpr, LiftAndPhasePolynomials) {
  Ring ring = Ring::dyadic_cyclotomic8();
  Context ctx;
  auto vars = testing::fresh_vars(ctx, 2);
  auto f = BoolExpr::var(vars[0]) ^ BoolExpr::var(vars[1]);
  auto lifted = values(lift(f, ring), vars);
  EXPECT_EQ(lifted, (std::vector<RingElem>{ring.zero(), ring.one(), ring.one(), ring.zero()}));

  // ω^{x0 + 2 x0 x1}
  std::vector<PhaseTerm> poly{{1, {vars[0]}}, {2, {vars[0], vars[1]}}};
  auto amp = values(phase_to_amplitude(poly, 3, ring), vars);
  EXPECT_EQ(amp, (std::vector<RingElem>{ring.one(), ring.one(), ring.omega(), ring.omega_pow(3)}));
  // (−1)^{x0 x1} over Z
  std::vector<PhaseTerm> sign{{1, {vars[0], vars[1]}}};
  auto z = Ring::integers();
  EXPECT_EQ(values(phase_to_amplitude(sign, 1, z), vars),
            (std::vector<RingElem>{z.one(), z.one(), z.one(), z.from_int(-1)}));
  EXPECT_THROW(phase_to_amplitude(poly, 3, Ring::rationals()), Unsupported);
}

TEST(RExpr, SubstitutionAgreesWithEvaluation) {
  gen::Rng rng(3);
  Ring ring = Ring::dyadic_cyclotomic8();
  Context ctx;
  auto vars = testing::fresh_vars(ctx, 3);
  for (int i = 0; i < 200; ++i) {
    auto r = gen::rexpr(rng, ring, vars, 3, true);
    auto g = gen::boolexpr(rng, vars);
    auto s = rsubst(r, vars[0], g);
    for (std::size_t a = 0; a < 8; ++a) {
      auto sigma = testing::assign(vars, a);
      auto moved = sigma;
      moved.set(vars[0], beval(g, sigma));
      ASSERT_EQ(reval(s, sigma), reval(r, moved));
    }
    std::vector<std::pair<Var, bool>> bits{{vars[1], true}};
    auto fixed = rsubst_bits(r, bits);
    ASSERT_FALSE(fixed.depends_on(vars[1]));
  }
}

TEST(NormalTable, IndexOrderIsMostSignificantFirst) {
  Ring ring = Ring::integers();
  Context ctx;
  auto vars = testing::fresh_vars(ctx, 2);
  // 3^{x0} 5^{x1}
  auto r = RExpr::pow(k(ring, 3), BoolExpr::var(vars[0])) * RExpr::pow(k(ring, 5), BoolExpr::var(vars[1]));
  auto t = normalize_rexpr(r, vars);
  EXPECT_EQ(t.vars, vars);
  EXPECT_EQ(t.entries, (std::vector<RingElem>{ring.from_int(1), ring.from_int(5), ring.from_int(3), ring.from_int(15)}));
}

TEST(NormalTable, ErrorsAndCaps) {
  Ring ring = Ring::rationals();
  Context ctx;
  auto vars = testing::fresh_vars(ctx, 3);
  auto r = RExpr::pow(k(ring, 2), BoolExpr::var(vars[2]));
  std::vector<Var> missing{vars[0]};
  EXPECT_THROW(normalize_rexpr(r, missing), InvalidPathSum);
  EXPECT_THROW(normalize_rexpr(r, vars, NormalizeOptions{Theory::Ring, 2}), SizeCapExceeded);
  std::vector<Var> twice{vars[2], vars[2]};
  EXPECT_THROW(normalize_rexpr(r, twice), InvalidPathSum);
  EXPECT_THROW(normalize_rexpr(r + r, vars, NormalizeOptions{Theory::Field, 20}), Unsupported);
  EXPECT_THROW(normalize_rexpr(RExpr::constant(Ring::integers().one()), vars, NormalizeOptions{Theory::Field, 20}),
               Unsupported);
}

struct NormalizeCase {
  Ring ring;
  Theory theory;
};

void PrintTo(const NormalizeCase& c, std::ostream* os) {
  *os << c.ring.name() << (c.theory == Theory::Field ? " field" : " ring");
}

class NormalizeProperty : public ::testing::TestWithParam<NormalizeCase> {};

// The table equals exhaustive evaluation, and reading it back as an
// expression is a fixed point.
TEST_P(NormalizeProperty, TableMatchesPointwiseEvaluation) {
  const auto [ring, theory] = GetParam();
  gen::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    Context ctx;
    auto vars = testing::fresh_vars(ctx, 1 + i % 4);
    auto r = gen::rexpr(rng, ring, vars, 3, theory == Theory::Ring);
    NormalizeOptions options{theory, 20};
    auto t = normalize_rexpr(r, vars, options);
    ASSERT_EQ(t.entries, values(r, vars)) << to_string(r, ctx.namer());
    ASSERT_EQ(normalize_rexpr(table_to_rexpr(t), vars, options), t);
  }
}

INSTANTIATE_TEST_SUITE_P(Theories, NormalizeProperty,
                         ::testing::Values(NormalizeCase{Ring::integers(), Theory::Ring},
                                           NormalizeCase{Ring::rationals(), Theory::Ring},
                                           NormalizeCase{Ring::dyadic_cyclotomic8(), Theory::Ring},
                                           NormalizeCase{Ring::prime_field(5), Theory::Ring},
                                           NormalizeCase{Ring::rationals(), Theory::Field},
                                           NormalizeCase{Ring::cyclotomic_field8(), Theory::Field},
                                           NormalizeCase{Ring::prime_field(7), Theory::Field}),
                         [](const auto& info) {
                           std::string n = info.param.ring.name() + (info.param.theory == Theory::Field ? "_field" : "_ring");
                           for (char& c : n) {
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           }
                           return n;
                         });

}  // namespace
}  // namespace pathsum
