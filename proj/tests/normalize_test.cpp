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
#include "pathsum/normalize.hpp"

#include <gtest/gtest.h>

#include <map>

#include "pathsum/circuit.hpp"
#include "pathsum/errors.hpp"
#include "pathsum/generators.hpp"
#include "pathsum/oracle.hpp"
#include "pathsum/serialize.hpp"
#include "test_util.hpp"

namespace pathsum {
namespace {

TEST(NormalForm, ControlledHadamard) {
  Ring r = Ring::dyadic_cyclotomic8();
  Context ctx;
  std::vector<RewriteStep> trace;
  auto form = normalize_ring(ctx, to_state(gate(ctx, r, GateKind::CH)), {}, &trace);
  auto h = r.inv_sqrt2();
  std::map<std::size_t, RingElem> nonzero;
  for (std::size_t i = 0; i < form.entries.size(); ++i) {
    if (!form.entries[i].is_zero()) nonzero.emplace(i, form.entries[i]);
  }
  std::map<std::size_t, RingElem> expected{{0b0000, r.one()}, {0b0101, r.one()}, {0b1010, h},
                                           {0b1011, h},         {0b1110, h},       {0b1111, -h}};
  EXPECT_EQ(form.wires, 4u);
  EXPECT_EQ(nonzero, expected);
  ASSERT_FALSE(trace.empty());
  EXPECT_EQ(trace.front().rule, RuleId::H);
  EXPECT_EQ(trace.back().rule, RuleId::S);
  EXPECT_THROW(normalize_field(ctx, to_state(gate(ctx, r, GateKind::CH))), Unsupported);
}

TEST(NormalForm, RequiresClosedSumsAndRespectsTheCap) {
  Ring r = Ring::rationals();
  Context ctx;
  EXPECT_THROW(normalize_ring(ctx, gate(ctx, r, GateKind::X)), InvalidPathSum);
  auto ys = testing::fresh_vars(ctx, 4, "y");
  std::vector<BoolExpr> outputs;
  for (Var y : ys) outputs.push_back(BoolExpr::var(y));
  PathSum wide(r, {}, ys, RExpr::constant(r.one()), outputs);
  EXPECT_THROW(normalize_ring(ctx, wide, NormalizeConfig{11}), SizeCapExceeded);
  EXPECT_EQ(normalize_ring(ctx, wide, NormalizeConfig{12}).entries, std::vector<RingElem>(16, r.one()));
  EXPECT_THROW(normalize_field(ctx, wide, NormalizeConfig{11}), SizeCapExceeded);
  EXPECT_EQ(normalize_field(ctx, wide, NormalizeConfig{12}).entries, std::vector<RingElem>(16, r.one()));
}

struct RingCase {
  Ring ring;
  bool multiplicative;
};

void PrintTo(const RingCase& c, std::ostream* os) { *os << c.ring.name() << (c.multiplicative ? " mult" : " full"); }

class NormalFormProperty : public ::testing::TestWithParam<RingCase> {};

// Normal forms agree with the oracle, with each other, and with the normal
// form of the oracle read back as a sum.
TEST_P(NormalFormProperty, MatchesOracleAndIsUnique) {
  const auto [ring, multiplicative] = GetParam();
  gen::Rng rng(31);
  bool field = multiplicative && ring.is_field();
  for (int i = 0; i < 120; ++i) {
    Context ctx;
    auto psi = gen::closed_sum(ctx, rng, ring, 3, 4, multiplicative);
    auto oracle = dense_matrix(psi);
    auto form = normalize_ring(ctx, psi);
    ASSERT_EQ(form.entries, vectorize(oracle)) << to_string(psi, ctx.namer());
    ASSERT_EQ(form.wires, psi.output_arity());
    ASSERT_EQ(normalize_ring(ctx, from_matrix(ctx, oracle)), form);
    if (field) {
      ASSERT_EQ(normalize_field(ctx, psi), form) << to_string(psi, ctx.namer());
      ASSERT_EQ(normalize_field(ctx, from_matrix(ctx, oracle)), form);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, NormalFormProperty,
                         ::testing::Values(RingCase{Ring::integers(), false}, RingCase{Ring::integers(), true},
                                           RingCase{Ring::rationals(), false}, RingCase{Ring::rationals(), true},
                                           RingCase{Ring::dyadic_cyclotomic8(), false},
                                           RingCase{Ring::cyclotomic_field8(), true},
                                           RingCase{Ring::prime_field(7), true},
                                           RingCase{Ring::prime_field(3), false}),
                         [](const auto& info) {
                           std::string n = info.param.ring.name() + (info.param.multiplicative ? "_mult" : "_full");
                           for (char& c : n) {
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           }
                           return n;
                         });

PathSum circuit(Context& ctx, const std::string& text, const Ring& ring) {
  return circuit_to_pathsum(ctx, parse_circuit(text, ring), ring);
}

TEST(Equivalence, SmallCases) {
  Ring r = Ring::dyadic_cyclotomic8();
  Context ctx;
  auto same = equivalent(ctx, gate(ctx, r, GateKind::I), gate(ctx, r, GateKind::I));
  EXPECT_TRUE(same.equal);
  EXPECT_FALSE(same.first_difference.has_value());

  auto xz = equivalent(ctx, gate(ctx, r, GateKind::X), gate(ctx, r, GateKind::Z));
  EXPECT_FALSE(xz.equal);
  ASSERT_TRUE(xz.first_difference.has_value());
  // state index = input bits then output bits: ⟨0|X|0⟩ = 0, ⟨0|Z|0⟩ = 1
  EXPECT_EQ(*xz.first_difference, 0u);
  EXPECT_TRUE(xz.lhs_entry->is_zero());
  EXPECT_TRUE(xz.rhs_entry->is_one());

  auto hh = equivalent(ctx, circuit(ctx, "H 0\nH 0\n", r), identity(ctx, r, 1), {Theory::Ring, Strategy::Cliff, 20});
  EXPECT_TRUE(hh.equal);
  EXPECT_TRUE(hh.by_rewriting);
  auto hh_plain = equivalent(ctx, circuit(ctx, "H 0\nH 0\n", r), identity(ctx, r, 1));
  EXPECT_TRUE(hh_plain.equal);
  EXPECT_FALSE(hh_plain.by_rewriting);

  EXPECT_THROW(equivalent(ctx, gate(ctx, r, GateKind::X), gate(ctx, r, GateKind::CX)), ArityMismatch);
}

TEST(Equivalence, CounterexampleMatchesTheOracle) {
  Ring r = Ring::dyadic_cyclotomic8();
  Context ctx;
  auto tx = circuit(ctx, "X 0\nT 0\n", r);
  auto xt = circuit(ctx, "T 0\nX 0\n", r);
  auto result = equivalent(ctx, tx, xt, {Theory::Ring, Strategy::CliffTH, 20});
  ASSERT_FALSE(result.equal);
  auto a = vectorize(dense_matrix(tx));
  auto b = vectorize(dense_matrix(xt));
  std::size_t first = 0;
  while (a[first] == b[first]) ++first;
  EXPECT_EQ(*result.first_difference, first);
  EXPECT_EQ(*result.lhs_entry, a[first]);
  EXPECT_EQ(*result.rhs_entry, b[first]);
}

TEST(Equivalence, FieldTheory) {
  Ring q = Ring::cyclotomic_field8();
  Context ctx;
  auto lhs = circuit(ctx, "S 0\nS 0\n", q);
  auto rhs = circuit(ctx, "Z 0\n", q);
  EXPECT_TRUE(equivalent(ctx, lhs, rhs, {Theory::Field, Strategy::None, 20}).equal);
  EXPECT_FALSE(equivalent(ctx, lhs, circuit(ctx, "S 0\n", q), {Theory::Field, Strategy::None, 20}).equal);
}

}  // namespace
}  // namespace pathsum
