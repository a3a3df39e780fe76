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
#include "pathsum/serialize.hpp"

#include <gtest/gtest.h>

#include "pathsum/circuit.hpp"
#include "pathsum/oracle.hpp"

namespace pathsum {
namespace {

TEST(Serialize, BitStrings) {
  EXPECT_EQ(bit_string(0b1010, 4), "1010");
  EXPECT_EQ(bit_string(1, 3), "001");
  EXPECT_EQ(bit_string(0, 0), "");
}

TEST(Serialize, NormalFormIsDense) {
  Ring r = Ring::integers();
  NormalForm form{2, {r.from_int(1), r.zero(), r.zero(), r.from_int(-3)}};
  auto j = to_json(form);
  EXPECT_EQ(j["vars"], nlohmann::json({"z0", "z1"}));
  EXPECT_EQ(j["entries"], nlohmann::json({"1", "0", "0", "-3"}));
}

TEST(Serialize, Matrix) {
  Ring r = Ring::dyadic_cyclotomic8();
  Context ctx;
  auto j = to_json(dense_matrix(gate(ctx, r, GateKind::S)));
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["cols"], 2);
  EXPECT_EQ(j["entries"][1][1], r.imag().to_string());
  EXPECT_EQ(j["entries"][0][1], r.zero().to_string());
}

TEST(Serialize, DeterministicAcrossRuns) {
  Ring r = Ring::dyadic_cyclotomic8();
  auto run = [&] {
    Context ctx;
    auto c = parse_circuit("H 0\nCX 0 1\nT 1\nH 1\n", r);
    std::vector<RewriteStep> trace;
    auto psi = reduce_rewrite_first(ctx, circuit_to_pathsum(ctx, c, r), Strategy::CliffTH, &trace);
    auto form = normalize(ctx, to_state(psi), Theory::Ring, {}, &trace);
    return to_json(form).dump() + to_json(trace, ctx.namer()).dump();
  };
  EXPECT_EQ(run(), run());
}

TEST(Serialize, TableAndSteps) {
  Ring r = Ring::rationals();
  Context ctx;
  Var x = ctx.fresh("a");
  NormalTable t{{x}, {r.from_int(2), r.half()}};
  auto j = to_json(t, ctx.namer());
  EXPECT_EQ(j["vars"][0], ctx.name(x));
  EXPECT_EQ(j["entries"], nlohmann::json({"2", "1/2"}));
  RewriteStep step{RuleId::A, RuleSite{{x}, {1}}, "d", 3, 2, 10, 8, 1};
  auto s = to_json(step, ctx.namer());
  EXPECT_EQ(s["rule"], "A");
  EXPECT_EQ(s["factors"], nlohmann::json({1}));
  EXPECT_EQ(s["bound_after"], 2);
}

}  // namespace
}  // namespace pathsum
