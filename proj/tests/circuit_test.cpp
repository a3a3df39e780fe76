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
#include "pathsum/circuit.hpp"

#include <gtest/gtest.h>

#include "pathsum/errors.hpp"
#include "pathsum/generators.hpp"
#include "pathsum/oracle.hpp"

namespace pathsum {
namespace {

const Ring kDyadic = Ring::dyadic_cyclotomic8();

void expect_parse_error(std::string_view text, const Ring& ring, std::size_t line, std::size_t column) {
  try {
    parse_circuit(text, ring);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(CircuitParser, AcceptsGates) {
  auto c = parse_circuit("H 0\nCX 0 1", kDyadic);
  EXPECT_EQ(c.n_qubits, 2u);
  ASSERT_EQ(c.gates.size(), 2u);
  EXPECT_EQ(c.gates[1].name, "CX");
  EXPECT_EQ(c.gates[1].qubits, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c.gates[1].line, 2u);

  auto d = parse_circuit("# comment\nqubits 4\n\n  T 3   # trailing\nZSPIDER w^3 1 1 2\nHBOX -1 2 2 0 1\n", kDyadic);
  EXPECT_EQ(d.n_qubits, 4u);
  ASSERT_EQ(d.gates.size(), 3u);
  EXPECT_EQ(*d.gates[1].param, kDyadic.omega_pow(3));
  EXPECT_EQ(d.gates[2].n, 2u);
  EXPECT_EQ(parse_circuit("", kDyadic).gates.size(), 0u);
}

TEST(CircuitParser, ReportsLineAndColumn) {
  expect_parse_error("CCX 0 1 1", kDyadic, 1, 9);
  expect_parse_error("H 0\n  FOO 1", kDyadic, 2, 3);
  expect_parse_error("CX 0", kDyadic, 1, 1);
  expect_parse_error("qubits 2\nX 2", kDyadic, 2, 3);
  expect_parse_error("X -1", kDyadic, 1, 3);
  expect_parse_error("X 0\nqubits 2", kDyadic, 2, 1);
  expect_parse_error("ZSPIDER zz 1 1 0", kDyadic, 1, 9);
  expect_parse_error("ZSPIDER 1 1 2 0", kDyadic, 1, 11);
  expect_parse_error("HBOX 1 1 1", kDyadic, 1, 1);
}

TEST(CircuitParser, ChecksRingCapabilities) {
  expect_parse_error("T 0", Ring::rationals(), 1, 1);
  expect_parse_error("H 0", Ring::integers(), 1, 1);
  expect_parse_error("X 0\nCH 0 1", Ring::prime_field(7), 2, 1);
  expect_parse_error("ZSPIDER w 1 1 0", Ring::rationals(), 1, 9);
  EXPECT_EQ(parse_circuit("X 0\nZ 0\nCCX 0 1 2", Ring::integers()).gates.size(), 3u);
  EXPECT_EQ(parse_circuit("ZSPIDER 3 1 1 0", Ring::prime_field(7)).gates.size(), 1u);
}

TEST(CircuitSemantics, GateOrderAndWires) {
  // X then T on one wire: TX|x⟩ = ω^{1−x}|1 ⊕ x⟩.
  Context ctx;
  auto c = parse_circuit("X 0\nT 0\n", kDyadic);
  auto m = dense_matrix(circuit_to_pathsum(ctx, c, kDyadic));
  EXPECT_EQ(m(1, 0), kDyadic.omega());
  EXPECT_TRUE(m(0, 1).is_one());
  // X on the first wire flips the most significant bit.
  auto x0 = circuit_matrix(parse_circuit("qubits 2\nX 0\n", kDyadic), kDyadic);
  EXPECT_TRUE(x0(2, 0).is_one());
}

TEST(CircuitSemantics, GatewiseOracleMatchesWholeSum) {
  gen::Rng rng(4);
  for (int i = 0; i < 60; ++i) {
    auto c = gen::clifford_circuit(rng, 3, 8);
    Context ctx;
    ASSERT_TRUE(matrices_equal(circuit_matrix(c, kDyadic), dense_matrix(circuit_to_pathsum(ctx, c, kDyadic))));
  }
}

TEST(CircuitSemantics, InverseAndRoundTrip) {
  auto c = parse_circuit("qubits 3\nH 0\nS 1\nT 2\nCX 0 2\nCH 1 0\nCCX 2 0 1\n", kDyadic);
  Circuit both = c;
  auto inv = inverse(c);
  both.gates.insert(both.gates.end(), inv.gates.begin(), inv.gates.end());
  EXPECT_TRUE(matrices_equal(circuit_matrix(both, kDyadic), DenseMatrix::identity(kDyadic, 8)));
  auto again = parse_circuit(to_string(c), kDyadic);
  EXPECT_EQ(again.n_qubits, 3u);
  EXPECT_TRUE(matrices_equal(circuit_matrix(again, kDyadic), circuit_matrix(c, kDyadic)));
  EXPECT_THROW(inverse(parse_circuit("ZSPIDER w 1 1 0", kDyadic)), Unsupported);
}

}  // namespace
}  // namespace pathsum
