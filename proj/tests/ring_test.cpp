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
#include "pathsum/ring.hpp"

#include <gtest/gtest.h>

#include "pathsum/errors.hpp"
#include "pathsum/generators.hpp"
#include "test_util.hpp"

namespace pathsum {
namespace {

std::vector<Ring> all_rings() {
  return {Ring::integers(), Ring::rationals(), Ring::dyadic_cyclotomic8(), Ring::cyclotomic_field8(),
          Ring::prime_field(7), Ring::prime_field(101)};
}

class RingAxioms : public ::testing::TestWithParam<Ring> {};

TEST_P(RingAxioms, CommutativeUnitalRing) {
  const Ring ring = GetParam();
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto a = gen::element(rng, ring);
    auto b = gen::element(rng, ring);
    auto c = gen::element(rng, ring);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a + ring.zero(), a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * ring.one(), a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a.pow(3), a * a * a);
    ASSERT_TRUE(a.pow(0).is_one());
  }
}

TEST_P(RingAxioms, SerializationRoundTrips) {
  const Ring ring = GetParam();
  gen::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    auto a = gen::element(rng, ring);
    ASSERT_EQ(ring.parse_element(a.to_string()), a) << a.to_string();
  }
  EXPECT_EQ(Ring::parse(ring.name()), ring);
}

TEST_P(RingAxioms, InversesInFields) {
  const Ring ring = GetParam();
  if (!ring.is_field()) {
    EXPECT_THROW(ring.from_int(3).inv(), Unsupported);
    return;
  }
  gen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    auto a = gen::element(rng, ring, false);
    ASSERT_TRUE((a * a.inv()).is_one()) << a.to_string();
  }
  EXPECT_THROW(ring.zero().inv(), DivisionByZero);
}

INSTANTIATE_TEST_SUITE_P(Rings, RingAxioms, ::testing::ValuesIn(all_rings()),
                         [](const auto& info) {
                           std::string n = info.param.name();
                           for (char& c : n) {
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           }
                           return n;
                         });

TEST(DyadicCyclotomic, NamedConstants) {
  Ring r = Ring::dyadic_cyclotomic8();
  auto w = r.omega();
  EXPECT_TRUE(w.pow(8).is_one());
  EXPECT_EQ(w.pow(4), r.from_int(-1));
  EXPECT_EQ(w * w, r.imag());
  EXPECT_EQ(r.sqrt2() * r.sqrt2(), r.from_int(2));
  EXPECT_TRUE((r.sqrt2() * r.inv_sqrt2()).is_one());
  EXPECT_TRUE((r.half() * r.from_int(2)).is_one());
  EXPECT_TRUE((r.omega_pow(-1) * w).is_one());
  // ω = (1 + i)/√2
  EXPECT_EQ(w, (r.one() + r.imag()) * r.inv_sqrt2());
  EXPECT_EQ(r.parse_element("-1/sqrt2"), -r.inv_sqrt2());
  EXPECT_EQ(r.parse_element("w^3"), w.pow(3));
  EXPECT_EQ(r.parse_element("(2,0,0,0)/2^1"), r.one());
  EXPECT_EQ(r.one().to_string(), "(1,0,0,0)/2^0");
  EXPECT_EQ(r.half().to_string(), "(1,0,0,0)/2^1");
}

TEST(DyadicCyclotomic, NotAField) {
  Ring r = Ring::dyadic_cyclotomic8();
  EXPECT_FALSE(r.is_field());
  EXPECT_TRUE(r.has_half());
  EXPECT_THROW(r.from_int(3).inv(), Unsupported);
}

TEST(CyclotomicField, EmbeddingIsAHomomorphism) {
  Ring d = Ring::dyadic_cyclotomic8();
  gen::Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    auto a = gen::element(rng, d);
    auto b = gen::element(rng, d);
    ASSERT_EQ(to_cyclotomic_field(a + b), to_cyclotomic_field(a) + to_cyclotomic_field(b));
    ASSERT_EQ(to_cyclotomic_field(a * b), to_cyclotomic_field(a) * to_cyclotomic_field(b));
  }
  EXPECT_EQ(to_cyclotomic_field(d.omega()), Ring::cyclotomic_field8().omega());
}

TEST(PrimeField, Arithmetic) {
  Ring f = Ring::prime_field(7);
  EXPECT_TRUE(f.from_int(7).is_zero());
  EXPECT_EQ(f.from_int(-1), f.from_int(6));
  EXPECT_EQ(f.from_int(3).inv(), f.from_int(5));
  EXPECT_EQ(f.half(), f.from_int(4));
  EXPECT_EQ(f.characteristic(), 7u);
  EXPECT_EQ(f.parse_element("3 mod 7"), f.from_int(3));
  EXPECT_THROW(f.parse_element("3 mod 5"), RingMismatch);
  EXPECT_THROW(Ring::prime_field(9), Unsupported);
  EXPECT_THROW(Ring::prime_field(2), Unsupported);
}

TEST(RingCapabilities, OmegaOnlyInCyclotomicRings) {
  for (const Ring& r : {Ring::integers(), Ring::rationals(), Ring::prime_field(7)}) {
    EXPECT_FALSE(r.has_omega());
    EXPECT_THROW(r.omega(), Unsupported) << r.name();
    EXPECT_THROW(r.sqrt2(), Unsupported) << r.name();
    EXPECT_EQ(r.omega_pow(4), r.from_int(-1)) << r.name();
  }
  EXPECT_FALSE(Ring::integers().has_half());
  EXPECT_THROW(Ring::integers().half(), Unsupported);
  EXPECT_THROW(Ring::parse("reals"), Unsupported);
  EXPECT_THROW(Ring::parse("fp:x"), Unsupported);
}

TEST(RingCapabilities, MixedRingsThrow) {
  EXPECT_THROW(Ring::integers().one() + Ring::rationals().one(), RingMismatch);
  EXPECT_THROW(Ring::prime_field(7).one() * Ring::prime_field(11).one(), RingMismatch);
}

}  // namespace
}  // namespace pathsum
