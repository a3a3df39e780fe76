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

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace pathsum {

enum class RingKind {
  Integer,            ///< Z
  Rational,           ///< Q
  DyadicCyclotomic8,  ///< Z[1/2, ω], ω = e^{2πi/8}
  CyclotomicField8,   ///< Q(ω)
  PrimeField,         ///< F_p, p an odd prime
};

class RingElem;

/// Value-type description of one of the supported exact rings.
class Ring {
 public:
  static Ring integers() { return Ring(RingKind::Integer, 0); }
  static Ring rationals() { return Ring(RingKind::Rational, 0); }
  static Ring dyadic_cyclotomic8() { return Ring(RingKind::DyadicCyclotomic8, 0); }
  static Ring cyclotomic_field8() { return Ring(RingKind::CyclotomicField8, 0); }
  /// Throws Unsupported unless p is an odd prime below 2^32.
  static Ring prime_field(std::uint64_t p);
  /// Accepts the CLI spellings int, rational, dyadic-cyc8, cyc8-field, fp:<p>.
  static Ring parse(std::string_view name);

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return kind_ == RingKind::PrimeField ? p_ : 0; }
  bool is_field() const;
  /// 2 is invertible.
  bool has_half() const { return kind_ != RingKind::Integer; }
  /// Contains ω, and with it i, √2 and 1/√2.
  bool has_omega() const {
    return kind_ == RingKind::DyadicCyclotomic8 || kind_ == RingKind::CyclotomicField8;
  }
  std::string name() const;

  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(long n) const;
  RingElem half() const;
  /// ω^k; requires has_omega() unless ω^k = ±1.
  RingElem omega_pow(int k) const;
  RingElem omega() const;
  RingElem imag() const;
  RingElem sqrt2() const;
  RingElem inv_sqrt2() const;

  /// Parses the canonical serialization of an element, plain integers and
  /// fractions, and the named constants w, w^k, omega, i, sqrt2, 1/sqrt2
  /// (optionally negated).
  RingElem parse_element(std::string_view text) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(RingKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  RingKind kind_;
  std::uint64_t p_;
};

/// (c0 + c1 ω + c2 ω² + c3 ω³) / 2^k with k minimal.
struct DyadicOmega {
  std::array<mpz_class, 4> c;
  unsigned k = 0;

  friend bool operator==(const DyadicOmega&, const DyadicOmega&) = default;
};

/// c0 + c1 ω + c2 ω² + c3 ω³ with rational coordinates.
struct RationalOmega {
  std::array<mpq_class, 4> c;

  friend bool operator==(const RationalOmega&, const RationalOmega&) = default;
};

/// Exact, canonical element of a Ring. Arithmetic between elements of
/// different rings throws RingMismatch.
class RingElem {
 public:
  using Storage = std::variant<mpz_class, mpq_class, DyadicOmega, RationalOmega, std::uint64_t>;

  RingElem(Ring ring, Storage value);

  const Ring& ring() const { return ring_; }
  const Storage& storage() const { return value_; }

  bool is_zero() const;
  bool is_one() const;

  RingElem operator-() const;
  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem& operator+=(const RingElem& b) { return *this = *this + b; }
  RingElem& operator*=(const RingElem& b) { return *this = *this * b; }
  friend bool operator==(const RingElem& a, const RingElem& b);

  /// Multiplicative inverse. Throws Unsupported outside fields and
  /// DivisionByZero for zero.
  RingElem inv() const;
  RingElem pow(unsigned n) const;

  /// Int "n"; Rational "n/d" ("n" when d = 1); DyadicCyclotomic8
  /// "(a,b,c,d)/2^k"; CyclotomicField8 "(q0,q1,q2,q3)"; PrimeField "n mod p".
  std::string to_string() const;

 private:
  Ring ring_;
  Storage value_;
};

/// Ring homomorphism Z[1/2, ω] → Q(ω).
RingElem to_cyclotomic_field(const RingElem& a);

}  // namespace pathsum
