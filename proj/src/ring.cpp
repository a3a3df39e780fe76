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

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "pathsum/errors.hpp"

namespace pathsum {

namespace {

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

// Product in Z[ω]/(ω^4 + 1) on coefficient arrays.
template <class T>
std::array<T, 4> omega_mul(const std::array<T, 4>& a, const std::array<T, 4>& b) {
  std::array<T, 4> out{T(0), T(0), T(0), T(0)};
  for (int i = 0; i < 4; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (i + j < 4) {
        out[i + j] += a[i] * b[j];
      } else {
        out[i + j - 4] -= a[i] * b[j];
      }
    }
  }
  return out;
}

// Galois automorphism ω ↦ ω^j (j odd).
template <class T>
std::array<T, 4> omega_conjugate(const std::array<T, 4>& a, int j) {
  std::array<T, 4> out{T(0), T(0), T(0), T(0)};
  for (int i = 0; i < 4; ++i) {
    int t = (i * j) % 8;
    if (t < 4) {
      out[t] += a[i];
    } else {
      out[t - 4] -= a[i];
    }
  }
  return out;
}

void canonicalize(DyadicOmega& d) {
  if (std::all_of(d.c.begin(), d.c.end(), [](const mpz_class& x) { return x == 0; })) {
    d.k = 0;
    return;
  }
  while (d.k > 0 &&
         std::all_of(d.c.begin(), d.c.end(), [](const mpz_class& x) { return mpz_even_p(x.get_mpz_t()); })) {
    for (auto& x : d.c) x /= 2;
    --d.k;
  }
}

mpz_class pow2(unsigned k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, k);
  return out;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mod(const mpz_class& n, std::uint64_t p) {
  mpz_class r = n % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

mpz_class parse_integer(const std::string& s) {
  mpz_class out;
  if (s.empty() || out.set_str(s, 10) != 0) throw Unsupported("cannot parse integer '" + s + "'");
  return out;
}

mpq_class parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return mpq_class(parse_integer(s));
  mpz_class num = parse_integer(trim(s.substr(0, slash)));
  mpz_class den = parse_integer(trim(s.substr(slash + 1)));
  if (den == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::vector<std::string> split_commas(const std::string& inner) {
  std::vector<std::string> parts;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  return parts;
}

void require_same_ring(const RingElem& a, const RingElem& b) {
  if (!(a.ring() == b.ring())) {
    throw RingMismatch("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
  }
}

}  // namespace

Ring Ring::prime_field(std::uint64_t p) {
  if (!is_odd_prime(p) || p >= (std::uint64_t{1} << 32)) {
    throw Unsupported("prime field requires an odd prime below 2^32, got " + std::to_string(p));
  }
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::parse(std::string_view name) {
  if (name == "int") return integers();
  if (name == "rational") return rationals();
  if (name == "dyadic-cyc8") return dyadic_cyclotomic8();
  if (name == "cyc8-field") return cyclotomic_field8();
  if (name.starts_with("fp:")) {
    std::string digits(name.substr(3));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw Unsupported("bad prime field name '" + std::string(name) + "'");
    }
    return prime_field(std::stoull(digits));
  }
  throw Unsupported("unknown ring '" + std::string(name) + "'");
}

bool Ring::is_field() const {
  return kind_ == RingKind::Rational || kind_ == RingKind::CyclotomicField8 ||
         kind_ == RingKind::PrimeField;
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integer:
      return "int";
    case RingKind::Rational:
      return "rational";
    case RingKind::DyadicCyclotomic8:
      return "dyadic-cyc8";
    case RingKind::CyclotomicField8:
      return "cyc8-field";
    case RingKind::PrimeField:
      return "fp:" + std::to_string(p_);
  }
  return "?";
}

RingElem Ring::zero() const { return from_int(0); }
RingElem Ring::one() const { return from_int(1); }

RingElem Ring::from_int(long n) const {
  switch (kind_) {
    case RingKind::Integer:
      return RingElem(*this, mpz_class(n));
    case RingKind::Rational:
      return RingElem(*this, mpq_class(n));
    case RingKind::DyadicCyclotomic8:
      return RingElem(*this, DyadicOmega{{mpz_class(n), 0, 0, 0}, 0});
    case RingKind::CyclotomicField8:
      return RingElem(*this, RationalOmega{{mpq_class(n), 0, 0, 0}});
    case RingKind::PrimeField:
      return RingElem(*this, reduce_mod(mpz_class(n), p_));
  }
  throw Unsupported("unknown ring");
}

RingElem Ring::half() const {
  switch (kind_) {
    case RingKind::Integer:
      throw Unsupported("1/2 is not an element of int");
    case RingKind::DyadicCyclotomic8:
      return RingElem(*this, DyadicOmega{{1, 0, 0, 0}, 1});
    default:
      return from_int(2).inv();
  }
}

RingElem Ring::omega_pow(int k) const {
  int t = ((k % 8) + 8) % 8;
  if (!has_omega()) {
    if (t == 0) return one();
    if (t == 4) return from_int(-1);
    throw Unsupported("omega^" + std::to_string(k) + " is not an element of " + name());
  }
  int sign = t < 4 ? 1 : -1;
  int slot = t % 4;
  if (kind_ == RingKind::DyadicCyclotomic8) {
    DyadicOmega d{{0, 0, 0, 0}, 0};
    d.c[slot] = sign;
    return RingElem(*this, d);
  }
  RationalOmega q{{0, 0, 0, 0}};
  q.c[slot] = sign;
  return RingElem(*this, q);
}

RingElem Ring::omega() const { return omega_pow(1); }
RingElem Ring::imag() const { return omega_pow(2); }

RingElem Ring::sqrt2() const {
  if (!has_omega()) throw Unsupported("sqrt2 is not an element of " + name());
  return omega_pow(1) - omega_pow(3);
}

RingElem Ring::inv_sqrt2() const {
  if (!has_omega()) throw Unsupported("1/sqrt2 is not an element of " + name());
  return sqrt2() * half();
}

RingElem Ring::parse_element(std::string_view raw) const {
  std::string text = trim(raw);
  if (text.empty()) throw Unsupported("empty ring element");
  if (text[0] == '-') return -parse_element(std::string_view(text).substr(1));
  if (text[0] == '+') return parse_element(std::string_view(text).substr(1));

  if (text == "w" || text == "omega") return omega();
  if (text == "i") return imag();
  if (text == "sqrt2") return sqrt2();
  if (text == "1/sqrt2") return inv_sqrt2();
  if (text.starts_with("w^") || text.starts_with("omega^")) {
    std::string e = text.substr(text.find('^') + 1);
    return omega_pow(static_cast<int>(parse_integer(e).get_si() % 8));
  }

  if (text[0] == '(') {
    auto close = text.find(')');
    if (close == std::string::npos) throw Unsupported("unbalanced parenthesis in '" + text + "'");
    auto parts = split_commas(text.substr(1, close - 1));
    if (parts.size() != 4) throw Unsupported("expected 4 coordinates in '" + text + "'");
    std::string rest = trim(text.substr(close + 1));
    if (kind_ == RingKind::DyadicCyclotomic8) {
      DyadicOmega d;
      for (int j = 0; j < 4; ++j) d.c[j] = parse_integer(parts[j]);
      if (!rest.empty()) {
        if (!rest.starts_with("/2^")) throw Unsupported("expected '/2^k' in '" + text + "'");
        d.k = static_cast<unsigned>(parse_integer(rest.substr(3)).get_ui());
      }
      return RingElem(*this, d);
    }
    if (kind_ == RingKind::CyclotomicField8 && rest.empty()) {
      RationalOmega q;
      for (int j = 0; j < 4; ++j) q.c[j] = parse_rational(parts[j]);
      return RingElem(*this, q);
    }
    throw Unsupported("coordinate form not valid in " + name());
  }

  if (kind_ == RingKind::PrimeField) {
    auto mod = text.find(" mod ");
    if (mod != std::string::npos) {
      auto p = parse_integer(trim(text.substr(mod + 5)));
      if (p != static_cast<unsigned long>(p_)) throw RingMismatch("modulus mismatch in '" + text + "'");
      text = trim(text.substr(0, mod));
    }
  }

  mpq_class q = parse_rational(text);
  switch (kind_) {
    case RingKind::Integer:
      if (q.get_den() != 1) throw Unsupported("'" + text + "' is not an integer");
      return RingElem(*this, q.get_num());
    case RingKind::Rational:
      return RingElem(*this, q);
    case RingKind::DyadicCyclotomic8: {
      mpz_class den = q.get_den();
      unsigned k = 0;
      while (den % 2 == 0) {
        den /= 2;
        ++k;
      }
      if (den != 1) throw Unsupported("'" + text + "' is not dyadic");
      return RingElem(*this, DyadicOmega{{q.get_num(), 0, 0, 0}, k});
    }
    case RingKind::CyclotomicField8:
      return RingElem(*this, RationalOmega{{q, 0, 0, 0}});
    case RingKind::PrimeField: {
      RingElem num(*this, reduce_mod(q.get_num(), p_));
      RingElem den(*this, reduce_mod(q.get_den(), p_));
      return num * den.inv();
    }
  }
  throw Unsupported("unknown ring");
}

RingElem::RingElem(Ring ring, Storage value) : ring_(ring), value_(std::move(value)) {
  if (auto* d = std::get_if<DyadicOmega>(&value_)) canonicalize(*d);
  if (auto* q = std::get_if<mpq_class>(&value_)) q->canonicalize();
  if (auto* r = std::get_if<RationalOmega>(&value_)) {
    for (auto& x : r->c) x.canonicalize();
  }
  if (auto* n = std::get_if<std::uint64_t>(&value_)) *n %= ring_.modulus();
}

bool RingElem::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::Integer: return sgn(std::get<mpz_class>(value_)) == 0;
    case RingKind::Rational: return sgn(std::get<mpq_class>(value_)) == 0;
    case RingKind::DyadicCyclotomic8: {
      const auto& c = std::get<DyadicOmega>(value_).c;
      return std::all_of(c.begin(), c.end(), [](const mpz_class& v) { return sgn(v) == 0; });
    }
    case RingKind::CyclotomicField8: {
      const auto& c = std::get<RationalOmega>(value_).c;
      return std::all_of(c.begin(), c.end(), [](const mpq_class& v) { return sgn(v) == 0; });
    }
    case RingKind::PrimeField: return std::get<std::uint64_t>(value_) == 0;
  }
  return false;
}

bool RingElem::is_one() const {
  switch (ring_.kind()) {
    case RingKind::Integer: return std::get<mpz_class>(value_) == 1;
    case RingKind::Rational: return std::get<mpq_class>(value_) == 1;
    case RingKind::DyadicCyclotomic8: {
      const auto& d = std::get<DyadicOmega>(value_);
      return d.k == 0 && d.c[0] == 1 && sgn(d.c[1]) == 0 && sgn(d.c[2]) == 0 && sgn(d.c[3]) == 0;
    }
    case RingKind::CyclotomicField8: {
      const auto& c = std::get<RationalOmega>(value_).c;
      return c[0] == 1 && sgn(c[1]) == 0 && sgn(c[2]) == 0 && sgn(c[3]) == 0;
    }
    case RingKind::PrimeField: return std::get<std::uint64_t>(value_) == 1;
  }
  return false;
}

RingElem RingElem::operator-() const { return ring_.from_int(-1) * *this; }

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ring& R = a.ring_;
  switch (R.kind()) {
    case RingKind::Integer:
      return RingElem(R, mpz_class(std::get<mpz_class>(a.value_) + std::get<mpz_class>(b.value_)));
    case RingKind::Rational:
      return RingElem(R, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
    case RingKind::DyadicCyclotomic8: {
      const auto& x = std::get<DyadicOmega>(a.value_);
      const auto& y = std::get<DyadicOmega>(b.value_);
      unsigned k = std::max(x.k, y.k);
      mpz_class sx = pow2(k - x.k);
      mpz_class sy = pow2(k - y.k);
      DyadicOmega out;
      out.k = k;
      for (int j = 0; j < 4; ++j) out.c[j] = x.c[j] * sx + y.c[j] * sy;
      return RingElem(R, out);
    }
    case RingKind::CyclotomicField8: {
      const auto& x = std::get<RationalOmega>(a.value_);
      const auto& y = std::get<RationalOmega>(b.value_);
      RationalOmega out;
      for (int j = 0; j < 4; ++j) out.c[j] = x.c[j] + y.c[j];
      return RingElem(R, out);
    }
    case RingKind::PrimeField: {
      std::uint64_t p = R.modulus();
      return RingElem(R, (std::get<std::uint64_t>(a.value_) + std::get<std::uint64_t>(b.value_)) % p);
    }
  }
  throw Unsupported("unknown ring");
}

RingElem operator-(const RingElem& a, const RingElem& b) { return a + (-b); }

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  if (b.is_one() || a.is_zero()) return a;
  if (a.is_one() || b.is_zero()) return b;
  const Ring& R = a.ring_;
  switch (R.kind()) {
    case RingKind::Integer:
      return RingElem(R, mpz_class(std::get<mpz_class>(a.value_) * std::get<mpz_class>(b.value_)));
    case RingKind::Rational:
      return RingElem(R, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
    case RingKind::DyadicCyclotomic8: {
      const auto& x = std::get<DyadicOmega>(a.value_);
      const auto& y = std::get<DyadicOmega>(b.value_);
      return RingElem(R, DyadicOmega{omega_mul(x.c, y.c), x.k + y.k});
    }
    case RingKind::CyclotomicField8: {
      const auto& x = std::get<RationalOmega>(a.value_);
      const auto& y = std::get<RationalOmega>(b.value_);
      return RingElem(R, RationalOmega{omega_mul(x.c, y.c)});
    }
    case RingKind::PrimeField:
      return RingElem(R, mod_mul(std::get<std::uint64_t>(a.value_), std::get<std::uint64_t>(b.value_),
                                 R.modulus()));
  }
  throw Unsupported("unknown ring");
}

bool operator==(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  switch (a.ring_.kind()) {
    case RingKind::DyadicCyclotomic8: {
      const auto& x = std::get<DyadicOmega>(a.value_);
      const auto& y = std::get<DyadicOmega>(b.value_);
      return x.k == y.k && x.c == y.c;
    }
    case RingKind::CyclotomicField8:
      return std::get<RationalOmega>(a.value_).c == std::get<RationalOmega>(b.value_).c;
    default:
      return a.value_ == b.value_;
  }
}

RingElem RingElem::inv() const {
  if (!ring_.is_field()) throw Unsupported("inverse requested in non-field " + ring_.name());
  if (is_zero()) throw DivisionByZero("inverse of zero");
  switch (ring_.kind()) {
    case RingKind::Rational: {
      mpq_class q = 1 / std::get<mpq_class>(value_);
      return RingElem(ring_, q);
    }
    case RingKind::CyclotomicField8: {
      const auto& x = std::get<RationalOmega>(value_).c;
      auto rest = omega_mul(omega_mul(omega_conjugate(x, 3), omega_conjugate(x, 5)), omega_conjugate(x, 7));
      auto norm = omega_mul(x, rest);
      // The norm is rational: only the constant coordinate survives.
      RationalOmega out;
      for (int j = 0; j < 4; ++j) out.c[j] = rest[j] / norm[0];
      return RingElem(ring_, out);
    }
    case RingKind::PrimeField: {
      std::uint64_t p = ring_.modulus();
      return RingElem(ring_, mod_pow(std::get<std::uint64_t>(value_), p - 2, p));
    }
    default:
      break;
  }
  throw Unsupported("inverse requested in non-field " + ring_.name());
}

RingElem RingElem::pow(unsigned n) const {
  RingElem acc = ring_.one();
  RingElem base = *this;
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string RingElem::to_string() const {
  switch (ring_.kind()) {
    case RingKind::Integer:
      return std::get<mpz_class>(value_).get_str();
    case RingKind::Rational: {
      const auto& q = std::get<mpq_class>(value_);
      if (q.get_den() == 1) return q.get_num().get_str();
      return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    case RingKind::DyadicCyclotomic8: {
      const auto& d = std::get<DyadicOmega>(value_);
      return "(" + d.c[0].get_str() + "," + d.c[1].get_str() + "," + d.c[2].get_str() + "," +
             d.c[3].get_str() + ")/2^" + std::to_string(d.k);
    }
    case RingKind::CyclotomicField8: {
      const auto& c = std::get<RationalOmega>(value_).c;
      return "(" + c[0].get_str() + "," + c[1].get_str() + "," + c[2].get_str() + "," + c[3].get_str() +
             ")";
    }
    case RingKind::PrimeField:
      return std::to_string(std::get<std::uint64_t>(value_)) + " mod " + std::to_string(ring_.modulus());
  }
  return "?";
}

RingElem to_cyclotomic_field(const RingElem& a) {
  if (a.ring().kind() != RingKind::DyadicCyclotomic8) {
    throw RingMismatch("to_cyclotomic_field expects a dyadic-cyc8 element");
  }
  const auto& d = std::get<DyadicOmega>(a.storage());
  mpz_class den = pow2(d.k);
  RationalOmega q;
  for (int j = 0; j < 4; ++j) q.c[j] = mpq_class(d.c[j], den);
  return RingElem(Ring::cyclotomic_field8(), q);
}

}  // namespace pathsum
