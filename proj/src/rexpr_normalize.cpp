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

#include <algorithm>
#include <unordered_map>

#include "pathsum/errors.hpp"
#include "pathsum/rexpr.hpp"

namespace pathsum {

namespace {

using Table = std::vector<RingElem>;

class Normalizer {
 public:
  Normalizer(const Ring& ring, std::span<const Var> vars, Theory theory)
      : ring_(ring), vars_(vars.begin(), vars.end()), theory_(theory) {
    for (std::size_t j = 0; j < vars_.size(); ++j) {
      if (!position_.emplace(vars_[j].id, j).second) {
        throw InvalidPathSum("duplicate variable " + default_var_name(vars_[j]) + " in normalization order");
      }
    }
  }

  Table normalize(const RExpr& r) const {
    switch (r.kind()) {
      case RExpr::Kind::Const:
        return constant(r.value());
      case RExpr::Kind::Mul:
        return multiply(normalize(r.lhs()), normalize(r.rhs()));
      case RExpr::Kind::Add:
        if (theory_ == Theory::Field) throw Unsupported("ring sum in a multiplicative (field) expression");
        return add(normalize(r.lhs()), normalize(r.rhs()));
      case RExpr::Kind::Pow:
        return power(normalize(r.base()), r.exponent());
    }
    throw Error("unreachable");
  }

 private:
  std::size_t size() const { return std::size_t{1} << vars_.size(); }

  // α ≡ Π_v α^{v = x}: the same value at every index.
  Table constant(const RingElem& alpha) const { return Table(size(), alpha); }

  Table multiply(const Table& a, const Table& b) const {
    Table out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
    return out;
  }

  // s1^{¬x}s2^{x} + t1^{¬x}t2^{x} ≡ (s1 + t1)^{¬x}(s2 + t2)^{x}, recursing on
  // the last variable down to plain ring sums.
  static Table add(const Table& a, const Table& b) {
    if (a.size() == 1) return Table{a[0] + b[0]};
    const std::size_t half = a.size() / 2;
    Table s1, s2, t1, t2;
    s1.reserve(half);
    s2.reserve(half);
    t1.reserve(half);
    t2.reserve(half);
    for (std::size_t i = 0; i < a.size(); i += 2) {
      s1.push_back(a[i]);
      s2.push_back(a[i + 1]);
      t1.push_back(b[i]);
      t2.push_back(b[i + 1]);
    }
    Table low = add(s1, t1);
    Table high = add(s2, t2);
    Table out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < half; ++i) {
      out.push_back(std::move(low[i]));
      out.push_back(std::move(high[i]));
    }
    return out;
  }

  Table scale(const Table& a, const RingElem& c) const { return multiply(a, constant(c)); }

  std::size_t bit_of(Var x) const {
    auto it = position_.find(x.id);
    if (it == position_.end()) {
      throw InvalidPathSum("variable " + default_var_name(x) + " is not in the normalization order");
    }
    return vars_.size() - 1 - it->second;
  }

  // r^{x} ≡ Π_v (α_v^{v = x})^{x}: entries with x = 0 become 1.
  Table power_var(const Table& t, Var x) const {
    const std::size_t bit = bit_of(x);
    Table out = t;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!((i >> bit) & 1)) out[i] = ring_.one();
    }
    return out;
  }

  Table power(const Table& t, const BoolExpr& f) const {
    if (f.is_zero()) return constant(ring_.one());
    if (f.is_one()) return t;
    // 1^{f} ≡ 1
    if (std::all_of(t.begin(), t.end(), [](const RingElem& a) { return a.is_one(); })) return t;
    const auto& monomials = f.monomials();
    if (monomials.size() == 1) {
      // r^{x·g} ≡ (r^{x})^{g}
      Table acc = t;
      for (Var x : monomials[0]) acc = power_var(acc, x);
      return acc;
    }
    const std::size_t split = monomials.size() / 2;
    BoolExpr f1 = BoolExpr::from_monomials({monomials.begin(), monomials.begin() + split});
    BoolExpr f2 = BoolExpr::from_monomials({monomials.begin() + split, monomials.end()});
    if (theory_ == Theory::Ring) {
      // r^{f1⊕f2} ≡ r^{f1} + r^{f2} − (2r − 1)^{f1·f2}, with c^{f1·f2} ≡ (c^{f1})^{f2}
      Table cross = power(power(add(scale(t, ring_.from_int(2)), constant(ring_.from_int(-1))), f1), f2);
      return add(add(power(t, f1), power(t, f2)), scale(cross, ring_.from_int(-1)));
    }
    return power_xor_field(t, f, f1, f2);
  }

  // a^{f1⊕f2} ≡ a^{f1}a^{f2}(a^{-2})^{f1·f2} on the nonzero part of the base.
  // Zero entries are split off: (0^{v = x})^{f} ≡ 0^{(v = x)·f(v)}.
  Table power_xor_field(const Table& t, const BoolExpr& f, const BoolExpr& f1, const BoolExpr& f2) const {
    Table nonzero = t;
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].is_zero()) {
        zeros.push_back(i);
        nonzero[i] = ring_.one();
      }
    }
    // Tables hold few distinct values; invert each once.
    std::vector<std::pair<RingElem, RingElem>> seen;
    Table inv_sq;
    inv_sq.reserve(t.size());
    for (const auto& a : nonzero) {
      auto hit = std::find_if(seen.begin(), seen.end(), [&a](const auto& p) { return p.first == a; });
      if (hit == seen.end()) {
        RingElem inv = a.inv();
        seen.emplace_back(a, inv * inv);
        if (seen.size() > 16) seen.erase(seen.begin());
        hit = seen.end() - 1;
      }
      inv_sq.push_back(hit->second);
    }
    Table out = multiply(multiply(power(nonzero, f1), power(nonzero, f2)), power(power(inv_sq, f1), f2));
    for (std::size_t index : zeros) {
      if (eval_at(f, index)) out[index] = ring_.zero();
    }
    return out;
  }

  bool eval_at(const BoolExpr& f, std::size_t index) const {
    Assignment sigma;
    const std::size_t m = vars_.size();
    for (std::size_t j = 0; j < m; ++j) sigma.set(vars_[j], (index >> (m - 1 - j)) & 1);
    return beval(f, sigma);
  }

  Ring ring_;
  std::vector<Var> vars_;
  Theory theory_;
  std::unordered_map<std::uint32_t, std::size_t> position_;
};

}  // namespace

NormalTable normalize_rexpr(const RExpr& r, std::span<const Var> vars, const NormalizeOptions& options) {
  if (vars.size() > options.max_bits) {
    throw SizeCapExceeded("normal table over " + std::to_string(vars.size()) + " variables exceeds the cap of " +
                          std::to_string(options.max_bits));
  }
  for (Var x : r.free_vars()) {
    if (std::find(vars.begin(), vars.end(), x) == vars.end()) {
      throw InvalidPathSum("free variable " + default_var_name(x) + " missing from the normalization order");
    }
  }
  if (options.theory == Theory::Field) {
    const Ring& ring = r.ring();
    if (!ring.is_field() || ring.characteristic() == 2) {
      throw Unsupported("field normalization requires a field of characteristic other than 2, got " + ring.name());
    }
    if (!r.is_multiplicative()) throw Unsupported("ring sum in a multiplicative (field) expression");
  }
  Normalizer normalizer(r.ring(), vars, options.theory);
  return NormalTable{std::vector<Var>(vars.begin(), vars.end()), normalizer.normalize(r)};
}

}  // namespace pathsum
