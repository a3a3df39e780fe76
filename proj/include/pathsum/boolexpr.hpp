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

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace pathsum {

/// Interned Boolean variable. Ids are handed out by a Context and are totally
/// ordered; whether a variable is bound is decided by the enclosing PathSum.
struct Var {
  std::uint32_t id = 0;

  friend auto operator<=>(Var, Var) = default;
  friend bool operator==(Var, Var) = default;
};

/// Sorted, duplicate-free product of variables. The empty monomial is 1.
using Monomial = std::vector<Var>;

/// Multilinear polynomial over Z2 in algebraic normal form.
///
/// The monomial list is kept sorted and free of duplicates, so two values are
/// equal as Boolean functions exactly when they compare equal. Every axiom of
/// the commutative Boolean ring holds definitionally.
class BoolExpr {
 public:
  BoolExpr() = default;

  static BoolExpr zero() { return {}; }
  static BoolExpr one();
  static BoolExpr constant(bool value) { return value ? one() : zero(); }
  static BoolExpr var(Var x);
  /// Canonicalizes an arbitrary list of monomials (unsorted, repeated
  /// variables and repeated monomials allowed).
  static BoolExpr from_monomials(std::vector<Monomial> monomials);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }

  bool is_zero() const { return monomials_.empty(); }
  bool is_one() const { return monomials_.size() == 1 && monomials_[0].empty(); }
  std::optional<bool> constant_value() const;
  /// The single variable if this expression is exactly `x`.
  std::optional<Var> as_var() const;

  bool depends_on(Var x) const;
  std::vector<Var> free_vars() const;

  friend bool operator==(const BoolExpr&, const BoolExpr&) = default;
  friend auto operator<=>(const BoolExpr&, const BoolExpr&) = default;

 private:
  explicit BoolExpr(std::vector<Monomial> canonical) : monomials_(std::move(canonical)) {}

  std::vector<Monomial> monomials_;

  friend BoolExpr bxor(const BoolExpr&, const BoolExpr&);
  friend BoolExpr bmul(const BoolExpr&, const BoolExpr&);
};

BoolExpr bxor(const BoolExpr& f, const BoolExpr& g);
BoolExpr bmul(const BoolExpr& f, const BoolExpr& g);
BoolExpr bnot(const BoolExpr& f);

inline BoolExpr operator^(const BoolExpr& f, const BoolExpr& g) { return bxor(f, g); }
inline BoolExpr operator*(const BoolExpr& f, const BoolExpr& g) { return bmul(f, g); }

/// Replaces every occurrence of `x` in `f` by `g`.
BoolExpr bsubst(const BoolExpr& f, Var x, const BoolExpr& g);

/// Simultaneous variable renaming; variables absent from `renaming` are kept.
BoolExpr brename(const BoolExpr& f, const std::unordered_map<std::uint32_t, Var>& renaming);

/// Splits `f` as x·cofactor ⊕ rest, where neither part mentions `x`.
struct Cofactors {
  BoolExpr with;
  BoolExpr without;
};
Cofactors split_on(const BoolExpr& f, Var x);

/// Partial map from variables to bits, indexed densely by variable id.
class Assignment {
 public:
  void set(Var x, bool value);
  void unset(Var x);
  bool has(Var x) const { return x.id < bits_.size() && bits_[x.id] >= 0; }
  /// Throws UnassignedVariable.
  bool get(Var x) const;

 private:
  std::vector<std::int8_t> bits_;
};

bool beval(const BoolExpr& f, const Assignment& sigma);

/// Π_i (u_i ⊕ ¬v_i): one exactly when the two bit-vectors agree. Throws
/// ArityMismatch when the lengths differ.
BoolExpr eq_indicator(std::span<const BoolExpr> u, std::span<const BoolExpr> v);

using VarNamer = std::function<std::string(Var)>;

std::string default_var_name(Var x);

/// "1 + x0*x1" style rendering; "0" for the zero polynomial.
std::string to_string(const BoolExpr& f, const VarNamer& name = default_var_name);

}  // namespace pathsum
