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

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pathsum/boolexpr.hpp"
#include "pathsum/ring.hpp"

namespace pathsum {

enum class AmplitudeMode {
  Multiplicative,  ///< no ring sums anywhere
  Full,
};

/// Which equational theory drives amplitude normalization.
enum class Theory {
  Ring,   ///< commutative rings, uses ring sums
  Field,  ///< multiplicative fragment over a field with 2 invertible
};

/// Immutable amplitude expression: constants, Boolean powers, products and
/// (outside the multiplicative fragment) sums. Subtrees are shared.
class RExpr {
 public:
  enum class Kind { Const, Pow, Mul, Add };

  static RExpr constant(RingElem value);
  static RExpr pow(RExpr base, BoolExpr exponent);
  static RExpr mul(RExpr lhs, RExpr rhs);
  static RExpr add(RExpr lhs, RExpr rhs);
  /// Left-nested product; an empty list yields the constant one of `ring`.
  static RExpr product(std::span<const RExpr> factors, const Ring& ring);

  Kind kind() const;
  const Ring& ring() const;
  AmplitudeMode mode() const;
  bool is_multiplicative() const { return mode() == AmplitudeMode::Multiplicative; }

  /// Const only.
  const RingElem& value() const;
  /// Pow only.
  const RExpr& base() const;
  const BoolExpr& exponent() const;
  /// Mul and Add only.
  const RExpr& lhs() const;
  const RExpr& rhs() const;

  /// Sorted union of the exponents' free variables.
  const std::vector<Var>& free_vars() const;
  bool depends_on(Var x) const;
  /// Number of nodes in the tree (shared subtrees counted each time).
  std::size_t size() const;

 private:
  struct Node;
  explicit RExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline RExpr operator*(const RExpr& a, const RExpr& b) { return RExpr::mul(a, b); }
inline RExpr operator+(const RExpr& a, const RExpr& b) { return RExpr::add(a, b); }

/// Evaluates with the convention 0^0 = 1. Throws UnassignedVariable.
RingElem reval(const RExpr& r, const Assignment& sigma);

/// Substitutes `g` for `x` inside every exponent.
RExpr rsubst(const RExpr& r, Var x, const BoolExpr& g);
/// Substitutes constants for several variables at once.
RExpr rsubst_bits(const RExpr& r, std::span<const std::pair<Var, bool>> bits);
RExpr rrename(const RExpr& r, const std::unordered_map<std::uint32_t, Var>& renaming);

/// Top-level factors of a product tree, left to right.
std::vector<RExpr> flatten_product(const RExpr& r);

std::string to_string(const RExpr& r, const VarNamer& name = default_var_name);

/// Dense table of an amplitude over an ordered variable list. Entry index
/// bit (m-1-j) holds the value of vars[j], so vars[0] is the most
/// significant bit and indices read like the bit strings 00..0 … 11..1.
struct NormalTable {
  std::vector<Var> vars;
  std::vector<RingElem> entries;

  const RingElem& at(std::size_t index) const { return entries.at(index); }
  std::size_t bit_count() const { return vars.size(); }
  friend bool operator==(const NormalTable&, const NormalTable&) = default;
};

struct NormalizeOptions {
  Theory theory = Theory::Ring;
  std::size_t max_bits = 20;
};

/// Brings `r` into normal form over `vars` (which must cover FV(r)) by
/// structural recursion: constants are extended over the variables, products
/// are taken entrywise, sums recurse on the last variable and powers recurse
/// on the Boolean exponent. Under Theory::Field sums are rejected and XOR
/// exponents use a^{f⊕g} = a^f a^g (a^{-2})^{fg}.
NormalTable normalize_rexpr(const RExpr& r, std::span<const Var> vars, const NormalizeOptions& options = {});

/// Π_v α_v^{v = vars}: the multiplicative expression denoting `table`.
RExpr table_to_rexpr(const NormalTable& table);

/// Lifting of a Boolean expression into `ring`: 0^{¬f}, which is 1 where f
/// holds and 0 elsewhere.
RExpr lift(const BoolExpr& f, const Ring& ring);

/// One term c·m of a phase polynomial with coefficient c mod 2^k.
struct PhaseTerm {
  std::uint32_t coefficient = 0;
  Monomial monomial;
};

/// Π_m (ζ^{c_m})^{m} with ζ = ω^{8/2^k}; evaluates to ζ^{P(σ)}. Orders
/// k ∈ {0, 1} work in every ring, k ∈ {2, 3} need ω. Throws Unsupported.
RExpr phase_to_amplitude(std::span<const PhaseTerm> polynomial, unsigned k, const Ring& ring);

}  // namespace pathsum
