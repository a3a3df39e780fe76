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

#include <cstdint>
#include <string>
#include <vector>

#include "pathsum/boolexpr.hpp"
#include "pathsum/rexpr.hpp"
#include "pathsum/ring.hpp"

namespace pathsum {

class DenseMatrix;

/// Owns variable ids and their display names. Fresh ids come from a monotone
/// counter, so a context must not be shared between threads without external
/// synchronization.
class Context {
 public:
  Var fresh(std::string hint = "v");
  const std::string& name(Var x) const;
  VarNamer namer() const;
  std::uint32_t allocated() const { return static_cast<std::uint32_t>(names_.size()); }

 private:
  std::vector<std::string> names_;
};

/// Σ_{bound} amplitude |outputs⟩, a linear map from the `inputs` wires to the
/// output wires.
class PathSum {
 public:
  /// Validates: bound variables distinct and disjoint from the inputs, free
  /// variables of amplitude and outputs covered by inputs ∪ bound, amplitude
  /// over `ring`. Throws InvalidPathSum or RingMismatch.
  PathSum(Ring ring, std::vector<Var> inputs, std::vector<Var> bound, RExpr amplitude,
          std::vector<BoolExpr> outputs);

  const Ring& ring() const { return ring_; }
  const std::vector<Var>& inputs() const { return inputs_; }
  const std::vector<Var>& bound() const { return bound_; }
  const RExpr& amplitude() const { return amplitude_; }
  const std::vector<BoolExpr>& outputs() const { return outputs_; }

  std::size_t input_arity() const { return inputs_.size(); }
  std::size_t output_arity() const { return outputs_.size(); }
  bool is_closed() const { return inputs_.empty(); }
  AmplitudeMode mode() const { return amplitude_.mode(); }
  bool is_bound(Var x) const;

 private:
  Ring ring_;
  std::vector<Var> inputs_;
  std::vector<Var> bound_;
  RExpr amplitude_;
  std::vector<BoolExpr> outputs_;
};

/// Copy of `psi` with every input and bound variable replaced by a fresh one.
PathSum rename_apart(Context& ctx, const PathSum& psi);

/// Φ∘Ψ: Ψ runs first. Throws ArityMismatch.
PathSum compose(Context& ctx, const PathSum& phi, const PathSum& psi);

/// Ψ⊗Φ: Ψ's wires come first.
PathSum tensor(Context& ctx, const PathSum& psi, const PathSum& phi);

/// Bends every input into an output with a cup. The result is closed, its
/// wires are the inputs followed by the outputs, so its vector is the
/// vectorization ⟨y|A|x⟩ at index x·y.
PathSum to_state(const PathSum& psi);

/// Applies `gate` to the listed wires of `state` (identity elsewhere).
PathSum apply_on_wires(Context& ctx, const PathSum& state, const PathSum& gate, const std::vector<std::size_t>& wires);

PathSum identity(Context& ctx, const Ring& ring, std::size_t n);

/// Generators of the gate library.
enum class GateKind { I, X, Z, S, T, H, CX, CCX, CH, ZSpider, HBox, Cup, Cap };

/// Sum for a library generator. `alpha`, `n` and `m` are only read by the
/// spider and H-box. Throws Unsupported when the ring lacks a constant.
PathSum gate(Context& ctx, const Ring& ring, GateKind kind, const RingElem* alpha = nullptr, std::size_t n = 0,
             std::size_t m = 0);

/// Λ(H) through the balanced encoding that makes intermediate paths
/// interfere when the control is 0.
PathSum controlled_h_balanced(Context& ctx, const Ring& ring);

/// The displayed X-spider sum
/// s·Σ_{y, z⃗} α^y (−1)^{Σ x_i y}(−1)^{Σ y z_j}|z⃗⟩ with scalar s.
PathSum x_spider(Context& ctx, const Ring& ring, const RingElem& alpha, std::size_t n, std::size_t m,
                 const RingElem& scalar);

/// Σ_{y⃗} Π_v α_v^{v = x⃗y⃗}|y⃗⟩ with α_{xy} = ⟨y|A|x⟩. Multiplicative.
/// Throws ArityMismatch for non power-of-two dimensions.
PathSum from_matrix(Context& ctx, const DenseMatrix& a);

std::string to_string(const PathSum& psi, const VarNamer& name = default_var_name);

}  // namespace pathsum
