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

#include "pathsum/pathsum.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "pathsum/errors.hpp"

namespace pathsum {

Var Context::fresh(std::string hint) {
  Var x{static_cast<std::uint32_t>(names_.size())};
  names_.push_back(std::move(hint) + std::to_string(x.id));
  return x;
}

const std::string& Context::name(Var x) const {
  static const std::string unknown = "?";
  return x.id < names_.size() ? names_[x.id] : unknown;
}

VarNamer Context::namer() const {
  return [this](Var x) { return x.id < names_.size() ? names_[x.id] : default_var_name(x); };
}

PathSum::PathSum(Ring ring, std::vector<Var> inputs, std::vector<Var> bound, RExpr amplitude,
                 std::vector<BoolExpr> outputs)
    : ring_(ring),
      inputs_(std::move(inputs)),
      bound_(std::move(bound)),
      amplitude_(std::move(amplitude)),
      outputs_(std::move(outputs)) {
  if (!(amplitude_.ring() == ring_)) {
    throw RingMismatch("amplitude over " + amplitude_.ring().name() + " in a sum over " + ring_.name());
  }
  std::unordered_set<std::uint32_t> scope;
  for (Var x : inputs_) {
    if (!scope.insert(x.id).second) throw InvalidPathSum("repeated input variable " + default_var_name(x));
  }
  for (Var y : bound_) {
    if (!scope.insert(y.id).second) {
      throw InvalidPathSum("bound variable " + default_var_name(y) + " repeated or also free");
    }
  }
  auto check = [&](const std::vector<Var>& vars) {
    for (Var v : vars) {
      if (!scope.contains(v.id)) throw InvalidPathSum("variable " + default_var_name(v) + " is out of scope");
    }
  };
  check(amplitude_.free_vars());
  for (const auto& f : outputs_) check(f.free_vars());
}

bool PathSum::is_bound(Var x) const { return std::find(bound_.begin(), bound_.end(), x) != bound_.end(); }

namespace {

using Renaming = std::unordered_map<std::uint32_t, Var>;

std::vector<Var> rename_all(Context& ctx, const std::vector<Var>& vars, Renaming& renaming) {
  std::vector<Var> out;
  out.reserve(vars.size());
  for (Var v : vars) {
    Var fresh = ctx.fresh(ctx.name(v).empty() ? "v" : std::string(1, ctx.name(v)[0]));
    renaming.emplace(v.id, fresh);
    out.push_back(fresh);
  }
  return out;
}

std::vector<BoolExpr> rename_outputs(const std::vector<BoolExpr>& outputs, const Renaming& renaming) {
  std::vector<BoolExpr> out;
  out.reserve(outputs.size());
  for (const auto& f : outputs) out.push_back(brename(f, renaming));
  return out;
}

}  // namespace

PathSum rename_apart(Context& ctx, const PathSum& psi) {
  Renaming renaming;
  auto inputs = rename_all(ctx, psi.inputs(), renaming);
  auto bound = rename_all(ctx, psi.bound(), renaming);
  return PathSum(psi.ring(), std::move(inputs), std::move(bound), rrename(psi.amplitude(), renaming),
                 rename_outputs(psi.outputs(), renaming));
}

PathSum compose(Context& ctx, const PathSum& phi, const PathSum& psi) {
  if (psi.output_arity() != phi.input_arity()) {
    throw ArityMismatch("compose: " + std::to_string(psi.output_arity()) + " outputs feed " +
                        std::to_string(phi.input_arity()) + " inputs");
  }
  if (!(phi.ring() == psi.ring())) throw RingMismatch("compose: sums over different rings");
  // Φ renamed apart; sequential substitution is then simultaneous.
  PathSum fresh = rename_apart(ctx, phi);
  RExpr amplitude = fresh.amplitude();
  std::vector<BoolExpr> outputs = fresh.outputs();
  for (std::size_t i = 0; i < fresh.inputs().size(); ++i) {
    Var x = fresh.inputs()[i];
    const BoolExpr& g = psi.outputs()[i];
    amplitude = rsubst(amplitude, x, g);
    for (auto& f : outputs) f = bsubst(f, x, g);
  }
  std::vector<Var> bound = psi.bound();
  bound.insert(bound.end(), fresh.bound().begin(), fresh.bound().end());
  return PathSum(psi.ring(), psi.inputs(), std::move(bound), RExpr::mul(psi.amplitude(), amplitude),
                 std::move(outputs));
}

PathSum tensor(Context& ctx, const PathSum& psi, const PathSum& phi) {
  if (!(phi.ring() == psi.ring())) throw RingMismatch("tensor: sums over different rings");
  PathSum fresh = rename_apart(ctx, phi);
  std::vector<Var> inputs = psi.inputs();
  inputs.insert(inputs.end(), fresh.inputs().begin(), fresh.inputs().end());
  std::vector<Var> bound = psi.bound();
  bound.insert(bound.end(), fresh.bound().begin(), fresh.bound().end());
  std::vector<BoolExpr> outputs = psi.outputs();
  outputs.insert(outputs.end(), fresh.outputs().begin(), fresh.outputs().end());
  return PathSum(psi.ring(), std::move(inputs), std::move(bound), RExpr::mul(psi.amplitude(), fresh.amplitude()),
                 std::move(outputs));
}

PathSum to_state(const PathSum& psi) {
  // (I ⊗ Ψ)∘η: each input becomes a summed variable copied to a new wire.
  std::vector<Var> bound = psi.inputs();
  bound.insert(bound.end(), psi.bound().begin(), psi.bound().end());
  std::vector<BoolExpr> outputs;
  outputs.reserve(psi.input_arity() + psi.output_arity());
  for (Var x : psi.inputs()) outputs.push_back(BoolExpr::var(x));
  outputs.insert(outputs.end(), psi.outputs().begin(), psi.outputs().end());
  return PathSum(psi.ring(), {}, std::move(bound), psi.amplitude(), std::move(outputs));
}

PathSum apply_on_wires(Context& ctx, const PathSum& state, const PathSum& gate, const std::vector<std::size_t>& wires) {
  if (wires.size() != gate.input_arity() || gate.input_arity() != gate.output_arity()) {
    throw ArityMismatch("gate of arity " + std::to_string(gate.input_arity()) + "->" +
                        std::to_string(gate.output_arity()) + " applied to " + std::to_string(wires.size()) +
                        " wires");
  }
  std::unordered_set<std::size_t> seen;
  for (std::size_t w : wires) {
    if (w >= state.output_arity()) throw ArityMismatch("wire " + std::to_string(w) + " out of range");
    if (!seen.insert(w).second) throw ArityMismatch("wire " + std::to_string(w) + " used twice");
  }
  if (!(state.ring() == gate.ring())) throw RingMismatch("apply_on_wires: sums over different rings");
  PathSum fresh = rename_apart(ctx, gate);
  RExpr amplitude = fresh.amplitude();
  std::vector<BoolExpr> gate_outputs = fresh.outputs();
  for (std::size_t i = 0; i < wires.size(); ++i) {
    Var x = fresh.inputs()[i];
    const BoolExpr& g = state.outputs()[wires[i]];
    amplitude = rsubst(amplitude, x, g);
    for (auto& f : gate_outputs) f = bsubst(f, x, g);
  }
  std::vector<BoolExpr> outputs = state.outputs();
  for (std::size_t i = 0; i < wires.size(); ++i) outputs[wires[i]] = gate_outputs[i];
  std::vector<Var> bound = state.bound();
  bound.insert(bound.end(), fresh.bound().begin(), fresh.bound().end());
  RExpr combined = fresh.amplitude().free_vars().empty() && fresh.amplitude().kind() == RExpr::Kind::Const &&
                           fresh.amplitude().value().is_one()
                       ? state.amplitude()
                       : RExpr::mul(state.amplitude(), amplitude);
  return PathSum(state.ring(), state.inputs(), std::move(bound), std::move(combined), std::move(outputs));
}

PathSum identity(Context& ctx, const Ring& ring, std::size_t n) {
  std::vector<Var> inputs;
  std::vector<BoolExpr> outputs;
  for (std::size_t i = 0; i < n; ++i) {
    inputs.push_back(ctx.fresh("x"));
    outputs.push_back(BoolExpr::var(inputs.back()));
  }
  return PathSum(ring, std::move(inputs), {}, RExpr::constant(ring.one()), std::move(outputs));
}

std::string to_string(const PathSum& psi, const VarNamer& name) {
  std::string out = "(";
  for (std::size_t i = 0; i < psi.inputs().size(); ++i) {
    if (i) out += ", ";
    out += name(psi.inputs()[i]);
  }
  out += ") -> Sum[";
  for (std::size_t i = 0; i < psi.bound().size(); ++i) {
    if (i) out += ", ";
    out += name(psi.bound()[i]);
  }
  out += "] " + to_string(psi.amplitude(), name) + " |";
  for (std::size_t i = 0; i < psi.outputs().size(); ++i) {
    if (i) out += ", ";
    out += to_string(psi.outputs()[i], name);
  }
  return out + ">";
}

}  // namespace pathsum
