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
#include <random>
#include <span>
#include <vector>

#include "pathsum/circuit.hpp"
#include "pathsum/matrix.hpp"
#include "pathsum/pathsum.hpp"
#include "pathsum/theories.hpp"

namespace pathsum::gen {

using Rng = std::mt19937_64;

BoolExpr boolexpr(Rng& rng, std::span<const Var> vars, std::size_t max_terms = 3, std::size_t max_degree = 2);

/// Small elements; roots of unity are favoured in rings that have them.
RingElem element(Rng& rng, const Ring& ring, bool allow_zero = true);

RExpr rexpr(Rng& rng, const Ring& ring, std::span<const Var> vars, std::size_t depth, bool allow_add);

/// Closed sum with 1..max_outputs outputs and 0..max_bound bound variables.
PathSum closed_sum(Context& ctx, Rng& rng, const Ring& ring, std::size_t max_outputs, std::size_t max_bound,
                   bool multiplicative);

/// Operator with 1..2 inputs and up to `max_bound` bound variables.
PathSum open_sum(Context& ctx, Rng& rng, const Ring& ring, std::size_t max_bound, bool multiplicative);

struct RuleInstance {
  PathSum sum;
  RuleSite site;
};

/// A sum on which `rule` fires at `site` (at most 3 outputs, 5 bound
/// variables). Requires rule_available(rule, ring).
RuleInstance rule_instance(Context& ctx, Rng& rng, RuleId rule, const Ring& ring);

/// H, S and CX gates only.
Circuit clifford_circuit(Rng& rng, std::size_t n_qubits, std::size_t max_gates);

/// Inserts `count` identities or inverse pairs (I, H·H, CX·CX, S·S³) at
/// random positions.
Circuit pad_with_identities(Rng& rng, const Circuit& circuit, std::size_t count);

DenseMatrix matrix(Rng& rng, const Ring& ring, std::size_t rows, std::size_t cols);

}  // namespace pathsum::gen
