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
#include <optional>
#include <vector>

#include "pathsum/pathsum.hpp"
#include "pathsum/theories.hpp"

namespace pathsum {

/// Canonical form of a closed sum on `wires` wires: entry v is the amplitude
/// of |v⟩, wire 0 being the most significant bit. Serialized with
/// positional names, so equal operators give identical bytes.
struct NormalForm {
  std::size_t wires = 0;
  std::vector<RingElem> entries;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

struct NormalizeConfig {
  /// Cap on output bits plus summed bits; also the table cap.
  std::size_t max_bits = 20;
};

/// Complete procedure for ≡_R: fresh outputs through (H) (an indicator
/// when 2 is not invertible), (S) on every internal variable, and the
/// R-expression normal form of the result. `psi` must be closed.
NormalForm normalize_ring(Context& ctx, const PathSum& psi, const NormalizeConfig& config = {},
                          std::vector<RewriteStep>* trace = nullptr);

/// Complete procedure for ≡_F: fresh outputs through (H), F-expression
/// normal form over outputs and internal variables, then the last internal
/// variable is removed by (O) and (A) until none is left. Requires a closed
/// multiplicative sum over a field in which 2 is invertible.
NormalForm normalize_field(Context& ctx, const PathSum& psi, const NormalizeConfig& config = {},
                           std::vector<RewriteStep>* trace = nullptr);

struct EquivalenceConfig {
  Theory theory = Theory::Ring;
  Strategy strategy = Strategy::None;
  std::size_t max_bits = 20;
};

struct EquivalenceResult {
  bool equal = false;
  /// Both sides reduced to the same canonical syntax.
  bool by_rewriting = false;
  std::optional<std::size_t> first_difference;
  std::optional<RingElem> lhs_entry;
  std::optional<RingElem> rhs_entry;
  std::optional<NormalForm> lhs_form;
  std::optional<NormalForm> rhs_form;
  std::vector<RewriteStep> trace;
};

/// Decides Ψ = Φ as operators. Throws ArityMismatch or RingMismatch.
EquivalenceResult equivalent(Context& ctx, const PathSum& psi, const PathSum& phi, const EquivalenceConfig& config = {});

/// Dispatches to normalize_ring or normalize_field.
NormalForm normalize(Context& ctx, const PathSum& closed, Theory theory, const NormalizeConfig& config = {},
                     std::vector<RewriteStep>* trace = nullptr);

}  // namespace pathsum
