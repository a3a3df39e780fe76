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
#include <string>
#include <string_view>
#include <vector>

#include "pathsum/matrix.hpp"
#include "pathsum/pathsum.hpp"
#include "pathsum/ring.hpp"

namespace pathsum {

struct GateOp {
  std::string name;
  std::vector<std::size_t> qubits;
  std::optional<RingElem> param;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t line = 0;
};

struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<GateOp> gates;
};

/// One gate per line: `X 0`, `CX 0 1`, `ZSPIDER a n m q..`, `HBOX a n m q..`.
/// `#` starts a comment, `qubits N` fixes the width (otherwise the largest
/// index plus one). Throws ParseError with the line and column.
Circuit parse_circuit(std::string_view text, const Ring& ring);

/// Sequential composition of the gates, identity on untouched wires.
PathSum circuit_to_pathsum(Context& ctx, const Circuit& circuit, const Ring& ring);

/// Reversed circuit with every gate inverted (S⁻¹ = S³, T⁻¹ = T⁷). Throws
/// Unsupported for spiders and H-boxes.
/// Product of the per-gate oracle matrices.
DenseMatrix circuit_matrix(const Circuit& circuit, const Ring& ring);

Circuit inverse(const Circuit& circuit);

std::string to_string(const Circuit& circuit);

}  // namespace pathsum
