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

#include "pathsum/matrix.hpp"
#include "pathsum/pathsum.hpp"

namespace pathsum {

inline constexpr std::size_t kDefaultOracleCap = 22;

/// Brute-force semantics of a sum: ⟨w|Ψ|v⟩ is the ring sum of the amplitude
/// over every bound assignment whose outputs equal w. Uses no rewriting.
/// Throws SizeCapExceeded when inputs + bound exceed `cap`.
DenseMatrix dense_matrix(const PathSum& psi, std::size_t cap = kDefaultOracleCap);

}  // namespace pathsum
