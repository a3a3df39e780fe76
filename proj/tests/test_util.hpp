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
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "pathsum/boolexpr.hpp"
#include "pathsum/matrix.hpp"
#include "pathsum/pathsum.hpp"

namespace pathsum {

inline void PrintTo(const Ring& ring, std::ostream* os) { *os << ring.name(); }

}  // namespace pathsum

namespace pathsum::testing {

inline DenseMatrix mat(std::size_t rows, std::size_t cols, std::initializer_list<RingElem> entries) {
  return DenseMatrix(rows, cols, std::vector<RingElem>(entries));
}

inline DenseMatrix ints(const Ring& ring, std::size_t rows, std::size_t cols, std::initializer_list<long> entries) {
  std::vector<RingElem> out;
  for (long e : entries) out.push_back(ring.from_int(e));
  return DenseMatrix(rows, cols, std::move(out));
}

inline std::vector<Var> fresh_vars(Context& ctx, std::size_t n, const char* hint = "x") {
  std::vector<Var> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(ctx.fresh(hint));
  return out;
}

/// vars[0] is the most significant bit of `index`.
inline Assignment assign(std::span<const Var> vars, std::size_t index) {
  Assignment sigma;
  for (std::size_t i = 0; i < vars.size(); ++i) sigma.set(vars[i], (index >> (vars.size() - 1 - i)) & 1U);
  return sigma;
}

inline std::vector<bool> truth_table(const BoolExpr& f, std::span<const Var> vars) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < (std::size_t{1} << vars.size()); ++i) out.push_back(beval(f, assign(vars, i)));
  return out;
}

inline std::vector<RingElem> values(const RExpr& r, std::span<const Var> vars) {
  std::vector<RingElem> out;
  for (std::size_t i = 0; i < (std::size_t{1} << vars.size()); ++i) out.push_back(reval(r, assign(vars, i)));
  return out;
}

}  // namespace pathsum::testing
