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
#include <string>
#include <vector>

#include "pathsum/ring.hpp"

namespace pathsum {

/// Row-major matrix of ring elements with power-of-two dimensions.
class DenseMatrix {
 public:
  DenseMatrix(const Ring& ring, std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<RingElem> entries);

  static DenseMatrix identity(const Ring& ring, std::size_t dim);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingElem& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  RingElem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<RingElem>& entries() const { return entries_; }

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingElem> entries_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Same dimensions and exactly equal entries.
bool matrices_equal(const DenseMatrix& a, const DenseMatrix& b);

/// Column-major flattening: entry ⟨r|A|c⟩ lands at index c·rows + r.
std::vector<RingElem> vectorize(const DenseMatrix& a);

std::string to_string(const DenseMatrix& a);

}  // namespace pathsum
