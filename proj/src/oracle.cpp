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

#include "pathsum/oracle.hpp"

#include "pathsum/errors.hpp"

namespace pathsum {

DenseMatrix::DenseMatrix(const Ring& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, ring.zero()) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<RingElem> entries)
    : ring_(entries.at(0).ring()), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw ArityMismatch("matrix entry count does not match its dimensions");
}

DenseMatrix DenseMatrix::identity(const Ring& ring, std::size_t dim) {
  DenseMatrix out(ring, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = ring.one();
  return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw ArityMismatch("matrix product dimension mismatch");
  DenseMatrix out(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

bool matrices_equal(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.ring() == b.ring())) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (!(a.entries()[i] == b.entries()[i])) return false;
  }
  return true;
}

std::vector<RingElem> vectorize(const DenseMatrix& a) {
  std::vector<RingElem> out;
  out.reserve(a.rows() * a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) out.push_back(a(r, c));
  }
  return out;
}

std::string to_string(const DenseMatrix& a) {
  std::string out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out += "[";
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) out += ", ";
      out += a(r, c).to_string();
    }
    out += "]\n";
  }
  return out;
}

DenseMatrix dense_matrix(const PathSum& psi, std::size_t cap) {
  const std::size_t m = psi.input_arity();
  const std::size_t k = psi.bound().size();
  const std::size_t n = psi.output_arity();
  if (m + k > cap) {
    throw SizeCapExceeded("oracle enumeration over " + std::to_string(m + k) + " variables exceeds the cap of " +
                          std::to_string(cap));
  }
  DenseMatrix out(psi.ring(), std::size_t{1} << n, std::size_t{1} << m);
  Assignment sigma;
  for (std::size_t col = 0; col < (std::size_t{1} << m); ++col) {
    for (std::size_t j = 0; j < m; ++j) sigma.set(psi.inputs()[j], (col >> (m - 1 - j)) & 1);
    for (std::size_t tau = 0; tau < (std::size_t{1} << k); ++tau) {
      for (std::size_t j = 0; j < k; ++j) sigma.set(psi.bound()[j], (tau >> (k - 1 - j)) & 1);
      std::size_t row = 0;
      for (const auto& f : psi.outputs()) row = (row << 1) | (beval(f, sigma) ? 1u : 0u);
      out(row, col) += reval(psi.amplitude(), sigma);
    }
  }
  return out;
}

}  // namespace pathsum
