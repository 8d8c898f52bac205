// Copyright 2026 The zxcc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxcc/matrix.hpp"

namespace zxcc {

MatrixF to_float(const Matrix& m) {
  MatrixF r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).to_complex();
  return r;
}

ProportionalResult proportional_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ArityError("proportional_equal dimension mismatch");
  }
  const bool az = a.all_zero(), bz = b.all_zero();
  if (az && bz) return {true, ExactScalar::one()};
  if (az != bz) return {false, std::nullopt};

  // first (row-major) nonzero of b
  std::size_t pr = 0, pc = 0;
  bool found = false;
  for (std::size_t i = 0; i < b.rows() && !found; ++i) {
    for (std::size_t j = 0; j < b.cols() && !found; ++j) {
      if (!b.at(i, j).is_zero()) {
        pr = i;
        pc = j;
        found = true;
      }
    }
  }
  const ExactScalar& bp = b.at(pr, pc);
  const ExactScalar& ap = a.at(pr, pc);
  if (ap.is_zero()) return {false, std::nullopt};

  std::optional<ExactScalar> z = ap.divided_by(bp);
  if (z.has_value()) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!(a.at(i, j) == *z * b.at(i, j))) return {false, std::nullopt};
      }
    }
    return {true, z};
  }
  // quotient left the ring: cross-multiplication test a[i]*b[p] == b[i]*a[p]
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(a.at(i, j) * bp == b.at(i, j) * ap)) return {false, std::nullopt};
    }
  }
  return {true, std::nullopt};
}

double max_abs_diff(const Matrix& a, const MatrixF& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      worst = std::max(worst, std::abs(a.at(i, j).to_complex() - b.at(i, j)));
    }
  }
  return worst;
}

}  // namespace zxcc
