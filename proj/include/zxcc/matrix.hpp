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

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "zxcc/error.hpp"
#include "zxcc/scalar.hpp"

namespace zxcc {

/**
 * Dense matrix over a ring S, row-major. Dimensions are powers of two when
 * the matrix is a diagram interpretation: row index bits follow the output
 * wire list with wire 1 as the most significant bit, column index bits the
 * input wires likewise.
 */
template <typename S>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S{}) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = unit();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Mat& o) const = default;

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw ArityError("matrix product dimension mismatch");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const S& v = at(i, k);
        if (is_zero(v)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          r.at(i, j) += v * o.at(k, j);
        }
      }
    }
    return r;
  }

  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ArityError("matrix sum dimension mismatch");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }

  Mat scaled(const S& z) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * z;
    return r;
  }

  Mat kron(const Mat& o) const {
    Mat r(rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t p = 0; p < o.rows_; ++p)
          for (std::size_t q = 0; q < o.cols_; ++q)
            r.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
    return r;
  }

  /** Conjugate transpose. */
  Mat dagger() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = conj_of(at(i, j));
    return r;
  }

  bool all_zero() const {
    for (const S& v : data_)
      if (!is_zero(v)) return false;
    return true;
  }

 private:
  static bool is_zero(const ExactScalar& v) { return v.is_zero(); }
  static bool is_zero(const std::complex<double>& v) { return v == std::complex<double>(0.0); }
  static ExactScalar conj_of(const ExactScalar& v) { return v.conj(); }
  static std::complex<double> conj_of(const std::complex<double>& v) { return std::conj(v); }
  static ExactScalar unit_impl(ExactScalar*) { return ExactScalar::one(); }
  static std::complex<double> unit_impl(std::complex<double>*) { return {1.0, 0.0}; }
  static S unit() { return unit_impl(static_cast<S*>(nullptr)); }

  std::size_t rows_, cols_;
  std::vector<S> data_;
};

using Matrix = Mat<ExactScalar>;
using MatrixF = Mat<std::complex<double>>;

MatrixF to_float(const Matrix& m);

struct ProportionalResult {
  bool proportional = false;
  /** Witness z with a = z * b; absent for the cross-multiplication path. */
  std::optional<ExactScalar> witness;
};

/**
 * Decides a = z * b for some nonzero z. Two zero matrices are proportional
 * with witness 1; exactly one zero is not proportional. The witness is the
 * quotient at b's first nonzero entry; when that quotient leaves the ring
 * the decision falls back to cross-multiplication and no witness is given.
 */
ProportionalResult proportional_equal(const Matrix& a, const Matrix& b);

/** Max entrywise |a - b| between a converted exact matrix and a float one. */
double max_abs_diff(const Matrix& a, const MatrixF& b);

}  // namespace zxcc
