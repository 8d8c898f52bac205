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
#include <cstdint>
#include <optional>
#include <string>

#include "zxcc/phase.hpp"

namespace zxcc {

/**
 * An element of Z[w, 1/sqrt(2)] with w = e^{i pi/4}:
 *
 *   (a + b w + c w^2 + d w^3) / sqrt(2)^k
 *
 * kept canonical: either k = 0 or the numerator is not divisible by
 * sqrt(2) = w - w^3, so equality is plain field comparison. This ring
 * contains every matrix entry generated by Z/X spiders with pi/4-multiple
 * phases and the Hadamard, which is all the Clifford+T content needed here.
 */
class ExactScalar {
 public:
  ExactScalar() = default;  // zero
  ExactScalar(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint32_t k)
      : a_(a), b_(b), c_(c), d_(d), k_(k) {
    canonicalize();
  }

  static ExactScalar zero() { return ExactScalar(); }
  static ExactScalar one() { return from_int(1); }
  static ExactScalar from_int(std::int64_t n) { return ExactScalar(n, 0, 0, 0, 0); }
  /** w^t for any integer t (period 8). */
  static ExactScalar omega_pow(std::int64_t t);
  /** e^{i alpha} for alpha a multiple of pi/4; throws otherwise. */
  static ExactScalar from_phase(const Phase& alpha);
  static ExactScalar sqrt2_pow(std::uint32_t n);       // sqrt(2)^n
  static ExactScalar inv_sqrt2_pow(std::uint32_t n);   // sqrt(2)^-n

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  std::uint32_t k() const { return k_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool operator==(const ExactScalar&) const = default;

  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator-() const { return ExactScalar(-a_, -b_, -c_, -d_, k_); }
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  /** Complex conjugate. */
  ExactScalar conj() const { return ExactScalar(a_, -d_, -c_, -b_, k_); }

  /**
   * Exact division; nullopt when the quotient is not in the ring
   * (e.g. would need denominators other than powers of sqrt(2)).
   */
  std::optional<ExactScalar> divided_by(const ExactScalar& o) const;

  std::complex<double> to_complex() const;

  /** Renders "(a+bw+cw^2+dw^3)/sqrt2^k" with zero terms elided. */
  std::string str() const;

 private:
  void canonicalize();
  std::int64_t a_ = 0, b_ = 0, c_ = 0, d_ = 0;
  std::uint32_t k_ = 0;
};

}  // namespace zxcc
