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

#include "zxcc/scalar.hpp"

#include <array>
#include <numeric>

#include "zxcc/error.hpp"

namespace zxcc {

namespace {

// Multiplication of the numerator by sqrt(2) = w - w^3 in Z[w], w^4 = -1.
std::array<std::int64_t, 4> times_sqrt2(const std::array<std::int64_t, 4>& v) {
  const auto [a, b, c, d] = v;
  return {b - d, a + c, b + d, c - a};
}

}  // namespace

void ExactScalar::canonicalize() {
  if (is_zero()) {
    k_ = 0;
    return;
  }
  // Divide the numerator by sqrt(2) while possible: (a+bw+cw^2+dw^3) is
  // divisible by sqrt(2) iff a = c (mod 2) and b = d (mod 2).
  while (k_ > 0 && ((a_ - c_) % 2 == 0) && ((b_ - d_) % 2 == 0)) {
    const std::int64_t a = a_, b = b_, c = c_, d = d_;
    a_ = (b - d) / 2;
    b_ = (a + c) / 2;
    c_ = (b + d) / 2;
    d_ = (c - a) / 2;
    --k_;
  }
}

ExactScalar ExactScalar::omega_pow(std::int64_t t) {
  t %= 8;
  if (t < 0) t += 8;
  std::int64_t sign = t < 4 ? 1 : -1;
  std::array<std::int64_t, 4> v = {0, 0, 0, 0};
  v[static_cast<std::size_t>(t % 4)] = sign;
  return ExactScalar(v[0], v[1], v[2], v[3], 0);
}

ExactScalar ExactScalar::from_phase(const Phase& alpha) {
  return omega_pow(alpha.quarter_units());
}

ExactScalar ExactScalar::sqrt2_pow(std::uint32_t n) {
  std::array<std::int64_t, 4> v = {1, 0, 0, 0};
  for (std::uint32_t i = 0; i < n; ++i) v = times_sqrt2(v);
  return ExactScalar(v[0], v[1], v[2], v[3], 0);
}

ExactScalar ExactScalar::inv_sqrt2_pow(std::uint32_t n) { return ExactScalar(1, 0, 0, 0, n); }

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  // Raise the smaller-k operand to the common denominator.
  std::array<std::int64_t, 4> u = {a_, b_, c_, d_};
  std::array<std::int64_t, 4> v = {o.a_, o.b_, o.c_, o.d_};
  std::uint32_t k = std::max(k_, o.k_);
  for (std::uint32_t i = k_; i < k; ++i) u = times_sqrt2(u);
  for (std::uint32_t i = o.k_; i < k; ++i) v = times_sqrt2(v);
  return ExactScalar(u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3], k);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  // Negacyclic convolution: w^4 = -1.
  const std::array<std::int64_t, 4> u = {a_, b_, c_, d_};
  const std::array<std::int64_t, 4> v = {o.a_, o.b_, o.c_, o.d_};
  std::array<std::int64_t, 4> r = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int idx = i + j;
      const std::int64_t term = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
      if (idx < 4) {
        r[static_cast<std::size_t>(idx)] += term;
      } else {
        r[static_cast<std::size_t>(idx - 4)] -= term;
      }
    }
  }
  return ExactScalar(r[0], r[1], r[2], r[3], k_ + o.k_);
}

std::optional<ExactScalar> ExactScalar::divided_by(const ExactScalar& o) const {
  if (o.is_zero()) throw ZXError("division by zero scalar");
  if (is_zero()) return zero();
  // this/o = this * conj(o) * (x - y sqrt2) / (x^2 - 2 y^2) where
  // o * conj(o) = (x + y sqrt2) / sqrt2^{2 k_o} is real.
  ExactScalar oc = o * o.conj();
  // real elements have the form x + y(w - w^3)
  if (oc.b() + oc.d() != 0 || oc.c() != 0) throw ZXError("norm not real");
  const std::int64_t x = oc.a();
  const std::int64_t y = oc.b();
  ExactScalar num = *this * o.conj() * ExactScalar(x, -y, 0, y, 0);
  // oc = (x + y sqrt2)/sqrt2^k_oc; so this/o = num * sqrt2^k_oc / (x^2-2y^2)
  num = num * sqrt2_pow(oc.k());
  const std::int64_t den = x * x - 2 * y * y;
  if (den == 0) throw ZXError("zero norm in nonzero scalar");
  // Divide the canonical numerator by the integer den. Factor den into a
  // power of 2 and an odd part: powers of 2 become sqrt2 exponent shifts,
  // the odd part must divide all coefficients.
  std::int64_t odd = den < 0 ? -den : den;
  std::uint32_t twos = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }
  std::array<std::int64_t, 4> v = {num.a(), num.b(), num.c(), num.d()};
  for (auto& coeff : v) {
    if (coeff % odd != 0) return std::nullopt;
    coeff /= odd;
    if (den < 0) coeff = -coeff;
  }
  return ExactScalar(v[0], v[1], v[2], v[3], num.k() + 2 * twos);
}

std::complex<double> ExactScalar::to_complex() const {
  const double s = 1.0 / std::sqrt(2.0);
  const std::complex<double> w(s, s);
  std::complex<double> r = static_cast<double>(a_) + static_cast<double>(b_) * w +
                           static_cast<double>(c_) * (w * w) + static_cast<double>(d_) * (w * w * w);
  return r / std::pow(std::sqrt(2.0), static_cast<double>(k_));
}

std::string ExactScalar::str() const {
  if (is_zero()) return "0";
  std::string num;
  auto term = [&num](std::int64_t coeff, const std::string& unit) {
    if (coeff == 0) return;
    if (!num.empty()) num += coeff > 0 ? "+" : "-";
    else if (coeff < 0) num += "-";
    std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1 || unit.empty()) num += std::to_string(mag);
    num += unit;
  };
  term(a_, "");
  term(b_, "w");
  term(c_, "w^2");
  term(d_, "w^3");
  if (k_ == 0) return num;
  const bool multi = num.find_first_of("+-", 1) != std::string::npos;
  std::string out = multi ? "(" + num + ")" : num;
  return out + "/sqrt2^" + std::to_string(k_);
}

}  // namespace zxcc
