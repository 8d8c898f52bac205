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

#include "zxcc/phase.hpp"

#include <cstdlib>

#include "zxcc/error.hpp"

namespace zxcc {

Rational Phase::normalize(Rational v) {
  // Reduce modulo 2 (i.e. 2*pi) into [0, 2).
  const std::int64_t den = v.denominator();
  std::int64_t num = v.numerator() % (2 * den);
  if (num < 0) num += 2 * den;
  return Rational(num, den);
}

int Phase::quarter_units() const {
  if (!is_quarter_multiple()) {
    throw ZXError("phase " + str() + " is not a multiple of pi/4");
  }
  return static_cast<int>(value_.numerator() * (4 / value_.denominator()));
}

std::string Phase::str() const {
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

Phase Phase::parse(const std::string& text) {
  if (text.empty()) throw FormatError("empty phase string");
  std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    std::int64_t num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) {
      throw FormatError("bad phase: " + text);
    }
    std::int64_t den = 1;
    if (slash != std::string::npos) {
      den = std::stoll(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1) throw FormatError("bad phase: " + text);
    }
    if (den == 0) throw FormatError("zero denominator in phase: " + text);
    return Phase(Rational(num, den));
  } catch (const std::invalid_argument&) {
    throw FormatError("bad phase: " + text);
  } catch (const std::out_of_range&) {
    throw FormatError("phase out of range: " + text);
  }
}

}  // namespace zxcc
