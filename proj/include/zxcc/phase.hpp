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

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace zxcc {

using Rational = boost::rational<std::int64_t>;

/**
 * A spider phase in units of pi, stored as a reduced rational normalized
 * into [0, 2). All arithmetic is exact.
 */
class Phase {
 public:
  Phase() : value_(0) {}
  explicit Phase(const Rational& value_in_pi) : value_(normalize(value_in_pi)) {}
  Phase(std::int64_t num, std::int64_t den) : value_(normalize(Rational(num, den))) {}

  static Phase zero() { return Phase(); }
  static Phase pi() { return Phase(1, 1); }
  static Phase quarter(std::int64_t quarters) { return Phase(quarters, 4); }

  const Rational& value() const { return value_; }

  Phase operator+(const Phase& other) const { return Phase(value_ + other.value_); }
  Phase operator-(const Phase& other) const { return Phase(value_ - other.value_); }
  Phase operator-() const { return Phase(-value_); }

  bool operator==(const Phase& other) const = default;
  bool operator<(const Phase& other) const { return value_ < other.value_; }

  bool is_zero() const { return value_ == Rational(0); }
  bool is_pi() const { return value_ == Rational(1); }

  /** True iff the phase is an integer multiple of pi/4. */
  bool is_quarter_multiple() const { return 4 % value_.denominator() == 0; }

  /** Number of pi/4 units in [0, 8); only valid if is_quarter_multiple(). */
  int quarter_units() const;

  /** Renders "p/q" (or "p" when the denominator is 1). */
  std::string str() const;

  /** Parses "p/q" or "p"; throws FormatError on junk. */
  static Phase parse(const std::string& text);

 private:
  static Rational normalize(Rational v);
  Rational value_;
};

}  // namespace zxcc
