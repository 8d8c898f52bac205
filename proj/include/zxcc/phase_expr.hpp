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

#include <map>
#include <string>

#include "zxcc/phase.hpp"

namespace zxcc {

using Assignment = std::map<std::string, Phase>;

/**
 * A linear phase expression in units of pi: rational constant plus a signed
 * integer combination of named variables, evaluated mod 2.
 */
struct PhaseExpr {
  Rational constant{0};
  std::map<std::string, int> coeffs;

  PhaseExpr() = default;
  explicit PhaseExpr(const Phase& p) : constant(p.value()) {}

  static PhaseExpr variable(const std::string& name, int coeff = 1) {
    PhaseExpr e;
    e.coeffs[name] = coeff;
    return e;
  }

  bool operator==(const PhaseExpr&) const = default;

  bool is_constant() const { return coeffs.empty(); }
  /** True iff the expression is c +/- v for a single variable v. */
  bool is_unifiable() const;

  PhaseExpr operator+(const PhaseExpr& o) const;
  PhaseExpr operator-() const;

  /** Evaluates with every variable bound; throws ZXError on unbound. */
  Phase eval(const Assignment& assign) const;

  /**
   * For a unifiable expression, solves eval = value for its variable and
   * merges into assign; returns false on conflict with an existing binding.
   * Constants just compare.
   */
  bool unify(const Phase& value, Assignment& assign) const;

  std::string str() const;
  /** Parses e.g. "a", "-a", "a+b", "a+1/2", "1/4". */
  static PhaseExpr parse(const std::string& text);
};

}  // namespace zxcc
