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

#include "zxcc/phase_expr.hpp"

#include <cctype>

#include "zxcc/error.hpp"

namespace zxcc {

bool PhaseExpr::is_unifiable() const {
  if (coeffs.size() != 1) return false;
  const int c = coeffs.begin()->second;
  return c == 1 || c == -1;
}

PhaseExpr PhaseExpr::operator+(const PhaseExpr& o) const {
  PhaseExpr r = *this;
  r.constant += o.constant;
  for (const auto& [v, c] : o.coeffs) {
    r.coeffs[v] += c;
    if (r.coeffs[v] == 0) r.coeffs.erase(v);
  }
  return r;
}

PhaseExpr PhaseExpr::operator-() const {
  PhaseExpr r;
  r.constant = -constant;
  for (const auto& [v, c] : coeffs) r.coeffs[v] = -c;
  return r;
}

Phase PhaseExpr::eval(const Assignment& assign) const {
  Rational total = constant;
  for (const auto& [v, c] : coeffs) {
    auto it = assign.find(v);
    if (it == assign.end()) throw ZXError("unbound phase variable: " + v);
    total += Rational(c) * it->second.value();
  }
  return Phase(total);
}

bool PhaseExpr::unify(const Phase& value, Assignment& assign) const {
  if (is_constant()) return Phase(constant) == value;
  if (!is_unifiable()) throw ZXError("phase expression not unifiable: " + str());
  const auto& [name, coeff] = *coeffs.begin();
  // value = c + coeff * v  =>  v = coeff * (value - c)
  Phase solved = coeff == 1 ? Phase(value.value() - constant) : Phase(constant - value.value());
  auto it = assign.find(name);
  if (it != assign.end()) return it->second == solved;
  assign[name] = solved;
  return true;
}

std::string PhaseExpr::str() const {
  std::string out;
  for (const auto& [v, c] : coeffs) {
    for (int i = 0; i < (c < 0 ? -c : c); ++i) {
      if (c > 0 && !out.empty()) out += "+";
      if (c < 0) out += "-";
      out += v;
    }
  }
  if (constant != Rational(0) || out.empty()) {
    Phase p{Rational(constant)};
    if (!out.empty()) out += "+";
    out += p.str();
  }
  return out;
}

PhaseExpr PhaseExpr::parse(const std::string& text) {
  if (text.empty()) throw FormatError("empty phase expression");
  PhaseExpr e;
  std::size_t i = 0;
  int sign = 1;
  while (i < text.size()) {
    if (text[i] == '+') {
      sign = 1;
      ++i;
      continue;
    }
    if (text[i] == '-') {
      sign = -1;
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      const std::string name = text.substr(i, j - i);
      e.coeffs[name] += sign;
      if (e.coeffs[name] == 0) e.coeffs.erase(name);
      i = j;
      sign = 1;
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) {
        ++j;
      }
      Phase p = Phase::parse(text.substr(i, j - i));
      e.constant += Rational(sign) * p.value();
      i = j;
      sign = 1;
    } else {
      throw FormatError("bad phase expression: " + text);
    }
  }
  return e;
}

}  // namespace zxcc
