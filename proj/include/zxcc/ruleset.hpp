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

#include <vector>

#include "zxcc/match.hpp"
#include "zxcc/rule.hpp"

namespace zxcc {

/**
 * The shipped axiom set: spider fusion, identity and arity-1 removal,
 * loop and H-loop removal, scalar deletion, pi-commutation, state copying,
 * bialgebra (general and fixed 2x2), hopf, the Euler decompositions of H,
 * H cancellation and colour change. Every rule passes check_soundness.
 */
const std::vector<RewriteRule>& builtin_rules();

bool has_rule(const std::string& name);
const RewriteRule& rule_by_name(const std::string& name);

/** Concrete instance a match was produced against. */
RewriteRule concrete_rule_for(const Match& m);

}  // namespace zxcc
