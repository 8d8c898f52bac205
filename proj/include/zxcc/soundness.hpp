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

#include "zxcc/matrix.hpp"
#include "zxcc/rule.hpp"

namespace zxcc {

struct SoundnessCounterexample {
  std::vector<int> counts;
  Assignment assignment;
  std::string detail;
};

struct SoundnessReport {
  std::string rule;
  std::size_t instances_checked = 0;
  std::vector<SoundnessCounterexample> counterexamples;
  bool pass() const { return counterexamples.empty(); }
};

/**
 * Checks |[lhs]| ~ |[rhs]| (proportional, exact) for every box
 * instantiation with counts up to arity_bound and every assignment of the
 * rule's variables drawn from the sample phases.
 */
SoundnessReport check_soundness(const RewriteRule& rule, int arity_bound = 4,
                                const std::vector<Phase>& sample_phases = {
                                    Phase(0, 1), Phase(1, 4), Phase(1, 2), Phase(1, 1)});

/** Evaluates one concrete side pair under an assignment; test helper. */
std::pair<Matrix, Matrix> rule_instance_matrices(const RewriteRule& concrete,
                                                 const Assignment& assign);

}  // namespace zxcc
