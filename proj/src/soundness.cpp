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

#include "zxcc/soundness.hpp"

#include <functional>

#include "zxcc/evaluate.hpp"

namespace zxcc {

std::pair<Matrix, Matrix> rule_instance_matrices(const RewriteRule& concrete,
                                                 const Assignment& assign) {
  Diagram lhs = concrete.lhs.to_diagram(assign);
  // rhs boundary order must mirror the lhs order through the boundary map
  Diagram rhs;
  for (const auto& [id, data] : concrete.rhs.vertices()) {
    Phase p = (data.type == VertexType::Z || data.type == VertexType::X)
                  ? data.phase.eval(assign)
                  : Phase();
    rhs.add_vertex_with_id(id, data.type, p);
  }
  for (const auto& [id, e] : concrete.rhs.edges()) rhs.add_edge(e.a, e.b);
  for (VertexId b : concrete.lhs.inputs()) rhs.mark_input(concrete.rhs_partner(b));
  for (VertexId b : concrete.lhs.outputs()) rhs.mark_output(concrete.rhs_partner(b));
  return {evaluate(lhs), evaluate(rhs)};
}

SoundnessReport check_soundness(const RewriteRule& rule, int arity_bound,
                                const std::vector<Phase>& sample_phases) {
  SoundnessReport report;
  report.rule = rule.name;

  std::vector<std::vector<int>> count_tuples;
  std::vector<int> counts(rule.boxes.size(), 0);
  std::function<void(std::size_t)> gen_counts = [&](std::size_t i) {
    if (i == rule.boxes.size()) {
      count_tuples.push_back(counts);
      return;
    }
    const int hi = std::min(arity_bound, rule.boxes[i].max);
    for (int c = 0; c <= hi; ++c) {
      counts[i] = c;
      gen_counts(i + 1);
    }
  };
  gen_counts(0);

  std::vector<std::string> vars = rule.vars;
  std::vector<Assignment> assignments;
  Assignment assign;
  std::function<void(std::size_t)> gen_assign = [&](std::size_t i) {
    if (i == vars.size()) {
      assignments.push_back(assign);
      return;
    }
    for (const Phase& p : sample_phases) {
      assign[vars[i]] = p;
      gen_assign(i + 1);
    }
  };
  gen_assign(0);

  for (const auto& tuple : count_tuples) {
    RewriteRule inst = rule.boxes.empty() ? rule : rule.instantiate(tuple);
    for (const Assignment& a : assignments) {
      ++report.instances_checked;
      auto [lm, rm] = rule_instance_matrices(inst, a);
      ProportionalResult res = proportional_equal(lm, rm);
      if (!res.proportional) {
        std::string detail = "lhs !~ rhs";
        if (!lm.all_zero() && !rm.all_zero()) {
          detail += " (nonzero sides differ)";
        } else {
          detail += " (exactly one side is zero)";
        }
        report.counterexamples.push_back({tuple, a, detail});
      }
    }
  }
  return report;
}

}  // namespace zxcc
