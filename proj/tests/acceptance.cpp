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

// End-to-end acceptance suite: one pass/fail line per criterion, exact
// (zero-tolerance) checks throughout, exit status 0 only when all pass.

#include <iostream>

#include "random_diagrams.hpp"
#include "zxcc/colour_code.hpp"
#include "zxcc/evaluate.hpp"
#include "zxcc/ruleset.hpp"
#include "zxcc/simproc.hpp"
#include "zxcc/soundness.hpp"

using namespace zxcc;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& note = "") {
  std::cout << "[" << index << "/9] " << name << ": " << (pass ? "PASS" : "FAIL");
  if (!note.empty()) std::cout << "  (" << note << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

bool pauli_equations_hold() {
  for (const char* eq : {"x1", "x2", "x3", "z1", "z2", "z3"}) {
    code::Report r = code::verify_pauli(eq);
    if (!r.pass) return false;
  }
  return true;
}

bool rule_soundness_with_mutation() {
  for (const RewriteRule& r : builtin_rules()) {
    if (!check_soundness(r, 4).pass()) return false;
  }
  // mutation check: corrupt the Euler decomposition and expect a counterexample
  RewriteRule broken = rule_by_name("euler");
  broken.name = "euler_corrupted";
  broken.rhs = RuleGraph();
  VertexId s1 = broken.rhs.add_vertex_with_id(100, VertexType::Z, PhaseExpr(Phase(1, 4)));
  VertexId s2 = broken.rhs.add_vertex_with_id(101, VertexType::X, PhaseExpr(Phase(1, 2)));
  VertexId s3 = broken.rhs.add_vertex_with_id(104, VertexType::Z, PhaseExpr(Phase(1, 2)));
  VertexId c1 = broken.rhs.add_vertex_with_id(102, VertexType::Boundary);
  VertexId c2 = broken.rhs.add_vertex_with_id(103, VertexType::Boundary);
  broken.rhs.mark_input(c1);
  broken.rhs.mark_output(c2);
  broken.rhs.add_edge(c1, s1);
  broken.rhs.add_edge(s1, s2);
  broken.rhs.add_edge(s2, s3);
  broken.rhs.add_edge(s3, c2);
  return !check_soundness(broken).pass();
}

bool engine_properties() {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 200; ++i) {
    const std::size_t mid = rng() % 3;
    Diagram a = testing::random_diagram(rng, rng() % 3, mid, 8);
    Diagram b = testing::random_diagram(rng, mid, rng() % 3, 8);
    if (!(evaluate(compose(a, b)) == evaluate(b) * evaluate(a))) return false;
    if (!(evaluate(adjoint(a)) == evaluate(a).dagger())) return false;
    if (max_abs_diff(evaluate(a), evaluate_float(a)) >= 1e-9) return false;
    if (i % 10 == 0) {
      auto m1 = find_matches_any(rule_by_name("green_sp"), a);
      auto m2 = find_matches_any(rule_by_name("green_sp"), a);
      if (m1.size() != m2.size()) return false;
      auto [r1, t1] = run(builtin_simproc("basic_simp"), a);
      auto [r2, t2] = run(builtin_simproc("basic_simp"), a);
      if (t1.steps.size() != t2.steps.size()) return false;
      if (!(r1.canonical_string() == r2.canonical_string())) return false;
      if (!certify(t1, a).pass) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  try {
    report(1, "rule-soundness (arities <= 4, phases {0, pi/4, pi/2, pi}, mutation caught)",
           rule_soundness_with_mutation());
    {
      code::Report r = code::verify_enc_dec();
      report(2, "enc-dec identity (exact semantics + certified rewrite)", r.pass);
    }
    {
      code::Report r = code::verify_codewords();
      std::string note;
      for (const std::string& line : r.details) {
        if (line.rfind("logical wire permutation", 0) == 0) note = line;
      }
      report(3, "codeword table reproduction (common scalar, documented permutation)", r.pass,
             note);
    }
    report(4, "transversal Paulis x1..z3 (exact + push_pauli reducts)", pauli_equations_hold());
    {
      code::Report r = code::verify_cnot();
      std::string note;
      for (const std::string& line : r.details) {
        if (line.find("rewrite:") != std::string::npos) note = line.substr(line.rfind("(") + 1);
      }
      if (!note.empty() && note.back() == ')') note.pop_back();
      report(5, "logical CNOT via <=5 physical CNOTs (exact + certified rewrite + variants)",
             r.pass, note);
    }
    {
      code::Report r = code::verify_ccz();
      report(6, "transversal-T CCZ (8 state equations, basis sum, full matrix)", r.pass);
    }
    {
      code::Report r = code::verify_enc_circuit();
      report(7, "encoder circuit (5 ancillas, unitary embedding, certified trace)", r.pass);
    }
    report(8, "engine properties (determinism, certification, functoriality, float agreement)",
           engine_properties());
    {
      code::Report r = code::verify_distance2();
      report(9, "distance-2 smoke (16 errors vs 64 logical layers, exact)", r.pass);
    }
  } catch (const std::exception& e) {
    std::cout << "acceptance suite aborted: " << e.what() << std::endl;
    return 1;
  }
  if (failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << failures << " acceptance criteria failed" << std::endl;
  return 1;
}
