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

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "zxcc/match.hpp"
#include "zxcc/matrix.hpp"

namespace zxcc {

/**
 * A simplification strategy:
 *   REWRITE(rule)       apply the first match once (no-op when none)
 *   REDUCE(rule)        apply the rule until it stops matching
 *   REDUCE_ALL(rules)   cycle the ruleset in declared order to a fixpoint
 *   SEQ(a, b, ...)      run in order
 *   LOOP(body)          repeat body until an iteration makes zero steps
 */
struct Simproc {
  enum class Kind { Rewrite, Reduce, ReduceAll, Loop, Seq };
  Kind kind = Kind::Seq;
  std::string rule;
  std::vector<std::string> ruleset;
  std::vector<Simproc> children;

  static Simproc rewrite(std::string rule_name);
  static Simproc reduce(std::string rule_name);
  static Simproc reduce_all(std::vector<std::string> rules);
  static Simproc loop(Simproc body);
  static Simproc seq(std::vector<Simproc> steps);
};

struct TraceStep {
  Match match;
  std::uint64_t post_digest = 0;
};

/** A replayable, certifiable rewrite derivation. */
struct ProofTrace {
  std::uint64_t initial_digest = 0;
  std::vector<TraceStep> steps;
  Diagram final;

  nlohmann::ordered_json to_json() const;
  static ProofTrace from_json(const nlohmann::json& j);
};

struct RunOptions {
  std::size_t max_steps = 10000;
  /** Check |[before]| ~ |[after]| on every step (diagrams <= 11 wires). */
  bool certify_steps = false;
};

/** Thrown when the step budget runs out; carries the partial derivation. */
class SimprocBudgetError : public BudgetError {
 public:
  SimprocBudgetError(const std::string& msg, ProofTrace partial)
      : BudgetError(msg), partial_trace(std::move(partial)) {}
  ProofTrace partial_trace;
};

std::pair<Diagram, ProofTrace> run(const Simproc& s, const Diagram& d,
                                   const RunOptions& opts = {});

/**
 * Re-applies every step of a trace to d (which must hash to the trace's
 * initial digest), verifying each post-step digest; returns the final
 * diagram. Throws ZXError naming the first failing step.
 */
Diagram replay(const ProofTrace& t, const Diagram& d);

struct StepCert {
  std::size_t index = 0;
  std::string rule;
  bool reversed = false;
  bool proportional = false;
  std::optional<ExactScalar> witness;
};

struct CertifyReport {
  bool pass = false;
  std::vector<StepCert> steps;
  std::string detail;  // set on failure
};

/** Evaluates every before/after pair of the trace exactly. */
CertifyReport certify(const ProofTrace& t, const Diagram& d);

/** Appends the steps of b to a (b must start where a ends). */
ProofTrace concat_traces(const ProofTrace& a, const ProofTrace& b);

/**
 * Named strategies: basic_simp, reduce_phase_free, push_pauli_x,
 * push_pauli_z. Throws ZXError on unknown names.
 */
Simproc builtin_simproc(const std::string& name);

/**
 * A scripted expansion step: splits spider v in two, keeping the listed
 * half-edges (and phase_a) on the new first spider and the rest (with
 * phase_b) on the second, joined by a fresh edge. phase_a + phase_b must
 * equal v's phase. Returns the match of the inverted fusion rule.
 */
Match make_split_match(const Diagram& d, VertexId v, const std::vector<HalfEdge>& side_a,
                       const Phase& phase_a, const Phase& phase_b);

/** Applies a match as one step of a growing trace. */
Diagram apply_step(ProofTrace& t, const Diagram& d, const Match& m);

}  // namespace zxcc
