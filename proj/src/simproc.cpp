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

#include "zxcc/simproc.hpp"

#include <algorithm>

#include "zxcc/evaluate.hpp"
#include "zxcc/json_io.hpp"
#include "zxcc/ruleset.hpp"

namespace zxcc {

Simproc Simproc::rewrite(std::string rule_name) {
  Simproc s;
  s.kind = Kind::Rewrite;
  s.rule = std::move(rule_name);
  return s;
}

Simproc Simproc::reduce(std::string rule_name) {
  Simproc s;
  s.kind = Kind::Reduce;
  s.rule = std::move(rule_name);
  return s;
}

Simproc Simproc::reduce_all(std::vector<std::string> rules) {
  Simproc s;
  s.kind = Kind::ReduceAll;
  s.ruleset = std::move(rules);
  return s;
}

Simproc Simproc::loop(Simproc body) {
  Simproc s;
  s.kind = Kind::Loop;
  s.children.push_back(std::move(body));
  return s;
}

Simproc Simproc::seq(std::vector<Simproc> steps) {
  Simproc s;
  s.kind = Kind::Seq;
  s.children = std::move(steps);
  return s;
}

namespace {

void certify_step(const Diagram& before, const Diagram& after, const std::string& rule) {
  if (before.inputs().size() + before.outputs().size() > 11) return;
  ProportionalResult res = proportional_equal(evaluate(after), evaluate(before));
  if (!res.proportional) {
    throw ZXError("certifying run: step with rule " + rule + " is not semantics-preserving");
  }
}

struct Runner {
  Diagram cur;
  ProofTrace trace;
  RunOptions opts;
  std::size_t steps_taken = 0;

  void take(const Match& m) {
    if (steps_taken >= opts.max_steps) {
      trace.final = cur;
      throw SimprocBudgetError(
          "step budget of " + std::to_string(opts.max_steps) + " exceeded", trace);
    }
    RewriteRule inst = concrete_rule_for(m);
    ApplyResult res = apply_match(inst, m, cur);
    if (opts.certify_steps) certify_step(cur, res.diagram, m.rule);
    ++steps_taken;
    cur = res.diagram;
    trace.steps.push_back({res.match, cur.digest()});
  }

  bool apply_first(const std::string& rule_name) {
    const RewriteRule& base = rule_by_name(rule_name);
    std::vector<Match> ms = find_matches_any(base, cur);
    if (ms.empty()) return false;
    take(ms.front());
    return true;
  }

  bool exec(const Simproc& s) {
    bool any = false;
    switch (s.kind) {
      case Simproc::Kind::Rewrite:
        any = apply_first(s.rule);
        break;
      case Simproc::Kind::Reduce:
        while (apply_first(s.rule)) any = true;
        break;
      case Simproc::Kind::ReduceAll: {
        bool progress = true;
        while (progress) {
          progress = false;
          for (const std::string& r : s.ruleset) {
            while (apply_first(r)) {
              progress = true;
              any = true;
            }
          }
        }
        break;
      }
      case Simproc::Kind::Seq:
        for (const Simproc& child : s.children) {
          if (exec(child)) any = true;
        }
        break;
      case Simproc::Kind::Loop:
        while (exec(s.children.front())) any = true;
        break;
    }
    return any;
  }
};

}  // namespace

std::pair<Diagram, ProofTrace> run(const Simproc& s, const Diagram& d, const RunOptions& opts) {
  Runner runner;
  runner.cur = d;
  runner.opts = opts;
  runner.trace.initial_digest = d.digest();
  runner.exec(s);
  runner.trace.final = runner.cur;
  return {runner.cur, runner.trace};
}

Diagram apply_step(ProofTrace& t, const Diagram& d, const Match& m) {
  RewriteRule inst = concrete_rule_for(m);
  ApplyResult res = apply_match(inst, m, d);
  t.steps.push_back({res.match, res.diagram.digest()});
  return res.diagram;
}

Diagram replay(const ProofTrace& t, const Diagram& d) {
  if (d.digest() != t.initial_digest) {
    throw ZXError("replay: diagram digest does not match the trace's initial digest");
  }
  Diagram cur = d;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& step = t.steps[i];
    RewriteRule inst = concrete_rule_for(step.match);
    ApplyResult res;
    try {
      res = apply_match(inst, step.match, cur);
    } catch (const ZXError& e) {
      throw ZXError("replay: step " + std::to_string(i) + " failed: " + e.what());
    }
    cur = res.diagram;
    if (cur.digest() != step.post_digest) {
      throw ZXError("replay: digest mismatch after step " + std::to_string(i) + " (rule " +
                    step.match.rule + ")");
    }
  }
  return cur;
}

CertifyReport certify(const ProofTrace& t, const Diagram& d) {
  CertifyReport report;
  if (d.digest() != t.initial_digest) {
    report.detail = "initial digest mismatch";
    return report;
  }
  if (d.inputs().size() + d.outputs().size() > 11) {
    report.detail = "diagram exceeds the 11-wire certification bound";
    return report;
  }
  Diagram cur = d;
  Matrix cur_matrix = evaluate(cur);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& step = t.steps[i];
    RewriteRule inst = concrete_rule_for(step.match);
    Diagram next;
    try {
      next = apply_match(inst, step.match, cur).diagram;
    } catch (const ZXError& e) {
      report.detail = "step " + std::to_string(i) + " failed to apply: " + e.what();
      return report;
    }
    if (next.digest() != step.post_digest) {
      report.detail = "step " + std::to_string(i) + " digest mismatch (rule " + step.match.rule +
                      ")";
      return report;
    }
    Matrix next_matrix = evaluate(next);
    ProportionalResult res = proportional_equal(next_matrix, cur_matrix);
    StepCert sc;
    sc.index = i;
    sc.rule = step.match.rule;
    sc.reversed = step.match.reversed;
    sc.proportional = res.proportional;
    sc.witness = res.witness;
    report.steps.push_back(sc);
    if (!res.proportional) {
      report.detail = "step " + std::to_string(i) + " (rule " + step.match.rule +
                      ") is not proportional";
      return report;
    }
    cur = std::move(next);
    cur_matrix = std::move(next_matrix);
  }
  report.pass = true;
  return report;
}

ProofTrace concat_traces(const ProofTrace& a, const ProofTrace& b) {
  if (!a.steps.empty() && b.initial_digest != a.steps.back().post_digest) {
    throw ZXError("concat_traces: b does not start at a's final diagram");
  }
  if (a.steps.empty() && b.initial_digest != a.initial_digest) {
    throw ZXError("concat_traces: b does not start at a's initial diagram");
  }
  ProofTrace out = a;
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  out.final = b.final;
  return out;
}

Simproc builtin_simproc(const std::string& name) {
  if (name == "push_pauli_x") {
    return Simproc::loop(Simproc::seq({
        Simproc::reduce_all({"red_copy", "red_sp", "green_sp", "hopf", "red_scalar",
                             "green_scalar", "green_id", "red_id", "red_loop", "green_loop"}),
        Simproc::rewrite("red_pi"),
        Simproc::reduce("red_sp"),
    }));
  }
  if (name == "push_pauli_z") {
    return Simproc::loop(Simproc::seq({
        Simproc::reduce_all({"green_copy", "green_sp", "red_sp", "hopf", "green_scalar",
                             "red_scalar", "red_id", "green_id", "green_loop", "red_loop"}),
        Simproc::rewrite("green_pi"),
        Simproc::reduce("green_sp"),
    }));
  }
  if (name == "reduce_phase_free") {
    // bialgebra and hopf run before the spider fusions so that freshly
    // unspidered configurations are consumed rather than refused
    return Simproc::loop(Simproc::reduce_all(
        {"gen_bialg_simp", "hopf", "green_scalar", "red_scalar", "green_loop", "red_loop",
         "green_id", "red_id", "green_elim", "red_elim", "green_copy", "red_copy", "green_sp",
         "red_sp"}));
  }
  if (name == "basic_simp") {
    return Simproc::reduce_all({"green_sp", "red_sp", "green_id", "red_id", "green_elim",
                                "red_elim", "green_loop", "red_loop", "green_scalar",
                                "red_scalar", "green_copy", "red_copy", "hopf"});
  }
  throw ZXError("unknown simproc: " + name);
}

Match make_split_match(const Diagram& d, VertexId v, const std::vector<HalfEdge>& side_a,
                       const Phase& phase_a, const Phase& phase_b) {
  const VertexData& vd = d.vertex(v);
  if (vd.type != VertexType::Z && vd.type != VertexType::X) {
    throw ZXError("make_split_match: vertex is not a spider");
  }
  if (!(phase_a + phase_b == vd.phase)) {
    throw ZXError("make_split_match: phases do not sum to the spider phase");
  }
  const auto halves = d.half_edges_at(v);
  std::vector<HalfEdge> side_b;
  for (const HalfEdge& h : halves) {
    if (std::find(side_a.begin(), side_a.end(), h) == side_a.end()) side_b.push_back(h);
  }
  if (side_a.size() + side_b.size() != halves.size()) {
    throw ZXError("make_split_match: side_a contains half-edges not at the vertex");
  }

  Match m;
  m.rule = vd.type == VertexType::Z ? "green_sp" : "red_sp";
  m.counts = {static_cast<int>(side_a.size()), static_cast<int>(side_b.size())};
  m.reversed = true;
  m.target_digest = d.digest();
  m.assignment = {{"a", phase_a}, {"b", phase_b}};

  RewriteRule inst = concrete_rule_for(m);  // inverted fusion instance
  const auto interior = inst.lhs.interior();
  if (interior.size() != 1) throw ZXError("make_split_match: unexpected rule shape");
  m.vertex_map[interior.front()] = v;
  // box 0 legs are the rule's inputs (side a), box 1 legs its outputs
  const auto& ins = inst.lhs.inputs();
  const auto& outs = inst.lhs.outputs();
  if (ins.size() != side_a.size() || outs.size() != side_b.size()) {
    throw ZXError("make_split_match: leg count mismatch");
  }
  for (std::size_t i = 0; i < ins.size(); ++i) {
    m.attachments.push_back({ins[i], side_a[i].edge, side_a[i].end});
  }
  for (std::size_t i = 0; i < outs.size(); ++i) {
    m.attachments.push_back({outs[i], side_b[i].edge, side_b[i].end});
  }
  return m;
}

// Trace JSON ------------------------------------------------------------------

nlohmann::ordered_json ProofTrace::to_json() const {
  nlohmann::ordered_json j;
  j["initial"] = std::to_string(initial_digest);
  nlohmann::ordered_json steps_json = nlohmann::json::array();
  for (const TraceStep& s : steps) {
    nlohmann::ordered_json step;
    step["rule"] = s.match.rule;
    step["dir"] = s.match.reversed ? "rev" : "fwd";
    step["match"] = s.match.to_json();
    step["post"] = std::to_string(s.post_digest);
    steps_json.push_back(step);
  }
  j["steps"] = steps_json;
  j["final"] = diagram_to_json(final);
  return j;
}

ProofTrace ProofTrace::from_json(const nlohmann::json& j) {
  try {
    ProofTrace t;
    t.initial_digest = std::stoull(j.at("initial").get<std::string>());
    for (const auto& step : j.at("steps")) {
      TraceStep s;
      s.match = Match::from_json(step.at("match"));
      s.post_digest = std::stoull(step.at("post").get<std::string>());
      t.steps.push_back(std::move(s));
    }
    t.final = diagram_from_json(j.at("final"));
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("trace JSON: ") + e.what());
  }
}

}  // namespace zxcc
