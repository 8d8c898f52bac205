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

#include "zxcc/colour_code.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>

#include "zxcc/error.hpp"
#include "zxcc/evaluate.hpp"
#include "zxcc/ruleset.hpp"
#include "zxcc/soundness.hpp"

namespace zxcc::code {

const std::map<int, std::set<int>>& x_support() {
  static const std::map<int, std::set<int>> s = {
      {1, {1, 3, 5, 7}}, {2, {1, 2, 5, 6}}, {3, {1, 2, 3, 4}}};
  return s;
}

const std::map<int, std::set<int>>& z_support() {
  static const std::map<int, std::set<int>> s = {{1, {1, 2}}, {2, {1, 3}}, {3, {1, 5}}};
  return s;
}

int rail_wire(int logical) {
  // the unique physical wire in exactly this logical's X support
  switch (logical) {
    case 1: return 7;
    case 2: return 6;
    case 3: return 4;
  }
  throw ZXError("logical index out of range");
}

// Fixtures --------------------------------------------------------------------

Diagram build_enc() {
  Diagram d;
  std::vector<VertexId> in(kLogical + 1), out(kPhysical + 1);
  for (int j = 1; j <= kLogical; ++j) in[static_cast<std::size_t>(j)] = d.add_input();
  for (int w = 1; w <= kPhysical; ++w) out[static_cast<std::size_t>(w)] = d.add_output();

  VertexId ghz = d.add_vertex(VertexType::Z);
  std::vector<VertexId> gadget(kLogical + 1);
  for (int j = 1; j <= kLogical; ++j) {
    VertexId g = d.add_vertex(VertexType::Z);
    gadget[static_cast<std::size_t>(j)] = g;
    d.add_edge(in[static_cast<std::size_t>(j)], g);
    // the copy rail ends in a projection onto |+>
    VertexId cap = d.add_vertex(VertexType::Z);
    d.add_edge(g, cap);
  }
  for (int w = 1; w <= kPhysical; ++w) {
    VertexId prev = ghz;
    for (int j = 1; j <= kLogical; ++j) {
      if (!x_support().at(j).count(w)) continue;
      VertexId flip = d.add_vertex(VertexType::X);
      d.add_edge(prev, flip);
      d.add_edge(gadget[static_cast<std::size_t>(j)], flip);
      prev = flip;
    }
    d.add_edge(prev, out[static_cast<std::size_t>(w)]);
  }
  d.validate();
  return d;
}

Diagram build_dec() { return adjoint(build_enc()); }

Diagram pauli_layer(int n_wires, VertexType color, const std::set<int>& wires) {
  Diagram d;
  for (int w = 1; w <= n_wires; ++w) {
    VertexId i = d.add_input();
    VertexId o = d.add_output();
    if (wires.count(w)) {
      VertexId p = d.add_vertex(color, Phase::pi());
      d.add_edge(i, p);
      d.add_edge(p, o);
    } else {
      d.add_edge(i, o);
    }
  }
  return d;
}

Diagram phase_layer(int n_wires, const std::vector<Phase>& phases) {
  if (static_cast<int>(phases.size()) != n_wires) throw ArityError("phase_layer length mismatch");
  Diagram d;
  for (int w = 1; w <= n_wires; ++w) {
    VertexId i = d.add_input();
    VertexId o = d.add_output();
    const Phase& p = phases[static_cast<std::size_t>(w - 1)];
    if (p.is_zero()) {
      d.add_edge(i, o);
    } else {
      VertexId g = d.add_vertex(VertexType::Z, p);
      d.add_edge(i, g);
      d.add_edge(g, o);
    }
  }
  return d;
}

Diagram cnot_gate(int n_wires, int control, int target) {
  if (control == target || control < 1 || target < 1 || control > n_wires || target > n_wires) {
    throw ArityError("bad CNOT wires");
  }
  Diagram d;
  VertexId ctrl = 0, tgt = 0;
  for (int w = 1; w <= n_wires; ++w) {
    VertexId i = d.add_input();
    VertexId o = d.add_output();
    if (w == control) {
      ctrl = d.add_vertex(VertexType::Z);
      d.add_edge(i, ctrl);
      d.add_edge(ctrl, o);
    } else if (w == target) {
      tgt = d.add_vertex(VertexType::X);
      d.add_edge(i, tgt);
      d.add_edge(tgt, o);
    } else {
      d.add_edge(i, o);
    }
  }
  d.add_edge(ctrl, tgt);
  return d;
}

Diagram cnot_logical(int control, int target) { return cnot_gate(kLogical, control, target); }

Diagram ccz_logical() {
  const Phase t(1, 4), tdg(-1, 4), z0(0, 1);
  Diagram d = phase_layer(3, {t, t, t});
  auto step = [&d](const Diagram& layer) { d = compose(d, layer); };
  step(cnot_gate(3, 1, 3));
  step(phase_layer(3, {z0, z0, tdg}));
  step(cnot_gate(3, 2, 3));
  step(phase_layer(3, {z0, z0, t}));
  step(cnot_gate(3, 1, 3));
  step(phase_layer(3, {z0, z0, tdg}));
  step(cnot_gate(3, 2, 3));
  step(cnot_gate(3, 1, 2));
  step(phase_layer(3, {z0, tdg, z0}));
  step(cnot_gate(3, 1, 2));
  return d;
}

Diagram ccz_physical() {
  const Phase t(1, 4), tdg(-1, 4);
  return phase_layer(kPhysical, {t, tdg, tdg, t, tdg, t, t, tdg});
}

// Physical CNOT search ----------------------------------------------------------

namespace {

// 8x4 GF(2) matrix packed row-major into 32 bits; columns are the three
// X supports plus the all-ones stabilizer.
using GfState = std::uint32_t;

GfState support_matrix() {
  GfState s = 0;
  for (int w = 1; w <= kPhysical; ++w) {
    for (int j = 1; j <= kLogical; ++j) {
      if (x_support().at(j).count(w)) s |= 1u << ((w - 1) * 4 + (j - 1));
    }
    s |= 1u << ((w - 1) * 4 + 3);
  }
  return s;
}

GfState apply_physical_cnot(GfState s, int control, int target) {
  const std::uint32_t row_c = (s >> ((control - 1) * 4)) & 0xFu;
  return s ^ (row_c << ((target - 1) * 4));
}

GfState logical_goal(GfState b, int control, int target) {
  // column (control-1) gains column (target-1)
  GfState out = 0;
  for (int w = 0; w < kPhysical; ++w) {
    std::uint32_t row = (b >> (w * 4)) & 0xFu;
    const std::uint32_t tbit = (row >> (target - 1)) & 1u;
    row ^= tbit << (control - 1);
    out |= row << (w * 4);
  }
  return out;
}

using GateSeq = std::vector<std::pair<int, int>>;

std::map<GfState, GateSeq> bfs_states(GfState start, int depth) {
  std::map<GfState, GateSeq> seen;
  seen[start] = {};
  std::deque<GfState> frontier = {start};
  for (int d = 0; d < depth; ++d) {
    std::deque<GfState> next;
    for (GfState s : frontier) {
      GateSeq base = seen.at(s);
      if (static_cast<int>(base.size()) != d) continue;
      for (int c = 1; c <= kPhysical; ++c) {
        for (int t = 1; t <= kPhysical; ++t) {
          if (c == t) continue;
          GfState ns = apply_physical_cnot(s, c, t);
          if (seen.count(ns)) continue;
          GateSeq seq = base;
          seq.emplace_back(c, t);
          seen[ns] = std::move(seq);
          next.push_back(ns);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

std::vector<std::pair<int, int>> derive_cnot_gates(int control, int target) {
  if (control == target || control < 1 || control > 3 || target < 1 || target > 3) {
    throw ArityError("logical CNOT indices must be distinct and in 1..3");
  }
  const GfState b = support_matrix();
  const GfState goal = logical_goal(b, control, target);
  auto forward = bfs_states(b, 3);
  auto backward = bfs_states(goal, 2);

  std::optional<GateSeq> best;
  for (const auto& [state, fseq] : forward) {
    auto it = backward.find(state);
    if (it == backward.end()) continue;
    GateSeq total = fseq;
    GateSeq back = it->second;
    std::reverse(back.begin(), back.end());
    total.insert(total.end(), back.begin(), back.end());
    if (!best || total.size() < best->size() ||
        (total.size() == best->size() && total < *best)) {
      best = std::move(total);
    }
  }
  if (!best) {
    throw ZXError("physical CNOT search exhausted (wire convention bug?)");
  }
  return *best;
}

Diagram derive_cnot_physical(int control, int target) {
  Diagram d = Diagram::identity(kPhysical);
  for (const auto& [c, t] : derive_cnot_gates(control, target)) {
    d = compose(d, cnot_gate(kPhysical, c, t));
  }
  return d;
}

// Encoder circuit ----------------------------------------------------------------

namespace {

/** Global gate order of the encoder circuit: logical fans, then GHZ fan. */
std::vector<std::pair<int, int>> encoder_gates() {
  std::vector<std::pair<int, int>> gates;
  for (int j = 1; j <= kLogical; ++j) {
    for (int w = 1; w <= kPhysical; ++w) {
      if (w == rail_wire(j) || !x_support().at(j).count(w)) continue;
      gates.emplace_back(rail_wire(j), w);
    }
  }
  for (int w = 1; w < kPhysical; ++w) gates.emplace_back(kPhysical, w);
  return gates;
}

Diagram encoder_circuit_impl(bool with_preps) {
  Diagram d;
  std::array<VertexId, kPhysical + 1> head{};  // current right end of each wire
  std::vector<VertexId> logical_in(kLogical + 1);
  if (with_preps) {
    for (int j = 1; j <= kLogical; ++j) logical_in[static_cast<std::size_t>(j)] = d.add_input();
  }
  for (int w = 1; w <= kPhysical; ++w) {
    const int rail = (w == 7) ? 1 : (w == 6) ? 2 : (w == 4) ? 3 : 0;
    if (rail != 0 && with_preps) {
      head[static_cast<std::size_t>(w)] = logical_in[static_cast<std::size_t>(rail)];
    } else if (!with_preps) {
      head[static_cast<std::size_t>(w)] = d.add_input();
    } else if (w == kPhysical) {
      head[static_cast<std::size_t>(w)] = d.add_vertex(VertexType::Z);  // |+> prep
    } else {
      head[static_cast<std::size_t>(w)] = d.add_vertex(VertexType::X);  // |0> prep
    }
  }
  for (const auto& [c, t] : encoder_gates()) {
    VertexId ctrl = d.add_vertex(VertexType::Z);
    VertexId tgt = d.add_vertex(VertexType::X);
    d.add_edge(head[static_cast<std::size_t>(c)], ctrl);
    d.add_edge(head[static_cast<std::size_t>(t)], tgt);
    d.add_edge(ctrl, tgt);
    head[static_cast<std::size_t>(c)] = ctrl;
    head[static_cast<std::size_t>(t)] = tgt;
  }
  for (int w = 1; w <= kPhysical; ++w) {
    VertexId out = d.add_output();
    d.add_edge(head[static_cast<std::size_t>(w)], out);
  }
  d.validate();
  return d;
}

}  // namespace

Diagram encoder_circuit() { return encoder_circuit_impl(true); }
Diagram encoder_circuit_gates() { return encoder_circuit_impl(false); }

namespace {

VertexId boundary_neighbor(const Diagram& d, VertexId b) {
  return d.other_endpoint(d.half_edges_at(b).front().edge, b);
}

HalfEdge half_toward(const Diagram& d, VertexId v, VertexId other) {
  auto edges = d.edges_between(v, other);
  if (edges.empty()) throw ZXError("expected an edge between vertices");
  EdgeId e = edges.front();
  return {e, d.endpoint(e, 0) == v ? 0 : 1};
}

}  // namespace

std::pair<Diagram, ProofTrace> derive_encoder_circuit() {
  Diagram enc = build_enc();
  auto fused = run(builtin_simproc("reduce_phase_free"), enc);
  Diagram cur = std::move(fused.first);
  ProofTrace trace = std::move(fused.second);

  auto split = [&](VertexId v, const std::vector<HalfEdge>& side_a) {
    Match m = make_split_match(cur, v, side_a, Phase(), Phase());
    cur = apply_step(trace, cur, m);
    const auto& ids = trace.steps.back().match.rhs_vertex_ids;
    return std::make_pair(ids.at(0), ids.at(1));  // (side_a spider, rest)
  };

  // the fan-target red on wire w is the interior neighbor of output w
  auto wire_red = [&](int w) { return boundary_neighbor(cur, cur.outputs()[w - 1]); };

  // 1. unfuse each logical copy gadget into a chain of CNOT controls
  std::map<int, std::map<int, VertexId>> control_on;  // wire -> logical -> control vertex
  for (int j = 1; j <= kLogical; ++j) {
    std::vector<int> targets;
    for (int w : x_support().at(j)) {
      if (w != rail_wire(j)) targets.push_back(w);
    }
    VertexId prev = cur.inputs()[static_cast<std::size_t>(j - 1)];
    VertexId rest = boundary_neighbor(cur, prev);
    for (std::size_t k = 0; k + 1 < targets.size(); ++k) {
      auto [ctrl, next] =
          split(rest, {half_toward(cur, rest, prev), half_toward(cur, rest, wire_red(targets[k]))});
      control_on[targets[k]][j] = ctrl;
      prev = ctrl;
      rest = next;
    }
    control_on[targets.back()][j] = rest;
  }

  // 2. unfuse each wire's red into |0> prep plus a chain of CNOT targets,
  // leaving the GHZ-fan target as the remainder
  for (int w : {1, 2, 3, 5}) {
    VertexId rest = wire_red(w);
    auto [prep, with_prep] = split(rest, {});
    rest = with_prep;
    VertexId prev = prep;
    std::vector<int> controls;
    for (int j = 1; j <= kLogical; ++j) {
      if (x_support().at(j).count(w)) controls.push_back(j);
    }
    for (std::size_t k = 0; k < controls.size(); ++k) {
      auto [tgt, next] = split(
          rest,
          {half_toward(cur, rest, prev), half_toward(cur, rest, control_on[w][controls[k]])});
      prev = tgt;
      rest = next;
    }
  }

  // 3. unfuse the GHZ spine into a |+> prep plus the fan of CNOT controls
  VertexId spine = boundary_neighbor(cur, cur.outputs()[kPhysical - 1]);
  auto [plus_prep, fan] = split(spine, {});
  VertexId prev = plus_prep;
  VertexId rest = fan;
  for (int w = 1; w <= kPhysical - 2; ++w) {
    auto [ctrl, next] =
        split(rest, {half_toward(cur, rest, prev), half_toward(cur, rest, wire_red(w))});
    prev = ctrl;
    rest = next;
  }

  trace.final = cur;
  return {cur, trace};
}

const std::vector<Codeword>& codeword_table() {
  static const std::vector<Codeword> table = {
      {"000", "00000000", "11111111"}, {"001", "10101010", "01010101"},
      {"010", "11001100", "00110011"}, {"011", "01100110", "10011001"},
      {"100", "11110000", "00001111"}, {"101", "01011010", "10100101"},
      {"110", "00111100", "11000011"}, {"111", "10010110", "01101001"}};
  return table;
}

// Verification ------------------------------------------------------------------

namespace {

Report make_report(const std::string& name) {
  Report r;
  r.name = name;
  return r;
}

std::string witness_str(const ProportionalResult& res) {
  if (!res.proportional) return "";
  return res.witness ? res.witness->str() : "(cross-multiplication)";
}

bool check(Report& r, bool cond, const std::string& what) {
  r.details.push_back(std::string(cond ? "ok: " : "FAIL: ") + what);
  return cond;
}

Diagram enc_conjugate(const Diagram& middle) {
  return compose(compose(build_enc(), middle), build_dec());
}

}  // namespace

Report verify_rules_for(const std::vector<RewriteRule>& rules) {
  Report r = make_report("rules");
  bool all = true;
  std::size_t checked = 0;
  for (const RewriteRule& rule : rules) {
    SoundnessReport sr = check_soundness(rule);
    checked += sr.instances_checked;
    if (!sr.pass()) {
      all = false;
      r.details.push_back("FAIL: rule " + rule.name + " has " +
                          std::to_string(sr.counterexamples.size()) + " counterexample(s)");
    }
  }
  r.details.push_back("checked " + std::to_string(checked) + " rule instances");
  r.pass = all;
  return r;
}

Report verify_rules() { return verify_rules_for(builtin_rules()); }

Report verify_enc_dec() {
  Report r = make_report("enc-dec");
  Diagram enc = build_enc();
  Diagram dec = build_dec();
  Diagram both = compose(enc, dec);

  bool ok = true;
  Matrix m = evaluate(both);
  ProportionalResult sem = proportional_equal(m, Matrix::identity(8));
  ok &= check(r, sem.proportional, "semantic: |[Enc;Dec]| ~ id_3");
  if (sem.proportional) r.witness = witness_str(sem);

  Matrix e = evaluate(enc);
  ProportionalResult iso = proportional_equal(e.dagger() * e, Matrix::identity(8));
  ok &= check(r, iso.proportional, "isometry: Enc'Enc ~ id_3");

  auto [reduced, trace] = run(builtin_simproc("reduce_phase_free"), both);
  ok &= check(r, iso_equal(reduced, Diagram::identity(3)),
              "rewrite: reduce_phase_free reaches the 3-wire identity (" +
                  std::to_string(trace.steps.size()) + " steps)");
  CertifyReport cert = certify(trace, both);
  ok &= check(r, cert.pass, "trace certified step-by-step");

  r.pass = ok;
  return r;
}

Report verify_codewords() {
  Report r = make_report("codewords");
  Matrix e = evaluate(build_enc());

  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::optional<std::array<int, 3>> found;
  for (const auto& perm : perms) {
    Matrix ours(256, 8), expected(256, 8);
    for (std::size_t row = 0; row < codeword_table().size(); ++row) {
      const Codeword& cw = codeword_table()[row];
      std::string mine = "...";
      for (int i = 0; i < 3; ++i) mine[static_cast<std::size_t>(i)] = cw.logical[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      std::size_t col = std::stoul(mine, nullptr, 2);
      std::size_t paper_col = std::stoul(cw.logical, nullptr, 2);
      for (std::size_t i = 0; i < 256; ++i) ours.at(i, paper_col) = e.at(i, col);
      expected.at(std::stoul(cw.first, nullptr, 2), paper_col) = ExactScalar::one();
      expected.at(std::stoul(cw.second, nullptr, 2), paper_col) = ExactScalar::one();
    }
    ProportionalResult res = proportional_equal(ours, expected);
    if (res.proportional) {
      found = perm;
      r.witness = witness_str(res);
      break;
    }
  }
  if (found) {
    std::string desc;
    for (int i : *found) desc += std::to_string(i + 1);
    r.details.push_back("ok: all 8 codewords match with one common scalar");
    r.details.push_back("logical wire permutation (ours <- table position): " + desc);
    r.pass = true;
  } else {
    r.details.push_back("FAIL: no logical-wire permutation reproduces the table");
  }
  return r;
}

Report verify_pauli(const std::string& which) {
  Report r = make_report("pauli-" + which);
  if (which.size() != 2 || (which[0] != 'x' && which[0] != 'z') || which[1] < '1' ||
      which[1] > '3') {
    r.details.push_back("FAIL: unknown equation " + which);
    return r;
  }
  const bool is_x = which[0] == 'x';
  // equations are numbered from the last logical factor: x1 acts on logical 3
  const int eq = which[1] - '0';
  const int logical = 4 - eq;
  const VertexType color = is_x ? VertexType::X : VertexType::Z;
  const std::set<int>& support = (is_x ? x_support() : z_support()).at(logical);

  Diagram enc = build_enc();
  Diagram lhs = compose(pauli_layer(kLogical, color, {logical}), enc);
  Diagram rhs = compose(enc, pauli_layer(kPhysical, color, support));

  bool ok = true;
  ProportionalResult sem = proportional_equal(evaluate(lhs), evaluate(rhs));
  ok &= check(r, sem.proportional, "semantic: both sides proportional");
  if (sem.proportional) r.witness = witness_str(sem);

  Simproc sp = builtin_simproc(is_x ? "push_pauli_x" : "push_pauli_z");
  auto [lred, ltrace] = run(sp, lhs);
  auto [rred, rtrace] = run(sp, rhs);
  ok &= check(r, iso_equal(lred, rred),
              "rewrite: push_pauli reducts agree (" + std::to_string(ltrace.steps.size()) + "+" +
                  std::to_string(rtrace.steps.size()) + " steps)");
  ok &= check(r, certify(ltrace, lhs).pass && certify(rtrace, rhs).pass, "traces certified");

  r.pass = ok;
  return r;
}

namespace {

/**
 * Two interior spiders of the same kind carrying the same parity check:
 * phase 0, no boundary legs, no loops, and identical interior
 * neighborhoods through simple edges.
 */
struct DuplicatePair {
  VertexId a = 0, b = 0;
  std::vector<VertexId> shared;  // sorted common neighbors
};

std::optional<DuplicatePair> find_duplicate_pair(const Diagram& d) {
  std::map<VertexId, std::vector<VertexId>> nbrs;
  for (const auto& [v, data] : d.vertices()) {
    if (data.type != VertexType::Z && data.type != VertexType::X) continue;
    if (!data.phase.is_zero() || d.loops_at(v) != 0) continue;
    bool clean = true;
    std::vector<VertexId> n;
    for (const HalfEdge& h : d.half_edges_at(v)) {
      VertexId other = d.other_endpoint(h.edge, v);
      if (d.is_boundary(other)) {
        clean = false;
        break;
      }
      n.push_back(other);
    }
    if (!clean || n.size() < 3) continue;
    std::sort(n.begin(), n.end());
    if (std::adjacent_find(n.begin(), n.end()) != n.end()) continue;  // multi-edge
    nbrs[v] = std::move(n);
  }
  for (auto it = nbrs.begin(); it != nbrs.end(); ++it) {
    for (auto jt = std::next(it); jt != nbrs.end(); ++jt) {
      if (d.vertex(it->first).type != d.vertex(jt->first).type) continue;
      if (it->second != jt->second) continue;
      return DuplicatePair{it->first, jt->first, it->second};
    }
  }
  return std::nullopt;
}

/**
 * Unspiders duplicated parity pairs until none remain. Each round splits
 * the first two shared neighbors (and the pair itself, when its checks have
 * more than three legs) down to a 2x2 bialgebra configuration, which the
 * reducer (bialgebra-first) then cancels. All splits are reversed fusion
 * steps recorded in the trace.
 */
Diagram eliminate_duplicates(Diagram cur, ProofTrace& trace, const Simproc& reducer) {
  while (auto dup = find_duplicate_pair(cur)) {
    auto split_pair_legs = [&](VertexId v, VertexId to_a, VertexId to_b) {
      Match m = make_split_match(
          cur, v, {half_toward(cur, v, to_a), half_toward(cur, v, to_b)}, Phase(), Phase());
      cur = apply_step(trace, cur, m);
      return trace.steps.back().match.rhs_vertex_ids.at(0);
    };
    VertexId first_stub = split_pair_legs(dup->shared[0], dup->a, dup->b);
    VertexId second_stub = split_pair_legs(dup->shared[1], dup->a, dup->b);
    if (cur.degree(dup->a) > 3) split_pair_legs(dup->a, first_stub, second_stub);
    if (cur.degree(dup->b) > 3) split_pair_legs(dup->b, first_stub, second_stub);
    auto rerun = run(reducer, cur);
    cur = std::move(rerun.first);
    trace = concat_traces(trace, rerun.second);
  }
  return cur;
}

/**
 * Pivot at one interior Z-X edge: expand with the inverted general
 * bialgebra, reduce, and clear any duplicated checks this exposes.
 * Returns the result and its trace when the edge admits the pivot.
 */
std::optional<std::pair<Diagram, ProofTrace>> pivot_at(const Diagram& cur, EdgeId eid,
                                                       const Simproc& reducer) {
  const Edge& e = cur.edge(eid);
  VertexId z = e.a, x = e.b;
  if (cur.is_boundary(z) || cur.is_boundary(x)) return std::nullopt;
  if (cur.vertex(z).type == VertexType::X) std::swap(z, x);
  if (cur.vertex(z).type != VertexType::Z || cur.vertex(x).type != VertexType::X) {
    return std::nullopt;
  }
  if (!cur.vertex(z).phase.is_zero() || !cur.vertex(x).phase.is_zero()) return std::nullopt;
  const int n = static_cast<int>(cur.degree(x)) - 1;
  const int m = static_cast<int>(cur.degree(z)) - 1;
  if (n < 1 || m < 1 || n > 8 || m > 8) return std::nullopt;
  RewriteRule inst = rule_by_name("gen_bialg").instantiate({n, m}).inverted();
  for (Match mm : find_matches(inst, cur)) {
    bool hz = false, hx = false;
    for (const auto& [lv, tv] : mm.vertex_map) {
      hz |= tv == z;
      hx |= tv == x;
    }
    if (!hz || !hx) continue;
    mm.counts = {n, m};
    ProofTrace t;
    t.initial_digest = cur.digest();
    Diagram d = apply_step(t, cur, mm);
    auto rerun = run(reducer, d);
    t = concat_traces(t, rerun.second);
    d = eliminate_duplicates(std::move(rerun.first), t, reducer);
    t.final = d;
    return std::make_pair(std::move(d), std::move(t));
  }
  return std::nullopt;
}

/**
 * The rewrite half of the CNOT proof. reduce_phase_free alone stops at a
 * bipartite quasi-normal form; scripted certified expansion steps get the
 * automation over the hurdle: unspidering splits that cancel duplicated
 * parity checks, plus inverted-bialgebra pivots (heaviest edge first,
 * keeping the first strictly-shrinking one).
 */
std::pair<Diagram, ProofTrace> cnot_rewrite_proof(const Diagram& composite) {
  const Simproc reducer = builtin_simproc("reduce_phase_free");
  auto first = run(reducer, composite);
  ProofTrace trace = std::move(first.second);
  Diagram cur = eliminate_duplicates(std::move(first.first), trace, reducer);
  Diagram want = cnot_logical(2, 3);

  for (int level = 0; level < 8 && !iso_equal(cur, want); ++level) {
    std::vector<std::tuple<std::size_t, EdgeId>> pivots;
    for (const auto& [eid, e] : cur.edges()) {
      if (cur.is_boundary(e.a) || cur.is_boundary(e.b)) continue;
      pivots.emplace_back(cur.degree(e.a) + cur.degree(e.b), eid);
    }
    std::sort(pivots.begin(), pivots.end(), [](const auto& a, const auto& b) {
      return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) > std::get<0>(b)
                                              : std::get<1>(a) < std::get<1>(b);
    });
    bool moved = false;
    for (const auto& [weight, eid] : pivots) {
      auto res = pivot_at(cur, eid, reducer);
      if (!res) continue;
      if (res->first.interior_count() < cur.interior_count() ||
          (res->first.interior_count() == cur.interior_count() &&
           res->first.edge_count() < cur.edge_count())) {
        trace = concat_traces(trace, res->second);
        cur = std::move(res->first);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  trace.final = cur;
  return {cur, trace};
}

}  // namespace

std::pair<Diagram, ProofTrace> derive_cnot_proof() {
  return cnot_rewrite_proof(enc_conjugate(derive_cnot_physical(2, 3)));
}

Report verify_cnot() {
  Report r = make_report("cnot");
  Diagram cnot_p = derive_cnot_physical(2, 3);
  const auto gates = derive_cnot_gates(2, 3);
  bool ok = check(r, gates.size() <= 5,
                  "derived circuit uses " + std::to_string(gates.size()) + " physical CNOTs");

  Diagram lhs = enc_conjugate(cnot_p);
  Diagram want = cnot_logical(2, 3);
  ProportionalResult sem = proportional_equal(evaluate(lhs), evaluate(want));
  ok &= check(r, sem.proportional, "semantic: Dec;CNOT_P;Enc ~ CNOT_L(2,3)");
  if (sem.proportional) r.witness = witness_str(sem);

  auto [reduced, trace] = cnot_rewrite_proof(lhs);
  std::size_t expansions = 0;
  for (const TraceStep& s : trace.steps) {
    if (s.match.reversed) ++expansions;
  }
  ok &= check(r, iso_equal(reduced, want),
              "rewrite: composite reduces to CNOT_L(2,3) (" + std::to_string(trace.steps.size()) +
                  " steps, " + std::to_string(expansions) + " scripted expansions)");
  ok &= check(r, certify(trace, lhs).pass, "trace certified step-by-step");

  for (int c = 1; c <= 3 && ok; ++c) {
    for (int t = 1; t <= 3; ++t) {
      if (c == t || (c == 2 && t == 3)) continue;
      Diagram variant = enc_conjugate(derive_cnot_physical(c, t));
      ProportionalResult v = proportional_equal(evaluate(variant), evaluate(cnot_logical(c, t)));
      if (!check(r, v.proportional,
                 "variant CNOT(" + std::to_string(c) + "," + std::to_string(t) + ") semantic")) {
        ok = false;
        break;
      }
    }
  }

  r.pass = ok;
  return r;
}

Report verify_ccz() {
  Report r = make_report("ccz");
  Matrix m = evaluate(enc_conjugate(ccz_physical()));

  bool ok = true;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"11+", "11-"}, {"11-", "11+"}, {"00+", "00+"}, {"00-", "00-"},
      {"01+", "01+"}, {"01-", "01-"}, {"10+", "10+"}, {"10-", "10-"}};
  for (const auto& [in, out] : cases) {
    ProportionalResult res = proportional_equal(m * basis_column(in), basis_column(out));
    ok &= check(r, res.proportional, "state: M|" + in + "> ~ |" + out + ">");
  }

  // the equal sum of the basis elements pins the relative phases
  Matrix sum_in(8, 1), sum_out(8, 1);
  for (std::size_t b = 0; b < 8; ++b) {
    sum_in.at(b, 0) = ExactScalar::one();
    sum_out.at(b, 0) = b == 7 ? -ExactScalar::one() : ExactScalar::one();
  }
  ProportionalResult sres = proportional_equal(m * sum_in, sum_out);
  ok &= check(r, sres.proportional, "sum-of-basis state maps correctly");

  Matrix ccz(8, 8);
  for (std::size_t b = 0; b < 8; ++b) ccz.at(b, b) = b == 7 ? -ExactScalar::one() : ExactScalar::one();
  ProportionalResult full = proportional_equal(m, ccz);
  ok &= check(r, full.proportional, "full matrix: M ~ diag(1,...,1,-1)");
  if (full.proportional) r.witness = witness_str(full);

  r.pass = ok;
  return r;
}

Report verify_enc_circuit() {
  Report r = make_report("enc-circuit");
  Diagram enc = build_enc();
  auto [circuit_form, trace] = derive_encoder_circuit();

  bool ok = check(r, iso_equal(circuit_form, encoder_circuit()),
                  "derived circuit form matches the circuit fixture (" +
                      std::to_string(trace.steps.size()) + " steps)");
  ok &= check(r, certify(trace, enc).pass, "trace Enc ->* circuit certified");

  std::size_t preps = 0;
  for (const auto& [v, data] : circuit_form.vertices()) {
    if (data.type != VertexType::Boundary && circuit_form.degree(v) == 1) ++preps;
  }
  ok &= check(r, preps == 5, "circuit uses exactly 5 ancilla preparations");

  Matrix u = evaluate(encoder_circuit_gates());
  ProportionalResult unitary = proportional_equal(u.dagger() * u, Matrix::identity(256));
  ok &= check(r, unitary.proportional, "U'U ~ id_8 (unitary embedding)");

  ProportionalResult sem = proportional_equal(evaluate(circuit_form), evaluate(enc));
  ok &= check(r, sem.proportional, "circuit with preps ~ Enc");
  if (sem.proportional) r.witness = witness_str(sem);

  r.pass = ok;
  return r;
}

Report verify_distance2() {
  Report r = make_report("distance-2");
  // all 64 logical Pauli layers as exact 8x8 matrices
  Matrix x2(2, 2), z2(2, 2), i2 = Matrix::identity(2);
  x2.at(0, 1) = ExactScalar::one();
  x2.at(1, 0) = ExactScalar::one();
  z2.at(0, 0) = ExactScalar::one();
  z2.at(1, 1) = -ExactScalar::one();
  std::vector<Matrix> single = {i2, x2, z2, x2 * z2};
  std::vector<Matrix> layers;
  for (const Matrix& a : single)
    for (const Matrix& b : single)
      for (const Matrix& c : single) layers.push_back(a.kron(b).kron(c));

  bool ok = true;
  for (int w = 1; w <= kPhysical && ok; ++w) {
    for (VertexType color : {VertexType::X, VertexType::Z}) {
      Diagram err = pauli_layer(kPhysical, color, {w});
      Matrix m = evaluate(enc_conjugate(err));
      for (const Matrix& layer : layers) {
        if (proportional_equal(m, layer).proportional) {
          ok = false;
          r.details.push_back("FAIL: single " + to_string(color) + " error on wire " +
                              std::to_string(w) + " acts as a logical Pauli");
          break;
        }
      }
      if (!ok) break;
    }
  }
  if (ok) r.details.push_back("ok: all 16 single-qubit errors are non-logical (64 layers each)");
  r.pass = ok;
  return r;
}

const std::vector<std::string>& obligation_names() {
  static const std::vector<std::string> names = {
      "rules",    "enc-dec",  "codewords", "pauli-x1", "pauli-x2",    "pauli-x3",
      "pauli-z1", "pauli-z2", "pauli-z3",  "cnot",     "ccz",         "enc-circuit",
      "distance-2"};
  return names;
}

Report run_obligation(const std::string& name) {
  if (name == "rules") return verify_rules();
  if (name == "enc-dec") return verify_enc_dec();
  if (name == "codewords") return verify_codewords();
  if (name.rfind("pauli-", 0) == 0) return verify_pauli(name.substr(6));
  if (name == "cnot") return verify_cnot();
  if (name == "ccz") return verify_ccz();
  if (name == "enc-circuit") return verify_enc_circuit();
  if (name == "distance-2") return verify_distance2();
  Report r = make_report(name);
  r.details.push_back("FAIL: unknown obligation");
  return r;
}

std::vector<Report> run_all(const std::vector<std::string>& only,
                            const std::vector<RewriteRule>* rules_override) {
  std::vector<std::string> names;
  if (only.empty()) {
    names = obligation_names();
  } else {
    names = only;
  }
  std::vector<Report> reports;
  bool rules_failed = false;
  for (const std::string& name : names) {
    if (rules_failed && name != "rules") {
      Report r = make_report(name);
      r.skipped = true;
      r.details.push_back("skipped: rule soundness failed");
      reports.push_back(std::move(r));
      continue;
    }
    Report r = name == "rules" && rules_override ? verify_rules_for(*rules_override)
                                                 : run_obligation(name);
    if (name == "rules" && !r.pass) rules_failed = true;
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace zxcc::code
