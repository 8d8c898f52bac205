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

#include "zxcc/ruleset.hpp"

#include "zxcc/error.hpp"

namespace zxcc {

namespace {

// Boxed legs accept up to 16 repetitions: composite proofs fuse spiders of
// degree up to 14 (two GHZ spines merge), which the 8-per-side default of
// the physical qubit count would not cover.
constexpr int kLegMax = 16;

PhaseExpr var(const std::string& name) { return PhaseExpr::variable(name); }
PhaseExpr zero() { return PhaseExpr(); }
PhaseExpr pi() { return PhaseExpr(Phase::pi()); }
PhaseExpr half_pi() { return PhaseExpr(Phase(1, 2)); }

VertexType dual(VertexType t) { return t == VertexType::Z ? VertexType::X : VertexType::Z; }

/**
 * Spider fusion: two connected same-colour spiders merge, adding phases.
 * Legs on each spider are boxed.
 *   lhs: 0 = S(a) [box0 legs], 1 = S(b) [box1 legs], edge 0-1
 *   rhs: 100 = S(a+b) with both leg boxes
 */
RewriteRule spider_rule(const std::string& name, VertexType color) {
  RewriteRule r;
  r.name = name;
  r.vars = {"a", "b"};
  VertexId v1 = r.lhs.add_vertex_with_id(0, color, var("a"));
  VertexId v2 = r.lhs.add_vertex_with_id(1, color, var("b"));
  r.lhs.add_edge(v1, v2);
  VertexId b1 = r.lhs.add_vertex_with_id(2, VertexType::Boundary);
  r.lhs.mark_input(b1);
  r.lhs.add_edge(b1, v1);
  VertexId b2 = r.lhs.add_vertex_with_id(3, VertexType::Boundary);
  r.lhs.mark_output(b2);
  r.lhs.add_edge(b2, v2);

  VertexId u = r.rhs.add_vertex_with_id(100, color, var("a") + var("b"));
  VertexId c1 = r.rhs.add_vertex_with_id(102, VertexType::Boundary);
  r.rhs.mark_input(c1);
  r.rhs.add_edge(c1, u);
  VertexId c2 = r.rhs.add_vertex_with_id(103, VertexType::Boundary);
  r.rhs.mark_output(c2);
  r.rhs.add_edge(c2, u);

  r.boundary_map = {{b1, c1}, {b2, c2}};
  r.boxes = {{{b1}, {c1}, kLegMax}, {{b2}, {c2}, kLegMax}};
  return r;
}

/** Phase-0 degree-2 spider removal: wire - S(0) - wire becomes a wire. */
RewriteRule id_rule(const std::string& name, VertexType color) {
  RewriteRule r;
  r.name = name;
  VertexId v = r.lhs.add_vertex_with_id(0, color, zero());
  VertexId b1 = r.lhs.add_vertex_with_id(2, VertexType::Boundary);
  VertexId b2 = r.lhs.add_vertex_with_id(3, VertexType::Boundary);
  r.lhs.mark_input(b1);
  r.lhs.mark_output(b2);
  r.lhs.add_edge(b1, v);
  r.lhs.add_edge(v, b2);

  VertexId c1 = r.rhs.add_vertex_with_id(102, VertexType::Boundary);
  VertexId c2 = r.rhs.add_vertex_with_id(103, VertexType::Boundary);
  r.rhs.mark_input(c1);
  r.rhs.mark_output(c2);
  r.rhs.add_edge(c1, c2);

  r.boundary_map = {{b1, c1}, {b2, c2}};
  return r;
}

/** Self-loop removal (plain edge loop; phase and legs unchanged). */
RewriteRule loop_rule(const std::string& name, VertexType color) {
  RewriteRule r;
  r.name = name;
  r.vars = {"a"};
  VertexId v = r.lhs.add_vertex_with_id(0, color, var("a"));
  r.lhs.add_edge(v, v);
  VertexId b = r.lhs.add_vertex_with_id(2, VertexType::Boundary);
  r.lhs.mark_input(b);
  r.lhs.add_edge(b, v);

  VertexId u = r.rhs.add_vertex_with_id(100, color, var("a"));
  VertexId c = r.rhs.add_vertex_with_id(102, VertexType::Boundary);
  r.rhs.mark_input(c);
  r.rhs.add_edge(c, u);

  r.boundary_map = {{b, c}};
  r.boxes = {{{b}, {c}, kLegMax}};
  return r;
}

/** Self-loop through an H box: loop removed, phase gains pi. */
RewriteRule antiloop_rule(const std::string& name, VertexType color) {
  RewriteRule r;
  r.name = name;
  r.vars = {"a"};
  VertexId v = r.lhs.add_vertex_with_id(0, color, var("a"));
  VertexId h = r.lhs.add_vertex_with_id(1, VertexType::H);
  r.lhs.add_edge(v, h);
  r.lhs.add_edge(h, v);
  VertexId b = r.lhs.add_vertex_with_id(2, VertexType::Boundary);
  r.lhs.mark_input(b);
  r.lhs.add_edge(b, v);

  VertexId u = r.rhs.add_vertex_with_id(100, color, var("a") + pi());
  VertexId c = r.rhs.add_vertex_with_id(102, VertexType::Boundary);
  r.rhs.mark_input(c);
  r.rhs.add_edge(c, u);

  r.boundary_map = {{b, c}};
  r.boxes = {{{b}, {c}, kLegMax}};
  return r;
}

/** Deletes an isolated phase-0 spider (the scalar 2). */
RewriteRule scalar_rule(const std::string& name, VertexType color) {
  RewriteRule r;
  r.name = name;
  r.lhs.add_vertex_with_id(0, color, zero());
  return r;
}

/**
 * pi-commutation: a pi of the opposite colour crosses a spider, negating
 * its phase and copying onto every other leg.
 *   lhs: in - P(pi) - S(a) [boxed legs]
 *   rhs: in - S(-a) [boxed legs each through a fresh P(pi)]
 */
RewriteRule pi_rule(const std::string& name, VertexType pi_color) {
  RewriteRule r;
  r.name = name;
  r.vars = {"a"};
  const VertexType spider = dual(pi_color);
  VertexId p = r.lhs.add_vertex_with_id(0, pi_color, pi());
  VertexId v = r.lhs.add_vertex_with_id(1, spider, var("a"));
  r.lhs.add_edge(p, v);
  VertexId bin = r.lhs.add_vertex_with_id(2, VertexType::Boundary);
  r.lhs.mark_input(bin);
  r.lhs.add_edge(bin, p);
  VertexId bout = r.lhs.add_vertex_with_id(3, VertexType::Boundary);
  r.lhs.mark_output(bout);
  r.lhs.add_edge(v, bout);

  VertexId u = r.rhs.add_vertex_with_id(100, spider, -var("a"));
  VertexId cin = r.rhs.add_vertex_with_id(102, VertexType::Boundary);
  r.rhs.mark_input(cin);
  r.rhs.add_edge(cin, u);
  VertexId q = r.rhs.add_vertex_with_id(104, pi_color, pi());
  VertexId cout = r.rhs.add_vertex_with_id(103, VertexType::Boundary);
  r.rhs.mark_output(cout);
  r.rhs.add_edge(u, q);
  r.rhs.add_edge(q, cout);

  r.boundary_map = {{bin, cin}, {bout, cout}};
  r.boxes = {{{bout}, {cout, q}, kLegMax}};
  return r;
}

/**
 * State copy: a phase-0 state of the opposite colour copies through a
 * spider, deleting it.
 *   lhs: P(0) state - S(a) [boxed legs]; rhs: a P(0) state per leg
 */
RewriteRule copy_rule(const std::string& name, VertexType spider_color) {
  RewriteRule r;
  r.name = name;
  r.vars = {"a"};
  const VertexType state = dual(spider_color);
  VertexId s = r.lhs.add_vertex_with_id(0, state, zero());
  VertexId v = r.lhs.add_vertex_with_id(1, spider_color, var("a"));
  r.lhs.add_edge(s, v);
  VertexId b = r.lhs.add_vertex_with_id(3, VertexType::Boundary);
  r.lhs.mark_output(b);
  r.lhs.add_edge(v, b);

  VertexId q = r.rhs.add_vertex_with_id(104, state, zero());
  VertexId c = r.rhs.add_vertex_with_id(103, VertexType::Boundary);
  r.rhs.mark_output(c);
  r.rhs.add_edge(q, c);

  r.boundary_map = {{b, c}};
  r.boxes = {{{b}, {c, q}, kLegMax}};
  return r;
}

/** Arity-1 phase-0 spider absorbed by a same-colour spider. */
RewriteRule elim_rule(const std::string& name, VertexType color) {
  RewriteRule r;
  r.name = name;
  r.vars = {"a"};
  VertexId s = r.lhs.add_vertex_with_id(0, color, zero());
  VertexId v = r.lhs.add_vertex_with_id(1, color, var("a"));
  r.lhs.add_edge(s, v);
  VertexId b = r.lhs.add_vertex_with_id(3, VertexType::Boundary);
  r.lhs.mark_output(b);
  r.lhs.add_edge(v, b);

  VertexId u = r.rhs.add_vertex_with_id(100, color, var("a"));
  VertexId c = r.rhs.add_vertex_with_id(103, VertexType::Boundary);
  r.rhs.mark_output(c);
  r.rhs.add_edge(u, c);

  r.boundary_map = {{b, c}};
  r.boxes = {{{b}, {c}, kLegMax}};
  return r;
}

/**
 * General bialgebra: a complete bipartite layer of phase-0 spiders flips
 * into a single opposite pair. Both sides boxed; too eager for simprocs
 * (its lhs also matches the empty graph), shipped for completeness.
 */
RewriteRule gen_bialg_rule() {
  RewriteRule r;
  r.name = "gen_bialg";
  VertexId g = r.lhs.add_vertex_with_id(0, VertexType::Z, zero());
  VertexId x = r.lhs.add_vertex_with_id(1, VertexType::X, zero());
  r.lhs.add_edge(g, x);
  VertexId bg = r.lhs.add_vertex_with_id(2, VertexType::Boundary);
  r.lhs.mark_input(bg);
  r.lhs.add_edge(bg, g);
  VertexId bx = r.lhs.add_vertex_with_id(3, VertexType::Boundary);
  r.lhs.mark_output(bx);
  r.lhs.add_edge(x, bx);

  VertexId rx = r.rhs.add_vertex_with_id(100, VertexType::X, zero());
  VertexId rg = r.rhs.add_vertex_with_id(101, VertexType::Z, zero());
  r.rhs.add_edge(rx, rg);
  VertexId cg = r.rhs.add_vertex_with_id(102, VertexType::Boundary);
  r.rhs.mark_input(cg);
  r.rhs.add_edge(cg, rx);
  VertexId cx = r.rhs.add_vertex_with_id(103, VertexType::Boundary);
  r.rhs.mark_output(cx);
  r.rhs.add_edge(rg, cx);

  r.boundary_map = {{bg, cg}, {bx, cx}};
  r.boxes = {{{g, bg}, {cg}, 8}, {{x, bx}, {cx}, 8}};
  return r;
}

/** The fixed 2x2 bialgebra, oriented to shrink the vertex count. */
RewriteRule gen_bialg_simp_rule() {
  RewriteRule r = gen_bialg_rule().instantiate({2, 2});
  r.name = "gen_bialg_simp";
  return r;
}

/** Hopf: a doubly-connected Z/X pair disconnects. */
RewriteRule hopf_rule() {
  RewriteRule r;
  r.name = "hopf";
  r.vars = {"a", "b"};
  VertexId v = r.lhs.add_vertex_with_id(0, VertexType::Z, var("a"));
  VertexId w = r.lhs.add_vertex_with_id(1, VertexType::X, var("b"));
  r.lhs.add_edge(v, w);
  r.lhs.add_edge(v, w);
  VertexId b1 = r.lhs.add_vertex_with_id(2, VertexType::Boundary);
  r.lhs.mark_input(b1);
  r.lhs.add_edge(b1, v);
  VertexId b2 = r.lhs.add_vertex_with_id(3, VertexType::Boundary);
  r.lhs.mark_output(b2);
  r.lhs.add_edge(w, b2);

  VertexId u = r.rhs.add_vertex_with_id(100, VertexType::Z, var("a"));
  VertexId y = r.rhs.add_vertex_with_id(101, VertexType::X, var("b"));
  VertexId c1 = r.rhs.add_vertex_with_id(102, VertexType::Boundary);
  r.rhs.mark_input(c1);
  r.rhs.add_edge(c1, u);
  VertexId c2 = r.rhs.add_vertex_with_id(103, VertexType::Boundary);
  r.rhs.mark_output(c2);
  r.rhs.add_edge(y, c2);

  r.boundary_map = {{b1, c1}, {b2, c2}};
  r.boxes = {{{b1}, {c1}, kLegMax}, {{b2}, {c2}, kLegMax}};
  return r;
}

/** H = S(pi/2) D(pi/2) S(pi/2) up to scalar. */
RewriteRule euler_rule(const std::string& name, VertexType outer) {
  RewriteRule r;
  r.name = name;
  VertexId h = r.lhs.add_vertex_with_id(0, VertexType::H);
  VertexId b1 = r.lhs.add_vertex_with_id(2, VertexType::Boundary);
  VertexId b2 = r.lhs.add_vertex_with_id(3, VertexType::Boundary);
  r.lhs.mark_input(b1);
  r.lhs.mark_output(b2);
  r.lhs.add_edge(b1, h);
  r.lhs.add_edge(h, b2);

  const VertexType inner = dual(outer);
  VertexId s1 = r.rhs.add_vertex_with_id(100, outer, half_pi());
  VertexId s2 = r.rhs.add_vertex_with_id(101, inner, half_pi());
  VertexId s3 = r.rhs.add_vertex_with_id(104, outer, half_pi());
  VertexId c1 = r.rhs.add_vertex_with_id(102, VertexType::Boundary);
  VertexId c2 = r.rhs.add_vertex_with_id(103, VertexType::Boundary);
  r.rhs.mark_input(c1);
  r.rhs.mark_output(c2);
  r.rhs.add_edge(c1, s1);
  r.rhs.add_edge(s1, s2);
  r.rhs.add_edge(s2, s3);
  r.rhs.add_edge(s3, c2);

  r.boundary_map = {{b1, c1}, {b2, c2}};
  return r;
}

/** Two H boxes in series cancel. */
RewriteRule h_cancel_rule() {
  RewriteRule r;
  r.name = "h-cancel";
  VertexId h1 = r.lhs.add_vertex_with_id(0, VertexType::H);
  VertexId h2 = r.lhs.add_vertex_with_id(1, VertexType::H);
  r.lhs.add_edge(h1, h2);
  VertexId b1 = r.lhs.add_vertex_with_id(2, VertexType::Boundary);
  VertexId b2 = r.lhs.add_vertex_with_id(3, VertexType::Boundary);
  r.lhs.mark_input(b1);
  r.lhs.mark_output(b2);
  r.lhs.add_edge(b1, h1);
  r.lhs.add_edge(h2, b2);

  VertexId c1 = r.rhs.add_vertex_with_id(102, VertexType::Boundary);
  VertexId c2 = r.rhs.add_vertex_with_id(103, VertexType::Boundary);
  r.rhs.mark_input(c1);
  r.rhs.mark_output(c2);
  r.rhs.add_edge(c1, c2);

  r.boundary_map = {{b1, c1}, {b2, c2}};
  return r;
}

/** Colour change: a spider with H on every leg is the other colour. */
RewriteRule color_change_rule(const std::string& name, VertexType from) {
  RewriteRule r;
  r.name = name;
  r.vars = {"a"};
  VertexId v = r.lhs.add_vertex_with_id(0, from, var("a"));
  VertexId h = r.lhs.add_vertex_with_id(1, VertexType::H);
  VertexId b = r.lhs.add_vertex_with_id(2, VertexType::Boundary);
  r.lhs.mark_input(b);
  r.lhs.add_edge(b, h);
  r.lhs.add_edge(h, v);

  VertexId u = r.rhs.add_vertex_with_id(100, dual(from), var("a"));
  VertexId c = r.rhs.add_vertex_with_id(102, VertexType::Boundary);
  r.rhs.mark_input(c);
  r.rhs.add_edge(c, u);

  r.boundary_map = {{b, c}};
  r.boxes = {{{b, h}, {c}, kLegMax}};
  return r;
}

std::vector<RewriteRule> build_all() {
  std::vector<RewriteRule> rules;
  rules.push_back(spider_rule("green_sp", VertexType::Z));
  rules.push_back(spider_rule("red_sp", VertexType::X));
  rules.push_back(id_rule("green_id", VertexType::Z));
  rules.push_back(id_rule("red_id", VertexType::X));
  rules.push_back(loop_rule("green_loop", VertexType::Z));
  rules.push_back(loop_rule("red_loop", VertexType::X));
  rules.push_back(antiloop_rule("green_antiloop", VertexType::Z));
  rules.push_back(antiloop_rule("red_antiloop", VertexType::X));
  rules.push_back(scalar_rule("green_scalar", VertexType::Z));
  rules.push_back(scalar_rule("red_scalar", VertexType::X));
  // the pi/copy names follow the colour of the crossing pi / copied state
  rules.push_back(pi_rule("red_pi", VertexType::X));
  rules.push_back(pi_rule("green_pi", VertexType::Z));
  rules.push_back(copy_rule("green_copy", VertexType::Z));
  rules.push_back(copy_rule("red_copy", VertexType::X));
  rules.push_back(elim_rule("green_elim", VertexType::Z));
  rules.push_back(elim_rule("red_elim", VertexType::X));
  rules.push_back(gen_bialg_rule());
  rules.push_back(gen_bialg_simp_rule());
  rules.push_back(hopf_rule());
  rules.push_back(euler_rule("euler", VertexType::Z));
  rules.push_back(euler_rule("euler2", VertexType::X));
  rules.push_back(h_cancel_rule());
  rules.push_back(color_change_rule("green_to_red", VertexType::Z));
  rules.push_back(color_change_rule("red_to_green", VertexType::X));
  for (const RewriteRule& r : rules) r.validate_rule();
  return rules;
}

}  // namespace

const std::vector<RewriteRule>& builtin_rules() {
  static const std::vector<RewriteRule> rules = build_all();
  return rules;
}

bool has_rule(const std::string& name) {
  for (const RewriteRule& r : builtin_rules()) {
    if (r.name == name) return true;
  }
  return false;
}

const RewriteRule& rule_by_name(const std::string& name) {
  for (const RewriteRule& r : builtin_rules()) {
    if (r.name == name) return r;
  }
  throw ZXError("unknown rule: " + name);
}

RewriteRule concrete_rule_for(const Match& m) {
  const RewriteRule& base = rule_by_name(m.rule);
  RewriteRule inst = base.is_concrete() ? base : base.instantiate(m.counts);
  if (base.is_concrete() && !m.counts.empty()) {
    throw ZXError("match carries counts for a box-free rule");
  }
  return m.reversed ? inst.inverted() : inst;
}

}  // namespace zxcc
