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

#include <doctest.h>

#include <algorithm>

#include "zxcc/colour_code.hpp"
#include "zxcc/error.hpp"
#include "zxcc/evaluate.hpp"
#include "zxcc/ruleset.hpp"
#include "zxcc/soundness.hpp"

using namespace zxcc;

namespace {

/** Chain of n green spiders on one wire, with the given phases. */
Diagram spider_chain(const std::vector<Phase>& phases) {
  Diagram d;
  VertexId prev = d.add_input();
  for (const Phase& p : phases) {
    VertexId v = d.add_vertex(VertexType::Z, p);
    d.add_edge(prev, v);
    prev = v;
  }
  VertexId out = d.add_output();
  d.add_edge(prev, out);
  return d;
}

}  // namespace

TEST_CASE("instantiating the spider rule with counts (1,1) gives the binary rule") {
  RewriteRule binary = rule_by_name("green_sp").instantiate({1, 1});
  CHECK(binary.is_concrete());
  CHECK(binary.lhs.interior().size() == 2);
  CHECK(binary.lhs.boundary_vertices().size() == 2);
  CHECK(binary.rhs.interior().size() == 1);
  CHECK(binary.lhs.edges().size() == 3);
  binary.validate_rule();
}

TEST_CASE("instantiating with count 0 deletes the boxed subgraph") {
  RewriteRule r = rule_by_name("green_sp").instantiate({0, 0});
  CHECK(r.lhs.boundary_vertices().empty());
  CHECK(r.lhs.interior().size() == 2);
  CHECK(r.rhs.interior().size() == 1);
  CHECK_THROWS_AS(rule_by_name("green_sp").instantiate({-1, 0}), ZXError);
  CHECK_THROWS_AS(rule_by_name("green_sp").instantiate({17, 0}), ZXError);
}

TEST_CASE("binary spider fusion on a three-spider chain has exactly 2 matches") {
  Diagram chain = spider_chain({Phase(1, 4), Phase(1, 2), Phase(1, 1)});
  RewriteRule binary = rule_by_name("green_sp").instantiate({1, 1});
  std::vector<Match> ms = find_matches(binary, chain);
  CHECK(ms.size() == 2);
}

TEST_CASE("identity removal does not match a bare wire") {
  std::vector<Match> ms = find_matches(rule_by_name("green_id"), Diagram::identity(1));
  CHECK(ms.empty());
}

TEST_CASE("hopf needs a parallel pair and does not match the CNOT") {
  Diagram cnot = code::cnot_gate(2, 1, 2);
  std::vector<Match> ms = find_matches_any(rule_by_name("hopf"), cnot);
  CHECK(ms.empty());
}

TEST_CASE("spider fusion adds phases") {
  Diagram chain = spider_chain({Phase(1, 4), Phase(1, 4)});
  std::vector<Match> ms = find_matches_any(rule_by_name("green_sp"), chain);
  REQUIRE_FALSE(ms.empty());
  ApplyResult res = apply_match(concrete_rule_for(ms.front()), ms.front(), chain);
  CHECK(res.diagram.interior_count() == 1);
  for (const auto& [v, data] : res.diagram.vertices()) {
    if (data.type == VertexType::Z) CHECK(data.phase == Phase(1, 2));
  }
  res.diagram.validate();
}

TEST_CASE("identity rule turns a phase-0 degree-2 spider into a bare wire") {
  Diagram d = spider_chain({Phase()});
  std::vector<Match> ms = find_matches(rule_by_name("green_id"), d);
  REQUIRE(ms.size() == 1);
  Diagram after = apply_match(rule_by_name("green_id"), ms.front(), d).diagram;
  CHECK(iso_equal(after, Diagram::identity(1)));
}

TEST_CASE("pi commutes through a spider, negating the phase") {
  // in - X(pi) - Z(1/4) - out
  Diagram d;
  VertexId in = d.add_input();
  VertexId p = d.add_vertex(VertexType::X, Phase::pi());
  VertexId z = d.add_vertex(VertexType::Z, Phase(1, 4));
  VertexId out = d.add_output();
  d.add_edge(in, p);
  d.add_edge(p, z);
  d.add_edge(z, out);

  std::vector<Match> ms = find_matches_any(rule_by_name("red_pi"), d);
  REQUIRE_FALSE(ms.empty());
  const Match& m = ms.front();
  Diagram after = apply_match(concrete_rule_for(m), m, d).diagram;
  after.validate();
  // expect Z(-1/4) followed by X(pi)
  bool saw_neg = false, saw_pi = false;
  for (const auto& [v, data] : after.vertices()) {
    if (data.type == VertexType::Z) saw_neg = data.phase == Phase(7, 4);
    if (data.type == VertexType::X) saw_pi = data.phase == Phase::pi();
  }
  CHECK(saw_neg);
  CHECK(saw_pi);
  CHECK(proportional_equal(evaluate(after), evaluate(d)).proportional);
}

TEST_CASE("inverting twice is the identity on rules") {
  const RewriteRule& r = rule_by_name("hopf");
  RewriteRule twice = r.inverted().inverted();
  CHECK(twice.name == r.name);
  CHECK(twice.reversed == r.reversed);
  CHECK(twice.boundary_map == r.boundary_map);
}

TEST_CASE("the inverted identity rule inserts a spider into a bare wire") {
  RewriteRule ins = rule_by_name("green_id").inverted();
  Diagram wire = Diagram::identity(1);
  std::vector<Match> ms = find_matches(ins, wire);
  REQUIRE(ms.size() == 1);
  Diagram after = apply_match(ins, ms.front(), wire).diagram;
  after.validate();
  CHECK(after.interior_count() == 1);
  CHECK(iso_equal(after, spider_chain({Phase()})));
  CHECK(proportional_equal(evaluate(after), evaluate(wire)).proportional);
}

TEST_CASE("applying a match to a different diagram is rejected as stale") {
  Diagram chain = spider_chain({Phase(1, 4), Phase(1, 4)});
  std::vector<Match> ms = find_matches_any(rule_by_name("green_sp"), chain);
  REQUIRE_FALSE(ms.empty());
  Diagram other = spider_chain({Phase(1, 4), Phase(1, 2)});
  CHECK_THROWS_AS(apply_match(concrete_rule_for(ms.front()), ms.front(), other),
                  StaleMatchError);
}

TEST_CASE("find_matches enumeration is deterministic and replayable") {
  Diagram enc = code::build_enc();
  auto a = find_matches_any(rule_by_name("red_sp"), enc);
  auto b = find_matches_any(rule_by_name("red_sp"), enc);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].vertex_map == b[i].vertex_map);
    CHECK(a[i].attachments == b[i].attachments);
  }
  if (!a.empty()) {
    Diagram d1 = apply_match(concrete_rule_for(a.front()), a.front(), enc).diagram;
    Diagram d2 = apply_match(concrete_rule_for(b.front()), b.front(), enc).diagram;
    CHECK(d1.canonical_string() == d2.canonical_string());
    CHECK(d1.vertices().size() == d2.vertices().size());
  }
}

TEST_CASE("application is local: untouched vertices keep their ids") {
  Diagram chain = spider_chain({Phase(1, 4), Phase(1, 4)});
  Diagram two = tensor(chain, code::cnot_gate(2, 1, 2));
  std::vector<Match> ms = find_matches_any(rule_by_name("green_sp"), two);
  REQUIRE_FALSE(ms.empty());
  Diagram after = apply_match(concrete_rule_for(ms.front()), ms.front(), two).diagram;
  std::set<VertexId> touched;
  for (const auto& [u, t] : ms.front().vertex_map) touched.insert(t);
  for (const auto& [id, data] : two.vertices()) {
    if (touched.count(id)) continue;
    if (data.type == VertexType::Boundary) continue;  // boundaries may be rewired
    REQUIRE(after.has_vertex(id));
    CHECK(after.vertex(id).type == data.type);
    CHECK(after.vertex(id).phase == data.phase);
  }
}

TEST_CASE("every shipped rule is sound on the sample grid") {
  for (const RewriteRule& r : builtin_rules()) {
    SoundnessReport rep = check_soundness(r, 3);
    CHECK_MESSAGE(rep.pass(), "rule ", r.name, " has counterexamples");
  }
}

TEST_CASE("a corrupted rule is caught by the soundness check") {
  RewriteRule bad = rule_by_name("euler");
  bad.name = "euler_corrupted";
  // break the middle rotation: pi/4 instead of pi/2
  RewriteRule broken = bad;
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
  SoundnessReport rep = check_soundness(broken);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.counterexamples.empty());
}

TEST_CASE("rule JSON round-trip preserves matching behaviour") {
  const RewriteRule& orig = rule_by_name("green_sp");
  RewriteRule back = RewriteRule::from_json(nlohmann::json::parse(orig.to_json().dump()));
  CHECK(back.name == orig.name);
  CHECK(back.boxes.size() == orig.boxes.size());
  Diagram chain = spider_chain({Phase(1, 4), Phase(1, 2), Phase(1, 1)});
  CHECK(find_matches_any(back, chain).size() == find_matches_any(orig, chain).size());
}

TEST_CASE("every shipped rule survives the file format") {
  for (const RewriteRule& orig : builtin_rules()) {
    RewriteRule back = RewriteRule::from_json(nlohmann::json::parse(orig.to_json().dump()));
    back.validate_rule();
    CHECK(back.name == orig.name);
    CHECK(back.vars == orig.vars);
    CHECK(back.boundary_map == orig.boundary_map);
    REQUIRE(back.boxes.size() == orig.boxes.size());
    for (std::size_t i = 0; i < back.boxes.size(); ++i) {
      auto sorted = [](std::vector<VertexId> v) {
        std::sort(v.begin(), v.end());
        return v;
      };
      CHECK(sorted(back.boxes[i].lhs_vertices) == sorted(orig.boxes[i].lhs_vertices));
      CHECK(sorted(back.boxes[i].rhs_vertices) == sorted(orig.boxes[i].rhs_vertices));
      CHECK(back.boxes[i].max == orig.boxes[i].max);
    }
    CHECK(back.lhs.vertices().size() == orig.lhs.vertices().size());
    CHECK(back.rhs.edges().size() == orig.rhs.edges().size());
    // behaviour check at small arity
    SoundnessReport rep = check_soundness(back, 2);
    CHECK_MESSAGE(rep.pass(), "round-tripped rule ", back.name, " unsound");
  }
}

TEST_CASE("phase variables restrict matches") {
  // red_pi requires an X(pi); an X(1/2) gate must not match
  Diagram d;
  VertexId in = d.add_input();
  VertexId p = d.add_vertex(VertexType::X, Phase(1, 2));
  VertexId z = d.add_vertex(VertexType::Z, Phase(1, 4));
  VertexId out = d.add_output();
  d.add_edge(in, p);
  d.add_edge(p, z);
  d.add_edge(z, out);
  CHECK(find_matches_any(rule_by_name("red_pi"), d).empty());
}
