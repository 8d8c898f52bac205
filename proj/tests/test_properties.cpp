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

#include "random_diagrams.hpp"
#include "zxcc/evaluate.hpp"
#include "zxcc/json_io.hpp"
#include "zxcc/ruleset.hpp"
#include "zxcc/simproc.hpp"

using namespace zxcc;

TEST_CASE("functoriality and dagger hold on random small diagrams") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    const std::size_t mid = rng() % 3;
    Diagram a = testing::random_diagram(rng, rng() % 3, mid);
    Diagram b = testing::random_diagram(rng, mid, rng() % 3);
    CHECK(evaluate(compose(a, b)) == evaluate(b) * evaluate(a));
    CHECK(evaluate(tensor(a, b)) == evaluate(a).kron(evaluate(b)));
    CHECK(evaluate(adjoint(a)) == evaluate(a).dagger());
  }
}

TEST_CASE("composition is associative up to isomorphism") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    const std::size_t m1 = rng() % 3, m2 = rng() % 3;
    Diagram a = testing::random_diagram(rng, rng() % 3, m1);
    Diagram b = testing::random_diagram(rng, m1, m2);
    Diagram c = testing::random_diagram(rng, m2, rng() % 3);
    Diagram left = compose(compose(a, b), c);
    Diagram right = compose(a, compose(b, c));
    CHECK(iso_equal(left, right));
    left.validate();
    right.validate();
  }
}

TEST_CASE("adjoint reverses composition on random diagrams") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    const std::size_t mid = rng() % 3;
    Diagram a = testing::random_diagram(rng, rng() % 3, mid);
    Diagram b = testing::random_diagram(rng, mid, rng() % 3);
    CHECK(iso_equal(adjoint(compose(a, b)), compose(adjoint(b), adjoint(a))));
    CHECK(iso_equal(adjoint(adjoint(a)), a));
  }
}

TEST_CASE("exact and float backends agree within 1e-9 on random diagrams") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    Diagram d = testing::random_diagram(rng, rng() % 3, rng() % 3);
    CHECK(max_abs_diff(evaluate(d), evaluate_float(d)) < 1e-9);
  }
}

TEST_CASE("contraction order independence on random diagrams") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    Diagram d = testing::random_diagram(rng, rng() % 3, rng() % 3);
    Matrix reference = evaluate(d);
    EvalOptions opts;
    opts.randomize_order = true;
    opts.seed = rng();
    CHECK(evaluate(d, opts) == reference);
  }
}

TEST_CASE("serialization round-trip is the identity up to isomorphism") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    Diagram d = testing::random_diagram(rng, rng() % 3, rng() % 3);
    Diagram back = diagram_from_string(diagram_to_string(d));
    CHECK(iso_equal(d, back));
  }
}

TEST_CASE("find_matches and run are deterministic on random diagrams") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 20; ++i) {
    Diagram d = testing::random_diagram(rng, rng() % 3, rng() % 3);
    for (const char* rule : {"green_sp", "red_sp", "hopf", "green_id"}) {
      auto a = find_matches_any(rule_by_name(rule), d);
      auto b = find_matches_any(rule_by_name(rule), d);
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].vertex_map == b[k].vertex_map);
        CHECK(a[k].counts == b[k].counts);
      }
    }
    auto [r1, t1] = run(builtin_simproc("basic_simp"), d);
    auto [r2, t2] = run(builtin_simproc("basic_simp"), d);
    CHECK(r1.canonical_string() == r2.canonical_string());
    REQUIRE(t1.steps.size() == t2.steps.size());
    for (std::size_t k = 0; k < t1.steps.size(); ++k) {
      CHECK(t1.steps[k].post_digest == t2.steps[k].post_digest);
    }
  }
}

TEST_CASE("every produced trace certifies") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 15; ++i) {
    Diagram d = testing::random_diagram(rng, rng() % 3, rng() % 3);
    auto [result, trace] = run(builtin_simproc("basic_simp"), d);
    (void)result;
    CertifyReport rep = certify(trace, d);
    CHECK_MESSAGE(rep.pass, "iteration ", i, ": ", rep.detail);
  }
}

TEST_CASE("phase-free reduction strictly shrinks (vertices, edges) outside hopf/copy") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 15; ++i) {
    // phase-free corpus: zero all phases
    Diagram d = testing::random_diagram(rng, rng() % 3, rng() % 3);
    Diagram flat;
    std::map<VertexId, VertexId> copy;
    for (const auto& [v, data] : d.vertices()) {
      copy[v] = flat.add_vertex_with_id(v, data.type, Phase());
    }
    for (const auto& [e, ed] : d.edges()) flat.add_edge(ed.a, ed.b);
    for (VertexId v : d.inputs()) flat.mark_input(v);
    for (VertexId v : d.outputs()) flat.mark_output(v);

    Diagram cur = flat;
    auto [result, trace] = run(builtin_simproc("reduce_phase_free"), flat);
    (void)result;
    for (const TraceStep& step : trace.steps) {
      RewriteRule inst = concrete_rule_for(step.match);
      Diagram next = apply_match(inst, step.match, cur).diagram;
      const bool lex_decrease =
          next.interior_count() < cur.interior_count() ||
          (next.interior_count() == cur.interior_count() && next.edge_count() < cur.edge_count());
      if (step.match.rule == "hopf" || step.match.rule == "green_copy" ||
          step.match.rule == "red_copy") {
        CHECK(next.edge_count() < cur.edge_count());
      } else {
        CHECK_MESSAGE(lex_decrease, "rule ", step.match.rule, " did not shrink");
      }
      cur = next;
    }
  }
}
