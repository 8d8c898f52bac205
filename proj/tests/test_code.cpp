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

#include <fstream>

#include "zxcc/colour_code.hpp"
#include "zxcc/evaluate.hpp"
#include "zxcc/json_io.hpp"
#include "zxcc/ruleset.hpp"
#include "zxcc/simproc.hpp"

using namespace zxcc;
using namespace zxcc::code;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(ZXCC_FIXTURE_DIR) + "/v1/" + name;
}

bool fixture_exists(const std::string& name) {
  std::ifstream f(fixture_path(name));
  return f.good();
}

}  // namespace

TEST_CASE("the encoder maps |000> to the GHZ codeword") {
  Matrix col = apply_to_basis(build_enc(), "000");
  ProportionalResult res =
      proportional_equal(col, basis_column("00000000") + basis_column("11111111"));
  CHECK(res.proportional);
}

TEST_CASE("the encoder flips the logical-2 support on |010>") {
  Matrix col = apply_to_basis(build_enc(), "010");
  ProportionalResult res =
      proportional_equal(col, basis_column("11001100") + basis_column("00110011"));
  CHECK(res.proportional);
}

TEST_CASE("the decoder is the adjoint of the encoder") {
  CHECK(iso_equal(build_dec(), adjoint(build_enc())));
  CHECK(iso_equal(adjoint(build_dec()), build_enc()));
}

TEST_CASE("composing with the identity leaves the encoder unchanged") {
  CHECK(iso_equal(compose(Diagram::identity(3), build_enc()), build_enc()));
  CHECK(iso_equal(compose(build_enc(), Diagram::identity(8)), build_enc()));
}

TEST_CASE("the physical CCZ layer is a tensor of single-wire phase gates") {
  auto tgate = [](const Phase& p) {
    Diagram d;
    VertexId v = d.add_vertex(VertexType::Z, p);
    d.add_edge(d.add_input(), v);
    d.add_edge(v, d.add_output());
    return d;
  };
  const Phase t(1, 4), tdg(-1, 4);
  Diagram layered = Diagram::empty();
  for (const Phase& p : {t, tdg, tdg, t, tdg, t, t, tdg}) {
    layered = tensor(layered, tgate(p));
  }
  CHECK(iso_equal(layered, ccz_physical()));
}

TEST_CASE("a mutated encoder fails the codeword oracle") {
  // move one leg of the logical-3 gadget from wire 4 to wire 5
  Diagram enc = build_enc();
  VertexId g3 = enc.other_endpoint(enc.half_edges_at(enc.inputs()[2]).front().edge, enc.inputs()[2]);
  VertexId red4 = 0, red5_neighbor = 0;
  for (const HalfEdge& h : enc.half_edges_at(g3)) {
    VertexId other = enc.other_endpoint(h.edge, g3);
    if (enc.is_boundary(other) || enc.vertex(other).type != VertexType::X) continue;
    // the red on wire 4 is adjacent to output 4
    for (const HalfEdge& hh : enc.half_edges_at(other)) {
      if (enc.other_endpoint(hh.edge, other) == enc.outputs()[3]) red4 = other;
    }
  }
  REQUIRE(red4 != 0);
  red5_neighbor = enc.other_endpoint(enc.half_edges_at(enc.outputs()[4]).front().edge,
                                     enc.outputs()[4]);
  EdgeId moved = enc.edges_between(g3, red4).front();
  enc.remove_edge(moved);
  // wire 4's red loses the control, wire 5's red gains one
  enc.add_edge(g3, red5_neighbor);
  enc.validate();
  // logical wire 3 should flip {1,2,3,4}; the mutation breaks that codeword
  Matrix good = apply_to_basis(build_enc(), "001");
  ProportionalResult sanity =
      proportional_equal(good, basis_column("11110000") + basis_column("00001111"));
  CHECK(sanity.proportional);
  Matrix col = apply_to_basis(enc, "001");
  CHECK_FALSE(proportional_equal(col, basis_column("11110000") + basis_column("00001111"))
                  .proportional);
}

TEST_CASE("a wrong X support breaks the Pauli equation") {
  Diagram enc = build_enc();
  Diagram lhs = compose(pauli_layer(3, VertexType::X, {3}), enc);
  Diagram rhs_bad = compose(enc, pauli_layer(8, VertexType::X, {1, 2, 3, 5}));
  CHECK_FALSE(proportional_equal(evaluate(lhs), evaluate(rhs_bad)).proportional);
}

TEST_CASE("logical CNOT acts on the computational basis") {
  Matrix m = evaluate(cnot_logical(2, 3));
  // |011> -> |010>: column index 3 is proportional to basis 2
  ProportionalResult res = proportional_equal(m * basis_column("011"), basis_column("010"));
  CHECK(res.proportional);
  ProportionalResult fixed = proportional_equal(m * basis_column("100"), basis_column("100"));
  CHECK(fixed.proportional);
}

TEST_CASE("the logical CCZ is diag(1,...,1,-1) up to scalar") {
  Matrix m = evaluate(ccz_logical());
  Matrix ccz(8, 8);
  for (std::size_t b = 0; b < 8; ++b) {
    ccz.at(b, b) = b == 7 ? -ExactScalar::one() : ExactScalar::one();
  }
  ProportionalResult res = proportional_equal(m, ccz);
  CHECK(res.proportional);
  // |110> keeps its sign
  ProportionalResult on110 = proportional_equal(m * basis_column("110"), basis_column("110"));
  CHECK(on110.proportional);
}

TEST_CASE("the physical CCZ layer is the advertised T pattern") {
  Diagram p = ccz_physical();
  std::vector<Phase> expected = {Phase(1, 4), Phase(-1, 4), Phase(-1, 4), Phase(1, 4),
                                 Phase(-1, 4), Phase(1, 4),  Phase(1, 4),  Phase(-1, 4)};
  // read the phase on each wire
  for (int w = 1; w <= 8; ++w) {
    VertexId in = p.inputs()[static_cast<std::size_t>(w - 1)];
    VertexId v = p.other_endpoint(p.half_edges_at(in).front().edge, in);
    CHECK(p.vertex(v).type == VertexType::Z);
    CHECK(p.vertex(v).phase == expected[static_cast<std::size_t>(w - 1)]);
  }
}

TEST_CASE("the derived physical CNOT uses at most five gates") {
  auto gates = derive_cnot_gates(2, 3);
  CHECK(gates.size() <= 5);
  for (const auto& [c, t] : gates) {
    CHECK(c >= 1);
    CHECK(c <= 8);
    CHECK(t >= 1);
    CHECK(t <= 8);
    CHECK(c != t);
  }
  CHECK(derive_cnot_gates(2, 3) == gates);  // deterministic
}

TEST_CASE("the identity circuit is rejected by the CNOT oracle") {
  Diagram id8 = Diagram::identity(8);
  Diagram conj = compose(compose(build_enc(), id8), build_dec());
  CHECK_FALSE(proportional_equal(evaluate(conj), evaluate(cnot_logical(2, 3))).proportional);
}

TEST_CASE("encoder circuit fixtures are structurally sane") {
  Diagram c = encoder_circuit();
  CHECK(c.inputs().size() == 3);
  CHECK(c.outputs().size() == 8);
  std::size_t preps = 0, controls = 0, targets = 0;
  for (const auto& [v, data] : c.vertices()) {
    if (data.type == VertexType::Boundary) continue;
    if (c.degree(v) == 1) ++preps;
    if (c.degree(v) == 3 && data.type == VertexType::Z) ++controls;
    if (c.degree(v) == 3 && data.type == VertexType::X) ++targets;
  }
  CHECK(preps == 5);
  CHECK(controls == 16);
  CHECK(targets == 16);

  Diagram gates = encoder_circuit_gates();
  CHECK(gates.inputs().size() == 8);
  CHECK(gates.outputs().size() == 8);
}

TEST_CASE("run_all skips downstream obligations when asked subsets") {
  std::vector<Report> reports = run_all({"codewords"});
  REQUIRE(reports.size() == 1);
  CHECK(reports.front().name == "codewords");
  CHECK(reports.front().pass);
}

TEST_CASE("a corrupted ruleset fails soundness and skips downstream checks") {
  std::vector<RewriteRule> corrupted = builtin_rules();
  for (RewriteRule& r : corrupted) {
    if (r.name == "euler") {
      // break the middle rotation
      RuleGraph rhs;
      VertexId s1 = rhs.add_vertex_with_id(100, VertexType::Z, PhaseExpr(Phase(1, 4)));
      VertexId s2 = rhs.add_vertex_with_id(101, VertexType::X, PhaseExpr(Phase(1, 2)));
      VertexId s3 = rhs.add_vertex_with_id(104, VertexType::Z, PhaseExpr(Phase(1, 2)));
      VertexId c1 = rhs.add_vertex_with_id(102, VertexType::Boundary);
      VertexId c2 = rhs.add_vertex_with_id(103, VertexType::Boundary);
      rhs.mark_input(c1);
      rhs.mark_output(c2);
      rhs.add_edge(c1, s1);
      rhs.add_edge(s1, s2);
      rhs.add_edge(s2, s3);
      rhs.add_edge(s3, c2);
      r.rhs = rhs;
    }
  }
  std::vector<Report> reports = run_all({"rules", "codewords"}, &corrupted);
  REQUIRE(reports.size() == 2);
  CHECK_FALSE(reports[0].pass);
  CHECK(reports[1].skipped);
}

TEST_CASE("shipped fixtures match the derivations") {
  if (!fixture_exists("cnot_p_2_3.json")) return;  // fixtures generated post-build
  Diagram shipped = load_diagram(fixture_path("cnot_p_2_3.json"));
  CHECK(iso_equal(shipped, derive_cnot_physical(2, 3)));

  Diagram circuit = load_diagram(fixture_path("enc_circuit.json"));
  CHECK(iso_equal(circuit, encoder_circuit()));

  ProofTrace trace = ProofTrace::from_json(load_json_file(fixture_path("enc_circuit_trace.json")));
  Diagram enc = build_enc();
  Diagram final_d = replay(trace, enc);
  CHECK(iso_equal(final_d, encoder_circuit()));
  CHECK(certify(trace, enc).pass);
}

TEST_CASE("the shipped CNOT proof trace replays and certifies") {
  if (!fixture_exists("cnot_proof_trace.json")) return;
  ProofTrace trace = ProofTrace::from_json(load_json_file(fixture_path("cnot_proof_trace.json")));
  Diagram composite =
      compose(compose(build_enc(), derive_cnot_physical(2, 3)), build_dec());
  Diagram final_d = replay(trace, composite);
  CHECK(iso_equal(final_d, cnot_logical(2, 3)));
  CHECK(certify(trace, composite).pass);
}
