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

#include "zxcc/diagram.hpp"
#include "zxcc/error.hpp"
#include "zxcc/json_io.hpp"

using namespace zxcc;

namespace {

/** 1 -> 1 diagram with a single spider of the given kind and phase. */
Diagram gate1(VertexType t, Phase p) {
  Diagram d;
  VertexId v = d.add_vertex(t, p);
  d.add_edge(d.add_input(), v);
  d.add_edge(v, d.add_output());
  return d;
}

}  // namespace

TEST_CASE("compose fuses boundaries and keeps bare wires bare") {
  Diagram id3 = Diagram::identity(3);
  Diagram two = compose(id3, id3);
  CHECK(iso_equal(two, id3));

  Diagram za = gate1(VertexType::Z, Phase(1, 4));
  Diagram zb = gate1(VertexType::Z, Phase(1, 2));
  Diagram chain = compose(za, zb);
  CHECK(chain.inputs().size() == 1);
  CHECK(chain.outputs().size() == 1);
  CHECK(chain.interior_count() == 2);
  CHECK(chain.edge_count() == 3);
  chain.validate();
}

TEST_CASE("compose arity mismatch is reported") {
  CHECK_THROWS_WITH_AS(compose(Diagram::identity(2), Diagram::identity(3)),
                       doctest::Contains("2 outputs"), ArityError);
}

TEST_CASE("composing a cap with a cup yields the circle scalar") {
  Diagram cap;  // 0 -> 2
  {
    VertexId a = cap.add_output();
    VertexId b = cap.add_output();
    cap.add_edge(a, b);
  }
  Diagram cup;  // 2 -> 0
  {
    VertexId a = cup.add_input();
    VertexId b = cup.add_input();
    cup.add_edge(a, b);
  }
  Diagram circle = compose(cap, cup);
  CHECK(circle.inputs().empty());
  CHECK(circle.outputs().empty());
  // the circle is recorded as one degree-0 Z(0) spider (scalar 2)
  CHECK(circle.interior_count() == 1);
  CHECK(circle.edge_count() == 0);
}

TEST_CASE("tensor is a disjoint union with ordered boundaries") {
  Diagram d = tensor(Diagram::empty(), Diagram::identity(1));
  CHECK(iso_equal(d, Diagram::identity(1)));
  Diagram two = tensor(Diagram::identity(1), Diagram::identity(1));
  CHECK(iso_equal(two, Diagram::identity(2)));
  Diagram mixed = tensor(gate1(VertexType::Z, Phase(1, 4)), gate1(VertexType::X, Phase(1, 1)));
  CHECK(mixed.inputs().size() == 2);
  CHECK(mixed.interior_count() == 2);
}

TEST_CASE("adjoint is an involution that negates phases") {
  Diagram d = gate1(VertexType::Z, Phase(1, 4));
  Diagram adj = adjoint(d);
  bool found = false;
  for (const auto& [id, data] : adj.vertices()) {
    if (data.type == VertexType::Z) {
      CHECK(data.phase == Phase(7, 4));
      found = true;
    }
  }
  CHECK(found);
  CHECK(iso_equal(adjoint(adj), d));
}

TEST_CASE("adjoint reverses composition") {
  Diagram a = gate1(VertexType::Z, Phase(1, 4));
  Diagram b = gate1(VertexType::X, Phase(1, 2));
  CHECK(iso_equal(adjoint(compose(a, b)), compose(adjoint(b), adjoint(a))));
}

TEST_CASE("iso_equal respects kinds, phases and boundary order") {
  Diagram a = gate1(VertexType::Z, Phase(1, 4));
  Diagram b = gate1(VertexType::Z, Phase(1, 4));
  CHECK(iso_equal(a, b));
  CHECK_FALSE(iso_equal(a, gate1(VertexType::X, Phase(1, 4))));
  CHECK_FALSE(iso_equal(a, gate1(VertexType::Z, Phase(1, 2))));
  // a phase-0 spider on a wire is not syntactically a bare wire
  CHECK_FALSE(iso_equal(gate1(VertexType::Z, Phase()), Diagram::identity(1)));
}

TEST_CASE("iso_equal distinguishes swapped wires") {
  // X gate on wire 1 of 2 vs wire 2 of 2
  auto on_wire = [](int which) {
    Diagram d;
    for (int w = 1; w <= 2; ++w) {
      VertexId in = d.add_input();
      VertexId out = d.add_output();
      if (w == which) {
        VertexId v = d.add_vertex(VertexType::X, Phase::pi());
        d.add_edge(in, v);
        d.add_edge(v, out);
      } else {
        d.add_edge(in, out);
      }
    }
    return d;
  };
  CHECK(iso_equal(on_wire(1), on_wire(1)));
  CHECK_FALSE(iso_equal(on_wire(1), on_wire(2)));
}

TEST_CASE("validator enforces H and boundary degrees") {
  Diagram d;
  VertexId h = d.add_vertex(VertexType::H);
  VertexId in = d.add_input();
  d.add_edge(in, h);
  CHECK_THROWS_AS(d.validate(), ZXError);  // H degree 1
  VertexId out = d.add_output();
  d.add_edge(h, out);
  d.validate();

  Diagram e;
  VertexId b = e.add_input();
  (void)b;
  CHECK_THROWS_AS(e.validate(), ZXError);  // boundary degree 0
}

TEST_CASE("multigraph edges and self-loops are tracked") {
  Diagram d;
  VertexId a = d.add_vertex(VertexType::Z);
  VertexId b = d.add_vertex(VertexType::X);
  d.add_edge(a, b);
  d.add_edge(a, b);
  d.add_edge(a, a);
  CHECK(d.degree(a) == 4);
  CHECK(d.degree(b) == 2);
  CHECK(d.loops_at(a) == 1);
  CHECK(d.edges_between(a, b).size() == 2);
  CHECK(d.half_edges_at(a).size() == 4);
}

TEST_CASE("diagram JSON round-trip is isomorphic") {
  Diagram d;
  VertexId in = d.add_input();
  VertexId z = d.add_vertex(VertexType::Z, Phase(3, 4));
  VertexId x = d.add_vertex(VertexType::X, Phase(1, 1));
  VertexId h = d.add_vertex(VertexType::H);
  VertexId out = d.add_output();
  d.add_edge(in, z);
  d.add_edge(z, x);
  d.add_edge(z, x);
  d.add_edge(x, h);
  d.add_edge(h, z);
  d.add_edge(x, out);
  d.validate();

  Diagram back = diagram_from_string(diagram_to_string(d));
  CHECK(iso_equal(d, back));
  CHECK(d.digest() == back.digest());
}

TEST_CASE("diagram JSON rejects malformed payloads") {
  CHECK_THROWS_AS(diagram_from_string("{"), FormatError);
  CHECK_THROWS_AS(diagram_from_string(R"({"vertices":{"0":{"kind":"Q"}}})"), FormatError);
  // H with degree 1 violates the invariant
  CHECK_THROWS_AS(diagram_from_string(
                      R"({"inputs":[1],"outputs":[],"vertices":{"0":{"kind":"H"},"1":{"kind":"B"}},"edges":[[0,1]]})"),
                  ZXError);
}

TEST_CASE("digest is stable across construction order") {
  Diagram a;
  VertexId a_in = a.add_input();
  VertexId a_z = a.add_vertex(VertexType::Z, Phase(1, 4));
  VertexId a_out = a.add_output();
  a.add_edge(a_in, a_z);
  a.add_edge(a_z, a_out);

  Diagram b;
  VertexId b_z = b.add_vertex(VertexType::Z, Phase(1, 4));
  VertexId b_out = b.add_output();
  VertexId b_in = b.add_input();
  b.add_edge(b_z, b_out);
  b.add_edge(b_in, b_z);

  CHECK(a.digest() == b.digest());
  CHECK(iso_equal(a, b));
}
