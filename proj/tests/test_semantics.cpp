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

#include "zxcc/colour_code.hpp"
#include "zxcc/error.hpp"
#include "zxcc/evaluate.hpp"

using namespace zxcc;

TEST_CASE("generator matrices match the standard interpretation") {
  // green unit: |+> up to normalization
  Matrix plus = generator_matrix(VertexType::Z, Phase(), 0, 1);
  CHECK(plus.at(0, 0) == ExactScalar::one());
  CHECK(plus.at(1, 0) == ExactScalar::one());

  // red pi state: proportional to |1>
  Matrix one = generator_matrix(VertexType::X, Phase::pi(), 0, 1);
  CHECK(one.at(0, 0).is_zero());
  CHECK(one.at(1, 0) == ExactScalar::sqrt2_pow(1));

  // H is exactly 1/sqrt2 [[1,1],[1,-1]]
  Matrix h = generator_matrix(VertexType::H, Phase(), 1, 1);
  const ExactScalar s = ExactScalar::inv_sqrt2_pow(1);
  CHECK(h.at(0, 0) == s);
  CHECK(h.at(0, 1) == s);
  CHECK(h.at(1, 0) == s);
  CHECK(h.at(1, 1) == -s);
  CHECK_THROWS_AS(generator_matrix(VertexType::H, Phase(), 2, 1), ArityError);

  // Z spider maps |0..0> to |0..0> and |1..1> to e^{ia}|1..1>
  Matrix z = generator_matrix(VertexType::Z, Phase(1, 4), 2, 1);
  CHECK(z.at(0, 0) == ExactScalar::one());
  CHECK(z.at(1, 3) == ExactScalar::omega_pow(1));
  CHECK(z.at(0, 1).is_zero());
  CHECK(z.at(1, 1).is_zero());
}

TEST_CASE("evaluate of identities and empty diagrams") {
  CHECK(evaluate(Diagram::empty()) == Matrix::identity(1));
  for (std::size_t n : {1u, 2u, 3u}) {
    CHECK(evaluate(Diagram::identity(n)) == Matrix::identity(std::size_t(1) << n));
  }
}

TEST_CASE("the CNOT diagram evaluates to the CNOT permutation up to scalar") {
  Matrix m = evaluate(code::cnot_gate(2, 1, 2));
  Matrix cnot(4, 4);
  cnot.at(0, 0) = ExactScalar::one();
  cnot.at(1, 1) = ExactScalar::one();
  cnot.at(2, 3) = ExactScalar::one();
  cnot.at(3, 2) = ExactScalar::one();
  ProportionalResult res = proportional_equal(m, cnot);
  CHECK(res.proportional);
  REQUIRE(res.witness.has_value());
  CHECK(*res.witness == ExactScalar::inv_sqrt2_pow(1));
}

TEST_CASE("an 8-output green spider is the GHZ state") {
  Diagram d;
  VertexId g = d.add_vertex(VertexType::Z);
  for (int i = 0; i < 8; ++i) d.add_edge(g, d.add_output());
  Matrix m = evaluate(d);
  CHECK(m.cols() == 1);
  CHECK(m.rows() == 256);
  for (std::size_t r = 0; r < 256; ++r) {
    if (r == 0 || r == 255) {
      CHECK(m.at(r, 0) == ExactScalar::one());
    } else {
      CHECK(m.at(r, 0).is_zero());
    }
  }
}

TEST_CASE("composing two phase gates adds the phases up to scalar") {
  auto zgate = [](Phase p) {
    Diagram d;
    VertexId v = d.add_vertex(VertexType::Z, p);
    d.add_edge(d.add_input(), v);
    d.add_edge(v, d.add_output());
    return d;
  };
  Diagram both = compose(zgate(Phase(1, 4)), zgate(Phase(1, 2)));
  ProportionalResult res =
      proportional_equal(evaluate(both), evaluate(zgate(Phase(3, 4))));
  CHECK(res.proportional);
}

TEST_CASE("functoriality: compose and tensor map to product and kron") {
  Diagram a = code::cnot_gate(2, 1, 2);
  Diagram b = code::pauli_layer(2, VertexType::X, {2});
  CHECK(evaluate(compose(a, b)) == evaluate(b) * evaluate(a));
  CHECK(evaluate(tensor(a, b)) == evaluate(a).kron(evaluate(b)));
}

TEST_CASE("dagger: adjoint evaluates to the conjugate transpose") {
  Diagram d = compose(code::cnot_gate(2, 1, 2), code::phase_layer(2, {Phase(1, 4), Phase(0, 1)}));
  CHECK(evaluate(adjoint(d)) == evaluate(d).dagger());
}

TEST_CASE("proportional equality finds witnesses and rejects zero mismatches") {
  Matrix m(2, 2);
  m.at(0, 0) = ExactScalar::one();
  m.at(1, 1) = ExactScalar::omega_pow(3);
  Matrix two = m.scaled(ExactScalar::from_int(2));
  ProportionalResult res = proportional_equal(two, m);
  CHECK(res.proportional);
  CHECK(*res.witness == ExactScalar::from_int(2));

  Matrix zero(2, 2);
  CHECK_FALSE(proportional_equal(m, zero).proportional);
  CHECK_FALSE(proportional_equal(zero, m).proportional);
  ProportionalResult zz = proportional_equal(zero, zero);
  CHECK(zz.proportional);
  CHECK(*zz.witness == ExactScalar::one());
  CHECK_THROWS_AS(proportional_equal(m, Matrix(2, 4)), ArityError);
}

TEST_CASE("apply_to_basis prepares exact product states") {
  Diagram wire = Diagram::identity(1);
  Matrix one = apply_to_basis(wire, "1");
  CHECK(one.at(0, 0).is_zero());
  CHECK(one.at(1, 0) == ExactScalar::one());

  Matrix plus = apply_to_basis(wire, "+");
  CHECK(plus.at(0, 0) == ExactScalar::inv_sqrt2_pow(1));
  CHECK(plus.at(1, 0) == ExactScalar::inv_sqrt2_pow(1));

  CHECK_THROWS_AS(apply_to_basis(wire, "00"), ArityError);
  CHECK_THROWS_AS(apply_to_basis(wire, "q"), FormatError);

  Matrix enc000 = apply_to_basis(code::build_enc(), "000");
  ProportionalResult res = proportional_equal(enc000, basis_column("00000000") +
                                                          basis_column("11111111"));
  CHECK(res.proportional);
}

TEST_CASE("contraction order does not change the result") {
  Diagram d = code::ccz_logical();
  Matrix reference = evaluate(d);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    EvalOptions opts;
    opts.randomize_order = true;
    opts.seed = seed;
    CHECK(evaluate(d, opts) == reference);
  }
}

TEST_CASE("exact and float backends agree") {
  Diagram d = code::ccz_logical();
  Matrix exact = evaluate(d);
  MatrixF approx = evaluate_float(d);
  CHECK(max_abs_diff(exact, approx) < 1e-9);
}

TEST_CASE("float backend handles non-quarter phases; exact refuses them") {
  Diagram d;
  VertexId v = d.add_vertex(VertexType::Z, Phase(1, 3));
  d.add_edge(d.add_input(), v);
  d.add_edge(v, d.add_output());
  CHECK_THROWS_AS(evaluate(d), ZXError);
  MatrixF m = evaluate_float(d);
  CHECK(std::abs(m.at(1, 1) - std::polar(1.0, std::acos(-1.0) / 3)) < 1e-12);
}

TEST_CASE("the intermediate dimension cap raises a resource error") {
  Diagram d;
  VertexId g = d.add_vertex(VertexType::Z);
  for (int i = 0; i < 8; ++i) d.add_edge(g, d.add_output());
  EvalOptions opts;
  opts.max_entries = 1 << 4;
  CHECK_THROWS_AS(evaluate(d, opts), ResourceError);
}

TEST_CASE("scalar subdiagrams multiply into the matrix") {
  // a circle (degree-0 Z(0)) next to a wire doubles every entry
  Diagram d = Diagram::identity(1);
  d.add_vertex(VertexType::Z);
  Matrix m = evaluate(d);
  CHECK(m.at(0, 0) == ExactScalar::from_int(2));
  CHECK(m.at(1, 1) == ExactScalar::from_int(2));
  CHECK(m.at(0, 1).is_zero());
}
