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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zxcc/phase.hpp"

namespace zxcc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class VertexType { Z, X, H, Boundary };

std::string to_string(VertexType t);
VertexType vertex_type_from_string(const std::string& s);

struct VertexData {
  VertexType type = VertexType::Z;
  Phase phase;
  bool operator==(const VertexData&) const = default;
};

/** Undirected edge; endpoints stored with a <= b. Self-loops allowed. */
struct Edge {
  VertexId a = 0;
  VertexId b = 0;
  bool operator==(const Edge&) const = default;
};

/** One end of an edge: end 0 is at Edge::a, end 1 at Edge::b. */
struct HalfEdge {
  EdgeId edge = 0;
  int end = 0;
  auto operator<=>(const HalfEdge&) const = default;
};

/**
 * An open multigraph: phased Z/X spiders, H nodes (degree exactly 2) and
 * degree-1 boundary vertices split into ordered input/output lists.
 *
 * Vertex and edge ids are never reallocated by the fresh-id counter, so
 * construction sequences are reproducible. Operations like compose/tensor/
 * adjoint produce new diagrams; a Diagram is safe to copy and share.
 */
class Diagram {
 public:
  Diagram() = default;

  // Construction ------------------------------------------------------------

  VertexId add_vertex(VertexType type, Phase phase = Phase());
  /** Adds a vertex under a caller-chosen unused id (used by match replay). */
  VertexId add_vertex_with_id(VertexId id, VertexType type, Phase phase = Phase());
  EdgeId add_edge(VertexId u, VertexId v);
  EdgeId add_edge_with_id(EdgeId id, VertexId u, VertexId v);

  /** Adds a Boundary vertex and appends it to the input list. */
  VertexId add_input();
  /** Adds a Boundary vertex and appends it to the output list. */
  VertexId add_output();
  void mark_input(VertexId id);
  void mark_output(VertexId id);

  void remove_edge(EdgeId id);
  /** Removes an isolated vertex (and drops it from any boundary list). */
  void remove_vertex(VertexId id);
  void set_phase(VertexId id, const Phase& phase);

  // Queries -----------------------------------------------------------------

  const std::map<VertexId, VertexData>& vertices() const { return vertices_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }

  bool has_vertex(VertexId id) const { return vertices_.count(id) != 0; }
  bool has_edge(EdgeId id) const { return edges_.count(id) != 0; }
  const VertexData& vertex(VertexId id) const;
  const Edge& edge(EdgeId id) const;
  VertexId endpoint(EdgeId id, int end) const;
  VertexId other_endpoint(EdgeId id, VertexId v) const;

  bool is_boundary(VertexId id) const;
  /** Half-edges incident to v, sorted; a self-loop contributes both ends. */
  std::vector<HalfEdge> half_edges_at(VertexId v) const;
  /** Degree with self-loops counted twice. */
  std::size_t degree(VertexId v) const;
  /** Number of self-loops at v. */
  std::size_t loops_at(VertexId v) const;
  /** Edge ids joining u and v (u != v), sorted. */
  std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;

  std::size_t interior_count() const;
  std::size_t edge_count() const { return edges_.size(); }

  /** Throws ZXError if any structural invariant is violated. */
  void validate() const;

  /**
   * Fuses pairs of degree-1 vertices: for each pair the two vertices and
   * their edges are deleted and the far endpoints joined. A pair joined by
   * a single shared edge closes into a circle, recorded as a fresh Z(0)
   * vertex of degree 0 (the scalar 2).
   */
  void plug_pairs(const std::vector<std::pair<VertexId, VertexId>>& pairs);

  // Canonical form ----------------------------------------------------------

  /**
   * A string invariant under interior relabeling but not under boundary
   * reordering: two diagrams are isomorphic (respecting kinds, phases,
   * multiplicities and boundary order) iff their canonical strings agree.
   */
  std::string canonical_string() const;
  /** FNV-1a 64 over canonical_string(); stable across runs and platforms. */
  std::uint64_t digest() const;

  // Fixtures ----------------------------------------------------------------

  static Diagram empty() { return Diagram(); }
  /** n parallel bare wires. */
  static Diagram identity(std::size_t n);

 private:
  friend Diagram compose(const Diagram&, const Diagram&);
  friend Diagram tensor(const Diagram&, const Diagram&);
  friend Diagram adjoint(const Diagram&);

  /** Copies other into this with vertex/edge ids shifted; returns offsets. */
  std::pair<VertexId, EdgeId> absorb(const Diagram& other);

  std::map<VertexId, VertexData> vertices_;
  std::map<EdgeId, Edge> edges_;
  std::map<VertexId, std::vector<EdgeId>> incidence_;  // loops listed twice
  std::vector<VertexId> inputs_, outputs_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

/**
 * Sequential composition: the i-th output of first is fused with the i-th
 * input of second. Throws ArityError on arity mismatch.
 */
Diagram compose(const Diagram& first, const Diagram& second);

/** Monoidal product: disjoint union, a's boundary wires before b's. */
Diagram tensor(const Diagram& a, const Diagram& b);

/** Mirror: inputs and outputs swapped, all spider phases negated. */
Diagram adjoint(const Diagram& d);

/** Graph isomorphism respecting kinds, phases, edges and boundary order. */
bool iso_equal(const Diagram& a, const Diagram& b);

std::uint64_t fnv1a64(const std::string& s);

}  // namespace zxcc
