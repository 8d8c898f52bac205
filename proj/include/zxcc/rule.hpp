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
#include <set>
#include <vector>

#include "zxcc/diagram.hpp"
#include "zxcc/phase_expr.hpp"

namespace zxcc {

struct RuleVertexData {
  VertexType type = VertexType::Z;
  PhaseExpr phase;
  bool operator==(const RuleVertexData&) const = default;
};

/** A diagram pattern: like Diagram but spider phases are expressions. */
class RuleGraph {
 public:
  VertexId add_vertex(VertexType type, PhaseExpr phase = PhaseExpr());
  VertexId add_vertex_with_id(VertexId id, VertexType type, PhaseExpr phase = PhaseExpr());
  EdgeId add_edge(VertexId u, VertexId v);
  VertexId add_input();
  VertexId add_output();
  void mark_input(VertexId id) { inputs_.push_back(id); }
  void mark_output(VertexId id) { outputs_.push_back(id); }

  const std::map<VertexId, RuleVertexData>& vertices() const { return vertices_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }

  bool has_vertex(VertexId id) const { return vertices_.count(id) != 0; }
  const RuleVertexData& vertex(VertexId id) const;
  bool is_boundary(VertexId id) const { return vertex(id).type == VertexType::Boundary; }
  std::size_t degree(VertexId v) const;
  std::size_t loops_at(VertexId v) const;
  std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;
  std::vector<VertexId> interior() const;         // sorted
  std::vector<VertexId> boundary_vertices() const;  // sorted
  /** The unique neighbor of a degree-1 boundary vertex. */
  VertexId boundary_neighbor(VertexId b) const;
  /** Edge incident to a degree-1 boundary vertex. */
  EdgeId boundary_edge(VertexId b) const;

  /** Concrete diagram under an assignment binding every variable. */
  Diagram to_diagram(const Assignment& assign) const;

  std::set<std::string> variables() const;

 private:
  std::map<VertexId, RuleVertexData> vertices_;
  std::map<EdgeId, Edge> edges_;
  std::vector<VertexId> inputs_, outputs_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

/**
 * A repetition box: the marked subgraph (vertices on both sides of the rule)
 * may be replicated 0..max times by instantiate(). Boundary vertices inside
 * a box must be paired through the rule's boundary map, so both sides grow
 * in step.
 */
struct RepetitionBox {
  std::vector<VertexId> lhs_vertices;
  std::vector<VertexId> rhs_vertices;
  int max = 16;
};

/**
 * A directed rewrite rule: two patterns over an identified boundary. Every
 * rhs phase variable must occur on the lhs (not enforced for inverted
 * rules, whose unbound variables are supplied by scripted matches).
 */
class RewriteRule {
 public:
  std::string name;
  RuleGraph lhs, rhs;
  /** Pairs (lhs boundary id, rhs boundary id); a bijection respecting roles. */
  std::vector<std::pair<VertexId, VertexId>> boundary_map;
  std::vector<RepetitionBox> boxes;
  std::vector<std::string> vars;
  bool reversed = false;

  bool is_concrete() const { return boxes.empty(); }

  /** Checks structural sanity; throws ZXError with the violation. */
  void validate_rule() const;

  /**
   * Replicates each box count[i] times on both sides. Edges between two
   * distinct boxes multiply out (cartesian). Count 0 deletes the subgraph.
   * Throws ZXError when a count is outside [0, max].
   */
  RewriteRule instantiate(const std::vector<int>& counts) const;

  /** Swaps lhs and rhs; usable for expansion steps in scripted proofs. */
  RewriteRule inverted() const;

  VertexId rhs_partner(VertexId lhs_boundary) const;
  VertexId lhs_partner(VertexId rhs_boundary) const;

  nlohmann::ordered_json to_json() const;
  static RewriteRule from_json(const nlohmann::json& j);
};

}  // namespace zxcc
