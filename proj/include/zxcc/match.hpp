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

#include "zxcc/diagram.hpp"
#include "zxcc/rule.hpp"

namespace zxcc {

/**
 * Where an lhs boundary vertex lands in the target. For a boundary whose
 * lhs edge reaches an interior vertex, (target_edge, end) is the consumed
 * half-edge at the matched image; the surviving wire stub hangs off the
 * far end. For a boundary on an lhs bare wire, `end` is the end of the
 * matched target edge this boundary faces.
 */
struct BoundaryAttach {
  VertexId lhs_boundary = 0;
  EdgeId target_edge = 0;
  int end = 0;
  auto operator<=>(const BoundaryAttach&) const = default;
};

/**
 * An embedding of a rule's lhs into a target diagram, replayable: applying
 * the same match to the same diagram yields an identical result.
 */
struct Match {
  std::string rule;         // base rule name
  std::vector<int> counts;  // repetition-box counts used to instantiate
  bool reversed = false;    // rule taken in the expansion direction
  std::uint64_t target_digest = 0;

  std::map<VertexId, VertexId> vertex_map;  // lhs interior -> target vertex
  std::map<EdgeId, EdgeId> edge_map;        // lhs interior edge -> target edge
  std::vector<BoundaryAttach> attachments;  // one per lhs boundary
  Assignment assignment;                    // phase variable bindings
  /** rhs interior -> result vertex id; filled by apply, honored on replay. */
  std::map<VertexId, VertexId> rhs_vertex_ids;

  nlohmann::ordered_json to_json() const;
  static Match from_json(const nlohmann::json& j);
};

/**
 * All matches of a concrete (box-free) rule, deduplicated up to rule
 * automorphism (same footprint and same rewritten diagram) and enumerated
 * in a canonical order, lexicographic by sorted target-vertex ids.
 * Requires every lhs phase expression to be constant or single-variable
 * and every rhs variable to be lhs-bound.
 */
std::vector<Match> find_matches(const RewriteRule& rule, const Diagram& target);

/** As find_matches, instantiating boxed rules over all feasible counts. */
std::vector<Match> find_matches_any(const RewriteRule& rule, const Diagram& target);

struct ApplyResult {
  Diagram diagram;
  Match match;  // as applied, with rhs_vertex_ids recorded
};

/**
 * Applies a match. `rule` must be the concrete instance the match was made
 * for (same counts/direction). Verifies the match structurally against the
 * target first and throws StaleMatchError when the digest disagrees.
 */
ApplyResult apply_match(const RewriteRule& rule, const Match& m, const Diagram& target);

}  // namespace zxcc
