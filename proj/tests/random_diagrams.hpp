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

#include <random>

#include "zxcc/diagram.hpp"

namespace zxcc::testing {

/**
 * Random small diagram: up to `max_interior` Z/X spiders with pi/4-multiple
 * phases, random multi-edges and loops, H vertices spliced onto edges, and
 * the requested boundary arities. All invariants hold by construction.
 */
inline Diagram random_diagram(std::mt19937_64& rng, std::size_t n_in, std::size_t n_out,
                              std::size_t max_interior = 6) {
  Diagram d;
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> quarter(0, 7);

  const std::size_t n_int = 1 + rng() % max_interior;
  std::vector<VertexId> interior;
  for (std::size_t i = 0; i < n_int; ++i) {
    VertexType t = coin(rng) ? VertexType::Z : VertexType::X;
    interior.push_back(d.add_vertex(t, Phase(quarter(rng), 4)));
  }
  const std::size_t n_edges = 1 + rng() % (2 * n_int);
  for (std::size_t i = 0; i < n_edges; ++i) {
    VertexId a = interior[rng() % interior.size()];
    VertexId b = interior[rng() % interior.size()];
    d.add_edge(a, b);  // loops and parallels allowed
  }
  for (std::size_t i = 0; i < n_in; ++i) {
    d.add_edge(d.add_input(), interior[rng() % interior.size()]);
  }
  for (std::size_t i = 0; i < n_out; ++i) {
    d.add_edge(interior[rng() % interior.size()], d.add_output());
  }
  // splice H vertices onto a few interior-interior edges
  const std::size_t n_h = rng() % 3;
  for (std::size_t i = 0; i < n_h; ++i) {
    std::vector<EdgeId> candidates;
    for (const auto& [id, e] : d.edges()) {
      if (!d.is_boundary(e.a) && !d.is_boundary(e.b)) candidates.push_back(id);
    }
    if (candidates.empty()) break;
    EdgeId pick = candidates[rng() % candidates.size()];
    VertexId a = d.endpoint(pick, 0), b = d.endpoint(pick, 1);
    d.remove_edge(pick);
    VertexId h = d.add_vertex(VertexType::H);
    d.add_edge(a, h);
    d.add_edge(h, b);
  }
  d.validate();
  return d;
}

}  // namespace zxcc::testing
