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
#include <string>

#include "zxcc/diagram.hpp"
#include "zxcc/matrix.hpp"

namespace zxcc {

struct EvalOptions {
  /** Largest number of entries an intermediate tensor may have. */
  std::size_t max_entries = std::size_t(1) << 22;
  /** Test hook: pick contraction pairs at random instead of greedily. */
  bool randomize_order = false;
  std::uint64_t seed = 0;
};

/**
 * The standard interpretation: a 2^|outputs| x 2^|inputs| matrix over
 * Z[w, 1/sqrt2], obtained by contracting the generator tensors over the
 * edge structure. Requires every phase to be a multiple of pi/4.
 * Wire 1 (first list entry) is the most significant index bit.
 */
Matrix evaluate(const Diagram& d, const EvalOptions& opts = {});

/** Double-precision backend; accepts arbitrary rational phases. */
MatrixF evaluate_float(const Diagram& d, const EvalOptions& opts = {});

/**
 * Generator matrix for a single Z/X/H vertex with the given arities.
 * H requires in = out = 1.
 */
Matrix generator_matrix(VertexType type, const Phase& phase, std::size_t n_in, std::size_t n_out);

/** Exact product-state column for a string over {0,1,+,-}. */
Matrix basis_column(const std::string& bits);

/** evaluate(d) applied to the product state described by bits. */
Matrix apply_to_basis(const Diagram& d, const std::string& bits, const EvalOptions& opts = {});

}  // namespace zxcc
