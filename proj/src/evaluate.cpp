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

#include "zxcc/evaluate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "zxcc/error.hpp"

namespace zxcc {

namespace {

template <typename S>
struct ScalarOps;

template <>
struct ScalarOps<ExactScalar> {
  static ExactScalar one() { return ExactScalar::one(); }
  static ExactScalar from_phase(const Phase& p) { return ExactScalar::from_phase(p); }
  static ExactScalar inv_sqrt2_pow(std::uint32_t n) { return ExactScalar::inv_sqrt2_pow(n); }
  static bool nonzero(const ExactScalar& v) { return !v.is_zero(); }
};

template <>
struct ScalarOps<std::complex<double>> {
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> from_phase(const Phase& p) {
    const double angle = std::numbers::pi * static_cast<double>(p.value().numerator()) /
                         static_cast<double>(p.value().denominator());
    return std::polar(1.0, angle);
  }
  static std::complex<double> inv_sqrt2_pow(std::uint32_t n) {
    return {std::pow(std::sqrt(0.5), static_cast<double>(n)), 0.0};
  }
  static bool nonzero(const std::complex<double>& v) { return v != std::complex<double>(0.0); }
};

// Leg labels: an interior-interior edge half is 2*edge+end and contracts
// against its partner (2*edge+end)^1. A half pointing at a boundary vertex
// is flagged open and identifies that boundary end directly.
constexpr std::uint64_t kOpenFlag = std::uint64_t(1) << 63;

std::uint64_t half_label(EdgeId e, int end) { return (std::uint64_t(e) << 1) | std::uint64_t(end); }

template <typename S>
struct Tensor {
  std::vector<std::uint64_t> legs;  // axis 0 is the most significant index bit
  std::vector<S> data;

  std::size_t rank() const { return legs.size(); }
};

template <typename S>
Tensor<S> vertex_tensor(const Diagram& d, VertexId v, const VertexData& vd) {
  Tensor<S> t;
  for (const HalfEdge& h : d.half_edges_at(v)) {
    VertexId far = d.endpoint(h.edge, 1 - h.end);
    bool loop = d.endpoint(h.edge, 0) == d.endpoint(h.edge, 1);
    if (!loop && d.vertex(far).type == VertexType::Boundary) {
      t.legs.push_back(kOpenFlag | half_label(h.edge, 1 - h.end));
    } else {
      t.legs.push_back(half_label(h.edge, h.end));
    }
  }
  const std::size_t n = t.legs.size();
  t.data.assign(std::size_t(1) << n, S{});
  switch (vd.type) {
    case VertexType::Z: {
      t.data[0] = t.data[0] + ScalarOps<S>::one();
      const std::size_t last = (std::size_t(1) << n) - 1;
      t.data[last] = t.data[last] + ScalarOps<S>::from_phase(vd.phase);
      break;
    }
    case VertexType::X: {
      const S base = ScalarOps<S>::inv_sqrt2_pow(static_cast<std::uint32_t>(n));
      const S ph = ScalarOps<S>::from_phase(vd.phase);
      for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
        const bool odd = std::popcount(idx) % 2 == 1;
        S val = odd ? ScalarOps<S>::one() - ph : ScalarOps<S>::one() + ph;
        t.data[idx] = base * val;
      }
      break;
    }
    case VertexType::H: {
      if (n != 2) throw ArityError("H vertex must have degree 2");
      const S s = ScalarOps<S>::inv_sqrt2_pow(1);
      t.data[0] = s;
      t.data[1] = s;
      t.data[2] = s;
      t.data[3] = S{} - s;
      break;
    }
    case VertexType::Boundary:
      throw ZXError("boundary vertex has no tensor");
  }
  return t;
}

/** Contracts paired legs within a single tensor (self-loops). */
template <typename S>
Tensor<S> self_trace(Tensor<S> t) {
  while (true) {
    std::size_t ax = 0, bx = 0;
    bool found = false;
    for (std::size_t i = 0; i < t.legs.size() && !found; ++i) {
      if (t.legs[i] & kOpenFlag) continue;
      for (std::size_t j = i + 1; j < t.legs.size() && !found; ++j) {
        if (t.legs[j] == (t.legs[i] ^ 1)) {
          ax = i;
          bx = j;
          found = true;
        }
      }
    }
    if (!found) return t;
    const std::size_t n = t.legs.size();
    Tensor<S> r;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != ax && i != bx) r.legs.push_back(t.legs[i]);
    }
    r.data.assign(std::size_t(1) << r.legs.size(), S{});
    for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
      const std::size_t ba = (idx >> (n - 1 - ax)) & 1;
      const std::size_t bb = (idx >> (n - 1 - bx)) & 1;
      if (ba != bb) continue;
      std::size_t out = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == ax || i == bx) continue;
        out = (out << 1) | ((idx >> (n - 1 - i)) & 1);
      }
      r.data[out] = r.data[out] + t.data[idx];
    }
    t = std::move(r);
  }
}

/** All (axis in a, axis in b) pairs of contractible legs. */
template <typename S>
std::vector<std::pair<std::size_t, std::size_t>> shared_pairs(const Tensor<S>& a,
                                                              const Tensor<S>& b) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a.legs.size(); ++i) {
    if (a.legs[i] & kOpenFlag) continue;
    for (std::size_t j = 0; j < b.legs.size(); ++j) {
      if (b.legs[j] == (a.legs[i] ^ 1)) {
        pairs.emplace_back(i, j);
        break;
      }
    }
  }
  return pairs;
}

template <typename S>
Tensor<S> contract(const Tensor<S>& a, const Tensor<S>& b,
                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                   std::size_t max_entries) {
  const std::size_t na = a.legs.size(), nb = b.legs.size(), nc = pairs.size();
  std::vector<bool> ca(na, false), cb(nb, false);
  for (const auto& [i, j] : pairs) {
    ca[i] = true;
    cb[j] = true;
  }
  Tensor<S> r;
  std::vector<std::size_t> free_a, free_b;
  for (std::size_t i = 0; i < na; ++i) {
    if (!ca[i]) {
      r.legs.push_back(a.legs[i]);
      free_a.push_back(i);
    }
  }
  for (std::size_t j = 0; j < nb; ++j) {
    if (!cb[j]) {
      r.legs.push_back(b.legs[j]);
      free_b.push_back(j);
    }
  }
  if (r.legs.size() >= 48 || (std::size_t(1) << r.legs.size()) > max_entries) {
    throw ResourceError("evaluation intermediate would have 2^" +
                        std::to_string(r.legs.size()) + " entries across " +
                        std::to_string(nc) + " contracted edge(s)");
  }
  r.data.assign(std::size_t(1) << r.legs.size(), S{});
  const std::size_t n_free_a = free_a.size(), n_free_b = free_b.size();

  // scatter tables: free/contracted index bits -> positions in a and b
  auto scatter_table = [](std::size_t bits, std::size_t rank,
                          auto&& position) {
    std::vector<std::size_t> table(std::size_t(1) << bits, 0);
    for (std::size_t v = 0; v < table.size(); ++v) {
      std::size_t out = 0;
      for (std::size_t i = 0; i < bits; ++i) {
        if ((v >> (bits - 1 - i)) & 1) out |= std::size_t(1) << (rank - 1 - position(i));
      }
      table[v] = out;
    }
    return table;
  };
  const auto fa_tab = scatter_table(n_free_a, na, [&](std::size_t i) { return free_a[i]; });
  const auto fb_tab = scatter_table(n_free_b, nb, [&](std::size_t j) { return free_b[j]; });
  const auto ca_tab = scatter_table(nc, na, [&](std::size_t p) { return pairs[p].first; });
  const auto cb_tab = scatter_table(nc, nb, [&](std::size_t p) { return pairs[p].second; });

  const std::size_t fb_mask = (std::size_t(1) << n_free_b) - 1;
  for (std::size_t out = 0; out < r.data.size(); ++out) {
    const std::size_t ia_base = fa_tab[out >> n_free_b];
    const std::size_t ib_base = fb_tab[out & fb_mask];
    S acc{};
    for (std::size_t s = 0; s < (std::size_t(1) << nc); ++s) {
      const S& av = a.data[ia_base | ca_tab[s]];
      if (!ScalarOps<S>::nonzero(av)) continue;
      acc = acc + av * b.data[ib_base | cb_tab[s]];
    }
    r.data[out] = acc;
  }
  return r;
}

template <typename S>
Mat<S> evaluate_impl(const Diagram& d, const EvalOptions& opts) {
  std::vector<Tensor<S>> pool;
  S scale = ScalarOps<S>::one();

  auto fold_scalars = [&] {
    std::erase_if(pool, [&](const Tensor<S>& t) {
      if (t.rank() == 0) {
        scale = scale * t.data[0];
        return true;
      }
      return false;
    });
  };

  for (const auto& [v, vd] : d.vertices()) {
    if (vd.type == VertexType::Boundary) continue;
    pool.push_back(self_trace(vertex_tensor<S>(d, v, vd)));
  }
  // a wire between two boundary vertices is an identity tensor
  for (const auto& [e, ed] : d.edges()) {
    if (d.vertex(ed.a).type == VertexType::Boundary &&
        d.vertex(ed.b).type == VertexType::Boundary) {
      Tensor<S> t;
      t.legs = {kOpenFlag | half_label(e, 0), kOpenFlag | half_label(e, 1)};
      t.data = {ScalarOps<S>::one(), S{}, S{}, ScalarOps<S>::one()};
      pool.push_back(std::move(t));
    }
  }
  fold_scalars();

  std::mt19937_64 rng(opts.seed);
  while (true) {
    struct Cand {
      std::size_t i, j, rank;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        auto pairs = shared_pairs(pool[i], pool[j]);
        if (pairs.empty()) continue;
        cands.push_back({i, j, pool[i].rank() + pool[j].rank() - 2 * pairs.size()});
      }
    }
    if (cands.empty()) break;
    std::size_t pick = 0;
    if (opts.randomize_order) {
      pick = rng() % cands.size();
    } else {
      for (std::size_t c = 1; c < cands.size(); ++c) {
        if (cands[c].rank < cands[pick].rank) pick = c;
      }
    }
    auto [i, j, rank] = cands[pick];
    (void)rank;
    Tensor<S> merged =
        contract(pool[i], pool[j], shared_pairs(pool[i], pool[j]), opts.max_entries);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    pool[i] = std::move(merged);
    fold_scalars();
  }

  // outer product over the remaining open components, smallest leg first
  std::sort(pool.begin(), pool.end(), [](const Tensor<S>& a, const Tensor<S>& b) {
    return *std::min_element(a.legs.begin(), a.legs.end()) <
           *std::min_element(b.legs.begin(), b.legs.end());
  });
  Tensor<S> result;
  result.legs = {};
  result.data = {ScalarOps<S>::one()};
  for (const Tensor<S>& t : pool) {
    result = contract(result, t, {}, opts.max_entries);
  }

  // map open legs to boundary positions
  const std::size_t n_out = d.outputs().size(), n_in = d.inputs().size();
  if (result.rank() != n_out + n_in) {
    throw ZXError("internal: open leg count does not match boundary size");
  }
  std::map<VertexId, std::size_t> axis_of;
  for (std::size_t i = 0; i < result.legs.size(); ++i) {
    const std::uint64_t l = result.legs[i] & ~kOpenFlag;
    const VertexId b = d.endpoint(static_cast<EdgeId>(l >> 1), static_cast<int>(l & 1));
    axis_of[b] = i;
  }
  Mat<S> m(std::size_t(1) << n_out, std::size_t(1) << n_in);
  const std::size_t n = result.rank();
  for (std::size_t idx = 0; idx < result.data.size(); ++idx) {
    std::size_t row = 0, col = 0;
    for (std::size_t p = 0; p < n_out; ++p) {
      row = (row << 1) | ((idx >> (n - 1 - axis_of.at(d.outputs()[p]))) & 1);
    }
    for (std::size_t p = 0; p < n_in; ++p) {
      col = (col << 1) | ((idx >> (n - 1 - axis_of.at(d.inputs()[p]))) & 1);
    }
    m.at(row, col) = result.data[idx] * scale;
  }
  return m;
}

}  // namespace

Matrix evaluate(const Diagram& d, const EvalOptions& opts) {
  for (const auto& [v, vd] : d.vertices()) {
    if ((vd.type == VertexType::Z || vd.type == VertexType::X) &&
        !vd.phase.is_quarter_multiple()) {
      throw ZXError("exact backend needs pi/4-multiple phases; vertex " + std::to_string(v) +
                    " has phase " + vd.phase.str());
    }
  }
  return evaluate_impl<ExactScalar>(d, opts);
}

MatrixF evaluate_float(const Diagram& d, const EvalOptions& opts) {
  return evaluate_impl<std::complex<double>>(d, opts);
}

Matrix generator_matrix(VertexType type, const Phase& phase, std::size_t n_in,
                        std::size_t n_out) {
  if (type == VertexType::H && (n_in != 1 || n_out != 1)) {
    throw ArityError("H generator requires arity (1,1)");
  }
  if (type == VertexType::Boundary) throw ArityError("boundary has no generator matrix");
  Diagram d;
  VertexId v = d.add_vertex(type, phase);
  for (std::size_t i = 0; i < n_in; ++i) d.add_edge(d.add_input(), v);
  for (std::size_t i = 0; i < n_out; ++i) d.add_edge(v, d.add_output());
  return evaluate(d);
}

Matrix basis_column(const std::string& bits) {
  Matrix col(1, 1);
  col.at(0, 0) = ExactScalar::one();
  for (char ch : bits) {
    Matrix q(2, 1);
    switch (ch) {
      case '0': q.at(0, 0) = ExactScalar::one(); break;
      case '1': q.at(1, 0) = ExactScalar::one(); break;
      case '+':
        q.at(0, 0) = ExactScalar::inv_sqrt2_pow(1);
        q.at(1, 0) = ExactScalar::inv_sqrt2_pow(1);
        break;
      case '-':
        q.at(0, 0) = ExactScalar::inv_sqrt2_pow(1);
        q.at(1, 0) = ExactScalar::zero() - ExactScalar::inv_sqrt2_pow(1);
        break;
      default:
        throw FormatError(std::string("bad basis symbol: ") + ch);
    }
    col = col.kron(q);
  }
  return col;
}

Matrix apply_to_basis(const Diagram& d, const std::string& bits, const EvalOptions& opts) {
  if (bits.size() != d.inputs().size()) {
    throw ArityError("basis string length " + std::to_string(bits.size()) +
                     " does not match input arity " + std::to_string(d.inputs().size()));
  }
  return evaluate(d, opts) * basis_column(bits);
}

}  // namespace zxcc
