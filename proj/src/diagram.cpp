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

#include "zxcc/diagram.hpp"

#include <algorithm>
#include <set>

#include "zxcc/error.hpp"

namespace zxcc {

std::string to_string(VertexType t) {
  switch (t) {
    case VertexType::Z: return "Z";
    case VertexType::X: return "X";
    case VertexType::H: return "H";
    case VertexType::Boundary: return "B";
  }
  throw ZXError("unknown vertex type");
}

VertexType vertex_type_from_string(const std::string& s) {
  if (s == "Z") return VertexType::Z;
  if (s == "X") return VertexType::X;
  if (s == "H") return VertexType::H;
  if (s == "B") return VertexType::Boundary;
  throw FormatError("unknown vertex kind: " + s);
}

VertexId Diagram::add_vertex(VertexType type, Phase phase) {
  return add_vertex_with_id(next_vertex_, type, phase);
}

VertexId Diagram::add_vertex_with_id(VertexId id, VertexType type, Phase phase) {
  if (vertices_.count(id)) throw ZXError("vertex id already in use: " + std::to_string(id));
  vertices_[id] = VertexData{type, phase};
  incidence_[id] = {};
  if (id >= next_vertex_) next_vertex_ = id + 1;
  return id;
}

EdgeId Diagram::add_edge(VertexId u, VertexId v) {
  return add_edge_with_id(next_edge_, u, v);
}

EdgeId Diagram::add_edge_with_id(EdgeId id, VertexId u, VertexId v) {
  if (edges_.count(id)) throw ZXError("edge id already in use: " + std::to_string(id));
  if (!has_vertex(u) || !has_vertex(v)) {
    throw ZXError("edge endpoint not a vertex: " + std::to_string(u) + "," + std::to_string(v));
  }
  if (u > v) std::swap(u, v);
  edges_[id] = Edge{u, v};
  incidence_[u].push_back(id);
  incidence_[v].push_back(id);
  if (id >= next_edge_) next_edge_ = id + 1;
  return id;
}

VertexId Diagram::add_input() {
  VertexId id = add_vertex(VertexType::Boundary);
  inputs_.push_back(id);
  return id;
}

VertexId Diagram::add_output() {
  VertexId id = add_vertex(VertexType::Boundary);
  outputs_.push_back(id);
  return id;
}

void Diagram::mark_input(VertexId id) {
  if (vertex(id).type != VertexType::Boundary) throw ZXError("mark_input on non-boundary");
  inputs_.push_back(id);
}

void Diagram::mark_output(VertexId id) {
  if (vertex(id).type != VertexType::Boundary) throw ZXError("mark_output on non-boundary");
  outputs_.push_back(id);
}

void Diagram::remove_edge(EdgeId id) {
  auto it = edges_.find(id);
  if (it == edges_.end()) throw ZXError("no such edge: " + std::to_string(id));
  for (VertexId v : {it->second.a, it->second.b}) {
    auto& inc = incidence_[v];
    inc.erase(std::find(inc.begin(), inc.end(), id));
  }
  edges_.erase(it);
}

void Diagram::remove_vertex(VertexId id) {
  if (!has_vertex(id)) throw ZXError("no such vertex: " + std::to_string(id));
  if (!incidence_[id].empty()) {
    throw ZXError("removing vertex with incident edges: " + std::to_string(id));
  }
  incidence_.erase(id);
  vertices_.erase(id);
  std::erase(inputs_, id);
  std::erase(outputs_, id);
}

void Diagram::set_phase(VertexId id, const Phase& phase) {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) throw ZXError("no such vertex: " + std::to_string(id));
  it->second.phase = phase;
}

const VertexData& Diagram::vertex(VertexId id) const {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) throw ZXError("no such vertex: " + std::to_string(id));
  return it->second;
}

const Edge& Diagram::edge(EdgeId id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) throw ZXError("no such edge: " + std::to_string(id));
  return it->second;
}

VertexId Diagram::endpoint(EdgeId id, int end) const {
  const Edge& e = edge(id);
  return end == 0 ? e.a : e.b;
}

VertexId Diagram::other_endpoint(EdgeId id, VertexId v) const {
  const Edge& e = edge(id);
  if (e.a == v) return e.b;
  if (e.b == v) return e.a;
  throw ZXError("vertex not an endpoint of edge");
}

bool Diagram::is_boundary(VertexId id) const {
  return vertex(id).type == VertexType::Boundary;
}

std::vector<HalfEdge> Diagram::half_edges_at(VertexId v) const {
  std::vector<HalfEdge> result;
  auto it = incidence_.find(v);
  if (it == incidence_.end()) throw ZXError("no such vertex: " + std::to_string(v));
  std::set<EdgeId> seen;
  for (EdgeId e : it->second) {
    const Edge& ed = edges_.at(e);
    if (ed.a == ed.b) {
      if (!seen.count(e)) {
        result.push_back({e, 0});
        result.push_back({e, 1});
        seen.insert(e);
      }
    } else {
      result.push_back({e, ed.a == v ? 0 : 1});
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::size_t Diagram::degree(VertexId v) const {
  auto it = incidence_.find(v);
  if (it == incidence_.end()) throw ZXError("no such vertex: " + std::to_string(v));
  return it->second.size();
}

std::size_t Diagram::loops_at(VertexId v) const {
  std::size_t n = 0;
  for (EdgeId e : incidence_.at(v)) {
    const Edge& ed = edges_.at(e);
    if (ed.a == ed.b) ++n;
  }
  return n / 2;  // loops appear twice in the incidence list
}

std::vector<EdgeId> Diagram::edges_between(VertexId u, VertexId v) const {
  std::vector<EdgeId> result;
  for (EdgeId e : incidence_.at(u)) {
    const Edge& ed = edges_.at(e);
    if ((ed.a == u && ed.b == v) || (ed.a == v && ed.b == u)) result.push_back(e);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::size_t Diagram::interior_count() const {
  std::size_t n = 0;
  for (const auto& [id, data] : vertices_) {
    if (data.type != VertexType::Boundary) ++n;
  }
  return n;
}

void Diagram::validate() const {
  for (const auto& [id, e] : edges_) {
    if (!has_vertex(e.a) || !has_vertex(e.b)) {
      throw ZXError("edge " + std::to_string(id) + " has missing endpoint");
    }
  }
  std::set<VertexId> boundary_seen;
  for (const auto& list : {inputs_, outputs_}) {
    for (VertexId v : list) {
      if (!has_vertex(v) || vertex(v).type != VertexType::Boundary) {
        throw ZXError("boundary list entry " + std::to_string(v) + " is not a boundary vertex");
      }
      if (!boundary_seen.insert(v).second) {
        throw ZXError("vertex " + std::to_string(v) + " listed twice in boundary");
      }
    }
  }
  for (const auto& [id, data] : vertices_) {
    switch (data.type) {
      case VertexType::H:
        if (degree(id) != 2) {
          throw ZXError("H vertex " + std::to_string(id) + " has degree " +
                        std::to_string(degree(id)));
        }
        break;
      case VertexType::Boundary:
        if (degree(id) != 1) {
          throw ZXError("boundary vertex " + std::to_string(id) + " has degree " +
                        std::to_string(degree(id)));
        }
        if (!boundary_seen.count(id)) {
          throw ZXError("boundary vertex " + std::to_string(id) + " not in input/output lists");
        }
        break;
      default:
        break;
    }
  }
}

// Canonical labeling --------------------------------------------------------

namespace {

struct CanonWork {
  const Diagram* d;
  std::vector<VertexId> verts;             // all vertices, boundaries first in list order
  std::map<VertexId, std::size_t> index;   // vertex id -> position in verts
  std::size_t n_fixed;                     // boundary count (fixed singleton colors)

  // neighbor positions per vertex (one entry per half-edge at the vertex)
  std::vector<std::vector<std::size_t>> adj;

  std::vector<int> refine(std::vector<int> color) const {
    const std::size_t n = verts.size();
    while (true) {
      // signature: (color, sorted neighbor colors)
      std::vector<std::pair<std::vector<int>, std::size_t>> sigs(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> s;
        s.push_back(color[i]);
        std::vector<int> nb;
        nb.reserve(adj[i].size());
        for (std::size_t j : adj[i]) nb.push_back(color[j]);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        sigs[i] = {std::move(s), i};
      }
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return sigs[a].first < sigs[b].first; });
      std::vector<int> next(n);
      int c = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && sigs[order[k]].first != sigs[order[k - 1]].first) ++c;
        next[order[k]] = c;
      }
      if (next == color) return color;
      color = std::move(next);
    }
  }

  bool discrete(const std::vector<int>& color) const {
    std::set<int> s(color.begin(), color.end());
    return s.size() == color.size();
  }

  std::string encode(const std::vector<int>& color) const {
    const std::size_t n = verts.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;

    std::string out;
    out += "i" + std::to_string(d->inputs().size()) + "o" + std::to_string(d->outputs().size());
    out += "|";
    for (std::size_t k = 0; k < n; ++k) {
      const VertexData& vd = d->vertex(verts[order[k]]);
      out += to_string(vd.type);
      if (vd.type == VertexType::Z || vd.type == VertexType::X) out += vd.phase.str();
      out += ";";
    }
    out += "|";
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (const auto& [id, e] : d->edges()) {
      std::size_t pa = pos[index.at(e.a)], pb = pos[index.at(e.b)];
      if (pa > pb) std::swap(pa, pb);
      es.emplace_back(pa, pb);
    }
    std::sort(es.begin(), es.end());
    for (const auto& [pa, pb] : es) {
      out += std::to_string(pa) + "-" + std::to_string(pb) + ";";
    }
    return out;
  }

  std::string canonical(std::vector<int> color) const {
    color = refine(std::move(color));
    if (discrete(color)) return encode(color);
    // smallest non-singleton class
    std::map<int, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < color.size(); ++i) classes[color[i]].push_back(i);
    int target = -1;
    for (const auto& [c, members] : classes) {
      if (members.size() > 1) {
        target = c;
        break;
      }
    }
    std::string best;
    for (std::size_t pick : classes[target]) {
      std::vector<int> child(color.size());
      // individualize: shift colors >= target up by one, give pick color target
      for (std::size_t i = 0; i < color.size(); ++i) {
        child[i] = color[i] >= target ? color[i] + 1 : color[i];
      }
      child[pick] = target;
      std::string enc = canonical(std::move(child));
      if (best.empty() || enc < best) best = enc;
    }
    return best;
  }
};

}  // namespace

std::string Diagram::canonical_string() const {
  CanonWork w;
  w.d = this;
  for (VertexId v : inputs_) w.verts.push_back(v);
  for (VertexId v : outputs_) w.verts.push_back(v);
  w.n_fixed = w.verts.size();
  for (const auto& [id, data] : vertices_) {
    if (data.type != VertexType::Boundary) w.verts.push_back(id);
  }
  for (std::size_t i = 0; i < w.verts.size(); ++i) w.index[w.verts[i]] = i;

  w.adj.resize(w.verts.size());
  for (const auto& [id, e] : edges_) {
    std::size_t pa = w.index.at(e.a), pb = w.index.at(e.b);
    w.adj[pa].push_back(pb);
    w.adj[pb].push_back(pa);
  }

  // initial colors: boundaries are singletons in list order; interior grouped
  // by (kind, phase, degree, loop count)
  std::vector<int> color(w.verts.size(), 0);
  for (std::size_t i = 0; i < w.n_fixed; ++i) color[i] = static_cast<int>(i);
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = w.n_fixed; i < w.verts.size(); ++i) {
    const VertexData& vd = vertex(w.verts[i]);
    std::string key = to_string(vd.type) + vd.phase.str() + "/" +
                      std::to_string(degree(w.verts[i])) + "/" +
                      std::to_string(loops_at(w.verts[i]));
    keys.emplace_back(key, i);
  }
  std::sort(keys.begin(), keys.end());
  int c = static_cast<int>(w.n_fixed);
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (k > 0 && keys[k].first != keys[k - 1].first) ++c;
    color[keys[k].second] = c;
  }
  return w.canonical(std::move(color));
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t Diagram::digest() const { return fnv1a64(canonical_string()); }

Diagram Diagram::identity(std::size_t n) {
  Diagram d;
  for (std::size_t i = 0; i < n; ++i) {
    VertexId in = d.add_input();
    VertexId out = d.add_output();
    d.add_edge(in, out);
  }
  return d;
}

// Composition ---------------------------------------------------------------

std::pair<VertexId, EdgeId> Diagram::absorb(const Diagram& other) {
  const VertexId voff = next_vertex_;
  const EdgeId eoff = next_edge_;
  for (const auto& [id, data] : other.vertices_) {
    add_vertex_with_id(id + voff, data.type, data.phase);
  }
  for (const auto& [id, e] : other.edges_) {
    add_edge_with_id(id + eoff, e.a + voff, e.b + voff);
  }
  return {voff, eoff};
}

void Diagram::plug_pairs(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  for (const auto& [p, q] : pairs) {
    if (degree(p) != 1 || degree(q) != 1) throw ZXError("plugging non-degree-1 vertex");
    EdgeId ep = incidence_.at(p).front();
    EdgeId eq = incidence_.at(q).front();
    if (ep == eq) {
      // direct wire p-q: plugging closes a circle, worth the scalar 2
      remove_edge(ep);
      remove_vertex(p);
      remove_vertex(q);
      add_vertex(VertexType::Z, Phase());
      continue;
    }
    VertexId u = other_endpoint(ep, p);
    VertexId v = other_endpoint(eq, q);
    remove_edge(ep);
    remove_edge(eq);
    remove_vertex(p);
    remove_vertex(q);
    add_edge(u, v);
  }
}

Diagram compose(const Diagram& first, const Diagram& second) {
  if (first.outputs_.size() != second.inputs_.size()) {
    throw ArityError("compose arity mismatch: first has " +
                     std::to_string(first.outputs_.size()) + " outputs, second has " +
                     std::to_string(second.inputs_.size()) + " inputs");
  }
  Diagram result = first;
  auto [voff, eoff] = result.absorb(second);
  (void)eoff;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<VertexId> old_outputs = result.outputs_;
  result.outputs_.clear();
  for (std::size_t i = 0; i < old_outputs.size(); ++i) {
    pairs.emplace_back(old_outputs[i], second.inputs_[i] + voff);
  }
  for (VertexId v : second.outputs_) result.outputs_.push_back(v + voff);
  result.plug_pairs(pairs);
  return result;
}

Diagram tensor(const Diagram& a, const Diagram& b) {
  Diagram result = a;
  auto [voff, eoff] = result.absorb(b);
  (void)eoff;
  for (VertexId v : b.inputs_) result.inputs_.push_back(v + voff);
  for (VertexId v : b.outputs_) result.outputs_.push_back(v + voff);
  return result;
}

Diagram adjoint(const Diagram& d) {
  Diagram result = d;
  std::swap(result.inputs_, result.outputs_);
  for (auto& [id, data] : result.vertices_) {
    if (data.type == VertexType::Z || data.type == VertexType::X) {
      data.phase = -data.phase;
    }
  }
  return result;
}

bool iso_equal(const Diagram& a, const Diagram& b) {
  if (a.inputs().size() != b.inputs().size()) return false;
  if (a.outputs().size() != b.outputs().size()) return false;
  if (a.vertices().size() != b.vertices().size()) return false;
  if (a.edges().size() != b.edges().size()) return false;
  return a.canonical_string() == b.canonical_string();
}

}  // namespace zxcc
