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

#include "zxcc/rule.hpp"

#include <algorithm>

#include "zxcc/error.hpp"

namespace zxcc {

VertexId RuleGraph::add_vertex(VertexType type, PhaseExpr phase) {
  return add_vertex_with_id(next_vertex_, type, std::move(phase));
}

VertexId RuleGraph::add_vertex_with_id(VertexId id, VertexType type, PhaseExpr phase) {
  if (vertices_.count(id)) throw ZXError("rule vertex id in use: " + std::to_string(id));
  vertices_[id] = RuleVertexData{type, std::move(phase)};
  if (id >= next_vertex_) next_vertex_ = id + 1;
  return id;
}

EdgeId RuleGraph::add_edge(VertexId u, VertexId v) {
  if (!has_vertex(u) || !has_vertex(v)) throw ZXError("rule edge endpoint missing");
  if (u > v) std::swap(u, v);
  EdgeId id = next_edge_++;
  edges_[id] = Edge{u, v};
  return id;
}

VertexId RuleGraph::add_input() {
  VertexId id = add_vertex(VertexType::Boundary);
  inputs_.push_back(id);
  return id;
}

VertexId RuleGraph::add_output() {
  VertexId id = add_vertex(VertexType::Boundary);
  outputs_.push_back(id);
  return id;
}

const RuleVertexData& RuleGraph::vertex(VertexId id) const {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) throw ZXError("no such rule vertex: " + std::to_string(id));
  return it->second;
}

std::size_t RuleGraph::degree(VertexId v) const {
  std::size_t n = 0;
  for (const auto& [id, e] : edges_) {
    if (e.a == v) ++n;
    if (e.b == v) ++n;
  }
  return n;
}

std::size_t RuleGraph::loops_at(VertexId v) const {
  std::size_t n = 0;
  for (const auto& [id, e] : edges_) {
    if (e.a == v && e.b == v) ++n;
  }
  return n;
}

std::vector<EdgeId> RuleGraph::edges_between(VertexId u, VertexId v) const {
  std::vector<EdgeId> out;
  for (const auto& [id, e] : edges_) {
    if ((e.a == u && e.b == v) || (e.a == v && e.b == u)) out.push_back(id);
  }
  return out;
}

std::vector<VertexId> RuleGraph::interior() const {
  std::vector<VertexId> out;
  for (const auto& [id, data] : vertices_) {
    if (data.type != VertexType::Boundary) out.push_back(id);
  }
  return out;
}

std::vector<VertexId> RuleGraph::boundary_vertices() const {
  std::vector<VertexId> out;
  for (const auto& [id, data] : vertices_) {
    if (data.type == VertexType::Boundary) out.push_back(id);
  }
  return out;
}

VertexId RuleGraph::boundary_neighbor(VertexId b) const {
  for (const auto& [id, e] : edges_) {
    if (e.a == b) return e.b;
    if (e.b == b) return e.a;
  }
  throw ZXError("boundary vertex has no edge: " + std::to_string(b));
}

EdgeId RuleGraph::boundary_edge(VertexId b) const {
  for (const auto& [id, e] : edges_) {
    if (e.a == b || e.b == b) return id;
  }
  throw ZXError("boundary vertex has no edge: " + std::to_string(b));
}

Diagram RuleGraph::to_diagram(const Assignment& assign) const {
  Diagram d;
  for (const auto& [id, data] : vertices_) {
    Phase p = (data.type == VertexType::Z || data.type == VertexType::X)
                  ? data.phase.eval(assign)
                  : Phase();
    d.add_vertex_with_id(id, data.type, p);
  }
  for (const auto& [id, e] : edges_) d.add_edge(e.a, e.b);
  for (VertexId v : inputs_) d.mark_input(v);
  for (VertexId v : outputs_) d.mark_output(v);
  return d;
}

std::set<std::string> RuleGraph::variables() const {
  std::set<std::string> out;
  for (const auto& [id, data] : vertices_) {
    for (const auto& [v, c] : data.phase.coeffs) out.insert(v);
  }
  return out;
}

// RewriteRule ----------------------------------------------------------------

void RewriteRule::validate_rule() const {
  // boundary map is a bijection covering exactly the boundary vertices and
  // respecting input/output roles
  const std::vector<VertexId> lhs_bv = lhs.boundary_vertices();
  const std::vector<VertexId> rhs_bv = rhs.boundary_vertices();
  std::set<VertexId> lhs_b(lhs_bv.begin(), lhs_bv.end());
  std::set<VertexId> rhs_b(rhs_bv.begin(), rhs_bv.end());
  std::set<VertexId> seen_l, seen_r;
  for (const auto& [l, r] : boundary_map) {
    if (!lhs_b.count(l) || !rhs_b.count(r)) throw ZXError(name + ": boundary_map names non-boundary");
    if (!seen_l.insert(l).second || !seen_r.insert(r).second) {
      throw ZXError(name + ": boundary_map not a bijection");
    }
    const bool l_in = std::count(lhs.inputs().begin(), lhs.inputs().end(), l) > 0;
    const bool r_in = std::count(rhs.inputs().begin(), rhs.inputs().end(), r) > 0;
    if (l_in != r_in) throw ZXError(name + ": boundary_map mixes input/output roles");
  }
  if (seen_l.size() != lhs_b.size() || seen_r.size() != rhs_b.size()) {
    throw ZXError(name + ": boundary_map does not cover the boundary");
  }
  if (!reversed) {
    auto lv = lhs.variables();
    for (const std::string& v : rhs.variables()) {
      if (!lv.count(v)) throw ZXError(name + ": rhs variable not on lhs: " + v);
    }
  }
  for (const auto& g : {&lhs, &rhs}) {
    for (const auto& [id, data] : g->vertices()) {
      if (data.type == VertexType::Boundary && g->degree(id) != 1) {
        throw ZXError(name + ": rule boundary vertex degree != 1");
      }
    }
  }
}

VertexId RewriteRule::rhs_partner(VertexId lhs_boundary) const {
  for (const auto& [l, r] : boundary_map) {
    if (l == lhs_boundary) return r;
  }
  throw ZXError("no rhs partner for boundary " + std::to_string(lhs_boundary));
}

VertexId RewriteRule::lhs_partner(VertexId rhs_boundary) const {
  for (const auto& [l, r] : boundary_map) {
    if (r == rhs_boundary) return l;
  }
  throw ZXError("no lhs partner for boundary " + std::to_string(rhs_boundary));
}

RewriteRule RewriteRule::inverted() const {
  RewriteRule r = *this;
  std::swap(r.lhs, r.rhs);
  for (auto& [l, rr] : r.boundary_map) std::swap(l, rr);
  for (auto& b : r.boxes) std::swap(b.lhs_vertices, b.rhs_vertices);
  r.reversed = !reversed;
  return r;
}

namespace {

/** Which box (if any) a vertex belongs to; -1 when unboxed. */
int box_of(const std::vector<RepetitionBox>& boxes, VertexId v, bool lhs_side) {
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto& list = lhs_side ? boxes[i].lhs_vertices : boxes[i].rhs_vertices;
    if (std::count(list.begin(), list.end(), v)) return static_cast<int>(i);
  }
  return -1;
}

struct SideInstantiation {
  RuleGraph graph;
  // (box, copy, original id) -> new id; unboxed ids map to themselves
  std::map<std::tuple<int, int, VertexId>, VertexId> copies;

  VertexId resolve(int box, int copy, VertexId orig) const {
    if (box < 0) return orig;
    return copies.at({box, copy, orig});
  }
};

SideInstantiation instantiate_side(const RuleGraph& g, const std::vector<RepetitionBox>& boxes,
                                   const std::vector<int>& counts, bool lhs_side) {
  SideInstantiation out;
  VertexId fresh = 0;
  for (const auto& [id, data] : g.vertices()) fresh = std::max(fresh, id + 1);

  // unboxed vertices keep their ids
  for (const auto& [id, data] : g.vertices()) {
    if (box_of(boxes, id, lhs_side) < 0) out.graph.add_vertex_with_id(id, data.type, data.phase);
  }
  // boxed vertices: counts[i] copies each
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto& members = lhs_side ? boxes[i].lhs_vertices : boxes[i].rhs_vertices;
    std::vector<VertexId> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    for (int copy = 0; copy < counts[i]; ++copy) {
      for (VertexId m : sorted) {
        const auto& data = g.vertex(m);
        VertexId nid = fresh++;
        out.graph.add_vertex_with_id(nid, data.type, data.phase);
        out.copies[{static_cast<int>(i), copy, m}] = nid;
      }
    }
  }
  // edges
  for (const auto& [id, e] : g.edges()) {
    const int ba = box_of(boxes, e.a, lhs_side);
    const int bb = box_of(boxes, e.b, lhs_side);
    if (ba < 0 && bb < 0) {
      out.graph.add_edge(e.a, e.b);
    } else if (ba == bb) {
      for (int copy = 0; copy < counts[static_cast<std::size_t>(ba)]; ++copy) {
        out.graph.add_edge(out.resolve(ba, copy, e.a), out.resolve(bb, copy, e.b));
      }
    } else if (ba < 0 || bb < 0) {
      const int box = ba < 0 ? bb : ba;
      for (int copy = 0; copy < counts[static_cast<std::size_t>(box)]; ++copy) {
        out.graph.add_edge(out.resolve(ba, copy, e.a), out.resolve(bb, copy, e.b));
      }
    } else {
      for (int ca = 0; ca < counts[static_cast<std::size_t>(ba)]; ++ca) {
        for (int cb = 0; cb < counts[static_cast<std::size_t>(bb)]; ++cb) {
          out.graph.add_edge(out.resolve(ba, ca, e.a), out.resolve(bb, cb, e.b));
        }
      }
    }
  }
  // boundary lists: boxed entries expand in copy order at their position
  auto expand = [&](const std::vector<VertexId>& list, bool as_input) {
    for (VertexId v : list) {
      const int box = box_of(boxes, v, lhs_side);
      if (box < 0) {
        if (as_input) out.graph.mark_input(v);
        else out.graph.mark_output(v);
      } else {
        for (int copy = 0; copy < counts[static_cast<std::size_t>(box)]; ++copy) {
          VertexId nid = out.resolve(box, copy, v);
          if (as_input) out.graph.mark_input(nid);
          else out.graph.mark_output(nid);
        }
      }
    }
  };
  expand(g.inputs(), true);
  expand(g.outputs(), false);
  return out;
}

}  // namespace

RewriteRule RewriteRule::instantiate(const std::vector<int>& counts) const {
  if (counts.size() != boxes.size()) {
    throw ZXError(name + ": expected " + std::to_string(boxes.size()) + " box counts");
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0 || counts[i] > boxes[i].max) {
      throw ZXError(name + ": box count " + std::to_string(counts[i]) + " outside [0, " +
                    std::to_string(boxes[i].max) + "]");
    }
  }
  RewriteRule out;
  out.name = name;
  out.vars = vars;
  out.reversed = reversed;
  SideInstantiation li = instantiate_side(lhs, boxes, counts, true);
  SideInstantiation ri = instantiate_side(rhs, boxes, counts, false);
  out.lhs = li.graph;
  out.rhs = ri.graph;
  for (const auto& [l, r] : boundary_map) {
    const int bl = box_of(boxes, l, true);
    const int br = box_of(boxes, r, false);
    if (bl != br) throw ZXError(name + ": boundary pair splits across boxes");
    if (bl < 0) {
      out.boundary_map.emplace_back(l, r);
    } else {
      for (int copy = 0; copy < counts[static_cast<std::size_t>(bl)]; ++copy) {
        out.boundary_map.emplace_back(li.resolve(bl, copy, l), ri.resolve(br, copy, r));
      }
    }
  }
  out.validate_rule();
  return out;
}

// JSON -----------------------------------------------------------------------

namespace {

nlohmann::ordered_json graph_to_json(const RuleGraph& g) {
  nlohmann::ordered_json j;
  j["inputs"] = g.inputs();
  j["outputs"] = g.outputs();
  nlohmann::ordered_json verts(nlohmann::json::value_t::object);
  for (const auto& [id, data] : g.vertices()) {
    nlohmann::ordered_json v;
    v["kind"] = to_string(data.type);
    if ((data.type == VertexType::Z || data.type == VertexType::X) &&
        !(data.phase.is_constant() && data.phase.constant == Rational(0))) {
      v["phase"] = data.phase.str();
    }
    verts[std::to_string(id)] = v;
  }
  j["vertices"] = verts;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const auto& [id, e] : g.edges()) es.emplace_back(e.a, e.b);
  std::sort(es.begin(), es.end());
  nlohmann::ordered_json edges = nlohmann::json::array();
  for (const auto& [a, b] : es) edges.push_back({a, b});
  j["edges"] = edges;
  return j;
}

RuleGraph graph_from_json(const nlohmann::json& j) {
  RuleGraph g;
  for (const auto& [key, v] : j.at("vertices").items()) {
    VertexId id = static_cast<VertexId>(std::stoul(key));
    VertexType type = vertex_type_from_string(v.at("kind").get<std::string>());
    PhaseExpr phase;
    if (v.contains("phase")) phase = PhaseExpr::parse(v.at("phase").get<std::string>());
    g.add_vertex_with_id(id, type, phase);
  }
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
  }
  for (const auto& v : j.value("inputs", nlohmann::json::array())) g.mark_input(v.get<VertexId>());
  for (const auto& v : j.value("outputs", nlohmann::json::array())) g.mark_output(v.get<VertexId>());
  return g;
}

}  // namespace

nlohmann::ordered_json RewriteRule::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["lhs"] = graph_to_json(lhs);
  j["rhs"] = graph_to_json(rhs);
  nlohmann::ordered_json bm = nlohmann::json::array();
  for (const auto& [l, r] : boundary_map) bm.push_back({l, r});
  j["boundary_map"] = bm;
  nlohmann::ordered_json bx = nlohmann::json::array();
  for (const auto& b : boxes) {
    nlohmann::ordered_json item;
    std::vector<VertexId> verts = b.lhs_vertices;
    // rhs members that are not boundary partners of lhs members are listed too
    for (VertexId v : b.rhs_vertices) {
      bool paired = false;
      for (const auto& [l, r] : boundary_map) {
        if (r == v && std::count(b.lhs_vertices.begin(), b.lhs_vertices.end(), l)) paired = true;
      }
      if (!paired) verts.push_back(v);
    }
    item["vertices"] = verts;
    item["max"] = b.max;
    bx.push_back(item);
  }
  j["boxes"] = bx;
  j["vars"] = vars;
  return j;
}

RewriteRule RewriteRule::from_json(const nlohmann::json& j) {
  try {
    RewriteRule r;
    r.name = j.at("name").get<std::string>();
    r.lhs = graph_from_json(j.at("lhs"));
    r.rhs = graph_from_json(j.at("rhs"));
    for (const auto& p : j.at("boundary_map")) {
      r.boundary_map.emplace_back(p.at(0).get<VertexId>(), p.at(1).get<VertexId>());
    }
    for (const auto& b : j.value("boxes", nlohmann::json::array())) {
      RepetitionBox box;
      box.max = b.value("max", 16);
      for (const auto& v : b.at("vertices")) {
        // A listed id must resolve unambiguously: an lhs boundary id stands
        // for the pair (itself, its rhs partner); other ids must exist on
        // exactly one side.
        VertexId id = v.get<VertexId>();
        const bool in_l = r.lhs.has_vertex(id);
        const bool in_r = r.rhs.has_vertex(id);
        if (in_l && r.lhs.is_boundary(id)) {
          box.lhs_vertices.push_back(id);
          box.rhs_vertices.push_back(r.rhs_partner(id));
        } else if (in_l && !in_r) {
          box.lhs_vertices.push_back(id);
        } else if (in_r && !in_l) {
          box.rhs_vertices.push_back(id);
        } else {
          throw FormatError("ambiguous box vertex id " + std::to_string(id) + " in rule " +
                            r.name);
        }
      }
      r.boxes.push_back(box);
    }
    for (const auto& v : j.value("vars", nlohmann::json::array())) {
      r.vars.push_back(v.get<std::string>());
    }
    r.validate_rule();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("rule JSON: ") + e.what());
  }
}

}  // namespace zxcc
