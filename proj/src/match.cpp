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

#include "zxcc/match.hpp"

#include <algorithm>
#include <set>

#include "zxcc/error.hpp"

namespace zxcc {

namespace {

bool is_wire_boundary(const RuleGraph& lhs, VertexId b) {
  return lhs.is_boundary(lhs.boundary_neighbor(b));
}

/** Multiset of half-edges consumed at each matched target vertex. */
std::map<VertexId, std::vector<HalfEdge>> consumed_halves(const RewriteRule& rule, const Match& m,
                                                          const Diagram& target) {
  std::map<VertexId, std::vector<HalfEdge>> out;
  for (const auto& [v, t] : m.vertex_map) out[t] = {};
  for (const auto& [l, e] : m.edge_map) {
    for (int end = 0; end < 2; ++end) {
      VertexId t = target.endpoint(e, end);
      if (out.count(t)) out[t].push_back({e, end});
    }
  }
  for (const BoundaryAttach& a : m.attachments) {
    if (is_wire_boundary(rule.lhs, a.lhs_boundary)) continue;
    VertexId t = target.endpoint(a.target_edge, a.end);
    if (out.count(t)) out[t].push_back({a.target_edge, a.end});
  }
  for (auto& [t, halves] : out) std::sort(halves.begin(), halves.end());
  return out;
}

void verify_match(const RewriteRule& rule, const Match& m, const Diagram& target) {
  const RuleGraph& lhs = rule.lhs;
  // vertex map: total on lhs interior, injective, kind and phase preserving
  std::set<VertexId> images;
  for (VertexId u : lhs.interior()) {
    auto it = m.vertex_map.find(u);
    if (it == m.vertex_map.end()) throw ZXError("match misses lhs vertex " + std::to_string(u));
    VertexId t = it->second;
    if (!target.has_vertex(t)) throw ZXError("match image vertex missing");
    if (!images.insert(t).second) throw ZXError("match not injective");
    const RuleVertexData& ud = lhs.vertex(u);
    const VertexData& td = target.vertex(t);
    if (ud.type != td.type) throw ZXError("match kind mismatch");
    if (ud.type == VertexType::Z || ud.type == VertexType::X) {
      if (!(ud.phase.eval(m.assignment) == td.phase)) throw ZXError("match phase mismatch");
    }
  }
  if (m.vertex_map.size() != lhs.interior().size()) throw ZXError("match has extra vertices");

  // edge map: keys are exactly the lhs interior-interior edges
  std::set<EdgeId> used_edges;
  std::size_t n_interior_edges = 0;
  for (const auto& [id, e] : lhs.edges()) {
    const bool a_b = lhs.is_boundary(e.a), b_b = lhs.is_boundary(e.b);
    if (a_b || b_b) continue;
    ++n_interior_edges;
    auto it = m.edge_map.find(id);
    if (it == m.edge_map.end()) throw ZXError("match misses lhs edge " + std::to_string(id));
    EdgeId te = it->second;
    if (!target.has_edge(te)) throw ZXError("match image edge missing");
    if (!used_edges.insert(te).second) throw ZXError("match reuses target edge");
    const Edge& t = target.edge(te);
    VertexId ia = m.vertex_map.at(e.a), ib = m.vertex_map.at(e.b);
    if (!((t.a == ia && t.b == ib) || (t.a == ib && t.b == ia))) {
      throw ZXError("match edge endpoints disagree");
    }
  }
  if (m.edge_map.size() != n_interior_edges) throw ZXError("match has extra edges");

  // attachments: one per lhs boundary
  std::map<EdgeId, std::vector<const BoundaryAttach*>> by_edge;
  std::set<VertexId> seen_b;
  for (const BoundaryAttach& a : m.attachments) {
    if (!lhs.has_vertex(a.lhs_boundary) || !lhs.is_boundary(a.lhs_boundary)) {
      throw ZXError("attachment names a non-boundary");
    }
    if (!seen_b.insert(a.lhs_boundary).second) throw ZXError("boundary attached twice");
    if (!target.has_edge(a.target_edge)) throw ZXError("attachment edge missing");
    if (a.end != 0 && a.end != 1) throw ZXError("bad attachment end");
    by_edge[a.target_edge].push_back(&a);
    if (!is_wire_boundary(lhs, a.lhs_boundary)) {
      VertexId v = lhs.boundary_neighbor(a.lhs_boundary);
      if (target.endpoint(a.target_edge, a.end) != m.vertex_map.at(v)) {
        throw ZXError("attachment end not at the matched image");
      }
    }
  }
  if (seen_b.size() != lhs.boundary_vertices().size()) throw ZXError("boundary not fully attached");

  for (const auto& [e, list] : by_edge) {
    if (used_edges.count(e)) throw ZXError("attachment reuses an interior-mapped edge");
    if (list.size() > 2) throw ZXError("target edge attached more than twice");
    if (list.size() == 2 && list[0]->end == list[1]->end) {
      throw ZXError("two attachments on the same edge end");
    }
    const bool wire0 = is_wire_boundary(lhs, list[0]->lhs_boundary);
    if (list.size() == 2) {
      const bool wire1 = is_wire_boundary(lhs, list[1]->lhs_boundary);
      if (wire0 != wire1) throw ZXError("mixed wire/leg attachment on one edge");
      if (wire0) {
        // a bare-wire lhs edge must cover one target edge with its two ends
        VertexId b0 = list[0]->lhs_boundary;
        if (lhs.boundary_neighbor(b0) != list[1]->lhs_boundary) {
          throw ZXError("wire attachments pair boundaries of different lhs edges");
        }
      }
    } else if (wire0) {
      throw ZXError("bare-wire boundary attached alone");
    }
    if (wire0) {
      for (int end = 0; end < 2; ++end) {
        if (images.count(target.endpoint(e, end))) {
          throw ZXError("bare-wire match touches a matched vertex");
        }
      }
    }
  }

  // full edge coverage at matched vertices
  auto consumed = consumed_halves(rule, m, target);
  for (const auto& [t, halves] : consumed) {
    if (halves != target.half_edges_at(t)) {
      throw ZXError("incomplete edge coverage at matched vertex " + std::to_string(t));
    }
  }
}

}  // namespace

ApplyResult apply_match(const RewriteRule& rule, const Match& m, const Diagram& target) {
  if (m.target_digest != 0 && m.target_digest != target.digest()) {
    throw StaleMatchError("match was found on a different diagram (digest mismatch)");
  }
  verify_match(rule, m, target);

  Diagram result = target;
  Match used = m;

  // stubs for lhs boundaries
  std::map<VertexId, VertexId> stub;
  for (const BoundaryAttach& a : m.attachments) {
    stub[a.lhs_boundary] = result.add_vertex(VertexType::Boundary);
  }

  // cut: remove interior-mapped edges
  for (const auto& [l, e] : m.edge_map) result.remove_edge(e);

  // cut: attachment edges
  std::map<EdgeId, std::vector<const BoundaryAttach*>> by_edge;
  for (const BoundaryAttach& a : m.attachments) by_edge[a.target_edge].push_back(&a);
  for (const auto& [e, list] : by_edge) {
    if (list.size() == 1) {
      const BoundaryAttach& a = *list[0];
      VertexId far = result.endpoint(e, 1 - a.end);
      result.remove_edge(e);
      result.add_edge(far, stub.at(a.lhs_boundary));
    } else {
      const BoundaryAttach& a0 = list[0]->end == 0 ? *list[0] : *list[1];
      const BoundaryAttach& a1 = list[0]->end == 0 ? *list[1] : *list[0];
      if (is_wire_boundary(rule.lhs, a0.lhs_boundary)) {
        VertexId x = result.endpoint(e, 0), y = result.endpoint(e, 1);
        result.remove_edge(e);
        result.add_edge(x, stub.at(a0.lhs_boundary));
        result.add_edge(y, stub.at(a1.lhs_boundary));
      } else {
        result.remove_edge(e);
        result.add_edge(stub.at(a0.lhs_boundary), stub.at(a1.lhs_boundary));
      }
    }
  }

  // cut: matched vertices are isolated now
  std::vector<VertexId> doomed;
  for (const auto& [u, t] : m.vertex_map) doomed.push_back(t);
  std::sort(doomed.begin(), doomed.end());
  for (VertexId t : doomed) result.remove_vertex(t);

  // glue: rhs interior vertices
  std::map<VertexId, VertexId> rim;
  for (VertexId r : rule.rhs.interior()) {
    const RuleVertexData& rd = rule.rhs.vertex(r);
    Phase p = (rd.type == VertexType::Z || rd.type == VertexType::X)
                  ? rd.phase.eval(m.assignment)
                  : Phase();
    auto hint = m.rhs_vertex_ids.find(r);
    VertexId nid;
    if (hint != m.rhs_vertex_ids.end()) {
      nid = result.add_vertex_with_id(hint->second, rd.type, p);
    } else {
      nid = result.add_vertex(rd.type, p);
    }
    rim[r] = nid;
    used.rhs_vertex_ids[r] = nid;
  }

  // glue: rhs edges and boundary stubs
  std::map<VertexId, VertexId> rstub;
  for (VertexId r : rule.rhs.boundary_vertices()) {
    rstub[r] = result.add_vertex(VertexType::Boundary);
  }
  for (const auto& [id, e] : rule.rhs.edges()) {
    const bool a_b = rule.rhs.is_boundary(e.a), b_b = rule.rhs.is_boundary(e.b);
    VertexId na = a_b ? rstub.at(e.a) : rim.at(e.a);
    VertexId nb = b_b ? rstub.at(e.b) : rim.at(e.b);
    result.add_edge(na, nb);
  }

  // splice lhs stubs against their rhs partners
  std::vector<std::pair<VertexId, VertexId>> plugs;
  for (const auto& [l, s] : stub) plugs.emplace_back(s, rstub.at(rule.rhs_partner(l)));
  result.plug_pairs(plugs);

  return {std::move(result), std::move(used)};
}

// Matching --------------------------------------------------------------------

namespace {

struct LhsShape {
  std::vector<VertexId> interior;  // sorted
  // unordered interior pairs (u <= v, u != v) -> lhs edge ids
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> pair_edges;
  std::map<VertexId, std::vector<EdgeId>> loop_edges;
  // boundary legs per interior vertex: (boundary id, edge id), sorted
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> legs;
  // bare-wire lhs edges: (edge id, boundary at end0, boundary at end1)
  std::vector<std::tuple<EdgeId, VertexId, VertexId>> wires;
};

LhsShape shape_of(const RuleGraph& lhs) {
  LhsShape s;
  s.interior = lhs.interior();
  for (const auto& [id, e] : lhs.edges()) {
    const bool a_b = lhs.is_boundary(e.a), b_b = lhs.is_boundary(e.b);
    if (a_b && b_b) {
      s.wires.emplace_back(id, e.a, e.b);
    } else if (a_b) {
      s.legs[e.b].emplace_back(e.a, id);
    } else if (b_b) {
      s.legs[e.a].emplace_back(e.b, id);
    } else if (e.a == e.b) {
      s.loop_edges[e.a].push_back(id);
    } else {
      s.pair_edges[{e.a, e.b}].push_back(id);
    }
  }
  for (auto& [v, legs] : s.legs) std::sort(legs.begin(), legs.end());
  return s;
}

struct MatchSearch {
  const RewriteRule* rule;
  const Diagram* target;
  LhsShape shape;
  std::vector<VertexId> target_interior;
  std::uint64_t target_digest;

  std::vector<Match> out;
  std::map<std::string, std::vector<Match>> by_footprint;

  void run() {
    for (VertexId u : shape.interior) {
      const PhaseExpr& e = rule->lhs.vertex(u).phase;
      if (!e.is_constant() && !e.is_unifiable()) {
        throw ZXError("find_matches: lhs phase not unifiable in rule " + rule->name);
      }
    }
    auto lv = rule->lhs.variables();
    for (const std::string& v : rule->rhs.variables()) {
      if (!lv.count(v)) {
        throw ZXError("find_matches: rhs variable " + v + " unbound in rule " + rule->name);
      }
    }
    std::map<VertexId, VertexId> vmap;
    std::set<VertexId> used;
    assign_vertex(0, vmap, used, {});
    flush();
    std::sort(out.begin(), out.end(), [](const Match& a, const Match& b) {
      auto key = [](const Match& m) {
        std::vector<VertexId> im;
        for (const auto& [u, t] : m.vertex_map) im.push_back(t);
        std::sort(im.begin(), im.end());
        return std::make_tuple(im, m.attachments, m.assignment);
      };
      return key(a) < key(b);
    });
  }

  void assign_vertex(std::size_t pos, std::map<VertexId, VertexId>& vmap,
                     std::set<VertexId>& used, Assignment assign) {
    if (pos == shape.interior.size()) {
      complete(vmap, assign);
      return;
    }
    VertexId u = shape.interior[pos];
    const RuleVertexData& ud = rule->lhs.vertex(u);
    for (VertexId t : target_interior) {
      if (used.count(t)) continue;
      const VertexData& td = target->vertex(t);
      if (td.type != ud.type) continue;
      if (target->degree(t) != rule->lhs.degree(u)) continue;
      if (target->loops_at(t) < rule->lhs.loops_at(u)) continue;
      Assignment next = assign;
      if (ud.type == VertexType::Z || ud.type == VertexType::X) {
        if (!ud.phase.unify(td.phase, next)) continue;
      }
      // adjacency feasibility against already-assigned vertices
      bool ok = true;
      for (const auto& [pair, edges] : shape.pair_edges) {
        VertexId a = pair.first, b = pair.second;
        if (a != u && b != u) continue;
        VertexId other = a == u ? b : a;
        if (!vmap.count(other)) continue;
        if (target->edges_between(t, vmap[other]).size() < edges.size()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      vmap[u] = t;
      used.insert(t);
      assign_vertex(pos + 1, vmap, used, next);
      used.erase(t);
      vmap.erase(u);
    }
  }

  void complete(const std::map<VertexId, VertexId>& vmap, const Assignment& assign) {
    Match m;
    m.rule = rule->name;
    m.reversed = rule->reversed;
    m.target_digest = target_digest;
    m.vertex_map = vmap;
    m.assignment = assign;

    std::set<EdgeId> taken;
    // interior pair edges: canonical choice, lowest target edge ids first
    for (const auto& [pair, ledges] : shape.pair_edges) {
      auto tedges = target->edges_between(vmap.at(pair.first), vmap.at(pair.second));
      if (tedges.size() < ledges.size()) return;
      for (std::size_t i = 0; i < ledges.size(); ++i) {
        m.edge_map[ledges[i]] = tedges[i];
        taken.insert(tedges[i]);
      }
    }
    for (const auto& [u, ledges] : shape.loop_edges) {
      std::vector<EdgeId> tloops;
      VertexId t = vmap.at(u);
      for (const HalfEdge& h : target->half_edges_at(t)) {
        const Edge& e = target->edge(h.edge);
        if (e.a == e.b && h.end == 0) tloops.push_back(h.edge);
      }
      if (tloops.size() < ledges.size()) return;
      for (std::size_t i = 0; i < ledges.size(); ++i) {
        m.edge_map[ledges[i]] = tloops[i];
        taken.insert(tloops[i]);
      }
    }
    // boundary legs: remaining halves at each image, in canonical order
    for (VertexId u : shape.interior) {
      auto legs_it = shape.legs.find(u);
      const auto legs = legs_it == shape.legs.end()
                            ? std::vector<std::pair<VertexId, EdgeId>>{}
                            : legs_it->second;
      VertexId t = vmap.at(u);
      std::vector<HalfEdge> remaining;
      for (const HalfEdge& h : target->half_edges_at(t)) {
        if (taken.count(h.edge)) continue;
        remaining.push_back(h);
      }
      if (remaining.size() != legs.size()) return;
      for (std::size_t i = 0; i < legs.size(); ++i) {
        m.attachments.push_back({legs[i].first, remaining[i].edge, remaining[i].end});
      }
    }
    // bare wires: free target edges, both orientations, injectively
    assign_wires(0, m, taken);
  }

  void assign_wires(std::size_t idx, Match m, std::set<EdgeId> taken) {
    if (idx == shape.wires.size()) {
      emit(std::move(m));
      return;
    }
    const auto& [ledge, b0, b1] = shape.wires[idx];
    (void)ledge;
    std::set<VertexId> images;
    for (const auto& [u, t] : m.vertex_map) images.insert(t);
    for (const auto& [e, ed] : target->edges()) {
      if (taken.count(e)) continue;
      bool touches_attach = false;
      for (const BoundaryAttach& a : m.attachments) {
        if (a.target_edge == e) touches_attach = true;
      }
      if (touches_attach) continue;
      if (images.count(ed.a) || images.count(ed.b)) continue;
      for (int orient = 0; orient < 2; ++orient) {
        Match next = m;
        next.attachments.push_back({orient == 0 ? b0 : b1, e, 0});
        next.attachments.push_back({orient == 0 ? b1 : b0, e, 1});
        std::set<EdgeId> taken2 = taken;
        taken2.insert(e);
        assign_wires(idx + 1, std::move(next), std::move(taken2));
      }
    }
  }

  void emit(Match m) {
    std::sort(m.attachments.begin(), m.attachments.end(),
              [](const BoundaryAttach& a, const BoundaryAttach& b) {
                return a.lhs_boundary < b.lhs_boundary;
              });
    std::string key;
    {
      std::vector<VertexId> im;
      for (const auto& [u, t] : m.vertex_map) im.push_back(t);
      std::sort(im.begin(), im.end());
      key += "V";
      for (VertexId t : im) key += std::to_string(t) + ",";
      std::vector<EdgeId> ce;
      for (const auto& [l, e] : m.edge_map) ce.push_back(e);
      std::sort(ce.begin(), ce.end());
      key += "E";
      for (EdgeId e : ce) key += std::to_string(e) + ",";
      std::vector<std::pair<EdgeId, int>> at;
      for (const BoundaryAttach& a : m.attachments) at.emplace_back(a.target_edge, a.end);
      std::sort(at.begin(), at.end());
      key += "A";
      for (const auto& [e, end] : at) key += std::to_string(e) + ":" + std::to_string(end) + ",";
    }
    by_footprint[key].push_back(std::move(m));
  }

  /**
   * Matches differing only by a rule automorphism are duplicates: same
   * footprint and same rewritten diagram. The rewrite is only computed for
   * footprint groups with several members.
   */
  void flush() {
    for (auto& [foot, group] : by_footprint) {
      if (group.size() == 1) {
        out.push_back(std::move(group.front()));
        continue;
      }
      std::set<std::uint64_t> digests;
      for (Match& m : group) {
        ApplyResult res = apply_match(*rule, m, *target);
        if (digests.insert(res.diagram.digest()).second) out.push_back(std::move(m));
      }
    }
    by_footprint.clear();
  }
};

}  // namespace

std::vector<Match> find_matches(const RewriteRule& rule, const Diagram& target) {
  if (!rule.is_concrete()) throw ZXError("find_matches requires a box-free rule");
  MatchSearch s;
  s.rule = &rule;
  s.target = &target;
  s.shape = shape_of(rule.lhs);
  for (const auto& [id, data] : target.vertices()) {
    if (data.type != VertexType::Boundary) s.target_interior.push_back(id);
  }
  s.target_digest = target.digest();
  s.run();
  return s.out;
}

std::vector<Match> find_matches_any(const RewriteRule& rule, const Diagram& target) {
  if (rule.is_concrete()) return find_matches(rule, target);

  // prune count tuples by degree feasibility: each lhs interior vertex's
  // degree is base + sum_i count_i * (edges to box i), and full edge
  // coverage forces exact degree equality with some target vertex.
  struct VertexProfile {
    VertexType type;
    std::size_t base = 0;
    std::vector<std::size_t> per_box;
    int own_box = -1;  // vertex lives inside this box (-1 when unboxed)
  };
  std::vector<VertexProfile> profiles;
  const auto& boxes = rule.boxes;
  auto box_of = [&](VertexId v) {
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      if (std::count(boxes[i].lhs_vertices.begin(), boxes[i].lhs_vertices.end(), v)) {
        return static_cast<int>(i);
      }
    }
    return -1;
  };
  for (VertexId u : rule.lhs.interior()) {
    VertexProfile p;
    p.type = rule.lhs.vertex(u).type;
    p.per_box.assign(boxes.size(), 0);
    p.own_box = box_of(u);
    for (const auto& [id, e] : rule.lhs.edges()) {
      if (e.a != u && e.b != u) continue;
      VertexId other = e.a == u ? e.b : e.a;
      if (e.a == u && e.b == u) {
        p.base += 2;
        continue;
      }
      int ob = box_of(other);
      if (ob < 0 || ob == p.own_box) {
        p.base += 1;
      } else {
        p.per_box[static_cast<std::size_t>(ob)] += 1;
      }
    }
    profiles.push_back(std::move(p));
  }
  std::map<VertexType, std::set<std::size_t>> target_degrees;
  for (const auto& [id, data] : target.vertices()) {
    if (data.type != VertexType::Boundary) target_degrees[data.type].insert(target.degree(id));
  }

  std::vector<Match> all;
  std::vector<int> counts(boxes.size(), 0);
  std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
    if (i == boxes.size()) {
      for (const VertexProfile& p : profiles) {
        if (p.own_box >= 0 && counts[static_cast<std::size_t>(p.own_box)] == 0) continue;
        std::size_t deg = p.base;
        for (std::size_t b = 0; b < boxes.size(); ++b) {
          deg += p.per_box[b] * static_cast<std::size_t>(counts[b]);
        }
        if (!target_degrees[p.type].count(deg)) return;  // no vertex can host it
      }
      RewriteRule inst = rule.instantiate(counts);
      for (Match& m : find_matches(inst, target)) {
        m.counts = counts;
        all.push_back(std::move(m));
      }
      return;
    }
    for (int c = 0; c <= boxes[i].max; ++c) {
      counts[i] = c;
      enumerate(i + 1);
    }
  };
  enumerate(0);
  return all;
}

// Serialization ---------------------------------------------------------------

nlohmann::ordered_json Match::to_json() const {
  nlohmann::ordered_json j;
  j["rule"] = rule;
  j["dir"] = reversed ? "rev" : "fwd";
  if (!counts.empty()) j["counts"] = counts;
  j["target"] = std::to_string(target_digest);
  nlohmann::ordered_json vm = nlohmann::json::array();
  for (const auto& [u, t] : vertex_map) vm.push_back({u, t});
  j["vertex_map"] = vm;
  nlohmann::ordered_json em = nlohmann::json::array();
  for (const auto& [l, e] : edge_map) em.push_back({l, e});
  j["edge_map"] = em;
  nlohmann::ordered_json at = nlohmann::json::array();
  for (const BoundaryAttach& a : attachments) {
    at.push_back({a.lhs_boundary, a.target_edge, a.end});
  }
  j["boundary"] = at;
  nlohmann::ordered_json as(nlohmann::json::value_t::object);
  for (const auto& [v, p] : assignment) as[v] = p.str();
  j["assign"] = as;
  nlohmann::ordered_json ri = nlohmann::json::array();
  for (const auto& [r, id] : rhs_vertex_ids) ri.push_back({r, id});
  j["rhs_ids"] = ri;
  return j;
}

Match Match::from_json(const nlohmann::json& j) {
  try {
    Match m;
    m.rule = j.at("rule").get<std::string>();
    m.reversed = j.at("dir").get<std::string>() == "rev";
    if (j.contains("counts")) m.counts = j.at("counts").get<std::vector<int>>();
    m.target_digest = std::stoull(j.at("target").get<std::string>());
    for (const auto& p : j.at("vertex_map")) {
      m.vertex_map[p.at(0).get<VertexId>()] = p.at(1).get<VertexId>();
    }
    for (const auto& p : j.at("edge_map")) {
      m.edge_map[p.at(0).get<EdgeId>()] = p.at(1).get<EdgeId>();
    }
    for (const auto& p : j.at("boundary")) {
      m.attachments.push_back(
          {p.at(0).get<VertexId>(), p.at(1).get<EdgeId>(), p.at(2).get<int>()});
    }
    for (const auto& [k, v] : j.at("assign").items()) {
      m.assignment[k] = Phase::parse(v.get<std::string>());
    }
    for (const auto& p : j.value("rhs_ids", nlohmann::json::array())) {
      m.rhs_vertex_ids[p.at(0).get<VertexId>()] = p.at(1).get<VertexId>();
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("match JSON: ") + e.what());
  }
}

}  // namespace zxcc
