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

#include "zxcc/json_io.hpp"

#include <fstream>

#include "zxcc/error.hpp"

namespace zxcc {

nlohmann::ordered_json diagram_to_json(const Diagram& d) {
  nlohmann::ordered_json j;
  j["inputs"] = d.inputs();
  j["outputs"] = d.outputs();
  nlohmann::ordered_json verts(nlohmann::json::value_t::object);
  for (const auto& [id, data] : d.vertices()) {
    nlohmann::ordered_json v;
    v["kind"] = to_string(data.type);
    if ((data.type == VertexType::Z || data.type == VertexType::X) && !data.phase.is_zero()) {
      v["phase"] = data.phase.str();
    }
    verts[std::to_string(id)] = v;
  }
  j["vertices"] = verts;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const auto& [id, e] : d.edges()) es.emplace_back(e.a, e.b);
  std::sort(es.begin(), es.end());
  nlohmann::ordered_json edges = nlohmann::json::array();
  for (const auto& [a, b] : es) edges.push_back({a, b});
  j["edges"] = edges;
  return j;
}

Diagram diagram_from_json(const nlohmann::json& j) {
  try {
    Diagram d;
    if (!j.is_object() || !j.contains("vertices")) throw FormatError("diagram JSON missing fields");
    for (const auto& [key, v] : j.at("vertices").items()) {
      VertexId id = static_cast<VertexId>(std::stoul(key));
      VertexType type = vertex_type_from_string(v.at("kind").get<std::string>());
      Phase phase;
      if (v.contains("phase")) {
        phase = Phase::parse(v.at("phase").get<std::string>());
        if (type == VertexType::H || type == VertexType::Boundary) {
          if (!phase.is_zero()) throw FormatError("phase on H/boundary vertex " + key);
        }
      }
      d.add_vertex_with_id(id, type, phase);
    }
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw FormatError("bad edge entry");
        d.add_edge(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
      }
    }
    for (const auto& v : j.value("inputs", nlohmann::json::array())) {
      d.mark_input(v.get<VertexId>());
    }
    for (const auto& v : j.value("outputs", nlohmann::json::array())) {
      d.mark_output(v.get<VertexId>());
    }
    d.validate();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("diagram JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw FormatError("diagram JSON: non-numeric vertex id");
  }
}

std::string diagram_to_string(const Diagram& d) { return diagram_to_json(d).dump(2); }

Diagram diagram_from_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw FormatError("invalid JSON");
  return diagram_from_json(j);
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open file: " + path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw FormatError("invalid JSON in file: " + path);
  return j;
}

void save_json_file(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

void save_json_file(const nlohmann::ordered_json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

Diagram load_diagram(const std::string& path) { return diagram_from_json(load_json_file(path)); }

void save_diagram(const Diagram& d, const std::string& path) {
  save_json_file(diagram_to_json(d), path);
}

}  // namespace zxcc
