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
#include <string>

#include "zxcc/diagram.hpp"

namespace zxcc {

/**
 * Diagram wire format:
 * {"inputs":[ids],"outputs":[ids],
 *  "vertices":{"id":{"kind":"Z"|"X"|"H"|"B","phase":"p/q"}},
 *  "edges":[[id,id],...]}
 * The phase is in pi units as a reduced rational string; omitted means "0".
 * The edge list may repeat pairs (multi-edges) and use equal endpoints
 * (self-loops).
 */
nlohmann::ordered_json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

std::string diagram_to_string(const Diagram& d);
Diagram diagram_from_string(const std::string& text);

Diagram load_diagram(const std::string& path);
void save_diagram(const Diagram& d, const std::string& path);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const nlohmann::json& j, const std::string& path);
void save_json_file(const nlohmann::ordered_json& j, const std::string& path);

}  // namespace zxcc
