// Copyright 2026 The gemkit Authors
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

// JSON and DOT encodings.
//
// Graph JSON:
//   {"dimension":3,
//    "vertices":[{"id":0,"orientation":"red"},...],
//    "edges":[{"color":0,"u":0,"v":1},...]}
// "orientation" is "red", "black" or absent on every vertex. Serialization is
// canonical: vertices by id, edges by (color, u, v), compact, no trailing
// newline.

#ifndef GEMKIT_IO_HPP_
#define GEMKIT_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gemkit/amplitude.hpp"
#include "gemkit/colored_graph.hpp"
#include "gemkit/crystallizer.hpp"
#include "gemkit/dipoles.hpp"
#include "gemkit/gem_checker.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

using Json = nlohmann::ordered_json;

Json graph_to_json(const ColoredGraph& graph);
// Throws ParseError for malformed documents and the validation error kinds
// of build_graph for invalid graphs.
ColoredGraph graph_from_json(const Json& doc);

std::string serialize_graph(const ColoredGraph& graph);
ColoredGraph parse_graph(std::string_view text);

Json counts_to_json(const ResidueCounts& counts);
Json report_to_json(const GemReport& report);
Json residues_to_json(std::span<const Color> colors,
                      std::span<const Residue> residues);
Json dipole_to_json(const Dipole& dipole);
Json move_to_json(const MoveRecord& move);
Json crystallization_to_json(const CrystallizationResult& result);
Json amplitude_to_json(const AmplitudeResult& result);
Json error_to_json(std::string_view kind, std::string_view message);

std::string to_dot(const ColoredGraph& graph);

}  // namespace gemkit

#endif  // GEMKIT_IO_HPP_
