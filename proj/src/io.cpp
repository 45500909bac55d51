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

#include "gemkit/io.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace gemkit {
namespace {

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

int read_int(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    throw GemError(ErrorKind::kParseError,
                   std::string("expected integer field \"") + key + "\"");
  }
  return it->get<int>();
}

}  // namespace

Json graph_to_json(const ColoredGraph& graph) {
  Json doc;
  doc["dimension"] = graph.dimension();
  Json vertices = Json::array();
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    Json vertex;
    vertex["id"] = v;
    if (graph.is_labeled()) {
      vertex["orientation"] = std::string(orientation_name(graph.orientation(v)));
    }
    vertices.push_back(std::move(vertex));
  }
  doc["vertices"] = std::move(vertices);
  std::vector<Edge> edges;
  edges.reserve(graph.num_edges());
  for (const Edge& e : graph.edges()) {
    edges.push_back(Edge{e.color, std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges.begin(), edges.end());
  Json edge_list = Json::array();
  for (const Edge& e : edges) {
    edge_list.push_back(Json{{"color", e.color}, {"u", e.u}, {"v", e.v}});
  }
  doc["edges"] = std::move(edge_list);
  return doc;
}

ColoredGraph graph_from_json(const Json& doc) {
  if (!doc.is_object()) {
    throw GemError(ErrorKind::kParseError, "graph must be a JSON object");
  }
  const int dimension = read_int(doc, "dimension");
  const auto vit = doc.find("vertices");
  const auto eit = doc.find("edges");
  if (vit == doc.end() || !vit->is_array() || eit == doc.end() ||
      !eit->is_array()) {
    throw GemError(ErrorKind::kParseError,
                   "expected arrays \"vertices\" and \"edges\"");
  }
  const int nv = static_cast<int>(vit->size());
  std::vector<Orientation> orientations(nv, Orientation::kUnlabeled);
  std::vector<bool> seen(nv, false);
  for (const Json& vertex : *vit) {
    if (!vertex.is_object()) {
      throw GemError(ErrorKind::kParseError, "vertex must be an object");
    }
    const int id = read_int(vertex, "id");
    if (id < 0 || id >= nv || seen[id]) {
      throw GemError(ErrorKind::kInvalidVertexId,
                     "vertex ids must be exactly 0.." + std::to_string(nv - 1));
    }
    seen[id] = true;
    const auto oit = vertex.find("orientation");
    if (oit == vertex.end()) continue;
    if (!oit->is_string()) {
      throw GemError(ErrorKind::kParseError, "orientation must be a string");
    }
    const std::string name = oit->get<std::string>();
    if (name == "red") {
      orientations[id] = Orientation::kRed;
    } else if (name == "black") {
      orientations[id] = Orientation::kBlack;
    } else {
      throw GemError(ErrorKind::kParseError,
                     "unknown orientation \"" + name + "\"");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(eit->size());
  for (const Json& e : *eit) {
    if (!e.is_object()) {
      throw GemError(ErrorKind::kParseError, "edge must be an object");
    }
    edges.push_back(Edge{read_int(e, "color"), read_int(e, "u"), read_int(e, "v")});
  }
  return build_graph(dimension, std::move(orientations), std::move(edges));
}

std::string serialize_graph(const ColoredGraph& graph) {
  return graph_to_json(graph).dump();
}

ColoredGraph parse_graph(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GemError(ErrorKind::kParseError, e.what());
  }
  return graph_from_json(doc);
}

Json counts_to_json(const ResidueCounts& counts) {
  return Json{{"v", counts.v}, {"e", counts.e}, {"b", counts.b},
              {"t", counts.t}};
}

Json report_to_json(const GemReport& report) {
  Json doc;
  doc["counts"] = report.counts ? counts_to_json(*report.counts) : Json(nullptr);
  doc["connected"] = report.connected;
  doc["is_gem"] = optional_json(report.is_gem);
  doc["all_triballs"] = optional_json(report.all_triballs);
  Json failing = Json::array();
  for (const FailingResidue& f : report.failing_residues) {
    failing.push_back(
        Json{{"colors", f.colors}, {"vertices", f.vertices}, {"euler", f.euler}});
  }
  doc["failing_residues"] = std::move(failing);
  doc["orientable"] = optional_json(report.orientable);
  doc["certificate"] = report.certificate.hex();
  if (!report.connected) {
    Json components = Json::array();
    for (const GemReport& c : report.components) {
      components.push_back(report_to_json(c));
    }
    doc["components"] = std::move(components);
  }
  return doc;
}

Json residues_to_json(std::span<const Color> colors,
                      std::span<const Residue> residues) {
  std::vector<Color> sorted(colors.begin(), colors.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Json list = Json::array();
  for (const Residue& r : residues) {
    Json item;
    item["vertices"] = r.vertices;
    if (r.colors.size() == 3) {
      const int chi = euler_characteristic_2(r);
      item["euler"] = chi;
      item["triball"] = chi == 2;
    }
    list.push_back(std::move(item));
  }
  return Json{{"colors", sorted}, {"residues", std::move(list)}};
}

Json dipole_to_json(const Dipole& dipole) {
  return Json{{"k", dipole.k},
              {"endpoints", {dipole.u, dipole.v}},
              {"colors", dipole.colors},
              {"proper", dipole.proper}};
}

Json move_to_json(const MoveRecord& move) {
  Json doc;
  doc["kind"] = move.kind == MoveKind::kContract ? "contract" : "create";
  doc["dipole"] = dipole_to_json(move.dipole);
  Json welded = Json::array();
  for (const HostEdge& h : move.welded) {
    welded.push_back(Json{{"color", h.color}, {"u", h.u}, {"v", h.v}});
  }
  doc["welded"] = std::move(welded);
  doc["delta_v"] = move.delta_rank(0);
  doc["delta_e"] = move.delta_rank(1);
  doc["delta_b"] = move.delta_rank(2);
  doc["delta_t"] = move.delta_rank(3);
  Json deltas = Json::array();
  for (const auto& [colors, delta] : move.residue_deltas) {
    deltas.push_back(Json{{"colors", colors}, {"delta", delta}});
  }
  doc["residue_deltas"] = std::move(deltas);
  return doc;
}

Json crystallization_to_json(const CrystallizationResult& result) {
  Json doc;
  doc["graph"] = graph_to_json(result.contracted);
  Json moves = Json::array();
  for (const MoveRecord& m : result.moves) moves.push_back(move_to_json(m));
  doc["moves"] = std::move(moves);
  doc["initial_counts"] = result.initial_counts
                              ? counts_to_json(*result.initial_counts)
                              : Json(nullptr);
  doc["final_counts"] = result.final_counts
                            ? counts_to_json(*result.final_counts)
                            : Json(nullptr);
  doc["input_is_gem"] = optional_json(result.input_is_gem);
  return doc;
}

Json amplitude_to_json(const AmplitudeResult& result) {
  Json doc;
  doc["E"] = result.E;
  doc["F"] = result.F;
  doc["N"] = result.N;
  doc["rank"] = optional_json(result.rank);
  doc["face_sum_exponent"] = optional_json(result.face_sum_exponent);
  doc["prefactor_exponent"] = result.prefactor_exponent;
  doc["total_exponent"] = optional_json(result.total_exponent);
  doc["solution_exponent"] = optional_json(result.solution_exponent);
  doc["solutions"] = optional_json(result.solutions);
  doc["coupling_exponent"] = result.coupling_exponent;
  return doc;
}

Json error_to_json(std::string_view kind, std::string_view message) {
  return Json{{"error", kind}, {"message", message}};
}

std::string to_dot(const ColoredGraph& graph) {
  static constexpr std::array<const char*, 4> kPalette = {
      "#1b9e77", "#d95f02", "#7570b3", "#e7298a"};
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [style=filled];\n";
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    out << "  " << v;
    switch (graph.orientation(v)) {
      case Orientation::kRed:
        out << " [shape=circle, fillcolor=\"red\"];\n";
        break;
      case Orientation::kBlack:
        out << " [shape=box, fillcolor=\"black\", fontcolor=\"white\"];\n";
        break;
      case Orientation::kUnlabeled:
        out << " [shape=ellipse, fillcolor=\"white\"];\n";
        break;
    }
  }
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) {
    out << "  " << e.u << " -- " << e.v << " [color=\""
        << kPalette[static_cast<std::size_t>(e.color) % kPalette.size()]
        << "\", label=\"" << e.color << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gemkit
