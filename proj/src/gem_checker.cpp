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

#include "gemkit/gem_checker.hpp"

#include <stdexcept>

namespace gemkit {
namespace {

void require_dimension_3(const ColoredGraph& graph) {
  if (graph.dimension() != 3) {
    throw GemError(ErrorKind::kWrongDimension,
                   "gem recognition needs dimension 3, got " +
                       std::to_string(graph.dimension()));
  }
}

void require_connected(const ColoredGraph& graph) {
  if (!is_connected(graph)) {
    throw GemError(ErrorKind::kDisconnected, "graph is not connected");
  }
}

}  // namespace

bool is_gem(const ColoredGraph& graph) {
  require_dimension_3(graph);
  require_connected(graph);
  const ResidueCounts c = residue_counts(graph);
  return c.v + c.t == c.b;
}

std::vector<FailingResidue> non_triball_residues(const ColoredGraph& graph) {
  require_dimension_3(graph);
  std::vector<FailingResidue> failing;
  for (ColorSet triple : color_subsets(4, 3)) {
    const std::vector<Color> colors = triple.to_vector();
    for (const Residue& r : residues_for(graph, colors)) {
      const int chi = euler_characteristic_2(r);
      if (chi != 2) failing.push_back(FailingResidue{r.colors, r.vertices, chi});
    }
  }
  return failing;
}

bool all_residues_triballs(const ColoredGraph& graph) {
  require_dimension_3(graph);
  require_connected(graph);
  return non_triball_residues(graph).empty();
}

bool is_orientable(const ColoredGraph& graph) {
  require_connected(graph);
  return is_bipartite(graph).has_value();
}

GemReport classify(const ColoredGraph& graph) {
  GemReport report;
  report.certificate = canonical_certificate(graph);
  report.connected = is_connected(graph);
  if (graph.dimension() == 3) report.counts = residue_counts(graph);

  if (!report.connected) {
    for (const Component& comp : connected_components(graph)) {
      report.components.push_back(classify(comp.graph));
    }
    return report;
  }

  report.orientable = is_bipartite(graph).has_value();
  if (graph.dimension() != 3) return report;

  const ResidueCounts& c = *report.counts;
  report.is_gem = c.v + c.t == c.b;
  report.failing_residues = non_triball_residues(graph);
  report.all_triballs = report.failing_residues.empty();
  if (*report.is_gem != *report.all_triballs) {
    throw std::logic_error(
        "gem condition and triball condition disagree; certificate " +
        report.certificate.hex());
  }
  return report;
}

}  // namespace gemkit
