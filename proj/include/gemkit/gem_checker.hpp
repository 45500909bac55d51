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

// Manifold / pseudo-manifold classification of 4-colored graphs and the
// bipartiteness test for orientability.
//
// A connected 4-colored graph is a 3-gem iff v + t = b. Independently, it is
// a 3-gem iff every 3-residue is a triball. classify() computes both and
// treats a disagreement as an internal defect.

#ifndef GEMKIT_GEM_CHECKER_HPP_
#define GEMKIT_GEM_CHECKER_HPP_

#include <optional>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

// Requires dimension 3 and a connected graph.
bool is_gem(const ColoredGraph& graph);
bool all_residues_triballs(const ColoredGraph& graph);

// Requires a connected graph; any dimension.
bool is_orientable(const ColoredGraph& graph);

struct FailingResidue {
  std::vector<Color> colors;
  std::vector<VertexId> vertices;
  int euler = 0;
};

// 3-residues that are not triballs (dimension 3 only).
std::vector<FailingResidue> non_triball_residues(const ColoredGraph& graph);

struct GemReport {
  // Gem fields are empty when the dimension is not 3, or when the graph is
  // disconnected (see components).
  std::optional<ResidueCounts> counts;
  bool connected = true;
  std::optional<bool> is_gem;
  std::optional<bool> all_triballs;
  std::vector<FailingResidue> failing_residues;
  // Empty for disconnected graphs.
  std::optional<bool> orientable;
  Certificate certificate;
  // Per-component reports, only for disconnected inputs.
  std::vector<GemReport> components;
};

// Total over valid graphs.
GemReport classify(const ColoredGraph& graph);

}  // namespace gemkit

#endif  // GEMKIT_GEM_CHECKER_HPP_
