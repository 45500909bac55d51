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

// k-residues (bubbles): connected components of the subgraph spanned by a
// subset of the colors.

#ifndef GEMKIT_RESIDUES_HPP_
#define GEMKIT_RESIDUES_HPP_

#include <map>
#include <span>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

struct Residue {
  // Sorted original colors. subgraph uses them renumbered 0..k-1 by rank.
  std::vector<Color> colors;
  // Sorted parent ids; subgraph vertex i is vertices[i].
  std::vector<VertexId> vertices;
  ColoredGraph subgraph;
};

// Residues ordered by smallest member. Duplicate colors are ignored.
std::vector<Residue> residues_for(const ColoredGraph& graph,
                                  std::span<const Color> colors);

// Number of components of the subgraph spanned by `colors`, without building
// the residues.
int count_residues(const ColoredGraph& graph, ColorSet colors);

// Residue index per vertex for the given colors.
std::vector<int> residue_labels(const ColoredGraph& graph, ColorSet colors,
                                int* num_residues = nullptr);

struct ResidueCounts {
  int v = 0;
  int e = 0;
  int b = 0;
  int t = 0;

  friend bool operator==(const ResidueCounts&, const ResidueCounts&) = default;
};

// (v, e, b, t) for a 3-dimensional graph. Throws WrongDimension otherwise.
ResidueCounts residue_counts(const ColoredGraph& graph);

// k -> total number of k-residues over all k-subsets of colors, for every
// k in 0..n+1.
std::map<int, long> residue_count_table(const ColoredGraph& graph);

// v' - e' + f' for a connected 3-colored residue, f' being its bicolored
// cycles. Throws WrongResidueRank for k != 3, Disconnected for a residue
// that is not connected.
int euler_characteristic_2(const Residue& residue);

// Connected, cubic, properly 3-colored and 2 f' - v' = 4.
bool is_triball(const Residue& residue);

}  // namespace gemkit

#endif  // GEMKIT_RESIDUES_HPP_
