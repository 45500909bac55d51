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

#include "gemkit/residues.hpp"

namespace gemkit {

std::vector<int> residue_labels(const ColoredGraph& graph, ColorSet colors,
                                int* num_residues) {
  const std::vector<Color> kept = colors.to_vector();
  const int nv = graph.num_vertices();
  std::vector<int> label(nv, -1);
  std::vector<VertexId> stack;
  int count = 0;
  for (VertexId root = 0; root < nv; ++root) {
    if (label[root] != -1) continue;
    label[root] = count;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (Color c : kept) {
        const VertexId y = graph.neighbor(x, c);
        if (label[y] == -1) {
          label[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  if (num_residues != nullptr) *num_residues = count;
  return label;
}

int count_residues(const ColoredGraph& graph, ColorSet colors) {
  int count = 0;
  residue_labels(graph, colors, &count);
  return count;
}

std::vector<Residue> residues_for(const ColoredGraph& graph,
                                  std::span<const Color> colors) {
  for (Color c : colors) {
    if (c < 0 || c >= graph.num_colors()) {
      throw GemError(ErrorKind::kColorOutOfRange,
                     "color " + std::to_string(c) + " not in 0.." +
                         std::to_string(graph.dimension()));
    }
  }
  const ColorSet set = ColorSet::of(colors);
  int count = 0;
  const std::vector<int> label = residue_labels(graph, set, &count);
  std::vector<std::vector<VertexId>> members(count);
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    members[label[v]].push_back(v);
  }
  std::vector<Residue> out;
  out.reserve(count);
  for (auto& m : members) {
    ColoredGraph sub = induced_subgraph(graph, m, set);
    out.push_back(Residue{set.to_vector(), std::move(m), std::move(sub)});
  }
  return out;
}

ResidueCounts residue_counts(const ColoredGraph& graph) {
  if (graph.dimension() != 3) {
    throw GemError(ErrorKind::kWrongDimension,
                   "residue counts are defined for dimension 3, got " +
                       std::to_string(graph.dimension()));
  }
  ResidueCounts counts;
  counts.v = graph.num_vertices();
  counts.e = graph.num_edges();
  for (ColorSet s : color_subsets(4, 2)) counts.b += count_residues(graph, s);
  for (ColorSet s : color_subsets(4, 3)) counts.t += count_residues(graph, s);
  return counts;
}

std::map<int, long> residue_count_table(const ColoredGraph& graph) {
  std::map<int, long> table;
  for (int k = 0; k <= graph.num_colors(); ++k) {
    long total = 0;
    for (ColorSet s : color_subsets(graph.num_colors(), k)) {
      total += count_residues(graph, s);
    }
    table[k] = total;
  }
  return table;
}

int euler_characteristic_2(const Residue& residue) {
  if (residue.colors.size() != 3 || residue.subgraph.num_colors() != 3) {
    throw GemError(ErrorKind::kWrongResidueRank,
                   "expected a 3-colored residue, got " +
                       std::to_string(residue.colors.size()) + " colors");
  }
  const ColoredGraph& g = residue.subgraph;
  if (!is_connected(g)) {
    throw GemError(ErrorKind::kDisconnected, "residue is not connected");
  }
  int faces = 0;
  for (ColorSet s : color_subsets(3, 2)) faces += count_residues(g, s);
  return g.num_vertices() - g.num_edges() + faces;
}

bool is_triball(const Residue& residue) {
  // The subgraph is cubic and properly colored by construction (validated
  // ColoredGraph on 3 colors), so only the sphere condition remains.
  const int chi = euler_characteristic_2(residue);
  return chi == 2;
}

}  // namespace gemkit
