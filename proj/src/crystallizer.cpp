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

#include "gemkit/crystallizer.hpp"

#include <random>

namespace gemkit {

CrystallizationResult crystallize(const ColoredGraph& graph,
                                  CrystallizeOptions options) {
  if (!is_connected(graph)) {
    throw GemError(ErrorKind::kDisconnected, "graph is not connected");
  }
  CrystallizationResult result;
  if (graph.dimension() == 3) {
    const ResidueCounts c = residue_counts(graph);
    result.initial_counts = c;
    result.input_is_gem = c.v + c.t == c.b;
  }
  std::mt19937_64 rng(options.seed);
  ColoredGraph current = graph;
  // find_dipoles needs 1 <= n.
  while (current.dimension() >= 1) {
    std::vector<Dipole> proper;
    for (Dipole& d : find_dipoles(current, 1)) {
      if (d.proper) proper.push_back(std::move(d));
    }
    if (proper.empty()) break;
    std::size_t pick = 0;
    if (options.strategy == Strategy::kRandom) {
      pick = std::uniform_int_distribution<std::size_t>(0, proper.size() - 1)(
          rng);
    }
    MoveResult step = contract(current, proper[pick]);
    current = std::move(step.graph);
    result.moves.push_back(std::move(step.record));
  }
  if (current.dimension() == 3) result.final_counts = residue_counts(current);
  result.contracted = std::move(current);
  return result;
}

ColoredGraph replay(const ColoredGraph& graph,
                    std::span<const MoveRecord> moves) {
  ColoredGraph current = graph;
  for (const MoveRecord& m : moves) {
    if (m.kind == MoveKind::kContract) {
      current = contract(current, m.dipole, {.allow_improper = true}).graph;
    } else {
      current = create(current, m.welded, m.dipole.colors).graph;
    }
  }
  return current;
}

}  // namespace gemkit
