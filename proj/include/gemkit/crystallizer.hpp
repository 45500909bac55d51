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

#ifndef GEMKIT_CRYSTALLIZER_HPP_
#define GEMKIT_CRYSTALLIZER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/dipoles.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

enum class Strategy {
  // Smallest (color, u, v) first.
  kLex,
  // Uniform choice among the proper 1-dipoles, seeded.
  kRandom,
};

struct CrystallizeOptions {
  Strategy strategy = Strategy::kLex;
  std::uint64_t seed = 0;
};

struct CrystallizationResult {
  ColoredGraph contracted;
  std::vector<MoveRecord> moves;
  // Dimension 3 only.
  std::optional<ResidueCounts> initial_counts;
  std::optional<ResidueCounts> final_counts;
  // False flags a contracted pseudo-manifold rather than a crystallization.
  // Empty outside dimension 3.
  std::optional<bool> input_is_gem;
};

// Contracts proper 1-dipoles until none remain. Throws Disconnected.
CrystallizationResult crystallize(const ColoredGraph& graph,
                                  CrystallizeOptions options = {});

// Re-applies contraction records in order.
ColoredGraph replay(const ColoredGraph& graph,
                    std::span<const MoveRecord> moves);

}  // namespace gemkit

#endif  // GEMKIT_CRYSTALLIZER_HPP_
