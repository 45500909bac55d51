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

// k-dipoles and the contraction / creation moves on them.
//
// A k-dipole is a vertex pair joined by exactly k parallel edges. It is proper
// when its endpoints lie in different residues of the n+1-k remaining colors.
// Contracting deletes both endpoints and welds the two dangling edges of each
// remaining color; creating is the exact inverse.

#ifndef GEMKIT_DIPOLES_HPP_
#define GEMKIT_DIPOLES_HPP_

#include <map>
#include <span>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

struct Dipole {
  int k = 0;
  VertexId u = 0;  // u < v
  VertexId v = 0;
  std::vector<Color> colors;  // sorted
  bool proper = false;

  friend bool operator==(const Dipole&, const Dipole&) = default;
};

// An existing edge to subdivide during creation. The u end is attached to
// the first new vertex, the v end to the second.
struct HostEdge {
  Color color = 0;
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const HostEdge&, const HostEdge&) = default;
};

enum class MoveKind { kContract, kCreate };

struct MoveRecord {
  MoveKind kind = MoveKind::kContract;
  // For creation, u and v are the ids of the two new vertices.
  Dipole dipole;
  // Contraction: the welded edges in the result's ids, so that
  // create(result, welded, dipole.colors) undoes the move.
  // Creation: the host edges that were subdivided.
  std::vector<HostEdge> welded;
  // Change in residue count for every color subset (sorted colors), from a
  // full recount. The empty subset gives the vertex delta and singletons
  // give per-color edge deltas.
  std::map<std::vector<Color>, int> residue_deltas;

  // Summed delta over all subsets of size k.
  int delta_rank(int k) const;
};

// Throws KOutOfRange unless 1 <= k <= n. Ordered by (colors, u, v).
std::vector<Dipole> find_dipoles(const ColoredGraph& graph, int k);

// Properness of an arbitrary vertex pair with respect to `colors`.
bool is_proper_pair(const ColoredGraph& graph, VertexId u, VertexId v,
                    ColorSet dipole_colors);

struct MoveResult {
  ColoredGraph graph;
  MoveRecord record;
};

struct ContractOptions {
  bool allow_improper = false;
};

// The remaining vertices keep their relative order. Errors: DipoleNotFound,
// ImproperDipole, DegenerateWeld.
MoveResult contract(const ColoredGraph& graph, const Dipole& dipole,
                    ContractOptions options = {});

// Inserts two vertices (ids v and v+1) joined by the dipole colors and
// subdivides one host edge per remaining color. In a labeled graph the u
// ends of the hosts must share an orientation. Error: BadHostSelection.
MoveResult create(const ColoredGraph& graph, std::span<const HostEdge> hosts,
                  std::span<const Color> dipole_colors);

}  // namespace gemkit

#endif  // GEMKIT_DIPOLES_HPP_
