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

// Finite (n+1)-regular properly edge-colored multigraphs.
//
// A ColoredGraph is immutable once built. Every vertex carries exactly one
// edge of each color 0..n, so each color class is a perfect matching and the
// incidence lookup (vertex, color) -> edge is O(1). Vertices may carry a
// Red/Black orientation; a labeled graph only joins Red to Black.

#ifndef GEMKIT_COLORED_GRAPH_HPP_
#define GEMKIT_COLORED_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gemkit {

using Color = int;
using VertexId = int;

enum class Orientation : std::uint8_t { kUnlabeled, kRed, kBlack };

std::string_view orientation_name(Orientation o);

struct Edge {
  Color color = 0;
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class ErrorKind {
  kMissingColorAtVertex,
  kDuplicateColorAtVertex,
  kSelfLoop,
  kOrientationViolation,
  kColorOutOfRange,
  kInvalidVertexId,
  kInvalidDimension,
  kWrongDimension,
  kDisconnected,
  kWrongResidueRank,
  kKOutOfRange,
  kDipoleNotFound,
  kImproperDipole,
  kDegenerateWeld,
  kBadHostSelection,
  kTooLargeForBruteForce,
  kNonPrimeForRank,
  kInvalidArgument,
  kParseError,
};

std::string_view error_kind_name(ErrorKind kind);

class GemError : public std::runtime_error {
 public:
  GemError(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// A subset of colors stored as a bitmask; supports up to 32 colors.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t mask) : mask_(mask) {}
  static ColorSet all(int num_colors);
  static ColorSet of(std::span<const Color> colors);

  constexpr std::uint32_t mask() const { return mask_; }
  bool contains(Color c) const { return (mask_ >> c) & 1u; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  ColorSet with(Color c) const { return ColorSet(mask_ | (1u << c)); }
  ColorSet complement(int num_colors) const {
    return ColorSet(all(num_colors).mask_ & ~mask_);
  }
  std::vector<Color> to_vector() const;

  friend auto operator<=>(const ColorSet&, const ColorSet&) = default;

 private:
  std::uint32_t mask_ = 0;
};

// Every subset of {0..num_colors-1} with exactly k elements, in increasing
// mask order.
std::vector<ColorSet> color_subsets(int num_colors, int k);

inline constexpr int kMaxColors = 32;

class ColoredGraph {
 public:
  // The empty graph on zero colors.
  ColoredGraph() = default;

  int dimension() const { return num_colors_ - 1; }
  int num_colors() const { return num_colors_; }
  int num_vertices() const { return static_cast<int>(orientations_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool is_labeled() const { return labeled_; }
  Orientation orientation(VertexId v) const { return orientations_[v]; }
  std::span<const Orientation> orientations() const { return orientations_; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  // Index into edges() of the unique c-colored edge at v.
  int incident_edge(VertexId v, Color c) const {
    return incidence_[static_cast<std::size_t>(v) * num_colors_ + c];
  }
  VertexId neighbor(VertexId v, Color c) const {
    const Edge& e = edges_[incident_edge(v, c)];
    return e.u == v ? e.v : e.u;
  }

  // Validates and builds. num_colors may be 0 (isolated vertices only); the
  // public entry point build_graph() additionally requires dimension >= 1.
  static ColoredGraph from_parts(int num_colors,
                                 std::vector<Orientation> orientations,
                                 std::vector<Edge> edges);

 private:
  int num_colors_ = 0;
  bool labeled_ = false;
  std::vector<Orientation> orientations_;
  std::vector<Edge> edges_;
  std::vector<int> incidence_;
};

// Builds a validated (dimension+1)-regular properly colored graph. Vertex ids
// are the indices of `orientations`. Throws GemError on any violation.
ColoredGraph build_graph(int dimension, std::vector<Orientation> orientations,
                         std::vector<Edge> edges);

// 0/1 class per vertex. Class 0 holds the smallest vertex of each component.
using TwoColoring = std::vector<int>;

// Structural test; orientation labels are ignored.
std::optional<TwoColoring> is_bipartite(const ColoredGraph& graph);

struct Component {
  ColoredGraph graph;
  // vertex_map[local id] = id in the parent graph
  std::vector<VertexId> vertex_map;
};

// Component label per vertex, numbered by smallest member.
std::vector<int> component_labels(const ColoredGraph& graph,
                                  int* num_components = nullptr);
bool is_connected(const ColoredGraph& graph);
std::vector<Component> connected_components(const ColoredGraph& graph);

// Subgraph on `vertices` (kept in the given order) keeping only the edges of
// `colors`, remapped to 0..|colors|-1 by rank. The vertex set must be closed
// under the kept colors.
ColoredGraph induced_subgraph(const ColoredGraph& graph,
                              std::span<const VertexId> vertices,
                              ColorSet colors);

// Disjoint union; the second graph's ids are shifted by a.num_vertices().
ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b);

// Renames vertex v to perm[v].
ColoredGraph relabel(const ColoredGraph& graph,
                     std::span<const VertexId> perm);

struct Certificate {
  std::string bytes;

  std::string hex() const;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

// Equal iff the graphs are related by a color- and orientation-preserving
// vertex relabeling.
Certificate canonical_certificate(const ColoredGraph& graph);

}  // namespace gemkit

#endif  // GEMKIT_COLORED_GRAPH_HPP_
