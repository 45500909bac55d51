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

#include "gemkit/colored_graph.hpp"

#include <algorithm>
#include <bit>

namespace gemkit {

std::string_view orientation_name(Orientation o) {
  switch (o) {
    case Orientation::kRed:
      return "red";
    case Orientation::kBlack:
      return "black";
    case Orientation::kUnlabeled:
      break;
  }
  return "unlabeled";
}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMissingColorAtVertex: return "MissingColorAtVertex";
    case ErrorKind::kDuplicateColorAtVertex: return "DuplicateColorAtVertex";
    case ErrorKind::kSelfLoop: return "SelfLoop";
    case ErrorKind::kOrientationViolation: return "OrientationViolation";
    case ErrorKind::kColorOutOfRange: return "ColorOutOfRange";
    case ErrorKind::kInvalidVertexId: return "InvalidVertexId";
    case ErrorKind::kInvalidDimension: return "InvalidDimension";
    case ErrorKind::kWrongDimension: return "WrongDimension";
    case ErrorKind::kDisconnected: return "Disconnected";
    case ErrorKind::kWrongResidueRank: return "WrongResidueRank";
    case ErrorKind::kKOutOfRange: return "KOutOfRange";
    case ErrorKind::kDipoleNotFound: return "DipoleNotFound";
    case ErrorKind::kImproperDipole: return "ImproperDipole";
    case ErrorKind::kDegenerateWeld: return "DegenerateWeld";
    case ErrorKind::kBadHostSelection: return "BadHostSelection";
    case ErrorKind::kTooLargeForBruteForce: return "TooLargeForBruteForce";
    case ErrorKind::kNonPrimeForRank: return "NonPrimeForRank";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

GemError::GemError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind) {}

ColorSet ColorSet::all(int num_colors) {
  if (num_colors >= kMaxColors) return ColorSet(~0u);
  return ColorSet((1u << num_colors) - 1u);
}

ColorSet ColorSet::of(std::span<const Color> colors) {
  std::uint32_t mask = 0;
  for (Color c : colors) {
    if (c < 0 || c >= kMaxColors) {
      throw GemError(ErrorKind::kColorOutOfRange,
                     "color " + std::to_string(c) + " cannot be represented");
    }
    mask |= 1u << c;
  }
  return ColorSet(mask);
}

int ColorSet::size() const { return std::popcount(mask_); }

std::vector<Color> ColorSet::to_vector() const {
  std::vector<Color> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

std::vector<ColorSet> color_subsets(int num_colors, int k) {
  std::vector<ColorSet> out;
  if (k < 0 || k > num_colors) return out;
  const std::uint32_t limit = 1u << num_colors;
  for (std::uint32_t m = 0; m < limit; ++m) {
    if (std::popcount(m) == k) out.emplace_back(m);
  }
  return out;
}

namespace {

std::string vertex_str(VertexId v) { return "vertex " + std::to_string(v); }

}  // namespace

ColoredGraph ColoredGraph::from_parts(int num_colors,
                                      std::vector<Orientation> orientations,
                                      std::vector<Edge> edges) {
  if (num_colors < 0 || num_colors > kMaxColors) {
    throw GemError(ErrorKind::kInvalidDimension,
                   "unsupported color count " + std::to_string(num_colors));
  }
  const int nv = static_cast<int>(orientations.size());
  ColoredGraph g;
  g.num_colors_ = num_colors;
  g.incidence_.assign(static_cast<std::size_t>(nv) * num_colors, -1);

  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const Edge& e = edges[i];
    if (e.color < 0 || e.color >= num_colors) {
      throw GemError(ErrorKind::kColorOutOfRange,
                     "edge " + std::to_string(i) + " has color " +
                         std::to_string(e.color));
    }
    if (e.u < 0 || e.u >= nv || e.v < 0 || e.v >= nv) {
      throw GemError(ErrorKind::kInvalidVertexId,
                     "edge " + std::to_string(i) + " references a vertex "
                     "outside 0.." + std::to_string(nv - 1));
    }
    if (e.u == e.v) {
      throw GemError(ErrorKind::kSelfLoop, "edge " + std::to_string(i) +
                                               " is a loop at " +
                                               vertex_str(e.u));
    }
    for (VertexId end : {e.u, e.v}) {
      int& slot = g.incidence_[static_cast<std::size_t>(end) * num_colors +
                               e.color];
      if (slot != -1) {
        throw GemError(ErrorKind::kDuplicateColorAtVertex,
                       "color " + std::to_string(e.color) +
                           " appears twice at " + vertex_str(end));
      }
      slot = i;
    }
  }
  for (VertexId v = 0; v < nv; ++v) {
    for (Color c = 0; c < num_colors; ++c) {
      if (g.incidence_[static_cast<std::size_t>(v) * num_colors + c] == -1) {
        throw GemError(ErrorKind::kMissingColorAtVertex,
                       "color " + std::to_string(c) + " missing at " +
                           vertex_str(v));
      }
    }
  }

  const auto unlabeled = std::count(orientations.begin(), orientations.end(),
                                    Orientation::kUnlabeled);
  if (unlabeled != 0 && unlabeled != nv) {
    throw GemError(ErrorKind::kOrientationViolation,
                   "graph mixes labeled and unlabeled vertices");
  }
  g.labeled_ = nv > 0 && unlabeled == 0;
  if (g.labeled_) {
    for (const Edge& e : edges) {
      if (orientations[e.u] == orientations[e.v]) {
        throw GemError(ErrorKind::kOrientationViolation,
                       "color " + std::to_string(e.color) + " edge joins " +
                           std::string(orientation_name(orientations[e.u])) +
                           " vertices " + std::to_string(e.u) + " and " +
                           std::to_string(e.v));
      }
    }
  }

  g.orientations_ = std::move(orientations);
  g.edges_ = std::move(edges);
  return g;
}

ColoredGraph build_graph(int dimension, std::vector<Orientation> orientations,
                         std::vector<Edge> edges) {
  if (dimension < 1 || dimension + 1 > kMaxColors) {
    throw GemError(ErrorKind::kInvalidDimension,
                   "dimension must be in 1.." + std::to_string(kMaxColors - 1));
  }
  return ColoredGraph::from_parts(dimension + 1, std::move(orientations),
                                  std::move(edges));
}

std::optional<TwoColoring> is_bipartite(const ColoredGraph& graph) {
  const int nv = graph.num_vertices();
  TwoColoring side(nv, -1);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < nv; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (Color c = 0; c < graph.num_colors(); ++c) {
        const VertexId y = graph.neighbor(x, c);
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::vector<int> component_labels(const ColoredGraph& graph,
                                  int* num_components) {
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
      for (Color c = 0; c < graph.num_colors(); ++c) {
        const VertexId y = graph.neighbor(x, c);
        if (label[y] == -1) {
          label[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  if (num_components != nullptr) *num_components = count;
  return label;
}

bool is_connected(const ColoredGraph& graph) {
  int count = 0;
  component_labels(graph, &count);
  return count <= 1;
}

std::vector<Component> connected_components(const ColoredGraph& graph) {
  int count = 0;
  const std::vector<int> label = component_labels(graph, &count);
  std::vector<std::vector<VertexId>> members(count);
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    members[label[v]].push_back(v);
  }
  std::vector<Component> out;
  out.reserve(count);
  const ColorSet colors = ColorSet::all(graph.num_colors());
  for (auto& m : members) {
    ColoredGraph sub = induced_subgraph(graph, m, colors);
    out.push_back(Component{std::move(sub), std::move(m)});
  }
  return out;
}

ColoredGraph induced_subgraph(const ColoredGraph& graph,
                              std::span<const VertexId> vertices,
                              ColorSet colors) {
  std::vector<int> local(graph.num_vertices(), -1);
  std::vector<Orientation> orientations;
  orientations.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<int>(i);
    orientations.push_back(graph.orientation(vertices[i]));
  }
  const std::vector<Color> kept = colors.to_vector();
  std::vector<Color> rank(graph.num_colors(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    rank[kept[i]] = static_cast<Color>(i);
  }
  std::vector<Edge> edges;
  for (VertexId x : vertices) {
    for (Color c : kept) {
      const Edge& e = graph.edge(graph.incident_edge(x, c));
      if (e.u != x) continue;
      if (local[e.v] < 0) {
        throw GemError(ErrorKind::kInvalidArgument,
                       "vertex set is not closed under the kept colors");
      }
      edges.push_back(Edge{rank[c], local[e.u], local[e.v]});
    }
  }
  return ColoredGraph::from_parts(static_cast<int>(kept.size()),
                                  std::move(orientations), std::move(edges));
}

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.num_colors() != b.num_colors()) {
    throw GemError(ErrorKind::kWrongDimension,
                   "cannot join graphs of different dimension");
  }
  std::vector<Orientation> orientations(a.orientations().begin(),
                                        a.orientations().end());
  orientations.insert(orientations.end(), b.orientations().begin(),
                      b.orientations().end());
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const int shift = a.num_vertices();
  for (const Edge& e : b.edges()) {
    edges.push_back(Edge{e.color, e.u + shift, e.v + shift});
  }
  return ColoredGraph::from_parts(a.num_colors(), std::move(orientations),
                                  std::move(edges));
}

ColoredGraph relabel(const ColoredGraph& graph,
                     std::span<const VertexId> perm) {
  const int nv = graph.num_vertices();
  if (static_cast<int>(perm.size()) != nv) {
    throw GemError(ErrorKind::kInvalidArgument, "permutation has wrong size");
  }
  std::vector<Orientation> orientations(nv);
  std::vector<bool> seen(nv, false);
  for (VertexId v = 0; v < nv; ++v) {
    if (perm[v] < 0 || perm[v] >= nv || seen[perm[v]]) {
      throw GemError(ErrorKind::kInvalidArgument, "not a permutation");
    }
    seen[perm[v]] = true;
    orientations[perm[v]] = graph.orientation(v);
  }
  std::vector<Edge> edges;
  edges.reserve(graph.num_edges());
  for (const Edge& e : graph.edges()) {
    edges.push_back(Edge{e.color, perm[e.u], perm[e.v]});
  }
  return ColoredGraph::from_parts(graph.num_colors(), std::move(orientations),
                                  std::move(edges));
}

std::string Certificate::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char ch : bytes) {
    out.push_back(kDigits[ch >> 4]);
    out.push_back(kDigits[ch & 15]);
  }
  return out;
}

namespace {

// Stable color refinement. Each vertex has exactly one neighbor per color, so
// the signature is the tuple of the neighbors' classes in color order. Class
// numbers are ranks of sorted signatures and therefore labeling-invariant.
std::vector<int> refine(const ColoredGraph& graph) {
  const int nv = graph.num_vertices();
  const int k = graph.num_colors();
  std::vector<int> cls(nv);
  for (VertexId v = 0; v < nv; ++v) {
    cls[v] = static_cast<int>(graph.orientation(v));
  }
  int num_classes = -1;
  std::vector<std::vector<int>> sig(nv, std::vector<int>(k + 1));
  while (true) {
    for (VertexId v = 0; v < nv; ++v) {
      sig[v][0] = cls[v];
      for (Color c = 0; c < k; ++c) sig[v][c + 1] = cls[graph.neighbor(v, c)];
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (VertexId v = 0; v < nv; ++v) {
      cls[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
          distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == num_classes) break;
    num_classes = now;
  }
  return cls;
}

// Breadth-first labeling from `start` visiting neighbors in color order. In a
// connected properly colored graph this fixes every label, so the code below
// describes the component completely.
std::vector<std::uint32_t> bfs_code(const ColoredGraph& graph, VertexId start,
                                    std::vector<int>& label) {
  std::vector<VertexId> order{start};
  label[start] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Color c = 0; c < graph.num_colors(); ++c) {
      const VertexId y = graph.neighbor(order[head], c);
      if (label[y] < 0) {
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  std::vector<std::uint32_t> code;
  code.reserve(order.size() * (graph.num_colors() + 1) + 1);
  code.push_back(static_cast<std::uint32_t>(order.size()));
  for (VertexId x : order) {
    code.push_back(static_cast<std::uint32_t>(graph.orientation(x)));
  }
  for (VertexId x : order) {
    for (Color c = 0; c < graph.num_colors(); ++c) {
      code.push_back(static_cast<std::uint32_t>(label[graph.neighbor(x, c)]));
    }
  }
  for (VertexId x : order) label[x] = -1;
  return code;
}

void append_u32(std::string& out, std::uint32_t value) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<char>((value >> shift) & 0xff));
  }
}

}  // namespace

Certificate canonical_certificate(const ColoredGraph& graph) {
  const std::vector<int> cls = refine(graph);
  int count = 0;
  const std::vector<int> comp = component_labels(graph, &count);

  // Target cell per component: the vertices with the smallest class.
  std::vector<int> best_class(count, -1);
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    int& b = best_class[comp[v]];
    if (b < 0 || cls[v] < b) b = cls[v];
  }
  std::vector<std::vector<std::uint32_t>> codes(count);
  std::vector<int> label(graph.num_vertices(), -1);
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    if (cls[v] != best_class[comp[v]]) continue;
    std::vector<std::uint32_t> code = bfs_code(graph, v, label);
    auto& best = codes[comp[v]];
    if (best.empty() || code < best) best = std::move(code);
  }
  std::sort(codes.begin(), codes.end());

  Certificate cert;
  append_u32(cert.bytes, static_cast<std::uint32_t>(graph.num_colors()));
  append_u32(cert.bytes, graph.is_labeled() ? 1u : 0u);
  append_u32(cert.bytes, static_cast<std::uint32_t>(count));
  for (const auto& code : codes) {
    for (std::uint32_t word : code) append_u32(cert.bytes, word);
  }
  return cert;
}

}  // namespace gemkit
