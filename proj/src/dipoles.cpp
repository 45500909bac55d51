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

#include "gemkit/dipoles.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "gemkit/residues.hpp"

namespace gemkit {

int MoveRecord::delta_rank(int k) const {
  int total = 0;
  for (const auto& [colors, delta] : residue_deltas) {
    if (static_cast<int>(colors.size()) == k) total += delta;
  }
  return total;
}

namespace {

// Colors of the edges joining u and v.
ColorSet joining_colors(const ColoredGraph& graph, VertexId u, VertexId v) {
  ColorSet s;
  for (Color c = 0; c < graph.num_colors(); ++c) {
    if (graph.neighbor(u, c) == v) s = s.with(c);
  }
  return s;
}

std::map<std::vector<Color>, int> subset_counts(const ColoredGraph& graph) {
  std::map<std::vector<Color>, int> counts;
  for (int k = 0; k <= graph.num_colors(); ++k) {
    for (ColorSet s : color_subsets(graph.num_colors(), k)) {
      counts[s.to_vector()] = count_residues(graph, s);
    }
  }
  return counts;
}

std::map<std::vector<Color>, int> count_deltas(const ColoredGraph& before,
                                               const ColoredGraph& after) {
  std::map<std::vector<Color>, int> deltas = subset_counts(after);
  for (const auto& [colors, count] : subset_counts(before)) {
    deltas[colors] -= count;
  }
  return deltas;
}

Orientation opposite(Orientation o) {
  switch (o) {
    case Orientation::kRed:
      return Orientation::kBlack;
    case Orientation::kBlack:
      return Orientation::kRed;
    case Orientation::kUnlabeled:
      break;
  }
  return Orientation::kUnlabeled;
}

}  // namespace

bool is_proper_pair(const ColoredGraph& graph, VertexId u, VertexId v,
                    ColorSet dipole_colors) {
  const std::vector<Color> rest =
      dipole_colors.complement(graph.num_colors()).to_vector();
  std::vector<bool> seen(graph.num_vertices(), false);
  std::vector<VertexId> stack{u};
  seen[u] = true;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    if (x == v) return false;
    for (Color c : rest) {
      const VertexId y = graph.neighbor(x, c);
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return true;
}

std::vector<Dipole> find_dipoles(const ColoredGraph& graph, int k) {
  if (k < 1 || k > graph.dimension()) {
    throw GemError(ErrorKind::kKOutOfRange,
                   "k must be in 1.." + std::to_string(graph.dimension()));
  }
  std::vector<Dipole> out;
  for (VertexId x = 0; x < graph.num_vertices(); ++x) {
    for (Color c = 0; c < graph.num_colors(); ++c) {
      const VertexId y = graph.neighbor(x, c);
      if (y <= x) continue;
      const ColorSet joined = joining_colors(graph, x, y);
      // Report each pair once, from its smallest joining color.
      if (joined.to_vector().front() != c || joined.size() != k) continue;
      out.push_back(Dipole{k, x, y, joined.to_vector(),
                           is_proper_pair(graph, x, y, joined)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Dipole& a, const Dipole& b) {
    return std::tie(a.colors, a.u, a.v) < std::tie(b.colors, b.u, b.v);
  });
  return out;
}

MoveResult contract(const ColoredGraph& graph, const Dipole& dipole,
                    ContractOptions options) {
  const int nv = graph.num_vertices();
  const VertexId x = dipole.u;
  const VertexId y = dipole.v;
  if (x < 0 || y < 0 || x >= nv || y >= nv || x == y) {
    throw GemError(ErrorKind::kDipoleNotFound, "endpoints out of range");
  }
  const ColorSet joined = joining_colors(graph, x, y);
  const int k = joined.size();
  if (k < 1 || k > graph.dimension() || k != dipole.k ||
      joined.to_vector() != dipole.colors) {
    throw GemError(ErrorKind::kDipoleNotFound,
                   "vertices " + std::to_string(x) + " and " +
                       std::to_string(y) +
                       " are not joined by exactly the stated colors");
  }
  const bool proper = is_proper_pair(graph, x, y, joined);
  if (!proper && !options.allow_improper) {
    throw GemError(ErrorKind::kImproperDipole,
                   "endpoints share a residue of the complementary colors");
  }

  std::vector<int> remap(nv, -1);
  std::vector<Orientation> orientations;
  orientations.reserve(nv - 2);
  for (VertexId w = 0; w < nv; ++w) {
    if (w == x || w == y) continue;
    remap[w] = static_cast<int>(orientations.size());
    orientations.push_back(graph.orientation(w));
  }
  std::vector<Edge> edges;
  edges.reserve(graph.num_edges() - graph.num_colors());
  for (const Edge& e : graph.edges()) {
    if (e.u == x || e.u == y || e.v == x || e.v == y) continue;
    edges.push_back(Edge{e.color, remap[e.u], remap[e.v]});
  }
  MoveRecord record;
  record.kind = MoveKind::kContract;
  record.dipole = Dipole{k, x, y, joined.to_vector(), proper};
  for (Color c : joined.complement(graph.num_colors()).to_vector()) {
    const VertexId a = graph.neighbor(x, c);
    const VertexId b = graph.neighbor(y, c);
    if (a == b) {
      throw GemError(ErrorKind::kDegenerateWeld,
                     "welding color " + std::to_string(c) +
                         " would create a loop at vertex " +
                         std::to_string(a));
    }
    edges.push_back(Edge{c, remap[a], remap[b]});
    record.welded.push_back(HostEdge{c, remap[a], remap[b]});
  }

  ColoredGraph result = ColoredGraph::from_parts(
      graph.num_colors(), std::move(orientations), std::move(edges));
  record.residue_deltas = count_deltas(graph, result);

  if (proper && k == 1 && graph.dimension() == 3) {
    const bool expected = record.delta_rank(0) == -2 &&
                          record.delta_rank(1) == -4 &&
                          record.delta_rank(2) == -3 &&
                          record.delta_rank(3) == -1;
    if (!expected) {
      throw std::logic_error("proper 1-dipole contraction changed residue "
                             "counts by an unexpected amount");
    }
  }
  return MoveResult{std::move(result), std::move(record)};
}

MoveResult create(const ColoredGraph& graph, std::span<const HostEdge> hosts,
                  std::span<const Color> dipole_colors) {
  const int nv = graph.num_vertices();
  const int num_colors = graph.num_colors();
  if (nv == 0) {
    throw GemError(ErrorKind::kBadHostSelection, "graph has no edges");
  }
  for (Color c : dipole_colors) {
    if (c < 0 || c >= num_colors) {
      throw GemError(ErrorKind::kBadHostSelection,
                     "dipole color " + std::to_string(c) + " out of range");
    }
  }
  const ColorSet dset = ColorSet::of(dipole_colors);
  const int k = dset.size();
  if (k != static_cast<int>(dipole_colors.size()) || k < 1 ||
      k > graph.dimension()) {
    throw GemError(ErrorKind::kBadHostSelection,
                   "need 1..n distinct dipole colors");
  }
  const ColorSet rest = dset.complement(num_colors);
  if (static_cast<int>(hosts.size()) != rest.size()) {
    throw GemError(ErrorKind::kBadHostSelection,
                   "need exactly one host edge per non-dipole color");
  }
  ColorSet host_colors;
  for (const HostEdge& h : hosts) {
    if (h.color < 0 || h.color >= num_colors || !rest.contains(h.color) ||
        host_colors.contains(h.color)) {
      throw GemError(ErrorKind::kBadHostSelection,
                     "host colors must be the non-dipole colors, each once");
    }
    host_colors = host_colors.with(h.color);
    if (h.u < 0 || h.u >= nv || h.v < 0 || h.v >= nv ||
        graph.neighbor(h.u, h.color) != h.v) {
      throw GemError(ErrorKind::kBadHostSelection,
                     "no color " + std::to_string(h.color) + " edge " +
                         std::to_string(h.u) + "-" + std::to_string(h.v));
    }
  }

  std::vector<Orientation> orientations(graph.orientations().begin(),
                                        graph.orientations().end());
  Orientation first = Orientation::kUnlabeled;
  Orientation second = Orientation::kUnlabeled;
  if (graph.is_labeled()) {
    const Orientation attach = graph.orientation(hosts.front().u);
    for (const HostEdge& h : hosts) {
      if (graph.orientation(h.u) != attach) {
        throw GemError(ErrorKind::kBadHostSelection,
                       "host u ends must share an orientation");
      }
    }
    first = opposite(attach);
    second = attach;
  }
  const VertexId x = nv;
  const VertexId y = nv + 1;
  orientations.push_back(first);
  orientations.push_back(second);

  std::vector<bool> removed(graph.num_edges(), false);
  for (const HostEdge& h : hosts) {
    removed[graph.incident_edge(h.u, h.color)] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(graph.num_edges() + num_colors);
  for (int i = 0; i < graph.num_edges(); ++i) {
    if (!removed[i]) edges.push_back(graph.edge(i));
  }
  for (const HostEdge& h : hosts) {
    edges.push_back(Edge{h.color, h.u, x});
    edges.push_back(Edge{h.color, y, h.v});
  }
  for (Color c : dset.to_vector()) edges.push_back(Edge{c, x, y});

  ColoredGraph result = ColoredGraph::from_parts(
      num_colors, std::move(orientations), std::move(edges));
  MoveRecord record;
  record.kind = MoveKind::kCreate;
  record.dipole = Dipole{k, x, y, dset.to_vector(),
                         is_proper_pair(result, x, y, dset)};
  record.welded.assign(hosts.begin(), hosts.end());
  record.residue_deltas = count_deltas(graph, result);
  return MoveResult{std::move(result), std::move(record)};
}

}  // namespace gemkit
