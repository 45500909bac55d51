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

// Test fixtures and independent oracles.
//
// The oracles work from the raw edge list only (union-find, exhaustive
// search, permutation brute force) and never call the library algorithms
// they are used to check.

#ifndef GEMKIT_TESTS_SUPPORT_HPP_
#define GEMKIT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/generator.hpp"

namespace gemkit::testing {

inline ColoredGraph melon() {
  return build_graph(3, {Orientation::kRed, Orientation::kBlack},
                     {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {3, 0, 1}});
}

// sigma0 = (0 1), sigma1..3 = identity, reds 0,1 and blacks 2,3.
inline ColoredGraph necklace() {
  const auto R = Orientation::kRed;
  const auto B = Orientation::kBlack;
  return build_graph(3, {R, R, B, B},
                     {{0, 0, 3}, {0, 1, 2},
                      {1, 0, 2}, {1, 1, 3},
                      {2, 0, 2}, {2, 1, 3},
                      {3, 0, 2}, {3, 1, 3}});
}

// K4 with its three perfect matchings as colors (a 2-dimensional gem of the
// projective plane).
inline ColoredGraph k4() {
  return build_graph(2, std::vector<Orientation>(4, Orientation::kUnlabeled),
                     {{0, 0, 1}, {0, 2, 3},
                      {1, 0, 2}, {1, 1, 3},
                      {2, 0, 3}, {2, 1, 2}});
}

inline ColoredGraph two_melons() { return disjoint_union(melon(), melon()); }

// First connected graph in enumeration order at p <= 3 with v + t != b.
// Enumeration index 22 at p = 3. Counts (v, e, b, t) = (6, 12, 8, 4); its
// {0,2,3}- and {1,2,3}-residues are tori (6 - 9 + 3 = 0).
inline PairingSpec first_gepm_pairing() {
  return PairingSpec{3, {{0, 1, 2}, {0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
}
inline constexpr std::uint64_t kFirstGepmIndex = 22;

// Oracles ------------------------------------------------------------------

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline int oracle_component_count(int num_vertices,
                                  const std::vector<Edge>& edges,
                                  std::uint32_t color_mask) {
  UnionFind uf(num_vertices);
  int components = num_vertices;
  for (const Edge& e : edges) {
    if ((color_mask >> e.color) & 1u) components -= uf.unite(e.u, e.v);
  }
  return components;
}

inline std::vector<Edge> edge_list(const ColoredGraph& g) {
  return {g.edges().begin(), g.edges().end()};
}

struct OracleCounts {
  int v, e, b, t;
};

// v, e, b, t from union-find over every color pair and triple.
inline OracleCounts oracle_counts(const ColoredGraph& g) {
  const auto edges = edge_list(g);
  OracleCounts c{g.num_vertices(), static_cast<int>(edges.size()), 0, 0};
  for (std::uint32_t m = 0; m < 16; ++m) {
    const int bits = __builtin_popcount(m);
    if (bits == 2) c.b += oracle_component_count(c.v, edges, m);
    if (bits == 3) c.t += oracle_component_count(c.v, edges, m);
  }
  return c;
}

// Tries every 2-coloring; only for small graphs.
inline bool oracle_bipartite_exhaustive(const ColoredGraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (((mask >> e.u) & 1u) == ((mask >> e.v) & 1u)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline std::vector<Edge> normalized_edges(const ColoredGraph& g,
                                          const std::vector<int>& perm) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    const int a = perm[e.u];
    const int b = perm[e.v];
    out.push_back(Edge{e.color, std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Identical up to edge order.
inline bool same_graph(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.num_colors() != b.num_colors() ||
      a.num_vertices() != b.num_vertices()) {
    return false;
  }
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    if (a.orientation(v) != b.orientation(v)) return false;
  }
  std::vector<int> identity(a.num_vertices());
  std::iota(identity.begin(), identity.end(), 0);
  return normalized_edges(a, identity) == normalized_edges(b, identity);
}

// Brute force over all orientation-preserving vertex bijections.
inline bool oracle_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.num_colors() != b.num_colors() ||
      a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges() || a.is_labeled() != b.is_labeled()) {
    return false;
  }
  const int n = a.num_vertices();
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  const auto target = normalized_edges(b, identity);
  std::vector<int> perm = identity;
  do {
    bool orient_ok = true;
    for (int v = 0; v < n && orient_ok; ++v) {
      orient_ok = a.orientation(v) == b.orientation(perm[v]);
    }
    if (orient_ok && normalized_edges(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Lexicographically least relabeled edge list over all orientation-preserving
// bijections. Two graphs are isomorphic iff their forms match.
inline std::vector<Edge> oracle_canonical_form(const ColoredGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool have = false;
  do {
    bool orient_ok = true;
    for (int v = 0; v < n && orient_ok; ++v) {
      orient_ok = g.orientation(v) == g.orientation(perm[v]);
    }
    if (!orient_ok) continue;
    auto form = normalized_edges(g, perm);
    if (!have || form < best) {
      best = std::move(form);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<VertexId> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace gemkit::testing

#endif  // GEMKIT_TESTS_SUPPORT_HPP_
