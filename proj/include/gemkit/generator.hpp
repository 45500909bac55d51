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

// Vacuum graphs of the colored model at order 2p.
//
// A labeled vacuum graph is a tuple of n+1 permutations of {0..p-1}: the
// color c propagators join red vertex r to black vertex sigmas[c][r]. Red
// vertices get ids 0..p-1 and black vertices p..2p-1.

#ifndef GEMKIT_GENERATOR_HPP_
#define GEMKIT_GENERATOR_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

using Permutation = std::vector<int>;

struct PairingSpec {
  int p = 0;
  std::vector<Permutation> sigmas;  // one per color

  friend bool operator==(const PairingSpec&, const PairingSpec&) = default;
};

struct EnumerationOptions {
  bool connected_only = false;
  bool dedupe = false;
  std::uint64_t seed = 0;
};

// Throws InvalidArgument if the pairing is malformed.
ColoredGraph graph_from_pairing(const PairingSpec& spec, int dimension);

// (p!)^(n+1). Throws InvalidArgument on overflow.
std::uint64_t pairing_count(int p, int dimension);

// The index-th tuple: lexicographic permutation ranks, color 0 most
// significant. Index 0 is all identities.
PairingSpec pairing_at(int p, int dimension, std::uint64_t index);

PairingSpec sample_pairing(int p, int dimension, std::uint64_t seed);
ColoredGraph sample_vacuum_graph(int p, int dimension, std::uint64_t seed);

struct GeneratedGraph {
  std::uint64_t index = 0;
  PairingSpec pairing;
  ColoredGraph graph;
};

// Lazy enumeration in index order.
class VacuumGraphStream {
 public:
  VacuumGraphStream(int p, int dimension, EnumerationOptions options);

  std::optional<GeneratedGraph> next();
  std::uint64_t total() const { return total_; }

 private:
  int p_;
  int dimension_;
  EnumerationOptions options_;
  std::uint64_t total_;
  std::uint64_t cursor_ = 0;
  std::set<Certificate> seen_;
};

VacuumGraphStream enumerate_vacuum_graphs(int p, int dimension,
                                          EnumerationOptions options = {});

}  // namespace gemkit

#endif  // GEMKIT_GENERATOR_HPP_
