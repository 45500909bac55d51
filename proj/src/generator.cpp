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

#include "gemkit/generator.hpp"

#include <limits>
#include <numeric>
#include <random>

namespace gemkit {
namespace {

void check_order(int p, int dimension) {
  if (p < 1) throw GemError(ErrorKind::kInvalidArgument, "p must be >= 1");
  if (dimension < 1 || dimension + 1 > kMaxColors) {
    throw GemError(ErrorKind::kInvalidDimension, "bad dimension");
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw GemError(ErrorKind::kInvalidArgument,
                   "pairing space exceeds 64-bit indexing");
  }
  return a * b;
}

std::uint64_t factorial(int p) {
  std::uint64_t f = 1;
  for (int i = 2; i <= p; ++i) f = checked_mul(f, i);
  return f;
}

// Permutation with lexicographic rank `rank` among those of {0..p-1}.
Permutation unrank_permutation(int p, std::uint64_t rank) {
  std::vector<int> pool(p);
  std::iota(pool.begin(), pool.end(), 0);
  Permutation perm;
  perm.reserve(p);
  for (int i = p; i >= 1; --i) {
    const std::uint64_t block = factorial(i - 1);
    const auto pos = static_cast<std::size_t>(rank / block);
    rank %= block;
    perm.push_back(pool[pos]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return perm;
}

}  // namespace

ColoredGraph graph_from_pairing(const PairingSpec& spec, int dimension) {
  check_order(spec.p, dimension);
  const int p = spec.p;
  if (static_cast<int>(spec.sigmas.size()) != dimension + 1) {
    throw GemError(ErrorKind::kInvalidArgument,
                   "need one permutation per color");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p) * (dimension + 1));
  for (Color c = 0; c <= dimension; ++c) {
    const Permutation& sigma = spec.sigmas[c];
    std::vector<bool> hit(p, false);
    if (static_cast<int>(sigma.size()) != p) {
      throw GemError(ErrorKind::kInvalidArgument, "permutation has wrong size");
    }
    for (int r = 0; r < p; ++r) {
      if (sigma[r] < 0 || sigma[r] >= p || hit[sigma[r]]) {
        throw GemError(ErrorKind::kInvalidArgument,
                       "sigma " + std::to_string(c) + " is not a bijection");
      }
      hit[sigma[r]] = true;
      edges.push_back(Edge{c, r, p + sigma[r]});
    }
  }
  std::vector<Orientation> orientations(2 * p, Orientation::kBlack);
  std::fill_n(orientations.begin(), p, Orientation::kRed);
  return build_graph(dimension, std::move(orientations), std::move(edges));
}

std::uint64_t pairing_count(int p, int dimension) {
  check_order(p, dimension);
  const std::uint64_t f = factorial(p);
  std::uint64_t total = 1;
  for (int c = 0; c <= dimension; ++c) total = checked_mul(total, f);
  return total;
}

PairingSpec pairing_at(int p, int dimension, std::uint64_t index) {
  const std::uint64_t total = pairing_count(p, dimension);
  if (index >= total) {
    throw GemError(ErrorKind::kInvalidArgument, "pairing index out of range");
  }
  const std::uint64_t f = factorial(p);
  PairingSpec spec;
  spec.p = p;
  spec.sigmas.resize(dimension + 1);
  for (int c = dimension; c >= 0; --c) {
    spec.sigmas[c] = unrank_permutation(p, index % f);
    index /= f;
  }
  return spec;
}

PairingSpec sample_pairing(int p, int dimension, std::uint64_t seed) {
  check_order(p, dimension);
  std::mt19937_64 rng(seed);
  PairingSpec spec;
  spec.p = p;
  for (int c = 0; c <= dimension; ++c) {
    Permutation sigma(p);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (int i = p - 1; i > 0; --i) {
      const int j = std::uniform_int_distribution<int>(0, i)(rng);
      std::swap(sigma[i], sigma[j]);
    }
    spec.sigmas.push_back(std::move(sigma));
  }
  return spec;
}

ColoredGraph sample_vacuum_graph(int p, int dimension, std::uint64_t seed) {
  return graph_from_pairing(sample_pairing(p, dimension, seed), dimension);
}

VacuumGraphStream::VacuumGraphStream(int p, int dimension,
                                     EnumerationOptions options)
    : p_(p),
      dimension_(dimension),
      options_(options),
      total_(pairing_count(p, dimension)) {}

std::optional<GeneratedGraph> VacuumGraphStream::next() {
  while (cursor_ < total_) {
    const std::uint64_t index = cursor_++;
    PairingSpec spec = pairing_at(p_, dimension_, index);
    ColoredGraph g = graph_from_pairing(spec, dimension_);
    if (options_.connected_only && !is_connected(g)) continue;
    if (options_.dedupe && !seen_.insert(canonical_certificate(g)).second) {
      continue;
    }
    return GeneratedGraph{index, std::move(spec), std::move(g)};
  }
  return std::nullopt;
}

VacuumGraphStream enumerate_vacuum_graphs(int p, int dimension,
                                          EnumerationOptions options) {
  return VacuumGraphStream(p, dimension, options);
}

}  // namespace gemkit
