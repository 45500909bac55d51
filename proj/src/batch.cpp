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

#include "gemkit/batch.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gemkit {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

constexpr std::uint64_t kBlock = 4096;

struct Candidate {
  PairingSpec pairing;
  ColoredGraph graph;
  Certificate certificate;
  bool keep = false;
};

}  // namespace

std::vector<GeneratedGraph> collect_vacuum_graphs(int p, int dimension,
                                                  EnumerationOptions options) {
  const std::uint64_t total = pairing_count(p, dimension);
  std::vector<GeneratedGraph> out;
  std::set<Certificate> seen;
  std::vector<Candidate> block;
  for (std::uint64_t begin = 0; begin < total; begin += kBlock) {
    const auto size = static_cast<long long>(std::min(kBlock, total - begin));
    block.assign(static_cast<std::size_t>(size), Candidate{});
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < size; ++i) {
      Candidate& c = block[static_cast<std::size_t>(i)];
      c.pairing = pairing_at(p, dimension, begin + static_cast<std::uint64_t>(i));
      c.graph = graph_from_pairing(c.pairing, dimension);
      c.keep = !options.connected_only || is_connected(c.graph);
      if (c.keep && options.dedupe) c.certificate = canonical_certificate(c.graph);
    }
    // Dedupe stays sequential so the first occurrence in index order wins.
    for (std::size_t i = 0; i < block.size(); ++i) {
      Candidate& c = block[i];
      if (!c.keep) continue;
      if (options.dedupe && !seen.insert(c.certificate).second) continue;
      out.push_back(GeneratedGraph{begin + i, std::move(c.pairing),
                                   std::move(c.graph)});
    }
  }
  return out;
}

std::vector<GeneratedGraph> collect_vacuum_graphs_serial(
    int p, int dimension, EnumerationOptions options) {
  std::vector<GeneratedGraph> out;
  VacuumGraphStream stream = enumerate_vacuum_graphs(p, dimension, options);
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<GemReport> classify_batch(std::span<const ColoredGraph> graphs) {
  const auto n = static_cast<long long>(graphs.size());
  std::vector<GemReport> reports(graphs.size());
  std::vector<std::exception_ptr> errors(graphs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) {
    try {
      reports[i] = classify(graphs[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

std::vector<GemReport> classify_batch_serial(
    std::span<const ColoredGraph> graphs) {
  std::vector<GemReport> reports;
  reports.reserve(graphs.size());
  for (const ColoredGraph& g : graphs) reports.push_back(classify(g));
  return reports;
}

}  // namespace gemkit
