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

// OpenMP batch kernels over many graphs. Each has a *_serial twin that the
// tests compare against and the benchmarks time.

#ifndef GEMKIT_BATCH_HPP_
#define GEMKIT_BATCH_HPP_

#include <span>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/gem_checker.hpp"
#include "gemkit/generator.hpp"

namespace gemkit {

// Same output, in the same order, as draining enumerate_vacuum_graphs().
std::vector<GeneratedGraph> collect_vacuum_graphs(
    int p, int dimension, EnumerationOptions options = {});
std::vector<GeneratedGraph> collect_vacuum_graphs_serial(
    int p, int dimension, EnumerationOptions options = {});

std::vector<GemReport> classify_batch(std::span<const ColoredGraph> graphs);
std::vector<GemReport> classify_batch_serial(
    std::span<const ColoredGraph> graphs);

// Number of threads OpenMP would use; 1 when built without OpenMP.
int max_threads();

}  // namespace gemkit

#endif  // GEMKIT_BATCH_HPP_
