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

// Faces and exact vacuum amplitudes over the cyclic group Z_N.
//
// Each face (closed bicolored cycle) contributes a delta on the signed sum of
// its edge variables. With delta(g) = N [g == 0] and the normalized measure
// (1/N) sum_h per edge, the face sum of a graph with E edges, F faces and a
// face-edge incidence matrix of rank r over Z_N (N prime) is N^(F - r).
// Together with the vertex normalization N^(-p) at order 2p the amplitude is
// (lambda lambda-bar)^p N^(F - r - p).

#ifndef GEMKIT_AMPLITUDE_HPP_
#define GEMKIT_AMPLITUDE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

struct FaceStep {
  int edge = 0;
  int sign = 1;

  friend bool operator==(const FaceStep&, const FaceStep&) = default;
};

struct Face {
  Color first_color = 0;  // first_color < second_color
  Color second_color = 0;
  VertexId start = 0;
  std::vector<FaceStep> cycle;
};

// One face per bicolored cycle, grouped by color pair. Each cycle starts at
// its smallest vertex and leaves along first_color. Signs are +1 for a
// red-to-black traversal in labeled graphs and alternate +1, -1 otherwise.
std::vector<Face> faces(const ColoredGraph& graph);

// Rows are face equations sum(sign * h[edge]) == 0.
struct FaceSystem {
  int num_edges = 0;
  std::vector<std::vector<FaceStep>> rows;
};

FaceSystem face_system(const ColoredGraph& graph);

// N^E above this is refused by the brute-force counters.
inline constexpr std::uint64_t kBruteForceLimit = 100'000'000;

// Plain odometer over every assignment in Z_N^E; the reference kernel.
std::uint64_t count_solutions_serial(const FaceSystem& system, int modulus);

// Depth-first count that checks each face as soon as its last edge is set,
// with the leading edges split across OpenMP threads. Same answer as the
// serial kernel.
std::uint64_t count_solutions(const FaceSystem& system, int modulus);

bool is_prime(int n);

// Rank over Z_p. Throws NonPrimeForRank unless p is prime.
int rank_mod_prime(const FaceSystem& system, int p);

enum class Method { kBruteForce, kRank };

struct AmplitudeResult {
  int E = 0;
  int F = 0;
  int N = 0;
  // Number of assignments satisfying every face; empty if it overflows.
  std::optional<std::uint64_t> solutions;
  // The exponent fields are empty when the solution count is not a power of
  // N, which can only happen for composite N.
  std::optional<int> rank;
  std::optional<int> solution_exponent;  // E - rank
  std::optional<int> face_sum_exponent;  // F - rank
  int prefactor_exponent = 0;            // -p
  std::optional<int> total_exponent;     // F - rank - p
  int coupling_exponent = 0;             // p, for (lambda lambda-bar)^p

  friend bool operator==(const AmplitudeResult&,
                         const AmplitudeResult&) = default;
};

// Errors: Disconnected, TooLargeForBruteForce, NonPrimeForRank,
// InvalidArgument (N < 2).
AmplitudeResult amplitude_zn(const ColoredGraph& graph, int N, Method method);

}  // namespace gemkit

#endif  // GEMKIT_AMPLITUDE_HPP_
