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

#include "gemkit/amplitude.hpp"

#include <algorithm>
#include <limits>

namespace gemkit {

std::vector<Face> faces(const ColoredGraph& graph) {
  std::vector<Face> out;
  const int nv = graph.num_vertices();
  std::vector<bool> visited(nv);
  for (Color a = 0; a < graph.num_colors(); ++a) {
    for (Color b = a + 1; b < graph.num_colors(); ++b) {
      std::fill(visited.begin(), visited.end(), false);
      for (VertexId s = 0; s < nv; ++s) {
        if (visited[s]) continue;
        Face face{a, b, s, {}};
        VertexId cur = s;
        Color color = a;
        int step = 0;
        do {
          visited[cur] = true;
          int sign = step % 2 == 0 ? 1 : -1;
          if (graph.is_labeled()) {
            sign = graph.orientation(cur) == Orientation::kRed ? 1 : -1;
          }
          face.cycle.push_back(FaceStep{graph.incident_edge(cur, color), sign});
          cur = graph.neighbor(cur, color);
          color = color == a ? b : a;
          ++step;
        } while (cur != s);
        out.push_back(std::move(face));
      }
    }
  }
  return out;
}

FaceSystem face_system(const ColoredGraph& graph) {
  FaceSystem system;
  system.num_edges = graph.num_edges();
  for (Face& f : faces(graph)) system.rows.push_back(std::move(f.cycle));
  return system;
}

namespace {

int mod(long long value, int modulus) {
  const long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

bool row_satisfied(const std::vector<FaceStep>& row, const std::vector<int>& h,
                   int modulus) {
  long long sum = 0;
  for (const FaceStep& s : row) sum += static_cast<long long>(s.sign) * h[s.edge];
  return mod(sum, modulus) == 0;
}

void check_brute_force_size(int num_edges, int modulus) {
  if (modulus < 2) {
    throw GemError(ErrorKind::kInvalidArgument, "N must be >= 2");
  }
  std::uint64_t space = 1;
  for (int i = 0; i < num_edges; ++i) {
    space *= static_cast<std::uint64_t>(modulus);
    if (space > kBruteForceLimit) {
      throw GemError(ErrorKind::kTooLargeForBruteForce,
                     "N^E exceeds " + std::to_string(kBruteForceLimit));
    }
  }
}

// Rows grouped by their largest edge index.
std::vector<std::vector<int>> rows_by_last_edge(const FaceSystem& system) {
  std::vector<std::vector<int>> by_last(std::max(system.num_edges, 1));
  for (int i = 0; i < static_cast<int>(system.rows.size()); ++i) {
    int last = 0;
    for (const FaceStep& s : system.rows[i]) last = std::max(last, s.edge);
    by_last[last].push_back(i);
  }
  return by_last;
}

struct DepthFirstCounter {
  const FaceSystem& system;
  const std::vector<std::vector<int>>& by_last;
  int modulus;
  std::vector<int> h;

  bool rows_ok(int edge) const {
    for (int r : by_last[edge]) {
      if (!row_satisfied(system.rows[r], h, modulus)) return false;
    }
    return true;
  }

  std::uint64_t count_from(int edge) {
    if (edge == system.num_edges) return 1;
    std::uint64_t total = 0;
    for (int value = 0; value < modulus; ++value) {
      h[edge] = value;
      if (rows_ok(edge)) total += count_from(edge + 1);
    }
    h[edge] = 0;
    return total;
  }
};

}  // namespace

std::uint64_t count_solutions_serial(const FaceSystem& system, int modulus) {
  check_brute_force_size(system.num_edges, modulus);
  std::vector<int> h(system.num_edges, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& row : system.rows) {
      if (!row_satisfied(row, h, modulus)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int i = 0;
    while (i < system.num_edges && ++h[i] == modulus) h[i++] = 0;
    if (i == system.num_edges) break;
  }
  return count;
}

std::uint64_t count_solutions(const FaceSystem& system, int modulus) {
  check_brute_force_size(system.num_edges, modulus);
  if (system.num_edges == 0) {
    // Only empty rows can exist without edges.
    return 1;
  }
  const auto by_last = rows_by_last_edge(system);
  const int split = std::min(system.num_edges, 3);
  long long tasks = 1;
  for (int i = 0; i < split; ++i) tasks *= modulus;

  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (long long task = 0; task < tasks; ++task) {
    DepthFirstCounter counter{system, by_last, modulus,
                              std::vector<int>(system.num_edges, 0)};
    long long rest = task;
    bool ok = true;
    for (int e = 0; e < split && ok; ++e) {
      counter.h[e] = static_cast<int>(rest % modulus);
      rest /= modulus;
      ok = counter.rows_ok(e);
    }
    if (ok) total += counter.count_from(split);
  }
  return total;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

int pow_mod(long long base, long long exp, int p) {
  long long result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<int>(result);
}

}  // namespace

int rank_mod_prime(const FaceSystem& system, int p) {
  if (!is_prime(p)) {
    throw GemError(ErrorKind::kNonPrimeForRank,
                   std::to_string(p) + " is not prime");
  }
  const int cols = system.num_edges;
  std::vector<std::vector<int>> m;
  m.reserve(system.rows.size());
  for (const auto& row : system.rows) {
    std::vector<int> dense(cols, 0);
    for (const FaceStep& s : row) dense[s.edge] = mod(dense[s.edge] + s.sign, p);
    m.push_back(std::move(dense));
  }
  int rank = 0;
  const int nrows = static_cast<int>(m.size());
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int pivot = rank;
    while (pivot < nrows && m[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[pivot], m[rank]);
    const int inv = pow_mod(m[rank][col], p - 2, p);
    for (int c = col; c < cols; ++c) {
      m[rank][c] = static_cast<int>(static_cast<long long>(m[rank][c]) * inv % p);
    }
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const long long factor = m[r][col];
      for (int c = col; c < cols; ++c) {
        m[r][c] = mod(m[r][c] - factor * m[rank][c], p);
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

// N^k if it fits in 64 bits.
std::optional<std::uint64_t> checked_power(int base, int k) {
  std::uint64_t value = 1;
  for (int i = 0; i < k; ++i) {
    if (value > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::nullopt;
    }
    value *= static_cast<std::uint64_t>(base);
  }
  return value;
}

// k with base^k == value, if any.
std::optional<int> exact_log(std::uint64_t value, int base) {
  int k = 0;
  while (value > 1) {
    if (value % base != 0) return std::nullopt;
    value /= base;
    ++k;
  }
  if (value != 1) return std::nullopt;
  return k;
}

}  // namespace

AmplitudeResult amplitude_zn(const ColoredGraph& graph, int N, Method method) {
  if (N < 2) throw GemError(ErrorKind::kInvalidArgument, "N must be >= 2");
  if (!is_connected(graph)) {
    throw GemError(ErrorKind::kDisconnected, "graph is not connected");
  }
  const FaceSystem system = face_system(graph);
  const int order = graph.num_vertices() / 2;

  AmplitudeResult result;
  result.E = system.num_edges;
  result.F = static_cast<int>(system.rows.size());
  result.N = N;
  result.prefactor_exponent = -order;
  result.coupling_exponent = order;

  if (method == Method::kRank) {
    const int rank = rank_mod_prime(system, N);
    result.rank = rank;
    result.solutions = checked_power(N, result.E - rank);
  } else {
    const std::uint64_t count = count_solutions(system, N);
    result.solutions = count;
    if (const auto k = exact_log(count, N)) result.rank = result.E - *k;
  }
  if (result.rank) {
    const int rank = *result.rank;
    result.solution_exponent = result.E - rank;
    result.face_sum_exponent = result.F - rank;
    result.total_exponent = result.F - rank - order;
  }
  return result;
}

}  // namespace gemkit
