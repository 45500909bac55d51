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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gemkit/amplitude.hpp"
#include "gemkit/batch.hpp"
#include "gemkit/crystallizer.hpp"
#include "gemkit/dipoles.hpp"
#include "gemkit/gem_checker.hpp"
#include "gemkit/generator.hpp"
#include "gemkit/io.hpp"
#include "support.hpp"

#ifndef GEMTOOL_PATH
#error "GEMTOOL_PATH must point at the gemtool binary"
#endif

using namespace gemkit;
using namespace gemkit::testing;

namespace {

constexpr double kOrientabilityBudgetSeconds = 60.0;
constexpr double kAmplitudeBudgetSeconds = 300.0;
constexpr int kOrientabilitySamples = 10'000;
constexpr int kOrientabilitySampleOrder = 5;
constexpr int kEquivalenceSamples = 1'000;
constexpr int kDipoleGraphs = 200;
constexpr int kMaxAmplitudeEdges = 12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few failure messages of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) messages_ << "\n    " << what;
  }
  void note(const std::string& text) { notes_ << " " << text; }
  bool ok() const { return failures_ == 0; }
  long checks() const { return checks_; }
  long failures() const { return failures_; }
  std::string messages() const { return messages_.str(); }
  std::string notes() const { return notes_.str(); }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::ostringstream messages_;
  std::ostringstream notes_;
};

std::vector<ColoredGraph> connected_graphs(int p, int dimension) {
  std::vector<ColoredGraph> out;
  for (auto& g : collect_vacuum_graphs(p, dimension, {true, false})) {
    out.push_back(std::move(g.graph));
  }
  return out;
}

std::string describe(const ResidueCounts& c) {
  return "(" + std::to_string(c.v) + "," + std::to_string(c.e) + "," +
         std::to_string(c.b) + "," + std::to_string(c.t) + ")";
}

// ---------------------------------------------------------------------------

void orientability(Check& check) {
  const auto start = Clock::now();
  long total = 0;
  long connected = 0;
  for (int p = 1; p <= 3; ++p) {
    for (const auto& g : collect_vacuum_graphs(p, 3)) {
      ++total;
      if (!is_connected(g.graph)) continue;
      ++connected;
      check.expect(is_orientable(g.graph),
                   "p=" + std::to_string(p) + " index " +
                       std::to_string(g.index) + " is not bipartite");
    }
  }
  check.expect(total == 1 + 16 + 1296, "exhaustive pairing count mismatch");
  std::vector<ColoredGraph> samples;
  samples.reserve(kOrientabilitySamples);
  for (int s = 0; s < kOrientabilitySamples; ++s) {
    samples.push_back(sample_vacuum_graph(kOrientabilitySampleOrder, 3, s));
  }
  const auto reports = classify_batch(samples);
  long sampled_connected = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const bool bipartite = is_bipartite(samples[i]).has_value();
    check.expect(bipartite, "p=5 seed " + std::to_string(i) + " not bipartite");
    if (reports[i].connected) {
      ++sampled_connected;
      check.expect(reports[i].orientable == true,
                   "p=5 seed " + std::to_string(i) + " reported non-orientable");
    }
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < kOrientabilityBudgetSeconds,
               "runtime " + std::to_string(elapsed) + " s over budget");
  check.note(std::to_string(connected) + "/" + std::to_string(total) +
             " exhaustive connected, " + std::to_string(sampled_connected) +
             "/" + std::to_string(kOrientabilitySamples) +
             " sampled connected, " + std::to_string(elapsed).substr(0, 5) +
             " s");
}

void gem_criteria_agree(Check& check) {
  long compared = 0;
  auto compare = [&](const ColoredGraph& g, const std::string& name) {
    ++compared;
    check.expect(is_gem(g) == all_residues_triballs(g),
                 name + ": gem criteria disagree");
  };
  for (int p = 1; p <= 2; ++p) {
    for (const auto& g : connected_graphs(p, 3)) compare(g, "p<=2 graph");
  }
  long sampled = 0;
  for (int s = 0; s < kEquivalenceSamples; ++s) {
    const ColoredGraph g = sample_vacuum_graph(3, 3, s);
    if (!is_connected(g)) continue;
    ++sampled;
    compare(g, "p=3 seed " + std::to_string(s));
  }
  check.note(std::to_string(compared) + " graphs compared (" +
             std::to_string(sampled) + " of " +
             std::to_string(kEquivalenceSamples) +
             " p=3 samples connected)");
}

void melon_fixture(Check& check) {
  const ColoredGraph g = melon();
  const ResidueCounts c = residue_counts(g);
  check.expect(c == ResidueCounts{2, 4, 6, 4}, "counts " + describe(c));
  check.expect(c.v + c.t == c.b, "v + t != b");
  check.expect(is_orientable(g), "melon not orientable");
  check.expect(crystallize(g).moves.empty(), "crystallize moved the melon");
  const FaceSystem sys = face_system(g);
  check.expect(sys.num_edges == 4, "melon has 16 assignments over Z_2");
  const AmplitudeResult a = amplitude_zn(g, 2, Method::kBruteForce);
  check.expect(a.solutions == 2u, "solutions over Z_2");
  check.expect(a.face_sum_exponent == 3, "face-sum exponent");
  check.expect(a.total_exponent == 2, "total exponent");
  check.note("counts " + describe(c) + ", 2 of 16 assignments solve");
}

void dipole_calculus(Check& check) {
  int graphs = 0;
  long contractions = 0;
  std::uint64_t seed = 0;
  for (; graphs < kDipoleGraphs; ++seed) {
    const ColoredGraph g = sample_vacuum_graph(2 + seed % 6, 3, seed);
    std::vector<Dipole> proper;
    for (const Dipole& d : find_dipoles(g, 1)) {
      if (d.proper) proper.push_back(d);
    }
    if (proper.empty()) continue;
    ++graphs;
    const ResidueCounts before = residue_counts(g);
    const int excess_before = before.v + before.t - before.b;
    const Certificate cert = canonical_certificate(g);
    for (const Dipole& d : proper) {
      ++contractions;
      const std::string where = "seed " + std::to_string(seed) + " dipole " +
                                std::to_string(d.u) + "-" +
                                std::to_string(d.v);
      const MoveResult r = contract(g, d);
      const ResidueCounts after = residue_counts(r.graph);
      check.expect(after.v - before.v == -2 && after.e - before.e == -4 &&
                       after.t - before.t == -1 && after.b - before.b == -3,
                   where + ": deltas " + describe(before) + " -> " +
                       describe(after));
      bool valid = true;
      try {
        valid = same_graph(parse_graph(serialize_graph(r.graph)), r.graph);
      } catch (const GemError&) {
        valid = false;
      }
      check.expect(valid, where + ": result fails validation");
      check.expect(is_bipartite(r.graph).has_value(),
                   where + ": lost bipartiteness");
      const int excess_after = after.v + after.t - after.b;
      check.expect((excess_before > 0) == (excess_after > 0) &&
                       (excess_before == 0) == (excess_after == 0),
                   where + ": sign of v + t - b changed");
      const MoveResult back = create(r.graph, r.record.welded, d.colors);
      check.expect(canonical_certificate(back.graph) == cert,
                   where + ": create does not undo contract");
    }
  }
  check.note(std::to_string(graphs) + " graphs, " +
             std::to_string(contractions) + " contractions");
}

void crystallizer(Check& check) {
  long gems = 0;
  long total_moves = 0;
  for (int p = 1; p <= 3; ++p) {
    for (const ColoredGraph& g : connected_graphs(p, 3)) {
      if (!is_gem(g)) continue;
      ++gems;
      const auto r = crystallize(g);
      total_moves += static_cast<long>(r.moves.size());
      check.expect(static_cast<int>(r.moves.size()) <= g.num_vertices() / 2,
                   "too many moves");
      bool dipole_left = false;
      for (const Dipole& d : find_dipoles(r.contracted, 1)) {
        dipole_left = dipole_left || d.proper;
      }
      check.expect(!dipole_left, "proper 1-dipole remains");
      for (ColorSet triple : color_subsets(4, 3)) {
        check.expect(count_residues(r.contracted, triple) == 1,
                     "color triple with several residues");
      }
    }
  }
  check.note(std::to_string(gems) + " gems, " + std::to_string(total_moves) +
             " moves");
}

void amplitude_cross_validation(Check& check) {
  const auto start = Clock::now();
  std::mt19937_64 rng(2026);
  long graphs = 0;
  for (int p = 1; p <= 3; ++p) {
    for (const ColoredGraph& g : connected_graphs(p, 3)) {
      if (g.num_edges() > kMaxAmplitudeEdges) continue;
      ++graphs;
      const int b = residue_counts(g).b;
      const FaceSystem sys = face_system(g);
      FaceSystem flipped = sys;
      for (auto& row : flipped.rows) {
        if (rng() % 2 == 0) continue;
        for (FaceStep& s : row) s.sign = -s.sign;
      }
      for (int N : {2, 3}) {
        const AmplitudeResult brute = amplitude_zn(g, N, Method::kBruteForce);
        const AmplitudeResult rank = amplitude_zn(g, N, Method::kRank);
        check.expect(brute == rank, "brute force and rank differ at N=" +
                                        std::to_string(N));
        check.expect(brute.F == b, "F != b");
        check.expect(brute.solutions && count_solutions(flipped, N) == *brute.solutions,
                     "face flip changed the solution count");
      }
    }
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < kAmplitudeBudgetSeconds,
               "runtime " + std::to_string(elapsed) + " s over budget");
  check.note(std::to_string(graphs) + " graphs at N in {2,3}, " +
             std::to_string(elapsed).substr(0, 5) + " s");
}

void negative_control(Check& check) {
  const ColoredGraph k = k4();
  check.expect(!is_bipartite(k).has_value(), "K4 reported bipartite");
  check.expect(!is_orientable(k), "K4 reported orientable");
  check.expect(classify(k).orientable == false, "classify K4 orientable");
  long tested = 0;
  auto no_match = [&](const ColoredGraph& g) {
    ++tested;
    check.expect(is_bipartite(g).has_value(),
                 "generator produced a non-bipartite graph");
  };
  for (int p = 1; p <= 3; ++p) {
    for (const auto& g : collect_vacuum_graphs(p, 3)) no_match(g.graph);
  }
  for (int p = 1; p <= 4; ++p) {
    for (const auto& g : collect_vacuum_graphs(p, 2)) no_match(g.graph);
  }
  for (int s = 0; s < 1000; ++s) no_match(sample_vacuum_graph(8, 3, s));
  check.note(std::to_string(tested) + " generator outputs, none non-bipartite");
}

void pseudo_manifold(Check& check) {
  std::optional<GeneratedGraph> first;
  for (int p = 1; p <= 3 && !first; ++p) {
    auto stream = enumerate_vacuum_graphs(p, 3, {true, false});
    while (auto g = stream.next()) {
      const ResidueCounts c = residue_counts(g->graph);
      if (c.v + c.t != c.b) {
        first = std::move(g);
        break;
      }
    }
  }
  check.expect(first.has_value(), "no pseudo-manifold at p <= 3");
  if (!first) return;
  check.expect(first->pairing == first_gepm_pairing(),
               "first pseudo-manifold differs from the frozen fixture");
  check.expect(first->index == kFirstGepmIndex, "enumeration index moved");
  const GemReport r = classify(first->graph);
  check.expect(r.is_gem == false, "classify reports a gem");
  check.expect(r.orientable == true, "classify reports non-orientable");
  check.note("p=" + std::to_string(first->pairing.p) + " index " +
             std::to_string(first->index) + ", counts " +
             describe(*r.counts) + ", " +
             std::to_string(r.failing_residues.size()) + " torus residues");
}

// CLI ----------------------------------------------------------------------

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run_shell(const std::string& command) {
  Run run;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return run;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) run.out.append(buffer, n);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

void cli_contract(Check& check) {
  const std::string tool = GEMTOOL_PATH;
  const std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  const std::string graphs = dir + "/gemkit_acceptance_p3.jsonl";

  const Run gen = run_shell(tool + " generate --p 3 > " + graphs);
  check.expect(gen.exit_code == 0, "generate failed");
  std::ifstream in(graphs);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string original = buffer.str();
  check.expect(lines_of(original).size() == 1296, "generate --p 3 line count");

  const Run exported = run_shell(tool + " export --input " + graphs);
  check.expect(exported.exit_code == 0, "export failed");
  check.expect(exported.out == original, "CLI round trip is not the identity");
  for (const std::string& line : lines_of(original)) {
    check.expect(serialize_graph(parse_graph(line)) == line,
                 "library round trip is not the identity");
  }

  const Run piped =
      run_shell(tool + " generate --p 2 --connected | " + tool + " classify");
  const auto reports = lines_of(piped.out);
  check.expect(piped.exit_code == 0, "pipeline exit code");
  check.expect(reports.size() == 14, "expected 14 reports, got " +
                                         std::to_string(reports.size()));
  for (const std::string& r : reports) {
    const Json doc = Json::parse(r, nullptr, false);
    check.expect(!doc.is_discarded() && doc.contains("is_gem") &&
                     doc["is_gem"] == true,
                 "report line is not a gem report");
  }

  const Run bad = run_shell("echo '{not json' | " + tool + " classify 2>/dev/null");
  check.expect(bad.exit_code == 1, "malformed JSON exit code " +
                                       std::to_string(bad.exit_code));
  const Json error = Json::parse(bad.out, nullptr, false);
  check.expect(!error.is_discarded() && error.contains("error"),
               "malformed JSON gives no error object");

  const Run invalid = run_shell(
      "echo '{\"dimension\":1,\"vertices\":[{\"id\":0},{\"id\":1}],"
      "\"edges\":[{\"color\":0,\"u\":0,\"v\":0},{\"color\":1,\"u\":0,\"v\":1}]}'"
      " | " + tool + " validate 2>/dev/null");
  check.expect(invalid.exit_code == 1, "invalid graph exit code");

  const Run usage = run_shell(tool + " frobnicate 2>&1");
  check.expect(usage.exit_code == 2, "unknown verb exit code " +
                                         std::to_string(usage.exit_code));
  const Run missing = run_shell(tool + " generate 2>/dev/null");
  check.expect(missing.exit_code == 2, "missing --p exit code");
  const Run ok = run_shell(tool + " generate --p 1 | " + tool + " validate");
  check.expect(ok.exit_code == 0, "valid graph exit code");

  std::remove(graphs.c_str());
  check.note("1296-line round trip, " + std::to_string(reports.size()) +
             " reports, exit codes 0/1/2");
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "vacuum graphs are bipartite", orientability},
      {"AC2", "gem count criterion equals all-triball criterion",
       gem_criteria_agree},
      {"AC3", "melon fixture", melon_fixture},
      {"AC4", "dipole calculus", dipole_calculus},
      {"AC5", "crystallizer on every gem at p <= 3", crystallizer},
      {"AC6", "amplitude brute force vs rank", amplitude_cross_validation},
      {"AC7", "K4 negative control", negative_control},
      {"AC8", "first pseudo-manifold", pseudo_manifold},
      {"AC9", "CLI contract", cli_contract},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Check check;
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    failed += !check.ok();
    std::cout << (check.ok() ? "[PASS] " : "[FAIL] ") << c.id << " "
              << c.title << ":" << check.notes() << " (" << check.checks()
              << " checks";
    if (!check.ok()) std::cout << ", " << check.failures() << " failed";
    std::cout << ")" << check.messages() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
