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

// gemtool: line-delimited JSON front end for the gemkit library.
//
// Every verb except generate reads graphs (one JSON document per line) from
// --input or stdin and writes one JSON line per input graph to --output or
// stdout. export-dot writes DOT text instead.
//
// Exit status: 0 success, 1 invalid input or failed operation (an
// {"error": ..., "message": ...} line is written in place of the result),
// 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "gemkit/amplitude.hpp"
#include "gemkit/batch.hpp"
#include "gemkit/crystallizer.hpp"
#include "gemkit/dipoles.hpp"
#include "gemkit/gem_checker.hpp"
#include "gemkit/generator.hpp"
#include "gemkit/io.hpp"
#include "gemkit/residues.hpp"

namespace {

using gemkit::ColoredGraph;
using gemkit::GemError;
using gemkit::Json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string input;
  std::string output;
  int p = 0;
  int n = 3;
  bool connected = false;
  bool dedupe = false;
  std::optional<std::uint64_t> seed;
  int samples = 1;
  std::string colors;
  int k = 1;
  int dipole = 0;
  bool allow_improper = false;
  int modulus = 2;
  std::string method = "brute";
  std::string strategy = "lex";
};

// A parsed input line: the graph, or the error object to print instead.
using Item = std::variant<ColoredGraph, Json>;

Json error_json(const std::exception& e) {
  if (const auto* g = dynamic_cast<const GemError*>(&e)) {
    return gemkit::error_to_json(gemkit::error_kind_name(g->kind()), g->what());
  }
  return gemkit::error_to_json("InternalError", e.what());
}

Item parse_item(const std::string& text) {
  try {
    return gemkit::parse_graph(text);
  } catch (const std::exception& e) {
    return error_json(e);
  }
}

std::vector<Item> read_items(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  std::string all;
  while (std::getline(in, line)) {
    all += line;
    all += '\n';
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      lines.push_back(line);
    }
  }
  std::vector<Item> items;
  if (lines.empty()) return items;
  // A pretty-printed single document spans several lines.
  if (lines.size() > 1 && !Json::accept(lines.front()) && Json::accept(all)) {
    items.push_back(parse_item(all));
    return items;
  }
  for (const std::string& l : lines) items.push_back(parse_item(l));
  return items;
}

std::vector<gemkit::Color> parse_colors(const std::string& text) {
  std::vector<gemkit::Color> colors;
  if (text.empty()) return colors;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      colors.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--colors", "not an integer: " + token);
    }
  }
  return colors;
}

// Applies `fn` to every input graph; errors become error lines.
template <typename Fn>
int for_each_graph(std::istream& in, std::ostream& out, Fn fn) {
  int status = kExitOk;
  for (Item& item : read_items(in)) {
    if (auto* err = std::get_if<Json>(&item)) {
      out << err->dump() << '\n';
      status = kExitInvalid;
      continue;
    }
    try {
      out << fn(std::get<ColoredGraph>(item)) << '\n';
    } catch (const std::exception& e) {
      out << error_json(e).dump() << '\n';
      status = kExitInvalid;
    }
  }
  return status;
}

int run_generate(const Options& o, std::ostream& out) {
  if (o.seed) {
    for (int i = 0; i < o.samples; ++i) {
      const ColoredGraph g = gemkit::sample_vacuum_graph(
          o.p, o.n, *o.seed + static_cast<std::uint64_t>(i));
      if (o.connected && !gemkit::is_connected(g)) continue;
      out << gemkit::serialize_graph(g) << '\n';
    }
    return kExitOk;
  }
  const gemkit::EnumerationOptions options{o.connected, o.dedupe, 0};
  for (const auto& g : gemkit::collect_vacuum_graphs(o.p, o.n, options)) {
    out << gemkit::serialize_graph(g.graph) << '\n';
  }
  return kExitOk;
}

int run_classify(std::istream& in, std::ostream& out) {
  std::vector<Item> items = read_items(in);
  std::vector<ColoredGraph> graphs;
  for (const Item& item : items) {
    if (const auto* g = std::get_if<ColoredGraph>(&item)) graphs.push_back(*g);
  }
  const auto reports = gemkit::classify_batch(graphs);
  int status = kExitOk;
  std::size_t next = 0;
  for (const Item& item : items) {
    if (const auto* err = std::get_if<Json>(&item)) {
      out << err->dump() << '\n';
      status = kExitInvalid;
    } else {
      out << gemkit::report_to_json(reports[next++]).dump() << '\n';
    }
  }
  return status;
}

int dispatch(const std::string& verb, const Options& o, std::istream& in,
             std::ostream& out) {
  if (verb == "generate") return run_generate(o, out);
  if (verb == "classify") return run_classify(in, out);
  if (verb == "validate") {
    return for_each_graph(in, out, [](const ColoredGraph& g) {
      return Json{{"valid", true},
                  {"dimension", g.dimension()},
                  {"v", g.num_vertices()},
                  {"e", g.num_edges()},
                  {"labeled", g.is_labeled()},
                  {"connected", gemkit::is_connected(g)}}
          .dump();
    });
  }
  if (verb == "export") {
    return for_each_graph(in, out, [](const ColoredGraph& g) {
      return gemkit::serialize_graph(g);
    });
  }
  if (verb == "export-dot") {
    return for_each_graph(in, out, [](const ColoredGraph& g) {
      std::string dot = gemkit::to_dot(g);
      dot.pop_back();
      return dot;
    });
  }
  if (verb == "residues") {
    const auto colors = parse_colors(o.colors);
    return for_each_graph(in, out, [&](const ColoredGraph& g) {
      const auto residues = gemkit::residues_for(g, colors);
      return gemkit::residues_to_json(colors, residues).dump();
    });
  }
  if (verb == "dipoles") {
    return for_each_graph(in, out, [&](const ColoredGraph& g) {
      Json list = Json::array();
      int index = 0;
      for (const auto& d : gemkit::find_dipoles(g, o.k)) {
        Json item = gemkit::dipole_to_json(d);
        item["index"] = index++;
        list.push_back(std::move(item));
      }
      return Json{{"k", o.k}, {"dipoles", std::move(list)}}.dump();
    });
  }
  if (verb == "contract") {
    return for_each_graph(in, out, [&](const ColoredGraph& g) {
      const auto dipoles = gemkit::find_dipoles(g, o.k);
      if (o.dipole < 0 || o.dipole >= static_cast<int>(dipoles.size())) {
        throw GemError(gemkit::ErrorKind::kDipoleNotFound,
                       "no " + std::to_string(o.k) + "-dipole with index " +
                           std::to_string(o.dipole));
      }
      const auto moved =
          gemkit::contract(g, dipoles[o.dipole], {o.allow_improper});
      return Json{{"graph", gemkit::graph_to_json(moved.graph)},
                  {"move", gemkit::move_to_json(moved.record)}}
          .dump();
    });
  }
  if (verb == "crystallize") {
    gemkit::CrystallizeOptions options;
    options.strategy = o.strategy == "random" ? gemkit::Strategy::kRandom
                                              : gemkit::Strategy::kLex;
    options.seed = o.seed.value_or(0);
    return for_each_graph(in, out, [&](const ColoredGraph& g) {
      return gemkit::crystallization_to_json(gemkit::crystallize(g, options))
          .dump();
    });
  }
  if (verb == "amplitude") {
    // Rank needs a prime field; composite N is counted directly.
    const auto method = o.method == "rank" && gemkit::is_prime(o.modulus)
                            ? gemkit::Method::kRank
                            : gemkit::Method::kBruteForce;
    return for_each_graph(in, out, [&](const ColoredGraph& g) {
      return gemkit::amplitude_to_json(gemkit::amplitude_zn(g, o.modulus, method))
          .dump();
    });
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored graph / gem toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&o](CLI::App* sub) {
    sub->add_option("--input", o.input, "Input file (default: stdin)");
    sub->add_option("--output", o.output, "Output file (default: stdout)");
  };

  auto* generate = app.add_subcommand("generate", "Vacuum graphs at order 2p");
  generate->add_option("--p", o.p, "Red (= black) vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  generate->add_option("--n", o.n, "Dimension")->check(CLI::Range(1, 31));
  generate->add_flag("--connected", o.connected, "Connected graphs only");
  generate->add_flag("--dedupe", o.dedupe, "One graph per isomorphism class");
  generate->add_option("--seed", o.seed, "Sample instead of enumerating");
  generate->add_option("--samples", o.samples, "Number of seeded samples")
      ->check(CLI::NonNegativeNumber);
  add_io(generate);

  add_io(app.add_subcommand("validate", "Check graph validity"));
  add_io(app.add_subcommand("classify", "Gem / orientability report"));
  add_io(app.add_subcommand("export", "Canonical graph JSON"));
  add_io(app.add_subcommand("export-dot", "Graphviz DOT"));

  auto* residues = app.add_subcommand("residues", "Residues of a color set");
  residues->add_option("--colors", o.colors, "Comma-separated colors")
      ->required();
  add_io(residues);

  auto* dipoles = app.add_subcommand("dipoles", "List k-dipoles");
  dipoles->add_option("--k", o.k, "Dipole multiplicity");
  add_io(dipoles);

  auto* contract = app.add_subcommand("contract", "Contract one dipole");
  contract->add_option("--dipole", o.dipole, "Index from `dipoles`")
      ->required();
  contract->add_option("--k", o.k, "Dipole multiplicity");
  contract->add_flag("--allow-improper", o.allow_improper,
                     "Permit improper dipoles");
  add_io(contract);

  auto* crystallize =
      app.add_subcommand("crystallize", "Contract proper 1-dipoles");
  crystallize->add_option("--strategy", o.strategy, "Tie-break policy")
      ->check(CLI::IsMember({"lex", "random"}));
  crystallize->add_option("--seed", o.seed, "Seed for --strategy random");
  add_io(crystallize);

  auto* amplitude = app.add_subcommand("amplitude", "Exact Z_N amplitude");
  amplitude->add_option("--N", o.modulus, "Group order")
      ->check(CLI::Range(2, 1 << 20));
  amplitude->add_option("--method", o.method, "brute or rank")
      ->check(CLI::IsMember({"brute", "rank"}));
  add_io(amplitude);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  std::ifstream in_file;
  std::ofstream out_file;
  if (!o.input.empty()) {
    in_file.open(o.input);
    if (!in_file) {
      std::cerr << "cannot open " << o.input << '\n';
      return kExitUsage;
    }
  }
  if (!o.output.empty()) {
    out_file.open(o.output);
    if (!out_file) {
      std::cerr << "cannot open " << o.output << '\n';
      return kExitUsage;
    }
  }
  std::istream& in = o.input.empty() ? std::cin : in_file;
  std::ostream& out = o.output.empty() ? std::cout : out_file;
  try {
    return dispatch(verb, o, in, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    out << error_json(e).dump() << '\n';
    return kExitInvalid;
  }
}
