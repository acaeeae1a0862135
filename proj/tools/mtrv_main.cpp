// Copyright 2026 The mtrv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mtrv: offline multi-trace verification workbench.
//
// Exit codes: 0 Pass/success, 1 Fail, 2 usage or input error,
// 3 resource limit, 4 SAT oracle disagreement.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mtrv/errors.hpp"
#include "mtrv/interaction.hpp"
#include "mtrv/multitrace.hpp"
#include "mtrv/random.hpp"
#include "mtrv/sat.hpp"
#include "mtrv/search.hpp"
#include "mtrv/semantics.hpp"
#include "mtrv/workbench.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;
constexpr int kExitOracle = 4;

class InputError : public mtrv::Error {
 public:
  using mtrv::Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Prefixes parse errors with the offending file name.
template <typename F>
auto parse_file(const std::string& path, F parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const mtrv::ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

mtrv::InteractionModel load_model(const std::string& path) {
  return parse_file(path, [](const std::string& t) {
    return mtrv::parse_interaction(t);
  });
}

mtrv::MultiTrace load_multitrace(const std::string& path) {
  return parse_file(path, [](const std::string& t) {
    return mtrv::parse_multitrace(t);
  });
}

struct AnalyzeArgs {
  std::string interaction;
  std::string multitrace;
  std::string strategy = "dfs";
  bool no_memo = false;
  bool single_removal = false;
  std::optional<std::size_t> node_limit;
  std::string log;
};

int run_analyze(const AnalyzeArgs& a) {
  auto model = load_model(a.interaction);
  auto mu = load_multitrace(a.multitrace);
  mtrv::SearchConfig cfg;
  cfg.strategy = a.strategy == "bfs" ? mtrv::Strategy::BreadthFirst
                                     : mtrv::Strategy::DepthFirst;
  cfg.memoize = !a.no_memo;
  cfg.simultaneous_removal = !a.single_removal;
  cfg.node_limit = a.node_limit;
  auto report = mtrv::analyze(model, mu, cfg);
  if (!a.log.empty()) {
    std::ofstream out(a.log);
    if (!out) throw InputError("cannot write '" + a.log + "'");
    mtrv::write_exploration_log(out, report);
  }
  std::cout << mtrv::to_string(report.verdict) << '\n';
  std::cerr << "nodes_explored=" << report.nodes_explored
            << " max_depth=" << report.max_depth << '\n';
  return report.verdict == mtrv::Verdict::Pass ? kExitPass : kExitFail;
}

struct SemanticsArgs {
  std::string interaction;
  std::size_t loop_bound = 0;
  std::optional<std::size_t> max_len;
  bool operational = false;
};

int run_semantics(const SemanticsArgs& a) {
  auto model = load_model(a.interaction);
  mtrv::MultiTraceSet set(model.signature);
  if (a.operational) {
    if (!a.max_len) throw InputError("--operational requires --max-len");
    set = mtrv::enumerate_operational(model, *a.max_len);
  } else {
    set = mtrv::enumerate_denotational(model, a.loop_bound,
                                       a.max_len.value_or(mtrv::kUnbounded));
  }
  bool first = true;
  for (const auto& mu : set) {
    if (!first) std::cout << '\n';
    first = false;
    std::cout << mtrv::to_string(mu);
  }
  return kExitPass;
}

struct GenerateArgs {
  std::string interaction;
  std::size_t loop_bound = 1;
  bool random = false;
  std::size_t node_limit = 1000;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  auto model = load_model(a.interaction);
  mtrv::GenerationCriteria c;
  c.loop_bound = a.loop_bound;
  c.mode = a.random ? mtrv::GenerationMode::RandomPartial
                    : mtrv::GenerationMode::Exhaustive;
  c.node_limit = a.node_limit;
  c.seed = a.seed;
  auto traces = mtrv::generate_accepted(model, c);
  std::filesystem::create_directories(a.out);
  char name[32];
  for (std::size_t k = 0; k < traces.size(); ++k) {
    std::snprintf(name, sizeof name, "acpt_%04zu.mt", k);
    auto path = std::filesystem::path(a.out) / name;
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path.string() + "'");
    f << mtrv::to_string(traces[k]);
  }
  std::cout << traces.size() << '\n';
  return kExitPass;
}

struct MutateArgs {
  std::string multitrace;
  std::string kind;
  std::string aux;
  std::string alphabet_from;
  std::uint64_t seed = 0;
};

int run_mutate(const MutateArgs& a) {
  auto mu = load_multitrace(a.multitrace);
  mtrv::MutationKind kind = a.kind == "sact"   ? mtrv::MutationKind::Sact
                            : a.kind == "scmp" ? mtrv::MutationKind::Scmp
                                               : mtrv::MutationKind::Nois;
  mtrv::MutationAux aux;
  if (kind == mtrv::MutationKind::Scmp) {
    if (a.aux.empty()) throw InputError("scmp requires --aux");
    aux.other = load_multitrace(a.aux);
  }
  if (kind == mtrv::MutationKind::Nois) {
    if (a.alphabet_from.empty()) {
      throw InputError("nois requires --alphabet-from");
    }
    auto acts = mtrv::actions_of(load_model(a.alphabet_from).root);
    aux.alphabet.assign(acts.begin(), acts.end());
  }
  mtrv::SplitMix64 rng(a.seed);
  std::cout << mtrv::to_string(mtrv::mutate(mu, kind, rng, aux));
  return kExitPass;
}

struct SatArgs {
  std::string cnf;
  bool strict3 = false;
  bool oracle = false;
};

int run_sat(const SatArgs& a) {
  auto phi = parse_file(a.cnf, [](const std::string& t) {
    return mtrv::sat::parse_dimacs(t);
  });
  if (a.strict3) mtrv::sat::require_3cnf(phi);
  bool sat = mtrv::sat::sat_solve_via_rv(phi);
  std::cout << (sat ? "SAT" : "UNSAT") << '\n';
  if (a.oracle) {
    bool expected = mtrv::sat::brute_force_sat(phi);
    if (expected != sat) {
      std::cerr << "oracle disagrees: brute force says "
                << (expected ? "SAT" : "UNSAT") << '\n';
      return kExitOracle;
    }
  }
  return sat ? kExitPass : kExitFail;
}

struct BenchArgs {
  std::string interaction;
  std::size_t loop_bound = 1;
  std::size_t prefixes = 5;
  std::size_t mutants = 1;
  bool random = false;
  std::size_t node_limit = 1000;
  std::uint64_t seed = 0;
  std::string csv;
};

int run_bench(const BenchArgs& a) {
  auto model = load_model(a.interaction);
  mtrv::BenchOptions o;
  o.criteria.loop_bound = a.loop_bound;
  o.criteria.mode = a.random ? mtrv::GenerationMode::RandomPartial
                             : mtrv::GenerationMode::Exhaustive;
  o.criteria.node_limit = a.node_limit;
  o.prefixes_per_trace = a.prefixes;
  o.mutants_per_prefix = a.mutants;
  o.seed = a.seed;
  auto rows = mtrv::run_bench(model, o);
  if (a.csv == "-") {
    mtrv::write_bench_csv(std::cout, rows);
  } else {
    std::ofstream out(a.csv);
    if (!out) throw InputError("cannot write '" + a.csv + "'");
    mtrv::write_bench_csv(out, rows);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Offline verification of multi-traces against interactions"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Verdict for one multi-trace");
  an->add_option("--interaction", analyze.interaction, "Interaction file")
      ->required();
  an->add_option("--multitrace", analyze.multitrace, "Multi-trace file")
      ->required();
  an->add_option("--strategy", analyze.strategy, "Exploration order")
      ->check(CLI::IsMember({"dfs", "bfs"}));
  an->add_flag("--no-memo", analyze.no_memo, "Do not skip revisited nodes");
  an->add_flag("--single-removal", analyze.single_removal,
               "Remove one lifeline per edge");
  an->add_option("--node-limit", analyze.node_limit,
                 "Give up after N explored nodes")
      ->check(CLI::PositiveNumber);
  an->add_option("--log", analyze.log, "Write the exploration graph");

  SemanticsArgs semantics;
  auto* se = app.add_subcommand("semantics", "Enumerate accepted multi-traces");
  se->add_option("--interaction", semantics.interaction, "Interaction file")
      ->required();
  se->add_option("--loop-bound", semantics.loop_bound,
                 "Powers kept per closure")
      ->required();
  se->add_option("--max-len", semantics.max_len, "Drop longer multi-traces");
  se->add_flag("--operational", semantics.operational,
               "Derive from the execution relation");

  GenerateArgs generate;
  auto* ge = app.add_subcommand("generate", "Write accepted multi-traces");
  ge->add_option("--interaction", generate.interaction, "Interaction file")
      ->required();
  ge->add_option("--loop-bound", generate.loop_bound,
                 "Unfoldings allowed per loop")
      ->required();
  auto* ge_random =
      ge->add_flag("--random", generate.random, "Random partial exploration");
  ge->add_option("--node-limit", generate.node_limit,
                 "Vertices visited in random mode")
      ->needs(ge_random)
      ->check(CLI::PositiveNumber);
  ge->add_option("--seed", generate.seed, "Random seed")->required();
  ge->add_option("--out", generate.out, "Output directory")->required();

  MutateArgs mutate;
  auto* mu = app.add_subcommand("mutate", "Print a mutant multi-trace");
  mu->add_option("--multitrace", mutate.multitrace, "Multi-trace file")
      ->required();
  mu->add_option("--kind", mutate.kind, "Mutation")
      ->required()
      ->check(CLI::IsMember({"sact", "scmp", "nois"}));
  auto* aux = mu->add_option("--aux", mutate.aux, "Second multi-trace (scmp)");
  mu->add_option("--alphabet-from", mutate.alphabet_from,
                 "Interaction whose actions feed nois")
      ->excludes(aux);
  mu->add_option("--seed", mutate.seed, "Random seed")->required();

  SatArgs sat;
  auto* sa = app.add_subcommand("sat", "Decide CNF satisfiability");
  sa->add_option("--cnf", sat.cnf, "DIMACS file")->required();
  sa->add_flag("--strict3", sat.strict3,
               "Require three distinct literals per clause");
  sa->add_flag("--oracle", sat.oracle, "Cross-check by brute force");

  BenchArgs bench;
  auto* be = app.add_subcommand("bench", "ACPT/PREF/mutant benchmark to CSV");
  be->add_option("--interaction", bench.interaction, "Interaction file")
      ->required();
  be->add_option("--loop-bound", bench.loop_bound,
                 "Unfoldings allowed per loop")
      ->required();
  be->add_option("--prefixes", bench.prefixes, "Prefixes per accepted trace")
      ->required();
  be->add_option("--mutants", bench.mutants, "Mutants of each kind per prefix");
  auto* be_random =
      be->add_flag("--random", bench.random, "Random partial generation");
  be->add_option("--node-limit", bench.node_limit,
                 "Vertices visited in random mode")
      ->needs(be_random)
      ->check(CLI::PositiveNumber);
  be->add_option("--seed", bench.seed, "Random seed")->required();
  be->add_option("--csv", bench.csv, "Output file, - for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*an) return run_analyze(analyze);
    if (*se) return run_semantics(semantics);
    if (*ge) return run_generate(generate);
    if (*mu) return run_mutate(mutate);
    if (*sa) return run_sat(sat);
    if (*be) return run_bench(bench);
  } catch (const mtrv::ResourceLimitError& e) {
    std::cerr << "mtrv: " << e.what() << '\n';
    return kExitLimit;
  } catch (const mtrv::Error& e) {
    std::cerr << "mtrv: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "mtrv: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
