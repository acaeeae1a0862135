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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any selected criterion fails.
//
//   mtrv_acceptance [--only N]...

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <unordered_set>
#include <variant>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "mtrv/interaction.hpp"
#include "mtrv/multitrace.hpp"
#include "mtrv/sat.hpp"
#include "mtrv/search.hpp"
#include "mtrv/semantics.hpp"
#include "mtrv/workbench.hpp"
#include "oracles.hpp"

namespace {

using namespace mtrv;
using mtrv::testing::all_multitraces;
using mtrv::testing::alphabet;
using mtrv::testing::bounded_prefix_closure;

// Pinned parameters.
constexpr std::uint64_t kCorpusSeed = 0x6d747276ull;
constexpr std::size_t kCorpusSize = 250;
constexpr std::size_t kTraceLength = 5;       // criterion 1
constexpr std::size_t kOracleLoopBound = 5;   // criterion 1
constexpr std::size_t kMaxOperationalN = 5;   // criterion 3
constexpr std::size_t kMaxRemovalBound = 3;   // criterion 4
constexpr std::size_t kMechanicsLength = 5;   // criteria 5 and 6
constexpr std::size_t kCnfCount = 300;        // criterion 7
constexpr std::uint64_t kCnfSeed = 0x3ca7ull;
constexpr std::uint64_t kBenchSeed = 2026;    // criterion 8
constexpr std::size_t kAlphabetMessages = 2;

struct Outcome {
  bool pass;
  std::string detail;
};

const std::vector<InteractionModel>& corpus() {
  static const auto models =
      mtrv::testing::model_corpus(kCorpusSeed, kCorpusSize);
  return models;
}

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(MTRV_FIXTURE_DIR) + "/" + name);
  if (!in) {
    std::cerr << "missing fixture " << name << '\n';
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InteractionModel pubsub() { return parse_interaction(read_fixture("pubsub.int")); }

std::vector<SearchConfig> variant_configs() {
  SearchConfig bfs;
  bfs.strategy = Strategy::BreadthFirst;
  SearchConfig no_memo;
  no_memo.memoize = false;
  SearchConfig single;
  single.simultaneous_removal = false;
  return {bfs, no_memo, single};
}

// Every multi-trace of length <= kTraceLength on every corpus model, checked
// against the bounded oracle with the default configuration and against the
// default verdict with each of `variants`.
struct OracleRun {
  std::size_t models = 0;
  std::size_t traces = 0;
  std::size_t disagreements = 0;
  // Disagreements where analyze matches the prefix closure of the
  // operational semantics (lengths up to kDiagnosticLength).
  std::size_t operational_matches = 0;
  std::size_t variant_analyses = 0;
  std::size_t variant_changes = 0;
  std::string first;
};

constexpr std::size_t kDiagnosticLength = 9;

OracleRun run_oracle_equivalence(const std::vector<SearchConfig>& variants) {
  OracleRun run;
  for (const auto& m : corpus()) {
    ++run.models;
    const auto oracle =
        bounded_prefix_closure(m, kOracleLoopBound, kTraceLength);
    const auto letters = alphabet(m.signature, kAlphabetMessages);
    std::optional<std::set<MultiTrace>> operational;
    for (const auto& mu : all_multitraces(m.signature, letters, kTraceLength)) {
      ++run.traces;
      const bool expected = oracle.count(mu) != 0;
      const Verdict verdict = analyze(m, mu).verdict;
      const bool got = verdict == Verdict::Pass;
      if (got != expected) {
        if (run.disagreements++ == 0) {
          run.first = to_string(m) + to_string(mu);
        }
        if (!operational) {
          operational = mtrv::testing::prefix_closure(
              enumerate_operational(m, kDiagnosticLength));
        }
        if ((operational->count(mu) != 0) == got) ++run.operational_matches;
      }
      for (const auto& cfg : variants) {
        ++run.variant_analyses;
        if (analyze(m, mu, cfg).verdict != verdict) ++run.variant_changes;
      }
    }
  }
  return run;
}

Outcome criterion1() {
  OracleRun r = run_oracle_equivalence({});
  std::ostringstream d;
  d << r.models << " models, " << r.traces
    << " multi-traces of length <= " << kTraceLength << ", loop bound "
    << kOracleLoopBound << ", " << r.disagreements
    << " disagreements (tolerance 0)";
  if (r.disagreements) {
    d << "; analyze matches the operational prefix closure (length <= "
      << kDiagnosticLength << ") on " << r.operational_matches << " of them"
      << "; first:\n"
      << r.first;
  }
  return {r.disagreements == 0, d.str()};
}

struct FixtureCheck {
  const char* file;
  Verdict expected;
};

constexpr FixtureCheck kFixtures[] = {
    {"pubsub_start.mt", Verdict::Pass},
    {"pubsub_full.mt", Verdict::Pass},
    {"pubsub_partial.mt", Verdict::Pass},
};

std::size_t fixture_mismatches(const SearchConfig& cfg) {
  const auto model = pubsub();
  std::size_t bad = 0;
  for (const auto& f : kFixtures) {
    auto mu = parse_multitrace(read_fixture(f.file));
    if (analyze(model, mu, cfg).verdict != f.expected) ++bad;
  }
  return bad;
}

Outcome criterion2() {
  std::size_t bad = fixture_mismatches(SearchConfig{});
  return {bad == 0, std::to_string(std::size(kFixtures)) +
                        " fixture verdicts, " + std::to_string(bad) +
                        " mismatches (exact)"};
}

MultiTraceSet filter_length(const MultiTraceSet& s, std::size_t n) {
  MultiTraceSet out(s.signature());
  for (const auto& mu : s) {
    if (mu.length() <= n) out.insert(mu);
  }
  return out;
}

Outcome criterion3() {
  std::size_t checks = 0, bad = 0;
  std::string first;
  for (const auto& m : corpus()) {
    for (std::size_t n = 0; n <= kMaxOperationalN; ++n) {
      ++checks;
      // The capped enumeration equals the filtered one; unit tests check
      // that identity against uncapped enumerations.
      auto den = filter_length(enumerate_denotational(m, n, n), n);
      if (!(enumerate_operational(m, n) == den)) {
        if (bad++ == 0) first = to_string(m) + " N=" + std::to_string(n);
      }
    }
  }
  std::string d = std::to_string(checks) + " (model, N) pairs, N in 0.." +
                  std::to_string(kMaxOperationalN) + ", " +
                  std::to_string(bad) + " disagreements (tolerance 0)";
  if (bad) d += "; first: " + first;
  return {bad == 0, d};
}

Outcome criterion4() {
  std::size_t checks = 0, bad = 0;
  std::string first;
  for (const auto& m : corpus()) {
    for (std::size_t b = 0; b <= kMaxRemovalBound; ++b) {
      const auto whole = enumerate_denotational(m, b);
      for (const auto& h : m.signature.lifelines()) {
        ++checks;
        auto lhs = enumerate_denotational(remove_lifeline(m, h), b);
        if (!(lhs == remove_lifeline(whole, h))) {
          if (bad++ == 0) {
            first = to_string(m) + " h=" + h.name() + " B=" + std::to_string(b);
          }
        }
      }
    }
  }
  std::string d = std::to_string(checks) + " (model, lifeline, B) triples, B in 0.." +
                  std::to_string(kMaxRemovalBound) + ", " +
                  std::to_string(bad) + " disagreements (tolerance 0)";
  if (bad) d += "; first: " + first;
  return {bad == 0, d};
}

// Walks the whole reachable graph with every rule enabled and checks rule
// exclusivity and the measure law on each edge.
struct Mechanics {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t violations = 0;
  std::string first;

  void violation(const std::string& what) {
    if (violations++ == 0) first = what;
  }
};

struct NodeHash {
  std::size_t operator()(const Node& n) const {
    return n.model.root.hash() * 31u + n.mu.hash();
  }
};

void check_graph(const InteractionModel& m, const MultiTrace& mu,
                 Mechanics& out) {
  const SearchConfig literal = SearchConfig::literal();
  std::unordered_set<Node, NodeHash> seen;
  std::vector<Node> work{Node(m, mu)};
  seen.insert(work.back());
  while (!work.empty()) {
    Node n = std::move(work.back());
    work.pop_back();
    ++out.nodes;
    const std::size_t before = measure(n);
    auto succ = successors(n, literal);
    bool ro = false, rn = false, rer = false;
    for (auto& [tag, v] : succ) {
      ++out.edges;
      switch (tag.rule) {
        case Rule::Ro:
          ro = true;
          break;
        case Rule::Rn:
          rn = true;
          break;
        case Rule::Re:
          rer = true;
          if (measure(v) + 1 != before) out.violation("Re measure at " + to_string(n.mu));
          break;
        case Rule::Rr:
          rer = true;
          if (measure(v) + tag.removed.size() != before) {
            out.violation("Rr measure at " + to_string(n.mu));
          }
          break;
      }
      if (auto* next = std::get_if<Node>(&v)) {
        if (seen.insert(*next).second) work.push_back(*next);
      }
    }
    if (int(ro) + int(rn) + int(rer) != 1 || (ro && succ.size() != 1) ||
        (rn && succ.size() != 1)) {
      out.violation("rule classes at " + to_string(m) + to_string(n.mu));
    }
  }
}

void check_report(const ExplorationReport& r, Mechanics& out) {
  for (const auto& e : r.rule_trace) {
    const std::size_t from = r.measures[e.from];
    const std::size_t to = r.measures[e.to];
    if (e.rule.rule == Rule::Re && to + 1 != from) {
      out.violation("reported Re edge breaks the measure law");
    }
    if (e.rule.rule == Rule::Rr && to + e.rule.removed.size() != from) {
      out.violation("reported Rr edge breaks the measure law");
    }
  }
}

Outcome criterion5() {
  Mechanics mech;
  std::size_t analyses = 0;
  SearchConfig simultaneous;
  simultaneous.skip_execute_when_removable = false;
  for (const auto& m : corpus()) {
    const auto letters = alphabet(m.signature, kAlphabetMessages);
    for (const auto& mu :
         all_multitraces(m.signature, letters, kMechanicsLength)) {
      check_graph(m, mu, mech);
      for (const auto& cfg : {SearchConfig{}, simultaneous,
                              SearchConfig::literal()}) {
        ++analyses;
        check_report(analyze(m, mu, cfg), mech);
      }
    }
  }
  std::ostringstream d;
  d << analyses << " terminated analyses, " << mech.nodes << " nodes and "
    << mech.edges << " edges checked, " << mech.violations
    << " violations (tolerance 0)";
  if (mech.violations) d << "; first: " << mech.first;
  return {mech.violations == 0, d.str()};
}

Outcome criterion6() {
  std::size_t checked = 0, bad = 0;
  std::string first;
  const SearchConfig literal = SearchConfig::literal();
  for (const auto& m : corpus()) {
    const auto letters = alphabet(m.signature, kAlphabetMessages);
    for (const auto& mu :
         all_multitraces(m.signature, letters, kMechanicsLength)) {
      if (mu.is_empty()) continue;
      bool has_empty = false;
      for (std::size_t k = 0; k < m.signature.size(); ++k) {
        has_empty |= mu.component_at(k).empty();
      }
      if (!has_empty) continue;
      if (analyze(m, mu, literal).verdict != Verdict::Pass) continue;
      // Every removal edge, single and simultaneous, must keep Pass.
      std::vector<Vertex> forced;
      for (auto& [tag, v] : successors(Node(m, mu), literal)) {
        if (tag.rule == Rule::Rr) forced.push_back(std::move(v));
      }
      for (auto& [tag, v] : successors(Node(m, mu), SearchConfig{})) {
        forced.push_back(std::move(v));
      }
      for (const auto& v : forced) {
        ++checked;
        const Node& n = std::get<Node>(v);
        if (analyze(n.model, n.mu, literal).verdict != Verdict::Pass) {
          if (bad++ == 0) first = to_string(m) + to_string(mu);
        }
      }
    }
  }
  std::string d = std::to_string(checked) +
                  " forced removals from passing nodes, " +
                  std::to_string(bad) + " violations (tolerance 0)";
  if (bad) d += "; first: " + first;
  return {bad == 0, d};
}

Outcome criterion7() {
  SplitMix64 rng(kCnfSeed);
  std::size_t bad = 0, sat_count = 0;
  for (std::size_t k = 0; k < kCnfCount; ++k) {
    auto phi = mtrv::testing::random_cnf(rng, 3, 10, 4, 30);
    const bool expected = sat::brute_force_sat(phi);
    sat_count += expected;
    if (sat::sat_solve_via_rv(phi) != expected) ++bad;
  }
  auto mixed = sat::parse_dimacs(read_fixture("mixed.cnf"));
  const bool mixed_sat = sat::sat_solve_via_rv(mixed);
  std::string d = std::to_string(kCnfCount) + " random CNFs (" +
                  std::to_string(sat_count) + " SAT), " + std::to_string(bad) +
                  " disagreements with brute force (tolerance 0); example "
                  "formula " +
                  (mixed_sat ? "SAT" : "UNSAT");
  return {bad == 0 && mixed_sat, d};
}

std::string without_time(const std::vector<BenchRecord>& rows) {
  std::ostringstream csv;
  write_bench_csv(csv, rows);
  std::istringstream in(csv.str());
  std::string line, out;
  while (std::getline(in, line)) {
    // name,kind,verdict,time_seconds,nodes_explored
    std::vector<std::string> cols;
    std::stringstream ls(line);
    std::string col;
    while (std::getline(ls, col, ',')) cols.push_back(col);
    cols.erase(cols.begin() + 3);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      out += (k ? "," : "") + cols[k];
    }
    out += '\n';
  }
  return out;
}

Outcome criterion8() {
  const auto model = pubsub();
  BenchOptions o;
  o.criteria.loop_bound = 2;
  o.criteria.mode = GenerationMode::Exhaustive;
  o.prefixes_per_trace = 5;
  o.mutants_per_prefix = 1;
  o.seed = kBenchSeed;
  auto first = run_bench(model, o);
  auto second = run_bench(model, o);
  const bool identical = without_time(first) == without_time(second);

  std::size_t sound = 0, unsound = 0, mutants = 0, mismatched = 0;
  for (const auto& r : first) {
    if (r.kind == RecordKind::Acpt || r.kind == RecordKind::Pref) {
      (r.verdict == Verdict::Pass ? sound : unsound)++;
      continue;
    }
    ++mutants;
    // Loop bound grows with the multi-trace so the bounded oracle cannot
    // miss a witness needing more unfoldings than there are actions.
    const std::size_t bound = std::max(kOracleLoopBound, r.mu.length());
    const bool expected =
        bounded_prefix_closure(model, bound, r.mu.length()).count(r.mu) != 0;
    if (expected != (r.verdict == Verdict::Pass)) ++mismatched;
  }
  std::ostringstream d;
  d << first.size() << " rows; ACPT/PREF Pass " << sound << "/"
    << (sound + unsound) << "; reruns "
    << (identical ? "identical" : "DIFFER") << " without time column; "
    << mutants << " mutants, " << mismatched
    << " oracle mismatches (tolerance 0)";
  return {unsound == 0 && sound > 0 && identical && mismatched == 0, d.str()};
}

Outcome criterion9() {
  OracleRun r = run_oracle_equivalence(variant_configs());
  const std::size_t baseline = fixture_mismatches(SearchConfig{});
  std::size_t fixtures = 0;
  for (const auto& cfg : variant_configs()) {
    fixtures += fixture_mismatches(cfg) != baseline;
  }
  std::ostringstream d;
  d << "breadth-first, no memoization, single removal: "
    << r.variant_analyses << " re-analyses of criterion 1 with "
    << r.variant_changes << " verdict changes, " << fixtures
    << " changed fixture runs for criterion 2 (tolerance 0)";
  return {r.variant_changes == 0 && fixtures == 0, d.str()};
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "oracle equivalence", criterion1},
      {2, "fixture verdicts", criterion2},
      {3, "operational equals denotational", criterion3},
      {4, "removal commutes with semantics", criterion4},
      {5, "search graph mechanics", criterion5},
      {6, "removal confluence", criterion6},
      {7, "SAT bridge", criterion7},
      {8, "benchmark harness soundness", criterion8},
      {9, "strategy invariance", criterion9},
  };
  std::set<int> only;
  for (int k = 1; k < argc; ++k) {
    std::string arg = argv[k];
    if (arg == "--only" && k + 1 < argc) {
      only.insert(std::atoi(argv[++k]));
    } else {
      std::cerr << "usage: mtrv_acceptance [--only N]...\n";
      return 2;
    }
  }
  bool ok = true;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL",
                c.id, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
    ok &= o.pass;
  }
  return ok ? 0 : 1;
}
