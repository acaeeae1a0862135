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

// Offline verification of a multi-trace against an interaction.
//
// The search graph has two sinks, Ok and Nok, and nodes (i, mu) on a common
// signature. From a node, exactly one of the following groups of rules
// applies:
//
//   Ro  mu is empty                      -> Ok
//   Rr  some component of mu is empty    -> (rmv_h(i), rmv_h(mu))
//   Re  i --a--> i' and a heads mu       -> (i', mu without that head)
//   Rn  no component empty and no Re     -> Nok
//
// (Rr and Re may apply together.) A multi-trace passes iff Ok is reachable,
// which holds iff it is a multi-prefix of some accepted multi-trace. Every
// Rr/Re edge decreases |mu| + |L| + 1, so the reachable graph is finite.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mtrv/interaction.hpp"
#include "mtrv/multitrace.hpp"

namespace mtrv {

struct OkSink {
  friend bool operator==(const OkSink&, const OkSink&) = default;
};
struct NokSink {
  friend bool operator==(const NokSink&, const NokSink&) = default;
};

/// A pair (interaction, multi-trace) on one signature.
struct Node {
  InteractionModel model;
  MultiTrace mu;

  /// Throws SignatureError unless both sides share a signature.
  Node(InteractionModel m, MultiTrace t);

  friend bool operator==(const Node&, const Node&) = default;
};

using Vertex = std::variant<OkSink, NokSink, Node>;

enum class Rule { Ro, Rn, Re, Rr };

struct RuleTag {
  Rule rule;
  /// Consumed action, for Re.
  std::optional<Action> action;
  /// Removed lifelines, for Rr; never empty there.
  std::vector<Lifeline> removed;

  static RuleTag ok() { return {Rule::Ro, std::nullopt, {}}; }
  static RuleTag nok() { return {Rule::Rn, std::nullopt, {}}; }
  static RuleTag execute(Action a) { return {Rule::Re, std::move(a), {}}; }
  static RuleTag removal(std::vector<Lifeline> ls) {
    return {Rule::Rr, std::nullopt, std::move(ls)};
  }

  friend bool operator==(const RuleTag&, const RuleTag&) = default;
};

/// `Ro`, `Rn`, `Re:l!m` or `Rr:l1+l2`.
std::string to_string(const RuleTag& tag);

enum class Verdict { Pass, Fail };

const char* to_string(Verdict v);

enum class Strategy { DepthFirst, BreadthFirst };

struct SearchConfig {
  Strategy strategy = Strategy::DepthFirst;
  /// Skip nodes already explored (structural equality).
  bool memoize = true;
  /// One Rr edge removing every empty-component lifeline at once, instead of
  /// one edge per lifeline.
  bool simultaneous_removal = true;
  /// Omit Re edges from nodes where Rr applies. Complete because removing a
  /// lifeline with an empty component never loses a path to Ok.
  bool skip_execute_when_removable = true;
  /// Maximum number of nodes expanded before giving up.
  std::optional<std::size_t> node_limit;

  /// Every edge of the search graph, no shortcuts.
  static SearchConfig literal() {
    SearchConfig c;
    c.simultaneous_removal = false;
    c.skip_execute_when_removable = false;
    return c;
  }
};

struct SearchEdge {
  std::size_t from;
  RuleTag rule;
  std::size_t to;
};

struct ExplorationReport {
  Verdict verdict = Verdict::Fail;
  /// Node vertices expanded.
  std::size_t nodes_explored = 0;
  std::size_t max_depth = 0;
  /// Every edge traversed, in exploration order. Vertex ids index `measures`.
  std::vector<SearchEdge> rule_trace;
  std::vector<std::size_t> measures;
  std::optional<std::size_t> ok_id;
  double elapsed_seconds = 0.0;
};

/// 0 for sinks, |mu| + |L| + 1 for a node.
std::size_t measure(const Vertex& v);

/// The outgoing edges of `v` in rule order: Ro, then Rr, then Re in frontier
/// order. Throws PreconditionError on a sink.
std::vector<std::pair<RuleTag, Vertex>> successors(const Vertex& v,
                                                   const SearchConfig& cfg);

/// Explores the graph from (model, mu) until Ok is reached or the reachable
/// part is exhausted. Throws SignatureError on mismatched signatures and
/// ResourceLimitError when cfg.node_limit is exceeded.
ExplorationReport analyze(const InteractionModel& model, const MultiTrace& mu,
                          const SearchConfig& cfg = {});

/// Writes `NODE`, `EDGE` and `VERDICT` records for a finished exploration.
void write_exploration_log(std::ostream& out, const ExplorationReport& report);

}  // namespace mtrv
