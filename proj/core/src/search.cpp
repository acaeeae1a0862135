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

#include "mtrv/search.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <ostream>
#include <unordered_map>

#include "mtrv/errors.hpp"
#include "mtrv/semantics.hpp"

namespace mtrv {

Node::Node(InteractionModel m, MultiTrace t)
    : model(std::move(m)), mu(std::move(t)) {
  if (!(model.signature == mu.signature())) {
    throw SignatureError("interaction signature " + to_string(model.signature) +
                         " differs from multi-trace signature " +
                         to_string(mu.signature()));
  }
}

std::string to_string(const RuleTag& tag) {
  switch (tag.rule) {
    case Rule::Ro:
      return "Ro";
    case Rule::Rn:
      return "Rn";
    case Rule::Re:
      return "Re:" + to_string(*tag.action);
    case Rule::Rr: {
      std::string out = "Rr:";
      for (std::size_t k = 0; k < tag.removed.size(); ++k) {
        if (k) out += '+';
        out += tag.removed[k].name();
      }
      return out;
    }
  }
  return "?";
}

const char* to_string(Verdict v) { return v == Verdict::Pass ? "Pass" : "Fail"; }

std::size_t measure(const Vertex& v) {
  if (const auto* n = std::get_if<Node>(&v)) {
    return n->mu.length() + n->mu.signature().size() + 1;
  }
  return 0;
}

std::vector<std::pair<RuleTag, Vertex>> successors(const Vertex& v,
                                                   const SearchConfig& cfg) {
  const auto* node = std::get_if<Node>(&v);
  if (!node) throw PreconditionError("sink vertices have no successors");
  const Signature& sig = node->mu.signature();
  std::vector<std::pair<RuleTag, Vertex>> out;

  if (node->mu.is_empty()) {
    out.emplace_back(RuleTag::ok(), OkSink{});
    return out;
  }

  std::vector<Lifeline> empties;
  for (const auto& l : sig.lifelines()) {
    if (node->mu.component(l).empty()) empties.push_back(l);
  }

  if (!empties.empty()) {
    auto remove_all = [&](const std::vector<Lifeline>& hs) {
      Interaction term = node->model.root;
      MultiTrace mu = node->mu;
      for (const auto& h : hs) {
        term = remove_lifeline(term, h);
        mu = remove_lifeline(mu, h);
      }
      InteractionModel m(mu.signature(), std::move(term),
                         InteractionModel::Unchecked{});
      return Node(std::move(m), std::move(mu));
    };
    if (cfg.simultaneous_removal) {
      out.emplace_back(RuleTag::removal(empties), remove_all(empties));
    } else {
      for (const auto& h : empties) {
        out.emplace_back(RuleTag::removal({h}), remove_all({h}));
      }
    }
    if (cfg.skip_execute_when_removable) return out;
  }

  std::size_t executions = 0;
  for (auto& step : frontier(node->model.root)) {
    const Trace& t = node->mu.component(step.action.lifeline);
    if (t.empty() || !(t.front() == step.action)) continue;
    MultiTrace rest =
        node->mu.with_component(step.action.lifeline, Trace(t.begin() + 1, t.end()));
    InteractionModel m(sig, std::move(step.successor),
                       InteractionModel::Unchecked{});
    out.emplace_back(RuleTag::execute(step.action),
                     Node(std::move(m), std::move(rest)));
    ++executions;
  }

  if (empties.empty() && executions == 0) {
    out.emplace_back(RuleTag::nok(), NokSink{});
  }
  return out;
}

namespace {

struct NodeHash {
  std::size_t operator()(const Node& n) const {
    return n.model.root.hash() * 1000003u ^ n.mu.hash();
  }
};

struct Pending {
  Node node;
  std::size_t id;
  std::size_t depth;
};

}  // namespace

ExplorationReport analyze(const InteractionModel& model, const MultiTrace& mu,
                          const SearchConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  ExplorationReport report;
  Node root(model, mu);

  std::unordered_map<Node, std::size_t, NodeHash> seen;
  std::optional<std::size_t> nok_id;
  std::deque<Pending> work;

  auto new_id = [&](std::size_t m) {
    report.measures.push_back(m);
    return report.measures.size() - 1;
  };

  std::size_t root_id = new_id(measure(root));
  if (cfg.memoize) seen.emplace(root, root_id);
  work.push_back({std::move(root), root_id, 0});

  while (!work.empty()) {
    Pending cur = [&] {
      if (cfg.strategy == Strategy::DepthFirst) {
        Pending p = std::move(work.back());
        work.pop_back();
        return p;
      }
      Pending p = std::move(work.front());
      work.pop_front();
      return p;
    }();

    if (cfg.node_limit && report.nodes_explored >= *cfg.node_limit) {
      throw ResourceLimitError("node limit of " +
                               std::to_string(*cfg.node_limit) +
                               " explored nodes reached without a verdict");
    }
    ++report.nodes_explored;
    report.max_depth = std::max(report.max_depth, cur.depth);

    std::vector<Pending> children;
    bool reached_ok = false;
    for (auto& [tag, next] : successors(cur.node, cfg)) {
      if (std::holds_alternative<OkSink>(next)) {
        report.ok_id = new_id(0);
        report.rule_trace.push_back({cur.id, std::move(tag), *report.ok_id});
        reached_ok = true;
        break;
      }
      if (std::holds_alternative<NokSink>(next)) {
        if (!nok_id) nok_id = new_id(0);
        report.rule_trace.push_back({cur.id, std::move(tag), *nok_id});
        continue;
      }
      Node& n = std::get<Node>(next);
      if (cfg.memoize) {
        auto it = seen.find(n);
        if (it != seen.end()) {
          report.rule_trace.push_back({cur.id, std::move(tag), it->second});
          continue;
        }
      }
      std::size_t id = new_id(measure(next));
      report.rule_trace.push_back({cur.id, std::move(tag), id});
      if (cfg.memoize) seen.emplace(n, id);
      children.push_back({std::move(n), id, cur.depth + 1});
    }
    if (reached_ok) {
      report.max_depth = std::max(report.max_depth, cur.depth + 1);
      report.verdict = Verdict::Pass;
      break;
    }
    if (cfg.strategy == Strategy::DepthFirst) {
      // Reverse so that the first successor is explored first.
      for (auto it = children.rbegin(); it != children.rend(); ++it) {
        work.push_back(std::move(*it));
      }
    } else {
      for (auto& c : children) work.push_back(std::move(c));
    }
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

void write_exploration_log(std::ostream& out, const ExplorationReport& report) {
  for (std::size_t id = 0; id < report.measures.size(); ++id) {
    out << "NODE " << id << " measure=" << report.measures[id] << '\n';
  }
  for (const auto& e : report.rule_trace) {
    out << "EDGE " << e.from << " -> " << e.to << " rule=" << to_string(e.rule)
        << '\n';
  }
  out << "VERDICT " << to_string(report.verdict) << '\n';
}

}  // namespace mtrv
