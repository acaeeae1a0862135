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

#include "mtrv/semantics.hpp"

#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace mtrv {

bool terminates(const Interaction& i) {
  switch (i.kind()) {
    case TermKind::Empty:
    case TermKind::LoopS:
    case TermKind::LoopP:
      return true;
    case TermKind::Act:
      return false;
    case TermKind::Alt:
      return terminates(i.left()) || terminates(i.right());
    case TermKind::Seq:
    case TermKind::Par:
      return terminates(i.left()) && terminates(i.right());
  }
  return false;
}

namespace {

void steps(const Interaction& i, std::vector<UnfoldingStep>& out) {
  switch (i.kind()) {
    case TermKind::Empty:
      return;
    case TermKind::Act:
      out.push_back({i.action(), Interaction::empty(), {}});
      return;
    case TermKind::Alt:
      steps(i.left(), out);
      steps(i.right(), out);
      return;
    case TermKind::Par: {
      std::vector<UnfoldingStep> sub;
      steps(i.left(), sub);
      for (auto& s : sub) {
        s.successor = Interaction::par(std::move(s.successor), i.right());
        out.push_back(std::move(s));
      }
      sub.clear();
      steps(i.right(), sub);
      for (auto& s : sub) {
        s.successor = Interaction::par(i.left(), std::move(s.successor));
        out.push_back(std::move(s));
      }
      return;
    }
    case TermKind::Seq: {
      std::vector<UnfoldingStep> sub;
      steps(i.left(), sub);
      for (auto& s : sub) {
        s.successor = Interaction::seq(std::move(s.successor), i.right());
        out.push_back(std::move(s));
      }
      if (terminates(i.left())) steps(i.right(), out);
      return;
    }
    case TermKind::LoopS:
    case TermKind::LoopP: {
      std::vector<UnfoldingStep> sub;
      steps(i.body(), sub);
      const bool sequential = i.kind() == TermKind::LoopS;
      for (auto& s : sub) {
        // The loop itself is re-inserted, so its identity survives.
        s.successor = sequential ? Interaction::seq(std::move(s.successor), i)
                                 : Interaction::par(std::move(s.successor), i);
        s.unfolded_loops.insert(s.unfolded_loops.begin(), i.identity());
        out.push_back(std::move(s));
      }
      return;
    }
  }
}

struct EntryHash {
  std::size_t operator()(const FrontierEntry& e) const {
    return std::hash<Action>{}(e.action) * 31u + e.successor.hash();
  }
};

}  // namespace

std::vector<UnfoldingStep> frontier_with_unfoldings(const Interaction& i) {
  std::vector<UnfoldingStep> out;
  steps(i, out);
  return out;
}

std::vector<FrontierEntry> frontier(const Interaction& i) {
  std::vector<UnfoldingStep> raw;
  steps(i, raw);
  std::vector<FrontierEntry> out;
  out.reserve(raw.size());
  std::unordered_set<FrontierEntry, EntryHash> seen;
  for (auto& s : raw) {
    FrontierEntry e{std::move(s.action), std::move(s.successor)};
    if (seen.insert(e).second) out.push_back(std::move(e));
  }
  return out;
}

namespace {

MultiTraceSet denote(const Interaction& i, const Signature& sig,
                     std::size_t bound, std::size_t cap) {
  switch (i.kind()) {
    case TermKind::Empty:
      return MultiTraceSet(sig, {MultiTrace(sig)});
    case TermKind::Act: {
      MultiTraceSet out(sig);
      if (cap >= 1) out.insert(attach(MultiTrace(sig), i.action(), Side::Left));
      return out;
    }
    case TermKind::Seq:
      return sequence(denote(i.left(), sig, bound, cap),
                      denote(i.right(), sig, bound, cap), cap);
    case TermKind::Par:
      return interleave(denote(i.left(), sig, bound, cap),
                        denote(i.right(), sig, bound, cap), cap);
    case TermKind::Alt:
      return alternative(denote(i.left(), sig, bound, cap),
                         denote(i.right(), sig, bound, cap));
    case TermKind::LoopS:
      return closure(ClosureOp::Seq, denote(i.body(), sig, bound, cap), bound,
                     cap);
    case TermKind::LoopP:
      return closure(ClosureOp::Par, denote(i.body(), sig, bound, cap), bound,
                     cap);
  }
  return MultiTraceSet(sig);
}

struct BudgetKey {
  Interaction term;
  std::size_t budget;
  friend bool operator==(const BudgetKey&, const BudgetKey&) = default;
};

struct BudgetKeyHash {
  std::size_t operator()(const BudgetKey& k) const {
    return k.term.hash() * 131u + k.budget;
  }
};

class OperationalEnumerator {
 public:
  explicit OperationalEnumerator(const Signature& sig) : sig_(sig) {}

  const MultiTraceSet& run(const Interaction& i, std::size_t budget) {
    BudgetKey key{i, budget};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    MultiTraceSet out(sig_);
    if (terminates(i)) out.insert(MultiTrace(sig_));
    if (budget > 0) {
      for (const auto& step : frontier(i)) {
        for (const auto& mu : run(step.successor, budget - 1)) {
          out.insert(attach(mu, step.action, Side::Left));
        }
      }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  const Signature& sig_;
  std::unordered_map<BudgetKey, MultiTraceSet, BudgetKeyHash> memo_;
};

}  // namespace

MultiTraceSet enumerate_denotational(const InteractionModel& model,
                                     std::size_t loop_bound,
                                     std::size_t max_len) {
  return denote(model.root, model.signature, loop_bound, max_len);
}

MultiTraceSet enumerate_operational(const InteractionModel& model,
                                    std::size_t max_len) {
  OperationalEnumerator e(model.signature);
  return e.run(model.root, max_len);
}

}  // namespace mtrv
