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

// Small-step view of interactions (termination predicate and execution
// relation) and two bounded enumerations of their multi-trace semantics.

#pragma once

#include <cstddef>
#include <vector>

#include "mtrv/interaction.hpp"
#include "mtrv/multitrace.hpp"

namespace mtrv {

/// One step `i --action--> successor`.
struct FrontierEntry {
  Action action;
  Interaction successor;

  friend bool operator==(const FrontierEntry&, const FrontierEntry&) = default;
};

/// A step together with the loop nodes it unfolded, outermost first. Loop
/// nodes are identified by Interaction::identity(), which unfoldings preserve.
struct UnfoldingStep {
  Action action;
  Interaction successor;
  std::vector<const void*> unfolded_loops;
};

/// True iff `i` can terminate, i.e. accepts the empty multi-trace.
bool terminates(const Interaction& i);

/// All distinct steps of `i`, leftmost-innermost rule order.
std::vector<FrontierEntry> frontier(const Interaction& i);

/// Same steps as frontier() without deduplication, annotated with the loops
/// each one unfolds.
std::vector<UnfoldingStep> frontier_with_unfoldings(const Interaction& i);

/// Compositional enumeration where every Kleene closure is cut after
/// `loop_bound` powers. Elements longer than `max_len` are discarded along
/// the way; the result equals filtering the uncapped enumeration.
MultiTraceSet enumerate_denotational(const InteractionModel& model,
                                     std::size_t loop_bound,
                                     std::size_t max_len = kUnbounded);

/// Every multi-trace of length at most `max_len` derivable from the root by
/// chaining steps and ending on a terminating residual.
MultiTraceSet enumerate_operational(const InteractionModel& model,
                                    std::size_t max_len);

}  // namespace mtrv
