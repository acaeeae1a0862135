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

// Experiment harness: accepted multi-trace generation, prefix selection,
// mutation operators and benchmark records.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mtrv/errors.hpp"
#include "mtrv/interaction.hpp"
#include "mtrv/multitrace.hpp"
#include "mtrv/random.hpp"
#include "mtrv/search.hpp"

namespace mtrv {

enum class GenerationMode { Exhaustive, RandomPartial };

struct GenerationCriteria {
  /// Maximum unfoldings of each syntactic loop along one derivation.
  std::size_t loop_bound = 1;
  GenerationMode mode = GenerationMode::Exhaustive;
  /// Vertices visited before RandomPartial stops. Unused by Exhaustive.
  std::size_t node_limit = 1000;
  std::uint64_t seed = 0;
};

/// Accepted multi-traces, each emitted once, in discovery order.
/// Exhaustive mode walks every derivation within the loop bound; RandomPartial
/// repeatedly walks one derivation choosing steps uniformly and stopping at a
/// terminating residual with probability 1/2. Throws PreconditionError if
/// node_limit is 0.
std::vector<MultiTrace> generate_accepted(const InteractionModel& model,
                                          const GenerationCriteria& criteria);

/// `count` multi-prefixes of `mu`, drawn by uniform per-component cut points.
/// Distinct whenever mu has at least `count` multi-prefixes; otherwise every
/// multi-prefix appears, followed by random repeats.
std::vector<MultiTrace> select_prefixes(const MultiTrace& mu, std::size_t count,
                                        SplitMix64& rng);
std::vector<MultiTrace> select_prefixes(const MultiTrace& mu, std::size_t count,
                                        std::uint64_t seed);

enum class MutationKind { Sact, Scmp, Nois };

const char* to_string(MutationKind k);

class MutationError : public PreconditionError {
 public:
  enum class Reason {
    NoSwappableComponent,
    MissingAux,
    SignatureMismatch,
    IdenticalAux,
    TooFewLifelines,
    EmptyAlphabet,
  };

  MutationError(Reason r, const std::string& what)
      : PreconditionError(what), reason_(r) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

struct MutationAux {
  /// Second multi-trace, for Scmp.
  std::optional<MultiTrace> other;
  /// Candidate actions, for Nois. Actions on lifelines outside the signature
  /// are ignored.
  std::vector<Action> alphabet;
};

/// Sact swaps two distinct positions of one component holding at least two
/// actions. Scmp takes each component from `mu` or `aux.other`, at least one
/// from each. Nois inserts one alphabet action into its lifeline's component.
/// Throws MutationError when the kind's precondition does not hold.
MultiTrace mutate(const MultiTrace& mu, MutationKind kind, SplitMix64& rng,
                  const MutationAux& aux = {});

enum class RecordKind { Acpt, Pref, Sact, Scmp, Nois };

const char* to_string(RecordKind k);

struct BenchRecord {
  std::string name;
  RecordKind kind;
  MultiTrace mu;
  Verdict verdict;
  double time_seconds;
  std::size_t nodes_explored;
};

struct BenchOptions {
  GenerationCriteria criteria;
  std::size_t prefixes_per_trace = 5;
  std::size_t mutants_per_prefix = 1;
  std::uint64_t seed = 0;
  SearchConfig search;
  /// Nois alphabet; the model's actions when empty.
  std::vector<Action> alphabet;
};

/// ACPT -> PREF -> {SACT, SCMP, NOIS}. All randomness comes from one
/// generator seeded with options.seed (which also overrides
/// criteria.seed). Scmp partners are drawn from the other selected prefixes.
/// Mutants whose precondition fails are skipped.
std::vector<BenchRecord> run_bench(const InteractionModel& model,
                                   const BenchOptions& options);

inline constexpr const char* kBenchCsvHeader =
    "name,kind,verdict,time_seconds,nodes_explored";

/// Header line then one row per record, times with six decimals.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows);

}  // namespace mtrv
