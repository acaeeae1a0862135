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

#include "mtrv/workbench.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <unordered_set>

#include "mtrv/semantics.hpp"

namespace mtrv {

namespace {

using LoopCounters = std::map<const void*, std::size_t>;

/// Steps allowed under the loop bound, with updated counters.
std::vector<std::pair<UnfoldingStep, LoopCounters>> allowed_steps(
    const Interaction& term, const LoopCounters& counters, std::size_t bound) {
  std::vector<std::pair<UnfoldingStep, LoopCounters>> out;
  for (auto& s : frontier_with_unfoldings(term)) {
    LoopCounters next = counters;
    bool ok = true;
    for (const void* loop : s.unfolded_loops) {
      if (++next[loop] > bound) ok = false;
    }
    if (ok) out.emplace_back(std::move(s), std::move(next));
  }
  return out;
}

class Collector {
 public:
  void add(const MultiTrace& mu) {
    if (seen_.insert(mu).second) out_.push_back(mu);
  }
  std::vector<MultiTrace> take() { return std::move(out_); }

 private:
  std::set<MultiTrace> seen_;
  std::vector<MultiTrace> out_;
};

struct GenState {
  Interaction term;
  LoopCounters counters;
};

struct GenKey {
  Interaction term;
  MultiTrace mu;
  std::vector<std::pair<const void*, std::size_t>> counters;
  friend bool operator==(const GenKey&, const GenKey&) = default;
};

struct GenKeyHash {
  std::size_t operator()(const GenKey& k) const {
    std::size_t h = k.term.hash() * 1000003u ^ k.mu.hash();
    for (const auto& [p, c] : k.counters) {
      h = h * 31u + std::hash<const void*>{}(p) + c;
    }
    return h;
  }
};

void exhaustive(const InteractionModel& model, std::size_t bound,
                Collector& out) {
  std::unordered_set<GenKey, GenKeyHash> visited;
  // Explicit stack: derivations can be long.
  std::vector<std::pair<GenState, MultiTrace>> stack;
  stack.push_back({GenState{model.root, {}}, MultiTrace(model.signature)});
  while (!stack.empty()) {
    auto [state, mu] = std::move(stack.back());
    stack.pop_back();
    GenKey key{state.term, mu, {state.counters.begin(), state.counters.end()}};
    if (!visited.insert(std::move(key)).second) continue;
    if (terminates(state.term)) out.add(mu);
    auto steps = allowed_steps(state.term, state.counters, bound);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      MultiTrace next = attach(mu, it->first.action, Side::Right);
      stack.push_back({GenState{it->first.successor, std::move(it->second)},
                       std::move(next)});
    }
  }
}

void random_partial(const InteractionModel& model, std::size_t bound,
                    std::size_t node_limit, std::uint64_t seed,
                    Collector& out) {
  SplitMix64 rng(seed);
  std::size_t visited = 0;
  while (visited < node_limit) {
    Interaction term = model.root;
    MultiTrace mu(model.signature);
    LoopCounters counters;
    while (visited < node_limit) {
      ++visited;
      auto steps = allowed_steps(term, counters, bound);
      const bool can_stop = terminates(term);
      if (can_stop && (steps.empty() || rng.coin())) {
        out.add(mu);
        break;
      }
      if (steps.empty()) break;
      auto& pick = steps[rng.below(steps.size())];
      mu = attach(mu, pick.first.action, Side::Right);
      term = pick.first.successor;
      counters = std::move(pick.second);
    }
  }
}

}  // namespace

std::vector<MultiTrace> generate_accepted(const InteractionModel& model,
                                          const GenerationCriteria& criteria) {
  if (criteria.node_limit == 0) {
    throw PreconditionError("node limit must be at least 1");
  }
  Collector out;
  if (criteria.mode == GenerationMode::Exhaustive) {
    exhaustive(model, criteria.loop_bound, out);
  } else {
    random_partial(model, criteria.loop_bound, criteria.node_limit,
                   criteria.seed, out);
  }
  return out.take();
}

namespace {

MultiTrace cut(const MultiTrace& mu, const std::vector<std::size_t>& lengths) {
  MultiTrace out = mu;
  const auto& sorted = mu.signature().sorted();
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const Trace& t = mu.component_at(k);
    out = out.with_component(sorted[k],
                             Trace(t.begin(), t.begin() + lengths[k]));
  }
  return out;
}

}  // namespace

std::vector<MultiTrace> select_prefixes(const MultiTrace& mu, std::size_t count,
                                        SplitMix64& rng) {
  const std::size_t n = mu.signature().size();
  // Saturates: only compared against small counts.
  std::size_t lattice = 1;
  for (std::size_t k = 0; k < n && lattice <= 4 * count; ++k) {
    lattice *= mu.component_at(k).size() + 1;
  }

  auto random_cut = [&] {
    std::vector<std::size_t> lengths(n);
    for (std::size_t k = 0; k < n; ++k) {
      lengths[k] = rng.below(mu.component_at(k).size() + 1);
    }
    return cut(mu, lengths);
  };

  std::vector<MultiTrace> out;
  if (lattice > 4 * count) {
    std::set<MultiTrace> seen;
    while (out.size() < count) {
      MultiTrace p = random_cut();
      if (seen.insert(p).second) out.push_back(std::move(p));
    }
    return out;
  }

  std::vector<MultiTrace> all;
  std::vector<std::size_t> lengths(n, 0);
  while (true) {
    all.push_back(cut(mu, lengths));
    std::size_t k = 0;
    while (k < n && lengths[k] == mu.component_at(k).size()) lengths[k++] = 0;
    if (k == n) break;
    ++lengths[k];
  }
  // Partial Fisher-Yates: the first min(count, |all|) entries become a
  // uniform sample without replacement.
  const std::size_t take = std::min(count, all.size());
  for (std::size_t k = 0; k < take; ++k) {
    std::swap(all[k], all[k + rng.below(all.size() - k)]);
    out.push_back(all[k]);
  }
  while (out.size() < count) out.push_back(random_cut());
  return out;
}

std::vector<MultiTrace> select_prefixes(const MultiTrace& mu, std::size_t count,
                                        std::uint64_t seed) {
  SplitMix64 rng(seed);
  return select_prefixes(mu, count, rng);
}

const char* to_string(MutationKind k) {
  switch (k) {
    case MutationKind::Sact:
      return "sact";
    case MutationKind::Scmp:
      return "scmp";
    case MutationKind::Nois:
      return "nois";
  }
  return "?";
}

namespace {

using Reason = MutationError::Reason;

MultiTrace swap_actions(const MultiTrace& mu, SplitMix64& rng) {
  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < mu.signature().size(); ++k) {
    if (mu.component_at(k).size() >= 2) candidates.push_back(k);
  }
  if (candidates.empty()) {
    throw MutationError(Reason::NoSwappableComponent,
                        "sact needs a component with at least two actions");
  }
  std::size_t slot = candidates[rng.below(candidates.size())];
  Trace t = mu.component_at(slot);
  std::size_t i = rng.below(t.size());
  std::size_t j = rng.below(t.size() - 1);
  if (j >= i) ++j;
  std::swap(t[i], t[j]);
  return mu.with_component(mu.signature().sorted()[slot], std::move(t));
}

MultiTrace swap_components(const MultiTrace& mu, const MutationAux& aux,
                           SplitMix64& rng) {
  if (!aux.other) {
    throw MutationError(Reason::MissingAux,
                        "scmp needs a second multi-trace");
  }
  const MultiTrace& other = *aux.other;
  if (!(other.signature() == mu.signature())) {
    throw MutationError(Reason::SignatureMismatch,
                        "scmp operands have signatures " +
                            to_string(mu.signature()) + " and " +
                            to_string(other.signature()));
  }
  if (other == mu) {
    throw MutationError(Reason::IdenticalAux,
                        "scmp needs two distinct multi-traces");
  }
  const std::size_t n = mu.signature().size();
  if (n < 2) {
    throw MutationError(Reason::TooFewLifelines,
                        "scmp needs at least two lifelines");
  }
  std::vector<bool> from_other(n);
  while (true) {
    std::size_t taken = 0;
    for (std::size_t k = 0; k < n; ++k) {
      from_other[k] = rng.coin();
      taken += from_other[k];
    }
    if (taken != 0 && taken != n) break;
  }
  MultiTrace out = mu;
  for (std::size_t k = 0; k < n; ++k) {
    if (from_other[k]) {
      out = out.with_component(mu.signature().sorted()[k],
                               other.component_at(k));
    }
  }
  return out;
}

MultiTrace insert_noise(const MultiTrace& mu, const MutationAux& aux,
                        SplitMix64& rng) {
  std::vector<Action> pool;
  for (const auto& a : aux.alphabet) {
    if (mu.signature().contains(a.lifeline)) pool.push_back(a);
  }
  if (pool.empty()) {
    throw MutationError(Reason::EmptyAlphabet,
                        "nois needs an alphabet action on a lifeline of " +
                            to_string(mu.signature()));
  }
  const Action& a = pool[rng.below(pool.size())];
  Trace t = mu.component(a.lifeline);
  std::size_t pos = rng.below(t.size() + 1);
  t.insert(t.begin() + static_cast<std::ptrdiff_t>(pos), a);
  return mu.with_component(a.lifeline, std::move(t));
}

}  // namespace

MultiTrace mutate(const MultiTrace& mu, MutationKind kind, SplitMix64& rng,
                  const MutationAux& aux) {
  switch (kind) {
    case MutationKind::Sact:
      return swap_actions(mu, rng);
    case MutationKind::Scmp:
      return swap_components(mu, aux, rng);
    case MutationKind::Nois:
      return insert_noise(mu, aux, rng);
  }
  return mu;
}

const char* to_string(RecordKind k) {
  switch (k) {
    case RecordKind::Acpt:
      return "ACPT";
    case RecordKind::Pref:
      return "PREF";
    case RecordKind::Sact:
      return "SACT";
    case RecordKind::Scmp:
      return "SCMP";
    case RecordKind::Nois:
      return "NOIS";
  }
  return "?";
}

std::vector<BenchRecord> run_bench(const InteractionModel& model,
                                   const BenchOptions& options) {
  SplitMix64 rng(options.seed);
  GenerationCriteria criteria = options.criteria;
  criteria.seed = options.seed;
  const std::vector<MultiTrace> accepted = generate_accepted(model, criteria);

  std::vector<std::vector<MultiTrace>> prefixes;
  std::vector<MultiTrace> pool;
  for (const auto& mu : accepted) {
    prefixes.push_back(select_prefixes(mu, options.prefixes_per_trace, rng));
    pool.insert(pool.end(), prefixes.back().begin(), prefixes.back().end());
  }

  MutationAux aux;
  aux.alphabet = options.alphabet;
  if (aux.alphabet.empty()) {
    auto acts = actions_of(model.root);
    aux.alphabet.assign(acts.begin(), acts.end());
  }

  struct Planned {
    std::string name;
    RecordKind kind;
    MultiTrace mu;
  };
  std::vector<Planned> plan;
  for (std::size_t t = 0; t < accepted.size(); ++t) {
    const std::string acpt = "acpt" + std::to_string(t);
    plan.push_back({acpt, RecordKind::Acpt, accepted[t]});
    for (std::size_t p = 0; p < prefixes[t].size(); ++p) {
      const MultiTrace& pref = prefixes[t][p];
      const std::string name = acpt + "_pref" + std::to_string(p);
      plan.push_back({name, RecordKind::Pref, pref});

      std::vector<const MultiTrace*> partners;
      for (const auto& q : pool) {
        if (!(q == pref)) partners.push_back(&q);
      }
      for (std::size_t m = 0; m < options.mutants_per_prefix; ++m) {
        const std::string suffix = std::to_string(m);
        try {
          plan.push_back({name + "_sact" + suffix, RecordKind::Sact,
                          mutate(pref, MutationKind::Sact, rng)});
        } catch (const MutationError&) {
        }
        if (!partners.empty()) {
          aux.other = *partners[rng.below(partners.size())];
          try {
            plan.push_back({name + "_scmp" + suffix, RecordKind::Scmp,
                            mutate(pref, MutationKind::Scmp, rng, aux)});
          } catch (const MutationError&) {
          }
          aux.other.reset();
        }
        try {
          plan.push_back({name + "_nois" + suffix, RecordKind::Nois,
                          mutate(pref, MutationKind::Nois, rng, aux)});
        } catch (const MutationError&) {
        }
      }
    }
  }

  std::vector<BenchRecord> rows;
  rows.reserve(plan.size());
  for (auto& item : plan) {
    ExplorationReport r = analyze(model, item.mu, options.search);
    rows.push_back({std::move(item.name), item.kind, std::move(item.mu),
                    r.verdict, r.elapsed_seconds, r.nodes_explored});
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows) {
  out << kBenchCsvHeader << '\n';
  char time[32];
  for (const auto& r : rows) {
    std::snprintf(time, sizeof time, "%.6f", r.time_seconds);
    out << r.name << ',' << to_string(r.kind) << ',' << to_string(r.verdict)
        << ',' << time << ',' << r.nodes_explored << '\n';
  }
}

}  // namespace mtrv
