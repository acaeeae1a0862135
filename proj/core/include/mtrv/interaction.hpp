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

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mtrv/multitrace.hpp"

namespace mtrv {

enum class TermKind { Empty, Act, Seq, Par, Alt, LoopS, LoopP };

/// Immutable interaction term over {0, action, seq, par, alt, loopS, loopP}.
///
/// Terms are shared trees: copying is cheap and sub-terms keep their identity
/// when reused by a rewrite (see identity()). Equality is structural.
class Interaction {
 public:
  /// The empty interaction.
  Interaction();

  static Interaction empty() { return Interaction(); }
  static Interaction act(Action a);
  static Interaction seq(Interaction l, Interaction r);
  static Interaction par(Interaction l, Interaction r);
  static Interaction alt(Interaction l, Interaction r);
  static Interaction loop_s(Interaction body);
  static Interaction loop_p(Interaction body);

  TermKind kind() const;
  bool is_empty() const { return kind() == TermKind::Empty; }
  bool is_loop() const {
    return kind() == TermKind::LoopS || kind() == TermKind::LoopP;
  }

  /// Only valid on Act.
  const Action& action() const;
  /// Left operand of seq/par/alt, or the body of a loop.
  const Interaction& left() const;
  /// Right operand of seq/par/alt.
  const Interaction& right() const;
  const Interaction& body() const { return left(); }

  /// Node count.
  std::size_t size() const;
  std::size_t depth() const;
  std::size_t hash() const;

  /// Address of the shared node. Rewrites that keep a sub-term (such as the
  /// loop re-inserted after an unfolding) keep its identity.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Interaction& a, const Interaction& b);

 private:
  struct Node;
  explicit Interaction(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Interaction make(TermKind k, std::optional<Action> a,
                          std::vector<Interaction> children);

  std::shared_ptr<const Node> node_;
};

struct Interaction::Node {
  TermKind kind = TermKind::Empty;
  std::optional<Action> action;
  std::vector<Interaction> children;
  std::size_t size = 1;
  std::size_t depth = 1;
  std::size_t hash = 0;
};

inline TermKind Interaction::kind() const { return node_->kind; }
inline std::size_t Interaction::size() const { return node_->size; }
inline std::size_t Interaction::depth() const { return node_->depth; }
inline std::size_t Interaction::hash() const { return node_->hash; }

/// An interaction bound to its signature. The signature may declare
/// lifelines the term never uses.
struct InteractionModel {
  Signature signature;
  Interaction root;

  /// Throws SignatureError when `root` uses an undeclared lifeline.
  InteractionModel(Signature sig, Interaction term);

  /// Skips the lifeline check; for terms derived from a checked model.
  struct Unchecked {};
  InteractionModel(Signature sig, Interaction term, Unchecked)
      : signature(std::move(sig)), root(std::move(term)) {}

  friend bool operator==(const InteractionModel&,
                         const InteractionModel&) = default;
};

/// Lifelines of all action leaves.
std::set<Lifeline> lifelines_of(const Interaction& i);

/// All distinct actions occurring in `i`, in name order.
std::set<Action> actions_of(const Interaction& i);

/// Replaces every action on `h` by the empty interaction, keeping the tree
/// shape intact. No simplification is performed.
Interaction remove_lifeline(const Interaction& i, const Lifeline& h);
/// Same on a model; the signature loses `h`. Throws SignatureError if `h` is
/// not declared.
InteractionModel remove_lifeline(const InteractionModel& m, const Lifeline& h);

/// Optional clean-up: drops empty operands of seq/par, collapses
/// alt(0,0) and loops over 0. Never applied implicitly.
Interaction simplify(const Interaction& i);

/// Canonical term text, e.g. `seq(l!a,loopS(alt(0,m?b)))`.
std::string to_string(const Interaction& i);

/// Canonical model text: `signature{a,b} interaction{ <term> }` plus newline.
std::string to_string(const InteractionModel& m);

/// Reads
///   signature { IDENT (, IDENT)* } interaction { term }
/// with term ::= 0 | IDENT(!|?)IDENT | (seq|par|alt)(term,term)
///             | (loopS|loopP)(term). `#` comments allowed.
InteractionModel parse_interaction(std::string_view text);

/// Parses a bare term; every lifeline it uses must be in `sig`.
Interaction parse_term(std::string_view text, const Signature& sig);

}  // namespace mtrv

template <>
struct std::hash<mtrv::Interaction> {
  std::size_t operator()(const mtrv::Interaction& i) const { return i.hash(); }
};
