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

// Actions, signatures and multi-traces: one local trace per lifeline with no
// ordering between lifelines, plus the algebra used to interpret interactions
// (sequencing, interleaving, alternative, bounded Kleene closures) and the
// multi-prefix relation.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtrv/symbol.hpp"

namespace mtrv {

enum class ActionKind : std::uint8_t { Emission, Reception };

/// One communication event `l!m` or `l?m`.
struct Action {
  Lifeline lifeline;
  ActionKind kind;
  Message message;

  static Action emission(std::string_view l, std::string_view m) {
    return {Lifeline(l), ActionKind::Emission, Message(m)};
  }
  static Action reception(std::string_view l, std::string_view m) {
    return {Lifeline(l), ActionKind::Reception, Message(m)};
  }

  friend bool operator==(const Action&, const Action&) = default;
  friend auto operator<=>(const Action&, const Action&) = default;
};

/// The lifeline an action occurs on.
inline const Lifeline& owner(const Action& a) { return a.lifeline; }

std::string to_string(const Action& a);

/// Parses `IDENT ("!"|"?") IDENT`, surrounding whitespace allowed.
Action parse_action(std::string_view text);

using Trace = std::vector<Action>;

/// Finite set of lifelines. Iteration order is the declaration order;
/// equality ignores order.
class Signature {
 public:
  Signature();
  /// Throws PreconditionError on duplicates.
  explicit Signature(std::vector<Lifeline> declared);
  Signature(std::initializer_list<std::string_view> names);

  const std::vector<Lifeline>& lifelines() const { return data_->declared; }
  /// Lifelines in name order; multi-trace components are stored in this order.
  const std::vector<Lifeline>& sorted() const { return data_->sorted; }
  std::size_t size() const { return data_->sorted.size(); }
  bool empty() const { return data_->sorted.empty(); }

  bool contains(const Lifeline& l) const { return slot(l).has_value(); }
  /// Position of `l` in sorted().
  std::optional<std::size_t> slot(const Lifeline& l) const;

  /// This signature minus `h`. Throws SignatureError if `h` is absent.
  Signature without(const Lifeline& h) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.data_ == b.data_ || a.data_->sorted == b.data_->sorted;
  }

 private:
  struct Data {
    std::vector<Lifeline> declared;
    std::vector<Lifeline> sorted;
  };
  std::shared_ptr<const Data> data_;
};

std::string to_string(const Signature& s);

enum class Side { Left, Right };

/// A tuple of traces indexed by the lifelines of a signature. Every action
/// stored under lifeline l occurs on l.
class MultiTrace {
 public:
  /// The empty multi-trace over `sig`.
  explicit MultiTrace(Signature sig);
  /// Throws SignatureError if a key is not in `sig`, is repeated, or holds an
  /// action of another lifeline. Missing keys get the empty trace.
  MultiTrace(Signature sig, std::vector<std::pair<Lifeline, Trace>> components);

  const Signature& signature() const { return sig_; }

  /// Throws SignatureError if `l` is not in the signature.
  const Trace& component(const Lifeline& l) const;
  /// Component of the i-th lifeline of signature().sorted().
  const Trace& component_at(std::size_t slot) const { return components_[slot]; }

  /// Cumulative length over all components.
  std::size_t length() const { return length_; }
  bool is_empty() const { return length_ == 0; }

  /// Copy with the component on `l` replaced by `t`.
  MultiTrace with_component(const Lifeline& l, Trace t) const;

  std::size_t hash() const;

  friend bool operator==(const MultiTrace& a, const MultiTrace& b) {
    return a.length_ == b.length_ && a.sig_ == b.sig_ &&
           a.components_ == b.components_;
  }
  friend std::strong_ordering operator<=>(const MultiTrace& a,
                                          const MultiTrace& b);

 private:
  friend MultiTrace remove_lifeline(const MultiTrace&, const Lifeline&);
  MultiTrace(Signature sig, std::vector<Trace> components, std::size_t length)
      : sig_(std::move(sig)),
        components_(std::move(components)),
        length_(length) {}

  Signature sig_;
  std::vector<Trace> components_;
  std::size_t length_ = 0;
};

/// Deduplicated, ordered set of multi-traces on one common signature.
class MultiTraceSet {
 public:
  using const_iterator = std::set<MultiTrace>::const_iterator;

  explicit MultiTraceSet(Signature sig) : sig_(std::move(sig)) {}
  MultiTraceSet(Signature sig, std::initializer_list<MultiTrace> elements);

  const Signature& signature() const { return sig_; }

  /// Throws SignatureError on a foreign signature. Returns true if new.
  bool insert(MultiTrace mu);
  void merge(const MultiTraceSet& other);
  bool contains(const MultiTrace& mu) const { return elements_.count(mu) != 0; }

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const_iterator begin() const { return elements_.begin(); }
  const_iterator end() const { return elements_.end(); }

  friend bool operator==(const MultiTraceSet& a, const MultiTraceSet& b) {
    return a.sig_ == b.sig_ && a.elements_ == b.elements_;
  }

 private:
  Signature sig_;
  std::set<MultiTrace> elements_;
};

/// No length cap.
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// Adds `a` at the front (Left) or back (Right) of its lifeline's component.
MultiTrace attach(const MultiTrace& mu, const Action& a, Side side);

/// Drops the component of `h`; the result lives on signature minus `h`.
MultiTrace remove_lifeline(const MultiTrace& mu, const Lifeline& h);
MultiTraceSet remove_lifeline(const MultiTraceSet& t, const Lifeline& h);

/// Componentwise concatenation `mu1 ; mu2`.
MultiTrace sequence(const MultiTrace& mu1, const MultiTrace& mu2);
/// All interleavings `mu1 || mu2`.
MultiTraceSet interleave(const MultiTrace& mu1, const MultiTrace& mu2);
/// `{mu1, mu2}`.
MultiTraceSet alternative(const MultiTrace& mu1, const MultiTrace& mu2);

// Lifted operators. When `max_len` is given, elements longer than it are
// dropped from the result; since lengths add up under `;` and `||`, capping
// intermediate results this way equals filtering the uncapped result.
MultiTraceSet sequence(const MultiTraceSet& t1, const MultiTraceSet& t2,
                       std::size_t max_len = kUnbounded);
MultiTraceSet interleave(const MultiTraceSet& t1, const MultiTraceSet& t2,
                         std::size_t max_len = kUnbounded);
MultiTraceSet alternative(const MultiTraceSet& t1, const MultiTraceSet& t2);

enum class ClosureOp { Seq, Par };

/// Union of the powers T^0 .. T^bound of `t` under `;` or `||`, where
/// T^0 = {empty}. Empty elements of `t` are skipped when building powers.
MultiTraceSet closure(ClosureOp op, const MultiTraceSet& t, std::size_t bound,
                      std::size_t max_len = kUnbounded);

/// True iff every component of `small` is a prefix of the same component of
/// `big`. Throws SignatureError when signatures differ.
bool is_multi_prefix(const MultiTrace& small, const MultiTrace& big);

/// Reads the line-oriented multi-trace format:
///   [lifeline] eps
///   [lifeline] l!m.l?n
/// `#` starts a comment line; blank lines are ignored. The order of lines is
/// the signature's declaration order.
MultiTrace parse_multitrace(std::string_view text);

/// Writes the format read by parse_multitrace, one line per lifeline in
/// declaration order, each terminated by a newline.
std::string to_string(const MultiTrace& mu);

}  // namespace mtrv

template <>
struct std::hash<mtrv::Action> {
  std::size_t operator()(const mtrv::Action& a) const {
    return a.lifeline.hash() * 31u + a.message.hash() * 7u +
           static_cast<std::size_t>(a.kind);
  }
};

template <>
struct std::hash<mtrv::MultiTrace> {
  std::size_t operator()(const mtrv::MultiTrace& mu) const { return mu.hash(); }
};
