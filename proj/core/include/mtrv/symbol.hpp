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

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace mtrv {

/// Returns true iff `s` matches `[A-Za-z_][A-Za-z0-9_]*`.
bool is_identifier(std::string_view s);

namespace detail {

// Interned, immutable identifier. Two symbols with the same text share one
// storage slot, so equality is a pointer comparison while ordering stays
// lexicographic (and therefore deterministic across runs).
class Symbol {
 public:
  explicit Symbol(std::string_view text);

  const std::string& str() const { return *text_; }
  std::size_t hash() const { return std::hash<const void*>{}(text_); }

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.text_ == b.text_;
  }
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    if (a.text_ == b.text_) return std::strong_ordering::equal;
    return a.text_->compare(*b.text_) < 0 ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
  }

 private:
  const std::string* text_;
};

}  // namespace detail

/// Name of a subsystem interface.
class Lifeline {
 public:
  /// Throws PreconditionError unless `name` is an identifier.
  explicit Lifeline(std::string_view name);

  const std::string& name() const { return sym_.str(); }
  std::size_t hash() const { return sym_.hash(); }

  friend bool operator==(const Lifeline&, const Lifeline&) = default;
  friend auto operator<=>(const Lifeline&, const Lifeline&) = default;

 private:
  detail::Symbol sym_;
};

/// Name of a message carried by an action.
class Message {
 public:
  explicit Message(std::string_view name);

  const std::string& name() const { return sym_.str(); }
  std::size_t hash() const { return sym_.hash(); }

  friend bool operator==(const Message&, const Message&) = default;
  friend auto operator<=>(const Message&, const Message&) = default;

 private:
  detail::Symbol sym_;
};

}  // namespace mtrv

template <>
struct std::hash<mtrv::Lifeline> {
  std::size_t operator()(const mtrv::Lifeline& l) const { return l.hash(); }
};

template <>
struct std::hash<mtrv::Message> {
  std::size_t operator()(const mtrv::Message& m) const { return m.hash(); }
};
