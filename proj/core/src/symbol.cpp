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

#include "mtrv/symbol.hpp"

#include <mutex>
#include <unordered_set>

#include "mtrv/errors.hpp"

namespace mtrv {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(s.front())) return false;
  for (char c : s) {
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

namespace detail {

namespace {

struct InternTable {
  std::mutex mutex;
  // Node-based container: element addresses are stable for the program's
  // lifetime, which is what Symbol relies on.
  std::unordered_set<std::string> strings;
};

InternTable& table() {
  static InternTable* t = new InternTable();
  return *t;
}

}  // namespace

Symbol::Symbol(std::string_view text) {
  InternTable& t = table();
  std::lock_guard<std::mutex> lock(t.mutex);
  text_ = &*t.strings.emplace(text).first;
}

}  // namespace detail

namespace {

std::string_view checked(std::string_view name, const char* what) {
  if (!is_identifier(name)) {
    throw PreconditionError(std::string("invalid ") + what + " name '" +
                            std::string(name) + "'");
  }
  return name;
}

}  // namespace

Lifeline::Lifeline(std::string_view name) : sym_(checked(name, "lifeline")) {}

Message::Message(std::string_view name) : sym_(checked(name, "message")) {}

}  // namespace mtrv
