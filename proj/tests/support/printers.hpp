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

// gtest value printers, found by argument-dependent lookup.
#pragma once

#include <ostream>

#include "mtrv/interaction.hpp"
#include "mtrv/multitrace.hpp"
#include "mtrv/search.hpp"

namespace mtrv {

inline void PrintTo(const Signature& s, std::ostream* os) { *os << to_string(s); }

inline void PrintTo(const MultiTrace& mu, std::ostream* os) {
  *os << "\n" << to_string(mu);
}

inline void PrintTo(const MultiTraceSet& s, std::ostream* os) {
  *os << s.size() << " multi-traces";
  for (const auto& mu : s) *os << "\n--\n" << to_string(mu);
}

inline void PrintTo(const Interaction& i, std::ostream* os) { *os << to_string(i); }

inline void PrintTo(const InteractionModel& m, std::ostream* os) {
  *os << to_string(m);
}

inline void PrintTo(const Action& a, std::ostream* os) { *os << to_string(a); }

inline void PrintTo(const RuleTag& t, std::ostream* os) { *os << to_string(t); }

inline void PrintTo(const Node& n, std::ostream* os) {
  *os << to_string(n.model) << to_string(n.mu);
}

}  // namespace mtrv
