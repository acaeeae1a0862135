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

// CNF formulas, DIMACS input, and the reduction of satisfiability to
// multi-prefix recognition: one lifeline l<j> per clause, the multi-trace
// (l1?m, ..., lk?m), and the interaction
//
//   seq(alt(i_x1, i_~x1), seq(alt(i_x2, i_~x2), ... alt(i_xn, i_~xn)))
//
// where i_lit sequences l<j>?m over the clauses j containing lit. The
// multi-trace passes iff the formula is satisfiable.

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtrv/interaction.hpp"
#include "mtrv/multitrace.hpp"
#include "mtrv/search.hpp"

namespace mtrv::sat {

struct Literal {
  std::size_t variable;  // >= 1
  bool negated;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

class Clause {
 public:
  /// Throws PreconditionError if empty or if a literal names variable 0.
  /// Repeated literals are collapsed, first occurrence kept.
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  /// Contains both x and ~x.
  bool is_tautology() const;
  bool contains(const Literal& l) const;

 private:
  std::vector<Literal> literals_;
};

struct CnfFormula {
  std::size_t num_variables = 0;
  std::vector<Clause> clauses;

  /// Throws PreconditionError on an out-of-range literal or no clause.
  CnfFormula(std::size_t n, std::vector<Clause> cs);
};

/// Reads DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>` header,
/// then zero-terminated clauses that may span lines. A line starting with
/// `%` ends the input (SATLIB convention).
CnfFormula parse_dimacs(std::string_view text);

/// Throws PreconditionError unless every clause has exactly three literals.
void require_3cnf(const CnfFormula& phi);

struct Reduction {
  InteractionModel model;
  MultiTrace mu;
};

Reduction reduce_cnf(const CnfFormula& phi);

/// Exhaustive check over all assignments. Throws PreconditionError above
/// kMaxBruteForceVariables.
inline constexpr std::size_t kMaxBruteForceVariables = 24;
bool brute_force_sat(const CnfFormula& phi);

/// Satisfiability decided by analyzing the reduction.
bool sat_solve_via_rv(const CnfFormula& phi, const SearchConfig& cfg = {});

}  // namespace mtrv::sat
