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

#include "mtrv/sat.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>

#include "mtrv/errors.hpp"

namespace mtrv::sat {

Clause::Clause(std::vector<Literal> literals) {
  if (literals.empty()) throw PreconditionError("empty clause");
  for (const auto& l : literals) {
    if (l.variable == 0) throw PreconditionError("literal on variable 0");
    if (!contains(l)) literals_.push_back(l);
  }
}

bool Clause::contains(const Literal& l) const {
  return std::find(literals_.begin(), literals_.end(), l) != literals_.end();
}

bool Clause::is_tautology() const {
  for (const auto& l : literals_) {
    if (contains(Literal{l.variable, !l.negated})) return true;
  }
  return false;
}

CnfFormula::CnfFormula(std::size_t n, std::vector<Clause> cs)
    : num_variables(n), clauses(std::move(cs)) {
  if (clauses.empty()) throw PreconditionError("formula has no clause");
  for (const auto& c : clauses) {
    for (const auto& l : c.literals()) {
      if (l.variable > num_variables) {
        throw PreconditionError("variable " + std::to_string(l.variable) +
                                " exceeds declared count " +
                                std::to_string(num_variables));
      }
    }
  }
}

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> split(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) out.push_back({line.substr(start, i - start), line_no, start + 1});
  }
  return out;
}

long long to_int(const Token& t) {
  long long v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected an integer, found '" + std::string(t.text) + "'",
                     t.line, t.column);
  }
  return v;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  std::optional<std::size_t> declared_vars, declared_clauses;
  std::vector<Clause> clauses;
  std::vector<Literal> open;
  std::size_t open_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split(line, line_no);
    if (tokens.empty()) continue;
    if (tokens[0].text == "c" || tokens[0].text.front() == 'c') continue;
    if (tokens[0].text.front() == '%') break;
    if (tokens[0].text == "p") {
      if (declared_vars) {
        throw ParseError("duplicate problem line", line_no, 1);
      }
      if (tokens.size() != 4 || tokens[1].text != "cnf") {
        throw ParseError("expected 'p cnf <variables> <clauses>'", line_no, 1);
      }
      long long n = to_int(tokens[2]);
      long long k = to_int(tokens[3]);
      if (n < 0 || k < 0) {
        throw ParseError("negative count in problem line", line_no, 1);
      }
      declared_vars = static_cast<std::size_t>(n);
      declared_clauses = static_cast<std::size_t>(k);
      continue;
    }
    if (!declared_vars) {
      throw ParseError("clause before 'p cnf' problem line", line_no,
                       tokens[0].column);
    }
    for (const auto& t : tokens) {
      long long v = to_int(t);
      if (v == 0) {
        if (open.empty()) {
          throw ParseError("empty clause", t.line, t.column);
        }
        clauses.emplace_back(std::move(open));
        open.clear();
        continue;
      }
      std::size_t var = static_cast<std::size_t>(v < 0 ? -v : v);
      if (var > *declared_vars) {
        throw ParseError("variable " + std::to_string(var) +
                             " exceeds declared count " +
                             std::to_string(*declared_vars),
                         t.line, t.column);
      }
      if (open.empty()) open_line = t.line;
      open.push_back(Literal{var, v < 0});
    }
  }

  if (!declared_vars) throw ParseError("missing 'p cnf' problem line", 0, 0);
  if (!open.empty()) {
    throw ParseError("clause not terminated by 0", open_line, 1);
  }
  if (clauses.size() != *declared_clauses) {
    throw ParseError("problem line declares " +
                         std::to_string(*declared_clauses) + " clauses, found " +
                         std::to_string(clauses.size()),
                     0, 0);
  }
  try {
    return CnfFormula(*declared_vars, std::move(clauses));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

void require_3cnf(const CnfFormula& phi) {
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    if (phi.clauses[j].size() != 3) {
      throw PreconditionError("clause " + std::to_string(j + 1) + " has " +
                              std::to_string(phi.clauses[j].size()) +
                              " distinct literals, expected 3");
    }
  }
}

namespace {

Interaction right_nested_seq(std::vector<Interaction> parts) {
  if (parts.empty()) return Interaction::empty();
  Interaction acc = parts.back();
  for (std::size_t k = parts.size() - 1; k-- > 0;) {
    acc = Interaction::seq(parts[k], acc);
  }
  return acc;
}

}  // namespace

Reduction reduce_cnf(const CnfFormula& phi) {
  const Message m("m");
  std::vector<Lifeline> lifelines;
  lifelines.reserve(phi.clauses.size());
  for (std::size_t j = 1; j <= phi.clauses.size(); ++j) {
    lifelines.emplace_back("l" + std::to_string(j));
  }
  Signature sig(lifelines);

  auto literal_term = [&](Literal lit) {
    std::vector<Interaction> receptions;
    for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
      if (phi.clauses[j].contains(lit)) {
        receptions.push_back(
            Interaction::act(Action{lifelines[j], ActionKind::Reception, m}));
      }
    }
    return right_nested_seq(std::move(receptions));
  };

  std::vector<Interaction> choices;
  choices.reserve(phi.num_variables);
  for (std::size_t x = 1; x <= phi.num_variables; ++x) {
    choices.push_back(Interaction::alt(literal_term({x, false}),
                                       literal_term({x, true})));
  }

  std::vector<std::pair<Lifeline, Trace>> comps;
  for (const auto& l : lifelines) {
    comps.emplace_back(l, Trace{Action{l, ActionKind::Reception, m}});
  }
  MultiTrace mu(sig, std::move(comps));
  return Reduction{InteractionModel(sig, right_nested_seq(std::move(choices))),
                   std::move(mu)};
}

bool brute_force_sat(const CnfFormula& phi) {
  if (phi.num_variables > kMaxBruteForceVariables) {
    throw PreconditionError("brute force limited to " +
                            std::to_string(kMaxBruteForceVariables) +
                            " variables, formula has " +
                            std::to_string(phi.num_variables));
  }
  // Bit x-1 of an assignment holds the value of variable x.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  for (const auto& c : phi.clauses) {
    std::uint32_t pos = 0, neg = 0;
    for (const auto& l : c.literals()) {
      (l.negated ? neg : pos) |= std::uint32_t{1} << (l.variable - 1);
    }
    masks.emplace_back(pos, neg);
  }
  const std::uint64_t total = std::uint64_t{1} << phi.num_variables;
  for (std::uint64_t a = 0; a < total; ++a) {
    auto assignment = static_cast<std::uint32_t>(a);
    bool all = std::all_of(masks.begin(), masks.end(), [&](const auto& pn) {
      return (assignment & pn.first) != 0 || (~assignment & pn.second) != 0;
    });
    if (all) return true;
  }
  return false;
}

bool sat_solve_via_rv(const CnfFormula& phi, const SearchConfig& cfg) {
  Reduction r = reduce_cnf(phi);
  return analyze(r.model, r.mu, cfg).verdict == Verdict::Pass;
}

}  // namespace mtrv::sat
