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

#include "mtrv/multitrace.hpp"

#include <algorithm>
#include <functional>

#include "mtrv/errors.hpp"
#include "text_cursor.hpp"

namespace mtrv {

std::string to_string(const Action& a) {
  std::string out = a.lifeline.name();
  out += a.kind == ActionKind::Emission ? '!' : '?';
  out += a.message.name();
  return out;
}

namespace {

Action read_action(detail::TextCursor& in) {
  std::string_view l = in.expect_identifier("lifeline name");
  in.skip_space(true);
  ActionKind kind;
  if (in.consume('!')) {
    kind = ActionKind::Emission;
  } else if (in.consume('?')) {
    kind = ActionKind::Reception;
  } else {
    in.fail("expected '!' or '?'" + in.found());
  }
  in.skip_space(true);
  std::string_view m = in.expect_identifier("message name");
  return {Lifeline(l), kind, Message(m)};
}

}  // namespace

Action parse_action(std::string_view text) {
  detail::TextCursor in(text);
  in.skip_space();
  Action a = read_action(in);
  in.skip_space();
  if (!in.at_end()) in.fail("trailing characters after action" + in.found());
  return a;
}

// --- Signature -------------------------------------------------------------

Signature::Signature() : data_(std::make_shared<const Data>()) {}

Signature::Signature(std::vector<Lifeline> declared) {
  std::vector<Lifeline> sorted = declared;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw PreconditionError("duplicate lifeline '" + dup->name() +
                            "' in signature");
  }
  data_ = std::make_shared<const Data>(
      Data{std::move(declared), std::move(sorted)});
}

Signature::Signature(std::initializer_list<std::string_view> names)
    : Signature([&] {
        std::vector<Lifeline> ls;
        for (auto n : names) ls.emplace_back(n);
        return ls;
      }()) {}

std::optional<std::size_t> Signature::slot(const Lifeline& l) const {
  const auto& s = data_->sorted;
  auto it = std::lower_bound(s.begin(), s.end(), l);
  if (it == s.end() || *it != l) return std::nullopt;
  return static_cast<std::size_t>(it - s.begin());
}

Signature Signature::without(const Lifeline& h) const {
  if (!contains(h)) {
    throw SignatureError("lifeline '" + h.name() + "' is not in signature " +
                         to_string(*this));
  }
  std::vector<Lifeline> rest;
  rest.reserve(size() - 1);
  for (const auto& l : data_->declared) {
    if (l != h) rest.push_back(l);
  }
  return Signature(std::move(rest));
}

std::string to_string(const Signature& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : s.lifelines()) {
    if (!first) out += ',';
    out += l.name();
    first = false;
  }
  return out + "}";
}

// --- MultiTrace ------------------------------------------------------------

MultiTrace::MultiTrace(Signature sig)
    : sig_(std::move(sig)), components_(sig_.size()) {}

MultiTrace::MultiTrace(Signature sig,
                       std::vector<std::pair<Lifeline, Trace>> components)
    : MultiTrace(std::move(sig)) {
  std::vector<bool> seen(sig_.size(), false);
  for (auto& [l, t] : components) {
    auto s = sig_.slot(l);
    if (!s) {
      throw SignatureError("lifeline '" + l.name() + "' is not in signature " +
                           to_string(sig_));
    }
    if (seen[*s]) {
      throw SignatureError("component for lifeline '" + l.name() +
                           "' given twice");
    }
    seen[*s] = true;
    for (const auto& a : t) {
      if (a.lifeline != l) {
        throw SignatureError("action " + to_string(a) +
                             " stored on lifeline '" + l.name() + "'");
      }
    }
    length_ += t.size();
    components_[*s] = std::move(t);
  }
}

const Trace& MultiTrace::component(const Lifeline& l) const {
  auto s = sig_.slot(l);
  if (!s) {
    throw SignatureError("lifeline '" + l.name() + "' is not in signature " +
                         to_string(sig_));
  }
  return components_[*s];
}

MultiTrace MultiTrace::with_component(const Lifeline& l, Trace t) const {
  auto s = sig_.slot(l);
  if (!s) {
    throw SignatureError("lifeline '" + l.name() + "' is not in signature " +
                         to_string(sig_));
  }
  for (const auto& a : t) {
    if (a.lifeline != l) {
      throw SignatureError("action " + to_string(a) + " stored on lifeline '" +
                           l.name() + "'");
    }
  }
  std::vector<Trace> comps = components_;
  std::size_t len = length_ - comps[*s].size() + t.size();
  comps[*s] = std::move(t);
  return MultiTrace(sig_, std::move(comps), len);
}

std::size_t MultiTrace::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ sig_.size();
  std::hash<Action> ha;
  for (const auto& t : components_) {
    h = h * 1099511628211ull + t.size();
    for (const auto& a : t) h = h * 1099511628211ull + ha(a);
  }
  return h;
}

std::strong_ordering operator<=>(const MultiTrace& a, const MultiTrace& b) {
  if (!(a.sig_ == b.sig_)) {
    const auto& x = a.sig_.sorted();
    const auto& y = b.sig_.sorted();
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(),
                                                  y.end());
  }
  return std::lexicographical_compare_three_way(
      a.components_.begin(), a.components_.end(), b.components_.begin(),
      b.components_.end());
}

// --- MultiTraceSet ---------------------------------------------------------

MultiTraceSet::MultiTraceSet(Signature sig,
                             std::initializer_list<MultiTrace> elements)
    : MultiTraceSet(std::move(sig)) {
  for (const auto& mu : elements) insert(mu);
}

bool MultiTraceSet::insert(MultiTrace mu) {
  if (!(mu.signature() == sig_)) {
    throw SignatureError("multi-trace on " + to_string(mu.signature()) +
                         " inserted into a set on " + to_string(sig_));
  }
  return elements_.insert(std::move(mu)).second;
}

void MultiTraceSet::merge(const MultiTraceSet& other) {
  if (!(other.sig_ == sig_)) {
    throw SignatureError("cannot merge sets on " + to_string(other.sig_) +
                         " and " + to_string(sig_));
  }
  elements_.insert(other.elements_.begin(), other.elements_.end());
}

// --- Algebra ---------------------------------------------------------------

namespace {

void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) {
    throw SignatureError("signature mismatch: " + to_string(a) + " vs " +
                         to_string(b));
  }
}

// All shuffles of two words, deduplicated.
std::set<Trace> shuffle(const Trace& u, const Trace& v) {
  std::set<Trace> out;
  Trace buf;
  buf.reserve(u.size() + v.size());
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i,
                                                          std::size_t j) {
    if (i == u.size() && j == v.size()) {
      out.insert(buf);
      return;
    }
    if (i < u.size()) {
      buf.push_back(u[i]);
      go(i + 1, j);
      buf.pop_back();
    }
    if (j < v.size()) {
      buf.push_back(v[j]);
      go(i, j + 1);
      buf.pop_back();
    }
  };
  go(0, 0);
  return out;
}

}  // namespace

MultiTrace attach(const MultiTrace& mu, const Action& a, Side side) {
  const Trace& old = mu.component(a.lifeline);
  Trace t;
  t.reserve(old.size() + 1);
  if (side == Side::Left) t.push_back(a);
  t.insert(t.end(), old.begin(), old.end());
  if (side == Side::Right) t.push_back(a);
  return mu.with_component(a.lifeline, std::move(t));
}

MultiTrace remove_lifeline(const MultiTrace& mu, const Lifeline& h) {
  Signature rest = mu.sig_.without(h);
  std::size_t slot = *mu.sig_.slot(h);
  std::vector<Trace> comps;
  comps.reserve(rest.size());
  for (std::size_t i = 0; i < mu.components_.size(); ++i) {
    if (i != slot) comps.push_back(mu.components_[i]);
  }
  return MultiTrace(std::move(rest), std::move(comps),
                    mu.length_ - mu.components_[slot].size());
}

MultiTraceSet remove_lifeline(const MultiTraceSet& t, const Lifeline& h) {
  MultiTraceSet out(t.signature().without(h));
  for (const auto& mu : t) out.insert(remove_lifeline(mu, h));
  return out;
}

MultiTrace sequence(const MultiTrace& mu1, const MultiTrace& mu2) {
  require_same(mu1.signature(), mu2.signature());
  const auto& sorted = mu1.signature().sorted();
  std::vector<std::pair<Lifeline, Trace>> comps;
  comps.reserve(sorted.size());
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    Trace t = mu1.component_at(s);
    const Trace& tail = mu2.component_at(s);
    t.insert(t.end(), tail.begin(), tail.end());
    comps.emplace_back(sorted[s], std::move(t));
  }
  return MultiTrace(mu1.signature(), std::move(comps));
}

MultiTraceSet interleave(const MultiTrace& mu1, const MultiTrace& mu2) {
  require_same(mu1.signature(), mu2.signature());
  const Signature& sig = mu1.signature();
  const auto& sorted = sig.sorted();
  // Interleaving acts independently on each lifeline, so the result is the
  // product of the per-component shuffles.
  std::vector<std::vector<Trace>> choices;
  choices.reserve(sorted.size());
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    auto words = shuffle(mu1.component_at(s), mu2.component_at(s));
    choices.emplace_back(words.begin(), words.end());
  }
  MultiTraceSet out(sig);
  std::vector<std::size_t> pick(sorted.size(), 0);
  while (true) {
    std::vector<std::pair<Lifeline, Trace>> comps;
    comps.reserve(sorted.size());
    for (std::size_t s = 0; s < sorted.size(); ++s) {
      comps.emplace_back(sorted[s], choices[s][pick[s]]);
    }
    out.insert(MultiTrace(sig, std::move(comps)));
    std::size_t s = 0;
    while (s < pick.size() && ++pick[s] == choices[s].size()) {
      pick[s] = 0;
      ++s;
    }
    if (s == pick.size()) break;
  }
  return out;
}

MultiTraceSet alternative(const MultiTrace& mu1, const MultiTrace& mu2) {
  require_same(mu1.signature(), mu2.signature());
  return MultiTraceSet(mu1.signature(), {mu1, mu2});
}

MultiTraceSet sequence(const MultiTraceSet& t1, const MultiTraceSet& t2,
                       std::size_t max_len) {
  require_same(t1.signature(), t2.signature());
  MultiTraceSet out(t1.signature());
  for (const auto& a : t1) {
    for (const auto& b : t2) {
      if (a.length() + b.length() > max_len) continue;
      out.insert(sequence(a, b));
    }
  }
  return out;
}

MultiTraceSet interleave(const MultiTraceSet& t1, const MultiTraceSet& t2,
                         std::size_t max_len) {
  require_same(t1.signature(), t2.signature());
  MultiTraceSet out(t1.signature());
  for (const auto& a : t1) {
    for (const auto& b : t2) {
      if (a.length() + b.length() > max_len) continue;
      out.merge(interleave(a, b));
    }
  }
  return out;
}

MultiTraceSet alternative(const MultiTraceSet& t1, const MultiTraceSet& t2) {
  require_same(t1.signature(), t2.signature());
  MultiTraceSet out = t1;
  out.merge(t2);
  return out;
}

MultiTraceSet closure(ClosureOp op, const MultiTraceSet& t, std::size_t bound,
                      std::size_t max_len) {
  const Signature& sig = t.signature();
  MultiTraceSet factors(sig);
  for (const auto& mu : t) {
    if (!mu.is_empty() && mu.length() <= max_len) factors.insert(mu);
  }
  MultiTraceSet result(sig, {MultiTrace(sig)});
  MultiTraceSet power = result;
  for (std::size_t j = 1; j <= bound; ++j) {
    power = op == ClosureOp::Seq ? sequence(factors, power, max_len)
                                 : interleave(factors, power, max_len);
    if (power.empty()) break;
    std::size_t before = result.size();
    result.merge(power);
    // Once a power adds nothing new, no later power can either.
    if (result.size() == before) break;
  }
  return result;
}

bool is_multi_prefix(const MultiTrace& small, const MultiTrace& big) {
  require_same(small.signature(), big.signature());
  for (std::size_t s = 0; s < small.signature().size(); ++s) {
    const Trace& p = small.component_at(s);
    const Trace& w = big.component_at(s);
    if (p.size() > w.size() || !std::equal(p.begin(), p.end(), w.begin())) {
      return false;
    }
  }
  return true;
}

// --- Text format -----------------------------------------------------------

MultiTrace parse_multitrace(std::string_view text) {
  detail::TextCursor in(text);
  std::vector<Lifeline> declared;
  std::vector<std::pair<Lifeline, Trace>> comps;
  while (true) {
    in.skip_space();
    if (in.at_end()) break;
    in.expect('[');
    in.skip_space(true);
    std::size_t decl_line = in.line(), decl_col = in.column();
    Lifeline l(in.expect_identifier("lifeline name"));
    for (const auto& d : declared) {
      if (d == l) {
        throw ParseError("duplicate lifeline declaration '" + l.name() + "'",
                         decl_line, decl_col);
      }
    }
    in.skip_space(true);
    in.expect(']');
    in.skip_space(true);
    Trace t;
    std::size_t line = in.line(), col = in.column();
    detail::TextCursor probe = in;
    std::string_view head = probe.identifier();
    probe.skip_space(true);
    if (head == "eps" && (probe.at_end() || probe.peek() == '\n')) {
      in = probe;
    } else {
      while (true) {
        line = in.line();
        col = in.column();
        Action a = read_action(in);
        if (a.lifeline != l) {
          throw ParseError("action " + to_string(a) +
                               " does not occur on declaring lifeline '" +
                               l.name() + "'",
                           line, col);
        }
        t.push_back(std::move(a));
        in.skip_space(true);
        if (!in.consume('.')) break;
        in.skip_space(true);
      }
    }
    in.skip_space(true);
    if (!in.at_end() && in.peek() != '\n') {
      in.fail("expected end of line" + in.found());
    }
    declared.push_back(l);
    comps.emplace_back(l, std::move(t));
  }
  if (declared.empty()) {
    throw ParseError("multi-trace declares no lifeline", in.line(),
                     in.column());
  }
  return MultiTrace(Signature(std::move(declared)), std::move(comps));
}

std::string to_string(const MultiTrace& mu) {
  std::string out;
  for (const auto& l : mu.signature().lifelines()) {
    out += '[';
    out += l.name();
    out += "] ";
    const Trace& t = mu.component(l);
    if (t.empty()) {
      out += "eps";
    } else {
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) out += '.';
        out += to_string(t[k]);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace mtrv
