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

#include "mtrv/interaction.hpp"

#include <algorithm>
#include <functional>

#include "mtrv/errors.hpp"
#include "text_cursor.hpp"

namespace mtrv {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

}  // namespace

Interaction::Interaction() {
  static const std::shared_ptr<const Node> kEmpty = [] {
    auto n = std::make_shared<Node>();
    n->hash = mix(0, static_cast<std::size_t>(TermKind::Empty));
    return std::shared_ptr<const Node>(std::move(n));
  }();
  node_ = kEmpty;
}

Interaction Interaction::make(TermKind k, std::optional<Action> a,
                              std::vector<Interaction> children) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  std::size_t h = mix(0, static_cast<std::size_t>(k));
  if (a) h = mix(h, std::hash<Action>{}(*a));
  for (const auto& c : children) {
    n->size += c.size();
    n->depth = std::max(n->depth, c.depth() + 1);
    h = mix(h, c.hash());
  }
  n->hash = h;
  n->action = std::move(a);
  n->children = std::move(children);
  return Interaction(std::move(n));
}

Interaction Interaction::act(Action a) {
  return make(TermKind::Act, std::move(a), {});
}
Interaction Interaction::seq(Interaction l, Interaction r) {
  return make(TermKind::Seq, std::nullopt, {std::move(l), std::move(r)});
}
Interaction Interaction::par(Interaction l, Interaction r) {
  return make(TermKind::Par, std::nullopt, {std::move(l), std::move(r)});
}
Interaction Interaction::alt(Interaction l, Interaction r) {
  return make(TermKind::Alt, std::nullopt, {std::move(l), std::move(r)});
}
Interaction Interaction::loop_s(Interaction body) {
  return make(TermKind::LoopS, std::nullopt, {std::move(body)});
}
Interaction Interaction::loop_p(Interaction body) {
  return make(TermKind::LoopP, std::nullopt, {std::move(body)});
}

const Action& Interaction::action() const {
  if (!node_->action) throw PreconditionError("term is not an action");
  return *node_->action;
}

const Interaction& Interaction::left() const {
  if (node_->children.empty()) throw PreconditionError("term has no operand");
  return node_->children[0];
}

const Interaction& Interaction::right() const {
  if (node_->children.size() < 2) {
    throw PreconditionError("term has no right operand");
  }
  return node_->children[1];
}

bool operator==(const Interaction& a, const Interaction& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind ||
      a.node_->size != b.node_->size) {
    return false;
  }
  return a.node_->action == b.node_->action &&
         a.node_->children == b.node_->children;
}

// --- Model -----------------------------------------------------------------

InteractionModel::InteractionModel(Signature sig, Interaction term)
    : signature(std::move(sig)), root(std::move(term)) {
  for (const auto& l : lifelines_of(root)) {
    if (!signature.contains(l)) {
      throw SignatureError("lifeline '" + l.name() +
                           "' used by the interaction is not declared in " +
                           to_string(signature));
    }
  }
}

namespace {

void collect_actions(const Interaction& i, std::set<Action>& out) {
  switch (i.kind()) {
    case TermKind::Empty:
      return;
    case TermKind::Act:
      out.insert(i.action());
      return;
    case TermKind::LoopS:
    case TermKind::LoopP:
      collect_actions(i.body(), out);
      return;
    default:
      collect_actions(i.left(), out);
      collect_actions(i.right(), out);
  }
}

}  // namespace

std::set<Action> actions_of(const Interaction& i) {
  std::set<Action> out;
  collect_actions(i, out);
  return out;
}

std::set<Lifeline> lifelines_of(const Interaction& i) {
  std::set<Lifeline> out;
  for (const auto& a : actions_of(i)) out.insert(a.lifeline);
  return out;
}

Interaction remove_lifeline(const Interaction& i, const Lifeline& h) {
  switch (i.kind()) {
    case TermKind::Empty:
      return i;
    case TermKind::Act:
      return i.action().lifeline == h ? Interaction::empty() : i;
    case TermKind::LoopS:
      return Interaction::loop_s(remove_lifeline(i.body(), h));
    case TermKind::LoopP:
      return Interaction::loop_p(remove_lifeline(i.body(), h));
    case TermKind::Seq:
      return Interaction::seq(remove_lifeline(i.left(), h),
                              remove_lifeline(i.right(), h));
    case TermKind::Par:
      return Interaction::par(remove_lifeline(i.left(), h),
                              remove_lifeline(i.right(), h));
    case TermKind::Alt:
      return Interaction::alt(remove_lifeline(i.left(), h),
                              remove_lifeline(i.right(), h));
  }
  return i;
}

InteractionModel remove_lifeline(const InteractionModel& m, const Lifeline& h) {
  Signature rest = m.signature.without(h);
  return InteractionModel(std::move(rest), remove_lifeline(m.root, h),
                          InteractionModel::Unchecked{});
}

Interaction simplify(const Interaction& i) {
  switch (i.kind()) {
    case TermKind::Empty:
    case TermKind::Act:
      return i;
    case TermKind::LoopS:
    case TermKind::LoopP: {
      Interaction b = simplify(i.body());
      if (b.is_empty()) return b;
      return i.kind() == TermKind::LoopS ? Interaction::loop_s(b)
                                         : Interaction::loop_p(b);
    }
    case TermKind::Seq:
    case TermKind::Par: {
      Interaction l = simplify(i.left());
      Interaction r = simplify(i.right());
      if (l.is_empty()) return r;
      if (r.is_empty()) return l;
      return i.kind() == TermKind::Seq ? Interaction::seq(l, r)
                                       : Interaction::par(l, r);
    }
    case TermKind::Alt: {
      Interaction l = simplify(i.left());
      Interaction r = simplify(i.right());
      if (l.is_empty() && r.is_empty()) return l;
      return Interaction::alt(l, r);
    }
  }
  return i;
}

// --- Printing --------------------------------------------------------------

namespace {

void print(const Interaction& i, std::string& out) {
  auto binary = [&](const char* name) {
    out += name;
    out += '(';
    print(i.left(), out);
    out += ',';
    print(i.right(), out);
    out += ')';
  };
  switch (i.kind()) {
    case TermKind::Empty:
      out += '0';
      return;
    case TermKind::Act:
      out += to_string(i.action());
      return;
    case TermKind::Seq:
      return binary("seq");
    case TermKind::Par:
      return binary("par");
    case TermKind::Alt:
      return binary("alt");
    case TermKind::LoopS:
    case TermKind::LoopP:
      out += i.kind() == TermKind::LoopS ? "loopS(" : "loopP(";
      print(i.body(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const Interaction& i) {
  std::string out;
  print(i, out);
  return out;
}

std::string to_string(const InteractionModel& m) {
  return "signature" + to_string(m.signature) + " interaction{ " +
         to_string(m.root) + " }\n";
}

// --- Parsing ---------------------------------------------------------------

namespace {

class TermParser {
 public:
  TermParser(detail::TextCursor& in, const Signature& sig)
      : in_(in), sig_(sig) {}

  Interaction term() {
    in_.skip_space();
    if (in_.consume('0')) return Interaction::empty();
    std::size_t line = in_.line(), col = in_.column();
    std::string_view head = in_.expect_identifier("term");
    in_.skip_space();
    if (in_.peek() == '!' || in_.peek() == '?') {
      ActionKind kind =
          in_.advance() == '!' ? ActionKind::Emission : ActionKind::Reception;
      in_.skip_space();
      std::string_view msg = in_.expect_identifier("message name");
      Lifeline l(head);
      if (!sig_.contains(l)) {
        throw ParseError("lifeline '" + l.name() +
                             "' is not declared in the signature",
                         line, col);
      }
      return Interaction::act(Action{l, kind, Message(msg)});
    }
    int arity = 0;
    TermKind kind{};
    if (head == "seq") {
      arity = 2, kind = TermKind::Seq;
    } else if (head == "par") {
      arity = 2, kind = TermKind::Par;
    } else if (head == "alt") {
      arity = 2, kind = TermKind::Alt;
    } else if (head == "loopS") {
      arity = 1, kind = TermKind::LoopS;
    } else if (head == "loopP") {
      arity = 1, kind = TermKind::LoopP;
    } else {
      throw ParseError("unknown operator '" + std::string(head) + "'", line,
                       col);
    }
    in_.expect('(');
    Interaction first = term();
    in_.skip_space();
    if (arity == 1) {
      if (in_.peek() == ',') {
        in_.fail(std::string(head) + " takes exactly one operand");
      }
      in_.expect(')');
      return kind == TermKind::LoopS ? Interaction::loop_s(first)
                                     : Interaction::loop_p(first);
    }
    if (!in_.consume(',')) {
      in_.fail(std::string(head) + " takes exactly two operands" + in_.found());
    }
    Interaction second = term();
    in_.skip_space();
    if (in_.peek() == ',') {
      in_.fail(std::string(head) + " takes exactly two operands");
    }
    in_.expect(')');
    switch (kind) {
      case TermKind::Seq:
        return Interaction::seq(first, second);
      case TermKind::Par:
        return Interaction::par(first, second);
      default:
        return Interaction::alt(first, second);
    }
  }

 private:
  detail::TextCursor& in_;
  const Signature& sig_;
};

void expect_keyword(detail::TextCursor& in, std::string_view kw) {
  in.skip_space();
  std::size_t line = in.line(), col = in.column();
  if (in.identifier() != kw) {
    throw ParseError("expected '" + std::string(kw) + "'", line, col);
  }
}

}  // namespace

InteractionModel parse_interaction(std::string_view text) {
  detail::TextCursor in(text);
  expect_keyword(in, "signature");
  in.skip_space();
  in.expect('{');
  std::vector<Lifeline> declared;
  do {
    in.skip_space();
    std::size_t line = in.line(), col = in.column();
    Lifeline l(in.expect_identifier("lifeline name"));
    if (std::find(declared.begin(), declared.end(), l) != declared.end()) {
      throw ParseError("duplicate lifeline declaration '" + l.name() + "'",
                       line, col);
    }
    declared.push_back(l);
    in.skip_space();
  } while (in.consume(','));
  in.expect('}');
  Signature sig(std::move(declared));
  expect_keyword(in, "interaction");
  in.skip_space();
  in.expect('{');
  Interaction root = TermParser(in, sig).term();
  in.skip_space();
  in.expect('}');
  in.skip_space();
  if (!in.at_end()) in.fail("trailing input after interaction" + in.found());
  return InteractionModel(std::move(sig), std::move(root));
}

Interaction parse_term(std::string_view text, const Signature& sig) {
  detail::TextCursor in(text);
  Interaction t = TermParser(in, sig).term();
  in.skip_space();
  if (!in.at_end()) in.fail("trailing input after term" + in.found());
  return t;
}

}  // namespace mtrv
