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

#include <gtest/gtest.h>

#include <functional>

#include "generators.hpp"
#include "printers.hpp"
#include "mtrv/errors.hpp"
#include "mtrv/multitrace.hpp"

namespace mtrv {
namespace {

using testing::alphabet;
using testing::random_multitrace;

MultiTrace mt(std::string_view text) { return parse_multitrace(text); }

Action act(std::string_view text) { return parse_action(text); }

TEST(Symbols, IdentifierRules) {
  EXPECT_TRUE(is_identifier("pub"));
  EXPECT_TRUE(is_identifier("_x9"));
  EXPECT_FALSE(is_identifier(""));
  EXPECT_FALSE(is_identifier("9x"));
  EXPECT_FALSE(is_identifier("a-b"));
  EXPECT_THROW(Lifeline("a b"), PreconditionError);
  EXPECT_THROW(Message(""), PreconditionError);
}

TEST(Symbols, InterningGivesValueSemantics) {
  Lifeline a("alpha");
  Lifeline b(std::string("alp") + "ha");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_LT(Lifeline("a"), Lifeline("b"));
}

TEST(Actions, ParseAndPrint) {
  Action a = act("l!m");
  EXPECT_EQ(a.lifeline, Lifeline("l"));
  EXPECT_EQ(a.kind, ActionKind::Emission);
  EXPECT_EQ(a.message, Message("m"));
  EXPECT_EQ(to_string(act("bro?publish")), "bro?publish");
  EXPECT_THROW(act("l"), ParseError);
  EXPECT_THROW(act("l!"), ParseError);
}

TEST(Signatures, DeclarationOrderAndSetEquality) {
  Signature s{"sub", "pub"};
  EXPECT_EQ(s.lifelines().front(), Lifeline("sub"));
  EXPECT_EQ(s.sorted().front(), Lifeline("pub"));
  EXPECT_EQ(s, (Signature{"pub", "sub"}));
  EXPECT_THROW(Signature(std::vector<Lifeline>{Lifeline("a"), Lifeline("a")}),
               PreconditionError);
  EXPECT_THROW(s.without(Lifeline("bro")), SignatureError);
  EXPECT_EQ(s.without(Lifeline("sub")), Signature{"pub"});
  EXPECT_EQ(to_string(Signature{"b", "a"}), "{b,a}");
}

TEST(MultiTraces, ConstructionValidates) {
  Signature s{"l", "m"};
  EXPECT_THROW(MultiTrace(s, {{Lifeline("k"), {}}}), SignatureError);
  EXPECT_THROW(MultiTrace(s, {{Lifeline("l"), {act("m!a")}}}), SignatureError);
  EXPECT_THROW(MultiTrace(s, {{Lifeline("l"), {}}, {Lifeline("l"), {}}}),
               SignatureError);
  MultiTrace mu(s, {{Lifeline("l"), {act("l!a"), act("l?b")}}});
  EXPECT_EQ(mu.length(), 2u);
  EXPECT_TRUE(mu.component(Lifeline("m")).empty());
  EXPECT_THROW(mu.component(Lifeline("k")), SignatureError);
}

TEST(MultiTraces, Attach) {
  MultiTrace e(Signature{"pub", "bro", "sub"});
  EXPECT_EQ(attach(e, act("pub!publish"), Side::Left),
            mt("[pub] pub!publish\n[bro] eps\n[sub] eps\n"));
  MultiTrace one = mt("[l] l!a\n");
  EXPECT_EQ(attach(one, act("l!b"), Side::Right), mt("[l] l!a.l!b\n"));
  MultiTrace left = attach(one, act("l!b"), Side::Left);
  EXPECT_EQ(left, mt("[l] l!b.l!a\n"));
  EXPECT_EQ(left.length(), 2u);
  EXPECT_THROW(attach(one, act("k!b"), Side::Left), SignatureError);
}

TEST(MultiTraces, RemoveLifeline) {
  MultiTrace full = mt(
      "[pub] pub!publish\n[bro] bro?subscribe.bro?publish.bro!publish\n"
      "[sub] sub!subscribe.sub?publish\n");
  EXPECT_EQ(remove_lifeline(full, Lifeline("sub")),
            mt("[pub] pub!publish\n"
               "[bro] bro?subscribe.bro?publish.bro!publish\n"));
  EXPECT_EQ(remove_lifeline(MultiTrace(Signature{"l", "m"}), Lifeline("l")),
            MultiTrace(Signature{"m"}));
  EXPECT_THROW(remove_lifeline(full, Lifeline("x")), SignatureError);
}

TEST(MultiTraces, Sequence) {
  MultiTrace mu = mt("[l] l!a\n[m] eps\n");
  EXPECT_EQ(sequence(mu, MultiTrace(mu.signature())), mu);
  EXPECT_EQ(sequence(mu, mt("[l] l!b\n[m] m?c\n")),
            mt("[l] l!a.l!b\n[m] m?c\n"));
  EXPECT_THROW(sequence(mu, mt("[l] eps\n")), SignatureError);
}

TEST(MultiTraces, Interleave) {
  Signature s{"l", "m"};
  EXPECT_EQ(interleave(MultiTrace(s), mt("[l] l!a\n[m] eps\n")),
            MultiTraceSet(s, {mt("[l] l!a\n[m] eps\n")}));
  EXPECT_EQ(interleave(mt("[l] l!a\n[m] eps\n"), mt("[l] eps\n[m] m!b\n")),
            MultiTraceSet(s, {mt("[l] l!a\n[m] m!b\n")}));
  Signature one{"l"};
  EXPECT_EQ(interleave(mt("[l] l!a\n"), mt("[l] l!b\n")),
            MultiTraceSet(one, {mt("[l] l!a.l!b\n"), mt("[l] l!b.l!a\n")}));
}

TEST(MultiTraces, Alternative) {
  MultiTrace mu = mt("[l] l!a\n");
  EXPECT_EQ(alternative(mu, mu).size(), 1u);
  EXPECT_EQ(alternative(MultiTrace(mu.signature()), mu).size(), 2u);
}

TEST(MultiTraces, Closure) {
  Signature s{"l"};
  MultiTraceSet a(s, {mt("[l] l!a\n")});
  EXPECT_EQ(closure(ClosureOp::Seq, a, 0), MultiTraceSet(s, {MultiTrace(s)}));
  EXPECT_EQ(closure(ClosureOp::Seq, a, 2),
            MultiTraceSet(s, {MultiTrace(s), mt("[l] l!a\n"),
                              mt("[l] l!a.l!a\n")}));
  MultiTraceSet with_eps(s, {mt("[l] l!a\n"), MultiTrace(s)});
  EXPECT_EQ(closure(ClosureOp::Par, with_eps, 1),
            MultiTraceSet(s, {MultiTrace(s), mt("[l] l!a\n")}));
  // Only epsilon: powers stay trivial.
  EXPECT_EQ(closure(ClosureOp::Seq, MultiTraceSet(s, {MultiTrace(s)}), 7),
            MultiTraceSet(s, {MultiTrace(s)}));
}

TEST(MultiTraces, ClosureCapEqualsFilter) {
  Signature s{"l", "k"};
  MultiTraceSet t(s, {mt("[l] l!a\n[k] eps\n"), mt("[l] l?b\n[k] k!c\n")});
  for (auto op : {ClosureOp::Seq, ClosureOp::Par}) {
    auto full = closure(op, t, 3);
    for (std::size_t cap = 0; cap <= 6; ++cap) {
      MultiTraceSet filtered(s);
      for (const auto& mu : full) {
        if (mu.length() <= cap) filtered.insert(mu);
      }
      EXPECT_EQ(closure(op, t, 3, cap), filtered) << cap;
    }
  }
}

TEST(MultiTraces, MultiPrefix) {
  MultiTrace full = mt(
      "[pub] pub!publish\n[bro] bro?subscribe.bro?publish.bro!publish\n"
      "[sub] sub!subscribe.sub?publish\n");
  MultiTrace partial =
      mt("[pub] pub!publish\n[bro] bro?subscribe\n[sub] eps\n");
  EXPECT_TRUE(is_multi_prefix(partial, full));
  EXPECT_FALSE(is_multi_prefix(full, partial));
  EXPECT_TRUE(is_multi_prefix(MultiTrace(full.signature()), full));
  EXPECT_FALSE(is_multi_prefix(mt("[l] l!a.l!b\n"), mt("[l] l!b.l!a\n")));
  EXPECT_THROW(is_multi_prefix(mt("[l] eps\n"), full), SignatureError);
}

TEST(MultiTraceFormat, Parse) {
  MultiTrace mu = mt("[pub] pub!publish\n[bro] bro?subscribe\n[sub] eps");
  EXPECT_EQ(mu.signature().lifelines().size(), 3u);
  EXPECT_EQ(mu.component(Lifeline("bro")).size(), 1u);
  EXPECT_EQ(mt("[l] eps"), MultiTrace(Signature{"l"}));
  EXPECT_EQ(mt("# comment\n\n[l] l!a . l?b   # trailing\n"),
            mt("[l] l!a.l?b\n"));
}

TEST(MultiTraceFormat, Errors) {
  EXPECT_THROW(mt("[l] m!a"), ParseError);
  EXPECT_THROW(mt("[l] eps\n[l] eps\n"), ParseError);
  EXPECT_THROW(mt(""), ParseError);
  EXPECT_THROW(mt("[l l!a"), ParseError);
  EXPECT_THROW(mt("[l] l!a.\n"), ParseError);
  try {
    mt("[l] eps\n[k] l!a\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(MultiTraceFormat, PrintFollowsDeclarationOrder) {
  std::string text = "[sub] eps\n[pub] pub!publish.pub!publish\n";
  EXPECT_EQ(to_string(mt(text)), text);
}

// --- Properties --------------------------------------------------------------

struct Fixture {
  SplitMix64 rng{0xA11CE};
  Signature sig{"a", "b", "c"};
  std::vector<Action> letters = alphabet(sig, 2);
  MultiTrace draw(std::size_t max_component = 3) {
    return random_multitrace(rng, sig, letters, max_component);
  }
};

// Literal recursive definition: the first action comes from either side.
MultiTraceSet interleave_by_recursion(const MultiTrace& x, const MultiTrace& y) {
  MultiTraceSet out(x.signature());
  if (x.is_empty()) {
    out.insert(y);
    return out;
  }
  if (y.is_empty()) {
    out.insert(x);
    return out;
  }
  for (const auto* side : {&x, &y}) {
    const MultiTrace& from = *side;
    const MultiTrace& other = side == &x ? y : x;
    for (std::size_t k = 0; k < from.signature().size(); ++k) {
      const Trace& t = from.component_at(k);
      if (t.empty()) continue;
      MultiTrace rest = from.with_component(from.signature().sorted()[k],
                                            Trace(t.begin() + 1, t.end()));
      const MultiTraceSet sub = side == &x ? interleave_by_recursion(rest, other)
                                           : interleave_by_recursion(other, rest);
      for (const auto& mu : sub) out.insert(attach(mu, t.front(), Side::Left));
    }
  }
  return out;
}

TEST(MultiTraceProperties, SequenceAssociativeWithIdentity) {
  Fixture f;
  for (int k = 0; k < 300; ++k) {
    auto x = f.draw(), y = f.draw(), z = f.draw();
    EXPECT_EQ(sequence(sequence(x, y), z), sequence(x, sequence(y, z)));
    EXPECT_EQ(sequence(MultiTrace(f.sig), x), x);
    EXPECT_EQ(sequence(x, MultiTrace(f.sig)), x);
  }
}

TEST(MultiTraceProperties, InterleaveMatchesRecursionAndCommutes) {
  Fixture f;
  for (int k = 0; k < 150; ++k) {
    auto x = f.draw(2), y = f.draw(2);
    auto xy = interleave(x, y);
    EXPECT_EQ(xy, interleave_by_recursion(x, y));
    EXPECT_EQ(xy, interleave(y, x));
    for (const auto& mu : xy) EXPECT_EQ(mu.length(), x.length() + y.length());
  }
}

TEST(MultiTraceProperties, InterleaveAssociativeOnSets) {
  Fixture f;
  for (int k = 0; k < 60; ++k) {
    MultiTraceSet x(f.sig, {f.draw(2)}), y(f.sig, {f.draw(2)}),
        z(f.sig, {f.draw(1)});
    EXPECT_EQ(interleave(interleave(x, y), z), interleave(x, interleave(y, z)));
  }
}

TEST(MultiTraceProperties, MultiPrefixIsPartialOrder) {
  Fixture f;
  for (int k = 0; k < 300; ++k) {
    auto x = f.draw(), y = f.draw(), z = f.draw();
    EXPECT_TRUE(is_multi_prefix(x, x));
    if (is_multi_prefix(x, y) && is_multi_prefix(y, x)) EXPECT_EQ(x, y);
    // Build a guaranteed chain x <= x;y <= x;y;z.
    auto xy = sequence(x, y), xyz = sequence(xy, z);
    EXPECT_TRUE(is_multi_prefix(x, xy));
    EXPECT_TRUE(is_multi_prefix(xy, xyz));
    EXPECT_TRUE(is_multi_prefix(x, xyz));
    if (is_multi_prefix(x, y) && is_multi_prefix(y, z)) {
      EXPECT_TRUE(is_multi_prefix(x, z));
    }
  }
}

TEST(MultiTraceProperties, RemovalCommutesWithOperators) {
  Fixture f;
  for (int k = 0; k < 100; ++k) {
    auto x = f.draw(2), y = f.draw(2);
    for (const auto& h : f.sig.lifelines()) {
      EXPECT_EQ(remove_lifeline(sequence(x, y), h),
                sequence(remove_lifeline(x, h), remove_lifeline(y, h)));
      EXPECT_EQ(remove_lifeline(interleave(x, y), h),
                interleave(remove_lifeline(x, h), remove_lifeline(y, h)));
      auto h2 = f.sig.lifelines()[(k + 1) % 3];
      if (h2 == h) continue;
      EXPECT_EQ(remove_lifeline(remove_lifeline(x, h), h2),
                remove_lifeline(remove_lifeline(x, h2), h));
    }
  }
}

TEST(MultiTraceProperties, PrintParseRoundTrip) {
  Fixture f;
  for (int k = 0; k < 200; ++k) {
    auto x = f.draw();
    EXPECT_EQ(parse_multitrace(to_string(x)), x);
  }
}

}  // namespace
}  // namespace mtrv
