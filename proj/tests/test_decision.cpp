// Copyright 2026 The reversing Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "reversing/decision.hpp"
#include "reversing/equivalence.hpp"
#include "reversing/text.hpp"

using namespace reversing;
using corpus::sigma;

TEST(Cancellativity, CompletedExample) {
  auto p = corpus::ex1_completed();
  EXPECT_TRUE(left_cancellative(p).yes());
  EXPECT_TRUE(right_cancellative(p).yes());
}

TEST(Cancellativity, Braids) {
  for (std::size_t n : {3u, 4u}) {
    auto p = corpus::b(n);
    EXPECT_TRUE(left_cancellative(p).yes());
    EXPECT_TRUE(right_cancellative(p).yes());
  }
}

TEST(Cancellativity, IncompleteIsUnknown) {
  auto p = corpus::flag_braid();
  EXPECT_EQ(left_cancellative(p).answer, Answer::Unknown);
  EXPECT_EQ(right_cancellative(p).answer, Answer::Unknown);
}

TEST(Cancellativity, ThroughCompletion) {
  // The completed presentation presents the same monoid.
  auto v = left_cancellative(corpus::ex1());
  EXPECT_TRUE(v.yes());
  ASSERT_FALSE(v.evidence.empty());
  EXPECT_EQ(v.evidence.front(), "completion added c a a = d b b");
  EXPECT_EQ(v.prerequisites.size(), 2u);
  auto r = right_cancellative(corpus::ex1_completed());
  EXPECT_TRUE(r.yes());
}

TEST(WordProblem, Figure5) {
  auto p = corpus::ex1_completed();
  auto v = equivalent_monoid(p, parse_word(p, "acaaa"), parse_word(p, "cdbbb"));
  EXPECT_TRUE(v.yes());
  EXPECT_FALSE(v.evidence.empty());
  auto n = equivalent_monoid(p, parse_word(p, "acaaa"), parse_word(p, "cdbb"));
  EXPECT_TRUE(n.no());
}

TEST(WordProblem, IncompleteCannotSayNo) {
  auto p = corpus::ex1();
  auto v = equivalent_monoid(p, parse_word(p, "acaaa"), parse_word(p, "cdbbb"));
  EXPECT_NE(v.answer, Answer::No);
  auto y = equivalent_monoid(p, parse_word(p, "ab"), parse_word(p, "ca"));
  EXPECT_TRUE(y.yes());
}

TEST(WordProblem, WeightsSeparate) {
  auto p = corpus::flag_braid();
  auto v = equivalent_monoid(p, parse_word(p, "a"), parse_word(p, "b"));
  EXPECT_TRUE(v.no());
  EXPECT_EQ(v.evidence.back(), "weights differ: 1 vs 2");
}

TEST(WordProblem, AgreesWithOracleOnB3) {
  auto p  = corpus::b(3);
  auto ws = corpus::words_up_to(p, 4);
  for (auto const& u : ws) {
    for (auto const& v : ws) {
      auto o = bfs_equivalence_oracle(p, u, v);
      ASSERT_TRUE(o.exhausted || o.distance);
      EXPECT_EQ(equivalent_monoid(p, u, v).yes(), o.distance.has_value());
    }
  }
}

TEST(Divisibility, Examples) {
  auto p = corpus::b(3);
  EXPECT_TRUE(left_divides(p, sigma({1}), sigma({2, 1, 2})).yes());
  EXPECT_TRUE(left_divides(p, sigma({1, 2}), sigma({1, 2, 1})).yes());
  EXPECT_TRUE(left_divides(p, sigma({1}), sigma({1, 1})).yes());
  EXPECT_TRUE(left_divides(p, sigma({2}), sigma({1, 1})).no());
  EXPECT_TRUE(right_divides(p, sigma({2, 1}), sigma({1, 2, 1})).yes());
  EXPECT_TRUE(right_divides(p, sigma({2}), sigma({2, 1})).no());
  EXPECT_TRUE(left_divides(p, {}, sigma({1})).yes());
}

TEST(Divisibility, ClassEnumerationOnIncomplete) {
  auto p = corpus::flag_braid();
  auto v = left_divides(p, parse_word(p, "b"), parse_word(p, "cac"));
  EXPECT_TRUE(v.no());
  EXPECT_EQ(v.method, "equivalence class enumeration");
}

TEST(Group, Prerequisites) {
  auto g = group_prerequisites(corpus::b(3));
  EXPECT_TRUE(g.established(GroupVariant::RightRight));
  EXPECT_TRUE(g.established(GroupVariant::RightLeft));
  auto f = group_prerequisites(corpus::flag_braid());
  EXPECT_FALSE(f.established(GroupVariant::RightRight));
}

TEST(Group, Braids) {
  auto p = corpus::b(3);
  auto w = parse_signed_word(p, "s1 s2 -s1 -s2");
  EXPECT_TRUE(equivalent_group(p, w).no());
  EXPECT_TRUE(equivalent_group(p, w, GroupVariant::RightLeft).no());
  auto d = fraction(sigma({1, 2, 1}), sigma({2, 1, 2}));
  EXPECT_TRUE(equivalent_group(p, d).yes());
  EXPECT_TRUE(equivalent_group(p, d, GroupVariant::RightLeft).yes());
  EXPECT_TRUE(equivalent_group(p, SignedWord{}).yes());
  auto c = parse_signed_word(p, "-s1 s2 s1 -s2 -s1 s2 s1 -s2");
  auto r = equivalent_group(p, c);
  EXPECT_NE(r.answer, Answer::Unknown);
}

TEST(Group, UnknownWithoutPrerequisites) {
  auto p = corpus::flag_braid();
  auto v = equivalent_group(p, parse_signed_word(p, "a b A B"));
  EXPECT_NE(v.answer, Answer::No);
}

TEST(Group, AgreesWithMonoidOnPositiveFractions) {
  auto         p  = corpus::b(3);
  auto         ws = corpus::words_up_to(p, 3);
  auto         pre = group_prerequisites(p);
  for (auto const& u : ws) {
    for (auto const& v : ws) {
      auto g = equivalent_group(p, fraction(u, v), GroupVariant::RightRight, {}, pre);
      // B3 embeds in its group.
      EXPECT_EQ(g.yes(), equivalent_monoid(p, u, v).yes());
    }
  }
}

TEST(Lattice, LcmGcd) {
  auto p = corpus::b(3);
  auto l = right_lcm(p, sigma({1}), sigma({2}));
  ASSERT_TRUE(l);
  EXPECT_EQ(*l, sigma({1, 2, 1}));
  EXPECT_EQ(left_gcd(p, sigma({1, 2}), sigma({1, 1})), sigma({1}));
  EXPECT_EQ(left_gcd(corpus::b(4), sigma({1}), sigma({3})), Word{});
  EXPECT_FALSE(right_lcm(corpus::free(2), Word{Letter{0}}, Word{Letter{1}}));
  EXPECT_THROW(right_lcm(corpus::ex1(), Word{Letter{0}}, Word{Letter{1}}), PreconditionError);
}

TEST(Fractions, Reduce) {
  auto p      = corpus::b(3);
  auto [d, n] = reduce_fraction(p, parse_signed_word(p, "s1 s2 -s1"));
  EXPECT_EQ(d, sigma({2}));
  EXPECT_EQ(n, sigma({1, 2}));
  auto b4       = corpus::b(4);
  auto [d4, n4] = reduce_fraction(b4, parse_signed_word(b4, "-s3 -s1 s2 s3"));
  EXPECT_EQ(d4, sigma({1, 3}));
  EXPECT_EQ(n4, sigma({2, 3}));
}

TEST(Fractions, ValueIsPreserved) {
  std::mt19937 rng(2);
  auto         p   = corpus::b(3);
  auto         pre = group_prerequisites(p);
  std::bernoulli_distribution    coin;
  std::uniform_int_distribution<std::uint32_t> letter(0, 1);
  for (int k = 0; k < 40; ++k) {
    SignedWord w;
    for (int i = 0; i < 6; ++i) {
      w.push_back({Letter{letter(rng)}, coin(rng)});
    }
    auto [d, n] = reduce_fraction(p, w);
    // w (D^-1 N)^-1 = w N^-1 D is trivial.
    auto check = w;
    for (auto x : inverse(n)) {
      check.push_back(x);
    }
    for (auto s : d) {
      check.push_back(pos(s));
    }
    EXPECT_TRUE(equivalent_group(p, check, GroupVariant::RightRight, {}, pre).yes());
  }
}

TEST(Mixed, RightAngledArtin) {
  auto p = corpus::raag();
  auto r = mixed_reverse_to_empty(p, parse_signed_word(p, "A C d a B D c b"));
  EXPECT_TRUE(r.verdict.yes());
  ASSERT_FALSE(r.path.empty());
  EXPECT_TRUE(r.path.back().empty());
  EXPECT_EQ(format(p, r.path.front()), "-a -c d a -b -d c b");
}

TEST(Mixed, ExhaustedSearchIsNo) {
  auto p = corpus::no_mixed();
  auto r = mixed_reverse_to_empty(p, parse_signed_word(p, "A C d a B D c b"));
  EXPECT_TRUE(r.verdict.no());
  Limits lim;
  lim.max_frontier = 1;
  auto t = mixed_reverse_to_empty(corpus::raag(), parse_signed_word(p, "A C d a B D c b"), lim);
  EXPECT_EQ(t.verdict.answer, Answer::Unknown);
}

TEST(Phi, B3Orbit) {
  auto p = corpus::b(3);
  auto o = phi_orbit(p, sigma({1}), sigma({2}));
  EXPECT_TRUE(o.cycle);
  EXPECT_EQ(o.cycle_entry, 0u);
  EXPECT_EQ(o.cycle_length, 4u);
  ASSERT_GE(o.sequence.size(), 4u);
  EXPECT_EQ(o.sequence[1], std::make_pair(sigma({1, 2}), sigma({2, 1})));
  EXPECT_EQ(o.sequence[2], std::make_pair(sigma({2}), sigma({1})));
  auto f = phi(p, sigma({1}), sigma({2}));
  EXPECT_EQ(f, std::make_pair(sigma({1, 2}), sigma({2, 1})));
}

TEST(Phi, StuckIsReported) {
  auto o = phi_orbit(corpus::free(2), Word{Letter{0}}, Word{Letter{1}});
  EXPECT_FALSE(o.cycle);
  EXPECT_FALSE(o.error.empty());
}
