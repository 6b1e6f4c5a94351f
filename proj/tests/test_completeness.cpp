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

#include <set>

#include "corpus.hpp"
#include "reversing/completeness.hpp"
#include "reversing/equivalence.hpp"
#include "reversing/text.hpp"

using namespace reversing;

namespace {

  std::set<Word> representatives(Presentation const& p, std::vector<Word> const& ws) {
    std::set<Word> out;
    for (auto const& w : ws) {
      out.insert(*class_representative(p, w));
    }
    return out;
  }

  // Completeness straight from the definition: every equivalent pair of
  // short words reverses to the empty word in some way.
  bool complete_up_to(Presentation const& p, std::size_t n) {
    auto ws = corpus::words_up_to(p, n);
    for (auto const& u : ws) {
      for (auto const& v : ws) {
        if (u.size() > v.size() + 2 || v.size() > u.size() + 2) {
          continue;
        }
        Limits o;
        o.max_frontier = 20000;
        auto eq = bfs_equivalence_oracle(p, u, v, o);
        if (!eq.distance) {
          continue;
        }
        if (search_right(p, quotient(u, v), SearchGoal::Empty, {}).status
            != ReversalStatus::Terminal) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace

TEST(Cube, Example12Fails) {
  auto p = corpus::ex1();
  auto r = cube_condition(p, parse_word(p, "c"), parse_word(p, "d"), parse_word(p, "a"));
  EXPECT_EQ(r.status, CubeStatus::Fails);
  EXPECT_EQ(format(p, r.intermediate), "a a -b -b");
  EXPECT_EQ(format(p, r.v1), "a a");
  EXPECT_EQ(format(p, r.v), "b b");
  EXPECT_EQ(format(p, r.residual), "-a -a -c d b b");
  ASSERT_EQ(r.residual_results.size(), 1u);
  EXPECT_EQ(format(p, r.residual_results[0]), "-a -a -c d b b");
}

TEST(Cube, FlagBraidFails) {
  auto p = corpus::flag_braid();
  auto r = cube_condition(p, parse_word(p, "a"), parse_word(p, "b"), parse_word(p, "c"));
  EXPECT_EQ(r.status, CubeStatus::Fails);
  ASSERT_EQ(r.residual_results.size(), 1u);
  EXPECT_EQ(format(p, r.residual_results[0]), "a -a");
}

TEST(Cube, ThreeLetterFails) {
  auto p = corpus::three_letter();
  auto r = cube_condition(p, parse_word(p, "a"), parse_word(p, "b c"), parse_word(p, "c"));
  EXPECT_EQ(r.status, CubeStatus::Fails);
  auto c = cube_condition_complemented(p, parse_word(p, "a"), parse_word(p, "b c"),
                                       parse_word(p, "c"));
  EXPECT_EQ(c.status, CubeStatus::Fails);
  EXPECT_THROW(cube_condition_complemented(corpus::ex1(), Word{Letter{0}}, Word{Letter{1}},
                                           Word{Letter{2}}),
               PreconditionError);
}

TEST(Cube, HoldsOnBraids) {
  auto p = corpus::b(4);
  for (auto s : p.alphabet()) {
    for (auto t : p.alphabet()) {
      for (auto r : p.alphabet()) {
        EXPECT_TRUE(holds(cube_condition(p, {s}, {t}, {r}).status));
        EXPECT_TRUE(holds(cube_condition_complemented(p, {s}, {t}, {r}).status));
      }
    }
  }
}

TEST(Cube, TrivialTriple) {
  auto p = corpus::ex1();
  auto r = cube_condition(p, Word{Letter{0}}, Word{Letter{0}}, Word{Letter{0}});
  EXPECT_TRUE(holds(r.status));
}

TEST(Cube, VacuousWhenStuck) {
  auto p = corpus::free(3);
  auto r = cube_condition(p, Word{Letter{0}}, Word{Letter{1}}, Word{Letter{2}});
  EXPECT_EQ(r.status, CubeStatus::VacuouslyHolds);
}

TEST(Completeness, Verdicts) {
  auto e = check_completeness(corpus::ex1());
  EXPECT_EQ(e.status, Completeness::Incomplete);
  EXPECT_EQ(e.method, CompletenessMethod::HomogeneousLetters);
  EXPECT_FALSE(e.failing.empty());
  auto c = check_completeness(corpus::ex1_completed());
  EXPECT_EQ(c.status, Completeness::Complete);
  EXPECT_EQ(c.triples, 64u);
  EXPECT_EQ(check_completeness(corpus::flag_braid()).status, Completeness::Incomplete);
  EXPECT_EQ(check_completeness(corpus::b(3)).status, Completeness::Complete);
  EXPECT_EQ(check_completeness(corpus::b(4)).status, Completeness::Complete);
  EXPECT_EQ(check_completeness(corpus::raag()).status, Completeness::Complete);
  auto t = check_completeness(corpus::three_letter());
  EXPECT_EQ(t.method, CompletenessMethod::ClosedSet);
  EXPECT_EQ(t.status, Completeness::Incomplete);
  // Letter cubes run into non-terminating reversals.
  EXPECT_EQ(check_completeness(corpus::a2_tilde()).status, Completeness::Unknown);
}

TEST(Completeness, ClosedSetMethodOnBraids) {
  auto b4 = check_completeness(corpus::b(4), CompletenessMethod::ClosedSet);
  EXPECT_EQ(b4.status, Completeness::Complete);
  ASSERT_TRUE(b4.closed_set);
  EXPECT_THROW(check_completeness(corpus::aab_ba(), CompletenessMethod::HomogeneousLetters),
               PreconditionError);
  EXPECT_THROW(check_completeness(corpus::ex1(), CompletenessMethod::ClosedSet), PreconditionError);
}

TEST(Completeness, AgreesWithDefinition) {
  EXPECT_TRUE(complete_up_to(corpus::ex1_completed(), 4));
  EXPECT_TRUE(complete_up_to(corpus::b(3), 4));
  EXPECT_FALSE(complete_up_to(corpus::ex1(), 5));
  EXPECT_FALSE(complete_up_to(corpus::flag_braid(), 4));
}

TEST(Closure, CompletedExample) {
  auto p = corpus::ex1_completed();
  auto s = closure_under_complement(p, {});
  ASSERT_TRUE(s);
  std::set<Word> want;
  for (auto const* w : {"", "a", "b", "c", "d", "a a", "a b", "b a", "b b"}) {
    want.insert(*class_representative(p, parse_word(p, w)));
  }
  EXPECT_EQ(representatives(p, *s), want);
}

TEST(Closure, BraidComplements) {
  auto p = corpus::b(3);
  auto s = closure_under_complement(p, {});
  ASSERT_TRUE(s);
  std::set<Word> want;
  for (auto const& w : {Word{}, corpus::sigma({1}), corpus::sigma({2}), corpus::sigma({1, 2}),
                        corpus::sigma({2, 1})}) {
    want.insert(*class_representative(p, w));
  }
  EXPECT_EQ(representatives(p, *s), want);
  for (auto const& x : *s) {
    for (auto const& y : *s) {
      auto c = complement(p, x, y);
      ASSERT_TRUE(c);
      EXPECT_TRUE(want.count(*class_representative(p, *c)));
    }
  }
}

TEST(Completion, Example12) {
  auto r = complete_presentation(corpus::ex1());
  EXPECT_EQ(r.status, CompletionStatus::Completed);
  ASSERT_EQ(r.added.size(), 1u);
  auto const& p = r.final;
  EXPECT_EQ(format(p, r.added[0].lhs), "c a a");
  EXPECT_EQ(format(p, r.added[0].rhs), "d b b");
  for (auto s : p.alphabet()) {
    for (auto t : p.alphabet()) {
      for (auto u : p.alphabet()) {
        EXPECT_TRUE(holds(cube_condition(p, {s}, {t}, {u}).status));
      }
    }
  }
  EXPECT_EQ(r.witnesses.size(), 1u);
}

TEST(Completion, AlreadyComplete) {
  auto r = complete_presentation(corpus::b(4));
  EXPECT_EQ(r.status, CompletionStatus::Completed);
  EXPECT_TRUE(r.added.empty());
  EXPECT_EQ(r.rounds, 1u);
}

TEST(Completion, FlagBraidDiverges) {
  CompletionOptions o;
  o.max_added = 4;
  auto r      = complete_presentation(corpus::flag_braid(), completion_limits(), o);
  EXPECT_EQ(r.status, CompletionStatus::Diverged);
  EXPECT_FALSE(r.reason.empty());
  EXPECT_LE(r.added.size(), 4u);
}

TEST(Completion, RequiresHomogeneity) {
  EXPECT_THROW(complete_presentation(corpus::heisenberg()), PreconditionError);
  CompletionOptions o;
  o.require_homogeneous = false;
  auto r = complete_presentation(corpus::heisenberg(), completion_limits(), o);
  EXPECT_EQ(r.status, CompletionStatus::Completed);
  EXPECT_FALSE(r.added.empty());
}
