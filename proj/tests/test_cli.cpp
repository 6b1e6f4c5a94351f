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

#include <regex>
#include <sstream>

#include "reversing/cli.hpp"

using namespace reversing;
using reversing::cli::run;

namespace {

  std::string data(std::string const& name) {
    return std::string(REVERSING_DATA_DIR) + "/" + name + ".pres";
  }

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::size_t count(std::string const& s, std::string const& pattern) {
    std::regex re(pattern);
    return static_cast<std::size_t>(
        std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator()));
  }

}  // namespace

TEST(Cli, ReverseStuck) {
  auto r = call({"reverse", "-p", data("ex1"), "-w", "A A A C A c d b b b"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status: Stuck"), std::string::npos);
  EXPECT_NE(r.out.find("stuck on: (c, d)"), std::string::npos);
  EXPECT_NE(r.out.find("total steps: 5"), std::string::npos);
  EXPECT_NE(r.out.find("nontrivial steps: 3"), std::string::npos);
}

TEST(Cli, ReverseJsonReport) {
  auto r = call({"reverse", "-p", data("ex1"), "-w", "-a -a -a -c -a c d b b b", "--json",
                 "--trace"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "reversing-report/1");
  EXPECT_EQ(j["verb"], "reverse");
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_EQ(j["result"]["status"], "Stuck");
  EXPECT_EQ(j["result"]["stuck_pair"], json::array({"c", "d"}));
  EXPECT_EQ(j["result"]["trace"].size(), 6u);
  EXPECT_TRUE(j["usage"].contains("wall_ms"));
  // Round trip.
  EXPECT_EQ(json::parse(j.dump(2)), j);
  EXPECT_EQ(json::parse(j.dump(2)).dump(2), j.dump(2));
}

TEST(Cli, ReverseLimitsAreInconclusive) {
  auto r = call({"reverse", "-p", data("aab-ba"), "-w", "B a b", "--limits", "len=10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("LimitExceeded"), std::string::npos);
  auto l = call({"reverse", "-p", data("ex1"), "-w", "A b", "--left"});
  EXPECT_EQ(l.code, 0);
}

TEST(Cli, Complete) {
  auto r = call({"complete", "-p", data("ex1")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("added: c a a = d b b"), std::string::npos);
  auto h = call({"complete", "-p", data("heisenberg")});
  EXPECT_EQ(h.code, 1);
}

TEST(Cli, Check) {
  auto r = call({"check", "-p", data("ex1-completed"), "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["result"]["completeness"]["status"], "Complete");
  EXPECT_EQ(j["result"]["left_cancellative"]["answer"], "Yes");
  auto a = call({"check", "-p", data("a2-tilde")});
  EXPECT_EQ(a.code, 2);
}

TEST(Cli, Cube) {
  auto r = call({"cube", "-p", data("ex1"), "-u", "c", "--u1", "d", "--u2", "a"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cube condition: Fails"), std::string::npos);
  EXPECT_EQ(call({"cube", "-p", data("ex1"), "-u", "c"}).code, 1);
}

TEST(Cli, WordProblems) {
  auto m = call({"wp-monoid", "-p", data("ex1-completed"), "-u", "acaaa", "-v", "cdbbb"});
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("answer: Yes"), std::string::npos);
  auto g = call({"wp-group", "-p", data("b3"), "-w", ""});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("answer: Yes"), std::string::npos);
  auto n = call({"wp-group", "-p", data("b3"), "-w", "s1 s2 -s1 -s2", "--variant", "rl"});
  EXPECT_EQ(n.code, 0);
  EXPECT_NE(n.out.find("answer: No"), std::string::npos);
  auto u = call({"wp-monoid", "-p", data("flag-braid"), "-u", "b a", "-v", "a b"});
  EXPECT_EQ(u.code, 2);
  auto w = call({"wp-monoid", "-p", data("flag-braid"), "-u", "a", "-v", "b"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("weights differ: 1 vs 2"), std::string::npos);
  EXPECT_EQ(call({"wp-group", "-p", data("b3"), "-w", "s1", "--variant", "xx"}).code, 1);
}

TEST(Cli, Lattice) {
  auto l = call({"lcm", "-p", data("b3"), "-u", "s1", "-v", "s2"});
  EXPECT_NE(l.out.find("right-lcm: s1 s2 s1"), std::string::npos);
  auto g = call({"gcd", "-p", data("b3"), "-u", "s1 s2", "-v", "s1 s1"});
  EXPECT_NE(g.out.find("left-gcd: s1"), std::string::npos);
  auto nf = call({"nf", "-n", "3", "-w", "s1 s1"});
  EXPECT_EQ(nf.code, 0);
  EXPECT_EQ(nf.out, "[s1][s1]\n");
  auto gs = call({"garside", "-p", data("b4"), "--format", "text"});
  EXPECT_NE(gs.out.find("divisors: 24"), std::string::npos);
  auto dot = call({"garside", "-n", "3"});
  EXPECT_EQ(count(dot.out, "\n  d[0-9]+ \\["), 6u);
}

TEST(Cli, Braids) {
  auto d = call({"braid-dist", "-n", "4", "-u", "s1 s2 s1 s3 s2 s1", "-v", "s3 s2 s3 s1 s2 s3"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("combinatorial distance: 6"), std::string::npos);
  auto o = call({"braid-opt", "-n", "3", "-u", "s2 s1 s1 s2 s1 s1", "-v", "s1 s1 s2 s1 s1 s2",
                 "--family", "1-2,2-3", "--json"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto j = json::parse(o.out);
  EXPECT_EQ(j["result"]["status"], "Optimal");
  EXPECT_EQ(j["result"]["distance"], 4);
  EXPECT_EQ(call({"braid-dist", "-p", data("ex1"), "-u", "a", "-v", "b"}).code, 1);
}

TEST(Cli, Phi) {
  auto r = call({"phi", "-n", "3", "-u", "s1", "-v", "s2", "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["result"]["cycle_length"], 4);
}

TEST(Cli, ExportDot) {
  auto one = call({"export", "-n", "3", "-u", "s1", "-v", "s2"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(count(one.out, "n[0-9]+_[0-9]+ \\[pos"), 4u);
  EXPECT_EQ(count(one.out, "-> n[0-9_]+ \\[label"), 4u);
  auto empty = call({"export", "-n", "3", "-u", "", "-v", ""});
  ASSERT_EQ(empty.code, 0);
  EXPECT_EQ(count(empty.out, "n[0-9]+_[0-9]+ \\[pos"), 1u);
  EXPECT_EQ(count(empty.out, "->"), 0u);
  auto named = call({"export", "-n", "3", "-u", "s1", "-v", "s2 s2", "--named"});
  ASSERT_EQ(named.code, 0);
  EXPECT_NE(named.out.find("s1 [1,2,1]"), std::string::npos);
}

TEST(Cli, ExportFigure5) {
  // Not complemented: the diagram of a reversal to the empty word.
  auto r = call({"export", "-p", data("ex1-completed"), "-u", "acaaa", "-v", "cdbbb"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GT(count(r.out, "style=dotted"), 0u);
  EXPECT_EQ(count(r.out, "style=dotted"), count(r.out, "->") - count(r.out, "-> v[0-9]+ \\[label"));
  auto j = call({"export", "-p", data("ex1-completed"), "-u", "acaaa", "-v", "cdbbb",
                 "--format", "json"});
  ASSERT_EQ(j.code, 0);
  auto d = json::parse(j.out);
  EXPECT_EQ(d["status"], "Terminal");
  EXPECT_EQ(d["word"], "1");
}

TEST(Cli, ExportJson) {
  auto r = call({"export", "-n", "3", "-u", "s1", "-v", "s2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j["cells"].size(), 1u);
  EXPECT_EQ(j["cells"][0]["bottom"], "s2 s1");
  EXPECT_EQ(j["cells"][0]["right"], "s1 s2");
  EXPECT_EQ(json::parse(j.dump()), j);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({"reverse", "-w", "a"}).code, 1);
  EXPECT_EQ(call({"reverse", "-p", "/nonexistent.pres", "-w", "a"}).code, 1);
  EXPECT_EQ(call({"reverse", "-p", data("ex1"), "-w", "a x"}).code, 1);
  EXPECT_EQ(call({"reverse", "-p", data("ex1"), "-w", "a", "--limits", "steps=x"}).code, 1);
  auto h = call({"--help"});
  EXPECT_EQ(h.code, 0);
}

TEST(Cli, ParseHelpers) {
  auto l = cli::parse_limits("steps=7,frontier=9");
  EXPECT_EQ(l.max_steps, 7u);
  EXPECT_EQ(l.max_word_length, Limits{}.max_word_length);
  EXPECT_EQ(l.max_frontier, 9u);
  EXPECT_THROW(cli::parse_limits("depth=3"), Error);
  auto f = cli::parse_family("2-1,2-3");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], StrandPair(1, 2));
}
