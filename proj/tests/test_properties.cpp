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

#include "properties.hpp"

using namespace reversing;

namespace {

  std::string first(properties::Violations const& v) {
    return v.empty() ? std::string() : v.front();
  }

}  // namespace

TEST(Properties, WordProblemMatchesOracle) {
  for (auto const& [name, p] : properties::complete_corpus()) {
    auto v = properties::word_problem(p, 4);
    EXPECT_TRUE(v.empty()) << name << ": " << v.size() << " violations, e.g. " << first(v);
  }
}

TEST(Properties, DistanceAtMostReversingDistance) {
  for (auto const& [name, p] : properties::complete_corpus()) {
    auto v = properties::distances(p, 4);
    EXPECT_TRUE(v.empty()) << name << ": " << v.size() << " violations, e.g. " << first(v);
  }
}

TEST(Properties, GcdAndLcmAgainstDivisors) {
  for (std::size_t n : {3u, 4u}) {
    auto v = properties::gcd_lcm(corpus::b(n), 3);
    EXPECT_TRUE(v.empty()) << "B" << n << ": " << v.size() << " violations, e.g. " << first(v);
  }
}

TEST(Properties, NormalFormIsAClassInvariant) {
  auto v = properties::normal_forms(corpus::b(3), corpus::sigma({1, 2, 1}), 6);
  EXPECT_TRUE(v.empty()) << v.size() << " violations, e.g. " << first(v);
}

TEST(Properties, ViolationsAreDetected) {
  // The oracles are not vacuous: an incomplete presentation is caught.
  EXPECT_FALSE(properties::distances(corpus::ex1(), 3).empty());
}
