// Copyright 2026 The lrmgray Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lrm/debruijn.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "lrm/errors.hpp"
#include "oracle.hpp"

namespace lrm {
namespace {

std::vector<int> small(const std::vector<BigInt>& v) {
  std::vector<int> out;
  for (const BigInt& x : v) out.push_back(static_cast<int>(x));
  return out;
}

std::vector<int> take(DeBruijnStream& s, std::size_t k) {
  std::vector<int> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(static_cast<int>(s.next()));
  return out;
}

TEST(DeBruijn, BinaryOrderThree) {
  EXPECT_EQ(small(debruijn_period(2, 3)),
            (std::vector<int>{0, 0, 0, 1, 0, 1, 1, 1}));
}

TEST(DeBruijn, BinaryOrderTwo) {
  EXPECT_EQ(small(debruijn_period(2, 2)), (std::vector<int>{0, 0, 1, 1}));
}

TEST(DeBruijn, UnaryAlphabet) {
  DeBruijnStream s(1, 4);
  EXPECT_EQ(take(s, 6), std::vector<int>(6, 0));
  EXPECT_EQ(small(debruijn_period(1, 5)), std::vector<int>{0});
}

TEST(DeBruijn, LeastCycleByExhaustiveSearch) {
  for (auto [v, order] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    EXPECT_EQ(small(debruijn_period(v, order)),
              oracle::least_debruijn(v, order))
        << v << "^" << order;
  }
}

TEST(DeBruijn, EveryWindowOnce) {
  for (int v = 1; v <= 4; ++v) {
    for (int order = 1; order <= 4; ++order) {
      const std::vector<int> seq = small(debruijn_period(v, order));
      ASSERT_EQ(seq.size(), oracle::ipow(v, order));
      const auto census = oracle::window_census(seq, order);
      ASSERT_EQ(census.size(), seq.size());
      for (const auto& [w, count] : census) ASSERT_EQ(count, 1);
    }
  }
}

TEST(DeBruijn, CyclesWithPeriod) {
  DeBruijnStream s(3, 2);
  const std::vector<int> first = take(s, 9);
  EXPECT_EQ(s.position(), 0);
  EXPECT_EQ(take(s, 9), first);
  EXPECT_EQ(s.period(), 9);
}

TEST(DeBruijn, Seek) {
  const DeBruijnStream fresh(2, 3);
  DeBruijnStream a = debruijn_seek(fresh, 0);
  EXPECT_EQ(debruijn_next(a), 0);
  DeBruijnStream b = debruijn_seek(fresh, 4);
  EXPECT_EQ(b.position(), 4);
  EXPECT_EQ(take(b, 4), (std::vector<int>{0, 1, 1, 1}));
  DeBruijnStream c = debruijn_seek(fresh, 8);
  EXPECT_EQ(debruijn_next(c), 0);
  DeBruijnStream d = debruijn_seek(fresh, 8 + 3);
  EXPECT_EQ(debruijn_next(d), 1);
}

TEST(DeBruijn, DeterministicAndCloneable) {
  DeBruijnStream a(5, 3);
  take(a, 17);
  DeBruijnStream b = a;
  EXPECT_EQ(take(a, 50), take(b, 50));
}

TEST(DeBruijn, LargeAlphabetStreamsWithoutMaterializing) {
  const BigInt v = BigInt(1) << 80;
  DeBruijnStream s(v, 7);
  EXPECT_EQ(s.period(), boost::multiprecision::pow(v, 7));
  // The word 0, then the Lyndon word 0000001.
  EXPECT_EQ(take(s, 8), (std::vector<int>{0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST(DeBruijn, RejectsBadParameters) {
  EXPECT_THROW(DeBruijnStream(0, 3), ParameterError);
  EXPECT_THROW(DeBruijnStream(2, 0), ParameterError);
}

}  // namespace
}  // namespace lrm
