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

#include "lrm/graycode.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lrm/errors.hpp"
#include "lrm/transition.hpp"
#include "oracle.hpp"

namespace lrm {
namespace {

SuccinctState bits(const ConstructionParams& p, const std::string& text) {
  std::vector<int> d;
  for (char ch : text) {
    if (ch != ' ') d.push_back(ch - '0');
  }
  return SuccinctState(p.base(), d);
}

std::string show(const SuccinctState& s, std::size_t m) {
  std::string out;
  for (std::size_t i = 0; i < s.digits().size(); ++i) {
    if (i > 0 && i % m == 0) out.push_back(' ');
    out += std::to_string(s[i]);
  }
  return out;
}

std::vector<int> info_digits(const SuccinctState& s,
                             const ConstructionParams& p, std::size_t block) {
  const auto d = s.digits().subspan(p.cell(block, 0), p.info_digits());
  return {d.begin(), d.end()};
}

// Independent evaluation with plain integers.
unsigned long long alphabet_oracle(unsigned s, unsigned t, unsigned m) {
  unsigned long long a = 1;
  for (unsigned i = 0; i < s; ++i) a *= t - i;
  const unsigned c = (t + 2 + s - 1) / s;
  return oracle::ipow(a, m / s - c + 1);
}

const std::vector<std::string> kSixteenCellAnchors = {
    "1010 0010 0010 0000", "1010 0010 0000 0010", "1010 0000 1010 0010",
    "1000 1010 1010 0010", "1010 1010 1010 0000", "1010 1010 1000 0010",
    "1010 1000 0010 0010", "1000 0010 0010 0010"};

TEST(ConstructionParams, DerivedSizes) {
  const auto p = ConstructionParams::make(1, 2, 16);
  EXPECT_EQ(p.m(), 4u);
  EXPECT_EQ(p.z(), 3u);
  EXPECT_EQ(p.V(), 2);
  EXPECT_EQ(p.L(), 8);

  const auto q = ConstructionParams::make(1, 3, 36);
  EXPECT_EQ(q.z(), 4u);
  EXPECT_EQ(q.V(), 9);
  EXPECT_EQ(q.L(), 118098);
}

TEST(ConstructionParams, MatchIntegerOracle) {
  for (auto [s, t, m] : {std::tuple{1u, 2u, 4u},
                         {1u, 2u, 6u},
                         {1u, 3u, 6u},
                         {2u, 2u, 4u},
                         {2u, 3u, 6u},
                         {2u, 4u, 6u},
                         {3u, 3u, 6u},
                         {1u, 2u, 8u},
                         {2u, 3u, 8u}}) {
    const auto p = ConstructionParams::make(s, t, m * m);
    const unsigned long long v = alphabet_oracle(s, t, m);
    ASSERT_EQ(p.V(), v);
    const unsigned long long period = oracle::ipow(v, m - 1);
    ASSERT_EQ(p.L(), std::lcm(period, static_cast<unsigned long long>(m)));
  }
}

TEST(ConstructionParams, BigValuesStayExact) {
  const auto p = ConstructionParams::make(1, 2, 256);
  EXPECT_EQ(p.V(), 8192);
  EXPECT_EQ(p.L(), boost::multiprecision::pow(BigInt(8192), 15));
}

TEST(ConstructionParams, NamesViolatedConstraint) {
  auto message = [](std::size_t s, std::size_t t, std::size_t n) {
    try {
      ConstructionParams::make(s, t, n);
    } catch (const ParameterError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  EXPECT_EQ(message(1, 2, 9), "m >= t+2 violated");
  EXPECT_EQ(message(1, 2, 15), "n = m*m violated");
  EXPECT_EQ(message(4, 4, 36), "s | m violated");
  EXPECT_EQ(message(1, 1, 16), "t >= 2 violated");
  EXPECT_EQ(message(3, 2, 36), "s <= t violated");
}

TEST(BlockValue, Examples) {
  const auto p = ConstructionParams::make(1, 2, 16);
  EXPECT_EQ(block_value_of(0, p).digits, (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(block_value_of(1, p).digits, (std::vector<int>{1, 0, 0, 0}));
  const auto q = ConstructionParams::make(1, 3, 36);
  EXPECT_EQ(block_value_of(8, q).digits, (std::vector<int>{2, 2, 0, 0, 0, 0}));
  EXPECT_EQ(block_value_of(0, q).digits, std::vector<int>(6, 0));
  EXPECT_THROW(block_value_of(9, q), IndexOutOfRange);
  EXPECT_THROW(block_value_of(-1, q), IndexOutOfRange);
}

TEST(BlockValue, RoundTripsAndIgnoresTrailingDigits) {
  for (auto [s, t, n] : {std::tuple{1, 3, 36}, {2, 3, 36}, {1, 2, 64}}) {
    const auto p = ConstructionParams::make(s, t, n);
    for (BigInt i = 0; i < p.V(); ++i) {
      BlockValue v = block_value_of(i, p);
      ASSERT_EQ(block_index_of(v.digits, p), i);
      // Mixed radix, digit 0 most significant.
      BigInt back = 0;
      for (std::size_t k = 0; k < p.info_digits(); ++k) {
        ASSERT_LT(v.digits[k], p.radix(k));
        back = back * p.radix(k) + v.digits[k];
      }
      ASSERT_EQ(back, i);
      v.digits.back() = 1;
      ASSERT_EQ(block_index_of(v.digits, p), i);
    }
  }
}

TEST(Anchors, SixteenCellTable) {
  const auto p = ConstructionParams::make(1, 2, 16);
  AnchorSequence seq = anchors(p);
  for (std::size_t i = 0; i < 8; ++i) {
    const Anchor a = seq.next();
    EXPECT_EQ(a.index, i);
    EXPECT_EQ(show(a.state, 4), kSixteenCellAnchors[i]) << "g_" << i;
    EXPECT_EQ(a.underlined, 3 - i % 4);
  }
  EXPECT_EQ(show(seq.next().state, 4), kSixteenCellAnchors[0]);
}

// Anchor blocks must follow the de Bruijn sequence: block b of g_i holds
// the latest symbol s_j, j < i+m, written to position m-1-(j mod m).
TEST(Anchors, BlocksFollowDeBruijnSequence) {
  for (auto [s, t, n] : {std::tuple{1, 2, 16}, {2, 3, 36}, {1, 2, 36}}) {
    const auto p = ConstructionParams::make(s, t, n);
    const std::vector<BigInt> seq = debruijn_period(p.V(), p.m() - 1);
    const std::size_t m = p.m();
    AnchorSequence as = anchors(p);
    const std::size_t count =
        std::min<std::size_t>(2000, static_cast<std::size_t>(p.L()));
    for (std::size_t i = 0; i < count; ++i) {
      const Anchor a = as.next();
      for (std::size_t b = 0; b < m; ++b) {
        std::size_t j = i + m - 1;
        while (m - 1 - j % m != b) --j;
        ASSERT_EQ(a.blocks[b], seq[j % seq.size()]) << "g_" << i;
      }
      const DecodedState d = decode_state(a.state, p);
      ASSERT_FALSE(d.mid_transition);
      ASSERT_EQ(d.blocks, a.blocks);
      ASSERT_EQ(d.underlined, a.underlined);
    }
  }
}

TEST(Anchors, DistinctOverFullPeriod) {
  for (auto [s, t, n] : {std::tuple{1, 2, 16}, {1, 2, 36}, {2, 3, 36}}) {
    const auto p = ConstructionParams::make(s, t, n);
    AnchorSequence as = anchors(p);
    std::set<std::string> seen;
    for (BigInt i = 0; i < p.L(); ++i) {
      ASSERT_TRUE(seen.insert(as.next().state.key()).second);
    }
  }
}

TEST(BlockRewrite, SixteenCellTransition) {
  const auto p = ConstructionParams::make(1, 2, 16);
  CodeCursor c(p);
  c.advance_to_next_anchor();
  ASSERT_EQ(show(c.state(), 4), kSixteenCellAnchors[1]);
  const auto pushes =
      block_rewrite_steps(block_value_of(0, p), block_value_of(1, p), c);
  EXPECT_EQ(pushes, (std::vector<CellIndex>{7, 9, 8, 10}));

  std::vector<std::string> seen;
  for (int i = 0; i < 4; ++i) {
    c.advance();
    seen.push_back(show(c.state(), 4));
  }
  EXPECT_EQ(seen, (std::vector<std::string>{
                      "1010 0001 0000 0010", "1010 0001 0100 0010",
                      "1010 0000 1100 0010", "1010 0000 1010 0010"}));
  EXPECT_TRUE(c.at_anchor());
}

TEST(BlockRewrite, Preconditions) {
  const auto p = ConstructionParams::make(1, 2, 16);
  CodeCursor c(p);
  // g_0 underlines block 3, which holds s_0 = 0.
  EXPECT_THROW(
      block_rewrite_steps(block_value_of(1, p), block_value_of(0, p), c),
      PreconditionViolated);
  c.advance();
  EXPECT_THROW(
      block_rewrite_steps(block_value_of(0, p), block_value_of(0, p), c),
      PreconditionViolated);
}

// Every (from, to) pair in a random context: each changing-block position
// 0..m-2 is pushed once, the block lands on `to`, and no other block's
// information digits move during the rewrite.
void check_all_pairs(const ConstructionParams& p, std::mt19937_64& rng) {
  const std::size_t m = p.m();
  const auto v = static_cast<std::size_t>(p.V());
  for (std::size_t from = 0; from < v; ++from) {
    for (std::size_t to = 0; to < v; ++to) {
      std::vector<BigInt> blocks(m);
      for (auto& b : blocks) b = rng() % v;
      blocks[m - 1] = from;
      ChargeVector c = bootstrap_charges(blocks, p);
      const auto pushes = block_rewrite_pushes(block_value_of(to, p), m - 1, p);

      ASSERT_EQ(pushes.front(), p.cell(m - 2, m - 1));
      std::vector<CellIndex> inner(pushes.begin() + 1, pushes.end());
      std::sort(inner.begin(), inner.end());
      std::vector<CellIndex> expected(m - 1);
      std::iota(expected.begin(), expected.end(), p.cell(m - 1, 0));
      ASSERT_EQ(inner, expected);

      const SuccinctState before = succinct(demodulate(c, p.base()));
      for (CellIndex j : pushes) {
        apply_push(c, j, p.base());
        const SuccinctState now = succinct(demodulate(c, p.base()));
        for (std::size_t b = 0; b + 1 < m; ++b) {
          ASSERT_EQ(info_digits(now, p, b), info_digits(before, p, b));
        }
      }
      const SuccinctState after = succinct(demodulate(c, p.base()));
      ASSERT_EQ(block_index_of(after.digits().subspan(p.cell(m - 1, 0), m), p),
                to);
    }
  }
}

TEST(BlockRewrite, AllPairsSmall) {
  std::mt19937_64 rng(31);
  check_all_pairs(ConstructionParams::make(1, 2, 16), rng);
  check_all_pairs(ConstructionParams::make(1, 3, 36), rng);
  check_all_pairs(ConstructionParams::make(2, 3, 36), rng);
  check_all_pairs(ConstructionParams::make(2, 2, 16), rng);
}

TEST(BlockRewrite, SameTargetStillPushesEveryCell) {
  const auto p = ConstructionParams::make(1, 2, 25);
  const auto pushes = block_rewrite_pushes(block_value_of(3, p), 2, p);
  EXPECT_EQ(pushes.size(), p.m() + 0u);
  std::set<CellIndex> cells(pushes.begin(), pushes.end());
  EXPECT_EQ(cells.size(), pushes.size());
}

// With 11XXX -> 10XXX the naive run passes back through block value 11,
// but the left neighbour has changed by then, so no codeword repeats.
TEST(RepetitionAvoidance, BlockRevisitIsNotAStateRepeat) {
  const auto p = ConstructionParams::make(1, 2, 25);
  std::vector<BigInt> blocks(5, BigInt(0));
  blocks[4] = 3;
  ChargeVector c = bootstrap_charges(blocks, p);
  const SegmentPlan plan = SegmentPlan::make(c, 4, block_value_of(2, p), p);
  std::vector<std::vector<int>> values;
  std::set<std::string> states;
  values.push_back(info_digits(succinct(demodulate(c, p.base())), p, 4));
  for (CellIndex j : plan.pushes()) {
    apply_push(c, j, p.base());
    const SuccinctState s = succinct(demodulate(c, p.base()));
    values.push_back(info_digits(s, p, 4));
    states.insert(s.key());
  }
  EXPECT_EQ(values, (std::vector<std::vector<int>>{
                        {1, 1}, {1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, 0}}));
  EXPECT_EQ(states.size(), plan.length());
  EXPECT_EQ(plan.emitted_count(), plan.length());
}

// Where the naive run does repeat a codeword, the plan skips the loop and
// the emitted states are distinct.
TEST(RepetitionAvoidance, SkipsRealRepeats) {
  for (auto [s, t, n] : {std::tuple{1, 2, 25}, {2, 2, 16}, {1, 2, 36}}) {
    const auto p = ConstructionParams::make(s, t, n);
    const std::size_t m = p.m();
    const auto v = static_cast<std::size_t>(p.V());
    std::size_t skipping = 0;
    for (std::size_t from = 0; from < v; ++from) {
      for (std::size_t to = 0; to < v; ++to) {
        std::vector<BigInt> blocks(m, BigInt(0));
        blocks[m - 1] = from;
        const ChargeVector start = bootstrap_charges(blocks, p);
        const SegmentPlan plan =
            SegmentPlan::make(start, m - 1, block_value_of(to, p), p);
        std::vector<std::string> naive;
        ChargeVector c = start;
        naive.push_back(demodulate(c, p.base()).key());
        for (CellIndex j : plan.pushes()) {
          apply_push(c, j, p.base());
          naive.push_back(demodulate(c, p.base()).key());
        }
        std::set<std::string> distinct(naive.begin(), naive.end());
        if (distinct.size() < naive.size()) ++skipping;

        std::set<std::string> emitted;
        std::size_t pos = plan.latest_repeat(0);
        emitted.insert(naive[pos]);
        while (pos < plan.length()) {
          pos = plan.latest_repeat(pos + 1);
          ASSERT_TRUE(emitted.insert(naive[pos]).second);
        }
        ASSERT_EQ(emitted.size(), plan.emitted_count() + 1);
        ASSERT_TRUE(std::includes(distinct.begin(), distinct.end(),
                                  emitted.begin(), emitted.end()));
        ASSERT_EQ(naive.back(), naive[pos]);
      }
    }
    EXPECT_GT(skipping, 0u) << s << "," << t << "," << n;
  }
}

TEST(Decode, SixteenCellRows) {
  const auto p = ConstructionParams::make(1, 2, 16);
  const DecodedState g3 = decode_state(bits(p, "1000 1010 1010 0010"), p);
  EXPECT_EQ(g3.blocks, (std::vector<BigInt>{1, 1, 1, 0}));
  EXPECT_EQ(g3.underlined, 0u);
  EXPECT_FALSE(g3.mid_transition);

  const DecodedState aux = decode_state(bits(p, "1010 0001 0100 0010"), p);
  EXPECT_TRUE(aux.mid_transition);
  EXPECT_EQ(aux.underlined, 2u);

  // Underline pair straddling the cyclic boundary.
  const DecodedState wrap = decode_state(bits(p, "0100 1010 1010 1000"), p);
  EXPECT_TRUE(wrap.mid_transition);
  EXPECT_EQ(wrap.underlined, 0u);
}

TEST(Decode, RejectsNonCodewords) {
  const auto p = ConstructionParams::make(1, 2, 16);
  EXPECT_THROW(decode_state(bits(p, "1010 1010 1010 1010"), p), NotACodeword);
  EXPECT_THROW(decode_state(bits(p, "1000 1010 1000 1010"), p), NotACodeword);
  EXPECT_THROW(decode_state(bits(p, "1000 1000 1000 1010"), p), NotACodeword);
}

TEST(Cursor, InvariantsAlongTheCycle) {
  for (auto [s, t, n] : {std::tuple{1, 2, 16}, {2, 2, 16}, {1, 3, 36}}) {
    const auto p = ConstructionParams::make(s, t, n);
    CodeCursor c(p);
    for (int step = 0; step < 3000; ++step) {
      const SuccinctState st = c.state();
      ASSERT_EQ(st, succinct(demodulate(c.charges(), p.base())));
      std::size_t low = 0;
      for (std::size_t b = 0; b < p.m(); ++b) {
        low += st[p.cell(b, p.underline_position())] < p.underline_max();
      }
      ASSERT_EQ(low, c.at_anchor() ? 1u : 2u);
      const DecodedState d = decode_state(st, p);
      ASSERT_EQ(d.underlined, c.active_block());
      const auto flags = c.pushed_flags();
      if (c.at_anchor()) {
        ASSERT_EQ(std::count(flags.begin(), flags.end(), true), 0);
      }
      c.advance();
      if (c.at_anchor() && c.anchor_index() == 0) break;
    }
  }
}

TEST(Cursor, ClonesAdvanceIndependently) {
  const auto p = ConstructionParams::make(1, 3, 36);
  CodeCursor a(p);
  for (int i = 0; i < 40; ++i) a.advance();
  const CodeCursor snapshot = a;
  CodeCursor b = a;
  for (int i = 0; i < 25; ++i) {
    a.advance();
    b.advance();
    ASSERT_EQ(a.state(), b.state());
  }
  CodeCursor replay = snapshot;
  replay.advance();
  EXPECT_EQ(next_state(snapshot).state(), replay.state());
  EXPECT_NE(snapshot.state(), replay.state());
}

TEST(Verify, FullCycleSmall) {
  const auto p = ConstructionParams::make(1, 2, 16);
  const VerifyReport r = verify_code(p);
  EXPECT_TRUE(r.passed()) << r.first_violation;
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.cyclic);
  EXPECT_EQ(r.anchors, 8u);
  EXPECT_EQ(r.states, 32u);
  EXPECT_GE(BigInt(r.states), r.L);
}

TEST(Verify, FullCycleWithBacktrackingRealizability) {
  const VerifyReport r =
      verify_code(ConstructionParams::make(2, 2, 16), std::nullopt, true);
  EXPECT_TRUE(r.passed()) << r.first_violation;
  EXPECT_TRUE(r.complete);
}

TEST(Verify, TruncatedRun) {
  const VerifyReport r = verify_code(ConstructionParams::make(1, 3, 36), 1);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.states, 1u);
}

TEST(CodeSize, MatchesFullIteration) {
  for (auto [s, t, n] : {std::tuple{1, 2, 16}, {2, 2, 16}, {2, 3, 36}}) {
    const auto p = ConstructionParams::make(s, t, n);
    const VerifyReport r = verify_code(p);
    ASSERT_TRUE(r.passed()) << r.first_violation;
    const auto size = code_size(p);
    ASSERT_TRUE(size.has_value());
    EXPECT_EQ(*size, r.states) << s << "," << t << "," << n;
  }
}

TEST(CodeSize, GivesUpOnHugePeriods) {
  EXPECT_FALSE(code_size(ConstructionParams::make(1, 2, 64)).has_value());
}

}  // namespace
}  // namespace lrm
