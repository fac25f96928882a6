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

#include <algorithm>
#include <boost/integer/common_factor_rt.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "lrm/errors.hpp"
#include "lrm/transition.hpp"

namespace lrm {

namespace {

std::size_t exact_sqrt(std::size_t n) {
  auto m =
      static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (m * m > n) --m;
  while ((m + 1) * (m + 1) <= n) ++m;
  return m;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Clamped extents of the flag loop: cells left of the block, and the two
// trailing cells, are never candidates.
std::size_t clamped_left(std::size_t j, const ConstructionParams& p) {
  const auto s = static_cast<std::int64_t>(p.s());
  const auto t = static_cast<std::int64_t>(p.t());
  const auto jj = static_cast<std::int64_t>(j);
  const std::int64_t num = jj - t + 1;
  // s * ceil(num / s) for possibly negative num.
  const std::int64_t q = num >= 0 ? (num + s - 1) / s : -((-num) / s);
  const std::int64_t left = s * q;
  return left < 0 ? 0 : static_cast<std::size_t>(left);
}

std::size_t clamped_right(std::size_t j, const ConstructionParams& p) {
  const std::size_t right = p.s() * (j / p.s()) + p.t() - 1;
  return std::min(right, p.m() - 3);
}

// Windows (by index) that contain at least one of `cells`.
std::vector<std::size_t> windows_touching(std::span<const CellIndex> cells,
                                          const LrmParams& p) {
  std::vector<bool> hit(p.window_count(), false);
  const std::size_t n = p.n();
  for (CellIndex c : cells) {
    for (std::size_t d = 0; d < p.t(); ++d) {
      const std::size_t start = (c + n - d) % n;
      if (start % p.s() == 0) hit[start / p.s()] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < hit.size(); ++k) {
    if (hit[k]) out.push_back(k);
  }
  return out;
}

// Ranks of the given windows, one byte each.
std::string window_key(const ChargeVector& c, std::span<const std::size_t> ws,
                       const LrmParams& p) {
  const std::size_t t = p.t();
  const std::size_t n = p.n();
  std::string key;
  key.reserve(ws.size() * t);
  for (std::size_t k : ws) {
    const std::size_t start = k * p.s();
    for (std::size_t i = 0; i < t; ++i) {
      const Charge ci = c[(start + i) % n];
      int rank = 0;
      for (std::size_t l = 0; l < t; ++l) {
        if (c[(start + l) % n] < ci) ++rank;
      }
      key.push_back(static_cast<char>(rank));
    }
  }
  return key;
}

// Compact identity of a demodulated state for the distinctness set. With
// t <= 5 each window fits one byte as its Lehmer rank.
std::string compact_key(const LocalPermSequence& f) {
  const std::size_t t = f.params().t();
  if (t > 5) return f.key();
  std::string key;
  key.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto r = f.ranks(k);
    int code = 0;
    for (std::size_t i = 0; i < t; ++i) {
      int lower = 0;
      for (std::size_t j = i + 1; j < t; ++j) lower += r[j] < r[i];
      code = code * static_cast<int>(t - i) + lower;
    }
    key.push_back(static_cast<char>(code));
  }
  return key;
}

void record(VerifyReport& report, bool& flag, const std::string& what) {
  if (flag) {
    flag = false;
    if (report.first_violation.empty()) report.first_violation = what;
  }
}

std::string digits_text(const SuccinctState& s) {
  std::string out;
  for (std::size_t i = 0; i < s.digits().size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace

ConstructionParams::ConstructionParams(const LrmParams& base)
    : base_(base), m_(exact_sqrt(base.n())) {
  z_ = s() * (ceil_div(t() + 2, s()) - 1);
  const BigInt a =
      falling_factorial(static_cast<unsigned>(t()), static_cast<unsigned>(s()));
  const std::size_t exponent = m_ / s() - ceil_div(t() + 2, s()) + 1;
  v_ = boost::multiprecision::pow(a, static_cast<unsigned>(exponent));
  period_ = boost::multiprecision::pow(v_, static_cast<unsigned>(m_ - 1));
  const BigInt mm = m_;
  l_ = period_ / boost::multiprecision::gcd(period_, mm) * mm;
}

ConstructionParams ConstructionParams::make(std::size_t s, std::size_t t,
                                            std::size_t n) {
  const LrmParams base = LrmParams::make(s, t, n);
  const std::size_t m = exact_sqrt(n);
  if (m * m != n) throw ParameterError("n = m*m violated");
  if (t < 2) throw ParameterError("t >= 2 violated");
  if (m < t + 2) throw ParameterError("m >= t+2 violated");
  if (m % s != 0) throw ParameterError("s | m violated");
  return ConstructionParams(base);
}

BlockValue block_value_of(const BigInt& index, const ConstructionParams& p) {
  if (index < 0 || index >= p.V()) {
    throw IndexOutOfRange("block index " + to_decimal(index) + " not in [0, " +
                          to_decimal(p.V()) + ")");
  }
  BlockValue v{index, std::vector<int>(p.m(), 0)};
  BigInt rest = index;
  for (std::size_t k = p.info_digits(); k-- > 0;) {
    const int r = p.radix(k);
    v.digits[k] = static_cast<int>(rest % r);
    rest /= r;
  }
  return v;
}

BigInt block_index_of(std::span<const int> digits,
                      const ConstructionParams& p) {
  if (digits.size() < p.info_digits()) {
    throw ParameterError("block has " + std::to_string(digits.size()) +
                         " digits, need " + std::to_string(p.info_digits()));
  }
  BigInt index = 0;
  for (std::size_t k = 0; k < p.info_digits(); ++k) {
    const int r = p.radix(k);
    if (digits[k] < 0 || digits[k] >= r) {
      throw DigitOutOfRange("block digit " + std::to_string(k) + " = " +
                            std::to_string(digits[k]));
    }
    index = index * r + digits[k];
  }
  return index;
}

std::vector<CellIndex> block_rewrite_pushes(const BlockValue& to,
                                            std::size_t block,
                                            const ConstructionParams& p,
                                            WorkCounters* work) {
  const std::size_t m = p.m();
  const std::size_t n = p.n();
  if (block >= m) throw IndexOutOfRange("block " + std::to_string(block));
  if (to.digits.size() != m) throw ParameterError("target needs m digits");
  const CellIndex base = p.cell(block, 0);

  std::vector<CellIndex> pushes{(base + n - 1) % n};
  std::vector<int> a(m - 2, 0);
  const std::size_t guard = 4 * m * m * p.t() + 16;
  std::size_t steps = 0;
  std::size_t j = 0;
  do {
    if (++steps > guard) throw std::logic_error("flag loop did not terminate");
    int sum = 0;
    const std::size_t right = clamped_right(j, p);
    for (std::size_t i = j + 1; i <= right; ++i) sum += a[i];
    if (to.digits[j] == sum && a[j] == 0) {
      pushes.push_back(base + j);
      a[j] = 1;
      j = clamped_left(j, p);
    } else {
      ++j;
    }
  } while (j != m - 2);
  pushes.push_back(base + m - 2);
  if (work != nullptr) work->loop_steps += steps;
  return pushes;
}

ChargeVector bootstrap_charges(std::span<const BigInt> blocks,
                               const ConstructionParams& p) {
  if (blocks.size() != p.m()) throw ParameterError("need m block values");
  std::vector<Charge> start(p.n());
  std::iota(start.begin(), start.end(), 0.0);
  ChargeVector c(std::move(start));
  for (std::size_t b = p.m(); b-- > 0;) {
    for (CellIndex j :
         block_rewrite_pushes(block_value_of(blocks[b], p), b, p)) {
      apply_push(c, j, p.base());
    }
  }
  return c;
}

SegmentPlan SegmentPlan::make(const ChargeVector& anchor, std::size_t block,
                              const BlockValue& to,
                              const ConstructionParams& p) {
  SegmentPlan plan;
  plan.block_ = block;
  plan.pushes_ = block_rewrite_pushes(to, block, p, &plan.work_);
  const std::size_t k_max = plan.pushes_.size();
  const std::vector<std::size_t> ws = windows_touching(plan.pushes_, p.base());

  // Windows away from the pushed cells never change, so equal keys mean
  // equal states.
  ChargeVector sim = anchor;
  std::unordered_map<std::string, std::size_t> latest;
  std::vector<std::string> keys;
  keys.reserve(k_max + 1);
  keys.push_back(window_key(sim, ws, p.base()));
  for (CellIndex j : plan.pushes_) {
    apply_push(sim, j, p.base());
    keys.push_back(window_key(sim, ws, p.base()));
  }
  for (std::size_t k = 0; k <= k_max; ++k) latest[keys[k]] = k;
  plan.latest_.resize(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) plan.latest_[k] = latest[keys[k]];

  plan.work_.simulated_pushes += k_max;
  plan.work_.compared_ranks += (k_max + 1) * ws.size() * p.t();
  return plan;
}

std::size_t SegmentPlan::emitted_count() const {
  std::size_t count = 0;
  for (std::size_t pos = latest_[0]; pos < length(); ++count) {
    pos = latest_[pos + 1];
  }
  return count;
}

CodeCursor::CodeCursor(const ConstructionParams& p)
    : params_(p),
      stream_(p.V(), p.m() - 1),
      blocks_(p.m()),
      active_block_(p.m() - 1),
      charges_({0.0}) {
  for (std::size_t k = 0; k < p.m(); ++k)
    blocks_[p.m() - 1 - k] = stream_.next();
  charges_ = bootstrap_charges(blocks_, p);
}

LocalPermSequence CodeCursor::perms() const {
  return demodulate(charges_, params_.base());
}

SuccinctState CodeCursor::state() const { return succinct(perms()); }

std::vector<bool> CodeCursor::pushed_flags() const {
  std::vector<bool> flags(params_.m() - 2, false);
  if (!plan_) return flags;
  const CellIndex base = params_.cell(active_block_, 0);
  const auto pushes = plan_->pushes();
  for (std::size_t k = 0; k < position_; ++k) {
    const CellIndex j = pushes[k];
    if (j >= base && j < base + params_.m() - 2) flags[j - base] = true;
  }
  return flags;
}

void CodeCursor::begin_segment() {
  target_ = stream_.next();
  plan_ = SegmentPlan::make(charges_, active_block_,
                            block_value_of(target_, params_), params_);
  work_ += plan_->work();
  position_ = plan_->latest_repeat(0);
  segment_step_ = 0;
}

void CodeCursor::finish_segment() {
  blocks_[active_block_] = target_;
  anchor_index_ = (anchor_index_ + 1) % params_.L();
  active_block_ = (active_block_ + params_.m() - 1) % params_.m();
  plan_.reset();
  segment_step_ = 0;
}

void CodeCursor::advance() {
  if (!plan_) begin_segment();
  const CellIndex j = plan_->pushes()[position_];
  apply_push(charges_, j, params_.base());
  ++work_.pushes;
  last_push_ = j;
  position_ = plan_->latest_repeat(position_ + 1);
  ++segment_step_;
  if (position_ == plan_->length()) finish_segment();
}

void CodeCursor::advance_to_next_anchor() {
  std::vector<CellIndex> rest;
  if (plan_) {
    const auto pushes = plan_->pushes();
    rest.assign(pushes.begin() + static_cast<std::ptrdiff_t>(position_),
                pushes.end());
  } else {
    target_ = stream_.next();
    rest = block_rewrite_pushes(block_value_of(target_, params_), active_block_,
                                params_, &work_);
  }
  for (CellIndex j : rest) {
    apply_push(charges_, j, params_.base());
    ++work_.pushes;
    last_push_ = j;
  }
  finish_segment();
}

std::vector<CellIndex> block_rewrite_steps(const BlockValue& from,
                                           const BlockValue& to,
                                           const CodeCursor& cursor) {
  if (!cursor.at_anchor()) {
    throw PreconditionViolated("cursor is mid-transition");
  }
  const ConstructionParams& p = cursor.params();
  if (cursor.blocks()[cursor.active_block()] != from.index) {
    throw PreconditionViolated(
        "underlined block holds " +
        to_decimal(cursor.blocks()[cursor.active_block()]) + ", not " +
        to_decimal(from.index));
  }
  return block_rewrite_pushes(to, cursor.active_block(), p);
}

Anchor AnchorSequence::next() {
  Anchor a{
      cursor_.anchor_index(), cursor_.state(),
      std::vector<BigInt>(cursor_.blocks().begin(), cursor_.blocks().end()),
      cursor_.active_block()};
  cursor_.advance_to_next_anchor();
  return a;
}

DecodedState decode_state(const SuccinctState& state,
                          const ConstructionParams& p) {
  if (!(state.params() == p.base())) {
    throw ParameterError("state parameters differ from the construction");
  }
  const std::size_t m = p.m();
  DecodedState out;
  out.blocks.reserve(m);
  std::vector<std::size_t> low;
  for (std::size_t b = 0; b < m; ++b) {
    const auto digits = state.digits().subspan(p.cell(b, 0), m);
    out.blocks.push_back(block_index_of(digits, p));
    if (digits[p.underline_position()] < p.underline_max()) low.push_back(b);
  }
  if (low.size() == 1) {
    out.underlined = low[0];
    return out;
  }
  if (low.size() == 2) {
    // Sorted, so a cyclic pair is either (b-1, b) or (0, m-1).
    if (low[0] + 1 == low[1]) {
      out.underlined = low[1];
    } else if (low[0] == 0 && low[1] == m - 1) {
      out.underlined = 0;
    } else {
      throw NotACodeword("non-adjacent underlined blocks");
    }
    out.mid_transition = true;
    return out;
  }
  throw NotACodeword(std::to_string(low.size()) +
                     " blocks with a non-maximal underline digit");
}

bool VerifyReport::passed() const {
  if (!(distinct && adjacent && realizable && decodable)) return false;
  if (!complete) return true;
  return cyclic && size_at_least_L;
}

VerifyReport verify_code(const ConstructionParams& p,
                         std::optional<std::uint64_t> limit,
                         bool full_realizability) {
  VerifyReport report;
  report.L = p.L();
  CodeCursor cursor(p);
  LocalPermSequence prev = cursor.perms();
  const LocalPermSequence first = prev;
  std::unordered_set<std::string> seen;
  seen.insert(compact_key(prev));
  report.states = 1;
  report.anchors = 1;

  auto check_state = [&](const LocalPermSequence& f) {
    if (!is_realizable(f)) {
      record(report, report.realizable, "unrealizable state");
      return;
    }
    const SuccinctState s = succinct(f);
    if (full_realizability) {
      bool found = false;
      try {
        for_each_completion(
            s,
            [&](const LocalPermSequence& g) {
              found = (g == f);
              return !found;
            },
            p.n());
      } catch (const TooLarge&) {
        found = false;
      }
      if (!found) {
        record(report, report.realizable,
               "digits " + digits_text(s) + " do not re-realize the state");
      }
    }
    try {
      const DecodedState d = decode_state(s, p);
      const bool anchor = cursor.at_anchor();
      bool ok =
          d.mid_transition != anchor && d.underlined == cursor.active_block();
      for (std::size_t b = 0; ok && b < p.m(); ++b) {
        if (!anchor && b == cursor.active_block()) continue;
        ok = d.blocks[b] == cursor.blocks()[b];
      }
      if (!ok) {
        record(report, report.decodable,
               "decode mismatch at " + digits_text(s));
      }
    } catch (const Error& e) {
      record(report, report.decodable,
             std::string(e.what()) + " at " + digits_text(s));
    }
  };
  check_state(prev);

  while (!limit || report.states < *limit) {
    cursor.advance();
    LocalPermSequence cur = cursor.perms();
    const CellIndex j = *cursor.last_push();
    if (cur == prev || push_state_unchecked(prev, j) != cur) {
      record(report, report.adjacent,
             "bad adjacency: " + digits_text(succinct(prev)) + " -> " +
                 digits_text(succinct(cur)) + " via cell " + std::to_string(j));
    }
    if (cursor.at_anchor() && cursor.anchor_index() == 0) {
      report.complete = true;
      report.cyclic = (cur == first);
      if (!report.cyclic) {
        record(report, report.cyclic, "cycle does not close at g_0");
      }
      break;
    }
    check_state(cur);
    if (!seen.insert(compact_key(cur)).second) {
      record(report, report.distinct,
             "repeated state " + digits_text(succinct(cur)));
    }
    ++report.states;
    if (cursor.at_anchor()) ++report.anchors;
    prev = std::move(cur);
  }
  report.size_at_least_L = report.complete && BigInt(report.states) >= p.L();
  return report;
}

std::size_t segment_length(const BigInt& from, const BigInt& to,
                           const ConstructionParams& p) {
  std::vector<BigInt> blocks(p.m(), BigInt(0));
  blocks[p.m() - 1] = from;
  const ChargeVector c = bootstrap_charges(blocks, p);
  return SegmentPlan::make(c, p.m() - 1, block_value_of(to, p), p)
      .emitted_count();
}

std::optional<BigInt> code_size(const ConstructionParams& p,
                                std::uint64_t max_pairs,
                                std::uint64_t max_period) {
  if (p.V() * p.V() > max_pairs) return std::nullopt;
  const auto v = static_cast<std::size_t>(p.V());
  std::vector<std::size_t> table(v * v);
  bool constant = true;
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = 0; b < v; ++b) {
      table[a * v + b] = segment_length(a, b, p);
      constant = constant && table[a * v + b] == table[0];
    }
  }
  if (constant) return p.L() * table[0];
  if (p.debruijn_period() > max_period) return std::nullopt;

  // Segment i takes s_i to s_{i+m}; each residue mod the period recurs
  // L/period times.
  const std::vector<BigInt> seq = debruijn_period(p.V(), p.m() - 1);
  const std::size_t period = seq.size();
  BigInt per_period = 0;
  for (std::size_t i = 0; i < period; ++i) {
    const auto a = static_cast<std::size_t>(seq[i]);
    const auto b = static_cast<std::size_t>(seq[(i + p.m()) % period]);
    per_period += table[a * v + b];
  }
  return per_period * (p.L() / p.debruijn_period());
}

}  // namespace lrm
