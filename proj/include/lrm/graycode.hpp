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

// Cyclic Gray codes over (s,t,n) local rank modulation with n = m*m.
//
// The n cells form m blocks of m cells. Each block stores a symbol of an
// alphabet of size V in the leading m-z succinct digits of its cells; the
// trailing z digits carry no data. Anchor codewords follow a de Bruijn
// sequence of order m-1 over [V]: going from anchor g_i to g_{i+1} rewrites
// block m-1-(i mod m) from s_i to s_{i+m}. The rewrite is a run of
// push-to-the-top operations in which every codeword is a valid state, so
// consecutive codewords always differ by a single push.
//
// The second-from-right digit of each block (the underline digit) marks the
// block about to change: it is below its maximum in exactly that block at
// an anchor, and in the changing block and its left neighbour in between.

#ifndef LRM_GRAYCODE_HPP
#define LRM_GRAYCODE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrm/bigint.hpp"
#include "lrm/debruijn.hpp"
#include "lrm/lrm_core.hpp"
#include "lrm/ranks.hpp"

namespace lrm {

class ConstructionParams {
 public:
  // Requires n = m*m, m >= t+2, s | m, t >= 2 and valid (s,t,n). Throws
  // ParameterError naming the first violated constraint.
  static ConstructionParams make(std::size_t s, std::size_t t, std::size_t n);

  const LrmParams& base() const { return base_; }
  std::size_t s() const { return base_.s(); }
  std::size_t t() const { return base_.t(); }
  std::size_t n() const { return base_.n(); }
  std::size_t m() const { return m_; }
  // Non-information digits per block: s*(ceil((t+2)/s) - 1).
  std::size_t z() const { return z_; }
  std::size_t info_digits() const { return m_ - z_; }
  // (t!/(t-s)!)^(m/s - ceil((t+2)/s) + 1)
  const BigInt& V() const { return v_; }
  // lcm(m, V^(m-1))
  const BigInt& L() const { return l_; }
  const BigInt& debruijn_period() const { return period_; }

  // Number of values digit k of a block can take.
  int radix(std::size_t k) const { return static_cast<int>(t() - k % s()); }
  std::size_t underline_position() const { return m_ - 2; }
  int underline_max() const { return radix(m_ - 2) - 1; }
  CellIndex cell(std::size_t block, std::size_t offset) const {
    return block * m_ + offset;
  }

  friend bool operator==(const ConstructionParams& a,
                         const ConstructionParams& b) {
    return a.base_ == b.base_;
  }

 private:
  explicit ConstructionParams(const LrmParams& base);

  LrmParams base_;
  std::size_t m_;
  std::size_t z_;
  BigInt v_;
  BigInt period_;
  BigInt l_;
};

// A symbol of the block alphabet and its canonical digit vector (length m,
// non-information digits zero). Equality looks at the index only, which is
// equivalent to comparing information digits.
struct BlockValue {
  BigInt index;
  std::vector<int> digits;

  friend bool operator==(const BlockValue& a, const BlockValue& b) {
    return a.index == b.index;
  }
};

// Mixed-radix decode over the information digits, digit 0 most significant.
// Throws IndexOutOfRange unless 0 <= index < V.
BlockValue block_value_of(const BigInt& index, const ConstructionParams& p);

// Inverse of block_value_of; reads only the first m-z entries of `digits`.
BigInt block_index_of(std::span<const int> digits, const ConstructionParams& p);

// Work done by the cursor, for complexity measurements.
struct WorkCounters {
  std::uint64_t pushes = 0;            // pushes applied to the live charges
  std::uint64_t loop_steps = 0;        // iterations of the flag loop
  std::uint64_t simulated_pushes = 0;  // pushes replayed while planning
  std::uint64_t compared_ranks = 0;    // window ranks hashed while planning

  std::uint64_t total() const {
    return pushes + loop_steps + simulated_pushes + compared_ranks;
  }
  WorkCounters& operator+=(const WorkCounters& o) {
    pushes += o.pushes;
    loop_steps += o.loop_steps;
    simulated_pushes += o.simulated_pushes;
    compared_ranks += o.compared_ranks;
    return *this;
  }
};

// The push sequence that rewrites block `block` to `to`: the last cell of
// the left neighbour block, then the flag loop over offsets 0..m-3, then
// offset m-2. Depends only on the target. Cell indices are global.
std::vector<CellIndex> block_rewrite_pushes(const BlockValue& to,
                                            std::size_t block,
                                            const ConstructionParams& p,
                                            WorkCounters* work = nullptr);

// Anchor charges holding `blocks` (m indices) with block m-1 underlined.
// Starts from arbitrary distinct charges and rewrites blocks m-1, ..., 0
// in turn, so every cell is pushed and the start values are forgotten.
ChargeVector bootstrap_charges(std::span<const BigInt> blocks,
                               const ConstructionParams& p);

// Naive trajectory X_0..X_K of one block rewrite and, for each k, the
// latest index whose state equals X_k. The code walks
// X_{last(0)}, X_{last(last(0)+1)}, ... which visits each state of the
// segment once and still ends at X_K.
class SegmentPlan {
 public:
  static SegmentPlan make(const ChargeVector& anchor, std::size_t block,
                          const BlockValue& to, const ConstructionParams& p);

  std::size_t block() const { return block_; }
  // pushes()[k] takes X_k to X_{k+1}.
  std::span<const CellIndex> pushes() const { return pushes_; }
  std::size_t length() const { return pushes_.size(); }
  std::size_t latest_repeat(std::size_t k) const { return latest_[k]; }
  // Codewords emitted after the starting anchor, next anchor included.
  std::size_t emitted_count() const;
  const WorkCounters& work() const { return work_; }

 private:
  std::size_t block_ = 0;
  std::vector<CellIndex> pushes_;
  std::vector<std::size_t> latest_;
  WorkCounters work_;
};

// Position in the code: a concrete charge realization plus the state of the
// current block rewrite. Advancing is not thread-safe; copies advance
// independently.
class CodeCursor {
 public:
  // Positioned at g_0.
  explicit CodeCursor(const ConstructionParams& p);

  const ConstructionParams& params() const { return params_; }
  // i of the anchor g_i last reached, in [0, L).
  const BigInt& anchor_index() const { return anchor_index_; }
  bool at_anchor() const { return !plan_.has_value(); }
  // Auxiliary codewords emitted so far in the current rewrite.
  std::size_t segment_step() const { return segment_step_; }
  // Underlined block at an anchor, changing block in between.
  std::size_t active_block() const { return active_block_; }
  // Block values of the last anchor.
  std::span<const BigInt> blocks() const { return blocks_; }
  const ChargeVector& charges() const { return charges_; }
  LocalPermSequence perms() const;
  SuccinctState state() const;
  // Flags a_0..a_{m-3} of the rewrite in progress (all false at an anchor).
  std::vector<bool> pushed_flags() const;
  std::optional<CellIndex> last_push() const { return last_push_; }
  const WorkCounters& work() const { return work_; }

  // Moves to the next codeword, skipping repeated states.
  void advance();
  // Applies the remaining pushes of the current rewrite (or a whole
  // rewrite, at an anchor) and stops at the next anchor.
  void advance_to_next_anchor();

 private:
  void begin_segment();
  void finish_segment();

  ConstructionParams params_;
  DeBruijnStream stream_;
  std::vector<BigInt> blocks_;
  BigInt anchor_index_ = 0;
  std::size_t active_block_ = 0;
  ChargeVector charges_;
  std::optional<SegmentPlan> plan_;
  BigInt target_ = 0;
  std::size_t position_ = 0;  // index into the naive trajectory
  std::size_t segment_step_ = 0;
  std::optional<CellIndex> last_push_;
  WorkCounters work_;
};

inline CodeCursor next_state(CodeCursor cursor) {
  cursor.advance();
  return cursor;
}

// Precondition-checked rewrite pushes for the cursor's pending rewrite.
// Throws PreconditionViolated unless the cursor is at an anchor whose
// underlined block holds `from`.
std::vector<CellIndex> block_rewrite_steps(const BlockValue& from,
                                           const BlockValue& to,
                                           const CodeCursor& cursor);

struct Anchor {
  BigInt index;
  SuccinctState state;
  std::vector<BigInt> blocks;
  std::size_t underlined;
};

// g_0, g_1, ... cyclically (period L).
class AnchorSequence {
 public:
  explicit AnchorSequence(const ConstructionParams& p) : cursor_(p) {}
  Anchor next();

 private:
  CodeCursor cursor_;
};

inline AnchorSequence anchors(const ConstructionParams& p) {
  return AnchorSequence(p);
}

struct DecodedState {
  std::vector<BigInt> blocks;
  std::size_t underlined = 0;  // the changing block when mid_transition
  bool mid_transition = false;
};

// Throws NotACodeword unless exactly one block, or two cyclically adjacent
// blocks, have a non-maximal underline digit.
DecodedState decode_state(const SuccinctState& state,
                          const ConstructionParams& p);

struct VerifyReport {
  std::uint64_t states = 0;  // distinct codewords visited
  std::uint64_t anchors = 0;
  BigInt L;
  bool complete = false;  // walked back to g_0
  bool distinct = true;
  bool adjacent = true;  // each step is one push_state
  bool realizable = true;
  bool decodable = true;
  bool cyclic = false;
  bool size_at_least_L = false;
  std::string first_violation;

  // True when every check that applies passed. A truncated walk can only
  // fail distinctness, adjacency, realizability or decoding.
  bool passed() const;
};

// Walks the code from g_0 for at most `limit` codewords (the whole cycle if
// unset) and checks every codeword against the independent oracles. With
// `full_realizability`, each succinct state is also re-realized by
// backtracking from its digits alone.
VerifyReport verify_code(const ConstructionParams& p,
                         std::optional<std::uint64_t> limit = std::nullopt,
                         bool full_realizability = false);

// Codewords emitted while block m-1 goes from `from` to `to` in the steady
// state of the code.
std::size_t segment_length(const BigInt& from, const BigInt& to,
                           const ConstructionParams& p);

// Code size N from per-segment lengths: exact when every (from, to) pair
// gives the same length, or when the de Bruijn period is at most
// `max_period` symbols. Returns nullopt otherwise or when V*V exceeds
// `max_pairs`.
std::optional<BigInt> code_size(const ConstructionParams& p,
                                std::uint64_t max_pairs = 1u << 20,
                                std::uint64_t max_period = 1u << 24);

}  // namespace lrm

#endif  // LRM_GRAYCODE_HPP
