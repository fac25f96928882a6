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

// The (s,t,n) local rank-modulation scheme: n cells read through n/s
// windows of width t placed every s cells, cyclically.

#ifndef LRM_LRM_CORE_HPP
#define LRM_LRM_CORE_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lrm/bigint.hpp"
#include "lrm/ranks.hpp"

namespace lrm {

// Validated (s, t, n) with 1 <= s <= t <= n and s | n.
struct LrmParams {
  // Throws ParameterError naming the violated constraint.
  static LrmParams make(std::size_t s, std::size_t t, std::size_t n);

  std::size_t s() const { return s_; }
  std::size_t t() const { return t_; }
  std::size_t n() const { return n_; }
  std::size_t window_count() const { return n_ / s_; }

  // First cell of the window that owns cell i's succinct digit.
  std::size_t home_window_start(CellIndex i) const { return s_ * (i / s_); }
  // Largest value the succinct digit of cell i can take.
  int digit_max(CellIndex i) const { return static_cast<int>(t_ - 1 - i % s_); }

  friend bool operator==(const LrmParams&, const LrmParams&) = default;

 private:
  LrmParams(std::size_t s, std::size_t t, std::size_t n)
      : s_(s), t_(t), n_(n) {}

  std::size_t s_;
  std::size_t t_;
  std::size_t n_;
};

// The demodulated sequence (f_0, ..., f_{n/s-1}) of window permutations.
class LocalPermSequence {
 public:
  // Throws ParameterError on a wrong window count and InvalidPermutation on
  // a window of the wrong size.
  LocalPermSequence(const LrmParams& params,
                    std::span<const Permutation> perms);
  // Windows concatenated: ranks of window k at [k*t, (k+1)*t).
  static LocalPermSequence from_ranks(const LrmParams& params,
                                      std::vector<int> flat);

  const LrmParams& params() const { return params_; }
  std::size_t size() const { return params_.window_count(); }
  std::span<const int> ranks(std::size_t k) const {
    return {ranks_.data() + k * params_.t(), params_.t()};
  }
  Permutation perm(std::size_t k) const;

  // One byte per rank, windows in order. Equal keys iff equal sequences.
  std::string key() const;

  friend bool operator==(const LocalPermSequence& a,
                         const LocalPermSequence& b) {
    return a.ranks_ == b.ranks_;
  }
  friend auto operator<=>(const LocalPermSequence& a,
                          const LocalPermSequence& b) {
    return a.ranks_ <=> b.ranks_;
  }

 private:
  LocalPermSequence(const LrmParams& params, std::vector<int> flat)
      : params_(params), ranks_(std::move(flat)) {}

  LrmParams params_;
  std::vector<int> ranks_;
};

// Per-cell digits: digit i counts the cells strictly to the cyclic right of
// cell i, inside the window starting at s*floor(i/s), with lower charge.
class SuccinctState {
 public:
  // Throws ParameterError on length mismatch, DigitOutOfRange on a digit
  // above params.digit_max(i).
  SuccinctState(const LrmParams& params, std::vector<int> digits);

  const LrmParams& params() const { return params_; }
  std::span<const int> digits() const { return digits_; }
  int operator[](std::size_t i) const { return digits_[i]; }
  // The s digits owned by window k.
  std::span<const int> group(std::size_t k) const {
    return {digits_.data() + k * params_.s(), params_.s()};
  }
  std::string key() const;

  friend bool operator==(const SuccinctState& a, const SuccinctState& b) {
    return a.digits_ == b.digits_;
  }
  friend auto operator<=>(const SuccinctState& a, const SuccinctState& b) {
    return a.digits_ <=> b.digits_;
  }

 private:
  LrmParams params_;
  std::vector<int> digits_;
};

// Throws ParameterError if |c| != n.
LocalPermSequence demodulate(const ChargeVector& c, const LrmParams& p);

SuccinctState succinct(const LocalPermSequence& f);

enum class Realizability { kRealizable, kContradictory, kCyclic };

// Overlapping windows must order shared cells the same way
// (kContradictory otherwise) and the union of window orders must be acyclic
// (kCyclic otherwise).
Realizability check_realizability(const LocalPermSequence& f);
inline bool is_realizable(const LocalPermSequence& f) {
  return check_realizability(f) == Realizability::kRealizable;
}

// Integer charges demodulating to f, from a topological sort of the window
// orders. With `rng`, ties between available cells are broken at random so
// repeated calls sample different realizations. Throws NotRealizable.
ChargeVector realize(const LocalPermSequence& f,
                     std::mt19937_64* rng = nullptr);

// Calls `visit` for every realizable sequence whose succinct form equals
// `state`, in lexicographic order, until `visit` returns false. Backtracks
// over window completions; exponential in the worst case. Returns false iff
// stopped early. Throws TooLarge above `max_cells` cells.
bool for_each_completion(
    const SuccinctState& state,
    const std::function<bool(const LocalPermSequence&)>& visit,
    std::size_t max_cells = 128);

// First completion of `state`, as integer charges. Throws NotRealizable if
// the digits admit no realizable completion.
ChargeVector realize_succinct(const SuccinctState& state,
                              std::size_t max_cells = 128);

inline constexpr std::size_t kDefaultEnumerationLimit = 10;

// R(s,t,n): demodulations of all n! orderings, sorted and deduplicated.
// Throws TooLarge if n > limit.
std::vector<LocalPermSequence> enumerate_states(
    const LrmParams& p, std::size_t limit = kDefaultEnumerationLimit);

struct StateCensus {
  std::size_t states = 0;           // |R(s,t,n)|
  std::size_t succinct_states = 0;  // |{succinct(f) : f in R(s,t,n)}|
};

// Same walk as enumerate_states but keeps only compact keys.
StateCensus census(const LrmParams& p,
                   std::size_t limit = kDefaultEnumerationLimit);

// (t-s)! * (t!/(t-s)!)^(n/s).
BigInt count_bound(const LrmParams& p);

}  // namespace lrm

#endif  // LRM_LRM_CORE_HPP
