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

// Push-to-the-top: raise one cell above every cell it shares a window with.

#ifndef LRM_TRANSITION_HPP
#define LRM_TRANSITION_HPP

#include <cstddef>
#include <vector>

#include "lrm/lrm_core.hpp"
#include "lrm/ranks.hpp"

namespace lrm {

struct Extent {
  CellIndex left;   // l(j) = s*ceil((j-t+1)/s) mod n
  CellIndex right;  // r(j) = (s*floor(j/s) + t - 1) mod n
  // Number of cells in the cyclic range left..right, capped at n.
  std::size_t length;

  friend bool operator==(const Extent&, const Extent&) = default;
};

// Throws IndexOutOfRange if j >= n.
Extent comparable_extent(CellIndex j, const LrmParams& p);

// Cells sharing at least one window with j (j included), ascending.
std::vector<CellIndex> comparable_cells(CellIndex j, const LrmParams& p);

// c'_j = max{c_l(j), ..., c_r(j)} + 1, other cells unchanged. If the new
// value equals the charge of a cell outside the extent, all charges are
// replaced by their ranks (0..n-1, j placed above its tie), which preserves
// every window order.
ChargeVector push_charges(const ChargeVector& c, CellIndex j,
                          const LrmParams& p);

// In-place form of push_charges.
void apply_push(ChargeVector& c, CellIndex j, const LrmParams& p);

// tau_j on states: in every window containing j, j takes the top rank and
// the other cells keep their relative order. Throws NotRealizable if f is
// not realizable, IndexOutOfRange if j >= n.
LocalPermSequence push_state(const LocalPermSequence& f, CellIndex j);

// push_state without the realizability check on f.
LocalPermSequence push_state_unchecked(const LocalPermSequence& f, CellIndex j);

}  // namespace lrm

#endif  // LRM_TRANSITION_HPP
