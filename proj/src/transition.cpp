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

#include "lrm/transition.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "lrm/errors.hpp"

namespace lrm {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

std::size_t wrap(std::int64_t v, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(((v % m) + m) % m);
}

void check_cell(CellIndex j, const LrmParams& p) {
  if (j >= p.n()) {
    throw IndexOutOfRange("cell " + std::to_string(j) +
                          " >= n = " + std::to_string(p.n()));
  }
}

}  // namespace

Extent comparable_extent(CellIndex j, const LrmParams& p) {
  check_cell(j, p);
  const auto s = static_cast<std::int64_t>(p.s());
  const auto t = static_cast<std::int64_t>(p.t());
  const auto jj = static_cast<std::int64_t>(j);
  const std::int64_t left = s * ceil_div(jj - t + 1, s);
  const std::int64_t right = s * floor_div(jj, s) + t - 1;
  const auto length = static_cast<std::size_t>(right - left + 1);
  return {wrap(left, p.n()), wrap(right, p.n()), std::min(length, p.n())};
}

std::vector<CellIndex> comparable_cells(CellIndex j, const LrmParams& p) {
  const Extent e = comparable_extent(j, p);
  std::vector<CellIndex> cells(e.length);
  for (std::size_t k = 0; k < e.length; ++k) cells[k] = (e.left + k) % p.n();
  std::sort(cells.begin(), cells.end());
  return cells;
}

void apply_push(ChargeVector& c, CellIndex j, const LrmParams& p) {
  check_cell(j, p);
  if (c.size() != p.n()) {
    throw ParameterError("expected " + std::to_string(p.n()) +
                         " charges, got " + std::to_string(c.size()));
  }
  std::vector<Charge>& v = c.charges_;
  const std::size_t n = p.n();
  const Extent e = comparable_extent(j, p);
  Charge top = v[e.left];
  for (std::size_t k = 1; k < e.length; ++k) {
    top = std::max(top, v[(e.left + k) % n]);
  }
  v[j] = top + 1;

  bool collision = false;
  for (std::size_t i = 0; i < n && !collision; ++i) {
    collision = (i != j && v[i] == v[j]);
  }
  if (!collision) return;

  // Cells tied with j share no window with it, so any tie-break is valid.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (v[a] != v[b]) return v[a] < v[b];
    return b == j;
  });
  for (std::size_t r = 0; r < n; ++r) v[order[r]] = static_cast<Charge>(r);
}

ChargeVector push_charges(const ChargeVector& c, CellIndex j,
                          const LrmParams& p) {
  ChargeVector out = c;
  apply_push(out, j, p);
  return out;
}

LocalPermSequence push_state_unchecked(const LocalPermSequence& f,
                                       CellIndex j) {
  const LrmParams& p = f.params();
  check_cell(j, p);
  const std::size_t n = p.n();
  const std::size_t t = p.t();
  std::vector<int> flat;
  flat.reserve(p.window_count() * t);
  for (std::size_t k = 0; k < p.window_count(); ++k) {
    const auto r = f.ranks(k);
    const std::size_t start = k * p.s();
    const std::size_t offset = (j + n - start) % n;
    if (offset >= t) {
      flat.insert(flat.end(), r.begin(), r.end());
      continue;
    }
    const int old = r[offset];
    for (std::size_t i = 0; i < t; ++i) {
      if (i == offset) {
        flat.push_back(static_cast<int>(t) - 1);
      } else {
        flat.push_back(r[i] > old ? r[i] - 1 : r[i]);
      }
    }
  }
  return LocalPermSequence::from_ranks(p, std::move(flat));
}

LocalPermSequence push_state(const LocalPermSequence& f, CellIndex j) {
  if (!is_realizable(f)) {
    throw NotRealizable("push_state needs a realizable sequence");
  }
  return push_state_unchecked(f, j);
}

}  // namespace lrm
