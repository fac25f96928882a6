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

#include "lrm/ranks.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lrm/errors.hpp"

namespace lrm {

Permutation::Permutation(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  std::vector<bool> seen(ranks_.size(), false);
  for (int r : ranks_) {
    if (r < 0 || static_cast<std::size_t>(r) >= ranks_.size() || seen[r]) {
      throw InvalidPermutation("not a permutation of [" +
                               std::to_string(ranks_.size()) + "]");
    }
    seen[r] = true;
  }
}

Permutation Permutation::identity(std::size_t t) {
  std::vector<int> r(t);
  std::iota(r.begin(), r.end(), 0);
  return Permutation(std::move(r), Unchecked{});
}

FactoradicDigits::FactoradicDigits(std::vector<int> digits)
    : digits_(std::move(digits)) {
  const std::size_t t = digits_.size();
  for (std::size_t i = 0; i < t; ++i) {
    if (digits_[i] < 0 || static_cast<std::size_t>(digits_[i]) > t - 1 - i) {
      throw DigitOutOfRange("digit " + std::to_string(i) + " = " +
                            std::to_string(digits_[i]) + " exceeds " +
                            std::to_string(t - 1 - i));
    }
  }
}

namespace {

std::vector<std::size_t> order_by_charge(std::span<const Charge> c) {
  std::vector<std::size_t> idx(c.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return c[a] < c[b]; });
  for (std::size_t k = 1; k < idx.size(); ++k) {
    if (c[idx[k - 1]] == c[idx[k]]) {
      throw DuplicateCharge("cells " + std::to_string(idx[k - 1]) + " and " +
                            std::to_string(idx[k]) + " hold equal charge");
    }
  }
  return idx;
}

}  // namespace

ChargeVector::ChargeVector(std::vector<Charge> charges)
    : charges_(std::move(charges)) {
  order_by_charge(charges_);
}

Permutation rank_window(std::span<const Charge> window) {
  const auto order = order_by_charge(window);
  std::vector<int> ranks(window.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    ranks[order[r]] = static_cast<int>(r);
  }
  return Permutation(std::move(ranks), Permutation::Unchecked{});
}

FactoradicDigits to_factoradic(const Permutation& p) {
  const std::size_t t = p.size();
  std::vector<int> d(t, 0);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      if (p[j] < p[i]) ++d[i];
    }
  }
  return FactoradicDigits(std::move(d));
}

Permutation from_factoradic(const FactoradicDigits& d) {
  // p[i] is the d[i]-th smallest rank not taken by positions 0..i-1.
  const std::size_t t = d.size();
  std::vector<int> available(t);
  std::iota(available.begin(), available.end(), 0);
  std::vector<int> ranks(t);
  for (std::size_t i = 0; i < t; ++i) {
    const auto it = available.begin() + d[i];
    ranks[i] = *it;
    available.erase(it);
  }
  return Permutation(std::move(ranks), Permutation::Unchecked{});
}

ChargeVector window(const ChargeVector& c, std::size_t position,
                    std::size_t width) {
  const std::size_t n = c.size();
  if (width < 1 || width > n) {
    throw BadWidth("window width " + std::to_string(width) + " outside [1," +
                   std::to_string(n) + "]");
  }
  if (position >= n) {
    throw IndexOutOfRange("window position " + std::to_string(position) +
                          " >= " + std::to_string(n));
  }
  std::vector<Charge> w(width);
  for (std::size_t k = 0; k < width; ++k) w[k] = c[(position + k) % n];
  return ChargeVector(std::move(w), ChargeVector::Unchecked{});
}

}  // namespace lrm
