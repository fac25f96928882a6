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

// Permutations induced by charge levels, their factoradic digits, and
// cyclic windows over charge vectors.

#ifndef LRM_RANKS_HPP
#define LRM_RANKS_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lrm {

using Charge = double;
using CellIndex = std::size_t;

class FactoradicDigits;
struct LrmParams;

// A permutation of [t] given in rank form: ranks()[i] is the rank of cell i
// in ascending order of charge.
class Permutation {
 public:
  // Throws InvalidPermutation unless `ranks` is a bijection on {0,...,t-1}.
  explicit Permutation(std::vector<int> ranks);
  Permutation(std::initializer_list<int> ranks)
      : Permutation(std::vector<int>(ranks)) {}

  static Permutation identity(std::size_t t);

  std::size_t size() const { return ranks_.size(); }
  int operator[](std::size_t i) const { return ranks_[i]; }
  std::span<const int> ranks() const { return ranks_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> ranks, Unchecked) : ranks_(std::move(ranks)) {}
  friend Permutation rank_window(std::span<const Charge>);
  friend Permutation from_factoradic(const FactoradicDigits&);

  std::vector<int> ranks_;
};

// Per-position Lehmer digits. digits()[i] counts the positions j > i with
// a lower rank, hence lies in {0,...,t-1-i}.
class FactoradicDigits {
 public:
  // Throws DigitOutOfRange if some digit[i] is outside {0,...,t-1-i}.
  explicit FactoradicDigits(std::vector<int> digits);
  FactoradicDigits(std::initializer_list<int> digits)
      : FactoradicDigits(std::vector<int>(digits)) {}

  std::size_t size() const { return digits_.size(); }
  int operator[](std::size_t i) const { return digits_[i]; }
  std::span<const int> digits() const { return digits_; }

  friend bool operator==(const FactoradicDigits&,
                         const FactoradicDigits&) = default;

 private:
  std::vector<int> digits_;
};

// Charge levels of a row of flash cells. Entries are pairwise distinct.
class ChargeVector {
 public:
  // Throws DuplicateCharge if two entries compare equal.
  explicit ChargeVector(std::vector<Charge> charges);
  ChargeVector(std::initializer_list<Charge> charges)
      : ChargeVector(std::vector<Charge>(charges)) {}

  std::size_t size() const { return charges_.size(); }
  Charge operator[](std::size_t i) const { return charges_[i]; }
  std::span<const Charge> values() const { return charges_; }

  friend bool operator==(const ChargeVector&, const ChargeVector&) = default;

 private:
  struct Unchecked {};
  ChargeVector(std::vector<Charge> charges, Unchecked)
      : charges_(std::move(charges)) {}
  friend ChargeVector window(const ChargeVector&, std::size_t, std::size_t);
  friend void apply_push(ChargeVector&, CellIndex, const LrmParams&);

  std::vector<Charge> charges_;
};

// Ranks of the cells of `window` in ascending order of charge.
// Throws DuplicateCharge on ties.
Permutation rank_window(std::span<const Charge> window);
inline Permutation rank_window(const ChargeVector& window) {
  return rank_window(window.values());
}

FactoradicDigits to_factoradic(const Permutation& p);
Permutation from_factoradic(const FactoradicDigits& d);

// The `width` charges starting at `position`, indices taken mod n.
// Throws BadWidth unless 1 <= width <= n, IndexOutOfRange if position >= n.
ChargeVector window(const ChargeVector& c, std::size_t position,
                    std::size_t width);

}  // namespace lrm

#endif  // LRM_RANKS_HPP
