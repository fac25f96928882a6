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

#ifndef LRM_DEBRUIJN_HPP
#define LRM_DEBRUIJN_HPP

#include <cstddef>
#include <vector>

#include "lrm/bigint.hpp"

namespace lrm {

// The lexicographically least de Bruijn sequence of the given order over
// [V], emitted one symbol at a time as the concatenation, in lexicographic
// order, of the Lyndon words whose length divides the order. Wraps around
// after V^order symbols. Uses O(order) memory and amortized O(1) work per
// symbol; the sequence is never materialized.
//
// Single consumer. Copies advance independently.
class DeBruijnStream {
 public:
  // Throws ParameterError unless alphabet >= 1 and order >= 1.
  DeBruijnStream(BigInt alphabet, std::size_t order);

  const BigInt& alphabet() const { return alphabet_; }
  std::size_t order() const { return order_; }
  const BigInt& period() const { return period_; }
  // Index of the symbol the next call to next() returns, in [0, period).
  const BigInt& position() const { return position_; }

  BigInt next();

  // Repositions so the next symbol is s_{k mod period}. Replays from the
  // start; linear in k mod period.
  void seek(const BigInt& k);

 private:
  void restart();
  // Advances the prenecklace generator to the next Lyndon word whose
  // length divides the order. Returns false after the last one.
  bool advance_word();

  BigInt alphabet_;
  std::size_t order_;
  BigInt period_;
  BigInt position_;
  std::vector<BigInt> word_;     // a[1..order] of the generator, 0-based here
  std::size_t word_length_ = 1;  // current Lyndon word is word_[0..len)
  std::size_t emitted_ = 0;      // symbols of the current word already out
};

inline BigInt debruijn_next(DeBruijnStream& stream) { return stream.next(); }

inline DeBruijnStream debruijn_seek(DeBruijnStream stream, const BigInt& k) {
  stream.seek(k);
  return stream;
}

// One full period; intended for small V^order.
std::vector<BigInt> debruijn_period(const BigInt& alphabet, std::size_t order);

}  // namespace lrm

#endif  // LRM_DEBRUIJN_HPP
