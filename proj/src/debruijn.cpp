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

#include "lrm/errors.hpp"

namespace lrm {

DeBruijnStream::DeBruijnStream(BigInt alphabet, std::size_t order)
    : alphabet_(std::move(alphabet)), order_(order) {
  if (alphabet_ < 1) throw ParameterError("alphabet size >= 1 violated");
  if (order_ < 1) throw ParameterError("order >= 1 violated");
  period_ =
      boost::multiprecision::pow(alphabet_, static_cast<unsigned>(order_));
  restart();
}

void DeBruijnStream::restart() {
  word_.assign(order_, BigInt(0));
  word_length_ = 1;
  emitted_ = 0;
  position_ = 0;
}

bool DeBruijnStream::advance_word() {
  const BigInt top = alphabet_ - 1;
  while (true) {
    std::size_t i = order_;
    while (i > 0 && word_[i - 1] == top) --i;
    if (i == 0) return false;
    ++word_[i - 1];
    for (std::size_t j = i; j < order_; ++j) word_[j] = word_[j - i];
    if (order_ % i == 0) {
      word_length_ = i;
      emitted_ = 0;
      return true;
    }
  }
}

BigInt DeBruijnStream::next() {
  if (emitted_ == word_length_ && !advance_word()) restart();
  BigInt symbol = word_[emitted_++];
  ++position_;
  if (position_ == period_) position_ = 0;
  return symbol;
}

void DeBruijnStream::seek(const BigInt& k) {
  restart();
  BigInt remaining = k % period_;
  while (remaining > 0) {
    next();
    --remaining;
  }
}

std::vector<BigInt> debruijn_period(const BigInt& alphabet, std::size_t order) {
  DeBruijnStream stream(alphabet, order);
  std::vector<BigInt> out;
  do {
    out.push_back(stream.next());
  } while (stream.position() != 0);
  return out;
}

}  // namespace lrm
