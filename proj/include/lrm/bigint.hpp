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

#ifndef LRM_BIGINT_HPP
#define LRM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lrm {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt factorial(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

// t!/(t-s)! = t(t-1)...(t-s+1).
inline BigInt falling_factorial(unsigned t, unsigned s) {
  BigInt r = 1;
  for (unsigned i = 0; i < s; ++i) r *= (t - i);
  return r;
}

}  // namespace lrm

#endif  // LRM_BIGINT_HPP
