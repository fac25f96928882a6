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

#ifndef LRM_ERRORS_HPP
#define LRM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrm {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LRM_DEFINE_ERROR(Name) \
  class Name : public Error {  \
   public:                     \
    using Error::Error;        \
  }

LRM_DEFINE_ERROR(DuplicateCharge);
LRM_DEFINE_ERROR(DigitOutOfRange);
LRM_DEFINE_ERROR(BadWidth);
LRM_DEFINE_ERROR(InvalidPermutation);
LRM_DEFINE_ERROR(ParameterError);
LRM_DEFINE_ERROR(TooLarge);
LRM_DEFINE_ERROR(NotRealizable);
LRM_DEFINE_ERROR(IndexOutOfRange);
LRM_DEFINE_ERROR(PreconditionViolated);
LRM_DEFINE_ERROR(NotACodeword);

#undef LRM_DEFINE_ERROR

}  // namespace lrm

#endif  // LRM_ERRORS_HPP
