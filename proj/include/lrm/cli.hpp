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

// The lrmgray command set, callable with explicit streams.

#ifndef LRM_CLI_HPP
#define LRM_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lrm/bigint.hpp"
#include "lrm/errors.hpp"
#include "lrm/graycode.hpp"
#include "lrm/ranks.hpp"

namespace lrm::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kSizeGuard = 3,
  kParameterViolation = 4,
};

// Malformed user input (files, traces, flags).
class InputError : public Error {
 public:
  using Error::Error;
};

// One codeword as written by `gray`.
struct StateRecord {
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t n = 0;
  bool anchor = true;
  std::vector<std::vector<int>> digits;  // m groups of m digits
  std::vector<BigInt> blocks;
  std::size_t underlined = 0;

  friend bool operator==(const StateRecord&, const StateRecord&) = default;
};

// Blocks and underline come from decode_state.
StateRecord make_record(const SuccinctState& state,
                        const ConstructionParams& p);

// {"params":{"s":..,"t":..,"n":..},"kind":"anchor"|"auxiliary",
//  "digits":[[..],..],"blocks":["..",..],"underlined":..}
// Block values are decimal strings since they may exceed 64 bits.
std::string to_jsonl(const StateRecord& r);
// Throws InputError on malformed or inconsistent input.
StateRecord parse_jsonl(std::string_view line);

// "anchor 1010 0010 0010 0000 blocks=1,0,0,0 underlined=3". Digits of a
// group are concatenated when t <= 10 and comma-separated otherwise.
std::string to_text(const StateRecord& r);

// One number per line; blank lines and '#' comments are skipped.
// Throws InputError on anything else.
std::vector<Charge> parse_charges(std::istream& in);

// Dispatches `args` (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace lrm::cli

#endif  // LRM_CLI_HPP
