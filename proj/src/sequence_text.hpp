// Copyright 2026 The dioph Authors
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

// Shared text form for eventually periodic integer sequences:
//   "3, 4, (2,5)*"  -> preperiod [3,4], period [2,5]

#ifndef DIOPH_SRC_SEQUENCE_TEXT_HPP
#define DIOPH_SRC_SEQUENCE_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dioph::detail {

struct SequenceText {
  std::vector<std::int64_t> preperiod;
  std::vector<std::int64_t> period;
};

// Parses the body of a sequence (no brackets or prefixes); throws
// Error(kParseError) with `what` naming the kind of sequence.
SequenceText parse_sequence(std::string_view body, std::string_view what);

std::string format_sequence(const std::vector<std::int64_t>& preperiod, const std::vector<std::int64_t>& period);

std::string_view trim(std::string_view s);

}  // namespace dioph::detail

#endif  // DIOPH_SRC_SEQUENCE_TEXT_HPP
