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

// Report-producing commands behind the dioph tool. Each command takes an
// ExperimentConfig and renders a deterministic report; the same entry point
// is used by the command-line tool and the Python module.

#ifndef DIOPH_COMMANDS_HPP
#define DIOPH_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dioph {

inline constexpr int kSchemaVersion = 1;

enum class Format { kJson, kCsv, kText };

// Throws kParseError for anything but json, csv or text.
Format parse_format(std::string_view text);
std::string_view format_name(Format f) noexcept;

struct ExperimentConfig {
  std::string command;  // expand, eval, digits, mval, bounds, scan, verify
  std::string input;    // positional argument: a surd, decimal or expansion
  std::string expansion;
  std::string period;  // shorthand for expansion "[0; (period)*]"
  std::string digits;
  std::string alpha;
  std::string gamma;
  std::string gamma_digits;
  std::string theorem;  // verify: odd-limit, odd-bound, even, homog, cutoffs
  std::vector<long> R;
  std::vector<long> r;
  std::vector<long> N;
  std::int64_t n_max = 1000000;
  std::optional<std::int64_t> n_min;
  std::size_t k_max = 200;
  std::size_t terms = 40;
  std::size_t count = 500;
  std::uint64_t seed = 1;
  unsigned windows = 0;
  int precision = 30;  // decimal digits kept from decimal inputs
  std::optional<double> tolerance;
  Format format = Format::kJson;
};

struct CommandOutput {
  int exit_code = 0;  // 0 success, 1 failed verification, 2 error
  std::string text;
};

// Never throws for bad input: errors become a structured report with a
// nonzero exit code.
CommandOutput run_command(const ExperimentConfig& config);

}  // namespace dioph

#endif  // DIOPH_COMMANDS_HPP
