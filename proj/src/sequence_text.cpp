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

#include "sequence_text.hpp"

#include <cctype>
#include <charconv>

#include "dioph/error.hpp"

namespace dioph::detail {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

namespace {

std::vector<std::int64_t> parse_list(std::string_view body, std::string_view what, std::string_view whole) {
  std::vector<std::int64_t> out;
  body = trim(body);
  if (body.empty()) return out;
  for (;;) {
    const std::size_t comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(Errc::kParseError,
                  "cannot parse " + std::string(what) + " '" + std::string(whole) + "': bad entry '" +
                      std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

SequenceText parse_sequence(std::string_view body, std::string_view what) {
  const std::string_view whole = body;
  body = trim(body);
  SequenceText out;
  const std::size_t open = body.find('(');
  if (open == std::string_view::npos) {
    out.preperiod = parse_list(body, what, whole);
    return out;
  }
  const std::size_t close = body.find(')', open);
  std::string_view after = close == std::string_view::npos ? std::string_view{} : trim(body.substr(close + 1));
  if (close == std::string_view::npos || after != "*") {
    throw Error(Errc::kParseError,
                "cannot parse " + std::string(what) + " '" + std::string(whole) + "': the period group must be last and read '(...)*'");
  }
  std::string_view head = trim(body.substr(0, open));
  if (!head.empty()) {
    if (head.back() != ',') {
      throw Error(Errc::kParseError, "cannot parse " + std::string(what) + " '" + std::string(whole) + "': missing ','");
    }
    head.remove_suffix(1);
    out.preperiod = parse_list(head, what, whole);
  }
  out.period = parse_list(body.substr(open + 1, close - open - 1), what, whole);
  if (out.period.empty()) {
    throw Error(Errc::kParseError, "cannot parse " + std::string(what) + " '" + std::string(whole) + "': empty period");
  }
  return out;
}

std::string format_sequence(const std::vector<std::int64_t>& preperiod, const std::vector<std::int64_t>& period) {
  std::string out;
  for (std::size_t i = 0; i < preperiod.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(preperiod[i]);
  }
  if (!period.empty()) {
    if (!out.empty()) out += ", ";
    out += "(";
    for (std::size_t i = 0; i < period.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(period[i]);
    }
    out += ")*";
  }
  return out;
}

}  // namespace dioph::detail
