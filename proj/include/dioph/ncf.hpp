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

// Negative ("round-up") continued fractions
//
//   x = 1/(a_1 - 1/(a_2 - 1/(a_3 - ...))) = [0; a_1, a_2, ...]^-,  a_i >= 2,
//
// generated by a_{n+1} = ceil(1/x_n), x_{n+1} = a_{n+1} - 1/x_n.

#ifndef DIOPH_NCF_HPP
#define DIOPH_NCF_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/surd.hpp"

namespace dioph {

using Digit = std::int64_t;

// Partial quotients a_1, a_2, ... split into a preperiod and a repeating
// period. An empty period means only the listed digits are known.
//
// Construction normalizes: the preperiod is made as short as possible and the
// period primitive. A period consisting only of 2s is rejected because its
// value is the rational 1.
class NcfExpansion {
 public:
  NcfExpansion() = default;
  NcfExpansion(std::vector<Digit> preperiod, std::vector<Digit> period);

  static NcfExpansion finite(std::vector<Digit> digits) { return NcfExpansion(std::move(digits), {}); }
  static NcfExpansion periodic(std::vector<Digit> period) { return NcfExpansion({}, std::move(period)); }

  // "[0; 3, (2,4)*]" with the parenthesized group followed by '*' marking the
  // period. The leading "0;" and the brackets are optional.
  static NcfExpansion parse(std::string_view text);

  const std::vector<Digit>& preperiod() const noexcept { return preperiod_; }
  const std::vector<Digit>& period() const noexcept { return period_; }
  bool is_periodic() const noexcept { return !period_.empty(); }

  // Number of digits available: infinite for periodic expansions.
  bool has(std::size_t i) const noexcept { return i >= 1 && (is_periodic() || i <= preperiod_.size()); }
  // a_i, 1-based. Throws kInsufficientDigits past the end of a finite expansion.
  Digit operator[](std::size_t i) const;

  std::string to_string() const;

  friend bool operator==(const NcfExpansion&, const NcfExpansion&) = default;

 private:
  std::vector<Digit> preperiod_;
  std::vector<Digit> period_;
};

// Exact expansion. Repeated states close the period; if no repeat occurs
// within max_terms the result is the finite prefix. A large regular partial
// quotient turns into a long run of 2s, so periods of tens of thousands of
// terms are common for surds with modest coefficients.
// Errors: kOutOfRange unless 0 < x < 1, kRationalInput for rational x.
NcfExpansion expand(const QuadSurd& x, std::size_t max_terms = std::size_t{1} << 20);

// Expansion of a decimal string such as "0.4142135623730950488". The input
// is read as an exact rational carrying +-1/2 unit in its last place; the
// horizon counts the leading digits shared by every number in that interval.
struct DecimalExpansion {
  NcfExpansion expansion;  // finite
  std::size_t horizon = 0;
  std::size_t precision_digits = 0;
};
DecimalExpansion expand_decimal(std::string_view decimal, std::size_t max_terms);

// Exact value of a periodic expansion. Throws kNoPeriod.
QuadSurd evaluate(const NcfExpansion& e);

// [0; a_1, ..., a_n]^- for a finite word (n may be 0, giving 0).
Rational evaluate_finite(std::span<const Digit> digits);

// Min / max over the period word. Throw kNoPeriod.
Digit liminf_R(const NcfExpansion& e);
Digit limsup_r(const NcfExpansion& e);

// Per-index quantities of an expansion of alpha:
//   alpha_k    = [0; a_{k+1}, a_{k+2}, ...]^-        (tail)
//   alphabar_k = [0; a_k, a_{k-1}, ..., a_1]^-       (reversed prefix)
//   p_k / q_k  = [0; a_1, ..., a_k]^-
//   D_k        = alpha_0 alpha_1 ... alpha_k = q_k alpha - p_k
// On a periodic expansion alpha_k and D_k are exact. On a finite expansion
// they come from the truncated word and alpha_error bounds |alpha_k - true|.
struct TailState {
  std::size_t k = 0;
  QuadSurd alpha;
  Rational alpha_error;
  Rational alphabar;
  Integer q;
  Integer p;
  QuadSurd D;
  bool exact = true;
};

TailState tails(const NcfExpansion& e, std::size_t k);

// Incremental walk over TailState for k = 0, 1, 2, ...; the exact tails of a
// periodic expansion are computed once and reused cyclically.
class TailWalker {
 public:
  explicit TailWalker(const NcfExpansion& e);

  const TailState& state() const noexcept { return state_; }
  // Advances k by one. Throws kInsufficientDigits when a_{k+1} is unknown.
  const TailState& next();

  // alpha_k without advancing.
  QuadSurd alpha(std::size_t k) const;
  Rational alpha_error(std::size_t k) const;
  const QuadSurd& value() const noexcept { return value_; }

 private:
  NcfExpansion e_;
  std::vector<QuadSurd> cycle_;  // alpha_0 .. alpha_{L+P-1} for periodic input
  QuadSurd value_;
  Integer q_prev_ = 0, p_prev_ = -1;
  TailState state_;
};

}  // namespace dioph

#endif  // DIOPH_NCF_HPP
