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

// The alpha-expansion of a real gamma,
//
//   gamma = sum_{i>=1} c_i D_{i-1},   c_i = (a_i - 2 + t_i) / 2,
//
// with D_{i-1} = alpha_0 ... alpha_{i-1} taken from the negative continued
// fraction of alpha. A digit sequence t is admissible when
//
//   -(a_i - 2) <= t_i <= a_i,   t_i = a_i (mod 2),
//
// and it contains neither a run t_i = a_i followed by t_j = a_j - 2 for every
// j > i, nor t_i = a_i, t_j = a_j - 2 (i < j < i+l), t_{i+l} = a_{i+l}.

#ifndef DIOPH_DIGITS_HPP
#define DIOPH_DIGITS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/ncf.hpp"
#include "dioph/surd.hpp"

namespace dioph {

// Digits t_1, t_2, ... indexed like the partial quotients they pair with.
// The period, when present, starts at index preperiod().size() + 1; that
// offset is what aligns it with the expansion's own period.
class DigitSeq {
 public:
  DigitSeq() = default;
  DigitSeq(std::vector<Digit> preperiod, std::vector<Digit> period);

  static DigitSeq finite(std::vector<Digit> digits) { return DigitSeq(std::move(digits), {}); }
  static DigitSeq periodic(std::vector<Digit> period) { return DigitSeq({}, std::move(period)); }

  // "(-1,100)*", "3, (1)*", "t = (-1, 5)*" or a plain finite list "0, 2, -1".
  static DigitSeq parse(std::string_view text);

  const std::vector<Digit>& preperiod() const noexcept { return preperiod_; }
  const std::vector<Digit>& period() const noexcept { return period_; }
  bool is_periodic() const noexcept { return !period_.empty(); }
  std::size_t period_start() const noexcept { return preperiod_.size() + 1; }
  bool has(std::size_t i) const noexcept { return i >= 1 && (is_periodic() || i <= preperiod_.size()); }
  // t_i, 1-based. Throws kInsufficientDigits.
  Digit operator[](std::size_t i) const;
  // Number of listed digits of a finite sequence.
  std::size_t size() const noexcept { return preperiod_.size(); }

  std::string to_string() const;
  DigitSeq negated() const;

  friend bool operator==(const DigitSeq&, const DigitSeq&) = default;

 private:
  std::vector<Digit> preperiod_;
  std::vector<Digit> period_;
};

inline Digit coefficient(Digit a, Digit t) { return (a - 2 + t) / 2; }
inline Digit digit_from_coefficient(Digit a, Digit c) { return 2 * c + 2 - a; }

// Expansion and digits unrolled to a common preperiod length L and a common
// period length P (the lcm of both periods); a and t hold L + P entries.
struct AlignedPeriodic {
  std::vector<Digit> a;
  std::vector<Digit> t;
  std::size_t offset = 0;  // L
  std::size_t period = 0;  // P
};
// Throws kNoPeriod unless both are periodic.
AlignedPeriodic align(const NcfExpansion& e, const DigitSeq& t);

enum class Validity {
  kValid,
  // A finite sequence that ends inside a run t_i = a_i, a_j - 2, ..., a_j - 2:
  // whether that run continues forever is not decided by the listed digits.
  kValidSoFar,
  kInvalid,
};

struct ValidationResult {
  Validity status = Validity::kValid;
  std::size_t index = 0;  // first offending index (1-based) when invalid
  std::string reason;

  bool ok() const noexcept { return status != Validity::kInvalid; }
};

// Throws kLengthMismatch if a finite t extends past a finite expansion.
ValidationResult validate(const DigitSeq& t, const NcfExpansion& e);

struct GammaValue {
  QuadSurd value;
  QuadSurd error_bound;  // 0 when exact
  bool exact = true;
};

// gamma from its digits. Periodic t over a periodic expansion gives the exact
// value by summing the repeating block as a geometric series. A finite t
// gives the partial sum over the first min(terms, t.size()) digits together
// with the bound sum_{i>n} (a_i - 1) D_{i-1} on the omitted tail.
// The expansion must be periodic so that every D_i is exact.
// Errors: kInvalidDigits, kNoPeriod.
GammaValue gamma_of(const DigitSeq& t, const NcfExpansion& e, std::size_t terms = 0);

// Greedy most-significant-first extraction of n_terms digits of gamma,
// followed by canonicalization and a reconstruction check. With a nonzero
// uncertainty only digits shared by both ends of [gamma - u, gamma + u] are
// accepted, and asking for more raises kPrecisionExhausted.
// Points of Z + Z alpha inside (0,1) have digits too and are accepted here;
// callers that need a non-lattice gamma check is_lattice_point themselves.
// Errors: kOutOfRange (gamma outside (0,1)), kNoPeriod.
DigitSeq digits_of(const QuadSurd& gamma, const NcfExpansion& e, std::size_t n_terms,
                   const Rational& uncertainty = Rational(0));

// Like digits_of for an exact gamma, but folds repeating greedy states into a
// period. Returns a finite sequence of max_terms digits if none repeats.
DigitSeq digits_of_periodic(const QuadSurd& gamma, const NcfExpansion& e, std::size_t max_terms = std::size_t{1} << 20);

// Rewrites forbidden finite blocks and out-of-range coefficients of a finite
// sequence by carrying, leaving sum c_i D_{i-1} unchanged. A carry out of the
// first position means gamma >= 1 and raises kOutOfRange.
DigitSeq canonicalize(const DigitSeq& t, const NcfExpansion& e);

// Whether gamma = m + n alpha for integers m, n, decided exactly.
// Errors: kMixedFields, kNoPeriod.
bool is_lattice_point(const QuadSurd& gamma, const NcfExpansion& e);
bool is_lattice_point(const QuadSurd& gamma, const QuadSurd& alpha);

// Sum_{i>n} weight(a_i) D_{i-1} over a periodic expansion, exact.
QuadSurd weighted_tail_sum(const NcfExpansion& e, std::size_t n, Digit (*weight)(Digit a));

}  // namespace dioph

#endif  // DIOPH_DIGITS_HPP
