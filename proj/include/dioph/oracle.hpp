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

// Brute-force ground truth for M(alpha, gamma): scan |n| ||n alpha - gamma||
// over a range of n and keep the records.
//
// Points of R/Z are held as 128-bit fixed-point fractions, so n alpha - gamma
// mod 1 is an exact modular integer operation and the only error is the
// input rounding, at most |n| 2^-128 + 2^-128 for exact inputs.

#ifndef DIOPH_ORACLE_HPP
#define DIOPH_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dioph/approx.hpp"
#include "dioph/surd.hpp"

namespace dioph {

using Fixed128 = unsigned __int128;

// A point of R/Z with an absolute error bound on its representation.
struct TorusPoint {
  Fixed128 fraction = 0;  // value mod 1, scaled by 2^128
  double error = 0;       // |stored - true| bound
  std::optional<QuadSurd> exact;

  static TorusPoint from_surd(const QuadSurd& x);
  static TorusPoint from_double(double x);
  // A decimal string; its error is half a unit in the last place.
  static TorusPoint from_decimal(std::string_view text);
};

// A one-sided best approximation: n > 0 is a record when ||n alpha - gamma||
// is strictly smaller than at every 0 < m < n, and n < 0 when it beats every
// n < m < 0. Along each side the distances strictly decrease.
struct ScanRecord {
  std::int64_t n = 0;
  double value = 0;  // |n| ||n alpha - gamma||
  // min |m| ||m alpha - gamma|| over the visited m with n_min <= |m|,
  // up to and including n.
  double running_min_after = 0;
  double distance = 0;  // ||n alpha - gamma||
};

struct ScanResult {
  std::vector<ScanRecord> records;
  double estimate = 0;  // min over n_min <= |n| <= n_max
  std::int64_t estimate_n = 0;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  bool homogeneous = false;
  double value_error = 0;  // bound on the error of every reported value
};

struct ScanOptions {
  unsigned windows = 0;  // 0: one per hardware thread
  // Largest tolerated error bound on a reported value.
  double error_budget = 1e-6;
};

// Visits 1 <= |n| <= n_max in increasing order of |n|, n before -n, and
// returns the records with |n| >= n_min in that order together with the
// smallest value in n_min <= |n| <= n_max. With gamma = 0 only n > 0 is
// visited. gamma = 0 selects the homogeneous constant M(alpha, 0); any
// other gamma detected in Z + Z alpha is rejected.
// Errors: kPrecisionBudgetExceeded, kLatticeGamma, kInvalidArgument.
ScanResult scan(const TorusPoint& alpha, const TorusPoint& gamma, std::int64_t n_max, std::int64_t n_min,
                const ScanOptions& options = {});

// max(1000, q_3) for the expansion of alpha.
std::int64_t default_n_min(const NcfExpansion& e);

struct CertifyVerdict {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::int64_t> violations;
};

// Along one side the records come in arithmetic runs n0 + j q on which
// |n| ||n alpha - gamma|| is concave in j, so a record whose value is below
// both neighbours on its side ends a run. Every such record with
// |n| >= min_abs_n must be one of the candidate integers. The records should
// come from a scan with n_min = 1.
CertifyVerdict certify_records(const std::vector<ScanRecord>& records, const std::vector<CandidateSet>& candidates,
                               std::int64_t min_abs_n);

}  // namespace dioph

#endif  // DIOPH_ORACLE_HPP
