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

// The inhomogeneous constant M(alpha, gamma) = liminf |n| ||n alpha - gamma||
// evaluated from the negative continued fraction of alpha and the
// alpha-expansion digits of gamma.
//
// With the digit series
//
//   d_k^- = t_k abar_k + t_{k-1} abar_k abar_{k-1} + ...
//   d_k^+ = t_{k+1} alpha_k + t_{k+2} alpha_k alpha_{k+1} + ...
//
// and w = 1 - abar_k alpha_k, the four quantities
//
//   s1 = (1 - abar + d^-)(1 - alpha + d^+) / 4w
//   s2 = (1 + abar + d^-)(1 + alpha - d^+) / 4w
//   s3 = (1 - abar - d^-)(1 - alpha - d^+) / 4w
//   s4 = (1 + abar - d^-)(1 + alpha + d^+) / 4w
//
// give M = liminf_k min_j s_j(k) whenever t_k = a_k happens only finitely
// often and gamma is not in Z + Z alpha.

#ifndef DIOPH_APPROX_HPP
#define DIOPH_APPROX_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "dioph/digits.hpp"
#include "dioph/ncf.hpp"
#include "dioph/surd.hpp"

namespace dioph {

struct DSeries {
  QuadSurd dminus;  // exact
  QuadSurd dplus;
  QuadSurd dplus_error;  // 0 when dplus is exact
  bool exact = true;
};

// horizon bounds how many digits past k a truncated d^+ may read; it only
// matters when t is finite. Errors: kInsufficientDigits, kNoPeriod.
DSeries d_series(const DigitSeq& t, const NcfExpansion& e, std::size_t k, std::size_t horizon = 0);

struct SValues {
  std::size_t k = 0;
  QuadSurd s1, s2, s3, s4;
  QuadSurd dminus, dplus;
  QuadSurd alpha, alphabar;

  const QuadSurd& min() const;
  // Index 1..4 of the smallest s_j.
  int argmin() const;
};

SValues s_values(const DigitSeq& t, const NcfExpansion& e, std::size_t k);

// The four s-values from their ingredients; shared by the finite-k and the
// limit evaluations.
SValues s_values_from(std::size_t k, const QuadSurd& alpha, const QuadSurd& alphabar, const QuadSurd& dminus,
                      const QuadSurd& dplus);

enum class BoundBranch {
  kSeries,  // value is M(alpha, gamma)
  kEnds,    // t_k = a_k infinitely often: value is only an upper bound for M
};
std::string_view branch_name(BoundBranch b) noexcept;

struct MValueOptions {
  std::size_t k_max = 200;  // trace length (and truncation for finite digits)
  std::size_t window = 50;  // stabilization window for finite digits
};

struct MValueReport {
  QuadSurd value;
  bool exact = false;
  BoundBranch branch = BoundBranch::kSeries;
  // Exact path: per-position limit s-values over one aligned period, indexed
  // by k = offset + 1 + j.
  std::vector<SValues> limit;
  std::size_t offset = 0;
  std::size_t period = 0;
  // Finite-k values for k = 1..k_max (or as far as the digits reach).
  std::vector<SValues> per_k;
  // Finite digits only: min over the last window, the window before it, and
  // whether they agree to 1e-9.
  std::optional<QuadSurd> last_window_min;
  std::optional<QuadSurd> previous_window_min;
  bool stabilized = true;
};

// Errors: kInvalidDigits, kLatticePoint, kNoPeriod.
MValueReport m_value(const DigitSeq& t, const NcfExpansion& e, const MValueOptions& options = {});

struct CandidateSet {
  std::size_t k = 0;
  Integer Q;       // sum_{i<=k} c_i q_{i-1}
  Integer q;       // q_k
  Integer q_prev;  // q_{k-1}
  // Q_k, Q_k + q_{k-1}, -(q_k - q_{k-1} - Q_k), -(q_k - Q_k)
  std::array<Integer, 4> n;

  bool contains(const Integer& value) const;
};

CandidateSet best_candidates(const DigitSeq& t, const NcfExpansion& e, std::size_t k);
// Candidate sets for k = 1, 2, ... while q_{k-1} <= n_max.
std::vector<CandidateSet> candidate_sets(const DigitSeq& t, const NcfExpansion& e, const Integer& n_max);

// liminf (1 - abar_k)(1 - alpha_k) / (4 (1 - abar_k alpha_k)), exact; an upper
// bound for rho(alpha) whenever t_k = a_k only finitely often.
QuadSurd rho_upper(const NcfExpansion& e);

}  // namespace dioph

#endif  // DIOPH_APPROX_HPP
