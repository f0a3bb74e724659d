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

// Closed-form constants in terms of R = liminf a_i and r = limsup a_i of the
// negative expansion. Every constant is exact: rationals where rational,
// otherwise a QuadSurd in the appropriate field.

#ifndef DIOPH_BOUNDS_HPP
#define DIOPH_BOUNDS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dioph/surd.hpp"

namespace dioph {

// (1/4)(1 - 1/R)(1 - 1/R^2) for odd R >= 3. Errors: kEvenR, kRTooSmall.
Rational c_of(long R);

// (1/4)(1 - 1/R) for R >= 3. Errors: kRTooSmall.
Rational even_bound(long R);

// The sharp inhomogeneous upper bound for liminf R: c_of for odd R,
// even_bound for even R.
Rational inhomogeneous_bound(long R);

// Lower bound on rho(alpha):
//   even R: (R - 2) / (4 (sqrt(R^2 - 4) + 1))
//   odd R:  (2R - 2 - sqrt((R+1)^2 - 4)) / (4 (sqrt((R+1)^2 - 4) - 1))
QuadSurd rho_lower(long R);

struct HomogBounds {
  QuadSurd lo;  // 1 / sqrt(r^2 - 4)
  QuadSurd hi;  // 1 / (r - R + sqrt(R^2 - 4))
};
// Two-sided bound on M(alpha, 0). Errors: kRTooSmall, kRBelowR.
HomogBounds homog_bounds(long R, long r);

struct BoundReport {
  long R = 0;
  std::optional<long> r;
  std::optional<Rational> c_odd;  // odd R only
  Rational even_bound;
  QuadSurd lower;  // parity-appropriate rho lower bound
  std::optional<HomogBounds> homog;
};
BoundReport bound_report(long R, std::optional<long> r = std::nullopt);

// Pairs (R, r) in the given ranges whose homogeneous lower bound
// 1/sqrt(r^2 - 4) strictly exceeds inhomogeneous_bound(R).
std::vector<std::pair<long, long>> exceptional_pairs(long R_min, long R_max, long r_max);

}  // namespace dioph

#endif  // DIOPH_BOUNDS_HPP
