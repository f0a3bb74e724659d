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

#include "dioph/bounds.hpp"

#include <string>

namespace dioph {

namespace {

void require_R(long R) {
  if (R < 3) throw Error(Errc::kRTooSmall, "R = " + std::to_string(R) + " but the bounds need R >= 3");
}

Rational frac(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

Rational c_of(long R) {
  require_R(R);
  if (R % 2 == 0) throw Error(Errc::kEvenR, "C(R) is defined for odd R, got " + std::to_string(R));
  const Rational inv(frac(1, R));
  return Rational(1, 4) * (1 - inv) * (1 - inv * inv);
}

Rational even_bound(long R) {
  require_R(R);
  return Rational(1, 4) * (1 - frac(1, R));
}

Rational inhomogeneous_bound(long R) { return R % 2 == 1 ? c_of(R) : even_bound(R); }

QuadSurd rho_lower(long R) {
  require_R(R);
  const Integer big(R);
  if (R % 2 == 0) {
    const QuadSurd root = QuadSurd::sqrt(Integer(big * big - 4));
    return QuadSurd(R - 2) / (4 * (root + 1));
  }
  const QuadSurd root = QuadSurd::sqrt(Integer((big + 1) * (big + 1) - 4));
  return (QuadSurd(2 * R - 2) - root) / (4 * (root - 1));
}

HomogBounds homog_bounds(long R, long r) {
  require_R(R);
  if (r < R) throw Error(Errc::kRBelowR, "r = " + std::to_string(r) + " is below R = " + std::to_string(R));
  const Integer bR(R), br(r);
  return HomogBounds{1 / QuadSurd::sqrt(Integer(br * br - 4)),
                     1 / (QuadSurd(r - R) + QuadSurd::sqrt(Integer(bR * bR - 4)))};
}

BoundReport bound_report(long R, std::optional<long> r) {
  BoundReport out;
  out.R = R;
  out.r = r;
  out.even_bound = even_bound(R);
  if (R % 2 == 1) out.c_odd = c_of(R);
  out.lower = rho_lower(R);
  if (r) out.homog = homog_bounds(R, *r);
  return out;
}

std::vector<std::pair<long, long>> exceptional_pairs(long R_min, long R_max, long r_max) {
  std::vector<std::pair<long, long>> out;
  for (long R = R_min; R <= R_max; ++R) {
    const QuadSurd cap(inhomogeneous_bound(R));
    for (long r = R; r <= r_max; ++r) {
      if (compare_enclosed(homog_bounds(R, r).lo, cap) > 0) out.emplace_back(R, r);
    }
  }
  return out;
}

}  // namespace dioph
