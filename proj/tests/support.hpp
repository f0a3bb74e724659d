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

// Independent numeric oracles for the tests: values are recomputed with
// multi-precision floats straight from (p, q, r, d), never through the
// library's own exact comparisons.

#ifndef DIOPH_TESTS_SUPPORT_HPP
#define DIOPH_TESTS_SUPPORT_HPP

#include <gmpxx.h>

#include <cmath>
#include <random>
#include <vector>

#include "dioph/surd.hpp"

namespace dioph::testing {

inline constexpr unsigned long kOracleBits = 1024;

// p + q sqrt(d) can cancel almost completely when p and q are large, so the
// working precision grows with their size.
inline mpf_class hp(const QuadSurd& x) {
  const unsigned long bits = kOracleBits + 2 * (mpz_sizeinbase(x.p().get_mpz_t(), 2) +
                                                mpz_sizeinbase(x.q().get_mpz_t(), 2));
  mpf_class root(0, bits);
  mpf_class d(x.d(), bits);
  mpf_sqrt(root.get_mpf_t(), d.get_mpf_t());
  mpf_class num(x.p(), bits);
  num += mpf_class(x.q(), bits) * root;
  return mpf_class(num / mpf_class(x.r(), bits), bits);
}

inline double hp_double(const QuadSurd& x) { return hp(x).get_d(); }

// |a - b| computed in high precision.
inline double hp_distance(const QuadSurd& a, const QuadSurd& b) {
  mpf_class diff(hp(a) - hp(b), kOracleBits);
  return std::abs(diff.get_d());
}

inline const std::vector<long>& small_square_free() {
  static const std::vector<long> d{2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30, 31, 33, 34, 35, 37, 38, 39, 41, 42, 43, 46, 47};
  return d;
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// A random irrational surd in a field Q(sqrt(d)) with small coefficients.
inline QuadSurd random_surd(std::mt19937_64& rng, long d, long bound = 50) {
  long q = 0;
  while (q == 0) q = uniform(rng, -bound, bound);
  return QuadSurd::make(Integer(uniform(rng, -bound, bound)), Integer(q), Integer(uniform(rng, 1, bound)), Integer(d));
}

// A random irrational surd in (0, 1).
inline QuadSurd random_unit_surd(std::mt19937_64& rng, long d) {
  const QuadSurd x = random_surd(rng, d);
  return x - QuadSurd(x.floor());
}

}  // namespace dioph::testing

#endif  // DIOPH_TESTS_SUPPORT_HPP
