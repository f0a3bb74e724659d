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

// Instance families used by the verification experiments.

#ifndef DIOPH_EXPERIMENTS_HPP
#define DIOPH_EXPERIMENTS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dioph/digits.hpp"
#include "dioph/ncf.hpp"

namespace dioph {

struct Instance {
  std::string label;
  NcfExpansion e;
  DigitSeq t;
};

// alpha = [0; (R, N R)*], t = [(-1, N)*]. For odd R, M tends to C(R) as N grows.
Instance odd_limit_instance(long R, long N);

// alpha = [0; (R, 2N)*], t = 0, so gamma = (1 - alpha) / 2.
Instance even_instance(long R, long N);

struct RandomInstanceOptions {
  std::size_t max_preperiod = 2;
  std::size_t max_period = 4;
  long max_excess = 6;  // period digits are drawn from [R, R + max_excess]
};

// A random eventually periodic expansion with liminf of the digits equal to
// R, paired with a random admissible periodic digit sequence that avoids
// t_i = a_i and gives gamma outside Z + Z alpha.
Instance random_instance(std::mt19937_64& rng, long R, const RandomInstanceOptions& options = {});

}  // namespace dioph

#endif  // DIOPH_EXPERIMENTS_HPP
