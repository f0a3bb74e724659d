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

#include "dioph/experiments.hpp"

#include <algorithm>

namespace dioph {

namespace {

std::string label_of(const NcfExpansion& e, const DigitSeq& t) {
  return "alpha=" + e.to_string() + " t=" + t.to_string();
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

Instance odd_limit_instance(long R, long N) {
  if (R < 3 || N < 1) throw Error(Errc::kInvalidArgument, "odd family needs R >= 3 and N >= 1");
  Instance inst;
  inst.e = NcfExpansion::periodic({R, N * R});
  inst.t = DigitSeq::periodic({-1, N});
  inst.label = label_of(inst.e, inst.t);
  return inst;
}

Instance even_instance(long R, long N) {
  if (R < 4 || R % 2 != 0 || N < 1) throw Error(Errc::kInvalidArgument, "even family needs even R >= 4 and N >= 1");
  Instance inst;
  inst.e = NcfExpansion::periodic({R, 2 * N});
  inst.t = DigitSeq::periodic({0});
  inst.label = label_of(inst.e, inst.t);
  return inst;
}

Instance random_instance(std::mt19937_64& rng, long R, const RandomInstanceOptions& options) {
  if (R < 3) throw Error(Errc::kRTooSmall, "random instances need R >= 3");
  for (;;) {
    std::vector<Digit> pre(static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(options.max_preperiod))));
    for (Digit& a : pre) a = uniform(rng, 2, R + options.max_excess);
    std::vector<Digit> per(static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(options.max_period))));
    for (Digit& a : per) a = uniform(rng, R, R + options.max_excess);
    per[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(per.size()) - 1))] = R;
    const NcfExpansion e(pre, per);

    // Digits are drawn over one aligned stretch: the expansion's preperiod
    // followed by a whole number of its periods.
    const std::size_t L = e.preperiod().size();
    const std::size_t P = e.period().size();
    const std::size_t reps = static_cast<std::size_t>(uniform(rng, 1, 2));
    std::vector<Digit> tpre(L), tper(P * reps);
    auto draw = [&](std::size_t index) {
      const Digit a = e[index];
      // t in {-(a-2), -(a-2)+2, ..., a-2}: same parity as a, never a itself.
      return -(a - 2) + 2 * uniform(rng, 0, a - 2);
    };
    for (std::size_t i = 0; i < L; ++i) tpre[i] = draw(i + 1);
    for (std::size_t i = 0; i < tper.size(); ++i) tper[i] = draw(L + 1 + i);
    Instance inst;
    inst.e = e;
    inst.t = DigitSeq(std::move(tpre), std::move(tper));
    const QuadSurd gamma = gamma_of(inst.t, inst.e).value;
    if (is_lattice_point(gamma, inst.e)) continue;
    inst.label = label_of(inst.e, inst.t);
    return inst;
  }
}

}  // namespace dioph
