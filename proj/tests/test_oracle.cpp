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

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "dioph/approx.hpp"
#include "dioph/experiments.hpp"
#include "dioph/oracle.hpp"
#include "support.hpp"

using dioph::DigitSeq;
using dioph::Errc;
using dioph::Error;
using dioph::Integer;
using dioph::NcfExpansion;
using dioph::QuadSurd;
using dioph::Rational;
using dioph::ScanResult;
using dioph::TorusPoint;
namespace t = dioph::testing;

namespace {

QuadSurd S(long p, long q, long r, long d) { return QuadSurd::make(Integer(p), Integer(q), Integer(r), Integer(d)); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::kInvalidArgument;
}

// |n| ||n alpha - gamma|| in exact arithmetic, rounded once.
double exact_value(std::int64_t n, const QuadSurd& alpha, const QuadSurd& gamma) {
  const QuadSurd x = QuadSurd(Integer(static_cast<long>(n))) * alpha - gamma;
  const QuadSurd frac = x - QuadSurd(x.floor());
  const QuadSurd dist = min(frac, 1 - frac);
  return t::hp_double(dist) * static_cast<double>(std::llabs(n));
}

ScanResult scan_surd(const QuadSurd& alpha, const QuadSurd& gamma, std::int64_t n_max, std::int64_t n_min,
                     unsigned windows = 0) {
  return dioph::scan(TorusPoint::from_surd(alpha), TorusPoint::from_surd(gamma), n_max, n_min, {.windows = windows});
}

bool same(const ScanResult& a, const ScanResult& b) {
  if (a.records.size() != b.records.size() || a.estimate != b.estimate || a.estimate_n != b.estimate_n) return false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const dioph::ScanRecord& x = a.records[i];
    const dioph::ScanRecord& y = b.records[i];
    if (x.n != y.n || x.value != y.value || x.running_min_after != y.running_min_after || x.distance != y.distance) {
      return false;
    }
  }
  return true;
}

const QuadSurd kBeta = S(3, -1, 2, 5);
const QuadSurd kAlpha4 = S(2, -1, 1, 3);

}  // namespace

TEST_CASE("homogeneous golden scan") {
  const ScanResult s = scan_surd(kBeta, QuadSurd(0), 100000, 1000);
  CHECK(s.homogeneous);
  CHECK(std::abs(s.estimate - 1 / std::sqrt(5.0)) < 1e-3);
  for (const dioph::ScanRecord& r : s.records) CHECK(r.n > 0);
}

TEST_CASE("scan agrees with the exact series value") {
  const QuadSurd gamma = (1 - kAlpha4) / 2;
  const ScanResult s = scan_surd(kAlpha4, gamma, 100000, 1000);
  const double m = t::hp_double(dioph::m_value(DigitSeq::periodic({0}), NcfExpansion::periodic({4})).value);
  CHECK(std::abs(s.estimate - m) < 1e-2);
  CHECK(s.estimate == doctest::Approx(exact_value(s.estimate_n, kAlpha4, gamma)).epsilon(1e-12));
}

TEST_CASE("record values match exact arithmetic") {
  const dioph::Instance family = dioph::odd_limit_instance(3, 10);
  const QuadSurd alpha = dioph::evaluate(family.e);
  const QuadSurd gamma = dioph::gamma_of(family.t, family.e).value;
  const ScanResult s = scan_surd(alpha, gamma, 200000, 1);
  REQUIRE_FALSE(s.records.empty());
  CHECK(s.value_error < 1e-20);
  for (const dioph::ScanRecord& r : s.records) {
    CHECK(r.value >= 0);
    CHECK(r.value == doctest::Approx(exact_value(r.n, alpha, gamma)).epsilon(1e-13));
    CHECK(r.distance * static_cast<double>(std::llabs(r.n)) == doctest::Approx(r.value).epsilon(1e-15));
  }
}

TEST_CASE("records are one-sided best approximations") {
  // Brute force over every n with long double arithmetic on a small range.
  const QuadSurd alpha = S(-1, 1, 1, 2);
  const QuadSurd gamma = S(1, 0, 3, 1);
  const std::int64_t n_max = 20000;
  const ScanResult s = scan_surd(alpha, gamma, n_max, 1);
  std::vector<std::int64_t> expected;
  double best[2] = {2, 2};
  for (std::int64_t m = 1; m <= n_max; ++m) {
    for (const std::int64_t n : {m, -m}) {
      const QuadSurd x = QuadSurd(Integer(static_cast<long>(n))) * alpha - gamma;
      const double frac = t::hp_double(x - QuadSurd(x.floor()));
      const double dist = std::min(frac, 1 - frac);
      const int side = n > 0 ? 0 : 1;
      if (dist < best[side]) {
        best[side] = dist;
        expected.push_back(n);
      }
    }
  }
  std::vector<std::int64_t> got;
  for (const dioph::ScanRecord& r : s.records) got.push_back(r.n);
  CHECK(got == expected);
  // Distances strictly decrease on each side.
  double last[2] = {2, 2};
  for (const dioph::ScanRecord& r : s.records) {
    const int side = r.n > 0 ? 0 : 1;
    CHECK(r.distance < last[side]);
    last[side] = r.distance;
  }
}

TEST_CASE("running minimum and estimate") {
  const dioph::Instance family = dioph::odd_limit_instance(5, 10);
  const QuadSurd alpha = dioph::evaluate(family.e);
  const QuadSurd gamma = dioph::gamma_of(family.t, family.e).value;
  const ScanResult s = scan_surd(alpha, gamma, 300000, 1000);
  double previous = 1e300;
  for (const dioph::ScanRecord& r : s.records) {
    CHECK(std::llabs(r.n) >= 1000);
    CHECK(r.running_min_after <= r.value);
    CHECK(r.running_min_after <= previous);
    CHECK(r.running_min_after >= s.estimate);
    previous = r.running_min_after;
  }
  CHECK(s.estimate <= 0.25);
  CHECK(std::llabs(s.estimate_n) >= 1000);
  CHECK(std::llabs(s.estimate_n) <= 300000);
}

TEST_CASE("window partition does not change the result") {
  const dioph::Instance family = dioph::odd_limit_instance(3, 10);
  const QuadSurd alpha = dioph::evaluate(family.e);
  const QuadSurd gamma = dioph::gamma_of(family.t, family.e).value;
  const ScanResult one = scan_surd(alpha, gamma, 500000, 1000, 1);
  for (unsigned w : {2u, 3u, 7u, 16u, 64u}) CHECK(same(one, scan_surd(alpha, gamma, 500000, 1000, w)));
  const ScanResult homog_one = scan_surd(kBeta, QuadSurd(0), 100000, 1, 1);
  CHECK(same(homog_one, scan_surd(kBeta, QuadSurd(0), 100000, 1, 5)));
}

TEST_CASE("scan is deterministic") {
  const QuadSurd gamma = (1 - kAlpha4) / 2;
  CHECK(same(scan_surd(kAlpha4, gamma, 200000, 1000), scan_surd(kAlpha4, gamma, 200000, 1000)));
}

TEST_CASE("estimate does not increase with n_max") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 6; ++i) {
    const dioph::Instance inst = dioph::random_instance(rng, 3 + i);
    const QuadSurd alpha = dioph::evaluate(inst.e);
    const QuadSurd gamma = dioph::gamma_of(inst.t, inst.e).value;
    double previous = 1e300;
    for (std::int64_t n_max : {2000, 10000, 50000, 250000}) {
      const ScanResult s = scan_surd(alpha, gamma, n_max, 1000);
      CHECK(s.estimate <= previous);
      previous = s.estimate;
    }
  }
}

TEST_CASE("scan errors") {
  const TorusPoint alpha = TorusPoint::from_double(0.3819660112501051);
  CHECK(code_of([&] { dioph::scan(alpha, TorusPoint::from_double(0.25), 1000000, 1000); }) ==
        Errc::kPrecisionBudgetExceeded);
  CHECK_NOTHROW(dioph::scan(alpha, TorusPoint::from_double(0.25), 1000, 10));
  CHECK(code_of([] { scan_surd(kBeta, kBeta, 1000, 10); }) == Errc::kLatticeGamma);
  CHECK(code_of([] { scan_surd(kBeta, 3 * kBeta - 2, 1000, 10); }) == Errc::kLatticeGamma);
  CHECK(code_of([] { scan_surd(kBeta, QuadSurd(0), 10, 100); }) == Errc::kInvalidArgument);
}

TEST_CASE("decimal torus points") {
  const TorusPoint p = TorusPoint::from_decimal("0.381966011250105151795413165634361882279690820194");
  const TorusPoint exact = TorusPoint::from_surd(kBeta);
  CHECK(p.error < 1e-38);  // 2^-128 resolution dominates 50 decimal places
  const double gap = std::ldexp(static_cast<double>(exact.fraction > p.fraction ? exact.fraction - p.fraction
                                                                               : p.fraction - exact.fraction),
                                -128);
  CHECK(gap < 1e-38);
  // Leading zeros are decimal, not octal.
  const TorusPoint small = TorusPoint::from_decimal("0.0078125");
  CHECK(small.fraction == (static_cast<dioph::Fixed128>(1) << 121));
  CHECK(TorusPoint::from_decimal("0.09").error < 1e-2);
  const ScanResult s = dioph::scan(p, TorusPoint::from_decimal("0." + std::string(50, '0')), 100000, 1000);
  CHECK(std::abs(s.estimate - 1 / std::sqrt(5.0)) < 1e-3);
}

TEST_CASE("certification examples") {
  CHECK(dioph::certify_records({}, {}, 1).ok);
  CHECK(dioph::certify_records({}, {}, 1).checked == 0);

  const NcfExpansion four = NcfExpansion::periodic({4});
  const DigitSeq zeros = DigitSeq::periodic({0});
  const ScanResult s4 = scan_surd(kAlpha4, (1 - kAlpha4) / 2, 100000, 1);
  const auto sets4 = dioph::candidate_sets(zeros, four, Integer(100000));
  const dioph::CertifyVerdict v4 = dioph::certify_records(s4.records, sets4, dioph::tails(four, 3).q.get_si());
  CHECK(v4.ok);
  CHECK(v4.violations.empty());

  const dioph::Instance family = dioph::odd_limit_instance(3, 100);
  const QuadSurd alpha = dioph::evaluate(family.e);
  const ScanResult sf = scan_surd(alpha, dioph::gamma_of(family.t, family.e).value, 1000000, 1);
  const auto setsf = dioph::candidate_sets(family.t, family.e, Integer(1000000));
  const dioph::CertifyVerdict vf = dioph::certify_records(sf.records, setsf, dioph::tails(family.e, 3).q.get_si());
  CHECK(vf.ok);

  // A record outside every candidate set is reported.
  std::vector<dioph::ScanRecord> fake{{1000, 0.3, 0.3, 3e-4}, {1001, 0.1, 0.1, 1e-4}, {2000, 0.2, 0.1, 1e-4}};
  const dioph::CertifyVerdict bad = dioph::certify_records(fake, sets4, 1);
  CHECK_FALSE(bad.ok);
  CHECK(bad.violations == std::vector<std::int64_t>{1001});
}

TEST_CASE("random instances certify") {
  std::mt19937_64 rng(52);
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    const dioph::Instance inst = dioph::random_instance(rng, 3 + i % 6);
    const dioph::AlignedPeriodic al = dioph::align(inst.e, inst.t);
    bool maximal = false;
    for (std::size_t j = al.offset; j < al.a.size(); ++j) maximal = maximal || al.t[j] == al.a[j];
    if (maximal) continue;
    const QuadSurd alpha = dioph::evaluate(inst.e);
    const ScanResult s = scan_surd(alpha, dioph::gamma_of(inst.t, inst.e).value, 300000, 1);
    const auto sets = dioph::candidate_sets(inst.t, inst.e, Integer(300000));
    const dioph::CertifyVerdict v = dioph::certify_records(s.records, sets, dioph::tails(inst.e, 3).q.get_si());
    CHECK(v.ok);
    checked += static_cast<int>(v.checked);
  }
  CHECK(checked > 0);
}

TEST_CASE("default n_min") {
  CHECK(dioph::default_n_min(NcfExpansion::periodic({3})) == 1000);
  CHECK(dioph::default_n_min(NcfExpansion::periodic({3, 300})) == dioph::tails(NcfExpansion::periodic({3, 300}), 3).q);
}
