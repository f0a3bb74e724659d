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
#include <unordered_set>

#include "doctest.h"
#include "dioph/surd.hpp"
#include "support.hpp"

using dioph::Errc;
using dioph::Error;
using dioph::Integer;
using dioph::QuadSurd;
using dioph::Rational;
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

const QuadSurd kBeta = S(3, -1, 2, 5);

}  // namespace

TEST_CASE("make normalizes and keeps the value") {
  CHECK(kBeta.p() == 3);
  CHECK(kBeta.q() == -1);
  CHECK(kBeta.r() == 2);
  CHECK(kBeta.d() == 5);
  CHECK(t::hp_double(kBeta) == doctest::Approx(0.3819660112501051).epsilon(1e-15));

  const QuadSurd one = S(1, 0, 1, 7);
  CHECK(one.is_rational());
  CHECK(one == QuadSurd(1));
  CHECK(one.d() == 1);

  CHECK(S(6, -2, 4, 5) == kBeta);
  CHECK(S(-6, 2, -4, 5) == kBeta);  // sign moves out of r
}

TEST_CASE("make rejects bad fields") {
  CHECK(code_of([] { S(1, 1, 1, 12); }) == Errc::kNonSquareFreeD);
  CHECK(code_of([] { S(1, 1, 1, 0); }) == Errc::kNonSquareFreeD);
  CHECK(code_of([] { S(1, 1, 0, 5); }) == Errc::kZeroDenominator);
}

TEST_CASE("make is idempotent on normalized fields") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const long d = t::small_square_free()[static_cast<std::size_t>(t::uniform(rng, 0, 29))];
    const QuadSurd x = t::random_surd(rng, d);
    CHECK(QuadSurd::make(x.p(), x.q(), x.r(), x.d()) == x);
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.p().get_mpz_t(), x.q().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.r().get_mpz_t());
    CHECK(g == 1);
    CHECK(x.r() > 0);
  }
}

TEST_CASE("sqrt pulls out square factors") {
  CHECK(QuadSurd::sqrt(Integer(12)) == S(0, 2, 1, 3));
  CHECK(QuadSurd::sqrt(Integer(49)) == QuadSurd(7));
  CHECK(QuadSurd::sqrt(Integer(0)).is_zero());
  // A square factor of a prime above the trial-division range.
  const Integer big_prime("1000003");
  const dioph::SquareSplit split = dioph::split_square(big_prime * big_prime * 7);
  CHECK(split.factor == big_prime);
  CHECK(split.core == 7);
  CHECK(dioph::is_square_free(Integer(2 * 3 * 5 * 7 * 11)));
  CHECK_FALSE(dioph::is_square_free(big_prime * big_prime * 2));
}

TEST_CASE("field arithmetic examples") {
  CHECK(kBeta + (1 - kBeta) == QuadSurd(1));
  CHECK(1 / (3 - kBeta) == kBeta);
  CHECK(kBeta * kBeta == S(7, -3, 2, 5));
  CHECK(t::hp_double(kBeta * kBeta) == doctest::Approx(0.1458980337503155).epsilon(1e-15));
  CHECK(code_of([] { return S(0, 1, 1, 2) + S(0, 1, 1, 3); }) == Errc::kMixedFields);
  CHECK(code_of([] { return kBeta / QuadSurd(0); }) == Errc::kDivideByZero);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 2000; ++i) {
    const long d = t::small_square_free()[static_cast<std::size_t>(t::uniform(rng, 0, 29))];
    const QuadSurd a = t::random_surd(rng, d);
    const QuadSurd b = i % 3 == 0 ? QuadSurd(Rational(t::uniform(rng, -9, 9), t::uniform(rng, 1, 9))) : t::random_surd(rng, d);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a * (b + 1) == a * b + a);
    CHECK(-(-a) == a);
    // Products agree with the high-precision oracle.
    CHECK(t::hp_distance(a * b, b * a) == 0.0);
    const double expected = mpf_class(t::hp(a) * t::hp(b), t::kOracleBits).get_d();
    CHECK(t::hp_double(a * b) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("floor and ceiling") {
  CHECK(S(3, 1, 2, 5).floor_ceil() == std::pair<Integer, Integer>(2, 3));
  CHECK(QuadSurd::sqrt(Integer(5)).floor_ceil() == std::pair<Integer, Integer>(2, 3));
  CHECK(QuadSurd(4).floor_ceil() == std::pair<Integer, Integer>(4, 4));
  CHECK(QuadSurd(Rational(-7, 2)).floor_ceil() == std::pair<Integer, Integer>(-4, -3));
  CHECK(S(-3, -1, 2, 5).floor() == -3);  // -(3+sqrt 5)/2 = -2.618...
}

TEST_CASE("floor agrees with a float view on random samples") {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    const long d = t::small_square_free()[static_cast<std::size_t>(t::uniform(rng, 0, 29))];
    const QuadSurd x = QuadSurd::make(Integer(t::uniform(rng, -1000000, 1000000)), Integer(t::uniform(rng, 1, 100000)),
                                      Integer(t::uniform(rng, 1, 1000)), Integer(d));
    const double v = t::hp_double(x);
    if (std::abs(v) >= 1e6) continue;
    const auto [lo, hi] = x.floor_ceil();
    CHECK(hi == lo + 1);
    // 1 ulp margin around integers.
    const double margin = std::abs(v) * 2.3e-16;
    if (std::abs(v - std::round(v)) > margin) {
      CHECK(lo.get_d() == std::floor(v));
      ++checked;
    }
  }
  CHECK(checked > 4000);
}

TEST_CASE("comparison examples") {
  CHECK(kBeta > QuadSurd(Rational(1, 3)));
  CHECK(dioph::compare(kBeta, kBeta) == 0);
  CHECK(dioph::compare_enclosed(kBeta, S(2, -1, 2, 2)) > 0);
  CHECK(code_of([] { return dioph::compare(kBeta, S(2, -1, 2, 2)); }) == Errc::kMixedFields);
}

TEST_CASE("comparison agrees with high precision on random pairs") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 10000; ++i) {
    const long d = t::small_square_free()[static_cast<std::size_t>(t::uniform(rng, 0, 29))];
    const QuadSurd a = t::random_surd(rng, d, 1000);
    const QuadSurd b = i % 4 == 0 ? QuadSurd(Rational(t::uniform(rng, -500, 500), t::uniform(rng, 1, 50)))
                                  : t::random_surd(rng, d, 1000);
    const mpf_class diff(t::hp(a) - t::hp(b), t::kOracleBits);
    const int expected = sgn(diff);
    CHECK(dioph::compare(a, b) == expected);
    CHECK(dioph::compare_enclosed(a, b) == expected);
  }
  // Different fields through enclosures.
  for (int i = 0; i < 2000; ++i) {
    const QuadSurd a = t::random_surd(rng, 2, 1000);
    const QuadSurd b = t::random_surd(rng, 3, 1000);
    const mpf_class diff(t::hp(a) - t::hp(b), t::kOracleBits);
    CHECK(dioph::compare_enclosed(a, b) == sgn(diff));
  }
}

TEST_CASE("floor_scaled and enclosures match the oracle") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 300; ++i) {
    const QuadSurd x = t::random_unit_surd(rng, t::small_square_free()[static_cast<std::size_t>(i % 30)]);
    const mpf_class scaled(t::hp(x) * mpf_class(Integer(1) << 128, t::kOracleBits), t::kOracleBits);
    mpf_class fl(0, t::kOracleBits);
    mpf_floor(fl.get_mpf_t(), scaled.get_mpf_t());
    CHECK(x.floor_scaled(128) == Integer(fl));
    const dioph::Enclosure box = dioph::enclose(x, 200);
    CHECK(box.lo < box.hi);
    CHECK(QuadSurd(box.lo) < x);
    CHECK(x < QuadSurd(box.hi));
  }
}

TEST_CASE("text round trip") {
  CHECK(QuadSurd::parse("(3-1*sqrt(5))/2") == kBeta);
  CHECK(QuadSurd::parse(" ( 3 - sqrt( 5 ) ) / 2 ") == kBeta);
  CHECK(QuadSurd::parse("4/27") == QuadSurd(Rational(4, 27)));
  CHECK(QuadSurd::parse("-7") == QuadSurd(-7));
  CHECK(QuadSurd::parse("(09+010*sqrt(05))/08") == QuadSurd::parse("(9+10*sqrt(5))/8"));
  CHECK(kBeta.to_string() == "(3-1*sqrt(5))/2");
  CHECK(QuadSurd(Rational(4, 27)).to_string() == "4/27");
  CHECK(kBeta.to_decimal(15) == "0.381966011250105");
  std::mt19937_64 rng(16);
  for (int i = 0; i < 500; ++i) {
    const QuadSurd x = t::random_surd(rng, t::small_square_free()[static_cast<std::size_t>(i % 30)], 100000);
    CHECK(QuadSurd::parse(x.to_string()) == x);
  }
  CHECK(code_of([] { QuadSurd::parse("(1+sqrt(5)"); }) == Errc::kParseError);
  CHECK(code_of([] { QuadSurd::parse("sqrt(5)/2"); }) == Errc::kParseError);
  CHECK(code_of([] { QuadSurd::parse("abc"); }) == Errc::kParseError);
  CHECK(code_of([] { QuadSurd::parse("(1+sqrt(8))/2"); }) == Errc::kNonSquareFreeD);
}

TEST_CASE("hash is consistent with equality") {
  std::unordered_set<QuadSurd, dioph::QuadSurdHash> set;
  set.insert(kBeta);
  set.insert(S(6, -2, 4, 5));
  set.insert(QuadSurd(1));
  CHECK(set.size() == 2);
}
