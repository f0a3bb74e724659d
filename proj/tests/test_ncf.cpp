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

#include <vector>

#include "doctest.h"
#include "dioph/ncf.hpp"
#include "support.hpp"

using dioph::Digit;
using dioph::Errc;
using dioph::Error;
using dioph::Integer;
using dioph::NcfExpansion;
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

// Ceiling recursion in 2048-bit floats, independent of the exact path.
std::vector<Digit> float_digits(const QuadSurd& x, std::size_t count) {
  constexpr unsigned long kBits = 2048;
  mpf_class a(0, kBits), one(1, kBits), inv(0, kBits), c(0, kBits);
  a = t::hp(x);
  a.set_prec(kBits);
  std::vector<Digit> out;
  for (std::size_t i = 0; i < count; ++i) {
    inv = one / a;
    mpf_ceil(c.get_mpf_t(), inv.get_mpf_t());
    out.push_back(c.get_si());
    a = c - inv;
  }
  return out;
}

std::vector<Digit> first_digits(const NcfExpansion& e, std::size_t count) {
  std::vector<Digit> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(e[i]);
  return out;
}

NcfExpansion random_periodic(std::mt19937_64& rng) {
  std::vector<Digit> pre(static_cast<std::size_t>(t::uniform(rng, 0, 3)));
  for (Digit& a : pre) a = t::uniform(rng, 2, 9);
  std::vector<Digit> period(static_cast<std::size_t>(t::uniform(rng, 1, 4)));
  bool all_two = true;
  for (Digit& a : period) {
    a = t::uniform(rng, 2, 9);
    all_two = all_two && a == 2;
  }
  if (all_two) period[0] = 3;
  return NcfExpansion(pre, period);
}

}  // namespace

TEST_CASE("expand examples") {
  CHECK(dioph::expand(S(3, -1, 2, 5)) == NcfExpansion::periodic({3}));
  CHECK(dioph::expand(S(-1, 1, 1, 2)) == NcfExpansion({3}, {2, 4}));
  CHECK(dioph::expand(S(2, -1, 1, 3)) == NcfExpansion::periodic({4}));
  // The exact digits agree with an independent float recursion.
  CHECK(first_digits(dioph::expand(S(-1, 1, 1, 2)), 40) == float_digits(S(-1, 1, 1, 2), 40));
}

TEST_CASE("expand errors") {
  CHECK(code_of([] { dioph::expand(QuadSurd(Rational(1, 2))); }) == Errc::kRationalInput);
  CHECK(code_of([] { dioph::expand(QuadSurd(Rational(3, 2))); }) == Errc::kOutOfRange);
  CHECK(code_of([] { dioph::expand(S(1, 1, 1, 5)); }) == Errc::kOutOfRange);
  CHECK(code_of([] { dioph::expand(QuadSurd(0)); }) == Errc::kOutOfRange);
}

TEST_CASE("evaluate examples") {
  CHECK(dioph::evaluate(NcfExpansion::periodic({3})) == S(3, -1, 2, 5));
  for (long R = 3; R <= 12; ++R) {
    CHECK(dioph::evaluate(NcfExpansion::periodic({R})) == (QuadSurd(R) - QuadSurd::sqrt(Integer(R * R - 4))) / 2);
  }
  CHECK(dioph::evaluate(NcfExpansion::periodic({4})) == S(2, -1, 1, 3));
  CHECK(dioph::evaluate(NcfExpansion({3}, {2, 4})) == S(-1, 1, 1, 2));
  CHECK(code_of([] { dioph::evaluate(NcfExpansion::finite({3, 4})); }) == Errc::kNoPeriod);
}

TEST_CASE("expansion construction invariants") {
  CHECK(NcfExpansion({}, {3, 3}) == NcfExpansion::periodic({3}));   // primitive period
  CHECK(NcfExpansion({4}, {3, 4}) == NcfExpansion({}, {4, 3}));     // preperiod folded into the period
  CHECK(code_of([] { NcfExpansion({1}, {3}); }) == Errc::kInvalidExpansion);
  CHECK(code_of([] { NcfExpansion({3}, {2}); }) == Errc::kInvalidExpansion);
  CHECK(code_of([] { NcfExpansion::finite({3})[2]; }) == Errc::kInsufficientDigits);
}

TEST_CASE("text round trip") {
  CHECK(NcfExpansion::parse("[0; 3, (2,4)*]") == NcfExpansion({3}, {2, 4}));
  CHECK(NcfExpansion::parse("(3)*") == NcfExpansion::periodic({3}));
  CHECK(NcfExpansion::parse("[0; 5, 6, 7]") == NcfExpansion::finite({5, 6, 7}));
  CHECK(NcfExpansion({3}, {2, 4}).to_string() == "[0; 3, (2,4)*]");
  CHECK(code_of([] { NcfExpansion::parse("[0; 3, (2,4]"); }) == Errc::kParseError);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const NcfExpansion e = random_periodic(rng);
    CHECK(NcfExpansion::parse(e.to_string()) == e);
  }
}

TEST_CASE("tails examples") {
  const NcfExpansion e = NcfExpansion::periodic({3});
  CHECK(dioph::tails(e, 1).alphabar == Rational(1, 3));
  const QuadSurd beta = S(3, -1, 2, 5);
  for (std::size_t k = 1; k <= 10; ++k) CHECK(dioph::tails(e, k).alpha == beta);
  CHECK(dioph::tails(e, 1).q == 3);
  CHECK(dioph::tails(e, 2).q == 8);
  CHECK(dioph::tails(e, 3).q == 21);
  Rational product = dioph::tails(e, 1).alphabar * dioph::tails(e, 2).alphabar * dioph::tails(e, 3).alphabar;
  CHECK(1 / product == 21);
  CHECK(code_of([] { dioph::tails(NcfExpansion::finite({3, 4}), 5); }) == Errc::kInsufficientDigits);
}

TEST_CASE("liminf examples") {
  CHECK(dioph::liminf_R(NcfExpansion::periodic({3})) == 3);
  CHECK(dioph::liminf_R(NcfExpansion({9, 9}, {5, 40})) == 5);
  CHECK(dioph::liminf_R(NcfExpansion::periodic({4, 8})) == 4);
  CHECK(dioph::limsup_r(NcfExpansion({9, 9}, {5, 40})) == 40);
  CHECK(code_of([] { dioph::liminf_R(NcfExpansion::finite({3})); }) == Errc::kNoPeriod);
}

TEST_CASE("tail invariants on random periodic expansions") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const NcfExpansion e = random_periodic(rng);
    const QuadSurd alpha = dioph::evaluate(e);
    const Digit R = dioph::liminf_R(e);
    dioph::TailWalker walker(e);
    QuadSurd product = alpha;  // alpha_0 ... alpha_k
    Rational barprod = 1;
    QuadSurd previous_D = 1;   // D_{-1}
    Integer previous_q = 1;    // q_0
    for (std::size_t k = 1; k <= 50; ++k) {
      const dioph::TailState& s = walker.next();
      REQUIRE(s.k == k);
      const Digit a = e[k];
      CHECK(s.exact);
      CHECK(s.alpha > 0);
      CHECK(s.alpha < 1);
      // The reversed tail [0; a_1] is exactly 1/a_1; from k = 2 on it is strict.
      if (k == 1) {
        CHECK(s.alphabar == Rational(1, a));
      } else {
        CHECK(s.alphabar > Rational(1, a));
        if (a == R) CHECK(s.alphabar > Rational(1, R));
      }
      CHECK(s.alphabar < Rational(1, a - 1));
      CHECK(s.alpha == walker.alpha(k));
      // D_k = q_k alpha - p_k = alpha_0 ... alpha_k, decreasing and positive.
      product *= s.alpha;
      CHECK(s.D == product);
      CHECK(s.D == QuadSurd(s.q) * alpha - QuadSurd(s.p));
      CHECK(s.D > 0);
      CHECK(s.D < previous_D);
      previous_D = s.D;
      // q_k is the reciprocal of the reversed-tail product.
      barprod *= s.alphabar;
      CHECK(Rational(s.q) * barprod == 1);
      CHECK(s.q > previous_q);
      previous_q = s.q;
      // Convergent p_k / q_k is the finite expansion [0; a_1..a_k].
      std::vector<Digit> prefix;
      for (std::size_t i = 1; i <= k; ++i) prefix.push_back(e[i]);
      CHECK(dioph::evaluate_finite(prefix) == Rational(s.p, s.q));
    }
  }
}

TEST_CASE("evaluate and expand are inverse on random surds") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (long d = 2; d <= 50; ++d) {
    if (!dioph::is_square_free(Integer(d))) continue;
    for (int i = 0; i < 12; ++i) {
      const QuadSurd x = t::random_unit_surd(rng, d);
      const NcfExpansion e = dioph::expand(x);
      CHECK(e.is_periodic());
      CHECK(dioph::evaluate(e) == x);
      CHECK(first_digits(e, 30) == float_digits(x, 30));
      ++checked;
    }
  }
  CHECK(checked > 300);
  std::mt19937_64 rng2(24);
  for (int i = 0; i < 100; ++i) {
    const NcfExpansion e = random_periodic(rng2);
    CHECK(dioph::expand(dioph::evaluate(e)) == e);
  }
}

TEST_CASE("decimal input reports a certified horizon") {
  const std::string golden = "0.38196601125010515179541316563436188227969082019424";
  const dioph::DecimalExpansion out = dioph::expand_decimal(golden, 200);
  CHECK(out.horizon >= 20);
  CHECK(out.horizon <= out.expansion.preperiod().size());
  for (std::size_t i = 1; i <= out.horizon; ++i) CHECK(out.expansion[i] == 3);

  const QuadSurd root2 = S(-1, 1, 1, 2);
  const std::string text = "0." + root2.to_decimal(60).substr(2);
  const dioph::DecimalExpansion out2 = dioph::expand_decimal(text, 200);
  const NcfExpansion exact = dioph::expand(root2);
  CHECK(out2.horizon >= 10);
  for (std::size_t i = 1; i <= out2.horizon; ++i) CHECK(out2.expansion[i] == exact[i]);
  CHECK_FALSE(out2.expansion.is_periodic());

  // A fraction starting with 0 is read in base ten.
  const dioph::DecimalExpansion small = dioph::expand_decimal("0.09", 10);
  CHECK(small.expansion[1] == 12);
}

TEST_CASE("tails of a finite expansion carry an error bound") {
  const NcfExpansion e = NcfExpansion::finite({3, 3, 3, 3, 3, 3, 3, 3, 3, 3});
  const dioph::TailState s = dioph::tails(e, 3);
  CHECK_FALSE(s.exact);
  CHECK(s.alpha_error > 0);
  const QuadSurd beta = S(3, -1, 2, 5);
  CHECK(t::hp_distance(s.alpha, beta) <= s.alpha_error.get_d());
}
