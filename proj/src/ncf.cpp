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

#include "dioph/ncf.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "sequence_text.hpp"

namespace dioph {

namespace {

Digit to_digit(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(Errc::kOutOfRange, "partial quotient " + v.get_str() + " exceeds 64 bits");
  return v.get_si();
}

// Smallest p dividing word.size() with word[i] == word[i % p] for all i.
std::size_t primitive_length(const std::vector<Digit>& word) {
  const std::size_t n = word.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = word[i] == word[i - p];
    if (ok) return p;
  }
  return n;
}

// [0; w_1, ..., w_n - y]^- for a tail value y in [0, 1].
Rational evaluate_word(std::span<const Digit> word, const Rational& y) {
  Rational x = y;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    x = Rational(*it) - x;
    x = 1 / x;
  }
  return x;
}

}  // namespace

NcfExpansion::NcfExpansion(std::vector<Digit> preperiod, std::vector<Digit> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  auto check = [](const std::vector<Digit>& v) {
    for (Digit a : v) {
      if (a < 2) throw Error(Errc::kInvalidExpansion, "partial quotient " + std::to_string(a) + " is below 2");
    }
  };
  check(preperiod_);
  check(period_);
  if (period_.empty()) return;
  if (std::all_of(period_.begin(), period_.end(), [](Digit a) { return a == 2; })) {
    throw Error(Errc::kInvalidExpansion, "a period of 2s has the rational value 1");
  }
  period_.resize(primitive_length(period_));
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    preperiod_.pop_back();
  }
}

Digit NcfExpansion::operator[](std::size_t i) const {
  if (i == 0) throw Error(Errc::kInvalidArgument, "partial quotients are indexed from 1");
  if (i <= preperiod_.size()) return preperiod_[i - 1];
  if (period_.empty()) {
    throw Error(Errc::kInsufficientDigits, "a_" + std::to_string(i) + " is beyond the " +
                                               std::to_string(preperiod_.size()) + " known partial quotients");
  }
  return period_[(i - 1 - preperiod_.size()) % period_.size()];
}

NcfExpansion NcfExpansion::parse(std::string_view text) {
  std::string_view body = detail::trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw Error(Errc::kParseError, "unbalanced '[' in expansion '" + std::string(text) + "'");
    body = detail::trim(body.substr(1, body.size() - 2));
  }
  if (const std::size_t semi = body.find(';'); semi != std::string_view::npos) {
    if (detail::trim(body.substr(0, semi)) != "0") {
      throw Error(Errc::kParseError, "expansion '" + std::string(text) + "' must have integer part 0");
    }
    body = body.substr(semi + 1);
  }
  auto seq = detail::parse_sequence(body, "expansion");
  return NcfExpansion(std::move(seq.preperiod), std::move(seq.period));
}

std::string NcfExpansion::to_string() const { return "[0; " + detail::format_sequence(preperiod_, period_) + "]"; }

NcfExpansion expand(const QuadSurd& x, std::size_t max_terms) {
  if (x.sign() <= 0 || compare(x, 1) >= 0) throw Error(Errc::kOutOfRange, x.to_string() + " is not in (0,1)");
  if (x.is_rational()) throw Error(Errc::kRationalInput, "rational input " + x.to_string() + " has a terminating expansion");
  std::unordered_map<QuadSurd, std::size_t, QuadSurdHash> seen;
  std::vector<Digit> digits;
  QuadSurd tail = x;
  for (std::size_t n = 0;; ++n) {
    const auto [it, inserted] = seen.emplace(tail, n);
    if (!inserted) {
      const auto start = digits.begin() + static_cast<std::ptrdiff_t>(it->second);
      return NcfExpansion(std::vector<Digit>(digits.begin(), start), std::vector<Digit>(start, digits.end()));
    }
    if (n == max_terms) return NcfExpansion::finite(std::move(digits));
    const QuadSurd inv = 1 / tail;
    const Integer a = inv.ceil();
    digits.push_back(to_digit(a));
    tail = QuadSurd(a) - inv;
  }
}

DecimalExpansion expand_decimal(std::string_view decimal, std::size_t max_terms) {
  std::string_view s = detail::trim(decimal);
  const std::size_t dot = s.find('.');
  const std::string_view whole = s.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  auto all_digits = [](std::string_view v) {
    return std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  if (frac.empty() || !all_digits(frac) || !all_digits(whole) || (whole != "" && whole != "0")) {
    throw Error(Errc::kParseError, "expected a decimal in (0,1) such as 0.4142, got '" + std::string(decimal) + "'");
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  Rational mid(Integer(std::string(frac), 10), scale);
  mid.canonicalize();
  Rational half(1, 2 * scale);
  half.canonicalize();
  Rational lo = mid - half, hi = mid + half;
  if (lo <= 0 || hi >= 1) throw Error(Errc::kOutOfRange, "decimal '" + std::string(decimal) + "' is too close to 0 or 1");

  DecimalExpansion out;
  out.precision_digits = frac.size();
  std::vector<Digit> digits;
  bool certain = true;
  for (std::size_t n = 0; n < max_terms && mid != 0; ++n) {
    const Rational inv = 1 / mid;
    Integer a;
    mpz_cdiv_q(a.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    if (certain) {
      // 1/x over [lo, hi] is [1/hi, 1/lo]; the digit is pinned when that
      // interval sits inside (a-1, a] without touching an integer from below.
      const Rational inv_lo = 1 / lo, inv_hi = 1 / hi;
      certain = inv_hi > Rational(a - 1) && inv_lo < Rational(a);
      if (certain) {
        ++out.horizon;
        lo = Rational(a) - inv_lo;
        hi = Rational(a) - inv_hi;
        certain = lo > 0;
      }
    }
    digits.push_back(to_digit(a));
    mid = Rational(a) - inv;
  }
  out.expansion = NcfExpansion::finite(std::move(digits));
  return out;
}

Rational evaluate_finite(std::span<const Digit> digits) { return evaluate_word(digits, Rational(0)); }

QuadSurd evaluate(const NcfExpansion& e) {
  if (!e.is_periodic()) throw Error(Errc::kNoPeriod, "expansion " + e.to_string() + " has no period");
  // Product of [[0,1],[-1,b]] over the period maps y to [0; b_1, ..., b_P - y].
  Integer A = 1, B = 0, C = 0, D = 1;
  for (Digit b : e.period()) {
    // [[A,B],[C,D]] * [[0,1],[-1,b]]
    Integer nA = -B, nB = A + B * b, nC = -D, nD = C + D * b;
    A = std::move(nA);
    B = std::move(nB);
    C = std::move(nC);
    D = std::move(nD);
  }
  // Fixed point: C x^2 + (D - A) x - B = 0. The matrix entries grow with the
  // period length while the value's minimal polynomial stays small, so the
  // content is divided out before the square part of the discriminant is
  // extracted.
  Integer a2 = C, a1 = D - A, a0 = -B, g;
  mpz_gcd(g.get_mpz_t(), a2.get_mpz_t(), a1.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a0.get_mpz_t());
  a2 /= g;
  a1 /= g;
  a0 /= g;
  const QuadSurd root = QuadSurd::sqrt(Integer(a1 * a1 - 4 * a2 * a0));
  const QuadSurd base(Integer(-a1));
  const QuadSurd denom(Integer(2 * a2));
  QuadSurd x;
  bool found = false;
  for (const QuadSurd& candidate : {(base + root) / denom, (base - root) / denom}) {
    if (candidate.sign() > 0 && compare(candidate, 1) < 0) {
      x = candidate;
      found = true;
      break;
    }
  }
  if (!found) throw Error(Errc::kInvalidExpansion, "period of " + e.to_string() + " has no fixed point in (0,1)");
  for (auto it = e.preperiod().rbegin(); it != e.preperiod().rend(); ++it) x = 1 / (QuadSurd(*it) - x);
  return x;
}

Digit liminf_R(const NcfExpansion& e) {
  if (!e.is_periodic()) throw Error(Errc::kNoPeriod, "liminf of partial quotients needs a period");
  return *std::min_element(e.period().begin(), e.period().end());
}

Digit limsup_r(const NcfExpansion& e) {
  if (!e.is_periodic()) throw Error(Errc::kNoPeriod, "limsup of partial quotients needs a period");
  return *std::max_element(e.period().begin(), e.period().end());
}

// ---------------------------------------------------------------------------

TailWalker::TailWalker(const NcfExpansion& e) : e_(e) {
  if (e_.is_periodic()) {
    value_ = evaluate(e_);
    const std::size_t span = e_.preperiod().size() + e_.period().size();
    QuadSurd tail = value_;
    for (std::size_t n = 0; n < span; ++n) {
      cycle_.push_back(tail);
      tail = QuadSurd(e_[n + 1]) - 1 / tail;
    }
  } else {
    if (e_.preperiod().empty()) throw Error(Errc::kInsufficientDigits, "empty expansion");
    value_ = QuadSurd(evaluate_finite(e_.preperiod()));
  }
  state_.k = 0;
  state_.alpha = value_;
  state_.alpha_error = alpha_error(0);
  state_.alphabar = 0;
  state_.q = 1;
  state_.p = 0;
  state_.D = value_;
  state_.exact = e_.is_periodic();
}

QuadSurd TailWalker::alpha(std::size_t k) const {
  if (e_.is_periodic()) {
    if (k < cycle_.size()) return cycle_[k];
    const std::size_t pre = e_.preperiod().size();
    return cycle_[pre + (k - pre) % e_.period().size()];
  }
  const auto& digits = e_.preperiod();
  if (k >= digits.size()) {
    throw Error(Errc::kInsufficientDigits,
                "alpha_" + std::to_string(k) + " needs a_" + std::to_string(k + 1) + ", beyond the known digits");
  }
  return QuadSurd(evaluate_finite(std::span<const Digit>(digits).subspan(k)));
}

Rational TailWalker::alpha_error(std::size_t k) const {
  if (e_.is_periodic()) return 0;
  alpha(k);  // range check
  const auto word = std::span<const Digit>(e_.preperiod()).subspan(k);
  Rational err = evaluate_word(word, Rational(1)) - evaluate_word(word, Rational(0));
  return abs(err);
}

const TailState& TailWalker::next() {
  const std::size_t k = state_.k + 1;
  const Digit a = e_[k];
  TailState s;
  s.k = k;
  s.alpha = alpha(k);
  s.alpha_error = alpha_error(k);
  s.alphabar = 1 / (Rational(a) - state_.alphabar);
  s.q = a * state_.q - q_prev_;
  s.p = a * state_.p - p_prev_;
  q_prev_ = state_.q;
  p_prev_ = state_.p;
  s.D = QuadSurd(s.q) * value_ - QuadSurd(s.p);
  s.exact = state_.exact;
  state_ = std::move(s);
  return state_;
}

TailState tails(const NcfExpansion& e, std::size_t k) {
  TailWalker walker(e);
  while (walker.state().k < k) walker.next();
  return walker.state();
}

}  // namespace dioph
