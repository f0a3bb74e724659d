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

// Exact arithmetic in a real quadratic field Q(sqrt(d)).
//
// A QuadSurd holds (p + q*sqrt(d))/r with unbounded integers. Values are kept
// normalized: r > 0, gcd(p, q, r) = 1, d square-free, and rationals (q = 0)
// always carry d = 1 so that equality of values is equality of fields.
// Rationals mix freely with any field; two irrationals must share d.

#ifndef DIOPH_SURD_HPP
#define DIOPH_SURD_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "dioph/error.hpp"

namespace dioph {

using Integer = mpz_class;
using Rational = mpq_class;

class QuadSurd {
 public:
  QuadSurd() : p_(0), q_(0), r_(1), d_(1) {}
  QuadSurd(long n) : p_(n), q_(0), r_(1), d_(1) {}  // NOLINT: implicit by design of the arithmetic
  explicit QuadSurd(const Integer& n) : p_(n), q_(0), r_(1), d_(1) {}
  explicit QuadSurd(const Rational& x);

  // Throws kZeroDenominator for r == 0 and kNonSquareFreeD unless d >= 1 is
  // square-free.
  static QuadSurd make(Integer p, Integer q, Integer r, Integer d);

  // sqrt(n) for n >= 0; the square part of n is pulled out of the radical.
  static QuadSurd sqrt(const Integer& n);

  // Accepts "(p+q*sqrt(d))/r", "p/r", "p", "sqrt(d)", "(p - sqrt(d))/r" and
  // similar, with optional whitespace.
  static QuadSurd parse(std::string_view text);

  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }
  const Integer& r() const noexcept { return r_; }
  const Integer& d() const noexcept { return d_; }

  bool is_rational() const noexcept { return q_ == 0; }
  bool is_zero() const noexcept { return p_ == 0 && q_ == 0; }
  bool is_integer() const noexcept { return q_ == 0 && r_ == 1; }
  int sign() const;

  // Requires is_rational().
  Rational to_rational() const;
  QuadSurd conjugate() const;

  Integer floor() const;
  Integer ceil() const;
  std::pair<Integer, Integer> floor_ceil() const { return {floor(), ceil()}; }

  // floor(value * 2^bits), exact.
  Integer floor_scaled(unsigned long bits) const;

  // Reporting view only; never used for control flow.
  double to_double() const;
  std::string to_decimal(int significant_digits = 15) const;
  std::string to_string() const;

  QuadSurd operator-() const;
  QuadSurd& operator+=(const QuadSurd& other);
  QuadSurd& operator-=(const QuadSurd& other);
  QuadSurd& operator*=(const QuadSurd& other);
  QuadSurd& operator/=(const QuadSurd& other);

  friend QuadSurd operator+(QuadSurd a, const QuadSurd& b) { return a += b; }
  friend QuadSurd operator-(QuadSurd a, const QuadSurd& b) { return a -= b; }
  friend QuadSurd operator*(QuadSurd a, const QuadSurd& b) { return a *= b; }
  friend QuadSurd operator/(QuadSurd a, const QuadSurd& b) { return a /= b; }

  friend bool operator==(const QuadSurd& a, const QuadSurd& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.d_ == b.d_;
  }
  // Throws kMixedFields for irrationals from different fields.
  friend std::strong_ordering operator<=>(const QuadSurd& a, const QuadSurd& b);

  std::size_t hash() const;

 private:
  QuadSurd(Integer p, Integer q, Integer r, Integer d, int /*trusted*/);
  void normalize();
  const Integer& common_d(const QuadSurd& other) const;

  Integer p_, q_, r_, d_;
};

// Exact three-way comparison, -1/0/+1. Throws kMixedFields.
int compare(const QuadSurd& a, const QuadSurd& b);

// Comparison that also works across different fields, decided by separating
// dyadic enclosures and refining until they are disjoint. Values in distinct
// fields are never equal, so refinement terminates.
int compare_enclosed(const QuadSurd& a, const QuadSurd& b);

struct Enclosure {
  Rational lo;
  Rational hi;
};

// lo <= value <= hi with hi - lo <= 2^-bits.
Enclosure enclose(const QuadSurd& x, unsigned long bits);

// n = f^2 * core with core square-free; n >= 1.
struct SquareSplit {
  Integer factor;
  Integer core;
};
SquareSplit split_square(const Integer& n);
bool is_square_free(const Integer& n);

inline QuadSurd min(const QuadSurd& a, const QuadSurd& b) { return compare(b, a) < 0 ? b : a; }
inline QuadSurd max(const QuadSurd& a, const QuadSurd& b) { return compare(b, a) > 0 ? b : a; }
inline QuadSurd abs(const QuadSurd& a) { return a.sign() < 0 ? -a : a; }

struct QuadSurdHash {
  std::size_t operator()(const QuadSurd& x) const { return x.hash(); }
};

}  // namespace dioph

#endif  // DIOPH_SURD_HPP
