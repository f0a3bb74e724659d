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

#include "dioph/surd.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

namespace dioph {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kParseError: return "ParseError";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kNonSquareFreeD: return "NonSquareFreeD";
    case Errc::kZeroDenominator: return "ZeroDenominator";
    case Errc::kMixedFields: return "MixedFields";
    case Errc::kDivideByZero: return "DivideByZero";
    case Errc::kRationalInput: return "RationalInput";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kNoPeriod: return "NoPeriod";
    case Errc::kInsufficientDigits: return "InsufficientDigits";
    case Errc::kInvalidExpansion: return "InvalidExpansion";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kInvalidDigits: return "InvalidDigits";
    case Errc::kLatticePoint: return "LatticePoint";
    case Errc::kPrecisionExhausted: return "PrecisionExhausted";
    case Errc::kEvenR: return "EvenR";
    case Errc::kRTooSmall: return "RTooSmall";
    case Errc::kRBelowR: return "RBelowR";
    case Errc::kPrecisionBudgetExceeded: return "PrecisionBudgetExceeded";
    case Errc::kLatticeGamma: return "LatticeGamma";
  }
  return "Unknown";
}

namespace {

Integer isqrt(const Integer& n) {
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// Brent's variant of Pollard rho; n must be odd, composite, and not a
// perfect power of a prime that trial division would have caught.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, g = 1, q = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    const Integer root = isqrt(n);
    factor_into(root, out);
    factor_into(root, out);
    return;
  }
  const Integer g = pollard_rho(n);
  factor_into(g, out);
  factor_into(Integer(n / g), out);
}

}  // namespace

SquareSplit split_square(const Integer& n) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "split_square needs n >= 1");
  Integer rest = n;
  SquareSplit out{1, 1};
  auto absorb = [&out](const Integer& prime, unsigned exponent) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), prime.get_mpz_t(), exponent / 2);
    out.factor *= power;
    if (exponent % 2 == 1) out.core *= prime;
  };
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) absorb(Integer(p), e);
  }
  if (rest > 1) {
    std::map<Integer, unsigned> primes;
    factor_into(rest, primes);
    for (const auto& [prime, e] : primes) absorb(prime, e);
  }
  return out;
}

bool is_square_free(const Integer& n) { return n >= 1 && split_square(n).factor == 1; }

QuadSurd::QuadSurd(const Rational& x) : p_(x.get_num()), q_(0), r_(x.get_den()), d_(1) {}

QuadSurd::QuadSurd(Integer p, Integer q, Integer r, Integer d, int)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
  normalize();
}

QuadSurd QuadSurd::make(Integer p, Integer q, Integer r, Integer d) {
  if (r == 0) throw Error(Errc::kZeroDenominator, "surd denominator is zero");
  if (d < 1 || !is_square_free(d)) {
    throw Error(Errc::kNonSquareFreeD, "radicand " + d.get_str() + " is not a square-free positive integer");
  }
  return QuadSurd(std::move(p), std::move(q), std::move(r), std::move(d), 0);
}

QuadSurd QuadSurd::sqrt(const Integer& n) {
  if (n < 0) throw Error(Errc::kInvalidArgument, "sqrt of a negative integer");
  if (n == 0) return QuadSurd();
  const SquareSplit s = split_square(n);
  return QuadSurd(0, s.factor, 1, s.core, 0);
}

void QuadSurd::normalize() {
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
  }
  if (q_ == 0) d_ = 1;
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  Integer g = gcd(gcd(p_, q_), r_);
  if (g > 1) {
    mpz_divexact(p_.get_mpz_t(), p_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(q_.get_mpz_t(), q_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(r_.get_mpz_t(), r_.get_mpz_t(), g.get_mpz_t());
  }
}

const Integer& QuadSurd::common_d(const QuadSurd& other) const {
  if (q_ == 0) return other.d_;
  if (other.q_ == 0 || other.d_ == d_) return d_;
  throw Error(Errc::kMixedFields,
              "surds from Q(sqrt(" + d_.get_str() + ")) and Q(sqrt(" + other.d_.get_str() + ")) do not mix");
}

int QuadSurd::sign() const {
  const int sp = sgn(p_);
  const int sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 against q^2 d.
  const int c = cmp(Integer(p_ * p_), Integer(q_ * q_ * d_));
  return c > 0 ? sp : sq;
}

Rational QuadSurd::to_rational() const {
  if (q_ != 0) throw Error(Errc::kInvalidArgument, "surd " + to_string() + " is irrational");
  Rational out(p_, r_);
  out.canonicalize();
  return out;
}

QuadSurd QuadSurd::conjugate() const { return QuadSurd(p_, -q_, r_, d_, 0); }

Integer QuadSurd::floor_scaled(unsigned long bits) const {
  Integer num = p_;
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  if (q_ != 0) {
    Integer rad = q_ * q_ * d_;
    mpz_mul_2exp(rad.get_mpz_t(), rad.get_mpz_t(), 2 * bits);
    Integer root = isqrt(rad);
    // q^2 d 4^bits is never a perfect square for square-free d > 1.
    num += q_ > 0 ? root : Integer(-root - 1);
  }
  return floor_div(num, r_);
}

Integer QuadSurd::floor() const { return floor_scaled(0); }

Integer QuadSurd::ceil() const {
  if (q_ == 0) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), p_.get_mpz_t(), r_.get_mpz_t());
    return out;
  }
  return floor() + 1;
}

double QuadSurd::to_double() const {
  const mp_bitcnt_t prec = 256;
  mpf_class p(p_, prec), r(r_, prec);
  if (q_ == 0) return mpf_class(p / r, prec).get_d();
  mpf_class root(0, prec);
  mpf_class dd(d_, prec);
  mpf_sqrt(root.get_mpf_t(), dd.get_mpf_t());
  mpf_class q(q_, prec);
  if (sgn(p_) * sgn(q_) >= 0) return mpf_class((p + q * root) / r, prec).get_d();
  // Rationalize to avoid cancellation: p + q sqrt(d) = (p^2 - q^2 d) / (p - q sqrt(d)).
  mpf_class norm(Integer(p_ * p_ - q_ * q_ * d_), prec);
  return mpf_class(norm / ((p - q * root) * r), prec).get_d();
}

std::string QuadSurd::to_decimal(int significant_digits) const {
  const int n = std::max(significant_digits, 1);
  if (is_zero()) return "0";
  const QuadSurd magnitude = sign() < 0 ? -*this : *this;
  Integer ten_n;
  mpz_ui_pow_ui(ten_n.get_mpz_t(), 10, static_cast<unsigned long>(n));
  auto scaled = [&](long exponent) {  // magnitude * 10^exponent as a surd
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? magnitude / QuadSurd(power) : magnitude * QuadSurd(power);
  };
  // Decimal exponent e with 10^e <= magnitude < 10^(e+1), seeded from the
  // float view and corrected exactly.
  long e = static_cast<long>(std::floor(std::log10(std::abs(to_double()))));
  while (compare(scaled(-e), 1) < 0) --e;
  while (compare(scaled(-e), 10) >= 0) ++e;
  // Round to n significant digits, half up (an irrational never ties).
  Integer digits = (scaled(n - 1 - e) + QuadSurd(Rational(1, 2))).floor();
  if (digits == ten_n) {
    digits /= 10;
    ++e;
  }
  std::string text = digits.get_str();
  std::string out = sign() < 0 ? "-" : "";
  auto trim = [](std::string s) {
    const std::size_t last = s.find_last_not_of('0');
    s.erase(last + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };
  if (e < -4 || e >= n) {
    std::string mantissa = text.substr(0, 1) + "." + text.substr(1);
    char exponent[32];
    std::snprintf(exponent, sizeof exponent, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    return out + trim(mantissa) + exponent;
  }
  if (e < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + text;
    return trim(out);
  }
  const std::size_t whole = static_cast<std::size_t>(e) + 1;
  out += text.substr(0, whole);
  if (whole < text.size()) out = trim(out + "." + text.substr(whole));
  return out;
}

std::string QuadSurd::to_string() const {
  if (q_ == 0) return r_ == 1 ? p_.get_str() : p_.get_str() + "/" + r_.get_str();
  std::string out = "(" + p_.get_str();
  out += q_ < 0 ? "-" : "+";
  out += Integer(abs(q_)).get_str() + "*sqrt(" + d_.get_str() + "))/" + r_.get_str();
  return out;
}

QuadSurd QuadSurd::operator-() const { return QuadSurd(-p_, -q_, r_, d_, 0); }

QuadSurd& QuadSurd::operator+=(const QuadSurd& o) {
  Integer d = common_d(o);
  *this = QuadSurd(p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, r_ * o.r_, std::move(d), 0);
  return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o) { return *this += -o; }

QuadSurd& QuadSurd::operator*=(const QuadSurd& o) {
  Integer d = common_d(o);
  Integer p = p_ * o.p_ + q_ * o.q_ * d;
  Integer q = p_ * o.q_ + q_ * o.p_;
  *this = QuadSurd(std::move(p), std::move(q), r_ * o.r_, std::move(d), 0);
  return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& o) {
  if (o.is_zero()) throw Error(Errc::kDivideByZero, "division by zero surd");
  common_d(o);
  // 1/o = r (p - q sqrt(d)) / (p^2 - q^2 d)
  Integer norm = o.p_ * o.p_ - o.q_ * o.q_ * o.d_;
  QuadSurd inv(o.r_ * o.p_, -o.r_ * o.q_, std::move(norm), o.d_, 0);
  return *this *= inv;
}

std::strong_ordering operator<=>(const QuadSurd& a, const QuadSurd& b) {
  const int c = compare(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::size_t QuadSurd::hash() const {
  std::size_t h = 0;
  auto mix = [&h](const Integer& v) {
    const std::size_t limb = mpz_size(v.get_mpz_t()) > 0 ? mpz_getlimbn(v.get_mpz_t(), 0) : 0;
    h ^= std::hash<std::size_t>{}(limb ^ static_cast<std::size_t>(sgn(v) + 2)) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  };
  mix(p_);
  mix(q_);
  mix(r_);
  mix(d_);
  return h;
}

int compare(const QuadSurd& a, const QuadSurd& b) { return (a - b).sign(); }

Enclosure enclose(const QuadSurd& x, unsigned long bits) {
  const Integer f = x.floor_scaled(bits);
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Rational lo(f, scale), hi(f + 1, scale);
  lo.canonicalize();
  hi.canonicalize();
  if (x.is_rational()) {
    const Rational v = x.to_rational();
    return {v, v};
  }
  return {lo, hi};
}

int compare_enclosed(const QuadSurd& a, const QuadSurd& b) {
  if (a.is_rational() || b.is_rational() || a.d() == b.d()) return compare(a, b);
  for (unsigned long bits = 128;; bits *= 2) {
    const Enclosure ea = enclose(a, bits);
    const Enclosure eb = enclose(b, bits);
    if (ea.hi < eb.lo) return -1;
    if (eb.hi < ea.lo) return 1;
  }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class SurdParser {
 public:
  explicit SurdParser(std::string_view text) : s_(text) {}

  QuadSurd parse() {
    skip_ws();
    bool parens = false;
    if (peek() == '(') {
      ++pos_;
      parens = true;
    }
    parse_sum();
    if (parens) expect(')');
    skip_ws();
    Integer r = 1;
    if (peek() == '/') {
      ++pos_;
      if (!parens && has_sqrt_) fail("a denominator after an unparenthesized radical is ambiguous");
      r = integer();
    }
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    if (r == 0) throw Error(Errc::kZeroDenominator, "surd denominator is zero");
    return QuadSurd::make(p_, q_, r, has_sqrt_ ? d_ : Integer(1));
  }

 private:
  void parse_sum() {
    skip_ws();
    int sign = 1;
    if (peek() == '-' || peek() == '+') sign = s_[pos_++] == '-' ? -1 : 1;
    term(sign);
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') return;
      sign = s_[pos_++] == '-' ? -1 : 1;
      term(sign);
    }
  }

  void term(int sign) {
    skip_ws();
    if (starts_with("sqrt")) {
      radical(Integer(sign));
      return;
    }
    Integer coeff = integer() * sign;
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      radical(coeff);
      return;
    }
    p_ += coeff;
  }

  void radical(const Integer& coeff) {
    if (!starts_with("sqrt")) fail("expected sqrt(");
    pos_ += 4;
    expect('(');
    Integer d = integer();
    expect(')');
    if (has_sqrt_ && d != d_) fail("more than one radicand");
    has_sqrt_ = true;
    d_ = d;
    q_ += coeff;
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_with(std::string_view word) const { return s_.substr(pos_, word.size()) == word; }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::kParseError, "cannot parse surd '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                                       ": " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Integer p_ = 0, q_ = 0, d_ = 1;
  bool has_sqrt_ = false;
};

}  // namespace

QuadSurd QuadSurd::parse(std::string_view text) { return SurdParser(text).parse(); }

}  // namespace dioph
