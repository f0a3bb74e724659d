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

#include "dioph/oracle.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "dioph/digits.hpp"

namespace dioph {

namespace {

constexpr double kTwoPow128Inv = 0x1p-128;

Fixed128 fixed_from_integer(Integer v) {
  // v mod 2^128
  Integer mod = 1;
  mpz_mul_2exp(mod.get_mpz_t(), mod.get_mpz_t(), 128);
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  Fixed128 out = 0;
  const std::size_t limbs = mpz_size(v.get_mpz_t());
  static_assert(sizeof(mp_limb_t) == 8, "64-bit limbs expected");
  for (std::size_t i = std::min<std::size_t>(limbs, 2); i-- > 0;) {
    out = (out << 64) | static_cast<Fixed128>(mpz_getlimbn(v.get_mpz_t(), static_cast<mp_size_t>(i)));
  }
  return out;
}

Fixed128 distance_to_integer(Fixed128 x) {
  const Fixed128 other = static_cast<Fixed128>(0) - x;
  return std::min(x, other);
}

long double to_unit(Fixed128 d) { return static_cast<long double>(d) * static_cast<long double>(kTwoPow128Inv); }

constexpr long double kInf = std::numeric_limits<long double>::infinity();

struct LocalRecord {
  std::int64_t n;
  Fixed128 distance;
  long double value;
  long double prefix_min;  // min value over the window's part of [n_min, |n|]
};

struct WindowScan {
  // Per-side distance records relative to the start of the window, in
  // visiting order.
  std::vector<LocalRecord> records;
  std::array<Fixed128, 2> min_distance{~static_cast<Fixed128>(0), ~static_cast<Fixed128>(0)};
  // Smallest value with |n| >= n_min inside the window.
  long double window_min = kInf;
  std::int64_t window_min_n = 0;
};

WindowScan scan_window(Fixed128 A, Fixed128 G, std::int64_t lo, std::int64_t hi, std::int64_t n_min,
                       bool homogeneous) {
  WindowScan out;
  Fixed128 u = static_cast<Fixed128>(lo) * A - G;  // n alpha - gamma
  Fixed128 v = static_cast<Fixed128>(lo) * A + G;  // -(-n alpha - gamma)
  auto visit = [&](std::int64_t n, Fixed128 x) {
    const Fixed128 d = distance_to_integer(x);
    const long double value = static_cast<long double>(std::llabs(n)) * to_unit(d);
    if (std::llabs(n) >= n_min && value < out.window_min) {
      out.window_min = value;
      out.window_min_n = n;
    }
    Fixed128& side = out.min_distance[n < 0 ? 1 : 0];
    if (d < side) {
      side = d;
      out.records.push_back({n, d, value, out.window_min});
    }
  };
  for (std::int64_t m = lo; m <= hi; ++m) {
    visit(m, u);
    if (!homogeneous) visit(-m, v);
    u += A;
    v += A;
  }
  return out;
}

}  // namespace

TorusPoint TorusPoint::from_surd(const QuadSurd& x) {
  TorusPoint p;
  p.fraction = fixed_from_integer(x.floor_scaled(128));
  p.error = kTwoPow128Inv;
  p.exact = x;
  return p;
}

TorusPoint TorusPoint::from_double(double x) {
  if (!std::isfinite(x)) throw Error(Errc::kInvalidArgument, "non-finite torus coordinate");
  TorusPoint p;
  Rational exact(x);
  Integer scaled = exact.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 128);
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), exact.get_den_mpz_t());
  p.fraction = fixed_from_integer(scaled);
  p.error = std::max(std::abs(x), std::numeric_limits<double>::min()) * std::numeric_limits<double>::epsilon() / 2 +
            kTwoPow128Inv;
  return p;
}

TorusPoint TorusPoint::from_decimal(std::string_view text) {
  std::string s(text);
  std::size_t pos = 0;
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  const bool negative = pos < s.size() && s[pos] == '-';
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_dot = false;
  for (; pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])); ++pos) {
    const char c = s[pos];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_dot) ++frac_digits;
    } else {
      throw Error(Errc::kParseError, "cannot parse decimal '" + s + "'");
    }
  }
  if (digits.empty()) throw Error(Errc::kParseError, "cannot parse decimal '" + s + "'");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_digits);
  Integer num(digits, 10);
  if (negative) num = -num;
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 128);
  mpz_fdiv_q(num.get_mpz_t(), num.get_mpz_t(), scale.get_mpz_t());
  TorusPoint p;
  p.fraction = fixed_from_integer(num);
  p.error = 0.5 * std::pow(10.0, -static_cast<double>(frac_digits)) + kTwoPow128Inv;
  return p;
}

ScanResult scan(const TorusPoint& alpha, const TorusPoint& gamma, std::int64_t n_max, std::int64_t n_min,
                const ScanOptions& options) {
  if (n_min < 1 || n_max < n_min) {
    throw Error(Errc::kInvalidArgument,
                "scan needs 1 <= n_min <= n_max, got [" + std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
  }
  ScanResult result;
  result.n_min = n_min;
  result.n_max = n_max;
  const bool gamma_zero = gamma.fraction == 0 && (!gamma.exact || gamma.exact->is_integer());
  result.homogeneous = gamma_zero;
  if (!gamma_zero && alpha.exact && gamma.exact && !alpha.exact->is_rational()) {
    bool lattice = false;
    try {
      lattice = is_lattice_point(*gamma.exact, *alpha.exact);
    } catch (const Error& err) {
      if (err.code() != Errc::kMixedFields) throw;
    }
    if (lattice) throw Error(Errc::kLatticeGamma, "gamma " + gamma.exact->to_string() + " lies in Z + Z alpha");
  }
  const double n = static_cast<double>(n_max);
  result.value_error = n * (n * alpha.error + gamma.error);
  if (result.value_error > options.error_budget) {
    throw Error(Errc::kPrecisionBudgetExceeded, "input precision gives value errors up to " +
                                                    std::to_string(result.value_error) + " at n = " +
                                                    std::to_string(n_max));
  }

  unsigned windows = options.windows != 0 ? options.windows : std::max(1u, std::thread::hardware_concurrency());
  windows = static_cast<unsigned>(std::min<std::int64_t>(windows, n_max));
  std::vector<std::future<WindowScan>> parts;
  for (unsigned w = 0; w < windows; ++w) {
    const std::int64_t lo = 1 + n_max * w / windows;
    const std::int64_t hi = n_max * (w + 1) / windows;
    parts.push_back(std::async(windows == 1 ? std::launch::deferred : std::launch::async, scan_window,
                               alpha.fraction, gamma.fraction, lo, hi, n_min, result.homogeneous));
  }
  std::array<Fixed128, 2> best{~static_cast<Fixed128>(0), ~static_cast<Fixed128>(0)};
  long double estimate = kInf;
  for (auto& part : parts) {
    const WindowScan window = part.get();
    for (const LocalRecord& r : window.records) {
      Fixed128& side = best[r.n < 0 ? 1 : 0];
      if (r.distance < side) {
        side = r.distance;
        if (std::llabs(r.n) >= n_min) {
          result.records.push_back({r.n, static_cast<double>(r.value), static_cast<double>(std::min(estimate, r.prefix_min)),
                                    static_cast<double>(to_unit(r.distance))});
        }
      }
    }
    if (window.window_min < estimate) {
      estimate = window.window_min;
      result.estimate_n = window.window_min_n;
    }
  }
  result.estimate = static_cast<double>(estimate);
  return result;
}

std::int64_t default_n_min(const NcfExpansion& e) {
  const TailState s = tails(e, 3);
  const Integer floor = 1000;
  const Integer n = s.q > floor ? s.q : floor;
  if (!n.fits_slong_p()) throw Error(Errc::kOutOfRange, "q_3 does not fit in 64 bits");
  return n.get_si();
}

CertifyVerdict certify_records(const std::vector<ScanRecord>& records, const std::vector<CandidateSet>& candidates,
                               std::int64_t min_abs_n) {
  CertifyVerdict verdict;
  for (const int sign : {1, -1}) {
    std::vector<const ScanRecord*> side;
    for (const ScanRecord& r : records) {
      if ((r.n > 0 ? 1 : -1) == sign) side.push_back(&r);
    }
    // Interior records only: the first and last have a neighbour outside
    // the scanned range.
    for (std::size_t i = 1; i + 1 < side.size(); ++i) {
      const ScanRecord& r = *side[i];
      if (!(r.value < side[i - 1]->value && r.value < side[i + 1]->value)) continue;
      if (std::llabs(r.n) < min_abs_n) continue;
      ++verdict.checked;
      const Integer n(static_cast<long>(r.n));
      const bool found =
          std::any_of(candidates.begin(), candidates.end(), [&](const CandidateSet& c) { return c.contains(n); });
      if (!found) verdict.violations.push_back(r.n);
    }
  }
  std::sort(verdict.violations.begin(), verdict.violations.end(),
            [](std::int64_t a, std::int64_t b) { return std::llabs(a) != std::llabs(b) ? std::llabs(a) < std::llabs(b) : a > b; });
  verdict.ok = verdict.violations.empty();
  return verdict;
}

}  // namespace dioph
