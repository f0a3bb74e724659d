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

#include "dioph/digits.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "sequence_text.hpp"

namespace dioph {

namespace {

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

// unit(i) = D_{i-1}, the weight of the i-th digit; unit(0) = D_{-1} = 1.
class Units {
 public:
  explicit Units(const NcfExpansion& e) : walker_(e) { units_.push_back(1); }

  QuadSurd operator()(std::size_t i) {
    while (units_.size() <= i) {
      const std::size_t k = units_.size() - 1;  // next unit is D_k
      units_.push_back(units_.back() * walker_.alpha(k));
    }
    return units_[i];
  }
  const TailWalker& walker() const { return walker_; }

 private:
  TailWalker walker_;
  std::vector<QuadSurd> units_;
};

void require_periodic(const NcfExpansion& e, const char* what) {
  if (!e.is_periodic()) {
    throw Error(Errc::kNoPeriod, std::string(what) + " needs the exact tails of a periodic expansion, got " + e.to_string());
  }
}

ValidationResult invalid(std::size_t i, std::string why) {
  return ValidationResult{Validity::kInvalid, i, std::move(why)};
}

// Range and parity of t_i against a_i.
std::optional<ValidationResult> check_digit(std::size_t i, Digit a, Digit t) {
  if (t < -(a - 2) || t > a) {
    return invalid(i, "t_" + std::to_string(i) + " = " + std::to_string(t) + " outside [" + std::to_string(-(a - 2)) +
                          ", " + std::to_string(a) + "]");
  }
  if (((t - a) % 2) != 0) {
    return invalid(i, "t_" + std::to_string(i) + " = " + std::to_string(t) + " has the wrong parity for a_" +
                          std::to_string(i) + " = " + std::to_string(a));
  }
  return std::nullopt;
}

// Scans for t_i = a_i, (a_j - 2)*, t_m = a_m. Returns the offending start or
// 0; `armed_at` reports an unterminated run still open at the end.
std::size_t find_closed_block(std::size_t n, const auto& a, const auto& t, std::size_t& armed_at) {
  armed_at = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Digit ai = a(i), ti = t(i);
    if (armed_at != 0) {
      if (ti == ai) return armed_at;
      if (ti != ai - 2) armed_at = 0;
    }
    if (armed_at == 0 && ti == ai) armed_at = i;
  }
  return 0;
}

}  // namespace

DigitSeq::DigitSeq(std::vector<Digit> preperiod, std::vector<Digit> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) return;
  period_.resize(primitive_length(period_));
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    preperiod_.pop_back();
  }
}

DigitSeq DigitSeq::parse(std::string_view text) {
  std::string_view body = detail::trim(text);
  if (!body.empty() && body.front() == 't') {
    body = detail::trim(body.substr(1));
    if (body.empty() || body.front() != '=') throw Error(Errc::kParseError, "expected 't =' in '" + std::string(text) + "'");
    body.remove_prefix(1);
  }
  auto seq = detail::parse_sequence(body, "digit sequence");
  return DigitSeq(std::move(seq.preperiod), std::move(seq.period));
}

Digit DigitSeq::operator[](std::size_t i) const {
  if (i == 0) throw Error(Errc::kInvalidArgument, "digits are indexed from 1");
  if (i <= preperiod_.size()) return preperiod_[i - 1];
  if (period_.empty()) {
    throw Error(Errc::kInsufficientDigits,
                "t_" + std::to_string(i) + " is beyond the " + std::to_string(preperiod_.size()) + " known digits");
  }
  return period_[(i - 1 - preperiod_.size()) % period_.size()];
}

std::string DigitSeq::to_string() const { return detail::format_sequence(preperiod_, period_); }

DigitSeq DigitSeq::negated() const {
  auto neg = [](std::vector<Digit> v) {
    for (Digit& x : v) x = -x;
    return v;
  };
  return DigitSeq(neg(preperiod_), neg(period_));
}

AlignedPeriodic align(const NcfExpansion& e, const DigitSeq& t) {
  if (!e.is_periodic() || !t.is_periodic()) throw Error(Errc::kNoPeriod, "alignment needs periodic expansion and digits");
  AlignedPeriodic out;
  out.offset = std::max(e.preperiod().size(), t.preperiod().size());
  out.period = std::lcm(e.period().size(), t.period().size());
  for (std::size_t i = 1; i <= out.offset + out.period; ++i) {
    out.a.push_back(e[i]);
    out.t.push_back(t[i]);
  }
  return out;
}

ValidationResult validate(const DigitSeq& t, const NcfExpansion& e) {
  if (t.is_periodic()) {
    if (!e.is_periodic()) throw Error(Errc::kLengthMismatch, "periodic digits over a finite expansion");
    const AlignedPeriodic al = align(e, t);
    const std::size_t n = al.offset + al.period;
    for (std::size_t i = 1; i <= n; ++i) {
      if (auto bad = check_digit(i, al.a[i - 1], al.t[i - 1])) return *bad;
    }
    auto a_at = [&](std::size_t i) { return e[i]; };
    auto t_at = [&](std::size_t i) { return t[i]; };
    std::size_t armed = 0;
    if (const std::size_t start = find_closed_block(al.offset + 2 * al.period, a_at, t_at, armed)) {
      return invalid(start, "block t_i = a_i, a_j - 2, ..., t_m = a_m starting at i = " + std::to_string(start));
    }
    bool tail_all_low = true;
    for (std::size_t j = al.offset; j < al.a.size(); ++j) tail_all_low = tail_all_low && al.t[j] == al.a[j] - 2;
    if (tail_all_low) {
      for (std::size_t i = al.offset; i >= 1; --i) {
        if (al.t[i - 1] == al.a[i - 1] - 2) continue;
        if (al.t[i - 1] == al.a[i - 1]) {
          return invalid(i, "t_" + std::to_string(i) + " = a_" + std::to_string(i) + " followed by t_j = a_j - 2 for all j");
        }
        break;
      }
    }
    return {};
  }
  const std::size_t n = t.size();
  if (n > 0 && !e.has(n)) {
    throw Error(Errc::kLengthMismatch, std::to_string(n) + " digits over an expansion with fewer partial quotients");
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (auto bad = check_digit(i, e[i], t[i])) return *bad;
  }
  auto a_at = [&](std::size_t i) { return e[i]; };
  auto t_at = [&](std::size_t i) { return t[i]; };
  std::size_t armed = 0;
  if (const std::size_t start = find_closed_block(n, a_at, t_at, armed)) {
    return invalid(start, "block t_i = a_i, a_j - 2, ..., t_m = a_m starting at i = " + std::to_string(start));
  }
  if (armed != 0) {
    return ValidationResult{Validity::kValidSoFar, armed,
                            "t_" + std::to_string(armed) + " = a_" + std::to_string(armed) +
                                " is followed only by t_j = a_j - 2 up to the last listed digit"};
  }
  return {};
}

QuadSurd weighted_tail_sum(const NcfExpansion& e, std::size_t n, Digit (*weight)(Digit a)) {
  require_periodic(e, "weighted_tail_sum");
  Units unit(e);
  const std::size_t pre = e.preperiod().size(), per = e.period().size();
  const std::size_t start = std::max(n, pre);
  QuadSurd direct = 0;
  for (std::size_t i = n + 1; i <= start; ++i) direct += QuadSurd(weight(e[i])) * unit(i);
  QuadSurd block = 0;
  for (std::size_t i = start + 1; i <= start + per; ++i) block += QuadSurd(weight(e[i])) * unit(i);
  // unit(i + per) = unit(i) * ratio for every i > start.
  const QuadSurd ratio = unit(start + per) / unit(start);
  return direct + block / (1 - ratio);
}

GammaValue gamma_of(const DigitSeq& t, const NcfExpansion& e, std::size_t terms) {
  require_periodic(e, "gamma_of");
  if (const ValidationResult v = validate(t, e); !v.ok()) throw Error(Errc::kInvalidDigits, v.reason);
  Units unit(e);
  GammaValue out;
  if (t.is_periodic()) {
    const AlignedPeriodic al = align(e, t);
    QuadSurd head = 0, block = 0;
    for (std::size_t i = 1; i <= al.offset; ++i) head += QuadSurd(coefficient(al.a[i - 1], al.t[i - 1])) * unit(i);
    for (std::size_t i = al.offset + 1; i <= al.offset + al.period; ++i) {
      block += QuadSurd(coefficient(al.a[i - 1], al.t[i - 1])) * unit(i);
    }
    const QuadSurd ratio = unit(al.offset + al.period + 1) / unit(al.offset + 1);
    out.value = head + block / (1 - ratio);
    return out;
  }
  const std::size_t n = terms == 0 ? t.size() : std::min(terms, t.size());
  for (std::size_t i = 1; i <= n; ++i) out.value += QuadSurd(coefficient(e[i], t[i])) * unit(i);
  out.error_bound = weighted_tail_sum(e, n, [](Digit a) { return a - 1; });
  out.exact = false;
  return out;
}

bool is_lattice_point(const QuadSurd& gamma, const QuadSurd& alpha) {
  if (alpha.is_rational()) throw Error(Errc::kInvalidArgument, "lattice test needs an irrational alpha");
  if (gamma.is_rational()) return gamma.is_integer();
  if (gamma.d() != alpha.d()) {
    throw Error(Errc::kMixedFields, "gamma " + gamma.to_string() + " and alpha " + alpha.to_string() + " lie in different fields");
  }
  // gamma = m + n alpha forces n = (q_g / r_g) / (q_a / r_a).
  Rational n(gamma.q() * alpha.r(), gamma.r() * alpha.q());
  n.canonicalize();
  if (n.get_den() != 1) return false;
  const QuadSurd m = gamma - QuadSurd(n) * alpha;
  return m.is_integer();
}

bool is_lattice_point(const QuadSurd& gamma, const NcfExpansion& e) { return is_lattice_point(gamma, evaluate(e)); }

namespace {

// Greedy coefficients c_1..c_n of gamma; stops early only when the remainder
// reaches zero.
std::vector<Digit> greedy_coefficients(const QuadSurd& gamma, const NcfExpansion& e, const TailWalker& walker,
                                       std::size_t n) {
  std::vector<Digit> c;
  // z = remainder / D_{i-1} before choosing c_i.
  QuadSurd z = gamma / walker.alpha(0);
  for (std::size_t i = 1; i <= n; ++i) {
    const Digit a = e[i];
    const Integer f = z.floor();
    const Digit ci = f >= a - 1 ? a - 1 : f.get_si();
    c.push_back(ci);
    z = (z - QuadSurd(ci)) / walker.alpha(i);
  }
  return c;
}

std::vector<Digit> to_digits(const NcfExpansion& e, const std::vector<Digit>& c) {
  std::vector<Digit> t(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) t[i] = digit_from_coefficient(e[i + 1], c[i]);
  return t;
}

}  // namespace

DigitSeq digits_of(const QuadSurd& gamma, const NcfExpansion& e, std::size_t n_terms, const Rational& uncertainty) {
  require_periodic(e, "digits_of");
  const QuadSurd u(uncertainty);
  const QuadSurd lo = gamma - u, hi = gamma + u;
  if (lo.sign() <= 0 || compare(hi, 1) >= 0) throw Error(Errc::kOutOfRange, "gamma " + gamma.to_string() + " is not inside (0,1)");
  const TailWalker walker(e);
  std::vector<Digit> c = greedy_coefficients(gamma, e, walker, n_terms);
  if (uncertainty != 0) {
    const auto c_lo = greedy_coefficients(lo, e, walker, n_terms);
    const auto c_hi = greedy_coefficients(hi, e, walker, n_terms);
    std::size_t certain = 0;
    while (certain < n_terms && c_lo[certain] == c[certain] && c_hi[certain] == c[certain]) ++certain;
    if (certain < n_terms) {
      throw Error(Errc::kPrecisionExhausted, "input uncertainty pins only " + std::to_string(certain) + " of " +
                                                  std::to_string(n_terms) + " requested digits");
    }
  }
  DigitSeq out = canonicalize(DigitSeq::finite(to_digits(e, c)), e);
  // Certify: 0 <= gamma - partial <= sum_{i>n} (a_i - 1) D_{i-1}.
  const GammaValue partial = gamma_of(out, e, n_terms);
  const QuadSurd gap = gamma - partial.value;
  if (compare(abs(gap), partial.error_bound + u) > 0) {
    throw Error(Errc::kPrecisionExhausted, "digit reconstruction of " + gamma.to_string() + " failed its tail bound");
  }
  return out;
}

DigitSeq digits_of_periodic(const QuadSurd& gamma, const NcfExpansion& e, std::size_t max_terms) {
  require_periodic(e, "digits_of_periodic");
  if (gamma.sign() <= 0 || compare(gamma, 1) >= 0) throw Error(Errc::kOutOfRange, "gamma " + gamma.to_string() + " is not inside (0,1)");
  const TailWalker walker(e);
  const std::size_t pre = e.preperiod().size(), per = e.period().size();
  // Once i > pre the future of the greedy walk depends only on z and the
  // phase of i in the period.
  std::vector<std::unordered_map<QuadSurd, std::size_t, QuadSurdHash>> seen(per);
  std::vector<Digit> c;
  QuadSurd z = gamma / walker.alpha(0);
  for (std::size_t i = 1; i <= max_terms; ++i) {
    if (i > pre) {
      const auto [it, inserted] = seen[(i - 1 - pre) % per].emplace(z, i);
      if (!inserted) {
        const std::vector<Digit> t = to_digits(e, c);
        const auto start = t.begin() + static_cast<std::ptrdiff_t>(it->second - 1);
        return DigitSeq(std::vector<Digit>(t.begin(), start), std::vector<Digit>(start, t.end()));
      }
    }
    const Digit a = e[i];
    const Integer f = z.floor();
    const Digit ci = f >= a - 1 ? a - 1 : f.get_si();
    c.push_back(ci);
    z = (z - QuadSurd(ci)) / walker.alpha(i);
  }
  return DigitSeq::finite(to_digits(e, c));
}

DigitSeq canonicalize(const DigitSeq& t, const NcfExpansion& e) {
  if (t.is_periodic()) throw Error(Errc::kInvalidArgument, "canonicalize works on finite digit sequences");
  std::vector<Digit> c;
  for (std::size_t i = 1; i <= t.size(); ++i) {
    const Digit a = e[i], ti = t[i];
    if (((ti - a) % 2) != 0 || ti < -(a - 2)) {
      throw Error(Errc::kInvalidDigits, "t_" + std::to_string(i) + " = " + std::to_string(ti) + " cannot be canonicalized");
    }
    c.push_back(coefficient(a, ti));
  }
  // c is 0-based: c[i-1] multiplies D_{i-1}. Both rewrites below use
  // a_i D_{i-1} = D_{i-2} + D_i.
  auto carry_into = [&](std::size_t i) {  // add one unit at 1-based position i
    if (i == 0) throw Error(Errc::kOutOfRange, "digits sum to at least 1");
    if (i > c.size()) c.resize(i, 0);
    ++c[i - 1];
  };
  for (std::size_t guard = 0; guard < 64 * (c.size() + 4); ++guard) {
    bool changed = false;
    for (std::size_t i = 1; i <= c.size() && !changed; ++i) {
      const Digit a = e[i];
      if (c[i - 1] > a - 1) {
        c[i - 1] -= a;
        carry_into(i - 1);
        carry_into(i + 1);
        changed = true;
        break;
      }
      if (c[i - 1] != a - 1) continue;
      std::size_t m = i + 1;
      while (m <= c.size() && c[m - 1] == e[m] - 2) ++m;
      if (m <= c.size() && c[m - 1] == e[m] - 1) {
        // (a_i - 1) D_{i-1} + sum (a_j - 2) D_{j-1} + (a_m - 1) D_{m-1} = D_{i-2} + D_m
        std::fill(c.begin() + static_cast<std::ptrdiff_t>(i - 1), c.begin() + static_cast<std::ptrdiff_t>(m), 0);
        carry_into(i - 1);
        carry_into(m + 1);
        changed = true;
      }
    }
    if (!changed) {
      while (c.size() > t.size() && c.back() == 0) c.pop_back();
      return DigitSeq::finite(to_digits(e, c));
    }
  }
  throw Error(Errc::kInvalidDigits, "canonicalization did not settle");
}

}  // namespace dioph
