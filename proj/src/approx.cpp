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

#include "dioph/approx.hpp"

#include <algorithm>

namespace dioph {

namespace {

void require_periodic(const NcfExpansion& e) {
  if (!e.is_periodic()) throw Error(Errc::kNoPeriod, "s-values need the exact tails of a periodic expansion");
}

Rational pow10_inv(unsigned long e) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, e);
  return Rational(1, scale);
}

// Exact alpha_k and d_k^+ for every k, plus the running alphabar_k and d_k^-.
class SeriesModel {
 public:
  SeriesModel(const DigitSeq& t, const NcfExpansion& e, std::size_t horizon)
      : t_(t), e_(e), walker_(e), horizon_(horizon) {
    require_periodic(e);
    if (t.is_periodic()) {
      aligned_ = align(e, t);
      build_periodic_dplus();
    }
  }

  // State at k (alphabar_k, d_k^-); call with k = 1, 2, ... in order.
  void advance() {
    const TailState& s = walker_.next();
    abar_ = QuadSurd(s.alphabar);
    dminus_ = abar_ * (QuadSurd(t_[s.k]) + dminus_);
  }

  std::size_t k() const { return walker_.state().k; }
  const QuadSurd& alphabar() const { return abar_; }
  const QuadSurd& dminus() const { return dminus_; }
  QuadSurd alpha(std::size_t k) const { return walker_.alpha(k); }

  // d_k^+ and its truncation bound.
  std::pair<QuadSurd, QuadSurd> dplus(std::size_t k) const {
    if (aligned_) {
      const std::size_t L = aligned_->offset;
      if (k < L) return {head_[k], 0};
      return {cycle_[(k - L) % aligned_->period], 0};
    }
    const std::size_t n = t_.size();
    const std::size_t last = horizon_ == 0 ? n : std::min(n, k + horizon_);
    if (last <= k) throw Error(Errc::kInsufficientDigits, "d^+ at k = " + std::to_string(k) + " needs digits past k");
    QuadSurd sum = 0, weight = 1;
    for (std::size_t j = k + 1; j <= last; ++j) {
      weight *= walker_.alpha(j - 1);
      sum += QuadSurd(t_[j]) * weight;
    }
    // The remainder is weight * d^+_last with |d^+_last| <= 1.
    return {sum, weight};
  }

  const std::optional<AlignedPeriodic>& aligned() const { return aligned_; }

 private:
  void build_periodic_dplus() {
    const AlignedPeriodic& al = *aligned_;
    const std::size_t L = al.offset, P = al.period;
    // d_L^+ = S + Pi d_L^+ over one period.
    QuadSurd S = 0, Pi = 1;
    for (std::size_t i = 1; i <= P; ++i) {
      Pi *= walker_.alpha(L + i - 1);
      S += QuadSurd(t_[L + i]) * Pi;
    }
    cycle_.assign(P, QuadSurd());
    cycle_[0] = S / (1 - Pi);
    // d_k^+ = alpha_k (t_{k+1} + d_{k+1}^+), walked backwards around the cycle.
    QuadSurd next = cycle_[0];
    for (std::size_t j = P; j-- > 1;) {
      cycle_[j] = walker_.alpha(L + j) * (QuadSurd(t_[L + j + 1]) + next);
      next = cycle_[j];
    }
    head_.assign(L, QuadSurd());
    next = cycle_[0];
    for (std::size_t k = L; k-- > 0;) {
      head_[k] = walker_.alpha(k) * (QuadSurd(t_[k + 1]) + next);
      next = head_[k];
    }
  }

  const DigitSeq& t_;
  const NcfExpansion& e_;
  TailWalker walker_;
  std::size_t horizon_;
  std::optional<AlignedPeriodic> aligned_;
  std::vector<QuadSurd> cycle_, head_;
  QuadSurd abar_ = 0, dminus_ = 0;
};

// Limits of alpha_k and alphabar_k along k = L + 1 + j, j = 0..P-1.
struct LimitTails {
  std::vector<QuadSurd> alpha;
  std::vector<QuadSurd> alphabar;
};

LimitTails limit_tails(const NcfExpansion& e, std::size_t L, std::size_t P) {
  const TailWalker walker(e);
  LimitTails out;
  for (std::size_t j = 0; j < P; ++j) out.alpha.push_back(walker.alpha(L + 1 + j));
  // alphabar at k = L + P is the purely periodic reversed word.
  std::vector<Digit> reversed;
  for (std::size_t j = P; j-- > 0;) reversed.push_back(e[L + 1 + j]);
  out.alphabar.assign(P, QuadSurd());
  out.alphabar[P - 1] = evaluate(NcfExpansion::periodic(reversed));
  QuadSurd prev = out.alphabar[P - 1];
  for (std::size_t j = 0; j + 1 < P; ++j) {
    out.alphabar[j] = 1 / (QuadSurd(e[L + 1 + j]) - prev);
    prev = out.alphabar[j];
  }
  return out;
}

}  // namespace

std::string_view branch_name(BoundBranch b) noexcept { return b == BoundBranch::kSeries ? "series" : "ends"; }

const QuadSurd& SValues::min() const {
  const std::array<const QuadSurd*, 4> all{&s1, &s2, &s3, &s4};
  return *all[static_cast<std::size_t>(argmin() - 1)];
}

int SValues::argmin() const {
  const std::array<const QuadSurd*, 4> all{&s1, &s2, &s3, &s4};
  int best = 0;
  for (int j = 1; j < 4; ++j) {
    if (compare(*all[static_cast<std::size_t>(j)], *all[static_cast<std::size_t>(best)]) < 0) best = j;
  }
  return best + 1;
}

SValues s_values_from(std::size_t k, const QuadSurd& alpha, const QuadSurd& alphabar, const QuadSurd& dminus,
                      const QuadSurd& dplus) {
  const QuadSurd w = 4 * (1 - alphabar * alpha);
  SValues s;
  s.k = k;
  s.s1 = (1 - alphabar + dminus) * (1 - alpha + dplus) / w;
  s.s2 = (1 + alphabar + dminus) * (1 + alpha - dplus) / w;
  s.s3 = (1 - alphabar - dminus) * (1 - alpha - dplus) / w;
  s.s4 = (1 + alphabar - dminus) * (1 + alpha + dplus) / w;
  s.dminus = dminus;
  s.dplus = dplus;
  s.alpha = alpha;
  s.alphabar = alphabar;
  return s;
}

DSeries d_series(const DigitSeq& t, const NcfExpansion& e, std::size_t k, std::size_t horizon) {
  if (k == 0) throw Error(Errc::kInvalidArgument, "d-series are defined for k >= 1");
  SeriesModel model(t, e, horizon);
  while (model.k() < k) model.advance();
  DSeries out;
  out.dminus = model.dminus();
  auto [dplus, err] = model.dplus(k);
  out.dplus = std::move(dplus);
  out.exact = err.is_zero();
  out.dplus_error = std::move(err);
  return out;
}

SValues s_values(const DigitSeq& t, const NcfExpansion& e, std::size_t k) {
  if (k == 0) throw Error(Errc::kInvalidArgument, "s-values are defined for k >= 1");
  SeriesModel model(t, e, 0);
  while (model.k() < k) model.advance();
  return s_values_from(k, model.alpha(k), model.alphabar(), model.dminus(), model.dplus(k).first);
}

MValueReport m_value(const DigitSeq& t, const NcfExpansion& e, const MValueOptions& options) {
  require_periodic(e);
  if (const ValidationResult v = validate(t, e); !v.ok()) throw Error(Errc::kInvalidDigits, v.reason);
  MValueReport report;
  SeriesModel model(t, e, 0);

  if (t.is_periodic()) {
    const AlignedPeriodic& al = *model.aligned();
    const QuadSurd gamma = gamma_of(t, e).value;
    if (gamma.is_zero() || is_lattice_point(gamma, e)) {
      throw Error(Errc::kLatticePoint, "digits " + t.to_string() + " give gamma = " + gamma.to_string() + " in Z + Z alpha");
    }
    const std::size_t L = al.offset, P = al.period;
    report.offset = L;
    report.period = P;
    report.exact = true;
    const LimitTails lim = limit_tails(e, L, P);
    // d_k^- limit cycle: iterate d -> abar_k (t_k + d) once around and solve.
    QuadSurd A = 0, B = 1;
    for (std::size_t j = 0; j < P; ++j) {
      const QuadSurd& abar = lim.alphabar[j];
      A = abar * (QuadSurd(al.t[L + j]) + A);
      B = abar * B;
    }
    QuadSurd dminus = A / (1 - B);  // limit at k = L + P, i.e. just before j = 0
    std::vector<std::size_t> ends_positions;
    for (std::size_t j = 0; j < P; ++j) {
      const std::size_t k = L + 1 + j;
      dminus = lim.alphabar[j] * (QuadSurd(al.t[L + j]) + dminus);
      report.limit.push_back(s_values_from(k, lim.alpha[j], lim.alphabar[j], dminus, model.dplus(k).first));
      if (al.t[L + j] == al.a[L + j]) ends_positions.push_back(j);
    }
    if (!ends_positions.empty()) {
      report.branch = BoundBranch::kEnds;
      bool first = true;
      for (std::size_t j : ends_positions) {
        const QuadSurd& abar = lim.alphabar[j];
        const QuadSurd bound = abar / (4 * (1 - abar * lim.alpha[j]));
        if (first || compare(bound, report.value) < 0) report.value = bound;
        first = false;
      }
    } else {
      report.value = report.limit.front().min();
      for (const SValues& s : report.limit) report.value = min(report.value, s.min());
    }
    for (std::size_t k = 1; k <= options.k_max; ++k) {
      model.advance();
      report.per_k.push_back(s_values_from(k, model.alpha(k), model.alphabar(), model.dminus(), model.dplus(k).first));
    }
    return report;
  }

  // Finite digits: stop where the d^+ truncation would exceed 1e-15.
  const std::size_t n = t.size();
  const QuadSurd tolerance(pow10_inv(15));
  std::size_t k_last = 0;
  {
    const TailWalker walker(e);
    QuadSurd tail = 1;  // alpha_k ... alpha_{n-1}
    for (std::size_t k = n; k-- > 1;) {
      tail *= walker.alpha(k);
      if (compare(tail, tolerance) < 0) {
        k_last = k;
        break;
      }
    }
  }
  k_last = std::min(k_last, options.k_max);
  if (k_last == 0) {
    throw Error(Errc::kInsufficientDigits, std::to_string(n) + " digits are too few to evaluate d^+ to 1e-15");
  }
  report.exact = false;
  for (std::size_t k = 1; k <= k_last; ++k) {
    model.advance();
    report.per_k.push_back(s_values_from(k, model.alpha(k), model.alphabar(), model.dminus(), model.dplus(k).first));
  }
  const std::size_t w = std::max<std::size_t>(1, std::min(options.window, k_last));
  auto window_min = [&](std::size_t begin, std::size_t end) {  // 1-based [begin, end]
    QuadSurd best = report.per_k[begin - 1].min();
    for (std::size_t k = begin + 1; k <= end; ++k) best = min(best, report.per_k[k - 1].min());
    return best;
  };
  report.last_window_min = window_min(k_last - w + 1, k_last);
  report.value = *report.last_window_min;
  if (k_last >= 2 * w) {
    report.previous_window_min = window_min(k_last - 2 * w + 1, k_last - w);
    const QuadSurd gap = abs(*report.last_window_min - *report.previous_window_min);
    report.stabilized = compare(gap, QuadSurd(pow10_inv(9))) <= 0;
  } else {
    report.stabilized = false;
  }
  return report;
}

bool CandidateSet::contains(const Integer& value) const {
  return std::find(n.begin(), n.end(), value) != n.end();
}

namespace {

CandidateSet make_candidates(std::size_t k, const Integer& Q, const Integer& q, const Integer& q_prev) {
  CandidateSet c;
  c.k = k;
  c.Q = Q;
  c.q = q;
  c.q_prev = q_prev;
  c.n = {Q, Integer(Q + q_prev), Integer(-(q - q_prev - Q)), Integer(-(q - Q))};
  return c;
}

}  // namespace

CandidateSet best_candidates(const DigitSeq& t, const NcfExpansion& e, std::size_t k) {
  if (k == 0) throw Error(Errc::kInvalidArgument, "candidates are defined for k >= 1");
  TailWalker walker(e);
  Integer Q = 0, q_prev = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    q_prev = walker.state().q;
    Q += coefficient(e[i], t[i]) * q_prev;
    walker.next();
  }
  return make_candidates(k, Q, walker.state().q, q_prev);
}

std::vector<CandidateSet> candidate_sets(const DigitSeq& t, const NcfExpansion& e, const Integer& n_max) {
  std::vector<CandidateSet> out;
  TailWalker walker(e);
  Integer Q = 0;
  for (std::size_t k = 1; t.has(k) && e.has(k); ++k) {
    const Integer q_prev = walker.state().q;
    if (q_prev > n_max) break;
    Q += coefficient(e[k], t[k]) * q_prev;
    walker.next();
    out.push_back(make_candidates(k, Q, walker.state().q, q_prev));
  }
  return out;
}

QuadSurd rho_upper(const NcfExpansion& e) {
  require_periodic(e);
  const std::size_t L = e.preperiod().size(), P = e.period().size();
  const LimitTails lim = limit_tails(e, L, P);
  QuadSurd best;
  for (std::size_t j = 0; j < P; ++j) {
    const QuadSurd& a = lim.alpha[j];
    const QuadSurd& b = lim.alphabar[j];
    const QuadSurd v = (1 - b) * (1 - a) / (4 * (1 - b * a));
    best = j == 0 ? v : min(best, v);
  }
  return best;
}

}  // namespace dioph
