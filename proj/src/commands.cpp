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

#include "dioph/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dioph/approx.hpp"
#include "dioph/bounds.hpp"
#include "dioph/digits.hpp"
#include "dioph/experiments.hpp"
#include "dioph/ncf.hpp"
#include "dioph/oracle.hpp"
#include "dioph/surd.hpp"
#include "json.hpp"

namespace dioph {

namespace {

using nlohmann::ordered_json;
using Json = ordered_json;

std::string fmt_double(double x, int digits = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

Json number_json(const QuadSurd& x) {
  Json j;
  j["surd"] = x.to_string();
  j["decimal"] = x.to_decimal(15);
  return j;
}

Json number_json(const Rational& x) { return number_json(QuadSurd(x)); }

Json config_json(const ExperimentConfig& c) {
  Json j;
  j["command"] = c.command;
  auto put = [&](const char* key, const std::string& value) {
    if (!value.empty()) j[key] = value;
  };
  put("input", c.input);
  put("expansion", c.expansion);
  put("period", c.period);
  put("digits", c.digits);
  put("alpha", c.alpha);
  put("gamma", c.gamma);
  put("gamma_digits", c.gamma_digits);
  put("theorem", c.theorem);
  if (!c.R.empty()) j["R"] = c.R;
  if (!c.r.empty()) j["r"] = c.r;
  if (!c.N.empty()) j["N"] = c.N;
  j["n_max"] = c.n_max;
  if (c.n_min) j["n_min"] = *c.n_min;
  j["k_max"] = c.k_max;
  j["terms"] = c.terms;
  j["count"] = c.count;
  j["seed"] = c.seed;
  j["precision"] = c.precision;
  if (c.tolerance) j["tolerance"] = *c.tolerance;
  j["format"] = std::string(format_name(c.format));
  return j;
}

// Output of one command before rendering.
struct Report {
  Json body;
  std::string text;
  std::string csv;
  bool passed = true;
};

bool looks_decimal(std::string_view s) {
  return s.find("sqrt") == std::string_view::npos && s.find('.') != std::string_view::npos;
}

// Keeps at most `precision` fractional digits of a decimal string.
std::string clip_decimal(const std::string& text, int precision, bool* clipped) {
  *clipped = false;
  const std::size_t dot = text.find('.');
  if (dot == std::string::npos) return text;
  std::size_t end = dot + 1;
  while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
  if (end - dot - 1 <= static_cast<std::size_t>(precision)) return text;
  *clipped = true;
  return text.substr(0, dot + 1 + static_cast<std::size_t>(precision)) + text.substr(end);
}

TorusPoint point_from_text(const std::string& text, int precision) {
  if (!looks_decimal(text)) return TorusPoint::from_surd(QuadSurd::parse(text));
  bool clipped = false;
  TorusPoint p = TorusPoint::from_decimal(clip_decimal(text, precision, &clipped));
  if (clipped) p.error = std::max(p.error, std::pow(10.0, -precision));
  return p;
}

std::vector<Digit> plain_list(const std::string& text, std::string_view what) {
  DigitSeq s = DigitSeq::parse(text);
  if (s.is_periodic()) throw Error(Errc::kParseError, std::string(what) + " must be a plain list");
  return s.preperiod();
}

// The expansion named by --expansion, --period or the positional input.
std::optional<NcfExpansion> expansion_of(const ExperimentConfig& c) {
  if (!c.period.empty()) {
    std::vector<Digit> per;
    for (Digit a : plain_list(c.period, "--period")) per.push_back(a);
    return NcfExpansion::periodic(per);
  }
  if (!c.expansion.empty()) return NcfExpansion::parse(c.expansion);
  return std::nullopt;
}

NcfExpansion require_expansion(const ExperimentConfig& c) {
  if (auto e = expansion_of(c)) return *e;
  if (!c.input.empty()) return NcfExpansion::parse(c.input);
  throw Error(Errc::kInvalidArgument, c.command + " needs --expansion or --period");
}

// A bare digit list given together with --period describes the digit period.
DigitSeq digits_for(const ExperimentConfig& c, const std::string& text) {
  DigitSeq t = DigitSeq::parse(text);
  if (!t.is_periodic() && !c.period.empty()) return DigitSeq::periodic(t.preperiod());
  return t;
}

Json svalues_json(const SValues& s) {
  Json j;
  j["k"] = s.k;
  j["s1"] = s.s1.to_decimal(15);
  j["s2"] = s.s2.to_decimal(15);
  j["s3"] = s.s3.to_decimal(15);
  j["s4"] = s.s4.to_decimal(15);
  j["dminus"] = s.dminus.to_decimal(15);
  j["dplus"] = s.dplus.to_decimal(15);
  return j;
}

// --- expand -----------------------------------------------------------------

Report cmd_expand(const ExperimentConfig& c) {
  if (c.input.empty()) throw Error(Errc::kInvalidArgument, "expand needs a value");
  Report rep;
  if (looks_decimal(c.input)) {
    bool clipped = false;
    const std::string text = clip_decimal(c.input, c.precision, &clipped);
    const DecimalExpansion d = expand_decimal(text, c.k_max);
    rep.body["expansion"] = d.expansion.to_string();
    rep.body["exact"] = false;
    rep.body["certain_terms"] = d.horizon;
    rep.body["precision_digits"] = d.precision_digits;
    rep.text = d.expansion.to_string();
  } else {
    const QuadSurd x = QuadSurd::parse(c.input);
    const NcfExpansion e = expand(x);
    rep.body["value"] = number_json(x);
    rep.body["expansion"] = e.to_string();
    rep.body["exact"] = true;
    rep.body["preperiod"] = e.preperiod();
    rep.body["period"] = e.period();
    if (e.is_periodic()) {
      rep.body["R"] = liminf_R(e);
      rep.body["r"] = limsup_r(e);
    }
    rep.text = e.to_string();
  }
  rep.csv = "expansion\n\"" + rep.text + "\"\n";
  return rep;
}

// --- eval -------------------------------------------------------------------

Report cmd_eval(const ExperimentConfig& c) {
  const NcfExpansion e = require_expansion(c);
  const QuadSurd v = e.is_periodic() ? evaluate(e) : QuadSurd(evaluate_finite(e.preperiod()));
  Report rep;
  rep.body["expansion"] = e.to_string();
  rep.body["value"] = number_json(v);
  if (e.is_periodic()) {
    rep.body["R"] = liminf_R(e);
    rep.body["r"] = limsup_r(e);
  }
  rep.text = v.to_string() + " ~ " + v.to_decimal(15);
  rep.csv = "surd,decimal\n" + v.to_string() + "," + v.to_decimal(15) + "\n";
  return rep;
}

// --- digits -----------------------------------------------------------------

Report cmd_digits(const ExperimentConfig& c) {
  const std::optional<NcfExpansion> maybe_e = expansion_of(c);
  if (!maybe_e) throw Error(Errc::kInvalidArgument, "digits needs --expansion or --period");
  const NcfExpansion& e = *maybe_e;
  Report rep;
  rep.body["expansion"] = e.to_string();
  const std::string gamma_text = !c.gamma.empty() ? c.gamma : c.input;
  if (!gamma_text.empty()) {
    const QuadSurd gamma = QuadSurd::parse(gamma_text);
    const DigitSeq t = digits_of(gamma, e, c.terms);
    rep.body["gamma"] = number_json(gamma);
    rep.body["lattice_point"] = is_lattice_point(gamma, e);
    rep.body["terms"] = c.terms;
    rep.body["digits"] = t.to_string();
    std::vector<Digit> coeffs;
    for (std::size_t i = 1; i <= t.size(); ++i) coeffs.push_back(coefficient(e[i], t[i]));
    rep.body["coefficients"] = coeffs;
    const DigitSeq periodic = digits_of_periodic(gamma, e, std::max<std::size_t>(c.terms, 256));
    if (periodic.is_periodic()) rep.body["periodic_digits"] = periodic.to_string();
    rep.text = t.to_string();
    rep.csv = "i,a,t,c\n";
    for (std::size_t i = 1; i <= t.size(); ++i) {
      rep.csv += std::to_string(i) + "," + std::to_string(e[i]) + "," + std::to_string(t[i]) + "," +
                 std::to_string(coeffs[i - 1]) + "\n";
    }
    return rep;
  }
  if (c.digits.empty()) throw Error(Errc::kInvalidArgument, "digits needs --gamma or --digits");
  const DigitSeq t = digits_for(c, c.digits);
  const ValidationResult v = validate(t, e);
  rep.body["digits"] = t.to_string();
  rep.body["validity"] = v.status == Validity::kValid ? "valid" : v.status == Validity::kValidSoFar ? "valid_so_far" : "invalid";
  if (!v.ok()) {
    rep.body["index"] = v.index;
    rep.body["reason"] = v.reason;
    rep.text = "invalid at " + std::to_string(v.index) + ": " + v.reason;
    rep.csv = "validity,index\ninvalid," + std::to_string(v.index) + "\n";
    rep.passed = false;
    return rep;
  }
  const GammaValue g = gamma_of(t, e, c.terms);
  rep.body["gamma"] = number_json(g.value);
  rep.body["exact"] = g.exact;
  if (!g.exact) rep.body["error_bound"] = number_json(g.error_bound);
  rep.text = g.value.to_string() + " ~ " + g.value.to_decimal(15);
  rep.csv = "surd,decimal,exact\n" + g.value.to_string() + "," + g.value.to_decimal(15) + "," + (g.exact ? "1" : "0") + "\n";
  return rep;
}

// --- mval -------------------------------------------------------------------

Report cmd_mval(const ExperimentConfig& c) {
  const NcfExpansion e = require_expansion(c);
  if (c.digits.empty()) throw Error(Errc::kInvalidArgument, "mval needs --digits");
  const DigitSeq t = digits_for(c, c.digits);
  MValueOptions opts;
  opts.k_max = c.k_max;
  const MValueReport m = m_value(t, e, opts);
  Report rep;
  rep.body["expansion"] = e.to_string();
  rep.body["digits"] = t.to_string();
  rep.body["M"] = number_json(m.value);
  rep.body["exact"] = m.exact;
  rep.body["bound_branch"] = std::string(branch_name(m.branch));
  if (m.exact) {
    rep.body["offset"] = m.offset;
    rep.body["period"] = m.period;
    Json limit = Json::array();
    for (const SValues& s : m.limit) limit.push_back(svalues_json(s));
    rep.body["limit"] = limit;
  } else {
    rep.body["stabilized"] = m.stabilized;
  }
  Json per_k = Json::array();
  rep.csv = "k,s1,s2,s3,s4,dminus,dplus\n";
  for (const SValues& s : m.per_k) {
    per_k.push_back(svalues_json(s));
    rep.csv += std::to_string(s.k) + "," + s.s1.to_decimal(15) + "," + s.s2.to_decimal(15) + "," + s.s3.to_decimal(15) +
               "," + s.s4.to_decimal(15) + "," + s.dminus.to_decimal(15) + "," + s.dplus.to_decimal(15) + "\n";
  }
  rep.body["per_k"] = per_k;
  rep.text = "M = " + m.value.to_string() + " ~ " + m.value.to_decimal(15) + " (" + std::string(branch_name(m.branch)) +
             (m.branch == BoundBranch::kEnds ? ", upper bound only" : "") + ")";
  return rep;
}

// --- bounds -----------------------------------------------------------------

Report cmd_bounds(const ExperimentConfig& c) {
  if (c.R.size() != 1) throw Error(Errc::kInvalidArgument, "bounds needs a single --R");
  std::optional<long> r;
  if (c.r.size() > 1) throw Error(Errc::kInvalidArgument, "bounds takes at most one --r");
  if (!c.r.empty()) r = c.r.front();
  const BoundReport b = bound_report(c.R.front(), r);
  Report rep;
  rep.body["R"] = b.R;
  if (b.c_odd) rep.body["c_odd"] = number_json(*b.c_odd);
  rep.body["even_bound"] = number_json(b.even_bound);
  rep.body["rho_lower"] = number_json(b.lower);
  std::ostringstream text;
  text << "R = " << b.R << "\n";
  if (b.c_odd) text << "c_odd = " << b.c_odd->get_str() << " ~ " << QuadSurd(*b.c_odd).to_decimal(15) << "\n";
  text << "even_bound = " << b.even_bound.get_str() << "\n";
  text << "rho_lower = " << b.lower.to_string() << " ~ " << b.lower.to_decimal(15) << "\n";
  rep.csv = "quantity,surd,decimal\n";
  if (b.c_odd) rep.csv += "c_odd," + b.c_odd->get_str() + "," + QuadSurd(*b.c_odd).to_decimal(15) + "\n";
  rep.csv += "even_bound," + b.even_bound.get_str() + "," + QuadSurd(b.even_bound).to_decimal(15) + "\n";
  rep.csv += "rho_lower," + b.lower.to_string() + "," + b.lower.to_decimal(15) + "\n";
  if (b.homog) {
    rep.body["r"] = *b.r;
    rep.body["homog"] = {{"lo", number_json(b.homog->lo)}, {"hi", number_json(b.homog->hi)}};
    text << "homog lo = " << b.homog->lo.to_decimal(15) << ", hi = " << b.homog->hi.to_decimal(15) << "\n";
    rep.csv += "homog_lo," + b.homog->lo.to_string() + "," + b.homog->lo.to_decimal(15) + "\n";
    rep.csv += "homog_hi," + b.homog->hi.to_string() + "," + b.homog->hi.to_decimal(15) + "\n";
  }
  rep.text = text.str();
  return rep;
}

// --- scan -------------------------------------------------------------------

Report cmd_scan(const ExperimentConfig& c) {
  std::optional<NcfExpansion> e = expansion_of(c);
  TorusPoint alpha;
  if (!c.alpha.empty()) {
    alpha = point_from_text(c.alpha, c.precision);
    if (!e && alpha.exact && !alpha.exact->is_rational()) e = expand(*alpha.exact);
  } else if (e) {
    if (!e->is_periodic()) throw Error(Errc::kNoPeriod, "scan needs a periodic expansion or an explicit --alpha");
    alpha = TorusPoint::from_surd(evaluate(*e));
  } else {
    throw Error(Errc::kInvalidArgument, "scan needs --alpha, --expansion or --period");
  }

  std::optional<DigitSeq> t;
  TorusPoint gamma = TorusPoint::from_surd(QuadSurd(0));
  if (!c.gamma_digits.empty()) {
    if (!e) throw Error(Errc::kNoPeriod, "--gamma-digits needs alpha as an exact quadratic irrational");
    t = digits_for(c, c.gamma_digits);
    gamma = TorusPoint::from_surd(gamma_of(*t, *e).value);
  } else if (!c.gamma.empty()) {
    gamma = point_from_text(c.gamma, c.precision);
  }

  const std::int64_t n_min = c.n_min ? *c.n_min : (e && e->is_periodic() ? default_n_min(*e) : 1000);
  ScanOptions opts;
  opts.windows = c.windows;
  const ScanResult s = scan(alpha, gamma, c.n_max, n_min, opts);

  Report rep;
  if (alpha.exact) rep.body["alpha"] = number_json(*alpha.exact);
  if (gamma.exact) rep.body["gamma"] = number_json(*gamma.exact);
  rep.body["homogeneous"] = s.homogeneous;
  rep.body["n_min"] = s.n_min;
  rep.body["n_max"] = s.n_max;
  rep.body["estimate"] = s.estimate;
  rep.body["estimate_n"] = s.estimate_n;
  rep.body["value_error"] = s.value_error;
  Json records = Json::array();
  rep.csv = "n,value\n";
  for (const ScanRecord& r : s.records) {
    records.push_back(
        {{"n", r.n}, {"value", r.value}, {"distance", r.distance}, {"running_min_after", r.running_min_after}});
    rep.csv += std::to_string(r.n) + "," + fmt_double(r.value, 17) + "\n";
  }
  rep.body["records"] = records;
  rep.text = "estimate = " + fmt_double(s.estimate) + " over " + std::to_string(s.n_min) + " <= |n| <= " +
             std::to_string(s.n_max) + " (" + std::to_string(s.records.size()) + " records)";

  if (t && e) {
    const AlignedPeriodic al = align(*e, *t);
    bool ends = false;
    for (std::size_t i = al.offset; i < al.a.size(); ++i) ends = ends || al.t[i] == al.a[i];
    if (!ends) {
      const std::vector<CandidateSet> cands = candidate_sets(*t, *e, Integer(static_cast<long>(c.n_max)));
      const Integer q3 = tails(*e, 3).q;
      // Certification needs the record runs from |n| = 1.
      const ScanResult full = n_min > 1 ? scan(alpha, gamma, c.n_max, 1, opts) : s;
      const CertifyVerdict v = certify_records(full.records, cands, q3.get_si());
      rep.body["certification"] = {{"ok", v.ok}, {"from_abs_n", q3.get_si()}, {"checked", v.checked},
                                   {"violations", v.violations}};
      rep.passed = v.ok;
      rep.text += v.ok ? "; records certified" : "; certification FAILED";
    }
  }
  return rep;
}

// --- verify -----------------------------------------------------------------

struct Row {
  std::string instance;
  std::string value;
  std::string target;
  std::string tolerance;
  bool pass = false;
};

std::vector<long> or_default(const std::vector<long>& v, std::vector<long> fallback) { return v.empty() ? fallback : v; }

std::vector<Row> verify_odd_limit(const ExperimentConfig& c) {
  std::vector<Row> rows;
  for (long R : or_default(c.R, {3, 5, 7})) {
    const QuadSurd target(c_of(R));
    std::optional<QuadSurd> previous_gap;
    for (long N : or_default(c.N, {10, 100, 1000})) {
      const Instance inst = odd_limit_instance(R, N);
      const MValueReport m = m_value(inst.t, inst.e, {.k_max = 0});
      const QuadSurd gap = abs(m.value - target);
      const Rational tol = c.tolerance ? Rational(*c.tolerance) : Rational(5, N);
      bool pass = m.branch == BoundBranch::kSeries && compare(gap, QuadSurd(tol)) <= 0;
      std::string tol_text = QuadSurd(tol).to_decimal(6);
      if (previous_gap) {
        pass = pass && compare_enclosed(gap, *previous_gap) < 0;
        tol_text += ", gap below previous N";
      }
      previous_gap = gap;
      rows.push_back({inst.label, m.value.to_decimal(15), target.to_decimal(15), tol_text, pass});
    }
  }
  return rows;
}

std::vector<Row> verify_odd_bound(const ExperimentConfig& c) {
  std::vector<Row> rows;
  const std::vector<long> Rs = or_default(c.R, {3, 5, 7, 9});
  std::mt19937_64 rng(c.seed);
  const Rational slack = c.tolerance ? Rational(*c.tolerance) : Rational(1, 1000000000);
  for (std::size_t i = 0; i < c.count; ++i) {
    const long R = Rs[i % Rs.size()];
    const Instance inst = random_instance(rng, R);
    const MValueReport m = m_value(inst.t, inst.e, {.k_max = 0});
    const Rational bound = c_of(R) + slack;
    rows.push_back({inst.label, m.value.to_decimal(15), QuadSurd(c_of(R)).to_decimal(15),
                    "<= target + " + QuadSurd(slack).to_decimal(3), compare(m.value, QuadSurd(bound)) <= 0});
  }
  return rows;
}

std::vector<Row> verify_even(const ExperimentConfig& c) {
  std::vector<Row> rows;
  for (long R : or_default(c.R, {4, 6})) {
    const QuadSurd target(even_bound(R));
    for (long N : or_default(c.N, {10, 100})) {
      const Instance inst = even_instance(R, N);
      const MValueReport m = m_value(inst.t, inst.e, {.k_max = 0});
      const Rational tol = c.tolerance ? Rational(*c.tolerance) : Rational(5, N);
      const QuadSurd gamma = (1 - evaluate(inst.e)) / 2;
      const DigitSeq t = digits_of(gamma, inst.e, c.terms);
      const bool zero = std::all_of(t.preperiod().begin(), t.preperiod().end(), [](Digit d) { return d == 0; });
      const bool pass = compare(abs(m.value - target), QuadSurd(tol)) <= 0 && zero;
      rows.push_back({inst.label, m.value.to_decimal(15), target.to_decimal(15),
                      QuadSurd(tol).to_decimal(6) + (zero ? ", digits all zero" : ", digits NOT zero"), pass});
    }
  }
  return rows;
}

std::vector<Row> verify_homog(const ExperimentConfig& c) {
  std::vector<Row> rows;
  const double tol = c.tolerance.value_or(1e-3);
  const std::int64_t n_max = c.n_max;
  for (long r : or_default(c.r, {3, 4, 5, 6, 7})) {
    const NcfExpansion e = NcfExpansion::periodic({r});
    const std::int64_t n_min = c.n_min.value_or(std::min<std::int64_t>(1000, n_max));
    const ScanResult s = scan(TorusPoint::from_surd(evaluate(e)), TorusPoint::from_surd(QuadSurd(0)), n_max, n_min,
                              {.windows = c.windows});
    const double target = 1 / std::sqrt(static_cast<double>(r * r - 4));
    rows.push_back({"alpha=" + e.to_string() + " gamma=0", fmt_double(s.estimate), fmt_double(target), fmt_double(tol),
                    std::abs(s.estimate - target) <= tol});
  }
  return rows;
}

std::vector<Row> verify_cutoffs(const ExperimentConfig& c) {
  const std::vector<long> Rs = or_default(c.R, {3, 9});
  const long r_max = c.r.empty() ? 20 : c.r.front();
  if (Rs.size() != 2) throw Error(Errc::kInvalidArgument, "cutoffs takes --R as a range min,max");
  const std::set<std::pair<long, long>> expected{{3, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {4, 4}, {4, 5}, {5, 5}};
  const auto found_list = exceptional_pairs(Rs[0], Rs[1], r_max);
  const std::set<std::pair<long, long>> found(found_list.begin(), found_list.end());
  std::set<std::pair<long, long>> all = expected;
  all.insert(found.begin(), found.end());
  std::vector<Row> rows;
  for (const auto& [R, r] : all) {
    const bool in_found = found.count({R, r}) != 0;
    const bool in_expected = expected.count({R, r}) != 0 && R >= Rs[0] && R <= Rs[1] && r <= r_max;
    rows.push_back({"R=" + std::to_string(R) + " r=" + std::to_string(r), in_found ? "exceptional" : "not exceptional",
                    in_expected ? "exceptional" : "not exceptional", "exact", in_found == in_expected});
  }
  return rows;
}

Report cmd_verify(const ExperimentConfig& c) {
  static const std::map<std::string, std::function<std::vector<Row>(const ExperimentConfig&)>> kinds{
      {"odd-limit", verify_odd_limit}, {"odd-bound", verify_odd_bound}, {"even", verify_even},
      {"homog", verify_homog},         {"cutoffs", verify_cutoffs}};
  const std::string which = !c.theorem.empty() ? c.theorem : c.input;
  auto it = kinds.find(which);
  if (it == kinds.end()) {
    throw Error(Errc::kInvalidArgument,
                "unknown verification '" + which + "'; expected odd-limit, odd-bound, even, homog or cutoffs");
  }
  const std::vector<Row> rows = it->second(c);
  Report rep;
  Json table = Json::array();
  std::ostringstream text;
  rep.csv = "instance,value,target,tolerance,verdict\n";
  std::size_t passed = 0;
  for (const Row& r : rows) {
    table.push_back({{"instance", r.instance}, {"value", r.value}, {"target", r.target}, {"tolerance", r.tolerance},
                     {"verdict", r.pass ? "pass" : "fail"}});
    text << (r.pass ? "PASS  " : "FAIL  ") << r.instance << "  value=" << r.value << "  target=" << r.target
         << "  tol=" << r.tolerance << "\n";
    rep.csv += "\"" + r.instance + "\"," + r.value + "," + r.target + ",\"" + r.tolerance + "\"," +
               (r.pass ? "pass" : "fail") + "\n";
    passed += r.pass ? 1 : 0;
  }
  rep.passed = passed == rows.size();
  rep.body["check"] = which;
  rep.body["rows"] = table;
  rep.body["passed"] = passed;
  rep.body["total"] = rows.size();
  rep.body["overall"] = rep.passed ? "pass" : "fail";
  text << (rep.passed ? "overall: pass" : "overall: fail") << " (" << passed << "/" << rows.size() << ")\n";
  rep.text = text.str();
  return rep;
}

std::string render(const ExperimentConfig& c, Report& rep) {
  switch (c.format) {
    case Format::kText: {
      std::string out = rep.text;
      if (out.empty() || out.back() != '\n') out += '\n';
      return out;
    }
    case Format::kCsv:
      return rep.csv;
    case Format::kJson:
      break;
  }
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["config"] = config_json(c);
  for (auto& [key, value] : rep.body.items()) out[key] = value;
  return out.dump(2) + "\n";
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  if (text == "text") return Format::kText;
  throw Error(Errc::kParseError, "unknown format '" + std::string(text) + "'");
}

std::string_view format_name(Format f) noexcept {
  switch (f) {
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
    case Format::kText: return "text";
  }
  return "json";
}

CommandOutput run_command(const ExperimentConfig& config) {
  static const std::map<std::string, std::function<Report(const ExperimentConfig&)>> commands{
      {"expand", cmd_expand}, {"eval", cmd_eval}, {"digits", cmd_digits}, {"mval", cmd_mval},
      {"bounds", cmd_bounds}, {"scan", cmd_scan}, {"verify", cmd_verify}};
  std::string code;
  std::string message;
  try {
    auto it = commands.find(config.command);
    if (it == commands.end()) throw Error(Errc::kInvalidArgument, "unknown command '" + config.command + "'");
    if (config.precision < 1 || config.n_max < 1 || config.terms < 1 || config.count < 1) {
      throw Error(Errc::kInvalidArgument, "numeric parameters must be positive");
    }
    Report rep = it->second(config);
    return {rep.passed ? 0 : 1, render(config, rep)};
  } catch (const Error& err) {
    code = std::string(errc_name(err.code()));
    message = err.what();
  } catch (const std::exception& err) {
    code = "Internal";
    message = err.what();
  }
  if (config.format == Format::kText) return {2, "error: " + code + ": " + message + "\n"};
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["config"] = config_json(config);
  out["error"] = {{"code", code}, {"message", message}};
  return {2, out.dump(2) + "\n"};
}

}  // namespace dioph
