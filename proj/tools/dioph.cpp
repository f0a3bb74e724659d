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

// dioph: negative continued fractions, alpha-expansions and inhomogeneous
// approximation constants from the command line.
//
//   dioph expand "(3-1*sqrt(5))/2"
//   dioph mval --period 3,300 --digits -1,100
//   dioph bounds --R 5 --r 9
//   dioph scan --alpha "(3-1*sqrt(5))/2" --gamma-digits "(-1,1)*" --nmax 1e6
//   dioph verify odd-limit --R 3 --N 10,100,1000

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dioph/commands.hpp"

namespace {

// Accepts integers written as 1000000 or 1e6.
std::int64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size() || !(v >= 1) || v > 9e15 || v != std::floor(v)) {
    throw CLI::ValidationError("--nmax", "expected a positive integer, got '" + text + "'");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negative continued fractions and inhomogeneous approximation constants"};
  app.require_subcommand(1);

  dioph::ExperimentConfig config;
  std::string format = "json";
  std::string out_path;
  std::string n_max_text;
  std::string n_min_text;
  double tolerance = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out_path, "Write the report to FILE instead of stdout");
    sub->add_option("--precision", config.precision, "Decimal digits kept from decimal inputs")->check(CLI::PositiveNumber);
  };

  CLI::App* expand = app.add_subcommand("expand", "Negative continued fraction of a surd or decimal");
  expand->add_option("value", config.input, "Quadratic surd like (3-1*sqrt(5))/2, or a decimal")->required();
  expand->add_option("--kmax", config.k_max, "Most terms produced from a decimal input");
  common(expand);

  CLI::App* eval = app.add_subcommand("eval", "Value of an expansion");
  eval->add_option("value", config.input, "Expansion like \"[0; 3, (2,4)*]\"");
  eval->add_option("--expansion", config.expansion, "Expansion like \"[0; 3, (2,4)*]\"");
  eval->add_option("--period", config.period, "Purely periodic expansion given by its period");
  common(eval);

  CLI::App* digits = app.add_subcommand("digits", "alpha-expansion digits of gamma, or gamma from digits");
  digits->add_option("--expansion", config.expansion, "Expansion of alpha");
  digits->add_option("--period", config.period, "Purely periodic expansion of alpha given by its period");
  digits->add_option("--gamma", config.gamma, "gamma as a surd in (0, 1)");
  digits->add_option("--digits", config.digits, "Digit sequence like \"(-1,100)*\"");
  digits->add_option("--terms", config.terms, "Number of digits to extract");
  common(digits);

  CLI::App* mval = app.add_subcommand("mval", "M(alpha, gamma) from expansion and digits");
  mval->add_option("--expansion", config.expansion, "Expansion of alpha");
  mval->add_option("--period", config.period, "Purely periodic expansion of alpha given by its period");
  mval->add_option("--digits", config.digits, "Digits of gamma; a bare list with --period is a period")->required();
  mval->add_option("--kmax", config.k_max, "Length of the per-k trace");
  common(mval);

  CLI::App* bounds = app.add_subcommand("bounds", "Bound constants for a given R (and r)");
  bounds->add_option("--R", config.R, "liminf of the partial quotients")->required()->expected(1);
  bounds->add_option("--r", config.r, "limsup of the partial quotients")->expected(1);
  common(bounds);

  CLI::App* scan = app.add_subcommand("scan", "Brute-force records of |n| ||n alpha - gamma||");
  scan->add_option("--alpha", config.alpha, "alpha as a surd or decimal");
  scan->add_option("--expansion", config.expansion, "Expansion of alpha");
  scan->add_option("--period", config.period, "Purely periodic expansion of alpha given by its period");
  scan->add_option("--gamma", config.gamma, "gamma as a surd or decimal (default 0)");
  scan->add_option("--gamma-digits", config.gamma_digits, "gamma through its alpha-expansion digits");
  scan->add_option("--nmax", n_max_text, "Largest |n| scanned (default 1e6)");
  scan->add_option("--nmin", n_min_text, "Smallest |n| scanned (default max(1000, q_3))");
  scan->add_option("--windows", config.windows, "Parallel windows (default: one per hardware thread)");
  common(scan);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification experiment and print a pass/fail table");
  verify->add_option("check", config.theorem, "odd-limit, odd-bound, even, homog or cutoffs")
      ->required()
      ->check(CLI::IsMember({"odd-limit", "odd-bound", "even", "homog", "cutoffs"}));
  verify->add_option("--R", config.R, "Values of R (cutoffs: min,max)")->delimiter(',');
  verify->add_option("--r", config.r, "Values of r (cutoffs: largest r)")->delimiter(',');
  verify->add_option("--N", config.N, "Values of N")->delimiter(',');
  verify->add_option("--nmax", n_max_text, "Largest |n| for scans (default 1e5)");
  verify->add_option("--nmin", n_min_text, "Smallest |n| for scans");
  verify->add_option("--count", config.count, "Random instances for odd-bound");
  verify->add_option("--seed", config.seed, "Random seed for odd-bound");
  verify->add_option("--terms", config.terms, "Digits extracted by the even check");
  verify->add_option("--tolerance", tolerance, "Override the default tolerance");
  verify->add_option("--windows", config.windows, "Parallel windows for scans");
  common(verify);

  try {
    app.parse(argc, argv);
    if (!n_max_text.empty()) {
      config.n_max = parse_count(n_max_text);
    } else if (verify->parsed()) {
      config.n_max = 100000;
    }
    if (!n_min_text.empty()) config.n_min = parse_count(n_min_text);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  for (CLI::App* sub : app.get_subcommands()) config.command = sub->get_name();
  config.format = dioph::parse_format(format);
  if (verify->count("--tolerance") != 0) config.tolerance = tolerance;

  const dioph::CommandOutput result = dioph::run_command(config);
  if (out_path.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << result.text;
  }
  return result.exit_code;
}
