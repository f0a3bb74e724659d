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

#ifndef DIOPH_ERROR_HPP
#define DIOPH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dioph {

enum class Errc {
  kParseError,
  kInvalidArgument,
  // surd
  kNonSquareFreeD,
  kZeroDenominator,
  kMixedFields,
  kDivideByZero,
  // ncf
  kRationalInput,
  kOutOfRange,
  kNoPeriod,
  kInsufficientDigits,
  kInvalidExpansion,
  // digits
  kLengthMismatch,
  kInvalidDigits,
  kLatticePoint,
  kPrecisionExhausted,
  // bounds
  kEvenR,
  kRTooSmall,
  kRBelowR,
  // oracle
  kPrecisionBudgetExceeded,
  kLatticeGamma,
};

std::string_view errc_name(Errc code) noexcept;

// Every library failure is reported through this type; `code()` is what the
// CLI serializes into its structured error object.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dioph

#endif  // DIOPH_ERROR_HPP
