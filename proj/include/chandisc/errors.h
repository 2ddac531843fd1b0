// Copyright 2026 The chandisc Authors
//
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

#ifndef CHANDISC_ERRORS_H
#define CHANDISC_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chandisc {

enum class ErrorCode {
  kNonSquare,
  kNonHermitian,
  kDimensionMismatch,
  kCompletenessViolation,
  kInvalidProbabilityVector,
  kInvalidState,
  kInvalidPovm,
  kFamilyMismatch,
  kNotOrthogonal,
  kNotUnitary,
  kUnsupportedDimension,
  kInvalidArgument,
  kOptimizerFailure,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline Error dimension_mismatch(size_t expected, size_t actual) {
  return Error(ErrorCode::kDimensionMismatch,
               "dimension mismatch: " + std::to_string(expected) + " vs " + std::to_string(actual));
}

/// Numerical thresholds in force across the library. Tests and the CLI read
/// them from here rather than hard-coding their own copies.
struct Tolerances {
  double hermiticity = 1e-9;
  double reconstruction = 1e-10;
  double optimizer = 1e-9;
  double completeness = 1e-9;
  double probability_sum = 1e-12;
  double state_trace = 1e-9;
  double eigenvalue_floor = -1e-9;
  double unitarity = 1e-9;
  double orthogonality = 1e-8;
  double entanglement_gap = 1e-7;
  double svd_clamp = 1e-12;
  double jacobi_relative = 1e-14;
};

inline constexpr Tolerances kTolerances{};

}  // namespace chandisc

#endif  // CHANDISC_ERRORS_H
