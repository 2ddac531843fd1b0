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

#include "chandisc/povm.h"

#include "chandisc/errors.h"

namespace chandisc {

void validate_povm(const TwoOutcomePovm &povm) {
  const auto &[pi1, pi2] = povm;
  if (!pi1.is_square() || !pi2.is_square() || pi1.rows() != pi2.rows()) {
    throw Error(ErrorCode::kInvalidPovm, "POVM elements must be square matrices of equal size");
  }
  for (const CMatrix *pi : {&pi1, &pi2}) {
    if (!is_positive_semidefinite(*pi, kTolerances.eigenvalue_floor, kTolerances.hermiticity)) {
      throw Error(ErrorCode::kInvalidPovm, "POVM element is not positive semidefinite");
    }
  }
  if (max_abs_diff(pi1 + pi2, CMatrix::identity(pi1.rows())) > kTolerances.completeness) {
    throw Error(ErrorCode::kInvalidPovm, "POVM elements do not sum to the identity");
  }
}

}  // namespace chandisc
