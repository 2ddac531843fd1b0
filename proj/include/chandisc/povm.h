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

#ifndef CHANDISC_POVM_H
#define CHANDISC_POVM_H

#include "chandisc/linalg.h"

namespace chandisc {

/// Two-outcome measurement {pi1, pi2}; outcome i means "guess hypothesis i".
struct TwoOutcomePovm {
  CMatrix pi1;
  CMatrix pi2;
};

/// Throws kInvalidPovm unless both elements are positive semidefinite and sum
/// to the identity within tolerance.
void validate_povm(const TwoOutcomePovm &povm);

}  // namespace chandisc

#endif  // CHANDISC_POVM_H
