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

#ifndef CHANDISC_ORACLE_H
#define CHANDISC_ORACLE_H

#include <cstddef>
#include <cstdint>

#include "chandisc/discrimination.h"
#include "chandisc/linalg.h"
#include "chandisc/povm.h"

namespace chandisc {

// Brute-force reference values. Nothing here calls into the optimizer or the
// discrimination closed forms; only linalg is shared.

/// p1 Tr[rho1 pi2] + p2 Tr[rho2 pi1]. Throws kInvalidPovm for a bad POVM.
double povm_error(const CMatrix &rho1, const CMatrix &rho2, double p1, const TwoOutcomePovm &povm);

/// Minimum Helstrom error over product inputs. Qubits sweep a
/// grid_density x grid_density (theta, phi) grid on the Bloch sphere, poles
/// included; d = 3, 4 use grid_density^3 random pure states. The result is an
/// upper bound on the true unentangled optimum. Throws kUnsupportedDimension
/// for d > 4.
double brute_force_unentangled(const DiscriminationProblem &prob, size_t grid_density);

/// Minimum error over `samples` maximally entangled inputs (U (x) I)|Phi+>
/// with random U, plus `samples` inputs |xi>> with xi^T a random normalized
/// positive operator. Upper-bounds the entangled optimum. d <= 4 only.
double brute_force_entangled(const DiscriminationProblem &prob, size_t samples, uint64_t seed);

}  // namespace chandisc

#endif  // CHANDISC_ORACLE_H
