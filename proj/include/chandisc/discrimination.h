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

#ifndef CHANDISC_DISCRIMINATION_H
#define CHANDISC_DISCRIMINATION_H

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "chandisc/channels.h"
#include "chandisc/linalg.h"
#include "chandisc/optimizer.h"
#include "chandisc/povm.h"

namespace chandisc {

/// Two channels given with priors p1 and p2 = 1 - p1.
struct DiscriminationProblem {
  QuantumOperation op1;
  QuantumOperation op2;
  double p1;

  double p2() const { return 1 - p1; }
};

/// Throws kDimensionMismatch for channels of different dimension and
/// kInvalidArgument for a prior outside [0, 1].
void validate_problem(const DiscriminationProblem &prob);
DiscriminationProblem make_problem(QuantumOperation op1, QuantumOperation op2, double p1);

struct HelstromResult {
  double pe;
  TwoOutcomePovm povm;
};

/// Minimum-error discrimination of two states. The POVM projects onto the
/// nonnegative / negative eigenspaces of p1 rho1 - p2 rho2; the kernel goes to
/// outcome 1.
HelstromResult helstrom(const CMatrix &rho1, const CMatrix &rho2, double p1);

/// p1 sum_n |K1_n>><<K1_n| - p2 sum_m |K2_m>><<K2_m|. Depends only on the
/// channels, not on the Kraus representations chosen for them.
CMatrix delta_operator(const DiscriminationProblem &prob);

/// Error probability reached by any maximally entangled input:
/// (1 - ||Delta||_1 / d) / 2. Always an upper bound on the entangled optimum.
double bound_max_entangled(const DiscriminationProblem &prob);

enum class Method { kClosedFormOrthogonal, kClosedFormPauli, kNumeric };

std::string_view method_name(Method method);

struct SearchSummary {
  bool ran = false;
  OptimizerTrace trace;
};

struct Diagnostics {
  SearchSummary entangled;
  SearchSummary unentangled;
  // p1 in {0, 1}: both error probabilities are 0 and no search runs.
  bool degenerate_prior = false;
};

struct DiscriminationResult {
  std::optional<double> pe_entangled;
  std::optional<double> pe_unentangled;
  double upper_bound = 0;
  std::optional<double> lower_bound;
  // xi with Tr[xi^dagger xi] = 1; the entangled input is |xi>>.
  std::optional<CMatrix> optimal_xi;
  std::optional<CVector> optimal_pure_input;
  Method method = Method::kNumeric;
  Diagnostics diagnostics;
};

/// Numeric entangled-input optimum over P >= 0, Tr[P^2] = 1. Also runs the
/// unentangled search, whose optimum (a rank-one P) is fed back as a start,
/// so both error probabilities are populated and ordered.
DiscriminationResult pe_entangled(const DiscriminationProblem &prob, const OptimizerConfig &cfg);

/// Numeric optimum over pure product inputs only.
DiscriminationResult pe_unentangled(const DiscriminationProblem &prob, const OptimizerConfig &cfg);

/// True iff the numeric unentangled error exceeds the entangled one by more
/// than kTolerances.entanglement_gap.
bool entanglement_needed_numeric(const DiscriminationProblem &prob, const OptimizerConfig &cfg);

/// Pairwise Tr[U_m^dagger U_n] = d delta_{mn} within kTolerances.orthogonality.
bool is_orthogonal_unitary_family(const RandomUnitaryChannel &ch);

/// (1 - sum_n |r_n|) / 2 with r_n = p1 q1_n - p2 q2_n. Both channels must use
/// the same orthogonal unitary list; throws kFamilyMismatch / kNotOrthogonal.
double pe_random_unitary_exact(const RandomUnitaryChannel &ch1, const RandomUnitaryChannel &ch2,
                               double p1);

struct ErrorBounds {
  double lower;
  double upper;
};

/// Two-sided bounds for a shared, not necessarily orthogonal, unitary list.
ErrorBounds pe_random_unitary_bounds(const RandomUnitaryChannel &ch1, const RandomUnitaryChannel &ch2,
                                     double p1);

enum class Axis { kZ, kX, kY };

std::string_view axis_name(Axis axis);

struct PauliDiscriminationSummary {
  std::array<double, 4> r;
  double a, b, c, d;
  std::array<double, 4> singular_values;  // |a+c|, |a-c|, |b+d|, |b-d|
  int det_sign;
  double m;
  double pe_entangled;
  double pe_unentangled;
  Axis optimal_unentangled_axis;
  bool entanglement_needed;
};

/// Closed forms for two qubit Pauli channels.
PauliDiscriminationSummary pauli_delta_summary(const std::array<double, 4> &q1,
                                               const std::array<double, 4> &q2, double p1);
double pe_pauli_entangled(const std::array<double, 4> &q1, const std::array<double, 4> &q2, double p1);
double pe_pauli_unentangled(const std::array<double, 4> &q1, const std::array<double, 4> &q2, double p1);
/// True when r0 r1 r2 r3 < 0, i.e. entangled inputs strictly beat product inputs.
bool entanglement_needed_pauli(const std::array<double, 4> &q1, const std::array<double, 4> &q2, double p1);

/// A unitary list shared by two channels that are both mixtures of its members.
struct CommonUnitaryFamily {
  std::vector<CMatrix> unitaries;
  std::vector<double> weights1;
  std::vector<double> weights2;
};

/// Recognizes two channels whose Kraus operators are all proportional to
/// unitaries and merges those unitaries (up to phase) into one list.
std::optional<CommonUnitaryFamily> common_unitary_family(const QuantumOperation &op1,
                                                         const QuantumOperation &op2);

/// Picks the most exact available route: qubit Pauli closed forms, the
/// orthogonal-family closed form for the entangled error, or the numeric
/// searches. `method` records which one was used.
DiscriminationResult discriminate(const DiscriminationProblem &prob, const OptimizerConfig &cfg);

}  // namespace chandisc

#endif  // CHANDISC_DISCRIMINATION_H
