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

#ifndef CHANDISC_CHANNELS_H
#define CHANDISC_CHANNELS_H

#include <array>
#include <cstddef>
#include <vector>

#include "chandisc/linalg.h"

namespace chandisc {

/// A trace-preserving completely positive map rho -> sum_n K_n rho K_n^dagger.
/// Construction checks the completeness relation sum_n K_n^dagger K_n = I.
class QuantumOperation {
 public:
  explicit QuantumOperation(std::vector<CMatrix> kraus);

  size_t dim() const { return dim_; }
  const std::vector<CMatrix> &kraus() const { return kraus_; }

 private:
  size_t dim_;
  std::vector<CMatrix> kraus_;
};

QuantumOperation make_operation(std::vector<CMatrix> kraus);

/// Weights over {I, sigma_x, sigma_y, sigma_z}, in that order.
struct PauliChannel {
  std::array<double, 4> q;
};

/// Channel rho -> sum_n q_n U_n rho U_n^dagger.
struct RandomUnitaryChannel {
  size_t dim;
  std::vector<CMatrix> unitaries;
  std::vector<double> weights;
};

/// Checks nonnegativity and unit sum (within kTolerances.probability_sum).
void validate_probability_vector(std::span<const double> q);

/// sigma_0..sigma_3 = I, X, Y, Z.
CMatrix pauli_matrix(int index);

QuantumOperation pauli_channel(const std::array<double, 4> &q);
QuantumOperation to_operation(const PauliChannel &channel);

RandomUnitaryChannel make_random_unitary_channel(std::vector<CMatrix> unitaries,
                                                 std::vector<double> weights);

/// U_{a,b} = sum_k w^{k b} |k + a mod d><k|, w = exp(2 pi i / d).
CMatrix weyl_operator(size_t d, size_t a, size_t b);

/// Weyl channel with weights indexed by n = a * d + b. For d = 2 the family
/// is (I, Z, X, -iY).
RandomUnitaryChannel weyl_channel(size_t d, std::span<const double> q);

/// Kraus form sqrt(q_n) U_n; zero-weight terms are dropped.
QuantumOperation to_operation(const RandomUnitaryChannel &channel);

/// Throws kInvalidState unless rho is a density matrix within tolerance.
void validate_state(const CMatrix &rho);

CMatrix apply(const QuantumOperation &op, const CMatrix &rho);

/// (E (x) I)(|xi>><<xi|) for a d x d matrix xi with Tr[xi^dagger xi] = 1,
/// computed as (I (x) xi^T) C (I (x) xi^*) with C = sum_n |K_n>><<K_n|.
CMatrix apply_extended(const QuantumOperation &op, const CMatrix &xi);

/// sum_n |K_n>><<K_n|, a d^2 x d^2 positive operator.
CMatrix choi_operator(const QuantumOperation &op);

namespace detail {
/// apply() without input validation, for hot loops over known-good states.
CMatrix apply_unchecked(const QuantumOperation &op, const CMatrix &rho);
}  // namespace detail

}  // namespace chandisc

#endif  // CHANDISC_CHANNELS_H
