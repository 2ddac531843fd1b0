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

#include "chandisc/channels.h"

#include <cmath>
#include <numbers>
#include <string>

#include "chandisc/errors.h"

namespace chandisc {

QuantumOperation::QuantumOperation(std::vector<CMatrix> kraus) : dim_(0), kraus_(std::move(kraus)) {
  if (kraus_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "a quantum operation needs at least one Kraus operator");
  }
  dim_ = kraus_.front().rows();
  for (const auto &k : kraus_) {
    if (!k.is_square()) {
      throw Error(ErrorCode::kNonSquare, "Kraus operators must be square");
    }
    if (k.rows() != dim_) {
      throw dimension_mismatch(dim_, k.rows());
    }
  }
  CMatrix sum(dim_, dim_);
  for (const auto &k : kraus_) {
    sum += k.adjoint() * k;
  }
  double violation = max_abs_diff(sum, CMatrix::identity(dim_));
  if (violation > kTolerances.completeness) {
    throw Error(ErrorCode::kCompletenessViolation,
                "Kraus operators violate completeness: max |sum K^dagger K - I| = " +
                    std::to_string(violation));
  }
}

QuantumOperation make_operation(std::vector<CMatrix> kraus) { return QuantumOperation(std::move(kraus)); }

void validate_probability_vector(std::span<const double> q) {
  if (q.empty()) {
    throw Error(ErrorCode::kInvalidProbabilityVector, "probability vector is empty");
  }
  double sum = 0;
  for (double x : q) {
    if (!(x >= 0) || !std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidProbabilityVector,
                  "probability vector has a negative or non-finite entry: " + std::to_string(x));
    }
    sum += x;
  }
  if (std::abs(sum - 1) > kTolerances.probability_sum) {
    throw Error(ErrorCode::kInvalidProbabilityVector,
                "probability vector sums to " + std::to_string(sum) + ", expected 1");
  }
}

CMatrix pauli_matrix(int index) {
  using namespace std::complex_literals;
  switch (index) {
    case 0:
      return {{1, 0}, {0, 1}};
    case 1:
      return {{0, 1}, {1, 0}};
    case 2:
      return {{0, -1i}, {1i, 0}};
    case 3:
      return {{1, 0}, {0, -1}};
  }
  throw Error(ErrorCode::kInvalidArgument, "Pauli index must be 0..3");
}

QuantumOperation to_operation(const PauliChannel &channel) { return pauli_channel(channel.q); }

QuantumOperation pauli_channel(const std::array<double, 4> &q) {
  validate_probability_vector(q);
  std::vector<CMatrix> kraus;
  for (int alpha = 0; alpha < 4; alpha++) {
    if (q[alpha] > 0) {
      kraus.push_back(pauli_matrix(alpha) * Complex(std::sqrt(q[alpha])));
    }
  }
  return QuantumOperation(std::move(kraus));
}

RandomUnitaryChannel make_random_unitary_channel(std::vector<CMatrix> unitaries,
                                                 std::vector<double> weights) {
  if (unitaries.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "random unitary channel needs at least one unitary");
  }
  if (unitaries.size() != weights.size()) {
    throw dimension_mismatch(unitaries.size(), weights.size());
  }
  validate_probability_vector(weights);
  size_t d = unitaries.front().rows();
  for (const auto &u : unitaries) {
    if (!u.is_square() || u.rows() != d) {
      throw dimension_mismatch(d, u.rows());
    }
    if (!is_unitary(u, kTolerances.unitarity)) {
      throw Error(ErrorCode::kNotUnitary, "random unitary channel member is not unitary");
    }
  }
  return RandomUnitaryChannel{d, std::move(unitaries), std::move(weights)};
}

CMatrix weyl_operator(size_t d, size_t a, size_t b) {
  CMatrix u(d, d);
  for (size_t k = 0; k < d; k++) {
    double angle = 2 * std::numbers::pi * static_cast<double>((k * b) % d) / static_cast<double>(d);
    u((k + a) % d, k) = std::polar(1.0, angle);
  }
  return u;
}

RandomUnitaryChannel weyl_channel(size_t d, std::span<const double> q) {
  if (d == 0) {
    throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  }
  if (q.size() != d * d) {
    throw Error(ErrorCode::kInvalidProbabilityVector,
                "Weyl channel needs " + std::to_string(d * d) + " weights, got " + std::to_string(q.size()));
  }
  validate_probability_vector(q);
  std::vector<CMatrix> unitaries;
  unitaries.reserve(d * d);
  for (size_t a = 0; a < d; a++) {
    for (size_t b = 0; b < d; b++) {
      unitaries.push_back(weyl_operator(d, a, b));
    }
  }
  return RandomUnitaryChannel{d, std::move(unitaries), std::vector<double>(q.begin(), q.end())};
}

QuantumOperation to_operation(const RandomUnitaryChannel &channel) {
  std::vector<CMatrix> kraus;
  for (size_t n = 0; n < channel.unitaries.size(); n++) {
    if (channel.weights[n] > 0) {
      kraus.push_back(channel.unitaries[n] * Complex(std::sqrt(channel.weights[n])));
    }
  }
  return QuantumOperation(std::move(kraus));
}

void validate_state(const CMatrix &rho) {
  if (!rho.is_square()) {
    throw Error(ErrorCode::kInvalidState, "state must be a square matrix");
  }
  if (!is_hermitian(rho, kTolerances.hermiticity)) {
    throw Error(ErrorCode::kInvalidState, "state is not Hermitian");
  }
  double tr = rho.trace().real();
  if (std::abs(tr - 1) > kTolerances.state_trace) {
    throw Error(ErrorCode::kInvalidState, "state has trace " + std::to_string(tr) + ", expected 1");
  }
  double smallest = eigvals_hermitian(rho).back();
  if (smallest < kTolerances.eigenvalue_floor) {
    throw Error(ErrorCode::kInvalidState,
                "state has negative eigenvalue " + std::to_string(smallest));
  }
}

namespace detail {

CMatrix apply_unchecked(const QuantumOperation &op, const CMatrix &rho) {
  CMatrix out(op.dim(), op.dim());
  for (const auto &k : op.kraus()) {
    out += k * rho * k.adjoint();
  }
  return out;
}

}  // namespace detail

CMatrix apply(const QuantumOperation &op, const CMatrix &rho) {
  if (!rho.is_square() || rho.rows() != op.dim()) {
    throw dimension_mismatch(op.dim(), rho.rows());
  }
  validate_state(rho);
  return detail::apply_unchecked(op, rho);
}

CMatrix choi_operator(const QuantumOperation &op) {
  size_t d2 = op.dim() * op.dim();
  CMatrix c(d2, d2);
  for (const auto &k : op.kraus()) {
    auto v = mat_to_biket(k);
    c += outer(v, v);
  }
  return c;
}

CMatrix apply_extended(const QuantumOperation &op, const CMatrix &xi) {
  if (!xi.is_square() || xi.rows() != op.dim()) {
    throw dimension_mismatch(op.dim(), xi.rows());
  }
  double norm2 = (xi.adjoint() * xi).trace().real();
  if (std::abs(norm2 - 1) > kTolerances.state_trace) {
    throw Error(ErrorCode::kInvalidState,
                "bipartite input has Tr[xi^dagger xi] = " + std::to_string(norm2) + ", expected 1");
  }
  CMatrix id = CMatrix::identity(op.dim());
  return kron(id, xi.transpose()) * choi_operator(op) * kron(id, xi.conj());
}

}  // namespace chandisc
