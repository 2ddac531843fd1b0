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
#include <random>

#include "chandisc/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace chandisc {
namespace {

ErrorCode code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "expected chandisc::Error";
  return ErrorCode::kInvalidArgument;
}

CMatrix ket_bra(size_t d, size_t i, size_t j) {
  CMatrix m(d, d);
  m(i, j) = 1;
  return m;
}

TEST(channels, MakeOperation) {
  EXPECT_EQ(make_operation({CMatrix::identity(2)}).dim(), 2u);
  Complex s = 1 / std::sqrt(2.0);
  EXPECT_EQ(make_operation({pauli_matrix(1) * s, pauli_matrix(2) * s}).kraus().size(), 2u);
  EXPECT_EQ(code_of([] { make_operation({CMatrix::identity(2), pauli_matrix(1)}); }),
            ErrorCode::kCompletenessViolation);
  EXPECT_EQ(code_of([] { make_operation({CMatrix::identity(2), CMatrix(3, 3)}); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { make_operation({}); }), ErrorCode::kInvalidArgument);
}

TEST(channels, PauliChannelKraus) {
  auto id = pauli_channel({1, 0, 0, 0});
  ASSERT_EQ(id.kraus().size(), 1u);
  EXPECT_EQ(id.kraus()[0], CMatrix::identity(2));

  auto third = pauli_channel({0, 1.0 / 3, 1.0 / 3, 1.0 / 3});
  ASSERT_EQ(third.kraus().size(), 3u);
  for (int alpha = 1; alpha <= 3; alpha++) {
    EXPECT_LE(max_abs_diff(third.kraus()[alpha - 1], pauli_matrix(alpha) * Complex(1 / std::sqrt(3.0))), 1e-15);
  }
  EXPECT_EQ(code_of([] { pauli_channel({0.5, 0.5, 0.5, -0.5}); }), ErrorCode::kInvalidProbabilityVector);
  EXPECT_EQ(code_of([] { pauli_channel({0.5, 0.5, 0.5, 0}); }), ErrorCode::kInvalidProbabilityVector);
}

TEST(channels, ApplyExamples) {
  CMatrix zero = ket_bra(2, 0, 0);
  std::mt19937_64 rng(3);
  CMatrix rho = testing::random_density_matrix(2, rng);
  EXPECT_LE(max_abs_diff(apply(pauli_channel({1, 0, 0, 0}), rho), rho), 1e-15);
  EXPECT_LE(max_abs_diff(apply(pauli_channel({0.25, 0.25, 0.25, 0.25}), zero), CMatrix::identity(2) * Complex(0.5)),
            1e-15);
  EXPECT_LE(max_abs_diff(apply(pauli_channel({0, 1, 0, 0}), zero), ket_bra(2, 1, 1)), 1e-15);
}

TEST(channels, ApplyRejectsBadStates) {
  auto op = pauli_channel({1, 0, 0, 0});
  EXPECT_EQ(code_of([&] { apply(op, CMatrix::identity(2)); }), ErrorCode::kInvalidState);
  EXPECT_EQ(code_of([&] { apply(op, CMatrix{{1.5, 0}, {0, -0.5}}); }), ErrorCode::kInvalidState);
  EXPECT_EQ(code_of([&] { apply(op, CMatrix{{0.5, 0.5}, {0, 0.5}}); }), ErrorCode::kInvalidState);
  EXPECT_EQ(code_of([&] { apply(op, CMatrix::identity(3) * Complex(1.0 / 3)); }), ErrorCode::kDimensionMismatch);
}

TEST(channels, ApplyPreservesTraceAndHermiticity) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; rep++) {
    size_t d = 2 + rep % 3;
    auto op = testing::random_channel(d, 1 + rep % 4, rng);
    CMatrix out = apply(op, testing::random_density_matrix(d, rng));
    EXPECT_NEAR(out.trace().real(), 1, 1e-10);
    EXPECT_LE(max_abs_diff(out, out.adjoint()), 1e-10);
  }
}

TEST(channels, PauliChannelMatchesDirectFormula) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; rep++) {
    auto q = testing::random_pauli_weights(rng);
    CMatrix rho = testing::random_density_matrix(2, rng);
    CMatrix direct(2, 2);
    for (int alpha = 0; alpha < 4; alpha++) {
      direct += pauli_matrix(alpha) * rho * pauli_matrix(alpha) * Complex(q[alpha]);
    }
    EXPECT_LE(max_abs_diff(apply(pauli_channel(q), rho), direct), 1e-12);
  }
}

TEST(channels, WeylQubitFamilyIsPauliUpToPhase) {
  std::vector<double> q = {0.25, 0.25, 0.25, 0.25};
  auto ch = weyl_channel(2, q);
  ASSERT_EQ(ch.unitaries.size(), 4u);
  // Order (a, b) = (0,0), (0,1), (1,0), (1,1) -> I, Z, X, -iY.
  const int pauli_index[] = {0, 3, 1, 2};
  for (size_t n = 0; n < 4; n++) {
    Complex overlap = (pauli_matrix(pauli_index[n]).adjoint() * ch.unitaries[n]).trace();
    EXPECT_NEAR(std::abs(overlap), 2, 1e-14);
  }
}

TEST(channels, WeylOrthogonality) {
  for (size_t d : {2, 3, 4, 5}) {
    std::vector<double> q(d * d, 1.0 / static_cast<double>(d * d));
    auto ch = weyl_channel(d, q);
    for (size_t m = 0; m < d * d; m++) {
      for (size_t n = 0; n < d * d; n++) {
        Complex t = (ch.unitaries[m].adjoint() * ch.unitaries[n]).trace();
        EXPECT_LE(std::abs(t - (m == n ? Complex(static_cast<double>(d)) : Complex(0))), 1e-10);
      }
    }
    CMatrix sum(d, d);
    for (const auto &u : ch.unitaries) {
      sum += u * u.adjoint() * Complex(1.0 / static_cast<double>(d * d));
    }
    EXPECT_LE(max_abs_diff(sum, CMatrix::identity(d)), 1e-12);
  }
}

TEST(channels, UniformQutritWeylChannelDepolarizes) {
  std::vector<double> q(9, 1.0 / 9);
  auto op = to_operation(weyl_channel(3, q));
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 5; rep++) {
    CVector psi = testing::random_pure_state(3, rng);
    CMatrix out = apply(op, outer(psi, psi));
    EXPECT_LE(max_abs_diff(out, CMatrix::identity(3) * Complex(1.0 / 3)), 1e-9);
  }
}

TEST(channels, WeylRejectsBadWeights) {
  std::vector<double> short_q = {0.5, 0.5};
  EXPECT_EQ(code_of([&] { weyl_channel(2, short_q); }), ErrorCode::kInvalidProbabilityVector);
}

TEST(channels, ToOperationDropsZeroWeights) {
  std::vector<double> q = {0.5, 0, 0.5, 0};
  EXPECT_EQ(to_operation(weyl_channel(2, q)).kraus().size(), 2u);
}

TEST(channels, RandomUnitaryChannelValidation) {
  EXPECT_EQ(code_of([] { make_random_unitary_channel({CMatrix::identity(2) * Complex(2)}, {1}); }),
            ErrorCode::kNotUnitary);
  EXPECT_EQ(code_of([] { make_random_unitary_channel({CMatrix::identity(2)}, {0.5}); }),
            ErrorCode::kInvalidProbabilityVector);
}

TEST(channels, ApplyExtendedIdentityOnMaximallyEntangled) {
  CMatrix xi = CMatrix::identity(2) * Complex(1 / std::sqrt(2.0));
  CVector phi = {1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)};
  EXPECT_LE(max_abs_diff(apply_extended(pauli_channel({1, 0, 0, 0}), xi), outer(phi, phi)), 1e-15);
}

TEST(channels, ApplyExtendedDepolarizingOnMaximallyEntangled) {
  CMatrix xi = CMatrix::identity(2) * Complex(1 / std::sqrt(2.0));
  CMatrix out = apply_extended(pauli_channel({0.25, 0.25, 0.25, 0.25}), xi);
  EXPECT_LE(max_abs_diff(out, CMatrix::identity(4) * Complex(0.25)), 1e-15);
}

TEST(channels, ApplyExtendedOnProductInputs) {
  // xi = a b^T encodes |a> (x) |b>; the output must be E(|a><a|) (x) |b><b|.
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; rep++) {
    size_t d = 2 + rep % 2;
    auto op = testing::random_channel(d, 2, rng);
    CVector a = testing::random_pure_state(d, rng);
    CVector b = testing::random_pure_state(d, rng);
    CMatrix xi(d, d);
    for (size_t i = 0; i < d; i++) {
      for (size_t j = 0; j < d; j++) {
        xi(i, j) = a[i] * b[j];
      }
    }
    CMatrix expected = kron(apply(op, outer(a, a)), outer(b, b));
    EXPECT_LE(max_abs_diff(apply_extended(op, xi), expected), 1e-12);
  }
}

TEST(channels, ApplyExtendedMatchesDefinition) {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 100; rep++) {
    size_t d = 2 + rep % 2;
    auto op = testing::random_channel(d, 1 + rep % 3, rng);
    CMatrix xi = testing::random_ginibre(d, d, rng);
    xi *= Complex(1 / xi.frobenius_norm());
    CVector ket = mat_to_biket(xi);
    CMatrix r = outer(ket, ket);
    CMatrix id = CMatrix::identity(d);
    CMatrix expected(d * d, d * d);
    for (const auto &k : op.kraus()) {
      expected += kron(k, id) * r * kron(k.adjoint(), id);
    }
    CMatrix out = apply_extended(op, xi);
    EXPECT_LE(max_abs_diff(out, expected), 1e-10);
    EXPECT_NEAR(out.trace().real(), 1, 1e-10);
  }
}

TEST(channels, ApplyExtendedRejectsUnnormalizedInput) {
  auto op = pauli_channel({1, 0, 0, 0});
  EXPECT_EQ(code_of([&] { apply_extended(op, CMatrix::identity(2)); }), ErrorCode::kInvalidState);
}

}  // namespace
}  // namespace chandisc
