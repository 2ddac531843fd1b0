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

#include "chandisc/linalg.h"

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <random>

#include "chandisc/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace chandisc {
namespace {

using testing::random_hermitian;
using testing::random_unitary;

const CMatrix kSigmaX = {{0, 1}, {1, 0}};
const CMatrix kSigmaZ = {{1, 0}, {0, -1}};

// 1/2 (|0><0| - |+><+|)
CMatrix half_zero_minus_plus() { return CMatrix{{0.25, -0.25}, {-0.25, -0.25}}; }

TEST(linalg, EigDiagonal) {
  auto e = eig_hermitian(CMatrix{{1, 0}, {0, -3}});
  ASSERT_EQ(e.eigenvalues.size(), 2u);
  EXPECT_NEAR(e.eigenvalues[0], 1, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], -3, 1e-14);
}

TEST(linalg, EigPauliX) {
  auto e = eig_hermitian(kSigmaX);
  EXPECT_NEAR(e.eigenvalues[0], 1, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], -1, 1e-14);
}

TEST(linalg, EigMatchesCharacteristicPolynomial) {
  // 2x2 oracle: lambda = tr/2 +- sqrt((tr/2)^2 - det).
  CMatrix a = half_zero_minus_plus();
  double tr = a.trace().real();
  double det = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real();
  double disc = std::sqrt(tr * tr / 4 - det);
  auto e = eig_hermitian(a);
  EXPECT_NEAR(e.eigenvalues[0], tr / 2 + disc, 1e-15);
  EXPECT_NEAR(e.eigenvalues[1], tr / 2 - disc, 1e-15);
  EXPECT_NEAR(e.eigenvalues[0], 1 / (2 * std::sqrt(2.0)), 1e-15);
}

TEST(linalg, EigRejectsNonHermitianAndNonSquare) {
  try {
    eig_hermitian(CMatrix{{0, 1}, {0, 0}});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonHermitian);
  }
  try {
    eig_hermitian(CMatrix(2, 3));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonSquare);
  }
}

TEST(linalg, EigReconstructionAndOrthonormality) {
  std::mt19937_64 rng(7);
  for (size_t d : {1, 2, 3, 4, 7, 9, 16}) {
    for (int rep = 0; rep < 5; rep++) {
      CMatrix a = random_hermitian(d, rng);
      a *= Complex(1 / a.max_abs());
      auto e = eig_hermitian(a);
      for (size_t k = 1; k < d; k++) {
        EXPECT_GE(e.eigenvalues[k - 1], e.eigenvalues[k]);
      }
      CMatrix lambda = CMatrix::diagonal(e.eigenvalues);
      const CMatrix &v = e.eigenvectors;
      EXPECT_LE(max_abs_diff(v * lambda * v.adjoint(), a), kTolerances.reconstruction) << "d=" << d;
      EXPECT_LE(max_abs_diff(v.adjoint() * v, CMatrix::identity(d)), 1e-10) << "d=" << d;
    }
  }
}

TEST(linalg, EigvalsAgreeWithEigen) {
  std::mt19937_64 rng(11);
  for (size_t d : {2, 5, 9, 16}) {
    CMatrix a = random_hermitian(d, rng);
    Eigen::MatrixXcd m(d, d);
    for (size_t i = 0; i < d; i++) {
      for (size_t j = 0; j < d; j++) {
        m(i, j) = a(i, j);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    auto ours = eigvals_hermitian(a);
    for (size_t k = 0; k < d; k++) {
      EXPECT_NEAR(ours[k], solver.eigenvalues()[d - 1 - k], 1e-10);
    }
  }
}

TEST(linalg, TraceNormExamples) {
  EXPECT_NEAR(trace_norm(CMatrix::identity(2)), 2, 1e-15);
  EXPECT_NEAR(trace_norm(CMatrix{{1, 0}, {0, -3}}), 4, 1e-15);
  EXPECT_NEAR(trace_norm(half_zero_minus_plus()), 1 / std::sqrt(2.0), 1e-15);
  try {
    trace_norm(CMatrix(2, 3));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonSquare);
  }
}

TEST(linalg, TraceNormOfGeneralMatrixMatchesEigenSvd) {
  std::mt19937_64 rng(5);
  for (size_t d : {2, 3, 4}) {
    CMatrix a = testing::random_ginibre(d, d, rng);
    Eigen::MatrixXcd m(d, d);
    for (size_t i = 0; i < d; i++) {
      for (size_t j = 0; j < d; j++) {
        m(i, j) = a(i, j);
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    EXPECT_NEAR(trace_norm(a), svd.singularValues().sum(), 1e-10);
  }
}

TEST(linalg, TraceNormUnitaryInvariance) {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 100; rep++) {
    size_t d = 2 + rep % 3;
    CMatrix a = testing::random_ginibre(d, d, rng);
    CMatrix u = random_unitary(d, rng);
    CMatrix v = random_unitary(d, rng);
    EXPECT_NEAR(trace_norm(u * a * v), trace_norm(a), 1e-9);
  }
}

TEST(linalg, TraceNormConvexity) {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 100; rep++) {
    size_t d = 2 + rep % 3;
    CMatrix a = random_hermitian(d, rng);
    CMatrix b = random_hermitian(d, rng);
    double t = testing::uniform01(rng);
    double lhs = trace_norm(a * Complex(t) + b * Complex(1 - t));
    EXPECT_LE(lhs, t * trace_norm(a) + (1 - t) * trace_norm(b) + 1e-9);
  }
}

TEST(linalg, TraceNormHermitianIsSumOfAbsEigenvalues) {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 20; rep++) {
    CMatrix a = random_hermitian(4, rng);
    auto ev = eigvals_hermitian(a);
    double s = 0;
    for (double x : ev) {
      s += std::abs(x);
    }
    EXPECT_NEAR(trace_norm(a), s, 1e-9);
  }
}

TEST(linalg, Kron) {
  EXPECT_EQ(kron(CMatrix::identity(2), CMatrix::identity(2)), CMatrix::identity(4));
  CMatrix xi = kron(kSigmaX, CMatrix::identity(2));
  CMatrix expected = {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  EXPECT_EQ(xi, expected);
  std::vector<double> diag = {1, -1, -1, 1};
  EXPECT_EQ(kron(kSigmaZ, kSigmaZ), CMatrix::diagonal(diag));
}

TEST(linalg, PartialTraceOfMaximallyEntangledState) {
  CVector phi = {1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)};
  CMatrix rho = outer(phi, phi);
  CMatrix half_id = CMatrix::identity(2) * Complex(0.5);
  EXPECT_LE(max_abs_diff(partial_trace(rho, 2, 2, Subsystem::kFirst), half_id), 1e-15);
  EXPECT_LE(max_abs_diff(partial_trace(rho, 2, 2, Subsystem::kSecond), half_id), 1e-15);
}

TEST(linalg, PartialTraceOfProductState) {
  std::mt19937_64 rng(23);
  CMatrix rho = testing::random_density_matrix(2, rng);
  CMatrix sigma = testing::random_density_matrix(3, rng) * Complex(2.5);
  CMatrix reduced = partial_trace(kron(rho, sigma), 2, 3, Subsystem::kSecond);
  EXPECT_LE(max_abs_diff(reduced, rho * sigma.trace()), 1e-14);
  EXPECT_LE(max_abs_diff(partial_trace(kron(rho, sigma), 2, 3, Subsystem::kFirst), sigma), 1e-14);
}

TEST(linalg, PartialTraceMatchesIndexContraction) {
  std::mt19937_64 rng(29);
  CMatrix rho = testing::random_density_matrix(4, rng);
  // Oracle: rho[(a b), (a' b')] contracted over a = a'.
  CMatrix expected(2, 2);
  for (int b = 0; b < 2; b++) {
    for (int bp = 0; bp < 2; bp++) {
      expected(b, bp) = rho(0 * 2 + b, 0 * 2 + bp) + rho(1 * 2 + b, 1 * 2 + bp);
    }
  }
  CMatrix reduced = partial_trace(rho, 2, 2, Subsystem::kFirst);
  EXPECT_LE(max_abs_diff(reduced, expected), 1e-15);
  EXPECT_NEAR(reduced.trace().real(), 1, 1e-14);
}

TEST(linalg, PartialTraceDimensionMismatch) {
  try {
    partial_trace(CMatrix::identity(4), 2, 3, Subsystem::kFirst);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(linalg, Biket) {
  EXPECT_EQ(mat_to_biket(CMatrix::identity(2)), (CVector{1, 0, 0, 1}));
  EXPECT_EQ(mat_to_biket(kSigmaX), (CVector{0, 1, 1, 0}));
  std::mt19937_64 rng(31);
  CMatrix a = testing::random_ginibre(3, 3, rng);
  EXPECT_EQ(biket_to_mat(mat_to_biket(a), 3), a);
  try {
    biket_to_mat(CVector(5), 2);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(linalg, BiketIdentities) {
  std::mt19937_64 rng(37);
  for (size_t d : {2, 3}) {
    CMatrix a = testing::random_ginibre(d, d, rng);
    CMatrix b = testing::random_ginibre(d, d, rng);
    CMatrix id = CMatrix::identity(d);
    CVector ket_i = mat_to_biket(id);
    CVector ket_a = mat_to_biket(a);
    CVector left = kron(a, id) * std::span<const Complex>(ket_i);
    CVector right = kron(id, a.transpose()) * std::span<const Complex>(ket_i);
    for (size_t k = 0; k < d * d; k++) {
      EXPECT_LE(std::abs(left[k] - ket_a[k]), 1e-14);
      EXPECT_LE(std::abs(right[k] - ket_a[k]), 1e-14);
    }
    EXPECT_LE(std::abs(inner(ket_a, mat_to_biket(b)) - (a.adjoint() * b).trace()), 1e-13);
  }
}

TEST(linalg, Predicates) {
  EXPECT_TRUE(is_hermitian(kSigmaX, 1e-12));
  EXPECT_FALSE(is_hermitian(CMatrix{{0, 1}, {0, 0}}, 1e-12));
  EXPECT_TRUE(is_unitary(kSigmaZ, 1e-12));
  EXPECT_FALSE(is_unitary(CMatrix::identity(2) * Complex(2), 1e-12));
  EXPECT_TRUE(is_positive_semidefinite(CMatrix::identity(2), -1e-9, 1e-9));
  EXPECT_FALSE(is_positive_semidefinite(kSigmaZ, -1e-9, 1e-9));
}

}  // namespace
}  // namespace chandisc
