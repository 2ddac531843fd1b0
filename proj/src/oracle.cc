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

#include "chandisc/oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "chandisc/errors.h"

namespace chandisc {

namespace {

constexpr size_t kMaxOracleDim = 4;

void require_oracle_dim(size_t d) {
  if (d > kMaxOracleDim) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "oracle supports d <= 4, got d = " + std::to_string(d));
  }
}

CMatrix kraus_sum(const std::vector<CMatrix> &kraus, const CMatrix &rho) {
  CMatrix out(rho.rows(), rho.cols());
  for (const auto &k : kraus) {
    out += k * rho * k.adjoint();
  }
  return out;
}

double error_for_product_input(const DiscriminationProblem &prob, const CVector &psi) {
  CMatrix rho = outer(psi, psi);
  CMatrix diff = kraus_sum(prob.op1.kraus(), rho) * Complex(prob.p1) -
                 kraus_sum(prob.op2.kraus(), rho) * Complex(1 - prob.p1);
  return 0.5 * (1 - trace_norm(diff));
}

// Bipartite pure input |psi> on H (x) H; channels act on the first factor.
double error_for_bipartite_input(const DiscriminationProblem &prob, const CVector &psi) {
  const size_t d = prob.op1.dim();
  const CMatrix id = CMatrix::identity(d);
  auto output = [&](const std::vector<CMatrix> &kraus) {
    CMatrix rho(d * d, d * d);
    for (const auto &k : kraus) {
      CVector out = kron(k, id) * std::span<const Complex>(psi);
      rho += outer(out, out);
    }
    return rho;
  };
  CMatrix diff = output(prob.op1.kraus()) * Complex(prob.p1) - output(prob.op2.kraus()) * Complex(1 - prob.p1);
  return 0.5 * (1 - trace_norm(diff));
}

CMatrix ginibre(size_t d, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal;
  CMatrix g(d, d);
  for (auto &z : g.entries()) {
    double re = normal(rng);
    double im = normal(rng);
    z = Complex(re, im);
  }
  return g;
}

CMatrix random_unitary(size_t d, std::mt19937_64 &rng) {
  CMatrix g = ginibre(d, rng);
  // Modified Gram-Schmidt on the columns.
  for (size_t j = 0; j < d; j++) {
    for (size_t k = 0; k < j; k++) {
      Complex proj = 0;
      for (size_t i = 0; i < d; i++) {
        proj += std::conj(g(i, k)) * g(i, j);
      }
      for (size_t i = 0; i < d; i++) {
        g(i, j) -= proj * g(i, k);
      }
    }
    double n = 0;
    for (size_t i = 0; i < d; i++) {
      n += std::norm(g(i, j));
    }
    n = std::sqrt(n);
    for (size_t i = 0; i < d; i++) {
      g(i, j) /= n;
    }
  }
  return g;
}

CVector random_pure_state(size_t d, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal;
  CVector v(d);
  for (auto &z : v) {
    double re = normal(rng);
    double im = normal(rng);
    z = Complex(re, im);
  }
  double n = norm(v);
  for (auto &z : v) {
    z /= n;
  }
  return v;
}

}  // namespace

double povm_error(const CMatrix &rho1, const CMatrix &rho2, double p1, const TwoOutcomePovm &povm) {
  validate_povm(povm);
  if (rho1.rows() != povm.pi1.rows() || rho2.rows() != povm.pi1.rows()) {
    throw dimension_mismatch(povm.pi1.rows(), rho1.rows());
  }
  return p1 * (rho1 * povm.pi2).trace().real() + (1 - p1) * (rho2 * povm.pi1).trace().real();
}

double brute_force_unentangled(const DiscriminationProblem &prob, size_t grid_density) {
  validate_problem(prob);
  const size_t d = prob.op1.dim();
  require_oracle_dim(d);
  if (grid_density < 2) {
    throw Error(ErrorCode::kInvalidArgument, "grid density must be at least 2");
  }
  double best = 1;
  if (d == 1) {
    return error_for_product_input(prob, CVector{1});
  }
  if (d == 2) {
    for (size_t i = 0; i < grid_density; i++) {
      double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid_density - 1);
      for (size_t j = 0; j < grid_density; j++) {
        double phi = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_density);
        CVector psi = {std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
        best = std::min(best, error_for_product_input(prob, psi));
      }
    }
    return best;
  }
  for (size_t k = 0; k < d; k++) {
    CVector e(d);
    e[k] = 1;
    best = std::min(best, error_for_product_input(prob, e));
  }
  std::mt19937_64 rng(0);
  const size_t count = grid_density * grid_density * grid_density;
  for (size_t s = 0; s < count; s++) {
    best = std::min(best, error_for_product_input(prob, random_pure_state(d, rng)));
  }
  return best;
}

double brute_force_entangled(const DiscriminationProblem &prob, size_t samples, uint64_t seed) {
  validate_problem(prob);
  const size_t d = prob.op1.dim();
  require_oracle_dim(d);
  if (samples == 0) {
    throw Error(ErrorCode::kInvalidArgument, "oracle needs at least one sample");
  }
  std::mt19937_64 rng(seed);
  const double inv_sqrt_d = 1 / std::sqrt(static_cast<double>(d));
  double best = 1;
  for (size_t s = 0; s < samples; s++) {
    CMatrix u = random_unitary(d, rng);
    // (U (x) I)|Phi+> = |U>> / sqrt(d), and |A>> is the row-major entry list.
    CVector psi(u.entries().begin(), u.entries().end());
    for (auto &z : psi) {
      z *= inv_sqrt_d;
    }
    best = std::min(best, error_for_bipartite_input(prob, psi));
  }
  for (size_t s = 0; s < samples; s++) {
    CMatrix g = ginibre(d, rng);
    CMatrix p = g * g.adjoint();
    p *= Complex(1 / p.frobenius_norm());
    CMatrix xi = p.transpose();
    CVector psi(xi.entries().begin(), xi.entries().end());
    best = std::min(best, error_for_bipartite_input(prob, psi));
  }
  return best;
}

}  // namespace chandisc
