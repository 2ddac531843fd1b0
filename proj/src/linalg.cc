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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chandisc/errors.h"

namespace chandisc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonSquare:
      return "NonSquare";
    case ErrorCode::kNonHermitian:
      return "NonHermitian";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kCompletenessViolation:
      return "CompletenessViolation";
    case ErrorCode::kInvalidProbabilityVector:
      return "InvalidProbabilityVector";
    case ErrorCode::kInvalidState:
      return "InvalidState";
    case ErrorCode::kInvalidPovm:
      return "InvalidPovm";
    case ErrorCode::kFamilyMismatch:
      return "FamilyMismatch";
    case ErrorCode::kNotOrthogonal:
      return "NotOrthogonal";
    case ErrorCode::kNotUnitary:
      return "NotUnitary";
    case ErrorCode::kUnsupportedDimension:
      return "UnsupportedDimension";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kOptimizerFailure:
      return "OptimizerFailure";
  }
  return "Unknown";
}

CMatrix::CMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  }
}

CMatrix::CMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw dimension_mismatch(rows * cols, data_.size());
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_) {
      throw dimension_mismatch(cols_, row.size());
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(size_t n) {
  CMatrix m(n, n);
  for (size_t i = 0; i < n; i++) {
    m(i, i) = 1.0;
  }
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
  CMatrix m(values.size(), values.size());
  for (size_t i = 0; i < values.size(); i++) {
    m(i, i) = values[i];
  }
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (size_t i = 0; i < rows_; i++) {
    for (size_t j = 0; j < cols_; j++) {
      out(j, i) = std::conj((*this)(i, j));
    }
  }
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (size_t i = 0; i < rows_; i++) {
    for (size_t j = 0; j < cols_; j++) {
      out(j, i) = (*this)(i, j);
    }
  }
  return out;
}

CMatrix CMatrix::conj() const {
  CMatrix out = *this;
  for (auto &z : out.data_) {
    z = std::conj(z);
  }
  return out;
}

Complex CMatrix::trace() const {
  Complex t = 0;
  for (size_t i = 0; i < std::min(rows_, cols_); i++) {
    t += (*this)(i, i);
  }
  return t;
}

double CMatrix::max_abs() const {
  double m = 0;
  for (const auto &z : data_) {
    m = std::max(m, std::abs(z));
  }
  return m;
}

double CMatrix::frobenius_norm() const {
  double s = 0;
  for (const auto &z : data_) {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw dimension_mismatch(rows_ * cols_, other.rows_ * other.cols_);
  }
  for (size_t k = 0; k < data_.size(); k++) {
    data_[k] += other.data_[k];
  }
  return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw dimension_mismatch(rows_ * cols_, other.rows_ * other.cols_);
  }
  for (size_t k = 0; k < data_.size(); k++) {
    data_[k] -= other.data_[k];
  }
  return *this;
}

CMatrix &CMatrix::operator*=(Complex scalar) {
  for (auto &z : data_) {
    z *= scalar;
  }
  return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
  if (a.cols() != b.rows()) {
    throw dimension_mismatch(a.cols(), b.rows());
  }
  CMatrix out(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); i++) {
    for (size_t k = 0; k < a.cols(); k++) {
      Complex aik = a(i, k);
      if (aik == Complex(0)) {
        continue;
      }
      for (size_t j = 0; j < b.cols(); j++) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

CVector operator*(const CMatrix &a, std::span<const Complex> v) {
  if (a.cols() != v.size()) {
    throw dimension_mismatch(a.cols(), v.size());
  }
  CVector out(a.rows());
  for (size_t i = 0; i < a.rows(); i++) {
    Complex s = 0;
    for (size_t j = 0; j < a.cols(); j++) {
      s += a(i, j) * v[j];
    }
    out[i] = s;
  }
  return out;
}

CMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
  CMatrix out(u.size(), v.size());
  for (size_t i = 0; i < u.size(); i++) {
    for (size_t j = 0; j < v.size(); j++) {
      out(i, j) = u[i] * std::conj(v[j]);
    }
  }
  return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) {
    throw dimension_mismatch(u.size(), v.size());
  }
  Complex s = 0;
  for (size_t k = 0; k < u.size(); k++) {
    s += std::conj(u[k]) * v[k];
  }
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0;
  for (const auto &z : v) {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw dimension_mismatch(a.rows() * a.cols(), b.rows() * b.cols());
  }
  double m = 0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (size_t k = 0; k < ea.size(); k++) {
    m = std::max(m, std::abs(ea[k] - eb[k]));
  }
  return m;
}

bool is_hermitian(const CMatrix &a, double tol) {
  if (!a.is_square()) {
    return false;
  }
  for (size_t i = 0; i < a.rows(); i++) {
    for (size_t j = i; j < a.cols(); j++) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) {
        return false;
      }
    }
  }
  return true;
}

bool is_unitary(const CMatrix &a, double tol) {
  if (!a.is_square()) {
    return false;
  }
  return max_abs_diff(a.adjoint() * a, CMatrix::identity(a.rows())) <= tol;
}

bool is_positive_semidefinite(const CMatrix &a, double floor, double tol) {
  if (!is_hermitian(a, tol)) {
    return false;
  }
  auto ev = eigvals_hermitian(a);
  return ev.back() >= floor;
}

namespace {

void require_square(const CMatrix &a) {
  if (!a.is_square()) {
    throw Error(ErrorCode::kNonSquare, "matrix is " + std::to_string(a.rows()) + "x" +
                                           std::to_string(a.cols()) + ", expected square");
  }
}

void require_hermitian(const CMatrix &a) {
  require_square(a);
  double worst = max_abs_diff(a, a.adjoint());
  if (worst > kTolerances.hermiticity) {
    throw Error(ErrorCode::kNonHermitian,
                "matrix is not Hermitian (max |a - a^dagger| = " + std::to_string(worst) + ")");
  }
}

CMatrix hermitian_part(const CMatrix &a) {
  CMatrix h = a;
  size_t n = a.rows();
  for (size_t i = 0; i < n; i++) {
    h(i, i) = a(i, i).real();
    for (size_t j = i + 1; j < n; j++) {
      Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

// Diagonalizes the Hermitian matrix `a` in place. On exit the diagonal holds
// the eigenvalues. When `vectors` is non-null it is multiplied on the right by
// every rotation, so starting from the identity it ends as the eigenbasis.
void jacobi_in_place(CMatrix &a, CMatrix *vectors) {
  const size_t n = a.rows();
  const double scale = a.frobenius_norm();
  if (scale == 0) {
    return;
  }
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
    double off = 0;
    for (size_t i = 0; i < n; i++) {
      for (size_t j = 0; j < n; j++) {
        if (i != j) {
          off += std::norm(a(i, j));
        }
      }
    }
    if (std::sqrt(off) < kTolerances.jacobi_relative * scale) {
      break;
    }
    for (size_t p = 0; p + 1 < n; p++) {
      for (size_t q = p + 1; q < n; q++) {
        Complex g = a(p, q);
        double abs_g = std::abs(g);
        if (abs_g == 0) {
          continue;
        }
        // Remove the phase of a(p,q), then apply the real symmetric rotation.
        Complex phase = std::conj(g / abs_g);
        double app = a(p, p).real();
        double aqq = a(q, q).real();
        double theta = (aqq - app) / (2 * abs_g);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        }
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        Complex v_pp = c;
        Complex v_pq = s;
        Complex v_qp = -s * phase;
        Complex v_qq = c * phase;

        for (size_t k = 0; k < n; k++) {
          Complex akp = a(k, p);
          Complex akq = a(k, q);
          a(k, p) = akp * v_pp + akq * v_qp;
          a(k, q) = akp * v_pq + akq * v_qq;
        }
        for (size_t k = 0; k < n; k++) {
          Complex apk = a(p, k);
          Complex aqk = a(q, k);
          a(p, k) = std::conj(v_pp) * apk + std::conj(v_qp) * aqk;
          a(q, k) = std::conj(v_pq) * apk + std::conj(v_qq) * aqk;
        }
        a(p, q) = 0;
        a(q, p) = 0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (vectors != nullptr) {
          CMatrix &v = *vectors;
          for (size_t k = 0; k < n; k++) {
            Complex vkp = v(k, p);
            Complex vkq = v(k, q);
            v(k, p) = vkp * v_pp + vkq * v_qp;
            v(k, q) = vkp * v_pq + vkq * v_qq;
          }
        }
      }
    }
  }
}

}  // namespace

EigDecomposition eig_hermitian(const CMatrix &a) {
  require_hermitian(a);
  const size_t n = a.rows();
  CMatrix work = hermitian_part(a);
  CMatrix vectors = CMatrix::identity(n);
  jacobi_in_place(work, &vectors);

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t x, size_t y) { return work(x, x).real() > work(y, y).real(); });

  EigDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (size_t k = 0; k < n; k++) {
    out.eigenvalues[k] = work(order[k], order[k]).real();
    for (size_t i = 0; i < n; i++) {
      out.eigenvectors(i, k) = vectors(i, order[k]);
    }
  }
  return out;
}

std::vector<double> eigvals_hermitian(const CMatrix &a) {
  require_hermitian(a);
  CMatrix work = hermitian_part(a);
  jacobi_in_place(work, nullptr);
  std::vector<double> ev(a.rows());
  for (size_t i = 0; i < a.rows(); i++) {
    ev[i] = work(i, i).real();
  }
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

std::vector<double> singular_values(const CMatrix &a) {
  auto ev = eigvals_hermitian(a.adjoint() * a);
  std::vector<double> sv;
  sv.reserve(ev.size());
  for (double lambda : ev) {
    if (lambda < 0 && lambda >= -kTolerances.svd_clamp) {
      lambda = 0;
    }
    sv.push_back(std::sqrt(std::max(lambda, 0.0)));
  }
  return sv;
}

double trace_norm_hermitian(const CMatrix &a) {
  require_square(a);
  CMatrix work = hermitian_part(a);
  jacobi_in_place(work, nullptr);
  double s = 0;
  for (size_t i = 0; i < a.rows(); i++) {
    s += std::abs(work(i, i).real());
  }
  return s;
}

double trace_norm(const CMatrix &a) {
  require_square(a);
  if (max_abs_diff(a, a.adjoint()) <= 1e-14 * std::max(1.0, a.max_abs())) {
    return trace_norm_hermitian(a);
  }
  auto sv = singular_values(a);
  return std::accumulate(sv.begin(), sv.end(), 0.0);
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); i++) {
    for (size_t j = 0; j < a.cols(); j++) {
      Complex aij = a(i, j);
      if (aij == Complex(0)) {
        continue;
      }
      for (size_t k = 0; k < b.rows(); k++) {
        for (size_t l = 0; l < b.cols(); l++) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix &a, size_t d1, size_t d2, Subsystem traced) {
  if (!a.is_square() || a.rows() != d1 * d2) {
    throw dimension_mismatch(d1 * d2, a.rows());
  }
  if (traced == Subsystem::kFirst) {
    CMatrix out(d2, d2);
    for (size_t i = 0; i < d2; i++) {
      for (size_t j = 0; j < d2; j++) {
        Complex s = 0;
        for (size_t k = 0; k < d1; k++) {
          s += a(k * d2 + i, k * d2 + j);
        }
        out(i, j) = s;
      }
    }
    return out;
  }
  CMatrix out(d1, d1);
  for (size_t i = 0; i < d1; i++) {
    for (size_t j = 0; j < d1; j++) {
      Complex s = 0;
      for (size_t k = 0; k < d2; k++) {
        s += a(i * d2 + k, j * d2 + k);
      }
      out(i, j) = s;
    }
  }
  return out;
}

CVector mat_to_biket(const CMatrix &a) {
  if (!a.is_square()) {
    throw dimension_mismatch(a.rows(), a.cols());
  }
  auto e = a.entries();
  return CVector(e.begin(), e.end());
}

CMatrix biket_to_mat(std::span<const Complex> v, size_t d) {
  if (v.size() != d * d) {
    throw dimension_mismatch(d * d, v.size());
  }
  return CMatrix(d, d, std::vector<Complex>(v.begin(), v.end()));
}

}  // namespace chandisc
