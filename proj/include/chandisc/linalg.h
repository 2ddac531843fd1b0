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

#ifndef CHANDISC_LINALG_H
#define CHANDISC_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace chandisc {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense row-major complex matrix. Sizes are small (at most a few dozen rows),
/// so everything is stored by value and all operations return new matrices.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(size_t rows, size_t cols);
  CMatrix(size_t rows, size_t cols, std::vector<Complex> entries);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(size_t n);
  static CMatrix diagonal(std::span<const double> values);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex &operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Complex &operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> entries() { return data_; }
  std::span<const Complex> entries() const { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conj() const;
  Complex trace() const;

  /// Largest absolute entry.
  double max_abs() const;
  double frobenius_norm() const;

  CMatrix &operator+=(const CMatrix &other);
  CMatrix &operator-=(const CMatrix &other);
  CMatrix &operator*=(Complex scalar);

  friend CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix &a, const CMatrix &b);

  bool operator==(const CMatrix &other) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Complex> data_;
};

CVector operator*(const CMatrix &a, std::span<const Complex> v);

/// |u><v|
CMatrix outer(std::span<const Complex> u, std::span<const Complex> v);
/// <u|v>, conjugate-linear in the first argument.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);

/// Max-entry distance between two same-shape matrices.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

bool is_hermitian(const CMatrix &a, double tol);
bool is_unitary(const CMatrix &a, double tol);
/// Hermitian within `tol` and no eigenvalue below `floor`.
bool is_positive_semidefinite(const CMatrix &a, double floor, double tol);

struct EigDecomposition {
  std::vector<double> eigenvalues;  // descending
  CMatrix eigenvectors;             // columns, matching eigenvalue order
};

/// Cyclic complex Jacobi. Throws kNonSquare / kNonHermitian.
EigDecomposition eig_hermitian(const CMatrix &a);
/// Same as eig_hermitian without accumulating eigenvectors.
std::vector<double> eigvals_hermitian(const CMatrix &a);

/// Singular values, descending, via the eigenvalues of a^dagger a.
std::vector<double> singular_values(const CMatrix &a);

/// Sum of singular values. Hermitian inputs take the eigenvalue route.
double trace_norm(const CMatrix &a);
/// Trace norm of an input already known to be Hermitian; no symmetry check.
double trace_norm_hermitian(const CMatrix &a);

CMatrix kron(const CMatrix &a, const CMatrix &b);

enum class Subsystem { kFirst, kSecond };

/// Traces out `traced` from a (d1*d2)x(d1*d2) operator on H1 (x) H2.
CMatrix partial_trace(const CMatrix &a, size_t d1, size_t d2, Subsystem traced);

/// |A>> = sum_{n,m} <n|A|m> |n>|m>; equals the row-major entry list.
CVector mat_to_biket(const CMatrix &a);
CMatrix biket_to_mat(std::span<const Complex> v, size_t d);

}  // namespace chandisc

#endif  // CHANDISC_LINALG_H
