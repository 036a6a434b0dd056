// Copyright 2026 The entcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTCAP_NUMERICS_HPP
#define ENTCAP_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace entcap {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr Complex kI{0.0, 1.0};

/// Absolute tolerance used for every Hermiticity check in the library.
inline constexpr double kHermitianTolerance = 1e-10;

/// Dense complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// Single column holding `v`.
  static ComplexMatrix column(std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexVector column_vector(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Complex> v);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);

/// Matrix-vector product.
ComplexVector matvec(const ComplexMatrix& m, std::span<const Complex> v);

/// <u|v>, conjugate-linear in the first argument.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);
ComplexVector normalized(std::span<const Complex> v);
/// |u><v|
ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTolerance);
bool is_unitary(const ComplexMatrix& m, double tol);

ComplexMatrix pauli_x_matrix();
ComplexMatrix pauli_y_matrix();
ComplexMatrix pauli_z_matrix();

/// Kronecker product; entry (a*rB + b, a'*cB + b') = A(a,a') * B(b,b').
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

/// Partial trace of an operator on H_dA (x) H_dB with A-major flattening
/// (i = a*dB + b). Throws DimensionError if `rho` is not (dA*dB)-square.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t dA, std::size_t dB,
                            Subsystem keep);

/// AB - BA for square operands of equal size.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns
};

/// Hermitian eigensolver (cyclic complex Jacobi).
///
/// Eigenvalues are returned ascending. Within a block of equal eigenvalues
/// (|diff| <= 1e-12) vectors are ordered by the index of their first
/// nonzero component, and every vector is phased so that component is real
/// and positive. Throws NotHermitianError when max|M - M^dagger| exceeds
/// kHermitianTolerance.
EigenDecomposition eigh(const ComplexMatrix& m);

struct SingularValueDecomposition {
  ComplexMatrix u;                // rows x k, orthonormal columns
  std::vector<double> singular;   // k values, descending, non-negative
  ComplexMatrix vh;               // k x cols, orthonormal rows
};

/// Thin SVD with k = min(rows, cols), computed from the eigensystem of the
/// smaller Gram matrix. Singular values below 1e-10 * s_max are set to zero
/// and their left vectors completed by Gram-Schmidt.
SingularValueDecomposition svd(const ComplexMatrix& m);

/// exp(-i H t) for Hermitian H, through its eigendecomposition.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t);

struct ScalarMaxResult {
  double argmax = 0.0;
  double maximum = 0.0;
  std::size_t evaluations = 0;
};

/// Maximizes `f` on [lo, hi].
///
/// A 64-point uniform scan picks the best sample; golden-section search then
/// runs on the bracket formed by its neighbours until the bracket is narrower
/// than `tol`. Non-finite samples are treated as -infinity, so singular
/// endpoints are harmless. Throws DomainError if tol <= 0 or lo >= hi.
ScalarMaxResult golden_max(const std::function<double(double)>& f, double lo, double hi,
                           double tol);

/// (f(t + h) - f(t - h)) / 2h. Throws DomainError if h <= 0.
double central_diff(const std::function<double(double)>& f, double t, double h);

}  // namespace entcap

#endif  // ENTCAP_NUMERICS_HPP
