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

#include "entcap/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "entcap/errors.hpp"

namespace entcap {

namespace {

std::string shape(const ComplexMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + shape(a) + " vs " + shape(b));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: " + std::to_string(entries_.size()) +
                         " entries for shape " + shape(*this));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> v) {
  return ComplexMatrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
}

ComplexVector ComplexMatrix::column_vector(std::size_t c) const {
  ComplexVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const Complex> v) {
  if (v.size() != rows_) throw DimensionError("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& z : out.entries_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix " + shape(*this));
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionError("matrix product: " + shape(lhs) + " * " + shape(rhs));
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexVector matvec(const ComplexMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw DimensionError("matvec: " + shape(m) + " on vector of " +
                                                 std::to_string(v.size()));
  ComplexVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw DimensionError("inner: length mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double norm(std::span<const Complex> v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

ComplexVector normalized(std::span<const Complex> v) {
  const double n = norm(v);
  if (n == 0.0) throw DomainError("normalized: zero vector");
  ComplexVector out(v.begin(), v.end());
  for (auto& z : out) z /= n;
  return out;
}

ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
  ComplexMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * std::conj(v[j]);
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

double frobenius_norm(const ComplexMatrix& m) { return norm(m.entries()); }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
  return true;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.rows())) <= tol;
}

ComplexMatrix pauli_x_matrix() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y_matrix() { return {{0.0, -kI}, {kI, 0.0}}; }
ComplexMatrix pauli_z_matrix() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rb = b.rows();
  const std::size_t cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l) out(i * rb + k, j * cb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t dA, std::size_t dB,
                            Subsystem keep) {
  if (dA == 0 || dB == 0 || rho.rows() != dA * dB || rho.cols() != dA * dB) {
    throw DimensionError("partial_trace: operator " + shape(rho) + " is inconsistent with split " +
                         std::to_string(dA) + "x" + std::to_string(dB));
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out(dA, dA);
    for (std::size_t a = 0; a < dA; ++a)
      for (std::size_t ap = 0; ap < dA; ++ap) {
        Complex acc = 0.0;
        for (std::size_t b = 0; b < dB; ++b) acc += rho(a * dB + b, ap * dB + b);
        out(a, ap) = acc;
      }
    return out;
  }
  ComplexMatrix out(dB, dB);
  for (std::size_t b = 0; b < dB; ++b)
    for (std::size_t bp = 0; bp < dB; ++bp) {
      Complex acc = 0.0;
      for (std::size_t a = 0; a < dA; ++a) acc += rho(a * dB + b, a * dB + bp);
      out(b, bp) = acc;
    }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionError("commutator: " + shape(a) + " and " + shape(b));
  }
  return a * b - b * a;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) acc += std::norm(a(r, c));
  return std::sqrt(acc);
}

// Index of the first component with modulus above `tol`.
std::size_t leading_index(const ComplexMatrix& v, std::size_t col, double tol) {
  for (std::size_t r = 0; r < v.rows(); ++r)
    if (std::abs(v(r, col)) > tol) return r;
  return v.rows();
}

}  // namespace

EigenDecomposition eigh(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("eigh: non-square matrix " + shape(m));
  if (!is_hermitian(m)) throw NotHermitianError("eigh: matrix is not Hermitian within 1e-10");

  const std::size_t n = m.rows();
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold =
      std::max(1e-12, 4.0 * std::numeric_limits<double>::epsilon() * frobenius_norm(a));
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex z = a(p, q);
        const double az = std::abs(z);
        if (az == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double zeta = (aqq - app) / (2.0 * az);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex phase = z / az;
        // Columns p, q are mixed by G = [[c, s e^{i phi}], [-s e^{-i phi}, c]].
        const Complex g00 = c;
        const Complex g01 = s * phase;
        const Complex g10 = -s * std::conj(phase);
        const Complex g11 = c;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * g00 + akq * g10;
          a(k, q) = akp * g01 + akq * g11;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
          a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * g00 + vkq * g10;
          v(k, q) = vkp * g01 + vkq * g11;
        }
      }
    }
  }

  constexpr double kComponentTol = 1e-12;
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t lead = leading_index(v, c, kComponentTol);
    if (lead == n) continue;
    const Complex z = v(lead, c);
    const Complex fix = std::conj(z) / std::abs(z);
    for (std::size_t r = 0; r < n; ++r) v(r, c) *= fix;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> values(n);
  std::vector<std::size_t> leads(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = a(i, i).real();
    leads[i] = leading_index(v, i, kComponentTol);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (std::abs(values[x] - values[y]) > 1e-12) return values[x] < values[y];
    return leads[x] < leads[y];
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.eigenvalues[i] = values[order[i]];
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, i) = v(r, order[i]);
  }
  return out;
}

namespace {

// Orthonormalizes the columns of `u` in place, in index order, replacing any
// column flagged in `zero` (or numerically dependent) by a standard basis
// vector orthogonalized against its predecessors.
void orthonormalize_columns(ComplexMatrix& u, std::vector<bool> zero) {
  const std::size_t m = u.rows();
  std::size_t next_basis = 0;
  for (std::size_t c = 0; c < u.cols(); ++c) {
    auto project_out = [&](ComplexVector& x) {
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t k = 0; k < c; ++k) {
          const ComplexVector uk = u.column_vector(k);
          const Complex ov = inner(uk, x);
          for (std::size_t r = 0; r < m; ++r) x[r] -= ov * uk[r];
        }
    };
    ComplexVector x = u.column_vector(c);
    if (!zero[c]) {
      project_out(x);
      if (norm(x) < 0.5) zero[c] = true;
    }
    if (zero[c]) {
      while (next_basis < m) {
        x.assign(m, Complex{0.0, 0.0});
        x[next_basis++] = 1.0;
        project_out(x);
        if (norm(x) > 0.5) break;
      }
    }
    u.set_column(c, normalized(x));
  }
}

}  // namespace

SingularValueDecomposition svd(const ComplexMatrix& m) {
  if (m.rows() < m.cols()) {
    SingularValueDecomposition t = svd(m.adjoint());
    return {t.vh.adjoint(), std::move(t.singular), t.u.adjoint()};
  }
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  const EigenDecomposition gram = eigh(m.adjoint() * m);

  // Singular values are re-measured as |M v_k|, which is accurate to
  // eps*|M| even for tiny values where sqrt(eigenvalue) is not.
  std::vector<ComplexVector> images(n);
  std::vector<double> sigma(n);
  for (std::size_t k = 0; k < n; ++k) {
    images[k] = matvec(m, gram.eigenvectors.column_vector(k));
    sigma[k] = norm(images[k]);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  const double s_max = n == 0 ? 0.0 : sigma[order[0]];
  const double cutoff = 1e-10 * s_max;

  SingularValueDecomposition out;
  out.singular.resize(n);
  out.u = ComplexMatrix(rows, n);
  out.vh = ComplexMatrix(n, n);
  std::vector<bool> zero(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = order[i];
    const double s = sigma[k] > cutoff ? sigma[k] : 0.0;
    out.singular[i] = s;
    zero[i] = s == 0.0;
    for (std::size_t c = 0; c < n; ++c) out.vh(i, c) = std::conj(gram.eigenvectors(c, k));
    if (!zero[i]) {
      for (std::size_t r = 0; r < rows; ++r) out.u(r, i) = images[k][r] / s;
    }
  }
  orthonormalize_columns(out.u, zero);
  return out;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t) {
  const EigenDecomposition ed = eigh(h);
  const std::size_t n = h.rows();
  ComplexMatrix scaled = ed.eigenvectors;
  for (std::size_t c = 0; c < n; ++c) {
    const Complex phase = std::exp(-kI * (ed.eigenvalues[c] * t));
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= phase;
  }
  return scaled * ed.eigenvectors.adjoint();
}

ScalarMaxResult golden_max(const std::function<double(double)>& f, double lo, double hi,
                           double tol) {
  if (!(tol > 0.0)) throw DomainError("golden_max: tolerance must be positive");
  if (!(lo < hi)) throw DomainError("golden_max: empty bracket");

  ScalarMaxResult result;
  auto eval = [&](double x) {
    ++result.evaluations;
    const double y = f(x);
    return std::isfinite(y) ? y : -std::numeric_limits<double>::infinity();
  };

  constexpr int kScan = 64;
  const double step = (hi - lo) / (kScan - 1);
  int best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kScan; ++i) {
    const double x = i == kScan - 1 ? hi : lo + step * i;
    const double y = eval(x);
    if (y > best_value) {
      best_value = y;
      best = i;
    }
  }
  double a = lo + step * std::max(best - 1, 0);
  double b = best + 1 >= kScan ? hi : lo + step * (best + 1);
  double best_x = best == kScan - 1 ? hi : lo + step * best;

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }
  const double x_mid = 0.5 * (a + b);
  const double f_mid = eval(x_mid);
  for (auto [x, y] : {std::pair{c, fc}, std::pair{d, fd}, std::pair{x_mid, f_mid}}) {
    if (y > best_value) {
      best_value = y;
      best_x = x;
    }
  }
  result.argmax = std::clamp(best_x, lo, hi);
  result.maximum = best_value;
  return result;
}

double central_diff(const std::function<double(double)>& f, double t, double h) {
  if (!(h > 0.0)) throw DomainError("central_diff: step must be positive");
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

}  // namespace entcap
