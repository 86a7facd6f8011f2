// Copyright 2026 The qsk Authors
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

#ifndef QSK_MATRIX_HPP
#define QSK_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qsk {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense complex matrix in row-major storage.
///
/// Value type: copies are deep and there is no shared state, so instances can
/// be passed between threads freely. All operator symbols in the library
/// (density operators, quasistates, ladder operators, unitaries) live in this
/// type.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n, n); }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> values);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |u><v|
  static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);
  /// |u><u|
  static ComplexMatrix projector(std::span<const Complex> u) { return outer(u, u); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> data() const { return entries_; }
  std::span<Complex> data() { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  Complex trace() const;

  /// Leading k x k block.
  ComplexMatrix leading_block(std::size_t k) const;
  ComplexVector column(std::size_t c) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  /// Largest absolute entry.
  double max_abs() const;
  /// Maximum absolute column sum.
  double norm_one() const;
  double norm_frobenius() const;

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);
ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// <u|v> (conjugate-linear in the first argument).
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);

/// max |a - b| over all entries; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |M - M^dagger| over all entries.
double hermiticity_defect(const ComplexMatrix& m);

/// Square root on the branch with nonnegative real part. Purely imaginary
/// results take the nonnegative imaginary part, independent of the sign of
/// a zero imaginary input.
Complex principal_sqrt(Complex z);

/// z^k for integer k >= 0 with 0^0 = 1.
Complex int_pow(Complex z, std::size_t k);

std::string to_string(const ComplexMatrix& m, int precision = 6);

}  // namespace qsk

#endif  // QSK_MATRIX_HPP
