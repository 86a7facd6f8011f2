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

#ifndef QSK_LINALG_HPP
#define QSK_LINALG_HPP

#include <cstddef>
#include <vector>

#include "qsk/matrix.hpp"

namespace qsk {

/// Eigen-decomposition of a Hermitian matrix: M = V diag(values) V^dagger.
/// Eigenvalues are sorted in descending order and column k of `vectors`
/// belongs to `values[k]`.
struct Spectrum {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Thin singular value decomposition M = U diag(sigma) V^dagger with
/// sigma sorted in descending order. For an m x n input, U is m x k and V is
/// n x k with k = min(m, n).
struct Svd {
  ComplexMatrix u;
  std::vector<double> sigma;
  ComplexMatrix v;
};

/// Cyclic Jacobi eigensolver. Throws std::invalid_argument when the input is
/// not square or when max|M - M^dagger| exceeds `hermitian_tol`.
Spectrum hermitian_eigen(const ComplexMatrix& m, double hermitian_tol = 1e-10);

/// One-sided (Hestenes) Jacobi SVD; accurate for small singular values.
Svd singular_value_decomposition(const ComplexMatrix& m);

/// Number of singular values above rel_tol * sigma_max.
std::size_t numerical_rank(const ComplexMatrix& m, double rel_tol);

/// Inverse of a square matrix by Gauss-Jordan elimination with partial
/// pivoting. Throws std::domain_error when the smallest singular value is
/// below 1e-12 * sigma_max.
ComplexMatrix invert(const ComplexMatrix& m);

/// Moore-Penrose pseudo-inverse. Singular values below rel_tol * sigma_max
/// are treated as zero.
ComplexMatrix pseudo_invert(const ComplexMatrix& m, double rel_tol = 1e-10);

/// exp(M) by scaling and squaring of a Taylor series whose tail is below
/// 1e-16 relative to the partial sum. Strictly triangular (nilpotent) input is
/// summed without scaling, so the series terminates after at most n terms.
ComplexMatrix matrix_exponential(const ComplexMatrix& m);

}  // namespace qsk

#endif  // QSK_LINALG_HPP
