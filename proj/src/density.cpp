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

#include "qsk/density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qsk/linalg.hpp"

namespace qsk {

DensityOperator::DensityOperator(ComplexMatrix m, double tol) : matrix_(std::move(m)) {
  if (!matrix_.is_square() || matrix_.empty()) {
    throw std::invalid_argument("DensityOperator: matrix must be square and nonempty");
  }
  if (!matrix_.all_finite()) throw std::invalid_argument("DensityOperator: non-finite entries");
  if (hermiticity_defect(matrix_) > tol) throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw std::invalid_argument("DensityOperator: trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  const Spectrum spec = hermitian_eigen(matrix_, tol);
  if (spec.values.back() < -tol) {
    throw std::invalid_argument("DensityOperator: negative eigenvalue " + std::to_string(spec.values.back()));
  }
}

DensityOperator DensityOperator::pure(std::span<const Complex> psi) {
  const double n = norm(psi);
  if (n == 0.0) throw std::invalid_argument("DensityOperator::pure: zero vector");
  ComplexMatrix m = ComplexMatrix::projector(psi);
  m *= 1.0 / (n * n);
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityOperator(std::move(m));
}

}  // namespace qsk
