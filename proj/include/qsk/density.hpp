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

#ifndef QSK_DENSITY_HPP
#define QSK_DENSITY_HPP

#include <cstddef>

#include "qsk/matrix.hpp"

namespace qsk {

/// Hermitian, positive semidefinite, unit-trace matrix.
///
/// Construction validates all three properties within `tol` (default 1e-9)
/// and throws std::invalid_argument otherwise.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix m, double tol = 1e-9);

  static DensityOperator pure(std::span<const Complex> psi);
  static DensityOperator maximally_mixed(std::size_t dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

}  // namespace qsk

#endif  // QSK_DENSITY_HPP
