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

#include "qsk/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qsk/linalg.hpp"

namespace qsk {

FockSpace::FockSpace(std::size_t cutoff) : cutoff_(cutoff) {
  if (cutoff < 2) {
    throw std::invalid_argument("FockSpace: cutoff must be at least 2, got " + std::to_string(cutoff));
  }
}

ComplexMatrix annihilation(const FockSpace& space) {
  ComplexMatrix a(space.dim(), space.dim());
  for (std::size_t n = 1; n < space.dim(); ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix creation(const FockSpace& space) { return annihilation(space).adjoint(); }

ComplexMatrix number_operator(const FockSpace& space) {
  ComplexMatrix m(space.dim(), space.dim());
  for (std::size_t n = 0; n < space.dim(); ++n) m(n, n) = static_cast<double>(n);
  return m;
}

ComplexMatrix displacement(Complex alpha, const FockSpace& space) {
  const ComplexMatrix a = annihilation(space);
  const ComplexMatrix generator = alpha * a.adjoint() - std::conj(alpha) * a;
  return matrix_exponential(generator);
}

ComplexMatrix squeeze(Complex zeta, const FockSpace& space) {
  const ComplexMatrix a = annihilation(space);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix generator = 0.5 * (std::conj(zeta) * a2 - zeta * a2.adjoint());
  return matrix_exponential(generator);
}

ComplexVector coherent_vector(Complex alpha, const FockSpace& space) {
  ComplexVector v(space.dim());
  // alpha^n / sqrt(n!) by recurrence keeps large n finite.
  Complex amp = std::exp(-0.5 * std::norm(alpha));
  for (std::size_t n = 0; n < space.dim(); ++n) {
    v[n] = amp;
    amp *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return v;
}

ComplexMatrix power_of_number(Complex omega, const FockSpace& space) {
  ComplexMatrix m(space.dim(), space.dim());
  Complex w = 1.0;
  for (std::size_t n = 0; n < space.dim(); ++n) {
    m(n, n) = w;
    w *= omega;
  }
  return m;
}

}  // namespace qsk
