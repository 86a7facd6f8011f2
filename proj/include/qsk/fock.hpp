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

#ifndef QSK_FOCK_HPP
#define QSK_FOCK_HPP

#include <cstddef>

#include "qsk/matrix.hpp"

namespace qsk {

/// Truncated single-mode Fock space spanned by |0>, ..., |cutoff - 1>.
///
/// Every operator built under a FockSpace is cutoff x cutoff. Truncation is
/// the one systematic error source of the bosonic routines: results are
/// trustworthy on the leading block only, and `validation_block()` is the
/// block size the tests compare by default.
class FockSpace {
 public:
  explicit FockSpace(std::size_t cutoff);

  std::size_t cutoff() const { return cutoff_; }
  std::size_t dim() const { return cutoff_; }
  std::size_t validation_block() const { return cutoff_ / 2; }

  friend bool operator==(const FockSpace&, const FockSpace&) = default;

 private:
  std::size_t cutoff_;
};

/// a with <n-1|a|n> = sqrt(n).
ComplexMatrix annihilation(const FockSpace& space);
/// a^dagger.
ComplexMatrix creation(const FockSpace& space);
/// a^dagger a = diag(0, 1, ..., cutoff - 1).
ComplexMatrix number_operator(const FockSpace& space);

/// D(alpha) = exp(alpha a^dagger - conj(alpha) a) on the truncated space.
/// Accurate on the leading block when |alpha|^2 is well below the cutoff.
ComplexMatrix displacement(Complex alpha, const FockSpace& space);

/// S(zeta) = exp((conj(zeta) a^2 - zeta a^dagger^2) / 2). The generator is
/// anti-Hermitian, so the result is unitary up to truncation.
ComplexMatrix squeeze(Complex zeta, const FockSpace& space);

/// Truncated coherent state, entries exp(-|alpha|^2/2) alpha^n / sqrt(n!).
ComplexVector coherent_vector(Complex alpha, const FockSpace& space);

/// omega^n on the diagonal, with 0^0 = 1.
ComplexMatrix power_of_number(Complex omega, const FockSpace& space);

}  // namespace qsk

#endif  // QSK_FOCK_HPP
