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

#ifndef QSK_FRAME_HPP
#define QSK_FRAME_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qsk/density.hpp"
#include "qsk/matrix.hpp"

namespace qsk {

// Finite-dimensional reconstruction through the Gram kernel of a set of pure
// states. The measured operators are the bare projectors |psi><psi|; they are
// not rescaled into a POVM, so Born-probability vectors sum to
// tr[rho * sum_j |psi_j><psi_j|] (2 for the qubit tetrahedron), while
// quasiprobabilities sum to 1 whenever the identity lies in the span.

/// Ordered set of unit vectors in C^d with unique labels.
class Frame {
 public:
  /// Throws std::invalid_argument if the set is empty, a vector has the wrong
  /// length or a norm off by more than 1e-12, or labels are not unique.
  Frame(std::size_t dim, std::vector<ComplexVector> states, std::vector<std::string> labels);
  /// Labels default to "0", "1", ...
  Frame(std::size_t dim, const std::vector<ComplexVector>& states);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<ComplexVector>& states() const { return states_; }
  const ComplexVector& state(std::size_t j) const { return states_[j]; }
  const std::vector<std::string>& labels() const { return labels_; }

  ComplexMatrix projector(std::size_t j) const { return ComplexMatrix::projector(states_[j]); }

 private:
  std::size_t dim_;
  std::vector<ComplexVector> states_;
  std::vector<std::string> labels_;
};

enum class KernelMode { kExactInverse, kPseudoInverse };

const char* to_string(KernelMode mode);

/// K(i, j) = |<psi_i|psi_j>|^2 together with its inverse or pseudo-inverse.
struct GramKernel {
  std::vector<std::vector<double>> matrix;
  std::vector<std::vector<double>> inverse;
  KernelMode mode = KernelMode::kExactInverse;
  /// Numerical rank of K, equal to the dimension of the spanned operator
  /// subspace.
  std::size_t rank = 0;
  /// Smallest and largest singular value of K.
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

/// Dual (contravariant) operators Gamma(j) = sum_l K^+(j, l) |psi_l><psi_l|,
/// aligned with the frame order. They are the frame's quasistates.
struct Covm {
  std::vector<ComplexMatrix> operators;
  KernelMode mode = KernelMode::kExactInverse;
  std::size_t rank = 0;
  std::size_t dim = 0;
};

enum class WeightKind { kBornProbabilities, kQuasiprobabilities };

struct WeightVector {
  std::vector<double> values;
  WeightKind kind = WeightKind::kBornProbabilities;

  double sum() const;
};

/// Result of a dual reconstruction. `subspace_rank` below d^2 means only the
/// component of the state inside the spanned operator subspace was recovered.
struct Reconstruction {
  ComplexMatrix rho;
  std::size_t subspace_rank = 0;
  KernelMode mode = KernelMode::kExactInverse;
};

/// Exact inversion when |S| = d^2 and sigma_min > 1e-10 sigma_max, otherwise
/// the pseudo-inverse with the same relative cutoff.
GramKernel gram_kernel(const Frame& frame);

Covm covm(const Frame& frame);
Covm covm(const Frame& frame, const GramKernel& kernel);

/// <psi_j|rho|psi_j> for each frame state.
WeightVector born_probabilities(const DensityOperator& rho, const Frame& frame);

/// tr[rho Gamma(j)] for each dual operator; entries may be negative.
WeightVector quasiprobabilities(const DensityOperator& rho, const Covm& covm);
WeightVector quasiprobabilities(const DensityOperator& rho, const Frame& frame);

/// sum_j w_j Gamma(j). Requires Born-probability weights of matching length.
Reconstruction reconstruct(const WeightVector& weights, const Covm& covm);

/// sum_j P_j |psi_j><psi_j|, the expansion over physical states that pairs
/// with quasiprobability weights.
ComplexMatrix expand_with_projectors(const WeightVector& weights, const Frame& frame);

/// Rank of the |S| x d^2 matrix of vectorised projectors (singular values
/// above 1e-10 sigma_max). The frame is informationally complete iff the rank
/// is d^2.
std::size_t completeness_rank(const Frame& frame);

/// Four qubit states with pairwise overlaps |<psi_i|psi_j>|^2 = 1/3:
/// |1>, (sqrt2 |0> + |1>)/sqrt3, (sqrt2 w |0> + |1>)/sqrt3,
/// (sqrt2 w^2 |0> + |1>)/sqrt3 with w = exp(2 pi i / 3).
Frame tetrahedron_frame();

/// Eigenstates of the three Pauli operators ordered x+, x-, y+, y-, z+, z-,
/// with sigma_z = |1><1| - |0><0|, sigma_x = |0><1| + |1><0| and
/// sigma_y = i|0><1| - i|1><0|.
Frame pauli_frame();

/// d orthonormal computational basis states.
Frame computational_basis_frame(std::size_t dim);

}  // namespace qsk

#endif  // QSK_FRAME_HPP
