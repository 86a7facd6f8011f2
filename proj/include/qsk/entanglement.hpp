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

#ifndef QSK_ENTANGLEMENT_HPP
#define QSK_ENTANGLEMENT_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "qsk/matrix.hpp"

namespace qsk {

// Two-qubit states diagonal in the Bell basis,
//
//   rho = (1 x 1 + sum_j rho_j sigma_j x sigma_j) / 4,   j = x, y, z,
//
// expanded over products of Pauli eigenstates. Both local frames use the
// ordering of pauli_frame(): x+, x-, y+, y-, z+, z-.

/// Pauli matrix for axis 0 (x), 1 (y) or 2 (z), with
/// sigma_y = i|0><1| - i|1><0| and sigma_z = |1><1| - |0><0|.
ComplexMatrix pauli_matrix(std::size_t axis);

struct TwoQubitState {
  double rho_x = 0.0;
  double rho_y = 0.0;
  double rho_z = 0.0;

  double coefficient(std::size_t axis) const;
};

/// The 4 x 4 density matrix. Does not check physicality.
ComplexMatrix two_qubit_matrix(const TwoQubitState& state);

/// Eigenvalues of two_qubit_matrix, descending.
std::array<double, 4> bell_eigenvalues(const TwoQubitState& state);

/// True when every Bell eigenvalue is >= -1e-10.
bool is_physical(const TwoQubitState& state);

/// Throws std::domain_error naming the most negative Bell eigenvalue unless
/// the state is physical.
void require_physical(const TwoQubitState& state);

enum class DistributionKind { kQuasiprobability, kConvolved };

/// Real 6 x 6 distribution over pairs of Pauli eigenstates.
struct JointDistribution {
  std::array<std::array<double, 6>, 6> values{};
  DistributionKind kind = DistributionKind::kQuasiprobability;
  /// Mixing parameter of the local kernels; 1 for the bare quasiprobability.
  double mix = 1.0;

  double sum() const;
  double min() const;
  /// Row sums, i.e. the marginal of the first subsystem.
  std::array<double, 6> first_marginal() const;
  /// Column sums.
  std::array<double, 6> second_marginal() const;
};

/// P(a_s, b_t) = [a == b] (q/12 + (|rho_a| + s t rho_a)/4),
/// q = 1 - |rho_x| - |rho_y| - |rho_z|. Throws std::domain_error for
/// unphysical states.
JointDistribution entanglement_quasiprobability(const TwoQubitState& state);

struct SeparabilityVerdict {
  bool separable = false;
  double q = 0.0;
};

/// Separable iff q >= -1e-12. Throws std::domain_error for unphysical states.
SeparabilityVerdict separability_verdict(const TwoQubitState& state);

/// (K x K) P with K = mix id + (1 - mix)/6 n n^T on each side:
/// mix^2 P + (1-mix)^2/36 + mix (1-mix)/6 (P(a) + P(b)).
/// Throws std::invalid_argument unless 0 < mix <= 1.
JointDistribution convolved_distribution(const TwoQubitState& state, double mix);

/// Supremum of the initial interval (0, r*] on which every entry of the
/// convolved distribution is >= -1e-12, located by a coarse scan followed by
/// bisection to 1e-11. Returns 1 when no negativity occurs.
double positivity_threshold(const TwoQubitState& state);

/// (1/mix)|j><j| - ((1-mix)/(2 mix)) 1 for Pauli eigenstate j.
/// Throws std::invalid_argument for j > 5 or mix outside (0, 1].
ComplexMatrix local_quasistate(std::size_t j, double mix);

/// sum P(a, b) |a><a| x |b><b| for a quasiprobability, or
/// sum P(a, b) Delta_K(a) x Delta_K(b) for a convolved distribution.
ComplexMatrix reconstruct_two_qubit(const JointDistribution& dist);

/// Uniform attenuation kernel K = mix id + b n n^T, b = (1 - mix)/set_size.
class AttenuationKernel {
 public:
  /// Throws std::invalid_argument unless 0 < mix <= 1 and set_size >= 1.
  AttenuationKernel(double mix, std::size_t set_size);

  double mix() const { return mix_; }
  std::size_t set_size() const { return set_size_; }
  double offset() const { return (1.0 - mix_) / static_cast<double>(set_size_); }

 private:
  double mix_;
  std::size_t set_size_;
};

struct KernelPair {
  std::vector<std::vector<double>> kernel;
  std::vector<std::vector<double>> inverse;
};

/// K and K^-1 = (1/mix) id - (b/mix)/(mix + b |S|) n n^T.
KernelPair uniform_kernel_matrix(const AttenuationKernel& kernel);

/// K applied to a distribution over the kernel's set. Throws
/// std::invalid_argument on a size mismatch.
std::vector<double> attenuate(const AttenuationKernel& kernel, const std::vector<double>& distribution);

}  // namespace qsk

#endif  // QSK_ENTANGLEMENT_HPP
