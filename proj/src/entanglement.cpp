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

#include "qsk/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qsk/frame.hpp"
#include "qsk/linalg.hpp"

namespace qsk {

namespace {

constexpr double kPhysicalTol = 1e-10;
constexpr double kNegativityTol = 1e-12;
constexpr std::size_t kScanPoints = 1000;

void check_mix(double mix, const char* what) {
  if (!(mix > 0.0 && mix <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": mixing parameter " + std::to_string(mix) +
                                " outside (0, 1]");
  }
}

JointDistribution convolve(const JointDistribution& p, double mix) {
  const auto row = p.first_marginal();
  const auto col = p.second_marginal();
  const double total = p.sum();
  const double cross = mix * (1.0 - mix) / 6.0;
  const double floor = (1.0 - mix) * (1.0 - mix) / 36.0 * total;
  JointDistribution out;
  out.kind = DistributionKind::kConvolved;
  out.mix = mix;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      out.values[a][b] = mix * mix * p.values[a][b] + floor + cross * (row[a] + col[b]);
    }
  }
  return out;
}

const std::vector<ComplexMatrix>& pauli_projectors() {
  static const std::vector<ComplexMatrix> projectors = [] {
    const Frame f = pauli_frame();
    std::vector<ComplexMatrix> out;
    for (std::size_t j = 0; j < f.size(); ++j) out.push_back(f.projector(j));
    return out;
  }();
  return projectors;
}

}  // namespace

ComplexMatrix pauli_matrix(std::size_t axis) {
  const Complex i(0.0, 1.0);
  switch (axis) {
    case 0:
      return {{0.0, 1.0}, {1.0, 0.0}};
    case 1:
      return {{0.0, i}, {-i, 0.0}};
    case 2:
      return {{-1.0, 0.0}, {0.0, 1.0}};
    default:
      throw std::invalid_argument("pauli_matrix: axis must be 0, 1 or 2");
  }
}

double TwoQubitState::coefficient(std::size_t axis) const {
  switch (axis) {
    case 0:
      return rho_x;
    case 1:
      return rho_y;
    case 2:
      return rho_z;
    default:
      throw std::invalid_argument("TwoQubitState: axis must be 0, 1 or 2");
  }
}

ComplexMatrix two_qubit_matrix(const TwoQubitState& state) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const ComplexMatrix s = pauli_matrix(axis);
    m += state.coefficient(axis) * kron(s, s);
  }
  m *= 0.25;
  return m;
}

std::array<double, 4> bell_eigenvalues(const TwoQubitState& state) {
  const Spectrum spec = hermitian_eigen(two_qubit_matrix(state));
  std::array<double, 4> out{};
  std::copy(spec.values.begin(), spec.values.end(), out.begin());
  return out;
}

bool is_physical(const TwoQubitState& state) { return bell_eigenvalues(state)[3] >= -kPhysicalTol; }

void require_physical(const TwoQubitState& state) {
  const double lowest = bell_eigenvalues(state)[3];
  if (lowest < -kPhysicalTol) {
    throw std::domain_error("unphysical two-qubit state: Bell eigenvalue " + std::to_string(lowest));
  }
}

double JointDistribution::sum() const {
  double s = 0.0;
  for (const auto& row : values) {
    for (double v : row) s += v;
  }
  return s;
}

double JointDistribution::min() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& row : values) {
    for (double v : row) m = std::min(m, v);
  }
  return m;
}

std::array<double, 6> JointDistribution::first_marginal() const {
  std::array<double, 6> out{};
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) out[a] += values[a][b];
  }
  return out;
}

std::array<double, 6> JointDistribution::second_marginal() const {
  std::array<double, 6> out{};
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) out[b] += values[a][b];
  }
  return out;
}

JointDistribution entanglement_quasiprobability(const TwoQubitState& state) {
  require_physical(state);
  const double q = 1.0 - std::abs(state.rho_x) - std::abs(state.rho_y) - std::abs(state.rho_z);
  JointDistribution out;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const double c = state.coefficient(axis);
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t t = 0; t < 2; ++t) {
        const double sign = s == t ? 1.0 : -1.0;
        out.values[2 * axis + s][2 * axis + t] = q / 12.0 + (std::abs(c) + sign * c) / 4.0;
      }
    }
  }
  return out;
}

SeparabilityVerdict separability_verdict(const TwoQubitState& state) {
  require_physical(state);
  const double q = 1.0 - std::abs(state.rho_x) - std::abs(state.rho_y) - std::abs(state.rho_z);
  return {q >= -kNegativityTol, q};
}

JointDistribution convolved_distribution(const TwoQubitState& state, double mix) {
  check_mix(mix, "convolved_distribution");
  return convolve(entanglement_quasiprobability(state), mix);
}

double positivity_threshold(const TwoQubitState& state) {
  const JointDistribution p = entanglement_quasiprobability(state);
  const auto nonnegative = [&p](double mix) { return convolve(p, mix).min() >= -kNegativityTol; };
  double lo = 0.0;
  double hi = -1.0;
  for (std::size_t k = 1; k <= kScanPoints; ++k) {
    const double mix = static_cast<double>(k) / kScanPoints;
    if (!nonnegative(mix)) {
      hi = mix;
      break;
    }
    lo = mix;
  }
  if (hi < 0.0) return 1.0;
  while (hi - lo > 1e-11) {
    const double mid = 0.5 * (lo + hi);
    (nonnegative(mid) ? lo : hi) = mid;
  }
  return lo;
}

ComplexMatrix local_quasistate(std::size_t j, double mix) {
  check_mix(mix, "local_quasistate");
  if (j >= 6) throw std::invalid_argument("local_quasistate: index must be below 6");
  ComplexMatrix out = (1.0 / mix) * pauli_projectors()[j];
  out -= ((1.0 - mix) / (2.0 * mix)) * ComplexMatrix::identity(2);
  return out;
}

ComplexMatrix reconstruct_two_qubit(const JointDistribution& dist) {
  std::vector<ComplexMatrix> local;
  local.reserve(6);
  for (std::size_t j = 0; j < 6; ++j) {
    local.push_back(dist.kind == DistributionKind::kQuasiprobability ? pauli_projectors()[j]
                                                                     : local_quasistate(j, dist.mix));
  }
  ComplexMatrix out(4, 4);
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      const double w = dist.values[a][b];
      if (w == 0.0) continue;
      out += w * kron(local[a], local[b]);
    }
  }
  return out;
}

AttenuationKernel::AttenuationKernel(double mix, std::size_t set_size) : mix_(mix), set_size_(set_size) {
  check_mix(mix, "AttenuationKernel");
  if (set_size == 0) throw std::invalid_argument("AttenuationKernel: set size must be positive");
}

KernelPair uniform_kernel_matrix(const AttenuationKernel& kernel) {
  const std::size_t n = kernel.set_size();
  const double a = kernel.mix();
  const double b = kernel.offset();
  const double c = (b / a) / (a + b * static_cast<double>(n));
  KernelPair out{std::vector<std::vector<double>>(n, std::vector<double>(n, b)),
                 std::vector<std::vector<double>>(n, std::vector<double>(n, -c))};
  for (std::size_t i = 0; i < n; ++i) {
    out.kernel[i][i] += a;
    out.inverse[i][i] += 1.0 / a;
  }
  return out;
}

std::vector<double> attenuate(const AttenuationKernel& kernel, const std::vector<double>& distribution) {
  if (distribution.size() != kernel.set_size()) {
    throw std::invalid_argument("attenuate: distribution has " + std::to_string(distribution.size()) +
                                " entries, kernel expects " + std::to_string(kernel.set_size()));
  }
  double total = 0.0;
  for (double v : distribution) total += v;
  std::vector<double> out(distribution.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = kernel.mix() * distribution[i] + kernel.offset() * total;
  return out;
}

}  // namespace qsk
