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

#include "qsk/frame.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qsk/linalg.hpp"

namespace qsk {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kKernelRelTol = 1e-10;

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

std::vector<std::vector<double>> to_real_rows(const ComplexMatrix& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).real();
  }
  return rows;
}

void require_dim(const DensityOperator& rho, std::size_t dim, const char* what) {
  if (rho.dim() != dim) {
    throw std::invalid_argument(std::string(what) + ": density operator is " + std::to_string(rho.dim()) +
                                "-dimensional, frame is " + std::to_string(dim) + "-dimensional");
  }
}

}  // namespace

Frame::Frame(std::size_t dim, std::vector<ComplexVector> states, std::vector<std::string> labels)
    : dim_(dim), states_(std::move(states)), labels_(std::move(labels)) {
  if (dim_ == 0) throw std::invalid_argument("Frame: dimension must be positive");
  if (states_.empty()) throw std::invalid_argument("Frame: state list is empty");
  if (labels_.size() != states_.size()) throw std::invalid_argument("Frame: label count does not match state count");
  for (std::size_t j = 0; j < states_.size(); ++j) {
    if (states_[j].size() != dim_) {
      throw std::invalid_argument("Frame: state " + std::to_string(j) + " has length " +
                                  std::to_string(states_[j].size()) + ", expected " + std::to_string(dim_));
    }
    const double n = norm(states_[j]);
    if (!(std::abs(n - 1.0) <= kNormTol)) {
      throw std::invalid_argument("Frame: state " + std::to_string(j) + " has norm " + std::to_string(n));
    }
  }
  const std::set<std::string> unique(labels_.begin(), labels_.end());
  if (unique.size() != labels_.size()) throw std::invalid_argument("Frame: labels are not unique");
}

Frame::Frame(std::size_t dim, const std::vector<ComplexVector>& states)
    : Frame(dim, states, default_labels(states.size())) {}

const char* to_string(KernelMode mode) {
  return mode == KernelMode::kExactInverse ? "exact-inverse" : "pseudo-inverse";
}

double WeightVector::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

GramKernel gram_kernel(const Frame& frame) {
  const std::size_t n = frame.size();
  ComplexMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    k(i, i) = std::norm(inner(frame.state(i), frame.state(i)));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double overlap = std::norm(inner(frame.state(i), frame.state(j)));
      k(i, j) = overlap;
      k(j, i) = overlap;
    }
  }

  GramKernel out;
  out.matrix = to_real_rows(k);
  const Svd s = singular_value_decomposition(k);
  out.sigma_max = s.sigma.front();
  out.sigma_min = s.sigma.back();
  const double cut = kKernelRelTol * out.sigma_max;
  out.rank = static_cast<std::size_t>(std::count_if(s.sigma.begin(), s.sigma.end(), [cut](double x) { return x > cut; }));

  const bool exact = n == frame.dim() * frame.dim() && out.sigma_min > cut;
  if (exact) {
    out.mode = KernelMode::kExactInverse;
    out.inverse = to_real_rows(invert(k));
  } else {
    out.mode = KernelMode::kPseudoInverse;
    out.inverse = to_real_rows(pseudo_invert(k, kKernelRelTol));
  }
  return out;
}

Covm covm(const Frame& frame) { return covm(frame, gram_kernel(frame)); }

Covm covm(const Frame& frame, const GramKernel& kernel) {
  const std::size_t n = frame.size();
  if (kernel.inverse.size() != n) throw std::invalid_argument("covm: kernel does not match frame");
  std::vector<ComplexMatrix> projectors;
  projectors.reserve(n);
  for (std::size_t l = 0; l < n; ++l) projectors.push_back(frame.projector(l));

  Covm out;
  out.mode = kernel.mode;
  out.rank = kernel.rank;
  out.dim = frame.dim();
  out.operators.reserve(n);
  // Gamma(j) = sum_l K^+(j, l) Pi_l equals row j of A^+, where column l of A
  // is vec(Pi_l). Inverting A instead of K = A^dagger A squares down the
  // condition number. The cut keeps the same rank as the kernel's.
  const std::size_t d = frame.dim();
  ComplexMatrix a(d * d, n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) a(r * d + c, l) = projectors[l](r, c);
    }
  }
  const ComplexMatrix a_plus = pseudo_invert(a, std::sqrt(kKernelRelTol));
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix gamma(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) gamma(r, c) = std::conj(a_plus(j, r * d + c));
    }
    // Hermitian by construction up to rounding; symmetrise.
    ComplexMatrix h = gamma + gamma.adjoint();
    h *= 0.5;
    out.operators.push_back(std::move(h));
  }
  return out;
}

WeightVector born_probabilities(const DensityOperator& rho, const Frame& frame) {
  require_dim(rho, frame.dim(), "born_probabilities");
  WeightVector w{std::vector<double>(frame.size()), WeightKind::kBornProbabilities};
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const ComplexVector rho_psi = rho.matrix() * std::span<const Complex>(frame.state(j));
    // PSD input makes the value nonnegative; clamp rounding noise at zero.
    w.values[j] = std::max(0.0, inner(frame.state(j), rho_psi).real());
  }
  return w;
}

WeightVector quasiprobabilities(const DensityOperator& rho, const Covm& covm) {
  require_dim(rho, covm.dim, "quasiprobabilities");
  WeightVector w{std::vector<double>(covm.operators.size()), WeightKind::kQuasiprobabilities};
  const ComplexMatrix& r = rho.matrix();
  for (std::size_t j = 0; j < covm.operators.size(); ++j) {
    const ComplexMatrix& g = covm.operators[j];
    Complex tr = 0.0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      for (std::size_t k = 0; k < r.cols(); ++k) tr += r(i, k) * g(k, i);
    }
    w.values[j] = tr.real();
  }
  return w;
}

WeightVector quasiprobabilities(const DensityOperator& rho, const Frame& frame) {
  return quasiprobabilities(rho, covm(frame));
}

Reconstruction reconstruct(const WeightVector& weights, const Covm& covm) {
  if (weights.kind != WeightKind::kBornProbabilities) {
    throw std::invalid_argument("reconstruct: expects Born-probability weights; use expand_with_projectors");
  }
  if (weights.values.size() != covm.operators.size()) {
    throw std::invalid_argument("reconstruct: " + std::to_string(weights.values.size()) + " weights for " +
                                std::to_string(covm.operators.size()) + " dual operators");
  }
  Reconstruction out{ComplexMatrix(covm.dim, covm.dim), covm.rank, covm.mode};
  for (std::size_t j = 0; j < weights.values.size(); ++j) out.rho += weights.values[j] * covm.operators[j];
  return out;
}

ComplexMatrix expand_with_projectors(const WeightVector& weights, const Frame& frame) {
  if (weights.values.size() != frame.size()) {
    throw std::invalid_argument("expand_with_projectors: weight count does not match frame size");
  }
  ComplexMatrix rho(frame.dim(), frame.dim());
  for (std::size_t j = 0; j < frame.size(); ++j) rho += weights.values[j] * frame.projector(j);
  return rho;
}

std::size_t completeness_rank(const Frame& frame) {
  const std::size_t d = frame.dim();
  ComplexMatrix vectorised(frame.size(), d * d);
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const ComplexMatrix p = frame.projector(j);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) vectorised(j, r * d + c) = p(r, c);
    }
  }
  return numerical_rank(vectorised, kKernelRelTol);
}

Frame tetrahedron_frame() {
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const double s2 = std::numbers::sqrt2;
  const double inv_s3 = 1.0 / std::numbers::sqrt3;
  std::vector<ComplexVector> states = {
      {0.0, 1.0},
      {s2 * inv_s3, inv_s3},
      {s2 * w * inv_s3, inv_s3},
      {s2 * w * w * inv_s3, inv_s3},
  };
  return Frame(2, std::move(states), {"psi1", "psi2", "psi3", "psi4"});
}

Frame pauli_frame() {
  const double h = 1.0 / std::numbers::sqrt2;
  const Complex i(0.0, 1.0);
  std::vector<ComplexVector> states = {
      {h, h},           // x+
      {h, -h},          // x-
      {i * h, h},       // y+
      {-i * h, h},      // y-
      {0.0, 1.0},       // z+
      {1.0, 0.0},       // z-
  };
  return Frame(2, std::move(states), {"x+", "x-", "y+", "y-", "z+", "z-"});
}

Frame computational_basis_frame(std::size_t dim) {
  std::vector<ComplexVector> states(dim, ComplexVector(dim, 0.0));
  for (std::size_t j = 0; j < dim; ++j) states[j][j] = 1.0;
  return Frame(dim, std::move(states));
}

}  // namespace qsk
