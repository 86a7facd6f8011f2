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

#ifndef QSK_HOMODYNE_HPP
#define QSK_HOMODYNE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qsk/fock.hpp"
#include "qsk/matrix.hpp"

namespace qsk {

// Quadrature convention: x[phi] = exp(i phi) a + exp(-i phi) a^dag, so the
// vacuum has <x^2> = 1 and a coherent state |alpha> has mean
// 2 Re(alpha exp(i phi)).

/// One homodyne sample: quadrature value x at phase phi in [-pi/2, pi/2).
struct QuadratureRecord {
  double x = 0.0;
  double phi = 0.0;
};

/// Throws std::invalid_argument for non-finite values or phi outside
/// [-pi/2, pi/2).
void check_quadrature(const QuadratureRecord& record);

/// Samples of the coherent state |alpha> with uniformly drawn phases.
/// Deterministic for a given (alpha, n, seed). Throws std::invalid_argument
/// for n = 0.
std::vector<QuadratureRecord> sample_quadratures(Complex alpha, std::size_t n, std::uint64_t seed);

/// Symmetric radial grid r in [-r_max, r_max]. The step is shrunk slightly
/// when needed so that it divides 2 r_max evenly.
struct HomodyneGrid {
  double r_max = 6.0;
  double r_step = 0.05;
};

struct HomodyneDiagnostics {
  double trace = 0.0;
  double min_eigenvalue = 0.0;
  std::size_t samples = 0;
  std::size_t grid_points = 0;
};

struct HomodyneEstimate {
  /// Hermitian part of the raw estimate.
  ComplexMatrix rho;
  HomodyneDiagnostics diagnostics;
  /// Per-entry standard error from splitting the samples into `folds`
  /// contiguous groups; present when folds >= 2.
  std::optional<std::vector<std::vector<double>>> standard_errors;
};

/// Sampling estimator
///
///   rho = sum_r dr |r| exp(r^2/2) (pi/N) sum_j exp(i r x_j)
///         Delta_F(i r exp(-i phi_j)),
///
/// evaluated with the trapezoid rule. The |r| factor is the area element of
/// beta = i r exp(-i phi) with r real and phi over a half turn.
/// Work is split over grid points; see parallel_for.
/// Throws std::invalid_argument for an empty sample set, a nonpositive grid,
/// folds == 1 or more folds than samples.
HomodyneEstimate homodyne_reconstruct(const std::vector<QuadratureRecord>& samples, const FockSpace& space,
                                      const HomodyneGrid& grid = {}, std::size_t folds = 0);

/// Reads "x,phi" CSV. Lines starting with '#' and blank lines are skipped;
/// the first remaining line must be the header. Throws std::invalid_argument
/// with the offending line number.
std::vector<QuadratureRecord> read_quadrature_csv(std::istream& in);
void write_quadrature_csv(std::ostream& out, const std::vector<QuadratureRecord>& samples);

}  // namespace qsk

#endif  // QSK_HOMODYNE_HPP
