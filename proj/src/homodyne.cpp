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

#include "qsk/homodyne.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "qsk/linalg.hpp"
#include "qsk/parallel.hpp"
#include "qsk/phase_space.hpp"

namespace qsk {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& field, std::size_t line) {
  const std::string t = trim(field);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) {
    throw std::invalid_argument("quadrature CSV line " + std::to_string(line) + ": cannot parse '" + t + "'");
  }
  return v;
}

}  // namespace

void check_quadrature(const QuadratureRecord& record) {
  if (!std::isfinite(record.x) || !std::isfinite(record.phi)) {
    throw std::invalid_argument("quadrature record has non-finite values");
  }
  if (!(record.phi >= -kHalfPi && record.phi < kHalfPi)) {
    throw std::invalid_argument("quadrature phase " + std::to_string(record.phi) + " outside [-pi/2, pi/2)");
  }
}

std::vector<QuadratureRecord> sample_quadratures(Complex alpha, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_quadratures: n must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(-kHalfPi, kHalfPi);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<QuadratureRecord> out(n);
  for (auto& rec : out) {
    double phi = phase(rng);
    // uniform_real_distribution may round up to the open upper bound.
    if (phi >= kHalfPi) phi = -kHalfPi;
    rec.phi = phi;
    rec.x = 2.0 * (alpha * std::polar(1.0, phi)).real() + noise(rng);
  }
  return out;
}

HomodyneEstimate homodyne_reconstruct(const std::vector<QuadratureRecord>& samples, const FockSpace& space,
                                      const HomodyneGrid& grid, std::size_t folds) {
  if (samples.empty()) throw std::invalid_argument("homodyne_reconstruct: no samples");
  if (!(grid.r_max > 0.0) || !(grid.r_step > 0.0)) {
    throw std::invalid_argument("homodyne_reconstruct: r_max and r_step must be positive");
  }
  if (folds == 1 || folds > samples.size()) {
    throw std::invalid_argument("homodyne_reconstruct: fold count must be 0 or between 2 and the sample count");
  }
  for (const auto& rec : samples) check_quadrature(rec);

  const std::size_t n_dim = space.dim();
  const std::size_t n_samples = samples.size();
  const std::size_t intervals = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(2.0 * grid.r_max / grid.r_step - 1e-9)));
  const double h = 2.0 * grid.r_max / static_cast<double>(intervals);
  const std::size_t n_r = intervals + 1;
  const std::size_t n_offsets = 2 * n_dim - 1;  // d = n - m in [-(N-1), N-1]
  const std::size_t groups = folds == 0 ? 1 : folds;

  std::vector<std::size_t> fold_of(n_samples, 0);
  std::vector<double> fold_size(groups, 0.0);
  for (std::size_t j = 0; j < n_samples; ++j) {
    fold_of[j] = folds == 0 ? 0 : j * folds / n_samples;
    fold_size[fold_of[j]] += 1.0;
  }
  std::vector<Complex> phase_step(n_samples);
  for (std::size_t j = 0; j < n_samples; ++j) phase_step[j] = std::polar(1.0, samples[j].phi);

  // moments[(ir * groups + g) * n_offsets + (d + N - 1)] = sum_j exp(i r x_j + i d phi_j)
  std::vector<Complex> moments(n_r * groups * n_offsets, 0.0);
  parallel_for(n_r, [&](std::size_t begin, std::size_t end) {
    for (std::size_t ir = begin; ir < end; ++ir) {
      const double r = -grid.r_max + h * static_cast<double>(ir);
      if (r == 0.0) continue;
      for (std::size_t j = 0; j < n_samples; ++j) {
        Complex* row = &moments[(ir * groups + fold_of[j]) * n_offsets + (n_dim - 1)];
        const Complex base = std::polar(1.0, r * samples[j].x);
        row[0] += base;
        Complex up = base;
        Complex down = base;
        const Complex step = phase_step[j];
        const Complex back = std::conj(step);
        for (std::size_t d = 1; d < n_dim; ++d) {
          up *= step;
          down *= back;
          row[d] += up;
          row[-static_cast<std::ptrdiff_t>(d)] += down;
        }
      }
    }
  });

  std::vector<ComplexMatrix> per_group(groups, ComplexMatrix(n_dim, n_dim));
  for (std::size_t ir = 0; ir < n_r; ++ir) {
    const double r = -grid.r_max + h * static_cast<double>(ir);
    if (r == 0.0) continue;
    const double trapezoid = (ir == 0 || ir + 1 == n_r) ? 0.5 : 1.0;
    const double weight = trapezoid * h * std::abs(r) * std::exp(-0.5 * r * r);
    const Complex beta(0.0, r);
    ComplexMatrix pattern(n_dim, n_dim);
    for (std::size_t m = 0; m < n_dim; ++m) {
      for (std::size_t n = 0; n < n_dim; ++n) pattern(m, n) = weight * normal_displacement_element(m, n, beta);
    }
    for (std::size_t g = 0; g < groups; ++g) {
      const Complex* row = &moments[(ir * groups + g) * n_offsets + (n_dim - 1)];
      ComplexMatrix& acc = per_group[g];
      for (std::size_t m = 0; m < n_dim; ++m) {
        for (std::size_t n = 0; n < n_dim; ++n) {
          const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(n) - static_cast<std::ptrdiff_t>(m);
          acc(m, n) += pattern(m, n) * row[d];
        }
      }
    }
  }

  ComplexMatrix raw(n_dim, n_dim);
  for (std::size_t g = 0; g < groups; ++g) raw += per_group[g];
  raw *= 1.0 / static_cast<double>(n_samples);

  HomodyneEstimate out;
  out.rho = raw + raw.adjoint();
  out.rho *= 0.5;
  out.diagnostics.trace = out.rho.trace().real();
  out.diagnostics.min_eigenvalue = hermitian_eigen(out.rho).values.back();
  out.diagnostics.samples = n_samples;
  out.diagnostics.grid_points = n_r;

  if (folds >= 2) {
    std::vector<ComplexMatrix> estimates;
    estimates.reserve(groups);
    for (std::size_t g = 0; g < groups; ++g) {
      ComplexMatrix e = per_group[g] + per_group[g].adjoint();
      e *= 0.5 / fold_size[g];
      estimates.push_back(std::move(e));
    }
    std::vector<std::vector<double>> se(n_dim, std::vector<double>(n_dim, 0.0));
    const double f = static_cast<double>(groups);
    for (std::size_t m = 0; m < n_dim; ++m) {
      for (std::size_t n = 0; n < n_dim; ++n) {
        Complex mean = 0.0;
        for (const auto& e : estimates) mean += e(m, n);
        mean /= f;
        double var = 0.0;
        for (const auto& e : estimates) var += std::norm(e(m, n) - mean);
        var /= (f - 1.0);
        se[m][n] = std::sqrt(var / f);
      }
    }
    out.standard_errors = std::move(se);
  }
  return out;
}

std::vector<QuadratureRecord> read_quadrature_csv(std::istream& in) {
  std::vector<QuadratureRecord> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!header_seen) {
      if (t != "x,phi") {
        throw std::invalid_argument("quadrature CSV line " + std::to_string(line_no) + ": expected header 'x,phi'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = t.find(',');
    if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
      throw std::invalid_argument("quadrature CSV line " + std::to_string(line_no) + ": expected two fields");
    }
    QuadratureRecord rec{parse_number(t.substr(0, comma), line_no), parse_number(t.substr(comma + 1), line_no)};
    try {
      check_quadrature(rec);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("quadrature CSV line " + std::to_string(line_no) + ": " + e.what());
    }
    out.push_back(rec);
  }
  if (!header_seen) throw std::invalid_argument("quadrature CSV: missing header 'x,phi'");
  return out;
}

void write_quadrature_csv(std::ostream& out, const std::vector<QuadratureRecord>& samples) {
  out << "x,phi\n";
  const auto old = out.precision(17);
  for (const auto& rec : samples) out << rec.x << ',' << rec.phi << '\n';
  out.precision(old);
}

}  // namespace qsk
