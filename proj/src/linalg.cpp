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

#include "qsk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qsk {

namespace {

constexpr int kMaxSweeps = 100;

// Unitary 2x2 block acting on columns (p, q) that diagonalises the Hermitian
// pair [[a, c], [conj(c), b]]. Layout: {u_pp, u_pq, u_qp, u_qq}.
struct JacobiRotation {
  Complex pp, pq, qp, qq;
};

JacobiRotation jacobi_rotation(double a, double b, Complex c) {
  const double abs_c = std::abs(c);
  const Complex phase_conj = std::conj(c) / abs_c;
  const double theta = (b - a) / (2.0 * abs_c);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double cs = 1.0 / std::sqrt(1.0 + t * t);
  const double sn = t * cs;
  return {cs, sn, -sn * phase_conj, cs * phase_conj};
}

void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const JacobiRotation& r) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Complex mp = m(k, p);
    const Complex mq = m(k, q);
    m(k, p) = mp * r.pp + mq * r.qp;
    m(k, q) = mp * r.pq + mq * r.qq;
  }
}

void rotate_rows_adjoint(ComplexMatrix& m, std::size_t p, std::size_t q, const JacobiRotation& r) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const Complex mp = m(p, k);
    const Complex mq = m(q, k);
    m(p, k) = std::conj(r.pp) * mp + std::conj(r.qp) * mq;
    m(q, k) = std::conj(r.pq) * mp + std::conj(r.qq) * mq;
  }
}

bool strictly_triangular(const ComplexMatrix& m) {
  bool upper = true;
  bool lower = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == Complex(0.0, 0.0)) continue;
      if (j <= i) upper = false;
      if (j >= i) lower = false;
    }
  }
  return upper || lower;
}

Svd svd_tall(const ComplexMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  ComplexMatrix w = m;
  ComplexMatrix v = ComplexMatrix::identity(cols);
  constexpr double kOrthTol = 1e-15;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += std::norm(w(k, p));
          beta += std::norm(w(k, q));
          gamma += std::conj(w(k, p)) * w(k, q);
        }
        if (std::abs(gamma) <= kOrthTol * std::sqrt(alpha * beta) || std::abs(gamma) < 1e-300) continue;
        const JacobiRotation r = jacobi_rotation(alpha, beta, gamma);
        rotate_columns(w, p, q, r);
        rotate_columns(v, p, q, r);
        rotated = true;
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < rows; ++k) s += std::norm(w(k, j));
    sigma[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sigma[a] > sigma[b]; });

  Svd out{ComplexMatrix(rows, cols), std::vector<double>(cols), ComplexMatrix(cols, cols)};
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t src = order[j];
    out.sigma[j] = sigma[src];
    for (std::size_t k = 0; k < rows; ++k) {
      out.u(k, j) = sigma[src] > 0.0 ? w(k, src) / sigma[src] : Complex(0.0, 0.0);
    }
    for (std::size_t k = 0; k < cols; ++k) out.v(k, j) = v(k, src);
  }
  return out;
}

}  // namespace

Spectrum hermitian_eigen(const ComplexMatrix& m, double hermitian_tol) {
  if (!m.is_square()) throw std::invalid_argument("hermitian_eigen: matrix is not square");
  const double defect = hermiticity_defect(m);
  if (!(defect <= hermitian_tol)) {
    throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const std::size_t n = m.rows();
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.norm_frobenius();

  for (int sweep = 0; sweep < kMaxSweeps && scale > 0.0; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex c = a(p, q);
        if (std::abs(c) <= 1e-18 * scale) continue;
        const JacobiRotation r = jacobi_rotation(a(p, p).real(), a(q, q).real(), c);
        rotate_columns(a, p, q, r);
        rotate_rows_adjoint(a, p, q, r);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        rotate_columns(v, p, q, r);
        rotated = true;
      }
    }
    if (!rotated) break;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
  Spectrum out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
  }
  return out;
}

Svd singular_value_decomposition(const ComplexMatrix& m) {
  if (m.rows() >= m.cols()) return svd_tall(m);
  Svd t = svd_tall(m.adjoint());
  return Svd{std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

std::size_t numerical_rank(const ComplexMatrix& m, double rel_tol) {
  const Svd s = singular_value_decomposition(m);
  if (s.sigma.empty() || s.sigma.front() == 0.0) return 0;
  const double cut = rel_tol * s.sigma.front();
  return static_cast<std::size_t>(
      std::count_if(s.sigma.begin(), s.sigma.end(), [cut](double x) { return x > cut; }));
}

ComplexMatrix invert(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("invert: matrix is not square");
  const std::size_t n = m.rows();
  const Svd s = singular_value_decomposition(m);
  if (n == 0 || s.sigma.front() == 0.0 || s.sigma.back() < 1e-12 * s.sigma.front()) {
    throw std::domain_error("invert: matrix is numerically singular");
  }

  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(pivot, k), a(col, k));
        std::swap(inv(pivot, k), inv(col, k));
      }
    }
    const Complex d = a(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      a(col, k) /= d;
      inv(col, k) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = a(r, col);
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(col, k);
        inv(r, k) -= f * inv(col, k);
      }
    }
  }
  return inv;
}

ComplexMatrix pseudo_invert(const ComplexMatrix& m, double rel_tol) {
  const Svd s = singular_value_decomposition(m);
  ComplexMatrix out(m.cols(), m.rows());
  if (s.sigma.empty() || s.sigma.front() == 0.0) return out;
  const double cut = rel_tol * s.sigma.front();
  for (std::size_t k = 0; k < s.sigma.size(); ++k) {
    if (s.sigma[k] <= cut) continue;
    const double inv_sigma = 1.0 / s.sigma[k];
    for (std::size_t i = 0; i < m.cols(); ++i) {
      const Complex vik = s.v(i, k) * inv_sigma;
      for (std::size_t j = 0; j < m.rows(); ++j) out(i, j) += vik * std::conj(s.u(j, k));
    }
  }
  return out;
}

ComplexMatrix matrix_exponential(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("matrix_exponential: matrix is not square");
  const std::size_t n = m.rows();

  if (strictly_triangular(m)) {
    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
      term = term * m;
      term *= 1.0 / static_cast<double>(k);
      if (term.max_abs() == 0.0) break;
      sum += term;
    }
    return sum;
  }

  const double norm = m.norm_one();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix a = m * Complex(std::ldexp(1.0, -squarings), 0.0);

  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k < 64; ++k) {
    term = term * a;
    term *= 1.0 / static_cast<double>(k);
    sum += term;
    if (term.norm_one() <= 1e-16 * sum.norm_one()) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace qsk
