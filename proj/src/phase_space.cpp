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

#include "qsk/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qsk/linalg.hpp"

namespace qsk {

namespace {

constexpr double kSingularTol = 1e-10;
constexpr double kHermitianTol = 1e-8;

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

// exp(c x) for a nilpotent ladder power x; the truncated series is exact.
ComplexMatrix ladder_exponential(Complex c, const ComplexMatrix& x) {
  if (c == 0.0) return ComplexMatrix::identity(x.rows());
  return matrix_exponential(c * x);
}

ComplexMatrix squared(const ComplexMatrix& m) { return m * m; }

}  // namespace

GaussianFilterParams::GaussianFilterParams(Complex s, Complex p, Complex q) : s_(s), p_(p), q_(q) {
  if (!is_finite(s) || !is_finite(p) || !is_finite(q)) {
    throw std::invalid_argument("GaussianFilterParams: non-finite parameter");
  }
  const double ap = std::abs(p);
  const double aq = std::abs(q);
  if (std::abs(ap - aq) > 1e-12 * std::max(1.0, ap)) {
    throw std::invalid_argument("GaussianFilterParams: |p| = " + std::to_string(ap) + " differs from |q| = " +
                                std::to_string(aq));
  }
}

Complex GaussianFilterParams::denominator() const { return (1.0 + s_) * (1.0 + s_) - p_ * q_; }

bool GaussianFilterParams::construction_valid() const { return std::abs(denominator()) > kSingularTol; }

std::string Provenance::describe() const {
  switch (kind) {
    case ProvenanceKind::kFourier:
      return "fourier(beta=" + fmt(beta) + ")";
    case ProvenanceKind::kGaussian:
      return "gaussian(s=" + fmt(params->s()) + ", p=" + fmt(params->p()) + ", q=" + fmt(params->q()) + ")";
    case ProvenanceKind::kDisplaced:
      return "displaced(" + (base ? base->describe() : std::string("?")) + ", alpha=" + fmt(alpha) + ")";
  }
  return "unknown";
}

bool measure_hermitian(const ComplexMatrix& m, const FockSpace& space) {
  return hermiticity_defect(m.leading_block(space.validation_block())) < kHermitianTol;
}

Complex normal_displacement_element(std::size_t m, std::size_t n, Complex beta) {
  const Complex down = -beta;
  const Complex up = std::conj(beta);
  const double half_log = 0.5 * (std::lgamma(m + 1.0) + std::lgamma(n + 1.0));
  Complex sum = 0.0;
  for (std::size_t k = 0; k <= std::min(m, n); ++k) {
    const double log_coeff = half_log - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0) - std::lgamma(n - k + 1.0);
    sum += std::exp(log_coeff) * int_pow(down, m - k) * int_pow(up, n - k);
  }
  return sum;
}

QuasiStateOperator fourier_quasistate(Complex beta, const FockSpace& space) {
  const std::size_t n = space.dim();
  const double scale = std::exp(-std::norm(beta)) / std::numbers::pi;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = scale * normal_displacement_element(i, j, beta);
  }
  QuasiStateOperator out{std::move(m), space, {}, false};
  out.provenance.kind = ProvenanceKind::kFourier;
  out.provenance.beta = beta;
  out.hermitian = measure_hermitian(out.matrix, space);
  return out;
}

QuasiStateOperator gaussian_quasistate(const GaussianFilterParams& params, const FockSpace& space) {
  const Complex d = params.denominator();
  if (!(std::abs(d) > kSingularTol)) {
    throw std::domain_error("gaussian_quasistate: (1+s)^2 - pq vanishes for " +
                            Provenance{ProvenanceKind::kGaussian, {}, params, {}, nullptr}.describe() +
                            "; the quasistate is singular (Husimi-Kano limit)");
  }
  const Complex c0 = 2.0 / principal_sqrt(d);
  const Complex c_up = params.q() / d;
  const Complex c_down = params.p() / d;
  const Complex w = 1.0 - 2.0 * (1.0 + params.s()) / d;

  const ComplexMatrix up = ladder_exponential(c_up, squared(creation(space)));
  const ComplexMatrix down = ladder_exponential(c_down, squared(annihilation(space)));
  ComplexMatrix m = up * power_of_number(w, space) * down;
  m *= c0;

  QuasiStateOperator out{std::move(m), space, {}, false};
  out.provenance.kind = ProvenanceKind::kGaussian;
  out.provenance.params = params;
  out.hermitian = measure_hermitian(out.matrix, space);
  return out;
}

ComplexMatrix squeezed_thermal_operator(const SqueezedThermalParams& st, const FockSpace& space) {
  const Complex w = st.omega;
  const Complex t = st.tau * st.tau_conj;
  const Complex denom = 1.0 - t * w * w;
  if (!(std::abs(denom) > kSingularTol)) {
    throw std::domain_error("squeezed_thermal_operator: 1 - tau tau_conj omega^2 vanishes");
  }
  const Complex k = (1.0 - w * w) / denom;
  const Complex c0 = (1.0 - w) * principal_sqrt((1.0 - t) / denom);
  const ComplexMatrix up = ladder_exponential(-0.5 * st.tau * k, squared(creation(space)));
  const ComplexMatrix down = ladder_exponential(-0.5 * st.tau_conj * k, squared(annihilation(space)));
  ComplexMatrix m = up * power_of_number(w * (1.0 - t) / denom, space) * down;
  m *= c0;
  return m;
}

SqueezedThermalParams make_squeezed_thermal(Complex omega, Complex tau, Complex tau_conj) {
  SqueezedThermalParams st;
  st.omega = omega;
  st.tau = tau;
  st.tau_conj = tau_conj;
  if (!(std::abs(1.0 - omega) > kSingularTol)) {
    throw std::domain_error("make_squeezed_thermal: omega = 1 has no finite parameters");
  }
  st.r_aux = (1.0 + omega) / (1.0 - omega);
  st.n_bar = omega / (1.0 - omega);
  const double a = std::abs(tau);
  if (std::abs(tau_conj - std::conj(tau)) <= 1e-12 * std::max(1.0, a) && a < 1.0) {
    st.zeta = std::polar(std::atanh(a), std::arg(tau));
  }
  return st;
}

SqueezedThermalParams spq_to_squeezed_thermal(const GaussianFilterParams& params) {
  const Complex s = params.s();
  const Complex p = params.p();
  const Complex q = params.q();
  if ((p == 0.0) != (q == 0.0)) {
    throw std::invalid_argument("spq_to_squeezed_thermal: exactly one of p, q vanishes; tau/tau_conj is undefined");
  }
  Complex r = principal_sqrt(s * s - p * q);
  if ((s * std::conj(r)).real() < 0.0) r = -r;
  if (!(std::abs(r + 1.0) > kSingularTol)) {
    throw std::domain_error("spq_to_squeezed_thermal: sqrt(s^2 - pq) = -1 makes omega infinite");
  }
  const Complex omega = (r - 1.0) / (r + 1.0);

  Complex tau = 0.0;
  Complex tau_conj = 0.0;
  if (p != 0.0) {
    const Complex sr = s + r;
    if (!(std::abs(sr) > kSingularTol)) {
      throw std::domain_error("spq_to_squeezed_thermal: s + sqrt(s^2 - pq) vanishes");
    }
    tau = -q / sr;
    tau_conj = -p / sr;
  }
  SqueezedThermalParams st = make_squeezed_thermal(omega, tau, tau_conj);
  st.r_aux = r;
  st.n_bar = 0.5 * (r - 1.0);
  return st;
}

GaussianFilterParams squeezed_thermal_to_spq(const SqueezedThermalParams& st) {
  const Complex w = st.omega;
  const Complex t = st.tau * st.tau_conj;
  if (!(std::abs(1.0 - w) > kSingularTol)) throw std::domain_error("squeezed_thermal_to_spq: omega = 1");
  if (!(std::abs(1.0 - t) > kSingularTol)) throw std::domain_error("squeezed_thermal_to_spq: tau tau_conj = 1");
  const Complex denom = (1.0 - w) * (1.0 - t);
  const Complex p = -2.0 * (1.0 + w) * st.tau_conj / denom;
  const Complex q = -2.0 * (1.0 + w) * st.tau / denom;
  const Complex s = 2.0 * (1.0 + w * t) / denom - 1.0;
  return GaussianFilterParams(s, p, q);
}

std::vector<Complex> s_param_eigenvalues(Complex s, std::size_t n_max) {
  if (!(std::abs(1.0 + s) > kSingularTol)) throw std::domain_error("s_param_eigenvalues: s = -1");
  const Complex lead = 2.0 / (1.0 + s);
  const Complex ratio = -(1.0 - s) / (1.0 + s);
  std::vector<Complex> out;
  out.reserve(n_max);
  Complex power = 1.0;
  for (std::size_t n = 0; n < n_max; ++n) {
    out.push_back(lead * power);
    power *= ratio;
  }
  return out;
}

Complex analytic_q(const GaussianFilterParams& params, Complex alpha) {
  const Complex d = params.denominator();
  if (!(std::abs(d) > kSingularTol)) throw std::domain_error("analytic_q: (1+s)^2 - pq vanishes");
  const Complex ac = std::conj(alpha);
  const Complex exponent =
      (-2.0 * (1.0 + params.s()) * std::norm(alpha) + params.q() * ac * ac + params.p() * alpha * alpha) / d;
  return 2.0 / (std::numbers::pi * principal_sqrt(d)) * std::exp(exponent);
}

Complex numeric_q(const QuasiStateOperator& op, Complex alpha) {
  const ComplexVector c = coherent_vector(alpha, op.space);
  const ComplexVector mc = op.matrix * std::span<const Complex>(c);
  return inner(c, mc) / std::numbers::pi;
}

QuasiStateOperator displaced_quasistate(const QuasiStateOperator& op, Complex alpha) {
  const ComplexMatrix d = displacement(alpha, op.space);
  QuasiStateOperator out{d * op.matrix * d.adjoint(), op.space, {}, false};
  out.provenance.kind = ProvenanceKind::kDisplaced;
  out.provenance.alpha = alpha;
  out.provenance.base = std::make_shared<const Provenance>(op.provenance);
  out.hermitian = measure_hermitian(out.matrix, op.space);
  return out;
}

Complex filter_value(const GaussianFilterParams& params, Complex beta) {
  const Complex bc = std::conj(beta);
  return std::exp(-0.5 * (1.0 - params.s()) * std::norm(beta) - 0.25 * params.p() * beta * beta -
                  0.25 * params.q() * bc * bc);
}

GaussianFilterParams table_preset(std::string_view name) {
  if (name == "glauber-sudarshan") return {1.0, 0.0, 0.0};
  if (name == "wigner-weyl") return {0.0, 0.0, 0.0};
  if (name == "husimi-kano") return {-1.0, 0.0, 0.0};
  if (name == "agarwal-wolf-plus") return {0.0, 1.0, -1.0};
  if (name == "agarwal-wolf-minus") return {0.0, -1.0, 1.0};
  throw std::invalid_argument("table_preset: unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> table_preset_names() {
  return {"glauber-sudarshan", "wigner-weyl", "husimi-kano", "agarwal-wolf-plus", "agarwal-wolf-minus"};
}

}  // namespace qsk
