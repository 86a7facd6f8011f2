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

#ifndef QSK_PHASE_SPACE_HPP
#define QSK_PHASE_SPACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsk/fock.hpp"
#include "qsk/matrix.hpp"

namespace qsk {

/// Gaussian filter Omega(beta) = exp(-(1-s)/2 |beta|^2 - p/4 beta^2
/// - q/4 conj(beta)^2) with |p| = |q|.
///
/// The normally ordered quasistate belonging to the filter is
///
///   Delta = 2 :exp((-2(1+s) n + q a^dag^2 + p a^2) / D): / sqrt(D),
///   D = (1+s)^2 - pq,
///
/// which needs D != 0. Parameter sets with D = 0 (the Husimi-Kano point
/// s = -1, p = q = 0) are representable, since the filter itself is finite,
/// but `construction_valid()` reports false for them.
class GaussianFilterParams {
 public:
  /// Throws std::invalid_argument unless ||p| - |q|| <= 1e-12 max(1, |p|).
  GaussianFilterParams(Complex s, Complex p, Complex q);

  Complex s() const { return s_; }
  Complex p() const { return p_; }
  Complex q() const { return q_; }

  /// (1+s)^2 - pq.
  Complex denominator() const;
  bool construction_valid() const;

 private:
  Complex s_;
  Complex p_;
  Complex q_;
};

/// Squeezed thermal-like parametrisation Delta = S W S^dag with
/// W = (1 - omega) omega^n.
///
/// `tau_conj` is an independent complex number: it equals conj(tau) only for
/// q = conj(p). The product tau * tau_conj takes the role of |tau|^2, so the
/// relations stay algebraic for complex and Agarwal-Wolf parameters.
struct SqueezedThermalParams {
  Complex omega;
  Complex tau;
  Complex tau_conj;
  /// sqrt(s^2 - pq) on the branch with Re(s conj(r)) >= 0.
  Complex r_aux;
  /// omega / (1 - omega), a generalised mean thermal photon number.
  Complex n_bar;
  /// exp(i arg tau) artanh|tau|; only defined when tau_conj = conj(tau) and
  /// |tau| < 1.
  std::optional<Complex> zeta;
};

enum class ProvenanceKind { kFourier, kGaussian, kDisplaced };

/// How a quasistate matrix was built. Displaced quasistates keep a pointer to
/// the provenance of the operator they were displaced from.
struct Provenance {
  ProvenanceKind kind = ProvenanceKind::kFourier;
  Complex beta{};                             // kFourier
  std::optional<GaussianFilterParams> params;  // kGaussian
  Complex alpha{};                            // kDisplaced
  std::shared_ptr<const Provenance> base;     // kDisplaced

  std::string describe() const;
};

/// A (generally non-positive, possibly non-Hermitian) operator in a
/// truncated Fock space. `hermitian` is measured on the leading half-block
/// with tolerance 1e-8; it is never assumed.
struct QuasiStateOperator {
  ComplexMatrix matrix;
  FockSpace space;
  Provenance provenance;
  bool hermitian = false;
};

/// (exp(-|beta|^2)/pi) exp(-beta a^dag) exp(conj(beta) a), the normally ordered
/// displacement scaled into a quasistate. Equals
/// exp(-|beta|^2/2) D(-beta) / pi up to truncation.
QuasiStateOperator fourier_quasistate(Complex beta, const FockSpace& space);

/// Closed-form matrix element <m| exp(-beta a^dag) exp(conj(beta) a) |n>.
Complex normal_displacement_element(std::size_t m, std::size_t n, Complex beta);

/// c0 exp(c+ a^dag^2) w^n exp(c- a^2) with c0 = 2/sqrt(D), c+ = q/D,
/// c- = p/D, w = 1 - 2(1+s)/D, obtained from the normally ordered form with
/// :exp(lambda n): = (1 + lambda)^n. The truncated matrix coincides with the
/// leading block of the untruncated operator.
/// Throws std::domain_error when |D| <= 1e-10.
QuasiStateOperator gaussian_quasistate(const GaussianFilterParams& params, const FockSpace& space);

/// The same operator assembled from squeezed-thermal parameters:
/// (1-w) sqrt((1-t)/(1-t w^2)) exp(-tau k a^dag^2 / 2) x
/// (w (1-t)/(1-t w^2))^n exp(-tau_conj k a^2 / 2), t = tau tau_conj,
/// k = (1 - w^2)/(1 - t w^2). Throws std::domain_error when 1 - t w^2
/// vanishes.
ComplexMatrix squeezed_thermal_operator(const SqueezedThermalParams& st, const FockSpace& space);

/// r = sqrt(s^2 - pq), omega = (r-1)/(r+1), tau = -q/(s+r),
/// tau_conj = -p/(s+r). Throws std::domain_error when r = -1 and
/// std::invalid_argument when exactly one of p, q vanishes.
SqueezedThermalParams spq_to_squeezed_thermal(const GaussianFilterParams& params);

/// Inverse map: p = -2(1+w) tau_conj / ((1-w)(1-t)),
/// q = -2(1+w) tau / ((1-w)(1-t)), s + 1 = 2(1 + w t) / ((1-w)(1-t)).
/// Throws std::domain_error when omega = 1 or tau tau_conj = 1.
GaussianFilterParams squeezed_thermal_to_spq(const SqueezedThermalParams& st);

/// Builds the full parameter record (r, n_bar, zeta) from omega and tau.
SqueezedThermalParams make_squeezed_thermal(Complex omega, Complex tau, Complex tau_conj);

/// (2/(1+s)) (-(1-s)/(1+s))^n for n = 0 .. n_max-1. Throws std::domain_error
/// at s = -1.
std::vector<Complex> s_param_eigenvalues(Complex s, std::size_t n_max);

/// Closed-form Q function of the Gaussian quasistate,
/// 2/(pi sqrt(D)) exp((-2(1+s)|alpha|^2 + q conj(alpha)^2 + p alpha^2) / D).
Complex analytic_q(const GaussianFilterParams& params, Complex alpha);

/// <alpha|Delta|alpha> / pi with a truncated coherent vector.
Complex numeric_q(const QuasiStateOperator& op, Complex alpha);

/// D(alpha) Delta D(alpha)^dag.
QuasiStateOperator displaced_quasistate(const QuasiStateOperator& op, Complex alpha);

/// Omega(beta) for the filter; finite for every parameter set.
Complex filter_value(const GaussianFilterParams& params, Complex beta);

/// glauber-sudarshan (1,0,0), wigner-weyl (0,0,0), husimi-kano (-1,0,0),
/// agarwal-wolf-plus (0,1,-1), agarwal-wolf-minus (0,-1,1).
/// Throws std::invalid_argument for other names.
GaussianFilterParams table_preset(std::string_view name);
std::vector<std::string> table_preset_names();

/// True when the matrix is Hermitian within 1e-8 on the leading half-block.
bool measure_hermitian(const ComplexMatrix& m, const FockSpace& space);

}  // namespace qsk

#endif  // QSK_PHASE_SPACE_HPP
