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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "qsk/fock.hpp"
#include "qsk/linalg.hpp"
#include "qsk/phase_space.hpp"

namespace qsk {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Complex> alpha_grid(std::size_t per_axis, double radius) {
  std::vector<Complex> out;
  for (std::size_t i = 0; i < per_axis; ++i) {
    for (std::size_t j = 0; j < per_axis; ++j) {
      const double x = -radius + 2.0 * radius * i / (per_axis - 1);
      const double y = -radius + 2.0 * radius * j / (per_axis - 1);
      if (std::hypot(x, y) <= radius + 1e-12) out.emplace_back(x, y);
    }
  }
  return out;
}

GaussianFilterParams random_valid_params(std::mt19937_64& rng) {
  const auto [s, p, q] = oracle::random_valid_spq(rng);
  return {s, p, q};
}

TEST(GaussianFilterParamsTest, Validation) {
  EXPECT_THROW(GaussianFilterParams(0.0, 1.0, 0.5), std::invalid_argument);
  EXPECT_THROW(GaussianFilterParams(NAN, 0.0, 0.0), std::invalid_argument);
  EXPECT_NO_THROW(GaussianFilterParams(0.0, Complex(0.0, 1.0), -1.0));
  EXPECT_FALSE(table_preset("husimi-kano").construction_valid());
  EXPECT_TRUE(table_preset("wigner-weyl").construction_valid());
}

TEST(TablePresetTest, Values) {
  const auto check = [](const char* name, double s, double p, double q) {
    const GaussianFilterParams g = table_preset(name);
    EXPECT_EQ(g.s(), Complex(s)) << name;
    EXPECT_EQ(g.p(), Complex(p)) << name;
    EXPECT_EQ(g.q(), Complex(q)) << name;
  };
  check("glauber-sudarshan", 1, 0, 0);
  check("wigner-weyl", 0, 0, 0);
  check("husimi-kano", -1, 0, 0);
  check("agarwal-wolf-plus", 0, 1, -1);
  check("agarwal-wolf-minus", 0, -1, 1);
  EXPECT_THROW(table_preset("wigner"), std::invalid_argument);
}

TEST(FilterValueTest, Examples) {
  EXPECT_EQ(filter_value(table_preset("wigner-weyl"), 0.0), Complex(1.0));
  for (Complex b : {Complex(0.3, 0.1), Complex(-2.0, 1.0)}) {
    EXPECT_NEAR(std::abs(filter_value(table_preset("glauber-sudarshan"), b) - 1.0), 0.0, 1e-15);
  }
  EXPECT_NEAR(std::abs(filter_value(table_preset("husimi-kano"), 1.0) - std::exp(-1.0)), 0.0, 1e-15);
  // Quadratic terms: p multiplies beta^2 and q multiplies conj(beta)^2.
  const Complex b(0.0, 1.0);
  EXPECT_NEAR(std::abs(filter_value(GaussianFilterParams(1.0, 4.0, 4.0), b) - std::exp(2.0)), 0.0, 1e-12);
  // beta = 1 + i: beta^2 = 2i, conj(beta)^2 = -2i, both quadratic terms give -2.
  EXPECT_NEAR(std::abs(filter_value(GaussianFilterParams(1.0, Complex(0.0, -4.0), Complex(0.0, 4.0)), Complex(1.0, 1.0)) -
                       std::exp(-4.0)),
              0.0, 1e-12);
}

TEST(NormalOrderingIdentityTest, BruteForceSeries) {
  const FockSpace space(8);
  for (Complex lambda : {Complex(-0.5), Complex(0.3), Complex(1.0, 1.0)}) {
    const ComplexMatrix series = oracle::normal_ordered_exp_number(lambda, 8);
    EXPECT_LT(max_abs_diff(series, power_of_number(1.0 + lambda, space)), 1e-13) << lambda;
  }
}

TEST(FourierQuasistateTest, ZeroIsScaledIdentity) {
  const QuasiStateOperator f = fourier_quasistate(0.0, FockSpace(10));
  ComplexMatrix expected = ComplexMatrix::identity(10);
  expected *= 1.0 / kPi;
  EXPECT_LT(max_abs_diff(f.matrix, expected), 1e-15);
  EXPECT_TRUE(f.hermitian);
  EXPECT_EQ(f.provenance.kind, ProvenanceKind::kFourier);
}

TEST(FourierQuasistateTest, RescaledIsUnitaryAndMatchesDisplacement) {
  const FockSpace space(30);
  const Complex beta(0.4, 0.2);
  const QuasiStateOperator f = fourier_quasistate(beta, space);
  ComplexMatrix u = f.matrix;
  u *= kPi * std::exp(0.5 * std::norm(beta));
  EXPECT_LT((u.adjoint() * u - ComplexMatrix::identity(30)).leading_block(15).max_abs(), 1e-8);
  EXPECT_LT(max_abs_diff(u.leading_block(15), displacement(-beta, space).leading_block(15)), 1e-8);
}

TEST(FourierQuasistateTest, AdjointIsNegatedArgument) {
  std::mt19937_64 rng(21);
  const FockSpace space(20);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex beta = oracle::random_complex(rng, 0.6);
    EXPECT_LT(max_abs_diff(fourier_quasistate(beta, space).matrix.adjoint(), fourier_quasistate(-beta, space).matrix), 1e-10);
  }
}

TEST(FourierQuasistateTest, ElementMatchesLadderProduct) {
  const std::size_t n = 12;
  const Complex beta(0.3, -0.7);
  const ComplexMatrix a = oracle::lowering(n);
  const ComplexMatrix product = oracle::naive_product(oracle::series_exp(-beta * a.adjoint()), oracle::series_exp(std::conj(beta) * a));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(std::abs(normal_displacement_element(i, j, beta) - product(i, j)), 0.0, 1e-12);
  }
}

TEST(GaussianQuasistateTest, VacuumAndParity) {
  const FockSpace space(40);
  const QuasiStateOperator vac = gaussian_quasistate(table_preset("glauber-sudarshan"), space);
  ComplexMatrix proj(40, 40);
  proj(0, 0) = 1.0;
  EXPECT_LT(max_abs_diff(vac.matrix, proj), 1e-10);

  const QuasiStateOperator w = gaussian_quasistate(table_preset("wigner-weyl"), space);
  for (std::size_t n = 0; n < 40; ++n) {
    for (std::size_t m = 0; m < 40; ++m) {
      const double expected = n == m ? 2.0 * (n % 2 == 0 ? 1.0 : -1.0) : 0.0;
      EXPECT_NEAR(std::abs(w.matrix(n, m) - expected), 0.0, 1e-12);
    }
  }
  EXPECT_TRUE(w.hermitian);
  EXPECT_EQ(w.provenance.kind, ProvenanceKind::kGaussian);
}

TEST(GaussianQuasistateTest, RejectsHusimiLimit) {
  EXPECT_THROW(gaussian_quasistate(table_preset("husimi-kano"), FockSpace(10)), std::domain_error);
}

TEST(GaussianQuasistateTest, AgarwalWolfAgainstAnalyticQ) {
  const FockSpace space(40);
  for (const char* name : {"agarwal-wolf-plus", "agarwal-wolf-minus"}) {
    const GaussianFilterParams g = table_preset(name);
    const QuasiStateOperator op = gaussian_quasistate(g, space);
    EXPECT_FALSE(op.hermitian);
    double max_phase = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        const Complex a(-1.5 + 0.75 * i, -1.5 + 0.75 * j);
        const Complex expected = analytic_q(g, a);
        EXPECT_LT(std::abs(numeric_q(op, a) - expected), 1e-6) << name << ' ' << a;
        max_phase = std::max(max_phase, std::abs(std::arg(expected)));
      }
    }
    EXPECT_GT(max_phase, 0.1) << name;
  }
}

TEST(GaussianQuasistateTest, HermitianForConjugatePairs) {
  const GaussianFilterParams g(0.4, Complex(0.3, 0.2), Complex(0.3, -0.2));
  EXPECT_TRUE(gaussian_quasistate(g, FockSpace(40)).hermitian);
}

TEST(GaussianQuasistateTest, SpectralLaw) {
  const FockSpace space(40);
  for (double s : {-0.5, -0.2, 0.0, 0.3, 0.7, 1.0}) {
    const QuasiStateOperator op = gaussian_quasistate(GaussianFilterParams(s, 0.0, 0.0), space);
    const std::vector<Complex> expected = s_param_eigenvalues(s, 10);
    for (std::size_t n = 0; n < 10; ++n) EXPECT_NEAR(op.matrix(n, n).real(), expected[n].real(), 1e-6) << s << ' ' << n;
  }
}

TEST(GaussianQuasistateTest, OracleEquivalenceRandomParameters) {
  std::mt19937_64 rng(22);
  const FockSpace space(40);
  const std::vector<Complex> grid = alpha_grid(7, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    const GaussianFilterParams g = random_valid_params(rng);
    const QuasiStateOperator op = gaussian_quasistate(g, space);
    double worst = 0.0;
    for (Complex a : grid) worst = std::max(worst, std::abs(numeric_q(op, a) - analytic_q(g, a)));
    EXPECT_LT(worst, 1e-5) << trial;
  }
}

TEST(GaussianQuasistateTest, SqueezedThermalRouteAgrees) {
  std::mt19937_64 rng(23);
  // The routes truncate different factors; compare well below the cutoff.
  const FockSpace space(60);
  for (int trial = 0; trial < 10; ++trial) {
    const GaussianFilterParams g = random_valid_params(rng);
    const SqueezedThermalParams st = spq_to_squeezed_thermal(g);
    const ComplexMatrix a = squeezed_thermal_operator(st, space).leading_block(20);
    const ComplexMatrix b = gaussian_quasistate(g, space).matrix.leading_block(20);
    // The two square roots may sit on opposite branches for complex input.
    // Entries grow like |omega'|^n, so compare relative to the largest.
    EXPECT_LT(std::min(max_abs_diff(a, b), max_abs_diff(-a, b)) / b.max_abs(), 1e-12) << trial;
  }
}

TEST(GaussianQuasistateTest, UnitarySimilarityToThermalOperator) {
  const FockSpace space(60);
  for (double omega : {0.0, 0.2, -0.3}) {
    const Complex zeta = std::polar(0.3, 0.7);
    const Complex tau = std::polar(std::tanh(0.3), 0.7);
    const SqueezedThermalParams st = make_squeezed_thermal(omega, tau, std::conj(tau));
    ASSERT_TRUE(st.zeta.has_value());
    EXPECT_NEAR(std::abs(*st.zeta - zeta), 0.0, 1e-12);
    const GaussianFilterParams g = squeezed_thermal_to_spq(st);
    const ComplexMatrix s = squeeze(zeta, space);
    ComplexMatrix thermal = power_of_number(omega, space);
    thermal *= 1.0 - omega;
    const ComplexMatrix similar = s * thermal * s.adjoint();
    EXPECT_LT(max_abs_diff(gaussian_quasistate(g, space).matrix.leading_block(30), similar.leading_block(30)), 1e-6) << omega;
  }
}

TEST(SParamEigenvaluesTest, Examples) {
  const auto wigner = s_param_eigenvalues(0.0, 6);
  for (std::size_t n = 0; n < 6; ++n) EXPECT_EQ(wigner[n], Complex(n % 2 == 0 ? 2.0 : -2.0));
  const auto gs = s_param_eigenvalues(1.0, 4);
  EXPECT_EQ(gs[0], Complex(1.0));
  for (std::size_t n = 1; n < 4; ++n) EXPECT_EQ(gs[n], Complex(0.0));
  EXPECT_THROW(s_param_eigenvalues(-1.0, 3), std::domain_error);
}

TEST(SParamEigenvaluesTest, ComplexSAgreesWithThermalForm) {
  const Complex s(0.0, 1.0);
  const SqueezedThermalParams st = spq_to_squeezed_thermal(GaussianFilterParams(s, 0.0, 0.0));
  const auto lambda = s_param_eigenvalues(s, 8);
  Complex power = 1.0;
  for (std::size_t n = 0; n < 8; ++n) {
    EXPECT_NEAR(std::abs(lambda[n] - (1.0 - st.omega) * power), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(lambda[n]), std::numbers::sqrt2, 1e-14);
    power *= st.omega;
  }
}

TEST(SpqMapTest, Examples) {
  const SqueezedThermalParams w = spq_to_squeezed_thermal(table_preset("wigner-weyl"));
  EXPECT_NEAR(std::abs(w.r_aux), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w.omega + 1.0), 0.0, 1e-15);
  EXPECT_EQ(w.tau, Complex(0.0));
  EXPECT_EQ(w.tau_conj, Complex(0.0));

  const SqueezedThermalParams v = spq_to_squeezed_thermal(table_preset("glauber-sudarshan"));
  EXPECT_NEAR(std::abs(v.r_aux - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v.omega), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v.n_bar), 0.0, 1e-15);

  EXPECT_THROW(spq_to_squeezed_thermal(GaussianFilterParams(0.0, 0.0, 1e-13)), std::invalid_argument);
}

TEST(SpqMapTest, SqueezedFamilyHasNoThermalPart) {
  const double t = std::tanh(0.3);
  const double s = (1 + t * t) / (1 - t * t);
  const Complex q = -2.0 * t / (1 - t * t);
  const SqueezedThermalParams st = spq_to_squeezed_thermal(GaussianFilterParams(s, std::conj(q), q));
  EXPECT_NEAR(std::abs(st.n_bar), 0.0, 1e-10);
  ASSERT_TRUE(st.zeta.has_value());
  EXPECT_NEAR(std::abs(*st.zeta - 0.3), 0.0, 1e-12);
}

TEST(SpqMapTest, Consistency) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const GaussianFilterParams g = random_valid_params(rng);
    const SqueezedThermalParams st = spq_to_squeezed_thermal(g);
    const Complex r = st.r_aux;
    EXPECT_NEAR(std::abs(r * r - (g.s() * g.s() - g.p() * g.q())), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(st.omega - (r - 1.0) / (r + 1.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(st.tau * st.tau_conj - (g.s() - r) / (g.s() + r)), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(st.tau / st.tau_conj - g.q() / g.p()), 0.0, 1e-9);
  }
}

TEST(SpqMapTest, RoundTrip) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const GaussianFilterParams g = random_valid_params(rng);
    const GaussianFilterParams back = squeezed_thermal_to_spq(spq_to_squeezed_thermal(g));
    EXPECT_NEAR(std::abs(back.s() - g.s()), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(back.p() - g.p()), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(back.q() - g.q()), 0.0, 1e-9);
  }
}

TEST(SpqMapTest, InverseExamplesAndErrors) {
  const GaussianFilterParams vac = squeezed_thermal_to_spq(make_squeezed_thermal(0.0, 0.0, 0.0));
  EXPECT_NEAR(std::abs(vac.s() - 1.0), 0.0, 1e-15);
  EXPECT_EQ(vac.p(), Complex(0.0));
  const GaussianFilterParams w = squeezed_thermal_to_spq(make_squeezed_thermal(-1.0, 0.0, 0.0));
  EXPECT_NEAR(std::abs(w.s()), 0.0, 1e-15);
  EXPECT_THROW(make_squeezed_thermal(1.0, 0.0, 0.0), std::domain_error);
  SqueezedThermalParams bad = make_squeezed_thermal(0.5, 0.0, 0.0);
  bad.tau = 1.0;
  bad.tau_conj = 1.0;
  EXPECT_THROW(squeezed_thermal_to_spq(bad), std::domain_error);
}

TEST(AnalyticQTest, Examples) {
  for (Complex a : {Complex(0.0), Complex(0.5, -0.3), Complex(1.2, 0.4)}) {
    EXPECT_NEAR(std::abs(analytic_q(table_preset("glauber-sudarshan"), a) - std::exp(-std::norm(a)) / kPi), 0.0, 1e-15);
  }
  EXPECT_NEAR(std::abs(analytic_q(table_preset("wigner-weyl"), 0.0) - 2.0 / kPi), 0.0, 1e-15);
  EXPECT_THROW(analytic_q(table_preset("husimi-kano"), 0.0), std::domain_error);
}

TEST(AnalyticQTest, ImaginarySHasVacuumShapedAmplitude) {
  // With s = i the modulus is sqrt2 exp(-|alpha|^2)/pi: the vacuum profile up
  // to the constant |2/sqrt(D)| = sqrt2.
  const GaussianFilterParams g(Complex(0.0, 1.0), 0.0, 0.0);
  for (Complex a : {Complex(0.3), Complex(0.7, 0.7), Complex(-1.1, 0.2)}) {
    const Complex q = analytic_q(g, a);
    EXPECT_NEAR(std::abs(q), std::numbers::sqrt2 * std::exp(-std::norm(a)) / kPi, 1e-14);
    EXPECT_GT(std::abs(std::arg(q) - std::arg(analytic_q(g, 0.0))), 1e-3);
  }
}

TEST(NumericQTest, Examples) {
  const FockSpace space(30);
  QuasiStateOperator id{ComplexMatrix::identity(30), space, {}, true};
  id.matrix *= 1.0 / kPi;
  EXPECT_NEAR(std::abs(numeric_q(id, 0.0) - 1.0 / (kPi * kPi)), 0.0, 1e-15);

  ComplexMatrix proj(30, 30);
  proj(0, 0) = 1.0;
  const QuasiStateOperator vac{proj, space, {}, true};
  for (Complex a : {Complex(0.0), Complex(1.0, 1.0), Complex(2.0), Complex(0.0, -1.5)}) {
    EXPECT_NEAR(std::abs(numeric_q(vac, a) - std::exp(-std::norm(a)) / kPi), 0.0, 1e-10);
  }

  const GaussianFilterParams g(0.5, 0.0, 0.0);
  const QuasiStateOperator op = gaussian_quasistate(g, FockSpace(40));
  for (Complex a : alpha_grid(7, 1.5)) EXPECT_LT(std::abs(numeric_q(op, a) - analytic_q(g, a)), 1e-6);
}

TEST(DisplacedQuasistateTest, CovarianceAndTrace) {
  const FockSpace space(40);
  const QuasiStateOperator base = gaussian_quasistate(GaussianFilterParams(0.5, 0.0, 0.0), space);
  const QuasiStateOperator same = displaced_quasistate(base, 0.0);
  EXPECT_LT(max_abs_diff(same.matrix, base.matrix), 1e-14);

  const Complex a0(0.3, -0.2);
  const QuasiStateOperator moved = displaced_quasistate(base, a0);
  EXPECT_EQ(moved.provenance.kind, ProvenanceKind::kDisplaced);
  ASSERT_TRUE(moved.provenance.base);
  EXPECT_EQ(moved.provenance.base->kind, ProvenanceKind::kGaussian);
  for (Complex a : {Complex(0.0), Complex(0.5, 0.5), Complex(-0.4, 0.1)}) {
    EXPECT_LT(std::abs(numeric_q(moved, a) - numeric_q(base, a - a0)), 1e-6) << a;
  }

  const QuasiStateOperator shifted = displaced_quasistate(base, 0.5);
  EXPECT_LT(std::abs(shifted.matrix.trace() - base.matrix.trace()), 1e-6);
}

TEST(ProvenanceTest, Describe) {
  const QuasiStateOperator base = gaussian_quasistate(table_preset("wigner-weyl"), FockSpace(6));
  const QuasiStateOperator moved = displaced_quasistate(base, Complex(0.5, 0.0));
  EXPECT_NE(moved.provenance.describe().find("displaced(gaussian("), std::string::npos);
  EXPECT_NE(fourier_quasistate(0.1, FockSpace(4)).provenance.describe().find("fourier"), std::string::npos);
}

}  // namespace
}  // namespace qsk
