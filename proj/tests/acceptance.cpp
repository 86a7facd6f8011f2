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

// Acceptance run: one PASS/FAIL line per criterion with its runtime. Exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qsk/density.hpp"
#include "qsk/entanglement.hpp"
#include "qsk/fock.hpp"
#include "qsk/frame.hpp"
#include "qsk/homodyne.hpp"
#include "qsk/linalg.hpp"
#include "qsk/phase_space.hpp"

namespace {

using namespace qsk;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects worst-case deviations against their tolerances.
class Check {
 public:
  void bound(const std::string& what, double value, double tol) {
    const bool ok = value < tol;
    note(what, value, ok);
  }
  void at_least(const std::string& what, double value, double floor) { note(what, value, value >= floor); }
  void flag(const std::string& what, bool ok) {
    if (!ok) {
      pass_ = false;
      out_ << what << " failed; ";
    }
  }
  Outcome outcome() const { return {pass_, out_.str()}; }

 private:
  void note(const std::string& what, double value, bool ok) {
    if (!ok) pass_ = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", value);
    out_ << what << '=' << buf << (ok ? "" : " (out of bounds)") << "; ";
  }
  bool pass_ = true;
  std::ostringstream out_;
};

Frame random_complete_frame(std::mt19937_64& rng, std::size_t d) {
  std::vector<ComplexVector> states;
  for (std::size_t j = 0; j < d * d; ++j) states.push_back(oracle::random_unit_vector(rng, d));
  return Frame(d, states);
}

ComplexMatrix ket0_projector() { return ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}; }

Outcome criterion1() {
  Check c;
  const GramKernel k = gram_kernel(tetrahedron_frame());
  double dk = 0.0;
  double dinv = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      dk = std::max(dk, std::abs(k.matrix[i][j] - (i == j ? 3.0 : 1.0) / 3.0));
      dinv = std::max(dinv, std::abs(k.inverse[i][j] - (i == j ? 5.0 : -1.0) / 4.0));
    }
  }
  c.flag("exact mode", k.mode == KernelMode::kExactInverse);
  c.bound("max|K-K_ref|", dk, 1e-14);
  c.bound("max|Kinv-Kinv_ref|", dinv, 1e-14);
  return c.outcome();
}

Outcome criterion2() {
  Check c;
  const Frame f = tetrahedron_frame();
  const Covm duals = covm(f);
  const DensityOperator rho(ket0_projector());
  const WeightVector born = born_probabilities(rho, f);
  const WeightVector quasi = quasiprobabilities(rho, duals);
  const double born_ref[4] = {0.0, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0};
  const double quasi_ref[4] = {-0.5, 0.5, 0.5, 0.5};
  double db = 0.0;
  double dq = 0.0;
  for (std::size_t j = 0; j < 4; ++j) {
    db = std::max(db, std::abs(born.values[j] - born_ref[j]));
    dq = std::max(dq, std::abs(quasi.values[j] - quasi_ref[j]));
  }
  c.bound("born", db, 1e-12);
  c.bound("quasi", dq, 1e-12);
  c.bound("dual path", max_abs_diff(reconstruct(born, duals).rho, ket0_projector()), 1e-12);
  c.bound("projector path", max_abs_diff(expand_with_projectors(quasi, f), ket0_projector()), 1e-12);
  double ds = 0.0;
  for (const auto& g : duals.operators) {
    const Spectrum s = hermitian_eigen(g);
    ds = std::max({ds, std::abs(s.values[0] - 1.0), std::abs(s.values[1] + 0.5)});
  }
  c.bound("spectra", ds, 1e-12);
  return c.outcome();
}

Outcome criterion3() {
  Check c;
  std::mt19937_64 rng(303);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const Frame f = random_complete_frame(rng, d);
    const ComplexMatrix m = oracle::random_density(rng, d);
    const Reconstruction r = reconstruct(born_probabilities(DensityOperator(m), f), covm(f));
    worst = std::max(worst, max_abs_diff(r.rho, m));
  }
  c.bound("max residual", worst, 1e-9);
  return c.outcome();
}

std::vector<Complex> disc_grid(std::size_t per_axis, double radius) {
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

Outcome criterion4() {
  Check c;
  const FockSpace space(40);
  const std::vector<Complex> grid = disc_grid(13, 1.5);
  std::vector<GaussianFilterParams> cases;
  for (const auto& name : table_preset_names()) {
    if (name != "husimi-kano") cases.push_back(table_preset(name));
  }
  std::mt19937_64 rng(404);
  for (int k = 0; k < 20; ++k) {
    const auto [s, p, q] = oracle::random_valid_spq(rng);
    cases.emplace_back(s, p, q);
  }
  double worst = 0.0;
  for (const auto& g : cases) {
    const QuasiStateOperator op = gaussian_quasistate(g, space);
    for (Complex a : grid) worst = std::max(worst, std::abs(numeric_q(op, a) - analytic_q(g, a)));
  }
  c.bound("max|numeric-analytic|", worst, 1e-5);
  return c.outcome();
}

Outcome criterion5() {
  Check c;
  const FockSpace space(40);
  const QuasiStateOperator wigner = gaussian_quasistate(GaussianFilterParams(0.0, 0.0, 0.0), space);
  const Spectrum s = hermitian_eigen(wigner.matrix.leading_block(10));
  // Five levels at +2 and five at -2, descending.
  double dw = 0.0;
  for (std::size_t n = 0; n < 10; ++n) dw = std::max(dw, std::abs(s.values[n] - (n < 5 ? 2.0 : -2.0)));
  c.bound("s=0 spectrum", dw, 1e-6);
  const QuasiStateOperator glauber = gaussian_quasistate(GaussianFilterParams(1.0, 0.0, 0.0), space);
  ComplexMatrix vacuum(40, 40);
  vacuum(0, 0) = 1.0;
  c.bound("s=1 vs vacuum", max_abs_diff(glauber.matrix, vacuum), 1e-10);
  return c.outcome();
}

Outcome criterion6() {
  Check c;
  std::mt19937_64 rng(606);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto [s, p, q] = oracle::random_valid_spq(rng);
    const GaussianFilterParams back = squeezed_thermal_to_spq(spq_to_squeezed_thermal({s, p, q}));
    worst = std::max({worst, std::abs(back.s() - s), std::abs(back.p() - p), std::abs(back.q() - q)});
  }
  c.bound("spq round trip", worst, 1e-9);
  double thermal = 0.0;
  double family = 0.0;
  for (double z : {0.1, 0.3, 0.7, 1.2}) {
    for (double theta : {0.0, 1.0, 2.5}) {
      // S(zeta) |0><0| S(zeta)^dagger written in (s, p, q) form.
      const double t = std::tanh(z);
      const double s = (1 + t * t) / (1 - t * t);
      const Complex q = std::polar(-2.0 * t / (1 - t * t), theta);
      const GaussianFilterParams g(s, std::conj(q), q);
      const SqueezedThermalParams st = spq_to_squeezed_thermal(g);
      thermal = std::max(thermal, std::abs(st.n_bar));
      const GaussianFilterParams back = squeezed_thermal_to_spq(st);
      family = std::max({family, std::abs(back.s() - g.s()), std::abs(back.p() - g.p()), std::abs(back.q() - g.q())});
    }
  }
  c.bound("squeezed n_bar", thermal, 1e-10);
  c.bound("squeezed round trip", family, 1e-9);
  return c.outcome();
}

Outcome criterion7() {
  Check c;
  const FockSpace space(10);
  const HomodyneEstimate vac = homodyne_reconstruct(sample_quadratures(0.0, 100000, 7), space, {}, 10);
  double off = 0.0;
  for (std::size_t m = 0; m < 10; ++m) {
    for (std::size_t n = 0; n < 10; ++n) {
      if (m != n) off = std::max(off, std::abs(vac.rho(m, n)));
    }
  }
  c.at_least("vacuum rho00", vac.rho(0, 0).real(), 0.95);
  c.bound("max|offdiag|", off, 0.05 + 1e-15);
  c.bound("|trace-1|", std::abs(vac.diagnostics.trace - 1.0), 0.1 + 1e-15);
  const HomodyneEstimate coh = homodyne_reconstruct(sample_quadratures(0.5, 100000, 8), space, {}, 10);
  const double se = (*coh.standard_errors)[0][0];
  const double z = std::abs(coh.rho(0, 0).real() - std::exp(-0.25)) / se;
  c.bound("coherent |rho00-e^-0.25|/SE", z, 3.0);
  return c.outcome();
}

Outcome criterion8() {
  Check c;
  const TwoQubitState bell{-1, -1, -1};
  const double r = 1.0 / std::sqrt(7.0);
  const SeparabilityVerdict v = separability_verdict(bell);
  c.bound("|q+2|", std::abs(v.q + 2.0), 1e-15);
  c.flag("verdict entangled", !v.separable);
  const JointDistribution p = entanglement_quasiprobability(bell);
  c.flag("min P == -1/6", p.min() == -1.0 / 6.0);
  const JointDistribution pk = convolved_distribution(bell, r);
  c.bound("|min P_KK|", std::abs(pk.min()), 1e-10);
  c.bound("|threshold-1/sqrt7|", std::abs(positivity_threshold(bell) - r), 1e-8);
  double de = 0.0;
  for (double mix : {r, 0.5, 1.0}) {
    for (std::size_t j = 0; j < 6; ++j) {
      const Spectrum s = hermitian_eigen(local_quasistate(j, mix));
      de = std::max({de, std::abs(s.values[0] - (1 + mix) / (2 * mix)), std::abs(s.values[1] + (1 - mix) / (2 * mix))});
    }
  }
  c.bound("local spectra", de, 1e-12);
  const ComplexMatrix singlet = oracle::singlet_projector();
  c.bound("P residual", max_abs_diff(reconstruct_two_qubit(p), singlet), 1e-12);
  c.bound("P_KK residual", max_abs_diff(reconstruct_two_qubit(pk), singlet), 1e-12);
  return c.outcome();
}

Outcome criterion9() {
  Check c;
  double dk = 0.0;
  for (double a : {0.1, 0.5, 1.0}) {
    for (std::size_t n : {4u, 6u}) {
      const KernelPair k = uniform_kernel_matrix(AttenuationKernel(a, n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          double v = 0.0;
          for (std::size_t l = 0; l < n; ++l) v += k.kernel[i][l] * k.inverse[l][j];
          dk = std::max(dk, std::abs(v - (i == j ? 1.0 : 0.0)));
        }
      }
    }
  }
  c.bound("max|K Kinv - 1|", dk, 1e-14);
  std::mt19937_64 rng(909);
  const Frame f = pauli_frame();
  double da = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> p = born_probabilities(DensityOperator(oracle::random_density(rng, 2)), f).values;
    for (double& v : p) v /= 3.0;
    for (double a : {0.1, 0.5, 1.0}) {
      const std::vector<double> pk = attenuate(AttenuationKernel(a, 6), p);
      for (std::size_t j = 0; j < 6; ++j) da = std::max(da, std::abs(pk[j] - (a * p[j] + (1 - a) / 6)));
    }
  }
  c.bound("attenuation", da, 1e-14);
  return c.outcome();
}

Outcome criterion10() {
  Check c;
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double joint = 0.0;
  std::size_t states = 0;
  while (states < 200) {
    const TwoQubitState s{u(rng), u(rng), u(rng)};
    if (!is_physical(s)) continue;
    ++states;
    joint = std::max(joint, std::abs(entanglement_quasiprobability(s).sum() - 1.0));
    for (double mix : {0.05, 1.0 / std::sqrt(7.0), 0.6, 1.0}) {
      joint = std::max(joint, std::abs(convolved_distribution(s, mix).sum() - 1.0));
    }
  }
  c.bound("joint sums", joint, 1e-12);
  double frame = 0.0;
  const Frame tetra = tetrahedron_frame();
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const Frame f = trial % 3 == 0 && d == 2 ? tetra : random_complete_frame(rng, d);
    const DensityOperator rho(oracle::random_density(rng, d));
    frame = std::max(frame, std::abs(quasiprobabilities(rho, f).sum() - 1.0));
  }
  c.bound("frame quasiprobability sums", frame, 1e-12);
  return c.outcome();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0: no runtime bound
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "tetrahedron Gram kernel", 1e-3, criterion1},
      {2, "qubit reconstruction", 0.0, criterion2},
      {3, "round-trip tomography", 5.0, criterion3},
      {4, "phase-space oracle equivalence", 30.0, criterion4},
      {5, "spectral law", 0.0, criterion5},
      {6, "parameter round trip", 0.0, criterion6},
      {7, "homodyne estimator", 60.0, criterion7},
      {8, "entanglement numbers", 0.0, criterion8},
      {9, "attenuation kernel algebra", 0.0, criterion9},
      {10, "normalization suite", 0.0, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && seconds >= c.budget_seconds) {
      o.pass = false;
      o.detail += "runtime over budget; ";
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d (%s): %.3f ms; %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds * 1e3,
                o.detail.c_str());
  }
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
