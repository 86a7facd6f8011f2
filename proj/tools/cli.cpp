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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsk/entanglement.hpp"
#include "qsk/frame.hpp"
#include "qsk/homodyne.hpp"
#include "qsk/linalg.hpp"
#include "qsk/parallel.hpp"
#include "qsk/phase_space.hpp"

namespace qsk::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultCutoff = 40;
constexpr std::size_t kDefaultHomodyneCutoff = 10;
constexpr double kDefaultRMax = 6.0;
constexpr double kDefaultRStep = 0.05;
constexpr double kDefaultExtent = 2.5;
constexpr std::size_t kDefaultResolution = 101;
constexpr std::size_t kDefaultSamples = 100000;
constexpr std::uint64_t kDefaultSeed = 7;
constexpr std::size_t kFolds = 10;

const std::vector<std::string> kPauliLabels = {"x+", "x-", "y+", "y-", "z+", "z-"};

json defaults_json() {
  return {{"cutoff", kDefaultCutoff},   {"homodyne_cutoff", kDefaultHomodyneCutoff},
          {"r_max", kDefaultRMax},      {"r_step", kDefaultRStep},
          {"extent", kDefaultExtent},   {"resolution", kDefaultResolution},
          {"samples", kDefaultSamples}, {"seed", kDefaultSeed}};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json envelope(const std::string& command, json config) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"defaults", defaults_json()}, {"config", std::move(config)}};
}

// Writes to a named file, or to the fallback stream when the path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit_json(const json& doc, const std::string& path, std::ostream& out) {
  Sink sink(path, out);
  sink.stream() << doc.dump(2) << '\n';
}

void csv_preamble(std::ostream& os, const std::string& command, const json& config) {
  os << "# qsk " << command << " schema_version=" << kSchemaVersion << '\n';
  os << "# config " << config.dump() << '\n';
  os << "# defaults " << defaults_json().dump() << '\n';
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read input file '" + path + "'");
  return in;
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size() || !std::isfinite(v)) {
    throw std::invalid_argument(what + ": cannot parse '" + text + "' as a finite number");
  }
  return v;
}

// "re" or "re,im".
Complex parse_complex(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text, what), 0.0};
  return {parse_real(text.substr(0, comma), what), parse_real(text.substr(comma + 1), what)};
}

Complex json_complex(const json& v, const std::string& what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw std::invalid_argument(what + ": expected a number or [re, im]");
}

Frame builtin_frame(const std::string& name) {
  if (name == "tetrahedron") return tetrahedron_frame();
  if (name == "pauli") return pauli_frame();
  throw std::invalid_argument("unknown builtin frame '" + name + "' (expected tetrahedron or pauli)");
}

Frame load_frame(const std::string& path) {
  std::ifstream in = open_input(path);
  const json doc = json::parse(in);
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("states")) {
    throw std::invalid_argument("frame file must be an object with 'dim' and 'states'");
  }
  if (!doc["dim"].is_number_unsigned()) throw std::invalid_argument("frame 'dim' must be a positive integer");
  const auto dim = doc["dim"].get<std::size_t>();
  if (!doc["states"].is_array()) throw std::invalid_argument("frame 'states' must be an array");
  std::vector<ComplexVector> states;
  for (const auto& s : doc["states"]) {
    if (!s.is_array()) throw std::invalid_argument("each frame state must be an array of amplitudes");
    ComplexVector v;
    for (const auto& e : s) v.push_back(json_complex(e, "frame amplitude"));
    states.push_back(std::move(v));
  }
  if (doc.contains("labels")) return Frame(dim, std::move(states), doc["labels"].get<std::vector<std::string>>());
  return Frame(dim, states);
}

Frame select_frame(const std::string& path, const std::string& builtin) {
  if (path.empty() == builtin.empty()) throw std::invalid_argument("give exactly one of --frame or --builtin");
  return builtin.empty() ? load_frame(path) : builtin_frame(builtin);
}

json frame_config(const std::string& path, const std::string& builtin) {
  return builtin.empty() ? json{{"frame", path}} : json{{"builtin", builtin}};
}

// ---- covm -----------------------------------------------------------------

struct CovmOptions {
  std::string frame;
  std::string builtin;
  std::string out;
  bool require_exact = false;
};

int cmd_covm(const CovmOptions& o, std::ostream& out) {
  const Frame frame = select_frame(o.frame, o.builtin);
  const GramKernel kernel = gram_kernel(frame);
  if (o.require_exact && kernel.mode != KernelMode::kExactInverse) {
    throw std::domain_error("Gram kernel is not exactly invertible (rank " + std::to_string(kernel.rank) + " of " +
                            std::to_string(frame.size()) + " states for dimension " + std::to_string(frame.dim()) +
                            ")");
  }
  const Covm duals = covm(frame, kernel);
  json config = frame_config(o.frame, o.builtin);
  config["require_exact"] = o.require_exact;
  json doc = envelope("covm", config);
  doc["dim"] = frame.dim();
  doc["labels"] = frame.labels();
  doc["mode"] = to_string(kernel.mode);
  doc["rank"] = kernel.rank;
  doc["sigma_min"] = kernel.sigma_min;
  doc["sigma_max"] = kernel.sigma_max;
  doc["gram"] = kernel.matrix;
  doc["gram_inverse"] = kernel.inverse;
  json quasistates = json::array();
  for (std::size_t j = 0; j < frame.size(); ++j) {
    quasistates.push_back({{"label", frame.labels()[j]},
                           {"matrix", matrix_json(duals.operators[j])},
                           {"eigenvalues", hermitian_eigen(duals.operators[j]).values}});
  }
  doc["quasistates"] = std::move(quasistates);
  emit_json(doc, o.out, out);
  return kExitOk;
}

// ---- reconstruct ----------------------------------------------------------

struct ReconstructOptions {
  std::string frame;
  std::string builtin;
  std::string probs;
  std::string out;
};

int cmd_reconstruct(const ReconstructOptions& o, std::ostream& out) {
  const Frame frame = select_frame(o.frame, o.builtin);
  std::ifstream in = open_input(o.probs);
  const json probs = json::parse(in);
  if (!probs.is_array()) throw std::invalid_argument("probability file must hold a JSON array");
  WeightVector w{{}, WeightKind::kBornProbabilities};
  for (const auto& p : probs) {
    if (!p.is_number()) throw std::invalid_argument("probabilities must be numbers");
    const double v = p.get<double>();
    if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("probabilities must be finite and nonnegative");
    w.values.push_back(v);
  }
  const Reconstruction rec = reconstruct(w, covm(frame));
  const Spectrum spec = hermitian_eigen(rec.rho);

  json config = frame_config(o.frame, o.builtin);
  config["probs"] = o.probs;
  json doc = envelope("reconstruct", config);
  doc["mode"] = to_string(rec.mode);
  doc["subspace_rank"] = rec.subspace_rank;
  doc["rho"] = matrix_json(rec.rho);
  doc["eigenvalues"] = spec.values;
  doc["trace"] = complex_json(rec.rho.trace());
  doc["hermiticity_defect"] = hermiticity_defect(rec.rho);
  doc["physical"] = std::abs(rec.rho.trace() - 1.0) <= 1e-9 && spec.values.back() >= -1e-9;
  emit_json(doc, o.out, out);
  return kExitOk;
}

// ---- qgrid ----------------------------------------------------------------

struct QgridOptions {
  std::string preset;
  std::string s;
  std::string p;
  std::string q;
  double extent = kDefaultExtent;
  std::size_t resolution = kDefaultResolution;
  std::size_t numeric = 0;
  std::string numeric_out;
  std::string out;
};

void write_q_csv(std::ostream& os, const std::vector<Complex>& alphas, const std::vector<Complex>& values) {
  os << "re_alpha,im_alpha,re_q,im_q,abs_q,arg_q\n";
  os << std::setprecision(17);
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    const Complex a = alphas[k];
    const Complex v = values[k];
    os << a.real() << ',' << a.imag() << ',' << v.real() << ',' << v.imag() << ',' << std::abs(v) << ','
       << std::arg(v) << '\n';
  }
}

int cmd_qgrid(const QgridOptions& o, std::ostream& out, std::ostream& err) {
  const bool explicit_params = !o.s.empty() || !o.p.empty() || !o.q.empty();
  if (!o.preset.empty() && explicit_params) throw std::invalid_argument("give either --preset or --s/--p/--q, not both");
  const GaussianFilterParams params =
      o.preset.empty() ? GaussianFilterParams(o.s.empty() ? Complex(0.0) : parse_complex(o.s, "--s"),
                                              o.p.empty() ? Complex(0.0) : parse_complex(o.p, "--p"),
                                              o.q.empty() ? Complex(0.0) : parse_complex(o.q, "--q"))
                       : table_preset(o.preset);
  if (!(o.extent > 0.0) || !std::isfinite(o.extent)) throw std::invalid_argument("--extent must be positive");
  if (o.resolution < 2) throw std::invalid_argument("--resolution must be at least 2");
  if (!params.construction_valid()) {
    throw std::domain_error("(1+s)^2 - pq vanishes; the quasistate is singular and its Q function undefined");
  }

  const std::size_t n = o.resolution;
  const double step = 2.0 * o.extent / static_cast<double>(n - 1);
  std::vector<Complex> alphas;
  alphas.reserve(n * n);
  for (std::size_t iy = 0; iy < n; ++iy) {
    for (std::size_t ix = 0; ix < n; ++ix) alphas.emplace_back(-o.extent + step * ix, -o.extent + step * iy);
  }
  std::vector<Complex> analytic(alphas.size());
  for (std::size_t k = 0; k < alphas.size(); ++k) analytic[k] = analytic_q(params, alphas[k]);

  json config = {{"s", complex_json(params.s())},
                 {"p", complex_json(params.p())},
                 {"q", complex_json(params.q())},
                 {"extent", o.extent},
                 {"resolution", n}};
  if (!o.preset.empty()) config["preset"] = o.preset;

  std::optional<double> deviation;
  std::vector<Complex> numeric;
  if (o.numeric > 0) {
    config["numeric_cutoff"] = o.numeric;
    const QuasiStateOperator op = gaussian_quasistate(params, FockSpace(o.numeric));
    numeric.resize(alphas.size());
    parallel_for(alphas.size(), [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) numeric[k] = numeric_q(op, alphas[k]);
    });
    double worst = 0.0;
    for (std::size_t k = 0; k < alphas.size(); ++k) worst = std::max(worst, std::abs(numeric[k] - analytic[k]));
    deviation = worst;
    err << "qgrid: max |numeric_q - analytic_q| = " << std::setprecision(6) << worst << " over " << alphas.size()
        << " points at cutoff " << o.numeric << '\n';
  }

  {
    Sink sink(o.out, out);
    csv_preamble(sink.stream(), "qgrid", config);
    sink.stream() << "# values analytic\n";
    if (deviation) sink.stream() << "# max_abs_deviation " << std::setprecision(17) << *deviation << '\n';
    write_q_csv(sink.stream(), alphas, analytic);
  }
  if (!o.numeric_out.empty()) {
    if (o.numeric == 0) throw std::invalid_argument("--numeric-out requires --numeric CUTOFF");
    Sink sink(o.numeric_out, out);
    csv_preamble(sink.stream(), "qgrid", config);
    sink.stream() << "# values numeric\n";
    sink.stream() << "# max_abs_deviation " << std::setprecision(17) << *deviation << '\n';
    write_q_csv(sink.stream(), alphas, numeric);
  }
  return kExitOk;
}

// ---- homodyne -------------------------------------------------------------

struct HomodyneOptions {
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::string ingest;
  std::string emit_samples;
  std::size_t cutoff = kDefaultHomodyneCutoff;
  double r_max = kDefaultRMax;
  double r_step = kDefaultRStep;
  std::string out;
};

int cmd_homodyne(const HomodyneOptions& o, std::ostream& out) {
  const FockSpace space(o.cutoff);
  json config = {{"cutoff", o.cutoff}, {"r_max", o.r_max}, {"r_step", o.r_step}};
  std::vector<QuadratureRecord> samples;
  if (!o.ingest.empty()) {
    std::ifstream in = open_input(o.ingest);
    samples = read_quadrature_csv(in);
    config["source"] = {{"ingest", o.ingest}};
  } else {
    if (!std::isfinite(o.alpha_re) || !std::isfinite(o.alpha_im)) throw std::invalid_argument("alpha must be finite");
    samples = sample_quadratures({o.alpha_re, o.alpha_im}, o.samples, o.seed);
    config["source"] = {{"simulate", {{"alpha", json::array({o.alpha_re, o.alpha_im})}, {"samples", o.samples}, {"seed", o.seed}}}};
    if (!o.emit_samples.empty()) {
      Sink sink(o.emit_samples, out);
      csv_preamble(sink.stream(), "homodyne", config);
      write_quadrature_csv(sink.stream(), samples);
    }
  }
  if (samples.empty()) throw std::invalid_argument("no quadrature samples");

  const std::size_t folds = samples.size() >= kFolds ? kFolds : 0;
  config["folds"] = folds;
  const HomodyneEstimate est = homodyne_reconstruct(samples, space, {o.r_max, o.r_step}, folds);
  json doc = envelope("homodyne", config);
  doc["rho"] = matrix_json(est.rho);
  doc["trace"] = est.diagnostics.trace;
  doc["min_eigenvalue"] = est.diagnostics.min_eigenvalue;
  doc["samples"] = est.diagnostics.samples;
  doc["grid_points"] = est.diagnostics.grid_points;
  doc["standard_errors"] = est.standard_errors ? json(*est.standard_errors) : json(nullptr);
  emit_json(doc, o.out, out);
  return kExitOk;
}

// ---- entangle -------------------------------------------------------------

struct EntangleOptions {
  double rho_x = 0.0;
  double rho_y = 0.0;
  double rho_z = 0.0;
  std::string state;
  double mix = 1.0;
  std::string csv_p;
  std::string csv_convolved;
  std::string out;
};

json distribution_json(const JointDistribution& d) {
  json rows = json::array();
  for (const auto& row : d.values) rows.push_back(row);
  return {{"values", rows}, {"sum", d.sum()}, {"min", d.min()}};
}

void write_distribution_csv(const std::string& path, std::ostream& fallback, const json& config, const char* kind,
                            const JointDistribution& d) {
  Sink sink(path, fallback);
  std::ostream& os = sink.stream();
  csv_preamble(os, "entangle", config);
  os << "# values " << kind << '\n';
  os << "label";
  for (const auto& l : kPauliLabels) os << ',' << l;
  os << '\n' << std::setprecision(17);
  for (std::size_t a = 0; a < 6; ++a) {
    os << kPauliLabels[a];
    for (std::size_t b = 0; b < 6; ++b) os << ',' << d.values[a][b];
    os << '\n';
  }
}

int cmd_entangle(EntangleOptions o, std::ostream& out) {
  if (!o.state.empty()) {
    std::ifstream in = open_input(o.state);
    const json doc = json::parse(in);
    for (const char* key : {"rho_x", "rho_y", "rho_z"}) {
      if (!doc.contains(key) || !doc[key].is_number()) {
        throw std::invalid_argument(std::string("state file needs numeric '") + key + "'");
      }
    }
    o.rho_x = doc["rho_x"].get<double>();
    o.rho_y = doc["rho_y"].get<double>();
    o.rho_z = doc["rho_z"].get<double>();
  }
  if (!std::isfinite(o.rho_x) || !std::isfinite(o.rho_y) || !std::isfinite(o.rho_z)) {
    throw std::invalid_argument("state coefficients must be finite");
  }
  if (!(o.mix > 0.0 && o.mix <= 1.0)) throw std::invalid_argument("--mix-r must lie in (0, 1]");

  const TwoQubitState state{o.rho_x, o.rho_y, o.rho_z};
  const auto bell = bell_eigenvalues(state);
  require_physical(state);

  const JointDistribution p = entanglement_quasiprobability(state);
  const JointDistribution pk = convolved_distribution(state, o.mix);
  const SeparabilityVerdict verdict = separability_verdict(state);
  const ComplexMatrix rho = two_qubit_matrix(state);

  json config = {{"rho_x", o.rho_x}, {"rho_y", o.rho_y}, {"rho_z", o.rho_z}, {"mix_r", o.mix}};
  json doc = envelope("entangle", config);
  doc["bell_eigenvalues"] = bell;
  doc["q"] = verdict.q;
  doc["verdict"] = verdict.separable ? "separable" : "entangled";
  doc["labels"] = kPauliLabels;
  doc["quasiprobability"] = distribution_json(p);
  doc["convolved"] = distribution_json(pk);
  json local = json::array();
  for (std::size_t j = 0; j < 6; ++j) {
    local.push_back({{"label", kPauliLabels[j]}, {"eigenvalues", hermitian_eigen(local_quasistate(j, o.mix)).values}});
  }
  doc["local_quasistates"] = std::move(local);
  doc["positivity_threshold"] = positivity_threshold(state);
  doc["residuals"] = {{"quasiprobability", max_abs_diff(reconstruct_two_qubit(p), rho)},
                      {"convolved", max_abs_diff(reconstruct_two_qubit(pk), rho)}};

  if (!o.csv_p.empty()) write_distribution_csv(o.csv_p, out, config, "quasiprobability", p);
  if (!o.csv_convolved.empty()) write_distribution_csv(o.csv_convolved, out, config, "convolved", pk);
  emit_json(doc, o.out, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasistate toolkit: frame reconstruction, phase-space quasistates, entanglement quasiprobabilities",
               "qsk"};
  app.require_subcommand(1);
  std::function<int()> action;

  CovmOptions covm_opts;
  auto* covm_cmd = app.add_subcommand("covm", "Gram kernel and dual quasistates of a frame");
  covm_cmd->add_option("--frame", covm_opts.frame, "Frame JSON file");
  covm_cmd->add_option("--builtin", covm_opts.builtin, "Builtin frame: tetrahedron or pauli");
  covm_cmd->add_flag("--require-exact", covm_opts.require_exact, "Fail with exit 3 unless K is exactly invertible");
  covm_cmd->add_option("--out", covm_opts.out, "Output JSON file (default stdout)");
  covm_cmd->callback([&] { action = [&] { return cmd_covm(covm_opts, out); }; });

  ReconstructOptions rec_opts;
  auto* rec_cmd = app.add_subcommand("reconstruct", "Density operator from Born probabilities");
  rec_cmd->add_option("--frame", rec_opts.frame, "Frame JSON file");
  rec_cmd->add_option("--builtin", rec_opts.builtin, "Builtin frame: tetrahedron or pauli");
  rec_cmd->add_option("--probs", rec_opts.probs, "JSON array of probabilities")->required();
  rec_cmd->add_option("--out", rec_opts.out, "Output JSON file (default stdout)");
  rec_cmd->callback([&] { action = [&] { return cmd_reconstruct(rec_opts, out); }; });

  QgridOptions q_opts;
  auto* q_cmd = app.add_subcommand("qgrid", "Q function of a Gaussian-filter quasistate on a square grid");
  q_cmd->add_option("--preset", q_opts.preset, "glauber-sudarshan, wigner-weyl, husimi-kano, agarwal-wolf-plus or agarwal-wolf-minus");
  q_cmd->add_option("--s", q_opts.s, "s as 're' or 're,im'");
  q_cmd->add_option("--p", q_opts.p, "p as 're' or 're,im'");
  q_cmd->add_option("--q", q_opts.q, "q as 're' or 're,im'");
  q_cmd->add_option("--extent", q_opts.extent, "Grid half-width in Re and Im alpha")->capture_default_str();
  q_cmd->add_option("--resolution", q_opts.resolution, "Points per axis")->capture_default_str();
  q_cmd->add_option("--numeric", q_opts.numeric, "Also evaluate the truncated operator at this cutoff");
  q_cmd->add_option("--numeric-out", q_opts.numeric_out, "CSV file for the numeric grid");
  q_cmd->add_option("--out", q_opts.out, "Output CSV file (default stdout)");
  q_cmd->callback([&] { action = [&] { return cmd_qgrid(q_opts, out, err); }; });

  HomodyneOptions h_opts;
  auto* h_cmd = app.add_subcommand("homodyne", "Density matrix from homodyne quadrature samples");
  auto* ingest = h_cmd->add_option("--ingest", h_opts.ingest, "Quadrature CSV (x,phi) to reconstruct from");
  h_cmd->add_option("--alpha-re", h_opts.alpha_re, "Coherent amplitude, real part")->excludes(ingest);
  h_cmd->add_option("--alpha-im", h_opts.alpha_im, "Coherent amplitude, imaginary part")->excludes(ingest);
  h_cmd->add_option("--samples", h_opts.samples, "Number of simulated samples")->excludes(ingest)->capture_default_str();
  h_cmd->add_option("--seed", h_opts.seed, "Sampler seed")->excludes(ingest)->capture_default_str();
  h_cmd->add_option("--emit-samples", h_opts.emit_samples, "Write simulated samples to this CSV")->excludes(ingest);
  h_cmd->add_option("--cutoff", h_opts.cutoff, "Fock cutoff")->capture_default_str();
  h_cmd->add_option("--r-max", h_opts.r_max, "Radial grid half-width")->capture_default_str();
  h_cmd->add_option("--r-step", h_opts.r_step, "Radial grid step")->capture_default_str();
  h_cmd->add_option("--out", h_opts.out, "Output JSON file (default stdout)");
  h_cmd->callback([&] { action = [&] { return cmd_homodyne(h_opts, out); }; });

  EntangleOptions e_opts;
  auto* e_cmd = app.add_subcommand("entangle", "Entanglement quasiprobabilities of a Bell-diagonal two-qubit state");
  auto* state_file = e_cmd->add_option("--state", e_opts.state, "JSON file {\"rho_x\", \"rho_y\", \"rho_z\"}");
  e_cmd->add_option("--rho-x", e_opts.rho_x, "Coefficient of sigma_x x sigma_x")->excludes(state_file);
  e_cmd->add_option("--rho-y", e_opts.rho_y, "Coefficient of sigma_y x sigma_y")->excludes(state_file);
  e_cmd->add_option("--rho-z", e_opts.rho_z, "Coefficient of sigma_z x sigma_z")->excludes(state_file);
  e_cmd->add_option("--mix-r", e_opts.mix, "Local kernel mixing parameter in (0, 1]")->capture_default_str();
  e_cmd->add_option("--csv-p", e_opts.csv_p, "6x6 CSV of the quasiprobability");
  e_cmd->add_option("--csv-convolved", e_opts.csv_convolved, "6x6 CSV of the convolved distribution");
  e_cmd->add_option("--out", e_opts.out, "Output JSON file (default stdout)");
  e_cmd->callback([&] { action = [&] { return cmd_entangle(e_opts, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    return action();
  } catch (const std::domain_error& e) {
    err << "qsk: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "qsk: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    err << "qsk: malformed JSON input: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "qsk: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace qsk::cli
