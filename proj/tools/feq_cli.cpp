// Copyright 2026 The feq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the simulator only through the C API.

#include "feq/feq.h"
#include "run_config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace feq::cli;
using nlohmann::json;

namespace {

struct Failure {
  int code;
  std::string message;
};

void check(feq_status status) {
  if (status != FEQ_OK)
    throw Failure{exit_code_for(status),
                  std::string(feq_status_name(status)) + " error: " + feq_last_error()};
}

template <class T, void (*Free)(T *)> struct Deleter {
  void operator()(T *p) const { Free(p); }
};
using State = std::unique_ptr<feq_state, Deleter<feq_state, feq_state_free>>;
using Beam = std::unique_ptr<feq_beam, Deleter<feq_beam, feq_beam_free>>;
using Circuit = std::unique_ptr<feq_circuit, Deleter<feq_circuit, feq_circuit_free>>;
using Schedule = std::unique_ptr<feq_schedule, Deleter<feq_schedule, feq_schedule_free>>;
using Spectrogram = std::unique_ptr<feq_spectrogram, Deleter<feq_spectrogram, feq_spectrogram_free>>;
using Reconstruction =
    std::unique_ptr<feq_reconstruction, Deleter<feq_reconstruction, feq_reconstruction_free>>;

std::string take_string(char *s) {
  std::string out(s);
  feq_string_free(s);
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Failure{kExitIo, "io error: cannot read '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw Failure{kExitIo, "io error: cannot write '" + path + "'"};
}

Beam make_beam(const RunConfig &cfg) {
  feq_beam *b = nullptr;
  check(feq_beam_create(cfg.beam_kev * 1e3, cfg.wavelength_nm * 1e-9, cfg.delta_e_ev, &b));
  return Beam(b);
}

Circuit load_circuit(const std::string &path) {
  const std::string text = read_file(path);
  feq_circuit *c = nullptr;
  check(feq_circuit_parse(text.c_str(), &c));
  return Circuit(c);
}

State basis(int l, const feq_truncation &t) {
  feq_state *s = nullptr;
  check(feq_state_basis(l, &t, &s));
  return State(s);
}

json parse_json(const std::string &text) { return json::parse(text); }

std::array<double, 4> project(const feq_state *s, const RunConfig &cfg) {
  std::array<double, 4> q{};
  check(feq_project_qubit(s, cfg.edge_margin, cfg.leakage_tol, q.data()));
  return q;
}

std::string state_json(const feq_state *s) {
  char *out = nullptr;
  check(feq_state_to_json(s, &out));
  return take_string(out);
}

std::string qubit_json(const std::array<double, 4> &q) {
  char *out = nullptr;
  check(feq_qubit_to_json(q.data(), &out));
  return take_string(out);
}

void check_norm(const feq_state *s, const RunConfig &cfg) {
  double n = 0.0;
  check(feq_state_norm_squared(s, &n));
  if (std::abs(n - 1.0) > cfg.norm_tol)
    throw Failure{kExitTruncation, "truncation error: state norm drifted to " + std::to_string(n)};
}

struct Trajectory {
  std::vector<std::string> labels;
  std::vector<std::array<double, 4>> qubits;
};

std::string trajectory_csv(const Trajectory &t) {
  std::string out = "step,gate,x,y,z,qubit_norm\n";
  char buf[160];
  for (std::size_t i = 0; i < t.qubits.size(); ++i) {
    const auto &q = t.qubits[i];
    const double norm = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
    if (norm > 1e-9) {
      double b[3];
      check(feq_qubit_bloch(q.data(), b));
      std::snprintf(buf, sizeof buf, "%zu,%s,%.17g,%.17g,%.17g,%.17g\n", i, t.labels[i].c_str(),
                    b[0], b[1], b[2], norm);
    } else {
      std::snprintf(buf, sizeof buf, "%zu,%s,,,,%.17g\n", i, t.labels[i].c_str(), norm);
    }
    out += buf;
  }
  return out;
}

json trajectory_json(const Trajectory &t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.qubits.size(); ++i) {
    const auto &q = t.qubits[i];
    const double norm = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
    json row = {{"step", i}, {"gate", t.labels[i]}, {"qubit_norm", norm}};
    if (norm > 1e-9) {
      double b[3];
      check(feq_qubit_bloch(q.data(), b));
      row["bloch"] = {b[0], b[1], b[2]};
    } else {
      row["bloch"] = nullptr;
      row["degenerate"] = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Prepares |0>, then compiles and runs each gate in order.
State run_circuit(const std::string &path, const RunConfig &cfg, Trajectory *trajectory) {
  const Circuit circuit = load_circuit(path);
  const Beam beam = make_beam(cfg);
  const feq_truncation t = cfg.truncation();
  State state = basis(0, t);
  if (trajectory) {
    trajectory->labels.push_back("init");
    trajectory->qubits.push_back(project(state.get(), cfg));
  }
  std::size_t n = 0;
  check(feq_circuit_size(circuit.get(), &n));
  for (std::size_t i = 0; i < n; ++i) {
    feq_schedule *sched = nullptr;
    check(feq_compile_gate(circuit.get(), i, beam.get(), &sched));
    const Schedule schedule(sched);
    feq_state *next = nullptr;
    check(feq_simulate_schedule(schedule.get(), state.get(), &t, &next));
    state = State(next);
    check_norm(state.get(), cfg);
    if (trajectory) {
      char *label = nullptr;
      check(feq_circuit_gate_text(circuit.get(), i, &label));
      trajectory->labels.push_back(take_string(label));
      trajectory->qubits.push_back(project(state.get(), cfg));
    }
  }
  return state;
}

State load_state(const std::string &path) {
  const std::string text = read_file(path);
  feq_state *s = nullptr;
  check(feq_state_from_json(text.c_str(), &s));
  return State(s);
}

void emit(const RunConfig &cfg, const std::string &suffix, const std::string &text) {
  if (cfg.out.empty())
    std::cout << text << (text.empty() || text.back() != '\n' ? "\n" : "");
  else
    write_file(cfg.out + suffix, text);
}

int cmd_simulate(const RunConfig &cfg, const std::string &circuit_path) {
  Trajectory traj;
  const State state = run_circuit(circuit_path, cfg, &traj);
  const auto q = project(state.get(), cfg);
  if (!cfg.out.empty()) {
    write_file(cfg.out + "_state.json", state_json(state.get()));
    write_file(cfg.out + "_qubit.json", qubit_json(q));
    write_file(cfg.out + "_bloch.csv", trajectory_csv(traj));
  } else if (cfg.csv) {
    std::cout << trajectory_csv(traj);
  } else {
    const json doc = {{"state", parse_json(state_json(state.get()))},
                      {"qubit", parse_json(qubit_json(q))},
                      {"trajectory", trajectory_json(traj)}};
    std::cout << doc.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_compile(const RunConfig &cfg, const std::string &circuit_path) {
  const Circuit circuit = load_circuit(circuit_path);
  const Beam beam = make_beam(cfg);
  feq_schedule *sched = nullptr;
  check(feq_compile_circuit(circuit.get(), beam.get(), &sched));
  const Schedule schedule(sched);
  char *out = nullptr;
  check(feq_schedule_to_json(schedule.get(), &out));
  const std::string text = take_string(out);
  if (cfg.csv) {
    const json j = parse_json(text);
    std::string csv = "index,kind,g_re,g_im,quarter_units,meters\n";
    std::size_t i = 0;
    char buf[160];
    for (const auto &el : j["elements"]) {
      if (el.contains("pulse"))
        std::snprintf(buf, sizeof buf, "%zu,pulse,%.17g,%.17g,,\n", i,
                      el["pulse"]["g"][0].get<double>(), el["pulse"]["g"][1].get<double>());
      else
        std::snprintf(buf, sizeof buf, "%zu,drift,,,%d,%.17g\n", i,
                      el["drift"]["quarter_units"].get<int>(), el["drift"]["meters"].get<double>());
      csv += buf;
      ++i;
    }
    emit(cfg, ".csv", csv);
  } else {
    emit(cfg, ".json", text);
  }
  return kExitOk;
}

int cmd_spectrum(const RunConfig &cfg, const std::string &state_path,
                 const std::string &circuit_path, std::optional<double> g_re,
                 std::optional<double> g_im) {
  State state;
  if (!state_path.empty()) {
    state = load_state(state_path);
  } else if (!circuit_path.empty()) {
    state = run_circuit(circuit_path, cfg, nullptr);
  } else {
    const feq_truncation t = cfg.truncation();
    const State zero = basis(0, t);
    feq_state *out = nullptr;
    check(feq_apply_pinem(zero.get(), g_re.value_or(0.0), g_im.value_or(0.0), &t, &out));
    state = State(out);
  }
  int l_min = 0;
  std::size_t size = 0;
  check(feq_state_window(state.get(), &l_min, &size));
  std::vector<double> p(size);
  check(feq_state_spectrum(state.get(), p.data(), p.size()));
  if (cfg.csv) {
    std::string csv = "l,probability\n";
    char buf[64];
    for (std::size_t i = 0; i < size; ++i) {
      std::snprintf(buf, sizeof buf, "%d,%.17g\n", l_min + static_cast<int>(i), p[i]);
      csv += buf;
    }
    emit(cfg, ".csv", csv);
  } else {
    emit(cfg, ".json", json{{"l_min", l_min}, {"probabilities", p}}.dump());
  }
  return kExitOk;
}

int cmd_eigenphases(const RunConfig &cfg, double g_re, double g_im, int dim) {
  char *csv = nullptr;
  check(feq_eigenphases_csv(g_re, g_im, dim, &csv));
  emit(cfg, ".csv", take_string(csv));
  return kExitOk;
}

int cmd_tomography(const RunConfig &cfg, const std::string &state_path,
                   const std::string &circuit_path, const std::string &spectrogram_path) {
  const feq_truncation t = cfg.truncation();
  Spectrogram sg;
  if (!spectrogram_path.empty()) {
    const std::string text = read_file(spectrogram_path);
    feq_spectrogram *s = nullptr;
    check(feq_spectrogram_from_csv(text.c_str(), cfg.probe, &s));
    sg = Spectrogram(s);
  } else {
    State state;
    if (!state_path.empty()) {
      state = load_state(state_path);
    } else if (!circuit_path.empty()) {
      State full = run_circuit(circuit_path, cfg, nullptr);
      if (t.adaptive) {
        feq_state *trimmed = nullptr;
        check(feq_state_trim(full.get(), 1e-30, 0, &trimmed));
        state = State(trimmed);
      } else {
        state = std::move(full);
      }
    } else {
      throw Failure{kExitOther, "tomography needs --state, --circuit or --spectrogram"};
    }
    feq_spectrogram *s = nullptr;
    check(feq_spectrogram_create(state.get(), cfg.probe, cfg.phases, &t, &s));
    sg = Spectrogram(s);
    if (cfg.counts > 0.0) {
      feq_spectrogram *noisy = nullptr;
      check(feq_spectrogram_with_noise(sg.get(), cfg.counts, cfg.seed, &noisy));
      sg = Spectrogram(noisy);
    }
  }

  char *csv = nullptr;
  check(feq_spectrogram_to_csv(sg.get(), &csv));
  const std::string sg_csv = take_string(csv);

  feq_reconstruct_options opts = feq_reconstruct_options_default();
  opts.restarts = cfg.restarts;
  opts.seed = cfg.seed;
  opts.residual_threshold = cfg.residual_threshold;
  feq_reconstruction *rec_raw = nullptr;
  const feq_status rec_status = feq_reconstruct(sg.get(), &t, &opts, &rec_raw);
  if (rec_status != FEQ_OK && rec_status != FEQ_ERR_RECONSTRUCTION)
    check(rec_status);
  const std::string rec_message = rec_status == FEQ_OK ? "" : feq_last_error();
  const Reconstruction rec(rec_raw);

  char *rec_json = nullptr;
  check(feq_reconstruction_to_json(rec.get(), &rec_json));
  json report = parse_json(take_string(rec_json));

  feq_state *fit_raw = nullptr;
  check(feq_reconstruction_state(rec.get(), &fit_raw));
  const State fit(fit_raw);
  std::array<double, 4> q{};
  const feq_status proj = feq_project_qubit(fit.get(), cfg.edge_margin, 1e-6, q.data());
  if (proj == FEQ_OK)
    report["qubit"] = parse_json(qubit_json(q));
  else
    report["qubit"] = nullptr;

  if (!cfg.out.empty()) {
    write_file(cfg.out + "_spectrogram.csv", sg_csv);
    write_file(cfg.out + "_reconstruction.json", report.dump(2));
  } else if (cfg.csv) {
    std::cout << sg_csv;
  } else {
    std::cout << report.dump(2) << "\n";
  }
  if (rec_status == FEQ_ERR_RECONSTRUCTION) {
    std::cerr << "reconstruction error: " << rec_message << "\n";
    return kExitReconstruction;
  }
  return kExitOk;
}

int cmd_bench(const RunConfig &cfg, double g_magnitude, int dim) {
  char *out = nullptr;
  check(feq_bench(g_magnitude, dim, &out));
  emit(cfg, ".json", take_string(out));
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Free-electron qubit simulator and gate compiler"};
  app.require_subcommand(1);

  Overrides o;
  std::optional<std::string> config_path;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option_function<double>("--beam-kev", [&](double v) { o.beam_kev = v; },
                                     "Electron kinetic energy in keV (default 200)");
    cmd->add_option_function<double>("--wavelength-nm", [&](double v) { o.wavelength_nm = v; },
                                     "Laser wavelength in nm (default 800)");
    cmd->add_option_function<double>("--delta-e-ev", [&](double v) { o.delta_e_ev = v; },
                                     "Electron energy spread in eV (default 0)");
    cmd->add_option_function<int>("--window", [&](int v) { o.window = v; },
                                  "Fixed window half-width; 0 = adaptive (default)");
    cmd->add_option_function<std::uint64_t>("--seed", [&](std::uint64_t v) { o.seed = v; },
                                            "Random seed");
    cmd->add_option_function<std::string>("--out", [&](const std::string &v) { o.out = v; },
                                          "Output path prefix (default: stdout)");
    cmd->add_flag("--csv", o.csv, "Tabular CSV output");
    cmd->add_option_function<std::string>("--config", [&](const std::string &v) { config_path = v; },
                                          "JSON config file");
  };

  std::string circuit_path, state_path, spectrogram_path;
  std::optional<double> g_re, g_im;
  double bench_g = 0.0, eig_g = 0.0;
  int dim = 401;

  auto *simulate = app.add_subcommand("simulate", "Run a circuit from |0> on the full ladder");
  add_common(simulate);
  simulate->add_option("circuit", circuit_path, "Circuit file")->required();

  auto *compile = app.add_subcommand("compile", "Compile a circuit into pulses and drifts");
  add_common(compile);
  compile->add_option("circuit", circuit_path, "Circuit file")->required();

  auto *spectrum = app.add_subcommand("spectrum", "EELS spectrum of a state, circuit or pulse");
  add_common(spectrum);
  spectrum->add_option("--state", state_path, "Ladder state JSON");
  spectrum->add_option("--circuit", circuit_path, "Circuit file run from |0>");
  spectrum->add_option_function<double>("--g-re", [&](double v) { g_re = v; }, "Pulse Re g on |0>");
  spectrum->add_option_function<double>("--g-im", [&](double v) { g_im = v; }, "Pulse Im g on |0>");

  auto *eig = app.add_subcommand("eigenphases", "Eigenphases of a truncated pulse unitary (CSV)");
  add_common(eig);
  eig->add_option("--g", eig_g, "|g| of a real coupling")->required();
  eig->add_option("--dim", dim, "Odd window size (default 401)");

  auto *tomo = app.add_subcommand("tomography", "Spectrogram and state reconstruction");
  add_common(tomo);
  tomo->add_option("--state", state_path, "Ladder state JSON");
  tomo->add_option("--circuit", circuit_path, "Circuit file run from |0>");
  tomo->add_option("--spectrogram", spectrogram_path, "Measured spectrogram CSV");
  tomo->add_option_function<double>("--probe", [&](double v) { o.probe = v; }, "Probe |g| (default 1)");
  tomo->add_option_function<int>("--phases", [&](int v) { o.phases = v; }, "Scan phases (default 32)");
  tomo->add_option_function<int>("--restarts", [&](int v) { o.restarts = v; }, "Fit restarts (default 16)");
  tomo->add_option_function<double>("--counts", [&](double v) { o.counts = v; },
                                    "Poisson counts per column; 0 = noiseless");
  tomo->add_option_function<double>("--residual-threshold", [&](double v) { o.residual_threshold = v; },
                                    "RMS misfit flagged as failure (default 5e-3)");

  auto *bench = app.add_subcommand("bench", "Time the pulse paths and report occupied levels");
  add_common(bench);
  bench->add_option("--g", bench_g, "|g|")->required();
  bench->add_option("--dim", dim, "Window size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  std::vector<std::string> problems;
  const RunConfig cfg = resolve_config(config_path, o, problems);
  if (!problems.empty()) {
    std::cerr << "configuration errors:\n";
    for (const auto &p : problems)
      std::cerr << "  - " << p << "\n";
    return kExitConfig;
  }

  try {
    if (simulate->parsed())
      return cmd_simulate(cfg, circuit_path);
    if (compile->parsed())
      return cmd_compile(cfg, circuit_path);
    if (spectrum->parsed())
      return cmd_spectrum(cfg, state_path, circuit_path, g_re, g_im);
    if (eig->parsed())
      return cmd_eigenphases(cfg, eig_g, 0.0, dim);
    if (tomo->parsed())
      return cmd_tomography(cfg, state_path, circuit_path, spectrogram_path);
    if (bench->parsed())
      return cmd_bench(cfg, bench_g, dim);
  } catch (const Failure &f) {
    std::cerr << f.message << "\n";
    return f.code;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOther;
}
