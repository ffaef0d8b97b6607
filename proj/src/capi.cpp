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

#include "feq/feq.h"

#include "feq/beam.hpp"
#include "feq/bench.hpp"
#include "feq/compiler.hpp"
#include "feq/error.hpp"
#include "feq/ladder.hpp"
#include "feq/operators.hpp"
#include "feq/qubit.hpp"
#include "feq/serialize.hpp"
#include "feq/tomography.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct feq_beam {
  feq::BeamParameters value;
};
struct feq_state {
  feq::LadderState value;
};
struct feq_circuit {
  feq::Circuit value;
};
struct feq_schedule {
  feq::Schedule value;
};
struct feq_spectrogram {
  feq::Spectrogram value;
};
struct feq_reconstruction {
  feq::Reconstruction value;
};

namespace {

thread_local std::string g_last_error;

feq_status status_of(feq::ErrorKind kind) {
  using feq::ErrorKind;
  switch (kind) {
  case ErrorKind::Argument:
    return FEQ_ERR_ARGUMENT;
  case ErrorKind::Window:
    return FEQ_ERR_WINDOW;
  case ErrorKind::Truncation:
    return FEQ_ERR_TRUNCATION;
  case ErrorKind::Config:
    return FEQ_ERR_CONFIG;
  case ErrorKind::Parse:
    return FEQ_ERR_PARSE;
  case ErrorKind::Projection:
    return FEQ_ERR_PROJECTION;
  case ErrorKind::Legality:
    return FEQ_ERR_LEGALITY;
  case ErrorKind::Reconstruction:
    return FEQ_ERR_RECONSTRUCTION;
  case ErrorKind::Io:
    return FEQ_ERR_IO;
  }
  return FEQ_ERR_INTERNAL;
}

template <class F> feq_status guarded(F &&body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const feq::Error &e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc &) {
    g_last_error = "out of memory";
    return FEQ_ERR_INTERNAL;
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return FEQ_ERR_INTERNAL;
  }
}

void require(bool ok, const char *what) {
  if (!ok)
    feq::fail(feq::ErrorKind::Argument, what);
}

char *dup_string(const std::string &s) {
  auto *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

feq::TruncationPolicy policy_of(const feq_truncation *t) {
  if (!t)
    return {};
  feq::TruncationPolicy p;
  p.mode = t->adaptive ? feq::TruncationPolicy::Mode::Adaptive : feq::TruncationPolicy::Mode::Fixed;
  p.fixed_half_width = t->half_width;
  p.margin_abs = t->margin_abs;
  p.margin_rel = t->margin_rel;
  p.edge_margin = t->edge_margin;
  p.leakage_tol = t->leakage_tol;
  p.validate();
  return p;
}

feq::QubitGate matrix_of(const double m[8]) {
  feq::QubitGate g;
  for (int i = 0; i < 4; ++i)
    g(i / 2, i % 2) = feq::complex(m[2 * i], m[2 * i + 1]);
  return g;
}

void write_matrix(const feq::QubitGate &g, double m[8]) {
  for (int i = 0; i < 4; ++i) {
    m[2 * i] = g(i / 2, i % 2).real();
    m[2 * i + 1] = g(i / 2, i % 2).imag();
  }
}

feq::QubitState qubit_of(const double q[4]) { return {{q[0], q[1]}, {q[2], q[3]}}; }

template <class Handle, class Value> feq_status emit(Handle **out, Value &&v) {
  *out = new Handle{std::forward<Value>(v)};
  return FEQ_OK;
}

} // namespace

extern "C" {

const char *feq_version(void) { return "1.0.0"; }

const char *feq_last_error(void) { return g_last_error.c_str(); }

const char *feq_status_name(feq_status status) {
  switch (status) {
  case FEQ_OK:
    return "ok";
  case FEQ_ERR_ARGUMENT:
    return "argument";
  case FEQ_ERR_WINDOW:
    return "window";
  case FEQ_ERR_TRUNCATION:
    return "truncation";
  case FEQ_ERR_CONFIG:
    return "config";
  case FEQ_ERR_PARSE:
    return "parse";
  case FEQ_ERR_PROJECTION:
    return "projection";
  case FEQ_ERR_LEGALITY:
    return "legality";
  case FEQ_ERR_RECONSTRUCTION:
    return "reconstruction";
  case FEQ_ERR_IO:
    return "io";
  case FEQ_ERR_INTERNAL:
    return "internal";
  }
  return "unknown";
}

void feq_string_free(char *s) { std::free(s); }

feq_truncation feq_truncation_default(void) {
  const feq::TruncationPolicy p;
  return {1, p.fixed_half_width, p.margin_abs, p.margin_rel, p.edge_margin, p.leakage_tol};
}

feq_reconstruct_options feq_reconstruct_options_default(void) {
  const feq::ReconstructOptions o;
  return {o.restarts, o.seed, o.max_iterations, o.residual_threshold};
}

double feq_photon_energy_ev(double wavelength_m) { return feq::photon_energy_ev(wavelength_m); }

feq_status feq_beam_create(double kinetic_energy_ev, double wavelength_m, double delta_e_ev,
                           feq_beam **out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    return emit(out, feq::derive_beam(kinetic_energy_ev, wavelength_m, delta_e_ev));
  });
}

void feq_beam_free(feq_beam *beam) { delete beam; }

feq_status feq_beam_z_d(const feq_beam *beam, double *z_d_m) {
  return guarded([&] {
    require(beam && z_d_m, "null argument");
    *z_d_m = beam->value.z_d;
    return FEQ_OK;
  });
}

feq_status feq_beam_to_json(const feq_beam *beam, char **json) {
  return guarded([&] {
    require(beam && json, "null argument");
    *json = dup_string(feq::beam_to_json(beam->value));
    return FEQ_OK;
  });
}

feq_status feq_field_to_g(double field_v_per_m, const double *calibration, double g_out[2]) {
  return guarded([&] {
    require(g_out != nullptr, "null argument");
    std::optional<feq::complex> cal;
    if (calibration)
      cal = feq::complex(calibration[0], calibration[1]);
    const auto g = feq::field_to_g(field_v_per_m, cal);
    g_out[0] = g.real();
    g_out[1] = g.imag();
    return FEQ_OK;
  });
}

feq_status feq_state_basis(int l, const feq_truncation *policy, feq_state **out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    return emit(out, feq::basis_state(l, policy_of(policy)));
  });
}

feq_status feq_state_from_amplitudes(int l_min, const double *re_im, size_t count,
                                     feq_state **out) {
  return guarded([&] {
    require(out && re_im && count > 0, "state needs a non-empty amplitude buffer");
    std::vector<feq::complex> amps(count);
    for (size_t i = 0; i < count; ++i)
      amps[i] = {re_im[2 * i], re_im[2 * i + 1]};
    return emit(out, feq::LadderState(l_min, std::move(amps)));
  });
}

feq_status feq_state_from_json(const char *json, feq_state **out) {
  return guarded([&] {
    require(json && out, "null argument");
    return emit(out, feq::state_from_json(json));
  });
}

feq_status feq_state_to_json(const feq_state *state, char **json) {
  return guarded([&] {
    require(state && json, "null argument");
    *json = dup_string(feq::state_to_json(state->value));
    return FEQ_OK;
  });
}

void feq_state_free(feq_state *state) { delete state; }

feq_status feq_state_window(const feq_state *state, int *l_min, size_t *size) {
  return guarded([&] {
    require(state && l_min && size, "null argument");
    *l_min = state->value.l_min();
    *size = state->value.size();
    return FEQ_OK;
  });
}

feq_status feq_state_amplitudes(const feq_state *state, double *re_im, size_t capacity) {
  return guarded([&] {
    require(state && re_im, "null argument");
    const auto amps = state->value.amplitudes();
    for (size_t i = 0; i < amps.size() && i < capacity; ++i) {
      re_im[2 * i] = amps[i].real();
      re_im[2 * i + 1] = amps[i].imag();
    }
    return FEQ_OK;
  });
}

feq_status feq_state_norm_squared(const feq_state *state, double *out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = state->value.norm_squared();
    return FEQ_OK;
  });
}

feq_status feq_state_leakage(const feq_state *state, int edge_margin, double *out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = feq::support_leakage(state->value, edge_margin);
    return FEQ_OK;
  });
}

feq_status feq_state_trim(const feq_state *state, double prob_tol, int keep, feq_state **out) {
  return guarded([&] {
    require(state && out && keep >= 0, "invalid argument");
    return emit(out, feq::trimmed(state->value, prob_tol, keep));
  });
}

feq_status feq_state_occupied_levels(const feq_state *state, double mass, int *out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = feq::occupied_levels(state->value, mass);
    return FEQ_OK;
  });
}

feq_status feq_state_spectrum(const feq_state *state, double *probabilities, size_t capacity) {
  return guarded([&] {
    require(state && probabilities, "null argument");
    const auto s = feq::eels_spectrum(state->value);
    for (size_t i = 0; i < s.probabilities.size() && i < capacity; ++i)
      probabilities[i] = s.probabilities[i];
    return FEQ_OK;
  });
}

feq_status feq_apply_pinem(const feq_state *state, double g_re, double g_im,
                           const feq_truncation *policy, feq_state **out) {
  return guarded([&] {
    require(state && out, "null argument");
    return emit(out, feq::apply_pinem(state->value, feq::PinemPulse::single({g_re, g_im}),
                                      policy_of(policy)));
  });
}

feq_status feq_apply_fsp(const feq_state *state, int quarter_units, feq_state **out) {
  return guarded([&] {
    require(state && out, "null argument");
    return emit(out, feq::apply_fsp(state->value, feq::FspPhase::quarter_units(quarter_units)));
  });
}

feq_status feq_eigenphases(double g_re, double g_im, int dim, double *phases, size_t capacity) {
  return guarded([&] {
    require(phases && dim > 0 && capacity >= static_cast<size_t>(dim),
            "eigenphase buffer smaller than dim");
    const auto v = feq::eigenphases(feq::PinemPulse::single({g_re, g_im}), dim);
    std::copy(v.begin(), v.end(), phases);
    return FEQ_OK;
  });
}

feq_status feq_eigenphases_csv(double g_re, double g_im, int dim, char **csv) {
  return guarded([&] {
    require(csv != nullptr, "null argument");
    *csv = dup_string(
        feq::eigenphases_to_csv(feq::eigenphases(feq::PinemPulse::single({g_re, g_im}), dim)));
    return FEQ_OK;
  });
}

feq_status feq_project_qubit(const feq_state *state, int edge_margin, double leakage_tol,
                             double qubit[4]) {
  return guarded([&] {
    require(state && qubit, "null argument");
    const auto q = feq::project_qubit(state->value, {edge_margin, leakage_tol});
    qubit[0] = q.alpha.real();
    qubit[1] = q.alpha.imag();
    qubit[2] = q.beta.real();
    qubit[3] = q.beta.imag();
    return FEQ_OK;
  });
}

feq_status feq_project_period(const feq_state *state, int period, int edge_margin,
                              double leakage_tol, double *re_im, size_t capacity) {
  return guarded([&] {
    require(state && re_im, "null argument");
    require(period < 2 || capacity >= static_cast<size_t>(period), "buffer smaller than period");
    const auto v = feq::project_period_p(state->value, period, {edge_margin, leakage_tol});
    for (size_t i = 0; i < v.size(); ++i) {
      re_im[2 * i] = v[i].real();
      re_im[2 * i + 1] = v[i].imag();
    }
    return FEQ_OK;
  });
}

feq_status feq_qubit_bloch(const double qubit[4], double bloch[3]) {
  return guarded([&] {
    require(qubit && bloch, "null argument");
    const auto b = feq::bloch_vector(qubit_of(qubit));
    std::copy(b.begin(), b.end(), bloch);
    return FEQ_OK;
  });
}

feq_status feq_qubit_to_json(const double qubit[4], char **json) {
  return guarded([&] {
    require(qubit && json, "null argument");
    *json = dup_string(feq::qubit_to_json(qubit_of(qubit)));
    return FEQ_OK;
  });
}

feq_status feq_circuit_parse(const char *source, feq_circuit **out) {
  return guarded([&] {
    require(source && out, "null argument");
    return emit(out, feq::parse_circuit(source));
  });
}

void feq_circuit_free(feq_circuit *circuit) { delete circuit; }

feq_status feq_circuit_size(const feq_circuit *circuit, size_t *size) {
  return guarded([&] {
    require(circuit && size, "null argument");
    *size = circuit->value.gates.size();
    return FEQ_OK;
  });
}

feq_status feq_circuit_unparse(const feq_circuit *circuit, char **text) {
  return guarded([&] {
    require(circuit && text, "null argument");
    *text = dup_string(feq::unparse(circuit->value));
    return FEQ_OK;
  });
}

feq_status feq_circuit_gate_text(const feq_circuit *circuit, size_t index, char **text) {
  return guarded([&] {
    require(circuit && text && index < circuit->value.gates.size(), "gate index out of range");
    *text = dup_string(feq::unparse(circuit->value.gates[index]));
    return FEQ_OK;
  });
}

feq_status feq_circuit_gate_matrix(const feq_circuit *circuit, size_t index, double matrix[8]) {
  return guarded([&] {
    require(circuit && matrix && index < circuit->value.gates.size(), "gate index out of range");
    write_matrix(circuit->value.gates[index].unitary(), matrix);
    return FEQ_OK;
  });
}

feq_status feq_compile_gate(const feq_circuit *circuit, size_t index, const feq_beam *beam,
                            feq_schedule **out) {
  return guarded([&] {
    require(circuit && beam && out && index < circuit->value.gates.size(),
            "invalid compile arguments");
    return emit(out, feq::compile(circuit->value.gates[index], beam->value));
  });
}

feq_status feq_compile_circuit(const feq_circuit *circuit, const feq_beam *beam,
                               feq_schedule **out) {
  return guarded([&] {
    require(circuit && beam && out, "null argument");
    return emit(out, feq::compile(circuit->value, beam->value));
  });
}

feq_status feq_compile_matrix(const double matrix[8], const feq_beam *beam, feq_schedule **out) {
  return guarded([&] {
    require(matrix && beam && out, "null argument");
    return emit(out, feq::compile(matrix_of(matrix), beam->value));
  });
}

void feq_schedule_free(feq_schedule *schedule) { delete schedule; }

feq_status feq_schedule_counts(const feq_schedule *schedule, int *pulses, int *drifts) {
  return guarded([&] {
    require(schedule && pulses && drifts, "null argument");
    *pulses = schedule->value.pulse_count();
    *drifts = schedule->value.drift_count();
    return FEQ_OK;
  });
}

feq_status feq_schedule_to_json(const feq_schedule *schedule, char **json) {
  return guarded([&] {
    require(schedule && json, "null argument");
    *json = dup_string(feq::schedule_to_json(schedule->value));
    return FEQ_OK;
  });
}

feq_status feq_schedule_from_json(const char *json, feq_schedule **out) {
  return guarded([&] {
    require(json && out, "null argument");
    return emit(out, feq::schedule_from_json(json));
  });
}

feq_status feq_simulate_schedule(const feq_schedule *schedule, const feq_state *input,
                                 const feq_truncation *policy, feq_state **out) {
  return guarded([&] {
    require(schedule && input && out, "null argument");
    return emit(out, feq::simulate_schedule(schedule->value, input->value, policy_of(policy)));
  });
}

feq_status feq_schedule_fidelity(const feq_schedule *schedule, const double target[8],
                                 const feq_truncation *policy, double *fidelity) {
  return guarded([&] {
    require(schedule && target && fidelity, "null argument");
    const auto achieved = feq::effective_gate(schedule->value, policy_of(policy));
    *fidelity = feq::gate_fidelity(achieved, matrix_of(target));
    return FEQ_OK;
  });
}

feq_status feq_spectrogram_create(const feq_state *state, double probe_magnitude, int n_phases,
                                  const feq_truncation *policy, feq_spectrogram **out) {
  return guarded([&] {
    require(state && out, "null argument");
    return emit(out, feq::spectrogram(state->value, probe_magnitude, n_phases, policy_of(policy)));
  });
}

feq_status feq_spectrogram_with_noise(const feq_spectrogram *sg, double counts, uint64_t seed,
                                      feq_spectrogram **out) {
  return guarded([&] {
    require(sg && out, "null argument");
    return emit(out, feq::with_shot_noise(sg->value, counts, seed));
  });
}

feq_status feq_spectrogram_to_csv(const feq_spectrogram *sg, char **csv) {
  return guarded([&] {
    require(sg && csv, "null argument");
    *csv = dup_string(feq::spectrogram_to_csv(sg->value));
    return FEQ_OK;
  });
}

feq_status feq_spectrogram_from_csv(const char *csv, double probe_magnitude,
                                    feq_spectrogram **out) {
  return guarded([&] {
    require(csv && out, "null argument");
    return emit(out, feq::spectrogram_from_csv(csv, probe_magnitude));
  });
}

void feq_spectrogram_free(feq_spectrogram *sg) { delete sg; }

feq_status feq_reconstruct(const feq_spectrogram *sg, const feq_truncation *window,
                           const feq_reconstruct_options *options, feq_reconstruction **out) {
  return guarded([&] {
    require(sg && out, "null argument");
    feq::ReconstructOptions opts;
    if (options) {
      opts.restarts = options->restarts;
      opts.seed = options->seed;
      opts.max_iterations = options->max_iterations;
      opts.residual_threshold = options->residual_threshold;
    }
    auto rec = feq::reconstruct_state(sg->value, policy_of(window), opts);
    const bool failed = rec.failed;
    const double residual = rec.residual;
    emit(out, std::move(rec));
    if (failed) {
      g_last_error = "reconstruction residual " + std::to_string(residual) +
                     " exceeds the threshold " + std::to_string(opts.residual_threshold);
      return FEQ_ERR_RECONSTRUCTION;
    }
    return FEQ_OK;
  });
}

void feq_reconstruction_free(feq_reconstruction *rec) { delete rec; }

feq_status feq_reconstruction_state(const feq_reconstruction *rec, feq_state **out) {
  return guarded([&] {
    require(rec && out, "null argument");
    return emit(out, feq::LadderState(rec->value.state));
  });
}

feq_status feq_reconstruction_residual(const feq_reconstruction *rec, double *residual,
                                       int *failed) {
  return guarded([&] {
    require(rec && residual && failed, "null argument");
    *residual = rec->value.residual;
    *failed = rec->value.failed ? 1 : 0;
    return FEQ_OK;
  });
}

feq_status feq_reconstruction_to_json(const feq_reconstruction *rec, char **json) {
  return guarded([&] {
    require(rec && json, "null argument");
    *json = dup_string(feq::reconstruction_to_json(rec->value));
    return FEQ_OK;
  });
}

feq_status feq_bench(double g_magnitude, int dim, char **json) {
  return guarded([&] {
    require(json != nullptr, "null argument");
    *json = dup_string(feq::bench_to_json(feq::run_bench(g_magnitude, dim)));
    return FEQ_OK;
  });
}

} // extern "C"
