/* Copyright 2026 The feq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the free-electron qubit simulator.
 *
 * Every call returns a feq_status. On failure the output arguments are left
 * untouched (except where noted) and feq_last_error() returns a message for
 * the calling thread. Objects are opaque handles released with the matching
 * *_free function; strings returned through char** are released with
 * feq_string_free. Complex numbers travel as interleaved (re, im) doubles,
 * and 2x2 matrices as 8 doubles in row-major (re, im) order.
 */
#ifndef FEQ_FEQ_H
#define FEQ_FEQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FEQ_BUILDING_LIBRARY)
#    define FEQ_API __declspec(dllexport)
#  else
#    define FEQ_API __declspec(dllimport)
#  endif
#else
#  define FEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum feq_status {
  FEQ_OK = 0,
  FEQ_ERR_ARGUMENT = 1,
  FEQ_ERR_WINDOW = 2,
  FEQ_ERR_TRUNCATION = 3,
  FEQ_ERR_CONFIG = 4,
  FEQ_ERR_PARSE = 5,
  FEQ_ERR_PROJECTION = 6,
  FEQ_ERR_LEGALITY = 7,
  FEQ_ERR_RECONSTRUCTION = 8,
  FEQ_ERR_IO = 9,
  FEQ_ERR_INTERNAL = 10
} feq_status;

typedef struct feq_beam feq_beam;
typedef struct feq_state feq_state;
typedef struct feq_circuit feq_circuit;
typedef struct feq_schedule feq_schedule;
typedef struct feq_spectrogram feq_spectrogram;
typedef struct feq_reconstruction feq_reconstruction;

/* Window policy. adaptive != 0 pads each pulse by
 * ceil(s) + margin_abs + ceil(margin_rel * s^(1/3)), s = 2|g|; otherwise the
 * window is [-half_width, half_width]. */
typedef struct feq_truncation {
  int adaptive;
  int half_width;
  int margin_abs;
  double margin_rel;
  int edge_margin;
  double leakage_tol;
} feq_truncation;

typedef struct feq_reconstruct_options {
  int restarts;
  uint64_t seed;
  int max_iterations;
  double residual_threshold;
} feq_reconstruct_options;

FEQ_API const char *feq_version(void);
FEQ_API const char *feq_last_error(void);
FEQ_API const char *feq_status_name(feq_status status);
FEQ_API void feq_string_free(char *s);

FEQ_API feq_truncation feq_truncation_default(void);
FEQ_API feq_reconstruct_options feq_reconstruct_options_default(void);

/* Beam */
FEQ_API double feq_photon_energy_ev(double wavelength_m);
FEQ_API feq_status feq_beam_create(double kinetic_energy_ev, double wavelength_m,
                                   double delta_e_ev, feq_beam **out);
FEQ_API void feq_beam_free(feq_beam *beam);
FEQ_API feq_status feq_beam_z_d(const feq_beam *beam, double *z_d_m);
FEQ_API feq_status feq_beam_to_json(const feq_beam *beam, char **json);
FEQ_API feq_status feq_field_to_g(double field_v_per_m, const double *calibration,
                                  double g_out[2]);

/* Ladder states */
FEQ_API feq_status feq_state_basis(int l, const feq_truncation *policy, feq_state **out);
FEQ_API feq_status feq_state_from_amplitudes(int l_min, const double *re_im, size_t count,
                                             feq_state **out);
FEQ_API feq_status feq_state_from_json(const char *json, feq_state **out);
FEQ_API feq_status feq_state_to_json(const feq_state *state, char **json);
FEQ_API void feq_state_free(feq_state *state);
FEQ_API feq_status feq_state_window(const feq_state *state, int *l_min, size_t *size);
/* Copies min(capacity, size) amplitudes as (re, im) pairs. */
FEQ_API feq_status feq_state_amplitudes(const feq_state *state, double *re_im, size_t capacity);
FEQ_API feq_status feq_state_norm_squared(const feq_state *state, double *out);
FEQ_API feq_status feq_state_leakage(const feq_state *state, int edge_margin, double *out);
FEQ_API feq_status feq_state_trim(const feq_state *state, double prob_tol, int keep,
                                  feq_state **out);
FEQ_API feq_status feq_state_occupied_levels(const feq_state *state, double mass, int *out);
/* Copies min(capacity, size) EELS probabilities. */
FEQ_API feq_status feq_state_spectrum(const feq_state *state, double *probabilities,
                                      size_t capacity);

/* Operators */
FEQ_API feq_status feq_apply_pinem(const feq_state *state, double g_re, double g_im,
                                   const feq_truncation *policy, feq_state **out);
FEQ_API feq_status feq_apply_fsp(const feq_state *state, int quarter_units, feq_state **out);
/* Writes dim phases; capacity must be >= dim. */
FEQ_API feq_status feq_eigenphases(double g_re, double g_im, int dim, double *phases,
                                   size_t capacity);
FEQ_API feq_status feq_eigenphases_csv(double g_re, double g_im, int dim, char **csv);

/* Qubit projection: qubit[4] = (alpha re, alpha im, beta re, beta im). */
FEQ_API feq_status feq_project_qubit(const feq_state *state, int edge_margin,
                                     double leakage_tol, double qubit[4]);
/* Writes period (re, im) pairs; capacity counts pairs. */
FEQ_API feq_status feq_project_period(const feq_state *state, int period, int edge_margin,
                                      double leakage_tol, double *re_im, size_t capacity);
FEQ_API feq_status feq_qubit_bloch(const double qubit[4], double bloch[3]);
FEQ_API feq_status feq_qubit_to_json(const double qubit[4], char **json);

/* Circuits and schedules */
FEQ_API feq_status feq_circuit_parse(const char *source, feq_circuit **out);
FEQ_API void feq_circuit_free(feq_circuit *circuit);
FEQ_API feq_status feq_circuit_size(const feq_circuit *circuit, size_t *size);
FEQ_API feq_status feq_circuit_unparse(const feq_circuit *circuit, char **text);
FEQ_API feq_status feq_circuit_gate_text(const feq_circuit *circuit, size_t index, char **text);
FEQ_API feq_status feq_circuit_gate_matrix(const feq_circuit *circuit, size_t index,
                                           double matrix[8]);

FEQ_API feq_status feq_compile_gate(const feq_circuit *circuit, size_t index,
                                    const feq_beam *beam, feq_schedule **out);
FEQ_API feq_status feq_compile_circuit(const feq_circuit *circuit, const feq_beam *beam,
                                       feq_schedule **out);
FEQ_API feq_status feq_compile_matrix(const double matrix[8], const feq_beam *beam,
                                      feq_schedule **out);
FEQ_API void feq_schedule_free(feq_schedule *schedule);
FEQ_API feq_status feq_schedule_counts(const feq_schedule *schedule, int *pulses, int *drifts);
FEQ_API feq_status feq_schedule_to_json(const feq_schedule *schedule, char **json);
FEQ_API feq_status feq_schedule_from_json(const char *json, feq_schedule **out);
FEQ_API feq_status feq_simulate_schedule(const feq_schedule *schedule, const feq_state *input,
                                         const feq_truncation *policy, feq_state **out);
/* Global-phase-invariant fidelity of the full-ladder gate against target. */
FEQ_API feq_status feq_schedule_fidelity(const feq_schedule *schedule, const double target[8],
                                         const feq_truncation *policy, double *fidelity);

/* Tomography */
FEQ_API feq_status feq_spectrogram_create(const feq_state *state, double probe_magnitude,
                                          int n_phases, const feq_truncation *policy,
                                          feq_spectrogram **out);
FEQ_API feq_status feq_spectrogram_with_noise(const feq_spectrogram *sg, double counts,
                                              uint64_t seed, feq_spectrogram **out);
FEQ_API feq_status feq_spectrogram_to_csv(const feq_spectrogram *sg, char **csv);
FEQ_API feq_status feq_spectrogram_from_csv(const char *csv, double probe_magnitude,
                                            feq_spectrogram **out);
FEQ_API void feq_spectrogram_free(feq_spectrogram *sg);

/* Returns FEQ_ERR_RECONSTRUCTION when the residual exceeds the threshold; the
 * flagged best candidate is still stored in *out in that case. */
FEQ_API feq_status feq_reconstruct(const feq_spectrogram *sg, const feq_truncation *window,
                                   const feq_reconstruct_options *options,
                                   feq_reconstruction **out);
FEQ_API void feq_reconstruction_free(feq_reconstruction *rec);
FEQ_API feq_status feq_reconstruction_state(const feq_reconstruction *rec, feq_state **out);
FEQ_API feq_status feq_reconstruction_residual(const feq_reconstruction *rec, double *residual,
                                               int *failed);
FEQ_API feq_status feq_reconstruction_to_json(const feq_reconstruction *rec, char **json);

/* Benchmark report as JSON. */
FEQ_API feq_status feq_bench(double g_magnitude, int dim, char **json);

#ifdef __cplusplus
}
#endif

#endif /* FEQ_FEQ_H */
