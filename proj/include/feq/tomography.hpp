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

#pragma once

#include "feq/ladder.hpp"
#include "feq/qubit.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace feq {

/// EELS populations p_l on a ladder window.
struct Spectrum {
  int l_min = 0;
  std::vector<double> probabilities;

  int l_max() const { return l_min + static_cast<int>(probabilities.size()) - 1; }
  double total() const;
};

Spectrum eels_spectrum(const LadderState &state);

/// EELS spectra after a probe pulse g = probe_magnitude * e^{i chi}, one per
/// scan phase chi. All columns share one window.
struct Spectrogram {
  std::vector<double> scan_phases;
  std::vector<Spectrum> spectra;
  double probe_magnitude = 1.0;

  int l_min() const { return spectra.front().l_min; }
  int l_max() const { return spectra.front().l_max(); }
};

/// Uniform scan grid chi_j = 2 pi j / n_phases.
Spectrogram spectrogram(const LadderState &state, double probe_magnitude = 1.0,
                        int n_phases = 32, const TruncationPolicy &policy = {});

/// Independent Poisson counts per (phase, level) with mean counts * p, each
/// column renormalized afterwards. Deterministic for a given seed.
Spectrogram with_shot_noise(const Spectrogram &sg, double counts_per_column,
                            std::uint64_t seed);

struct ReconstructOptions {
  int restarts = 16;
  std::uint64_t seed = 0;
  int max_iterations = 400;
  /// RMS misfit above which the result is flagged as a failure.
  double residual_threshold = 5e-3;
  /// Remaining restarts are skipped once one reaches this RMS misfit.
  double stop_residual = 1e-13;
};

struct Reconstruction {
  LadderState state;
  /// RMS difference between predicted and observed spectrogram entries.
  double residual = 0.0;
  int restarts = 0;
  std::uint64_t seed = 0;
  bool failed = false;
};

/// Least-squares fit of the ladder amplitudes to a spectrogram.
///
/// The unknown window is [-L, L] for a fixed policy. With an adaptive policy
/// it is the data window shrunk by the policy's padding for the probe, which
/// is the window of the state that was probed under that policy. Each restart
/// runs Levenberg-Marquardt from a seeded random start; the best fit wins,
/// ties going to the earlier restart. The global phase is fixed by making the
/// largest amplitude real and positive.
Reconstruction reconstruct_state(const Spectrogram &sg,
                                 const TruncationPolicy &window = {},
                                 const ReconstructOptions &opts = {});

struct QubitReadout {
  QubitState qubit;
  double residual = 0.0;
  bool failed = false;
};

/// Comb projection of the reconstructed state. The result carries the
/// reconstruction's arbitrary global phase. Measured states are noisy, so the
/// edge-leakage gate defaults to 1e-6 here.
QubitReadout readout_qubit(const Spectrogram &sg, const TruncationPolicy &window = {},
                           const ReconstructOptions &opts = {},
                           const ProjectionOptions &projection = {4, 1e-6});

/// |<a|b>|^2 / (<a|a> <b|b>) over the union of the two windows.
double state_fidelity(const LadderState &a, const LadderState &b);

/// Header "l,<chi_0>,...", then one row per level: "l,p(chi_0),...".
std::string spectrogram_to_csv(const Spectrogram &sg);
Spectrogram spectrogram_from_csv(std::string_view csv, double probe_magnitude);

} // namespace feq
