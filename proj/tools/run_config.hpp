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

#include "feq/feq.h"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace feq::cli {

/// Process exit codes, one per failure class.
enum ExitCode : int {
  kExitOk = 0,
  kExitOther = 1,
  kExitParse = 2,
  kExitConfig = 3,
  kExitTruncation = 4,
  kExitReconstruction = 5,
  kExitIo = 6,
};

int exit_code_for(feq_status status);

/// Every tunable of a run. Precedence: command-line flags, then the config
/// file, then these defaults.
struct RunConfig {
  double beam_kev = 200.0;
  double wavelength_nm = 800.0;
  double delta_e_ev = 0.0;

  /// 0 selects the adaptive window; L > 0 fixes it to [-L, L].
  int window = 0;
  int margin_abs = 12;
  double margin_rel = 10.0;
  int edge_margin = 4;
  double leakage_tol = 1e-12;
  double norm_tol = 1e-10;

  std::uint64_t seed = 0;
  std::string out;
  bool csv = false;

  double probe = 1.0;
  int phases = 32;
  int restarts = 16;
  double counts = 0.0; ///< Poisson counts per column; 0 means noiseless.
  double residual_threshold = 5e-3;

  feq_truncation truncation() const;
};

/// Optional overrides collected from the command line.
struct Overrides {
  std::optional<double> beam_kev, wavelength_nm, delta_e_ev;
  std::optional<int> window;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<double> probe, counts, residual_threshold;
  std::optional<int> phases, restarts;
  bool csv = false;
};

/// Merges defaults, the JSON config file (if any) and the overrides, then
/// validates. Problems are appended to `problems`; the result is usable only
/// when none were added.
RunConfig resolve_config(const std::optional<std::string> &config_path,
                         const Overrides &overrides, std::vector<std::string> &problems);

} // namespace feq::cli
