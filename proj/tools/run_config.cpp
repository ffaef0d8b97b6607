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

#include "run_config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace feq::cli {

int exit_code_for(feq_status status) {
  switch (status) {
  case FEQ_OK:
    return kExitOk;
  case FEQ_ERR_PARSE:
    return kExitParse;
  case FEQ_ERR_CONFIG:
    return kExitConfig;
  case FEQ_ERR_WINDOW:
  case FEQ_ERR_TRUNCATION:
  case FEQ_ERR_PROJECTION:
    return kExitTruncation;
  case FEQ_ERR_RECONSTRUCTION:
    return kExitReconstruction;
  case FEQ_ERR_IO:
    return kExitIo;
  default:
    return kExitOther;
  }
}

feq_truncation RunConfig::truncation() const {
  feq_truncation t = feq_truncation_default();
  t.adaptive = window == 0 ? 1 : 0;
  t.half_width = window > 0 ? window : t.half_width;
  t.margin_abs = margin_abs;
  t.margin_rel = margin_rel;
  t.edge_margin = edge_margin;
  t.leakage_tol = leakage_tol;
  return t;
}

namespace {

using nlohmann::json;

template <class T>
void take(const json &obj, const char *key, T &dst, const std::string &where,
          std::vector<std::string> &problems) {
  if (!obj.contains(key))
    return;
  try {
    dst = obj.at(key).get<T>();
  } catch (const json::exception &) {
    problems.push_back(where + "." + key + " has the wrong type");
  }
}

void load_file(const std::string &path, RunConfig &cfg, std::vector<std::string> &problems) {
  std::ifstream in(path);
  if (!in) {
    problems.push_back("cannot read config file '" + path + "'");
    return;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::exception &e) {
    problems.push_back("config file '" + path + "' is not valid JSON: " + e.what());
    return;
  }
  if (!j.is_object()) {
    problems.push_back("config file must hold a JSON object");
    return;
  }
  if (j.contains("beam")) {
    const json &b = j["beam"];
    take(b, "kinetic_energy_kev", cfg.beam_kev, "beam", problems);
    take(b, "wavelength_nm", cfg.wavelength_nm, "beam", problems);
    take(b, "delta_e_ev", cfg.delta_e_ev, "beam", problems);
  }
  if (j.contains("truncation")) {
    const json &t = j["truncation"];
    take(t, "window", cfg.window, "truncation", problems);
    take(t, "margin_abs", cfg.margin_abs, "truncation", problems);
    take(t, "margin_rel", cfg.margin_rel, "truncation", problems);
    take(t, "edge_margin", cfg.edge_margin, "truncation", problems);
    take(t, "leakage_tol", cfg.leakage_tol, "truncation", problems);
  }
  if (j.contains("tolerances"))
    take(j["tolerances"], "norm_tol", cfg.norm_tol, "tolerances", problems);
  take(j, "seed", cfg.seed, "config", problems);
  if (j.contains("output")) {
    take(j["output"], "path", cfg.out, "output", problems);
    take(j["output"], "csv", cfg.csv, "output", problems);
  }
  if (j.contains("tomography")) {
    const json &t = j["tomography"];
    take(t, "probe", cfg.probe, "tomography", problems);
    take(t, "phases", cfg.phases, "tomography", problems);
    take(t, "restarts", cfg.restarts, "tomography", problems);
    take(t, "counts", cfg.counts, "tomography", problems);
    take(t, "residual_threshold", cfg.residual_threshold, "tomography", problems);
  }
}

} // namespace

RunConfig resolve_config(const std::optional<std::string> &config_path,
                         const Overrides &o, std::vector<std::string> &problems) {
  RunConfig cfg;
  if (config_path)
    load_file(*config_path, cfg, problems);

  if (o.beam_kev)
    cfg.beam_kev = *o.beam_kev;
  if (o.wavelength_nm)
    cfg.wavelength_nm = *o.wavelength_nm;
  if (o.delta_e_ev)
    cfg.delta_e_ev = *o.delta_e_ev;
  if (o.window)
    cfg.window = *o.window;
  if (o.seed)
    cfg.seed = *o.seed;
  if (o.out)
    cfg.out = *o.out;
  if (o.csv)
    cfg.csv = true;
  if (o.probe)
    cfg.probe = *o.probe;
  if (o.counts)
    cfg.counts = *o.counts;
  if (o.residual_threshold)
    cfg.residual_threshold = *o.residual_threshold;
  if (o.phases)
    cfg.phases = *o.phases;
  if (o.restarts)
    cfg.restarts = *o.restarts;

  if (!(cfg.beam_kev > 0.0) || !std::isfinite(cfg.beam_kev))
    problems.push_back("beam kinetic energy must be positive (got " + std::to_string(cfg.beam_kev) + " keV)");
  if (!(cfg.wavelength_nm > 0.0) || !std::isfinite(cfg.wavelength_nm))
    problems.push_back("laser wavelength must be positive (got " + std::to_string(cfg.wavelength_nm) + " nm)");
  if (!(cfg.delta_e_ev >= 0.0))
    problems.push_back("energy spread must be >= 0");
  else if (cfg.wavelength_nm > 0.0 && cfg.delta_e_ev >= feq_photon_energy_ev(cfg.wavelength_nm * 1e-9))
    problems.push_back("energy spread " + std::to_string(cfg.delta_e_ev) +
                       " eV is not below the photon energy " +
                       std::to_string(feq_photon_energy_ev(cfg.wavelength_nm * 1e-9)) + " eV");
  if (cfg.window < 0)
    problems.push_back("window must be 0 (adaptive) or a positive half-width");
  if (cfg.margin_abs < 0 || cfg.margin_rel < 0.0)
    problems.push_back("truncation margins must be >= 0");
  if (cfg.edge_margin < 0)
    problems.push_back("edge margin must be >= 0");
  if (!(cfg.leakage_tol > 0.0))
    problems.push_back("leakage tolerance must be positive");
  if (!(cfg.norm_tol > 0.0))
    problems.push_back("norm tolerance must be positive");
  if (!(cfg.probe > 0.0))
    problems.push_back("probe magnitude must be positive");
  if (cfg.phases < 8)
    problems.push_back("a spectrogram needs at least 8 scan phases");
  if (cfg.restarts < 1)
    problems.push_back("reconstruction needs at least one restart");
  if (cfg.counts < 0.0)
    problems.push_back("counts per column must be >= 0");
  if (!(cfg.residual_threshold > 0.0))
    problems.push_back("residual threshold must be positive");
  return cfg;
}

} // namespace feq::cli
