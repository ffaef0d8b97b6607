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

#include "feq/serialize.hpp"

#include "feq/error.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace feq {

using nlohmann::json;

namespace {

json pair(complex z) { return json::array({z.real(), z.imag()}); }

complex to_complex(const json &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(ErrorKind::Parse, "complex value must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception &e) {
    fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

template <class T> T field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::Parse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &) {
    fail(ErrorKind::Parse, std::string("field '") + key + "' has the wrong type");
  }
}

json state_json(const LadderState &state) {
  json amps = json::array();
  for (const auto &a : state.amplitudes())
    amps.push_back(pair(a));
  return {{"l_min", state.l_min()}, {"amplitudes", std::move(amps)}};
}

LadderState state_of(const json &j) {
  const int l_min = field<int>(j, "l_min");
  const json amps = field<json>(j, "amplitudes");
  if (!amps.is_array() || amps.empty())
    fail(ErrorKind::Parse, "'amplitudes' must be a non-empty array");
  std::vector<complex> values;
  values.reserve(amps.size());
  for (const auto &a : amps)
    values.push_back(to_complex(a));
  return {l_min, std::move(values)};
}

} // namespace

std::string state_to_json(const LadderState &state) { return state_json(state).dump(); }

LadderState state_from_json(std::string_view text) { return state_of(parse(text)); }

std::string beam_to_json(const BeamParameters &b) {
  const json j = {{"kinetic_energy_ev", b.kinetic_energy_ev},
                  {"laser_wavelength_m", b.laser_wavelength_m},
                  {"delta_e_ev", b.delta_e_ev},
                  {"beta", b.beta},
                  {"gamma", b.gamma},
                  {"velocity_m_per_s", b.velocity},
                  {"omega_rad_per_s", b.omega},
                  {"omega_compton_rad_per_s", b.omega_compton},
                  {"photon_energy_ev", b.photon_energy_ev},
                  {"z_d_m", b.z_d},
                  {"quarter_length_m", b.quarter_length()}};
  return j.dump(2);
}

BeamParameters beam_from_json(std::string_view text) {
  const json j = parse(text);
  return derive_beam(field<double>(j, "kinetic_energy_ev"), field<double>(j, "laser_wavelength_m"),
                     j.value("delta_e_ev", 0.0));
}

std::string qubit_to_json(const QubitState &q) {
  return json{{"alpha", pair(q.alpha)}, {"beta", pair(q.beta)}}.dump();
}

QubitState qubit_from_json(std::string_view text) {
  const json j = parse(text);
  return {to_complex(field<json>(j, "alpha")), to_complex(field<json>(j, "beta"))};
}

std::string components_to_json(const std::vector<complex> &values) {
  json arr = json::array();
  for (const auto &v : values)
    arr.push_back(pair(v));
  return arr.dump();
}

std::string schedule_to_json(const Schedule &schedule) {
  json elements = json::array();
  for (const auto &el : schedule.elements) {
    if (const auto *p = std::get_if<Pulse>(&el))
      elements.push_back({{"pulse", {{"g", pair(p->g)}}}});
    else {
      const auto &d = std::get<Drift>(el);
      elements.push_back({{"drift", {{"quarter_units", d.quarter_units}, {"meters", d.meters}}}});
    }
  }
  return json{{"elements", std::move(elements)}, {"global_phase", pair(schedule.global_phase)}}
      .dump(2);
}

Schedule schedule_from_json(std::string_view text) {
  const json j = parse(text);
  Schedule s;
  const json elements = field<json>(j, "elements");
  if (!elements.is_array())
    fail(ErrorKind::Parse, "'elements' must be an array");
  for (const auto &el : elements) {
    if (el.contains("pulse")) {
      s.elements.push_back(Pulse{to_complex(field<json>(el.at("pulse"), "g"))});
    } else if (el.contains("drift")) {
      const json &d = el.at("drift");
      const int k = field<int>(d, "quarter_units");
      if (k < 0)
        fail(ErrorKind::Parse, "drift quarter_units must be >= 0");
      s.elements.push_back(Drift{k, field<double>(d, "meters")});
    } else {
      fail(ErrorKind::Parse, "schedule element must be a pulse or a drift");
    }
  }
  s.global_phase = to_complex(field<json>(j, "global_phase"));
  return s;
}

std::string reconstruction_to_json(const Reconstruction &rec) {
  return json{{"state", state_json(rec.state)},
              {"residual", rec.residual},
              {"restarts", rec.restarts},
              {"seed", rec.seed},
              {"failed", rec.failed}}
      .dump(2);
}

Reconstruction reconstruction_from_json(std::string_view text) {
  const json j = parse(text);
  return {state_of(field<json>(j, "state")), field<double>(j, "residual"),
          field<int>(j, "restarts"), field<std::uint64_t>(j, "seed"), j.value("failed", false)};
}

std::string eigenphases_to_csv(const std::vector<double> &phases) {
  std::string out;
  char buf[40];
  for (double p : phases) {
    std::snprintf(buf, sizeof buf, "%.17g\n", p);
    out += buf;
  }
  return out;
}

std::vector<double> eigenphases_from_csv(std::string_view text) {
  std::vector<double> out;
  std::istringstream is{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    char *end = nullptr;
    const double v = std::strtod(line.c_str(), &end);
    if (end == line.c_str() || end != line.c_str() + line.size())
      fail(ErrorKind::Parse, "eigenphase CSV line " + std::to_string(line_no) + " is not a number");
    out.push_back(v);
  }
  return out;
}

} // namespace feq
