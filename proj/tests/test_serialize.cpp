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

#include "feq/error.hpp"
#include "feq/serialize.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

using namespace feq;

TEST_CASE("state JSON round trip") {
  std::mt19937_64 rng(41);
  const LadderState s(-3, oracle::random_amplitudes(rng, 7));
  const auto text = state_to_json(s);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["l_min"] == -3);
  CHECK(j["amplitudes"].size() == 7);
  CHECK(j["amplitudes"][0].size() == 2);
  CHECK(state_from_json(text) == s);
}

TEST_CASE("malformed state JSON") {
  for (const char *bad : {"", "{", "{\"l_min\": 0}", "{\"l_min\": 0, \"amplitudes\": []}",
                          "{\"l_min\": 0, \"amplitudes\": [[1]]}",
                          "{\"l_min\": \"x\", \"amplitudes\": [[1, 0]]}"}) {
    try {
      state_from_json(bad);
      FAIL("accepted: " << bad);
    } catch (const Error &e) {
      CHECK((e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Window));
    }
  }
}

TEST_CASE("beam JSON carries inputs and derived fields") {
  const auto b = derive_beam(150e3, 1030e-9, 0.3);
  const auto text = beam_to_json(b);
  const auto j = nlohmann::json::parse(text);
  for (const char *key : {"kinetic_energy_ev", "laser_wavelength_m", "delta_e_ev", "beta", "gamma",
                          "velocity_m_per_s", "omega_rad_per_s", "omega_compton_rad_per_s",
                          "photon_energy_ev", "z_d_m", "quarter_length_m"})
    CHECK(j.contains(key));
  const auto back = beam_from_json(text);
  CHECK(back.z_d == b.z_d);
  CHECK(back.beta == b.beta);
  CHECK(back.delta_e_ev == b.delta_e_ev);
}

TEST_CASE("qubit JSON") {
  const QubitState q{complex(0.6, -0.1), complex(0.0, 0.79)};
  const auto j = nlohmann::json::parse(qubit_to_json(q));
  CHECK(j["alpha"][1] == -0.1);
  const auto back = qubit_from_json(qubit_to_json(q));
  CHECK(back.alpha == q.alpha);
  CHECK(back.beta == q.beta);
  const auto comps = nlohmann::json::parse(components_to_json({1.0, complex(0, 2)}));
  CHECK(comps.size() == 2);
  CHECK(comps[1][1] == 2.0);
}

TEST_CASE("schedule JSON") {
  Schedule s;
  s.elements = {Pulse{complex(0, -0.25)}, Drift{3, 0.057}, Pulse{complex(0, 0.5)}};
  s.global_phase = std::polar(1.0, 0.3);
  const auto text = schedule_to_json(s);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["elements"][0].contains("pulse"));
  CHECK(j["elements"][1]["drift"]["quarter_units"] == 3);
  CHECK(j["elements"][1]["drift"]["meters"] == 0.057);
  const auto back = schedule_from_json(text);
  REQUIRE(back.elements.size() == 3);
  CHECK(std::get<Pulse>(back.elements[2]).g == complex(0, 0.5));
  CHECK(back.global_phase == s.global_phase);
  CHECK_THROWS_AS(schedule_from_json("{\"elements\": [{\"wiggle\": 1}]}"), Error);
}

TEST_CASE("reconstruction JSON") {
  Reconstruction r{LadderState(-1, {0.0, 1.0, 0.0}), 2.5e-7, 4, 99, false};
  const auto text = reconstruction_to_json(r);
  const auto j = nlohmann::json::parse(text);
  for (const char *key : {"state", "residual", "restarts", "seed"})
    CHECK(j.contains(key));
  const auto back = reconstruction_from_json(text);
  CHECK(back.state == r.state);
  CHECK(back.residual == r.residual);
  CHECK(back.restarts == 4);
  CHECK(back.seed == 99);
  CHECK_FALSE(back.failed);
}

TEST_CASE("eigenphase CSV") {
  const std::vector<double> phases = {-1.25, 0.0, 0.1, 3.141592653589793};
  const auto csv = eigenphases_to_csv(phases);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(eigenphases_from_csv(csv) == phases);
  CHECK_THROWS_AS(eigenphases_from_csv("0.1\nnope\n"), Error);
}
