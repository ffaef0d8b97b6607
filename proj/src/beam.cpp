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

#include "feq/beam.hpp"

#include "feq/constants.hpp"
#include "feq/error.hpp"

#include <cmath>
#include <sstream>

namespace feq {

double photon_energy_ev(double wavelength_m) {
  return constants::hbar_ev * 2.0 * constants::pi * constants::c / wavelength_m;
}

BeamParameters derive_beam(double kinetic_energy_ev, double wavelength_m,
                           double delta_e_ev) {
  if (!(kinetic_energy_ev > 0.0) || !std::isfinite(kinetic_energy_ev))
    fail(ErrorKind::Config, "kinetic energy must be positive");
  if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m))
    fail(ErrorKind::Config, "laser wavelength must be positive");
  if (!(delta_e_ev >= 0.0))
    fail(ErrorKind::Config, "energy spread must be non-negative");

  const double mc2 = constants::electron_rest_energy_ev;
  BeamParameters b;
  b.kinetic_energy_ev = kinetic_energy_ev;
  b.laser_wavelength_m = wavelength_m;
  b.delta_e_ev = delta_e_ev;
  b.gamma = 1.0 + kinetic_energy_ev / mc2;
  // sqrt(T (T + 2 m c^2)) / (T + m c^2) avoids cancellation at low energy.
  b.beta = std::sqrt(kinetic_energy_ev * (kinetic_energy_ev + 2.0 * mc2)) /
           (kinetic_energy_ev + mc2);
  b.velocity = b.beta * constants::c;
  b.omega = 2.0 * constants::pi * constants::c / wavelength_m;
  b.omega_compton = mc2 / constants::hbar_ev;
  b.photon_energy_ev = constants::hbar_ev * b.omega;
  b.z_d = 2.0 * b.beta * b.beta * b.gamma * b.gamma * b.gamma *
          (b.omega_compton / b.omega) * (b.velocity / b.omega);

  if (delta_e_ev >= b.photon_energy_ev) {
    std::ostringstream os;
    os << "energy spread " << delta_e_ev << " eV is not below the photon energy "
       << b.photon_energy_ev << " eV";
    fail(ErrorKind::Config, os.str());
  }
  return b;
}

std::complex<double> field_to_g(double field_v_per_m,
                                std::optional<std::complex<double>> calibration) {
  if (!calibration)
    fail(ErrorKind::Config, "field-to-g conversion needs a calibration constant");
  return *calibration * field_v_per_m;
}

} // namespace feq
