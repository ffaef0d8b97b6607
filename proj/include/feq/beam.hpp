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

#include <complex>
#include <optional>

namespace feq {

/// Electron beam and driving-laser parameters with the derived kinematics.
struct BeamParameters {
  double kinetic_energy_ev = 0.0;
  double laser_wavelength_m = 0.0;
  /// Energy spread; carried and gate-checked, never used by the dynamics.
  double delta_e_ev = 0.0;

  double beta = 0.0;  ///< v / c
  double gamma = 0.0; ///< Lorentz factor
  double velocity = 0.0;        ///< m/s
  double omega = 0.0;           ///< laser angular frequency, rad/s
  double omega_compton = 0.0;   ///< m c^2 / hbar, rad/s
  double photon_energy_ev = 0.0; ///< hbar omega
  /// Dispersion length: propagation over z_D adds phase 2 pi l^2 to level l.
  double z_d = 0.0;

  double quarter_length() const noexcept { return z_d / 4.0; }
};

/// Photon energy hbar * omega for a vacuum wavelength, eV.
double photon_energy_ev(double wavelength_m);

/// Derives all kinematic fields from the kinetic energy and wavelength.
/// Rejects delta_e_ev >= hbar omega: the ladder would not be resolved.
BeamParameters derive_beam(double kinetic_energy_ev, double wavelength_m,
                           double delta_e_ev = 0.0);

/// Linear field-to-coupling model g = calibration * field.
///
/// The true proportionality depends on the near-field geometry, so the
/// calibration (per V/m) is user supplied.
std::complex<double> field_to_g(double field_v_per_m,
                                std::optional<std::complex<double>> calibration);

} // namespace feq
