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

// CODATA 2018 recommended values.

namespace feq::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Speed of light in vacuum, m/s (exact).
inline constexpr double c = 299792458.0;
/// Elementary charge, C (exact).
inline constexpr double e = 1.602176634e-19;
/// Reduced Planck constant, J s.
inline constexpr double hbar = 1.054571817e-34;
/// Reduced Planck constant, eV s.
inline constexpr double hbar_ev = 6.582119569e-16;
/// Electron rest energy m_e c^2, eV.
inline constexpr double electron_rest_energy_ev = 0.51099895000e6;

} // namespace feq::constants
