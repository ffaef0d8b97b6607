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
#include "feq/operators.hpp"

#include <Eigen/Dense>

#include <array>
#include <variant>
#include <vector>

namespace feq {

/// Comb-projected qubit amplitudes: alpha sums the even levels, beta the odd
/// ones. Not normalized in general.
struct QubitState {
  complex alpha;
  complex beta;

  double norm_squared() const noexcept {
    return std::norm(alpha) + std::norm(beta);
  }
};

using QubitGate = Eigen::Matrix2cd;

/// Validity gate for the comb identities, which hold only when the state's
/// support stays away from the window edges.
struct ProjectionOptions {
  int edge_margin = 4;
  double leakage_tol = 1e-12;
};

QubitState project_qubit(const LadderState &state, const ProjectionOptions &opts = {});

/// Residue-class sums: component r is sum_l psi_{p l + r}, r = 0..p-1.
std::vector<complex> project_period_p(const LadderState &state, int p,
                                      const ProjectionOptions &opts = {});

/// [[cos t, i sin t], [i sin t, cos t]].
QubitGate rx_gate(double theta);
/// F rx(t) F^3 with F = diag(1, i): [[cos t, sin t], [-sin t, cos t]].
QubitGate ry_gate(double theta);
/// diag(1, e^{i t}); rz(pi / 2) is the quarter-unit drift.
QubitGate rz_gate(double theta);

/// rx(-2 Im g): only the imaginary part of g moves the qubit.
QubitGate qubit_gate_of_pinem(complex g);
/// Induced gate of a general pulse. Odd harmonics rotate about x, even
/// harmonics add a global phase e^{-2 i Im g_h}.
QubitGate qubit_gate_of_pulse(const PinemPulse &pulse);
/// diag(1, i^k).
QubitGate qubit_gate_of_fsp(int quarter_units);

QubitState apply_gate(const QubitGate &gate, const QubitState &q);

bool is_unitary(const QubitGate &gate, double tol = 1e-12);

/// Bloch vector of the normalized (alpha, beta).
std::array<double, 3> bloch_vector(const QubitState &q);

using PhysicalOp = std::variant<PinemPulse, FspPhase>;

/// Intertwining defect || T(U psi) - u_q T(psi) || of one physical operation.
/// Drifts must be whole quarter-units (Legality otherwise).
double closure_check(const LadderState &state, const PhysicalOp &op,
                     const TruncationPolicy &policy = {},
                     const ProjectionOptions &opts = {});

} // namespace feq
