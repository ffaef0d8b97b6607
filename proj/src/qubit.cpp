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

#include "feq/qubit.hpp"

#include "feq/error.hpp"

#include <cmath>
#include <sstream>

namespace feq {

namespace {

void check_projection_support(const LadderState &state, const ProjectionOptions &opts) {
  const double leak = support_leakage(state, opts.edge_margin);
  if (leak > opts.leakage_tol) {
    std::ostringstream os;
    os << "comb projection invalid: edge probability " << leak << " exceeds "
       << opts.leakage_tol;
    fail(ErrorKind::Projection, os.str());
  }
}

constexpr complex kI(0.0, 1.0);

} // namespace

std::vector<complex> project_period_p(const LadderState &state, int p,
                                      const ProjectionOptions &opts) {
  if (p < 2)
    fail(ErrorKind::Argument, "comb period must be >= 2");
  check_projection_support(state, opts);
  std::vector<complex> sums(static_cast<std::size_t>(p));
  const auto amps = state.amplitudes();
  int r = state.l_min() % p;
  if (r < 0)
    r += p;
  for (const auto &a : amps) {
    sums[static_cast<std::size_t>(r)] += a;
    if (++r == p)
      r = 0;
  }
  return sums;
}

QubitState project_qubit(const LadderState &state, const ProjectionOptions &opts) {
  const auto sums = project_period_p(state, 2, opts);
  return {sums[0], sums[1]};
}

QubitGate rx_gate(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  QubitGate m;
  m << c, kI * s, kI * s, c;
  return m;
}

QubitGate ry_gate(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  QubitGate m;
  m << c, s, -s, c;
  return m;
}

QubitGate rz_gate(double theta) {
  QubitGate m;
  m << 1.0, 0.0, 0.0, std::polar(1.0, theta);
  return m;
}

QubitGate qubit_gate_of_pinem(complex g) { return rx_gate(-2.0 * g.imag()); }

QubitGate qubit_gate_of_pulse(const PinemPulse &pulse) {
  double odd = 0.0;
  double even = 0.0;
  for (const auto &[h, g] : pulse.couplings)
    ((h & 1) ? odd : even) += -2.0 * g.imag();
  return std::polar(1.0, even) * rx_gate(odd);
}

QubitGate qubit_gate_of_fsp(int quarter_units) {
  if (quarter_units < 0)
    fail(ErrorKind::Argument, "drift quarter-units must be >= 0");
  static const complex powers[4] = {1.0, kI, -1.0, -kI};
  QubitGate m;
  m << 1.0, 0.0, 0.0, powers[quarter_units % 4];
  return m;
}

QubitState apply_gate(const QubitGate &gate, const QubitState &q) {
  return {gate(0, 0) * q.alpha + gate(0, 1) * q.beta,
          gate(1, 0) * q.alpha + gate(1, 1) * q.beta};
}

bool is_unitary(const QubitGate &gate, double tol) {
  const QubitGate defect = gate.adjoint() * gate - QubitGate::Identity();
  return defect.cwiseAbs().maxCoeff() <= tol;
}

std::array<double, 3> bloch_vector(const QubitState &q) {
  const double n = q.norm_squared();
  if (!(n > 0.0))
    fail(ErrorKind::Argument, "Bloch vector of a zero qubit state");
  const complex a = q.alpha / std::sqrt(n);
  const complex b = q.beta / std::sqrt(n);
  const complex cross = std::conj(a) * b;
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(a) - std::norm(b)};
}

double closure_check(const LadderState &state, const PhysicalOp &op,
                     const TruncationPolicy &policy, const ProjectionOptions &opts) {
  const QubitState before = project_qubit(state, opts);
  QubitGate gate;
  LadderState after = state;
  if (const auto *pulse = std::get_if<PinemPulse>(&op)) {
    gate = qubit_gate_of_pulse(*pulse);
    after = apply_pinem(state, *pulse, policy);
  } else {
    const auto &drift = std::get<FspPhase>(op);
    const int k = drift.quarter_count();
    gate = qubit_gate_of_fsp(k);
    after = apply_fsp(state, FspPhase::quarter_units(k));
  }
  const QubitState projected = project_qubit(after, opts);
  const QubitState predicted = apply_gate(gate, before);
  return std::sqrt(std::norm(projected.alpha - predicted.alpha) +
                   std::norm(projected.beta - predicted.beta));
}

} // namespace feq
