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

#include "feq/beam.hpp"
#include "feq/ladder.hpp"
#include "feq/qubit.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace feq {

/// One abstract 1-qubit gate of the circuit language.
///
/// Rotation angles follow the qubit-space conventions: RX(t) is the pulse
/// gate [[cos t, i sin t], [i sin t, cos t]], RY(t) = F RX(t) F^3 and
/// RZ(t) = diag(1, e^{i t}), so S = RZ(pi/2) and Z = RZ(pi).
struct Gate {
  enum class Kind { H, X, Y, Z, S, T, Not, Rx, Ry, Rz, Matrix };

  Kind kind = Kind::H;
  double angle = 0.0;
  QubitGate matrix = QubitGate::Identity();

  static Gate named(Kind k) { return {k, 0.0, QubitGate::Identity()}; }
  static Gate rotation(Kind k, double theta) { return {k, theta, QubitGate::Identity()}; }
  static Gate custom(const QubitGate &m) { return {Kind::Matrix, 0.0, m}; }

  QubitGate unitary() const;

  friend bool operator==(const Gate &a, const Gate &b) {
    return a.kind == b.kind && a.angle == b.angle && a.matrix == b.matrix;
  }
};

struct Circuit {
  std::string name;
  std::vector<Gate> gates;
  std::string source;
};

/// One gate per line:
///   H | X | Y | Z | S | T | NOT | RX(<angle>) | RY(<angle>) | RZ(<angle>)
///   U [[a, b], [c, d]]
/// Angles are radians or multiples of pi ("0.5pi", "pi/4", "-3pi/2").
/// Matrix entries are complex literals ("0.5", "-0.5i", "1+2i").
/// '#' starts a comment; blank lines are ignored. Throws Parse with the line
/// number on any error, including a circuit with no gates.
Circuit parse_circuit(std::string_view source);

/// Canonical text that parse_circuit maps back to an identical circuit.
std::string unparse(const Circuit &circuit);
std::string unparse(const Gate &gate);

/// U = phase * rx(a) * ry(b) * rx(c), angles in (-pi, pi].
struct EulerXyx {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  complex phase = 1.0;
};

EulerXyx euler_xyx(const QubitGate &u);
QubitGate euler_matrix(double a, double b, double c);

struct Pulse {
  complex g;
};

struct Drift {
  int quarter_units = 0;
  double meters = 0.0;
};

using ScheduleElement = std::variant<Pulse, Drift>;

/// Physical operations in the order they act on the electron.
struct Schedule {
  std::vector<ScheduleElement> elements;
  /// Target = global_phase * (product of element gates); diagnostic only.
  complex global_phase = 1.0;

  int pulse_count() const;
  int drift_count() const;
};

/// Pulses below this rotation angle are dropped from compiled schedules.
inline constexpr double kElisionAngle = 1e-12;

/// Compiles a 1-qubit unitary into at most three pulses and two drifts.
///
/// Diagonal targets equal to diag(1, i^k) up to phase become a single k
/// quarter-unit drift. Everything else goes through the XYX decomposition:
/// pulse(c), drift(3), pulse(b), drift(1), pulse(a), with null elements
/// elided and neighbours merged. Pulses are purely imaginary, g = -i t / 2.
Schedule compile(const QubitGate &target, const BeamParameters &beam);
Schedule compile(const Gate &gate, const BeamParameters &beam);

/// Gate-by-gate compilation concatenated in circuit order.
Schedule compile(const Circuit &circuit, const BeamParameters &beam);

/// Product of the qubit-space gates of the elements.
QubitGate schedule_gate(const Schedule &schedule);

/// Runs the schedule on the full ladder through the operators module.
LadderState simulate_schedule(const Schedule &schedule, const LadderState &input,
                              const TruncationPolicy &policy = {});

/// Qubit gate realized by the full-ladder simulation, read off from the
/// projections of the simulated |0> and |1>.
QubitGate effective_gate(const Schedule &schedule, const TruncationPolicy &policy = {});

/// |tr(target^dagger achieved)| / 2.
double gate_fidelity(const QubitGate &achieved, const QubitGate &target);

} // namespace feq
