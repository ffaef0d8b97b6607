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

#include "feq/compiler.hpp"
#include "feq/constants.hpp"
#include "feq/error.hpp"

#include <cmath>

namespace feq {

namespace {

constexpr double kTwoPi = 2.0 * constants::pi;

double wrap_angle(double x) {
  double r = std::remainder(x, kTwoPi);
  if (r <= -constants::pi)
    r += kTwoPi;
  return r;
}

complex unit_phase(complex z) {
  const double m = std::abs(z);
  return m > 0.0 ? z / m : complex(1.0, 0.0);
}

// Phase p with target = p * achieved, assuming they agree up to phase.
complex relative_phase(const QubitGate &target, const QubitGate &achieved) {
  return unit_phase((achieved.adjoint() * target).trace() / 2.0);
}

void require_unitary(const QubitGate &u) {
  if (!u.allFinite() || !is_unitary(u, 1e-9))
    fail(ErrorKind::Argument, "gate matrix is not unitary to 1e-9");
}

// Drops null pulses and drifts, then merges neighbours of the same type.
std::vector<ScheduleElement> canonicalize(std::vector<ScheduleElement> in,
                                          const BeamParameters &beam) {
  std::vector<ScheduleElement> out;
  bool changed = true;
  while (changed) {
    changed = false;
    out.clear();
    for (auto &el : in) {
      if (const auto *p = std::get_if<Pulse>(&el)) {
        if (std::abs(2.0 * p->g.imag()) < kElisionAngle && std::abs(p->g.real()) == 0.0) {
          changed = true;
          continue;
        }
        if (!out.empty() && std::holds_alternative<Pulse>(out.back())) {
          std::get<Pulse>(out.back()).g += p->g;
          changed = true;
          continue;
        }
      } else {
        const auto &d = std::get<Drift>(el);
        if (d.quarter_units % 4 == 0) {
          changed = true;
          continue;
        }
        if (!out.empty() && std::holds_alternative<Drift>(out.back())) {
          auto &prev = std::get<Drift>(out.back());
          prev.quarter_units = (prev.quarter_units + d.quarter_units) % 4;
          prev.meters = prev.quarter_units * beam.quarter_length();
          changed = true;
          continue;
        }
      }
      out.push_back(el);
    }
    in = out;
  }
  return out;
}

Pulse pulse_for_angle(double theta) { return Pulse{complex(0.0, -theta / 2.0)}; }

Drift drift_for(int k, const BeamParameters &beam) {
  return Drift{k, k * beam.quarter_length()};
}

// Angles of W = exp(i a Z) exp(-i b Y) exp(i c Z) for W in SU(2).
EulerXyx zyz_angles(const QubitGate &w) {
  const double m00 = std::abs(w(0, 0));
  const double m10 = std::abs(w(1, 0));
  EulerXyx e;
  e.b = std::atan2(m10, m00);
  constexpr double degenerate = 1e-14;
  if (m10 < degenerate) {
    e.a = std::arg(w(0, 0));
    e.c = 0.0;
  } else if (m00 < degenerate) {
    e.a = -std::arg(w(1, 0));
    e.c = 0.0;
  } else {
    const double sum = std::arg(w(0, 0));
    const double diff = std::arg(w(1, 0));
    e.a = (sum - diff) / 2.0;
    e.c = (sum + diff) / 2.0;
  }
  e.a = wrap_angle(e.a);
  e.b = wrap_angle(e.b);
  e.c = wrap_angle(e.c);
  return e;
}

} // namespace

QubitGate euler_matrix(double a, double b, double c) {
  return rx_gate(a) * ry_gate(b) * rx_gate(c);
}

EulerXyx euler_xyx(const QubitGate &u) {
  require_unitary(u);
  // Conjugating by (X + Z) / sqrt(2) maps X -> Z and Y -> -Y, turning the
  // XYX problem into a ZYZ one:
  //   V = exp(i a Z) exp(-i b Y) exp(i c Z)
  //     = [[e^{i(a+c)} cos b, -e^{i(a-c)} sin b], [e^{i(c-a)} sin b, e^{-i(a+c)} cos b]].
  const double r = 1.0 / std::sqrt(2.0);
  QubitGate h;
  h << r, r, r, -r;
  QubitGate w = h * u * h;
  w /= std::sqrt(w.determinant());

  // W and -W are both SU(2) lifts of the target; keep the one with the smaller
  // total rotation, ties going to the larger angle sum.
  EulerXyx e;
  double best_cost = 0.0;
  for (int lift = 0; lift < 2; ++lift) {
    const EulerXyx cand = zyz_angles(lift == 0 ? w : QubitGate(-w));
    const double cost = std::abs(cand.a) + std::abs(cand.b) + std::abs(cand.c);
    const double sum = cand.a + cand.b + cand.c;
    if (lift == 0 || cost < best_cost - 1e-12 ||
        (std::abs(cost - best_cost) <= 1e-12 && sum > e.a + e.b + e.c)) {
      e = cand;
      best_cost = cost;
    }
  }
  e.phase = relative_phase(u, euler_matrix(e.a, e.b, e.c));
  return e;
}

int Schedule::pulse_count() const {
  int n = 0;
  for (const auto &el : elements)
    n += std::holds_alternative<Pulse>(el);
  return n;
}

int Schedule::drift_count() const {
  return static_cast<int>(elements.size()) - pulse_count();
}

QubitGate schedule_gate(const Schedule &schedule) {
  QubitGate total = QubitGate::Identity();
  for (const auto &el : schedule.elements) {
    if (const auto *p = std::get_if<Pulse>(&el))
      total = qubit_gate_of_pinem(p->g) * total;
    else
      total = qubit_gate_of_fsp(std::get<Drift>(el).quarter_units) * total;
  }
  return total;
}

Schedule compile(const QubitGate &target, const BeamParameters &beam) {
  require_unitary(target);
  Schedule s;
  for (int k = 0; k < 4; ++k) {
    if (gate_fidelity(qubit_gate_of_fsp(k), target) >= 1.0 - 1e-12) {
      if (k != 0)
        s.elements.push_back(drift_for(k, beam));
      s.global_phase = relative_phase(target, schedule_gate(s));
      return s;
    }
  }
  const EulerXyx e = euler_xyx(target);
  s.elements = canonicalize({pulse_for_angle(e.c), drift_for(3, beam), pulse_for_angle(e.b),
                             drift_for(1, beam), pulse_for_angle(e.a)},
                            beam);
  s.global_phase = relative_phase(target, schedule_gate(s));
  return s;
}

Schedule compile(const Gate &gate, const BeamParameters &beam) {
  return compile(gate.unitary(), beam);
}

Schedule compile(const Circuit &circuit, const BeamParameters &beam) {
  Schedule total;
  for (const auto &gate : circuit.gates) {
    Schedule s = compile(gate, beam);
    total.elements.insert(total.elements.end(), s.elements.begin(), s.elements.end());
    total.global_phase *= s.global_phase;
  }
  return total;
}

LadderState simulate_schedule(const Schedule &schedule, const LadderState &input,
                              const TruncationPolicy &policy) {
  LadderState state = input;
  for (const auto &el : schedule.elements) {
    if (const auto *p = std::get_if<Pulse>(&el)) {
      if (policy.mode == TruncationPolicy::Mode::Adaptive)
        state = trimmed(state, 1e-30, policy.edge_margin);
      state = apply_pinem(state, PinemPulse::single(p->g), policy);
    } else {
      state = apply_fsp(state, FspPhase::quarter_units(std::get<Drift>(el).quarter_units));
    }
  }
  return state;
}

QubitGate effective_gate(const Schedule &schedule, const TruncationPolicy &policy) {
  QubitGate m;
  for (int col = 0; col < 2; ++col) {
    const LadderState out = simulate_schedule(schedule, basis_state(col, policy), policy);
    const QubitState q = project_qubit(out, ProjectionOptions{policy.edge_margin, policy.leakage_tol});
    m(0, col) = q.alpha;
    m(1, col) = q.beta;
  }
  return m;
}

double gate_fidelity(const QubitGate &achieved, const QubitGate &target) {
  const double f = std::abs((target.adjoint() * achieved).trace()) / 2.0;
  return std::min(1.0, std::max(0.0, f));
}

} // namespace feq
