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
#include "feq/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace feq;

namespace {

const BeamParameters &beam() {
  static const BeamParameters b = derive_beam(200e3, 800e-9);
  return b;
}

void check_parse_error(const char *src, int line) {
  try {
    parse_circuit(src);
    FAIL("expected a parse error for: " << src);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("line " + std::to_string(line)) != std::string::npos);
  }
}

} // namespace

TEST_CASE("parsing named gates and rotations") {
  const auto c = parse_circuit("H\nX\n");
  REQUIRE(c.gates.size() == 2);
  CHECK(c.gates[0].kind == Gate::Kind::H);
  CHECK(c.gates[1].kind == Gate::Kind::X);

  const auto r = parse_circuit("RX(0.25pi)");
  REQUIRE(r.gates.size() == 1);
  CHECK(r.gates[0].kind == Gate::Kind::Rx);
  CHECK(r.gates[0].angle == doctest::Approx(M_PI / 4).epsilon(1e-15));

  const auto mixed = parse_circuit("# header\r\n  rz(pi/4) # trailing\r\n\r\nry(-3pi/2)\nrx(1.5)\nnot\ns\nt\ny\nz\nrx(2*pi)\n");
  REQUIRE(mixed.gates.size() == 9);
  CHECK(mixed.gates[0].angle == doctest::Approx(M_PI / 4));
  CHECK(mixed.gates[1].angle == doctest::Approx(-1.5 * M_PI));
  CHECK(mixed.gates[2].angle == 1.5);
  CHECK(mixed.gates[3].kind == Gate::Kind::Not);
  CHECK(mixed.gates[8].angle == doctest::Approx(2 * M_PI));
}

TEST_CASE("parsing matrices") {
  const auto c = parse_circuit("U [[0, 1], [1, 0]]\nU [[0.70710678118654752,0.70710678118654752i],[0.70710678118654752i,0.70710678118654752]]\n");
  REQUIRE(c.gates.size() == 2);
  CHECK(c.gates[0].kind == Gate::Kind::Matrix);
  CHECK(c.gates[1].matrix(0, 1) == complex(0, 0.70710678118654752));
  const auto j = parse_circuit("U [[1,0],[0,-1j]]");
  CHECK(j.gates[0].matrix(1, 1) == complex(0, -1));
}

TEST_CASE("parse errors carry line numbers") {
  check_parse_error("U [[1,0],[0,2]]", 1);
  check_parse_error("H\nFOO\n", 2);
  check_parse_error("H\n\nRX(abc)\n", 3);
  check_parse_error("RX(0.5pi", 1);
  check_parse_error("U [[1,0],[0]]", 1);
  CHECK_THROWS_AS(parse_circuit(""), Error);
  CHECK_THROWS_AS(parse_circuit("# only a comment\n\n"), Error);
}

TEST_CASE("unparse round trip") {
  const char *src = "H\nX\nY\nZ\nS\nT\nNOT\nRX(0.1)\nRY(-2.5pi)\nRZ(pi/3)\nU [[0,1],[1,0]]\n"
                    "U [[0.6,0.8i],[0.8i,0.6]]\n";
  const auto c = parse_circuit(src);
  const auto again = parse_circuit(unparse(c));
  REQUIRE(again.gates.size() == c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    CHECK(again.gates[i] == c.gates[i]);
}

TEST_CASE("Euler decomposition examples") {
  const auto id = euler_xyx(Eigen::Matrix2cd::Identity());
  CHECK(std::abs(id.a) + std::abs(id.b) + std::abs(id.c) < 1e-12);

  const complex i(0, 1);
  const auto ix = euler_xyx(oracle::mat(0, i, i, 0));
  CHECK(ix.a == doctest::Approx(M_PI / 2));
  CHECK(std::abs(ix.b) < 1e-12);
  CHECK(std::abs(ix.c) < 1e-12);
  CHECK(std::abs(ix.phase - 1.0) < 1e-12);

  const auto h = euler_xyx(oracle::hadamard());
  const Eigen::Matrix2cd rebuilt = h.phase * oracle::rx(h.a) * oracle::ry(h.b) * oracle::rx(h.c);
  CHECK((rebuilt - oracle::hadamard()).cwiseAbs().maxCoeff() < 1e-10);

  const Eigen::Matrix2cd f = oracle::mat(1, 0, 0, i);
  const Eigen::Matrix2cd other =
      i * oracle::rx(M_PI / 2) * f * oracle::rx(-M_PI / 4) * f * f * f;
  CHECK(oracle::fidelity(other, oracle::hadamard()) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(euler_xyx(oracle::mat(1, 0, 0, 2)), Error);
}

TEST_CASE("Euler angles on Haar-random unitaries") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const Eigen::Matrix2cd u = oracle::haar_unitary(rng);
    const auto e = euler_xyx(u);
    for (double x : {e.a, e.b, e.c}) {
      CHECK(x > -M_PI);
      CHECK(x <= M_PI);
    }
    const Eigen::Matrix2cd rebuilt = e.phase * oracle::rx(e.a) * oracle::ry(e.b) * oracle::rx(e.c);
    CHECK((rebuilt - u).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("printed Hadamard sequence is not a Hadamard") {
  const complex i(0, 1);
  const Eigen::Matrix2cd f = oracle::mat(1, 0, 0, i);
  const Eigen::Matrix2cd printed = oracle::rx(M_PI) * f * oracle::rx(M_PI / 2) * f * f * f;
  CHECK(oracle::fidelity(printed, oracle::hadamard()) < 0.9);
}

TEST_CASE("compiled schedule shapes") {
  const auto s = compile(Gate::named(Gate::Kind::S), beam());
  REQUIRE(s.elements.size() == 1);
  const auto &d = std::get<Drift>(s.elements[0]);
  CHECK(d.quarter_units == 1);
  CHECK(d.meters == doctest::Approx(beam().z_d / 4));

  const auto z = compile(Gate::named(Gate::Kind::Z), beam());
  REQUIRE(z.elements.size() == 1);
  CHECK(std::get<Drift>(z.elements[0]).quarter_units == 2);

  const auto rz = compile(Gate::rotation(Gate::Kind::Rz, M_PI / 2), beam());
  CHECK(rz.pulse_count() == 0);
  CHECK(rz.drift_count() == 1);

  const auto x = compile(Gate::named(Gate::Kind::X), beam());
  REQUIRE(x.elements.size() == 1);
  const auto &p = std::get<Pulse>(x.elements[0]);
  CHECK(std::abs(p.g - complex(0, -M_PI / 4)) < 1e-12);

  const auto h = compile(Gate::named(Gate::Kind::H), beam());
  CHECK(h.pulse_count() <= 3);
  CHECK(h.drift_count() <= 2);

  const auto id = compile(QubitGate(Eigen::Matrix2cd::Identity()), beam());
  CHECK(id.elements.empty());

  const auto t = compile(Gate::named(Gate::Kind::T), beam());
  CHECK(t.pulse_count() <= 3);
  CHECK(t.drift_count() <= 2);
  CHECK(gate_fidelity(schedule_gate(t), rz_gate(M_PI / 4)) >= 1.0 - 1e-12);
}

TEST_CASE("schedule algebra reproduces targets with the recorded phase") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Matrix2cd u = oracle::haar_unitary(rng);
    const auto s = compile(QubitGate(u), beam());
    CHECK(s.pulse_count() <= 3);
    CHECK(s.drift_count() <= 2);
    for (const auto &el : s.elements)
      if (const auto *p = std::get_if<Pulse>(&el))
        CHECK(p->g.real() == 0.0);
    const QubitGate m = s.global_phase * schedule_gate(s);
    CHECK((m - u).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("full-ladder simulation of compiled gates") {
  const auto policy = TruncationPolicy::adaptive();
  const complex i(0, 1);
  const auto x = compile(Gate::named(Gate::Kind::X), beam());
  const auto q = project_qubit(simulate_schedule(x, basis_state(0, policy), policy));
  CHECK(std::abs(std::abs(q.beta) - 1.0) < 1e-9);
  CHECK(std::abs(q.alpha) < 1e-9);

  const auto h = compile(Gate::named(Gate::Kind::H), beam());
  CHECK(gate_fidelity(effective_gate(h, policy), oracle::hadamard()) >= 1.0 - 1e-9);
  const auto hh = simulate_schedule(h, simulate_schedule(h, basis_state(0, policy), policy), policy);
  const auto q2 = project_qubit(hh);
  CHECK(std::abs(std::abs(q2.alpha) - 1.0) < 1e-9);
  CHECK(std::abs(q2.beta) < 1e-9);

  const auto zero = basis_state(0, policy);
  CHECK(simulate_schedule(Schedule{}, zero, policy) == zero);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const Eigen::Matrix2cd u = oracle::haar_unitary(rng);
    const auto s = compile(QubitGate(u), beam());
    CHECK(gate_fidelity(effective_gate(s, policy), u) >= 1.0 - 1e-7);
  }
}

TEST_CASE("fidelity metric") {
  const complex i(0, 1);
  const Eigen::Matrix2cd x = oracle::mat(0, 1, 1, 0), z = oracle::mat(1, 0, 0, -1);
  CHECK(gate_fidelity(x, x) == doctest::Approx(1.0));
  CHECK(gate_fidelity(QubitGate(i * x), x) == doctest::Approx(1.0));
  CHECK(gate_fidelity(x, z) == doctest::Approx(0.0));
}

TEST_CASE("circuit compilation concatenates gates") {
  const auto c = parse_circuit("S\nS\n");
  const auto s = compile(c, beam());
  REQUIRE(s.elements.size() == 2);
  CHECK(gate_fidelity(schedule_gate(s), rz_gate(M_PI)) >= 1.0 - 1e-12);
}
