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
#include "feq/qubit.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace feq;

namespace {

double max_diff(const QubitGate &a, const Eigen::Matrix2cd &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

LadderState interior_state(std::mt19937_64 &rng, int half) {
  std::vector<complex> amps = oracle::random_amplitudes(rng, static_cast<std::size_t>(2 * half + 1));
  return LadderState(-half, std::move(amps)).rewindowed(-half - 8, half + 8);
}

} // namespace

TEST_CASE("projection sums") {
  const auto zero = basis_state(0, TruncationPolicy::fixed(8));
  const auto q = project_qubit(zero);
  CHECK(q.alpha == complex(1.0));
  CHECK(q.beta == complex(0.0));

  const double s = 1.0 / std::sqrt(2.0);
  const LadderState st = LadderState(1, {s, s}).rewindowed(-8, 8);
  const auto q2 = project_qubit(st);
  CHECK(q2.alpha == complex(s));
  CHECK(q2.beta == complex(s));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto x = interior_state(rng, 6);
    std::vector<complex> amps(x.amplitudes().begin(), x.amplitudes().end());
    const auto ref = oracle::residue_sums(x.l_min(), amps, 2);
    const auto got = project_qubit(x);
    CHECK(std::abs(got.alpha - ref[0]) < 1e-14);
    CHECK(std::abs(got.beta - ref[1]) < 1e-14);
  }
}

TEST_CASE("period-p projection") {
  const auto zero = basis_state(0, TruncationPolicy::fixed(8));
  const auto p4 = project_period_p(zero, 4);
  REQUIRE(p4.size() == 4);
  CHECK(p4[0] == complex(1.0));
  CHECK(p4[1] == complex(0.0));
  CHECK(p4[2] == complex(0.0));
  CHECK(p4[3] == complex(0.0));

  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const auto x = interior_state(rng, 9);
    std::vector<complex> amps(x.amplitudes().begin(), x.amplitudes().end());
    for (int p : {3, 4, 5}) {
      const auto ref = oracle::residue_sums(x.l_min(), amps, p);
      const auto got = project_period_p(x, p);
      for (int r = 0; r < p; ++r)
        CHECK(std::abs(got[static_cast<std::size_t>(r)] - ref[static_cast<std::size_t>(r)]) < 1e-14);
    }
    const auto q = project_qubit(x);
    const auto p2 = project_period_p(x, 2);
    CHECK(q.alpha == p2[0]);
    CHECK(q.beta == p2[1]);
  }
  CHECK_THROWS_AS(project_period_p(zero, 1), Error);
}

TEST_CASE("projection refuses edge support") {
  const auto edge = basis_state(8, TruncationPolicy::fixed(8));
  try {
    project_qubit(edge);
    FAIL("expected a projection error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Projection);
  }
}

TEST_CASE("gate builders") {
  const complex i(0, 1);
  CHECK(max_diff(qubit_gate_of_pinem(2.7), Eigen::Matrix2cd::Identity()) < 1e-15);
  CHECK(max_diff(qubit_gate_of_pinem(complex(0, -M_PI / 4)), oracle::mat(0, i, i, 0)) < 1e-15);
  CHECK(max_diff(rx_gate(M_PI), -Eigen::Matrix2cd::Identity()) < 1e-15);
  CHECK(max_diff(qubit_gate_of_fsp(0), Eigen::Matrix2cd::Identity()) == 0.0);
  CHECK(max_diff(qubit_gate_of_fsp(1), oracle::mat(1, 0, 0, i)) == 0.0);
  CHECK(max_diff(qubit_gate_of_fsp(4), Eigen::Matrix2cd::Identity()) == 0.0);
  CHECK(max_diff(rz_gate(M_PI / 2), oracle::mat(1, 0, 0, i)) < 1e-15);

  const Eigen::Matrix2cd f = oracle::mat(1, 0, 0, i);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int t = 0; t < 100; ++t) {
    const double th = u(rng);
    CHECK(max_diff(rx_gate(th), oracle::rx(th)) < 1e-15);
    CHECK(max_diff(ry_gate(th), f * oracle::rx(th) * f * f * f) < 1e-14);
    CHECK(is_unitary(rx_gate(th)));
    CHECK(is_unitary(ry_gate(th)));
    CHECK(is_unitary(rz_gate(th)));
    CHECK(is_unitary(qubit_gate_of_pinem(complex(u(rng), u(rng)))));
  }
  CHECK_FALSE(is_unitary(oracle::mat(1, 0, 0, 2)));
}

TEST_CASE("harmonic pulses") {
  PinemPulse p;
  p.couplings[2] = complex(0.3, 0.9);
  const auto g = qubit_gate_of_pulse(p);
  CHECK(std::abs(std::abs(g(0, 0)) - 1.0) < 1e-15);
  CHECK(std::abs(g(0, 1)) < 1e-15);
  CHECK(std::abs(g(0, 0) - g(1, 1)) < 1e-15);
}

TEST_CASE("Bloch vector") {
  const auto z = bloch_vector({1.0, 0.0});
  CHECK(z[2] == doctest::Approx(1.0));
  const double s = 1.0 / std::sqrt(2.0);
  const auto x = bloch_vector({s * 3.0, s * 3.0});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(std::abs(x[1]) < 1e-15);
  const auto y = bloch_vector({s, complex(0, s)});
  CHECK(y[1] == doctest::Approx(1.0));
}

TEST_CASE("intertwining under pulses and drifts") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> r(0.0, 3.0), t(-M_PI, M_PI);
  for (int n = 0; n < 60; ++n) {
    const auto x = interior_state(rng, 5);
    const complex g = std::polar(r(rng), t(rng));
    CHECK(closure_check(x, PinemPulse::single(g)) < 1e-8);
    CHECK(closure_check(x, FspPhase::quarter_units(n % 7)) < 1e-12);
  }
  CHECK(closure_check(interior_state(rng, 4), PinemPulse::single(0.0)) < 1e-15);
  try {
    closure_check(interior_state(rng, 4), FspPhase::fraction(0.1));
    FAIL("expected a legality error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Legality);
  }
}

TEST_CASE("real coupling leaves the qubit unchanged") {
  std::mt19937_64 rng(15);
  for (int n = 0; n < 20; ++n) {
    const auto x = interior_state(rng, 4);
    const double g = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
    const auto after = apply_pinem(x, PinemPulse::single(g));
    const auto a = project_qubit(x), b = project_qubit(after);
    CHECK(std::abs(a.alpha - b.alpha) < 1e-8);
    CHECK(std::abs(a.beta - b.beta) < 1e-8);
    CHECK(std::abs(a.norm_squared() - b.norm_squared()) < 1e-8);
  }
}
