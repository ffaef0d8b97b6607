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
#include "feq/expm.hpp"
#include "feq/ladder.hpp"
#include "feq/operators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace feq;

namespace {

double distance(const LadderState &a, const LadderState &b) {
  const int lo = std::min(a.l_min(), b.l_min());
  const int hi = std::max(a.l_max(), b.l_max());
  double s = 0.0;
  for (int l = lo; l <= hi; ++l)
    s += std::norm(a[l] - b[l]);
  return std::sqrt(s);
}

complex random_g(std::mt19937_64 &rng, double max_abs) {
  std::uniform_real_distribution<double> r(0.0, max_abs), t(-M_PI, M_PI);
  return std::polar(r(rng), t(rng));
}

} // namespace

TEST_CASE("generator structure") {
  const auto gen = pinem_generator(PinemPulse::single(1.0), 3);
  Eigen::Matrix3cd expect;
  expect << 0, 1, 0, -1, 0, 1, 0, -1, 0;
  CHECK((gen - expect).norm() == 0.0);

  CHECK(pinem_generator(PinemPulse::single(0.0), 5).norm() == 0.0);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    PinemPulse p;
    p.couplings[1] = random_g(rng, 4.0);
    p.couplings[2] = random_g(rng, 2.0);
    const auto g = pinem_generator(p, 9);
    CHECK((g + g.adjoint()).norm() == 0.0);
    CHECK(g(3, 2) == -p.couplings[1]);
    CHECK(g(2, 4) == std::conj(p.couplings[2]));
  }
}

TEST_CASE("Pade exponential agrees with the eigendecomposition oracle") {
  std::mt19937_64 rng(2);
  for (double scale : {1e-6, 0.3, 2.0, 15.0, 80.0}) {
    PinemPulse p;
    p.couplings[1] = std::polar(scale, 0.7);
    p.couplings[3] = std::polar(0.3 * scale, -1.1);
    const auto g = pinem_generator(p, 41);
    const auto ours = expm(g);
    const auto ref = oracle::expm_antihermitian(oracle::generator({{1, p.couplings[1]}, {3, p.couplings[3]}}, 41));
    CHECK((ours - ref).cwiseAbs().maxCoeff() < 1e-11 * std::max(1.0, scale));
  }
  CHECK((expm(Eigen::MatrixXcd::Zero(4, 4)) - Eigen::MatrixXcd::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("Pade exponential on a general matrix") {
  Eigen::MatrixXcd a(2, 2);
  a << 0, 1, 0, 0;
  const auto e = expm(a);
  CHECK(std::abs(e(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(e(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(e(1, 0)) < 1e-15);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(0, 0) = 2.0;
  d(1, 1) = complex(0, 1);
  d(2, 2) = -30.0;
  const auto ed = expm(d);
  CHECK(std::abs(ed(0, 0) - std::exp(2.0)) < 1e-13);
  CHECK(std::abs(ed(1, 1) - std::exp(complex(0, 1))) < 1e-15);
  CHECK(std::abs(ed(2, 2) - std::exp(-30.0)) < 1e-25);
}

TEST_CASE("zero coupling is the identity") {
  std::mt19937_64 rng(3);
  const LadderState s(-2, oracle::random_amplitudes(rng, 5));
  const auto p = TruncationPolicy::fixed(12);
  const auto s12 = s.rewindowed(-12, 12);
  CHECK(distance(apply_pinem_matexp(s12, PinemPulse::single(0.0), p), s12) < 1e-15);
  CHECK(distance(apply_pinem_bessel(s12, PinemPulse::single(0.0), p), s12) == 0.0);
}

TEST_CASE("pulse on |0> reproduces the closed form") {
  const auto zero = basis_state(0, TruncationPolicy::adaptive());
  const complex g = -1.0; // 2|g| = 2, arg(-g) = 0
  const auto out = apply_pinem_matexp(zero, PinemPulse::single(g));
  CHECK(std::abs(std::abs(out[0]) - std::abs(oracle::bessel_series(0, 2.0))) < 1e-12);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    const complex gg = random_g(rng, 6.0);
    const auto a = apply_pinem_bessel(zero, PinemPulse::single(gg));
    const auto b = apply_pinem_matexp(zero, PinemPulse::single(gg));
    for (int l = a.l_min(); l <= a.l_max(); ++l) {
      CHECK(std::abs(a[l] - oracle::pinem_amplitude(l, gg)) < 1e-12);
      CHECK(std::abs(std::norm(b[l]) - std::norm(b[-l])) < 1e-12);
    }
  }
}

TEST_CASE("kernel is normalized") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const complex g = random_g(rng, 20.0);
    const auto f = pinem_kernel(g, 120);
    double s = 0.0;
    for (const auto &v : f)
      s += std::norm(v);
    CHECK(std::abs(s - 1.0) < 1e-13);
  }
}

TEST_CASE("convolution and matrix exponential agree on random interior states") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    const LadderState s(-4, oracle::random_amplitudes(rng, 9));
    const PinemPulse p = PinemPulse::single(random_g(rng, 20.0));
    const auto a = apply_pinem_bessel(s, p);
    const auto b = apply_pinem_matexp(s, p);
    CHECK(distance(a, b) < 1e-9);
    CHECK(std::abs(a.norm_squared() - 1.0) < 1e-10);
  }
}

TEST_CASE("fixed windows and the leakage gate") {
  const auto zero = basis_state(0, TruncationPolicy::fixed(10));
  CHECK_NOTHROW(apply_pinem(zero, PinemPulse::single(0.2), TruncationPolicy::fixed(10)));
  try {
    apply_pinem(zero, PinemPulse::single(5.0), TruncationPolicy::fixed(10));
    FAIL("expected a truncation error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Truncation);
  }
  CHECK_THROWS_AS(apply_pinem_matexp(zero, PinemPulse::single(5.0), TruncationPolicy::fixed(10)),
                  Error);
}

TEST_CASE("parallel pulses compose additively") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const LadderState s(-3, oracle::random_amplitudes(rng, 7));
    const double phase = std::uniform_real_distribution<double>(-M_PI, M_PI)(rng);
    const complex g1 = std::polar(1.7, phase), g2 = std::polar(0.6, phase);
    const auto two = apply_pinem(apply_pinem(s, PinemPulse::single(g1)), PinemPulse::single(g2));
    const auto one = apply_pinem(s, PinemPulse::single(g1 + g2));
    CHECK(distance(two, one) < 1e-9);
  }
}

TEST_CASE("multi-harmonic pulses use the exponential path and stay unitary") {
  PinemPulse p;
  p.couplings[1] = complex(0.4, 0.3);
  p.couplings[2] = complex(-0.2, 0.5);
  CHECK_FALSE(p.single_harmonic());
  CHECK(p.max_harmonic() == 2);
  CHECK(p.spread() == doctest::Approx(2.0 * 0.5 + 4.0 * std::abs(p.couplings[2])));
  const auto s = basis_state(0, TruncationPolicy::adaptive());
  const auto a = apply_pinem_bessel(s, p);
  const auto b = apply_pinem_matexp(s, p);
  CHECK(distance(a, b) == 0.0);
  CHECK(std::abs(a.norm_squared() - 1.0) < 1e-12);
}

TEST_CASE("large windows use the polynomial path") {
  PinemPulse p;
  p.couplings[1] = complex(30.0, 10.0);
  p.couplings[2] = complex(0.0, 5.0);
  const LadderState s(-2, {0.6, 0.0, 0.8, 0.0, 0.0});
  const auto big = apply_pinem_matexp(s.rewindowed(-600, 600), p, TruncationPolicy::fixed(600));
  REQUIRE(big.size() > static_cast<std::size_t>(kDenseLimit));
  CHECK(std::abs(big.norm_squared() - 1.0) < 1e-10);
  const int w = 300;
  const Eigen::MatrixXcd u = oracle::expm_antihermitian(
      oracle::generator({{1, p.couplings[1]}, {2, p.couplings[2]}}, 2 * w + 1));
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(2 * w + 1);
  for (int l = -2; l <= 2; ++l)
    x(l + w) = s[l];
  const Eigen::VectorXcd y = u * x;
  double err = 0.0;
  for (int l = -w; l <= w; ++l)
    err = std::max(err, std::abs(y(l + w) - big[l]));
  CHECK(err < 1e-9);
}

TEST_CASE("free-space propagation") {
  std::mt19937_64 rng(8);
  const LadderState s(-7, oracle::random_amplitudes(rng, 15));
  CHECK(apply_fsp(s, FspPhase::quarter_units(0)) == s);
  CHECK(apply_fsp(s, FspPhase::quarter_units(4)) == s);
  CHECK(distance(apply_fsp(s, FspPhase::fraction(1.0)), s) < 1e-12);
  CHECK(distance(apply_fsp(s, FspPhase::fraction(0.0)), s) == 0.0);

  const auto two = basis_state(2, TruncationPolicy::fixed(4));
  CHECK(apply_fsp(two, FspPhase::quarter_units(1))[2] == complex(1.0));

  auto acc = s;
  for (int k = 1; k <= 7; ++k) {
    acc = apply_fsp(acc, FspPhase::quarter_units(1));
    CHECK(acc == apply_fsp(s, FspPhase::quarter_units(k)));
  }

  const auto q = apply_fsp(s, FspPhase::quarter_units(1));
  for (int l = s.l_min(); l <= s.l_max(); ++l) {
    const complex expect = (l % 2 != 0) ? complex(0, 1) * s[l] : s[l];
    CHECK(std::abs(q[l] - expect) == 0.0);
    CHECK(std::abs(apply_fsp(s, FspPhase::fraction(0.25))[l] - expect) < 1e-12);
  }
}

TEST_CASE("drift legality") {
  CHECK(FspPhase::fraction(0.75).quarter_count() == 3);
  try {
    FspPhase::fraction(0.3).quarter_count();
    FAIL("expected a legality error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Legality);
  }
  CHECK_THROWS_AS(FspPhase::quarter_units(-1), Error);
  CHECK(FspPhase::quarter_units(3).ratio() == 0.75);
}

TEST_CASE("eigenphases") {
  const auto z = eigenphases(PinemPulse::single(0.0), 11);
  CHECK(std::all_of(z.begin(), z.end(), [](double p) { return p == 0.0; }));

  const auto e = eigenphases(PinemPulse::single(0.25), 201);
  CHECK(std::is_sorted(e.begin(), e.end()));
  for (double p : e)
    CHECK(std::abs(p) <= 0.5 + 0.02);

  const Eigen::MatrixXcd u = oracle::expm_antihermitian(oracle::generator({{1, complex(0, 0.7)}}, 31));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(u);
  std::vector<double> ref;
  for (Eigen::Index i = 0; i < ces.eigenvalues().size(); ++i) {
    CHECK(std::abs(std::abs(ces.eigenvalues()[i]) - 1.0) < 1e-9);
    ref.push_back(std::arg(ces.eigenvalues()[i]));
  }
  std::sort(ref.begin(), ref.end());
  const auto ours = eigenphases(PinemPulse::single(complex(0, 0.7)), 31);
  for (std::size_t i = 0; i < ref.size(); ++i)
    CHECK(std::abs(ours[i] - ref[i]) < 1e-10);

  CHECK_THROWS_AS(eigenphases(PinemPulse::single(1.0), 10), Error);
}

TEST_CASE("commutators") {
  const auto p1 = PinemPulse::single(complex(0.8, -0.3));
  CHECK(commutator_norm(p1, p1, 101, 20) < 1e-13);
  const auto p2 = PinemPulse::single(complex(-1.5, 2.0));
  CHECK(commutator_norm(p1, p2, 201, 50) < 1e-8);
  PinemPulse h2;
  h2.couplings[2] = complex(0.9, 0.4);
  CHECK(commutator_norm(p1, h2, 201, 50) < 1e-8);
}
