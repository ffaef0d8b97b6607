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

#include "feq/bench.hpp"

#include "feq/error.hpp"
#include "feq/ladder.hpp"
#include "feq/operators.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <random>

namespace feq {

namespace {

template <class F> double time_best_of(int runs, F &&f) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < runs; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

} // namespace

BenchReport run_bench(double g_magnitude, int dim) {
  if (!(g_magnitude >= 0.0) || !std::isfinite(g_magnitude))
    fail(ErrorKind::Argument, "bench |g| must be finite and >= 0");
  const int needed = 2 * TruncationPolicy{}.half_width(2.0 * g_magnitude) + 1;
  if (dim < needed)
    fail(ErrorKind::Argument, "bench window of " + std::to_string(dim) +
                                  " levels is too small for |g| = " + std::to_string(g_magnitude) +
                                  "; need at least " + std::to_string(needed));

  BenchReport r;
  r.g_magnitude = g_magnitude;
  r.dim = dim;
  const int lo = -dim / 2;
  std::vector<complex> amps(static_cast<std::size_t>(dim));
  amps[static_cast<std::size_t>(-lo)] = 1.0;
  const LadderState zero(lo, std::move(amps));
  const TruncationPolicy window = TruncationPolicy::fixed(dim / 2);
  const auto pulse = PinemPulse::single(complex(g_magnitude, 0.0));

  std::optional<LadderState> out;
  r.bessel_seconds = time_best_of(3, [&] { out = apply_pinem_bessel(zero, pulse, window); });
  r.occupied_levels = occupied_levels(*out, 1.0 - 1e-6);

  // Timing only: a state spread over the whole window, leakage gate off.
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::vector<complex> dense(static_cast<std::size_t>(dim));
  for (auto &a : dense)
    a = std::polar(1.0 / std::sqrt(static_cast<double>(dim)), angle(rng));
  const LadderState spread(lo, std::move(dense));
  TruncationPolicy no_gate = window;
  no_gate.leakage_tol = 1.0;
  r.dense_bessel_seconds = time_best_of(3, [&] { (void)apply_pinem_bessel(spread, pulse, no_gate); });

  if (dim <= kDenseLimit) {
    std::optional<LadderState> ref;
    r.matexp_seconds = time_best_of(1, [&] { ref = apply_pinem_matexp(zero, pulse, window); });
    double diff = 0.0;
    for (int l = out->l_min(); l <= out->l_max(); ++l)
      diff = std::max(diff, std::abs((*out)[l] - (*ref)[l]));
    r.path_difference = diff;
  }
  return r;
}

std::string bench_to_json(const BenchReport &report) {
  nlohmann::json j = {{"g_magnitude", report.g_magnitude},
                      {"dim", report.dim},
                      {"occupied_levels", report.occupied_levels},
                      {"bessel_seconds", report.bessel_seconds},
                      {"dense_bessel_seconds", report.dense_bessel_seconds}};
  j["matexp_seconds"] = report.matexp_seconds ? nlohmann::json(*report.matexp_seconds) : nullptr;
  j["path_difference"] = report.path_difference ? nlohmann::json(*report.path_difference) : nullptr;
  return j.dump(2);
}

} // namespace feq
