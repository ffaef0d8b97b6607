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

#include <optional>
#include <string>

namespace feq {

struct BenchReport {
  double g_magnitude = 0.0;
  int dim = 0;
  /// Smallest symmetric window holding 1 - 1e-6 of the post-pulse probability.
  int occupied_levels = 0;
  /// Convolution path on |0>.
  double bessel_seconds = 0.0;
  /// Convolution path on a state filling the whole window.
  double dense_bessel_seconds = 0.0;
  /// Dense matrix exponential, only for dim <= kDenseLimit.
  std::optional<double> matexp_seconds;
  /// Max |difference| between the two paths on |0>, when both ran.
  std::optional<double> path_difference;
};

/// Times a real pulse of strength |g| on a dim-level window centred on 0.
/// dim must hold the walk: dim >= 2 * half_width(2|g|) + 1 under the
/// default adaptive policy.
BenchReport run_bench(double g_magnitude, int dim);

std::string bench_to_json(const BenchReport &report);

} // namespace feq
