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

#include "feq/bessel.hpp"

#include "feq/error.hpp"

#include <algorithm>
#include <cmath>

namespace feq {

std::vector<double> bessel_j_sequence(int n_max, double x) {
  if (n_max < 0)
    fail(ErrorKind::Argument, "bessel order bound must be non-negative");
  if (!(x >= 0.0) || !std::isfinite(x))
    fail(ErrorKind::Argument, "bessel argument must be finite and >= 0");

  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }

  const double top = std::max<double>(n_max, x);
  int start = static_cast<int>(top + 20.0 + std::sqrt(40.0 * top) +
                               10.0 * std::cbrt(x));
  start += start & 1; // even, so the normalization sum pairs up

  constexpr double big = 1e250;
  std::vector<double> j(static_cast<std::size_t>(start) + 2, 0.0);
  j[static_cast<std::size_t>(start)] = 1e-300;
  for (int k = start; k >= 1; --k) {
    const auto ku = static_cast<std::size_t>(k);
    j[ku - 1] = (2.0 * k / x) * j[ku] - j[ku + 1];
    if (std::abs(j[ku - 1]) > big) {
      for (std::size_t i = ku - 1; i < j.size(); ++i)
        j[i] /= big;
    }
  }

  double norm = j[0];
  for (std::size_t k = 2; k < j.size(); k += 2)
    norm += 2.0 * j[k];

  for (int n = 0; n <= n_max; ++n)
    out[static_cast<std::size_t>(n)] = j[static_cast<std::size_t>(n)] / norm;
  return out;
}

double bessel_j(int n, double x) {
  const int an = n < 0 ? -n : n;
  double v = bessel_j_sequence(an, std::abs(x))[static_cast<std::size_t>(an)];
  // J_{-n}(x) = (-1)^n J_n(x) and J_n(-x) = (-1)^n J_n(x).
  const bool flip = ((n < 0) != (x < 0.0)) && (an & 1);
  return flip ? -v : v;
}

} // namespace feq
