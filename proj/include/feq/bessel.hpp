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

#include <vector>

namespace feq {

/// J_0(x), ..., J_{n_max}(x) for x >= 0.
///
/// Miller's backward recurrence started well above max(n_max, x), normalized
/// with J_0 + 2 sum_k J_{2k} = 1. Accurate to a few ulps relative to the
/// largest order-magnitude for the x range used here (x up to ~10^4).
std::vector<double> bessel_j_sequence(int n_max, double x);

/// Integer-order J_n(x), any sign of n and x.
double bessel_j(int n, double x);

} // namespace feq
