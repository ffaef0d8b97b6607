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

#include <Eigen/Dense>

namespace feq {

/// exp(A) by scaling and squaring with diagonal Pade approximants.
///
/// Degree and scaling follow Higham's backward-error analysis: the computed
/// result is exp(A + E) with ||E|| / ||A|| below double unit roundoff.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd &a);

} // namespace feq
