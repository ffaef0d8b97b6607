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

#include "feq/ladder.hpp"

#include <Eigen/Dense>

#include <map>
#include <vector>

namespace feq {

/// One laser interaction.
///
/// couplings[h] is the complex coupling of harmonic h >= 1; h = 1 is the
/// fundamental PINEM field g. Harmonic h couples levels l and l + h.
struct PinemPulse {
  std::map<int, complex> couplings;

  static PinemPulse single(complex g);

  bool single_harmonic() const;
  /// Coupling of the fundamental; zero if absent.
  complex g() const;
  /// Walk strength sum_h 2 h |g_h|, the reach that sets window padding.
  double spread() const;
  /// Largest harmonic index present.
  int max_harmonic() const;

  void validate() const;
};

/// Free-space propagation over z = r * z_D.
///
/// Quarter-unit drifts (r = k / 4) are the only legal ones in qubit mode.
class FspPhase {
public:
  static FspPhase quarter_units(int k);
  static FspPhase fraction(double r);

  bool is_quarter_units() const noexcept { return quarter_; }
  /// k for quarter-unit drifts. Throws Legality for free-form fractions that
  /// are not an integer number of quarters.
  int quarter_count() const;
  /// z / z_D.
  double ratio() const noexcept { return quarter_ ? k_ / 4.0 : r_; }

private:
  FspPhase(bool quarter, int k, double r) : quarter_(quarter), k_(k), r_(r) {}
  bool quarter_;
  int k_;
  double r_;
};

/// Sign of the dispersion exponent: level l picks up exp(kFspSign * i * phi_l).
/// Positive so that a quarter-unit acts as +i on odd levels.
inline constexpr int kFspSign = +1;

/// Anti-Hermitian generator on `dim` consecutive levels:
/// (l + h, l) = -g_h and (l, l + h) = conj(g_h).
Eigen::MatrixXcd pinem_generator(const PinemPulse &pulse, int dim);

/// Dense exp(generator) on `dim` levels.
Eigen::MatrixXcd pinem_unitary(const PinemPulse &pulse, int dim);

/// Convolution kernel f_k = exp(i k arg(-g)) J_k(2|g|), k = -K..K, stored at
/// index k + K.
std::vector<complex> pinem_kernel(complex g, int half_width);

/// Output window of a pulse under the policy: the input window in fixed mode,
/// padded by half_width(spread) on each side in adaptive mode.
std::pair<int, int> pinem_output_window(const LadderState &state,
                                        const PinemPulse &pulse,
                                        const TruncationPolicy &policy);

/// Pulse via the matrix exponential of the truncated generator.
///
/// Windows up to kDenseLimit levels use dense scaling-and-squaring; larger
/// ones use a Chebyshev expansion of exp(generator) acting on the vector.
/// Throws Truncation when the result leaks into the window edges.
LadderState apply_pinem_matexp(const LadderState &state, const PinemPulse &pulse,
                               const TruncationPolicy &policy = {});

/// Pulse via convolution with the closed-form Bessel kernel. Multi-harmonic
/// pulses fall back to apply_pinem_matexp.
LadderState apply_pinem_bessel(const LadderState &state, const PinemPulse &pulse,
                               const TruncationPolicy &policy = {});

/// Preferred pulse path (the Bessel convolution when applicable).
LadderState apply_pinem(const LadderState &state, const PinemPulse &pulse,
                        const TruncationPolicy &policy = {});

/// Diagonal dispersion phase exp(i 2 pi r l^2). Quarter-unit drifts use exact
/// powers of i.
LadderState apply_fsp(const LadderState &state, const FspPhase &phase);

/// Eigenphases of exp(generator) on an odd, symmetric window, ascending in
/// (-pi, pi].
std::vector<double> eigenphases(const PinemPulse &pulse, int dim);

/// Spectral norm of [U1, U2] restricted to rows/columns [interior, dim - interior).
double commutator_norm(const PinemPulse &p1, const PinemPulse &p2, int dim,
                       int interior);

inline constexpr int kDenseLimit = 1024;

} // namespace feq
