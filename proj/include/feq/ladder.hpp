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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace feq {

using complex = std::complex<double>;

/// Default numerical tolerances shared by every module.
struct Tolerances {
  double norm_tol = 1e-10;
  double leakage_tol = 1e-12;
};

/// Amplitudes psi_l on a contiguous window of the integer energy ladder.
///
/// Index l counts net photons exchanged with the field relative to the
/// initial electron energy. The window is [l_min, l_min + size - 1] and
/// amplitudes outside it are zero by definition.
class LadderState {
public:
  LadderState(int l_min, std::vector<complex> amplitudes);

  int l_min() const noexcept { return l_min_; }
  int l_max() const noexcept {
    return l_min_ + static_cast<int>(amplitudes_.size()) - 1;
  }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  bool contains(int l) const noexcept { return l >= l_min_ && l <= l_max(); }

  /// Amplitude at ladder index l; zero outside the window.
  complex operator[](int l) const noexcept {
    return contains(l) ? amplitudes_[static_cast<std::size_t>(l - l_min_)]
                       : complex{};
  }

  std::span<const complex> amplitudes() const noexcept { return amplitudes_; }

  double norm_squared() const noexcept;

  /// Same physical amplitudes on the window [lo, hi]; values outside the old
  /// window are zero, values outside the new one are dropped.
  LadderState rewindowed(int lo, int hi) const;

  LadderState scaled(complex factor) const;

  friend bool operator==(const LadderState &, const LadderState &) = default;

private:
  int l_min_;
  std::vector<complex> amplitudes_;
};

/// How large a window the ladder must carry.
///
/// Fixed mode keeps the window [-L, L] for basis states and never grows it.
/// Adaptive mode pads a state by half_width(spread) on each side before a
/// pulse, where spread is the pulse's walk strength (2|g| for a single
/// harmonic).
struct TruncationPolicy {
  enum class Mode { Fixed, Adaptive };

  Mode mode = Mode::Adaptive;
  int fixed_half_width = 32;
  int margin_abs = 12;
  double margin_rel = 10.0;
  int edge_margin = 4;
  double leakage_tol = 1e-12;

  static TruncationPolicy fixed(int half_width);
  static TruncationPolicy adaptive(int margin_abs = 12, double margin_rel = 10.0);

  /// Fixed: L. Adaptive: ceil(spread) + margin_abs + ceil(margin_rel * spread^(1/3)).
  int half_width(double spread) const;

  void validate() const;
};

/// |l> on the policy's rest window [-W, W], W = half_width(0).
LadderState basis_state(int l, const TruncationPolicy &policy);

/// Total probability within edge_margin indices of either window boundary.
double support_leakage(const LadderState &state, int edge_margin);

/// Drops edge amplitudes while the removed probability on each side stays at
/// most prob_tol, keeping index 0 and `keep` extra levels of zero padding.
LadderState trimmed(const LadderState &state, double prob_tol = 1e-30,
                    int keep = 0);

/// Smallest symmetric window [-n, n] holding at least `mass` of the total
/// probability; returns its level count 2n + 1.
int occupied_levels(const LadderState &state, double mass);

} // namespace feq
