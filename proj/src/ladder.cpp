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

#include "feq/ladder.hpp"

#include "feq/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace feq {

const char *to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::Argument:
    return "argument";
  case ErrorKind::Window:
    return "window";
  case ErrorKind::Truncation:
    return "truncation";
  case ErrorKind::Config:
    return "config";
  case ErrorKind::Parse:
    return "parse";
  case ErrorKind::Projection:
    return "projection";
  case ErrorKind::Legality:
    return "legality";
  case ErrorKind::Reconstruction:
    return "reconstruction";
  case ErrorKind::Io:
    return "io";
  }
  return "unknown";
}

LadderState::LadderState(int l_min, std::vector<complex> amplitudes)
    : l_min_(l_min), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty())
    fail(ErrorKind::Window, "ladder state needs at least one level");
}

double LadderState::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto &a : amplitudes_)
    sum += std::norm(a);
  return sum;
}

LadderState LadderState::rewindowed(int lo, int hi) const {
  if (hi < lo)
    fail(ErrorKind::Window, "empty window [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  std::vector<complex> out(static_cast<std::size_t>(hi - lo + 1));
  const int from = std::max(lo, l_min_);
  const int to = std::min(hi, l_max());
  for (int l = from; l <= to; ++l)
    out[static_cast<std::size_t>(l - lo)] =
        amplitudes_[static_cast<std::size_t>(l - l_min_)];
  return {lo, std::move(out)};
}

LadderState LadderState::scaled(complex factor) const {
  std::vector<complex> out(amplitudes_);
  for (auto &a : out)
    a *= factor;
  return {l_min_, std::move(out)};
}

TruncationPolicy TruncationPolicy::fixed(int half_width) {
  TruncationPolicy p;
  p.mode = Mode::Fixed;
  p.fixed_half_width = half_width;
  return p;
}

TruncationPolicy TruncationPolicy::adaptive(int margin_abs, double margin_rel) {
  TruncationPolicy p;
  p.mode = Mode::Adaptive;
  p.margin_abs = margin_abs;
  p.margin_rel = margin_rel;
  return p;
}

int TruncationPolicy::half_width(double spread) const {
  if (mode == Mode::Fixed)
    return fixed_half_width;
  spread = std::abs(spread);
  return static_cast<int>(std::ceil(spread)) + margin_abs +
         static_cast<int>(std::ceil(margin_rel * std::cbrt(spread)));
}

void TruncationPolicy::validate() const {
  if (mode == Mode::Fixed && fixed_half_width < 1)
    fail(ErrorKind::Config, "fixed window half-width must be >= 1");
  if (margin_abs < 0 || margin_rel < 0.0)
    fail(ErrorKind::Config, "adaptive margins must be non-negative");
  if (edge_margin < 0)
    fail(ErrorKind::Config, "edge margin must be non-negative");
  if (!(leakage_tol > 0.0))
    fail(ErrorKind::Config, "leakage tolerance must be positive");
}

LadderState basis_state(int l, const TruncationPolicy &policy) {
  policy.validate();
  const int w = policy.half_width(0.0);
  if (l < -w || l > w)
    fail(ErrorKind::Window, "basis level " + std::to_string(l) +
                                " outside window [-" + std::to_string(w) +
                                ", " + std::to_string(w) + "]");
  std::vector<complex> amps(static_cast<std::size_t>(2 * w + 1));
  amps[static_cast<std::size_t>(l + w)] = 1.0;
  return {-w, std::move(amps)};
}

double support_leakage(const LadderState &state, int edge_margin) {
  if (edge_margin <= 0)
    return 0.0;
  const auto amps = state.amplitudes();
  const std::size_t n = amps.size();
  const std::size_t m = std::min<std::size_t>(edge_margin, n);
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    sum += std::norm(amps[i]);
  // Windows narrower than two margins: every index is near an edge.
  for (std::size_t i = std::max(m, n - std::min(m, n)); i < n; ++i)
    sum += std::norm(amps[i]);
  return sum;
}

LadderState trimmed(const LadderState &state, double prob_tol, int keep) {
  const auto amps = state.amplitudes();
  int lo = state.l_min();
  int hi = state.l_max();
  double dropped = 0.0;
  while (lo < std::min(0, hi)) {
    const double p = std::norm(amps[static_cast<std::size_t>(lo - state.l_min())]);
    if (dropped + p > prob_tol)
      break;
    dropped += p;
    ++lo;
  }
  dropped = 0.0;
  while (hi > std::max(0, lo)) {
    const double p = std::norm(amps[static_cast<std::size_t>(hi - state.l_min())]);
    if (dropped + p > prob_tol)
      break;
    dropped += p;
    --hi;
  }
  return state.rewindowed(lo - keep, hi + keep);
}

int occupied_levels(const LadderState &state, double mass) {
  const double total = state.norm_squared();
  if (total == 0.0)
    return 0;
  const int reach = std::max(std::abs(state.l_min()), std::abs(state.l_max()));
  double captured = std::norm(state[0]);
  int n = 0;
  while (captured < mass * total && n < reach) {
    ++n;
    captured += std::norm(state[n]) + std::norm(state[-n]);
  }
  return 2 * n + 1;
}

} // namespace feq
