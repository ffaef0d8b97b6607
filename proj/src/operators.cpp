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

#include "feq/operators.hpp"

#include "feq/bessel.hpp"
#include "feq/constants.hpp"
#include "feq/error.hpp"
#include "feq/expm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace feq {

namespace {

// Kernel reach beyond which |J_k(x)| is far below double precision.
int kernel_reach(double x) {
  return static_cast<int>(std::ceil(x + 30.0 + 12.0 * std::cbrt(x)));
}

void check_leakage(const LadderState &out, const TruncationPolicy &policy,
                   const char *path) {
  const double leak = support_leakage(out, policy.edge_margin);
  if (leak > policy.leakage_tol) {
    std::ostringstream os;
    os << path << ": probability " << leak << " within " << policy.edge_margin
       << " levels of the window edge [" << out.l_min() << ", " << out.l_max()
       << "] exceeds " << policy.leakage_tol << "; enlarge the window";
    fail(ErrorKind::Truncation, os.str());
  }
}

Eigen::VectorXcd to_vector(const LadderState &s) {
  const auto amps = s.amplitudes();
  return Eigen::Map<const Eigen::VectorXcd>(amps.data(),
                                            static_cast<Eigen::Index>(amps.size()));
}

LadderState from_vector(int l_min, const Eigen::VectorXcd &v) {
  return {l_min, std::vector<complex>(v.data(), v.data() + v.size())};
}

// y = G x for the banded generator on a window of x.size() levels.
void apply_generator(const PinemPulse &pulse, const Eigen::VectorXcd &x,
                     Eigen::VectorXcd &y) {
  const auto n = x.size();
  y.setZero(n);
  for (const auto &[h, g] : pulse.couplings) {
    const complex down = -g;
    const complex up = std::conj(g);
    for (Eigen::Index m = h; m < n; ++m)
      y[m] += down * x[m - h];
    for (Eigen::Index m = 0; m + h < n; ++m)
      y[m] += up * x[m + h];
  }
}

// exp(G) x = exp(-i H) x with H = i G Hermitian and spectrum in [-rho, rho]:
// sum_k (2 - delta_k0) (-i)^k J_k(rho) T_k(H / rho) x.
Eigen::VectorXcd chebyshev_expv(const PinemPulse &pulse, const Eigen::VectorXcd &x) {
  double rho = 0.0;
  for (const auto &[h, g] : pulse.couplings)
    rho += 2.0 * std::abs(g);
  if (rho == 0.0)
    return x;

  const int cap = kernel_reach(rho);
  const std::vector<double> j = bessel_j_sequence(cap, rho);
  // Drop terms whose summed magnitude cannot reach 1e-17.
  int order = cap;
  double tail = 0.0;
  while (order > 0 && tail + 2.0 * std::abs(j[static_cast<std::size_t>(order)]) < 1e-17) {
    tail += 2.0 * std::abs(j[static_cast<std::size_t>(order)]);
    --order;
  }

  const complex scale(0.0, 1.0 / rho); // x -> (i G / rho) x
  Eigen::VectorXcd prev = x;
  Eigen::VectorXcd cur(x.size());
  Eigen::VectorXcd tmp(x.size());
  apply_generator(pulse, x, tmp);
  cur = scale * tmp;

  Eigen::VectorXcd sum = j[0] * prev;
  complex minus_i_pow(0.0, -1.0);
  for (int k = 1; k <= order; ++k) {
    sum += (2.0 * j[static_cast<std::size_t>(k)] * minus_i_pow) * cur;
    minus_i_pow *= complex(0.0, -1.0);
    apply_generator(pulse, cur, tmp);
    Eigen::VectorXcd next = 2.0 * scale * tmp - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sum;
}

} // namespace

PinemPulse PinemPulse::single(complex g) {
  PinemPulse p;
  p.couplings[1] = g;
  return p;
}

bool PinemPulse::single_harmonic() const {
  for (const auto &[h, g] : couplings)
    if (h != 1 && g != complex{})
      return false;
  return true;
}

complex PinemPulse::g() const {
  const auto it = couplings.find(1);
  return it == couplings.end() ? complex{} : it->second;
}

double PinemPulse::spread() const {
  double s = 0.0;
  for (const auto &[h, g] : couplings)
    s += 2.0 * h * std::abs(g);
  return s;
}

int PinemPulse::max_harmonic() const {
  int m = 0;
  for (const auto &[h, g] : couplings)
    if (g != complex{})
      m = std::max(m, h);
  return m;
}

void PinemPulse::validate() const {
  for (const auto &[h, g] : couplings) {
    if (h < 1)
      fail(ErrorKind::Argument, "harmonic index must be >= 1, got " + std::to_string(h));
    if (!std::isfinite(g.real()) || !std::isfinite(g.imag()))
      fail(ErrorKind::Argument, "pulse coupling must be finite");
  }
}

FspPhase FspPhase::quarter_units(int k) {
  if (k < 0)
    fail(ErrorKind::Argument, "drift quarter-units must be >= 0");
  return {true, k, 0.0};
}

FspPhase FspPhase::fraction(double r) {
  if (!std::isfinite(r) || r < 0.0)
    fail(ErrorKind::Argument, "drift fraction z / z_D must be finite and >= 0");
  return {false, 0, r};
}

int FspPhase::quarter_count() const {
  if (quarter_)
    return k_;
  const double q = 4.0 * r_;
  const double k = std::round(q);
  if (std::abs(q - k) > 1e-12 || k > 1e9)
    fail(ErrorKind::Legality, "drift z / z_D = " + std::to_string(r_) +
                                  " is not an integer number of quarter-units");
  return static_cast<int>(k);
}

Eigen::MatrixXcd pinem_generator(const PinemPulse &pulse, int dim) {
  pulse.validate();
  Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto &[h, g] : pulse.couplings) {
    for (int l = 0; l + h < dim; ++l) {
      gen(l + h, l) = -g;
      gen(l, l + h) = std::conj(g);
    }
  }
  return gen;
}

Eigen::MatrixXcd pinem_unitary(const PinemPulse &pulse, int dim) {
  return expm(pinem_generator(pulse, dim));
}

std::vector<complex> pinem_kernel(complex g, int half_width) {
  const double x = 2.0 * std::abs(g);
  const double phase = std::arg(-g);
  const std::vector<double> j = bessel_j_sequence(half_width, x);
  std::vector<complex> f(static_cast<std::size_t>(2 * half_width + 1));
  for (int k = 0; k <= half_width; ++k) {
    const double jk = j[static_cast<std::size_t>(k)];
    f[static_cast<std::size_t>(half_width + k)] = std::polar(jk, k * phase);
    const double jneg = (k & 1) ? -jk : jk;
    f[static_cast<std::size_t>(half_width - k)] = std::polar(1.0, -k * phase) * jneg;
  }
  return f;
}

std::pair<int, int> pinem_output_window(const LadderState &state,
                                        const PinemPulse &pulse,
                                        const TruncationPolicy &policy) {
  if (policy.mode == TruncationPolicy::Mode::Fixed)
    return {state.l_min(), state.l_max()};
  const int pad = policy.half_width(pulse.spread());
  return {state.l_min() - pad, state.l_max() + pad};
}

LadderState apply_pinem_matexp(const LadderState &state, const PinemPulse &pulse,
                               const TruncationPolicy &policy) {
  pulse.validate();
  policy.validate();
  const auto [lo, hi] = pinem_output_window(state, pulse, policy);
  const Eigen::VectorXcd x = to_vector(state.rewindowed(lo, hi));
  const int dim = hi - lo + 1;
  Eigen::VectorXcd y;
  if (dim <= kDenseLimit)
    y = pinem_unitary(pulse, dim) * x;
  else
    y = chebyshev_expv(pulse, x);
  LadderState out = from_vector(lo, y);
  check_leakage(out, policy, "matrix-exponential pulse");
  return out;
}

LadderState apply_pinem_bessel(const LadderState &state, const PinemPulse &pulse,
                               const TruncationPolicy &policy) {
  pulse.validate();
  if (!pulse.single_harmonic())
    return apply_pinem_matexp(state, pulse, policy);
  policy.validate();

  const auto [lo, hi] = pinem_output_window(state, pulse, policy);
  const int dim = hi - lo + 1;
  const complex g = pulse.g();
  const int reach = std::min(dim - 1, kernel_reach(2.0 * std::abs(g)));
  const std::vector<complex> kernel = pinem_kernel(g, reach);

  std::vector<complex> out(static_cast<std::size_t>(dim));
  const auto in = state.amplitudes();
  for (std::size_t i = 0; i < in.size(); ++i) {
    const complex a = in[i];
    if (a == complex{})
      continue;
    const int l = state.l_min() + static_cast<int>(i);
    const int k_lo = std::max(-reach, lo - l);
    const int k_hi = std::min(reach, hi - l);
    complex *dst = out.data() + (l + k_lo - lo);
    const complex *f = kernel.data() + (k_lo + reach);
    for (int k = k_lo; k <= k_hi; ++k)
      *dst++ += *f++ * a;
  }
  LadderState result(lo, std::move(out));
  check_leakage(result, policy, "Bessel-kernel pulse");
  return result;
}

LadderState apply_pinem(const LadderState &state, const PinemPulse &pulse,
                        const TruncationPolicy &policy) {
  return apply_pinem_bessel(state, pulse, policy);
}

LadderState apply_fsp(const LadderState &state, const FspPhase &phase) {
  const auto in = state.amplitudes();
  std::vector<complex> out(in.begin(), in.end());
  if (phase.is_quarter_units()) {
    const long long k = phase.quarter_count();
    for (std::size_t i = 0; i < out.size(); ++i) {
      const long long l = state.l_min() + static_cast<long long>(i);
      // (k l^2) mod 4 with l^2 mod 4 in {0, 1}.
      long long m = (kFspSign * k * ((l * l) & 3)) % 4;
      if (m < 0)
        m += 4;
      const complex a = out[i];
      switch (m) {
      case 1:
        out[i] = complex(-a.imag(), a.real());
        break;
      case 2:
        out[i] = -a;
        break;
      case 3:
        out[i] = complex(a.imag(), -a.real());
        break;
      default:
        break;
      }
    }
  } else {
    const double r = phase.ratio();
    for (std::size_t i = 0; i < out.size(); ++i) {
      const double l = state.l_min() + static_cast<double>(i);
      const double turns = std::fmod(r * l * l, 1.0);
      out[i] *= std::polar(1.0, kFspSign * 2.0 * constants::pi * turns);
    }
  }
  return {state.l_min(), std::move(out)};
}

std::vector<double> eigenphases(const PinemPulse &pulse, int dim) {
  if (dim < 3 || dim % 2 == 0)
    fail(ErrorKind::Argument, "eigenphases need an odd dimension >= 3");
  if (!pulse.single_harmonic())
    fail(ErrorKind::Argument, "eigenphases are defined for single-harmonic pulses");
  const Eigen::MatrixXcd herm = complex(0.0, 1.0) * pinem_generator(pulse, dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    fail(ErrorKind::Argument, "Hermitian eigensolver did not converge");
  std::vector<double> phases;
  phases.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    // exp(G) = exp(-i H): eigenphase is -lambda, folded into (-pi, pi].
    double phi = std::remainder(-solver.eigenvalues()[i], 2.0 * constants::pi);
    if (phi <= -constants::pi)
      phi += 2.0 * constants::pi;
    phases.push_back(phi);
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

double commutator_norm(const PinemPulse &p1, const PinemPulse &p2, int dim,
                       int interior) {
  if (interior < 0 || 2 * interior >= dim)
    fail(ErrorKind::Argument, "interior margin must be below dim / 2");
  const Eigen::MatrixXcd u1 = pinem_unitary(p1, dim);
  const Eigen::MatrixXcd u2 = pinem_unitary(p2, dim);
  const Eigen::MatrixXcd comm = u1 * u2 - u2 * u1;
  const int n = dim - 2 * interior;
  const Eigen::MatrixXcd block = comm.block(interior, interior, n, n);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(block);
  return svd.singularValues()(0);
}

} // namespace feq
