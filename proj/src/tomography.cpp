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

#include "feq/tomography.hpp"

#include "feq/bessel.hpp"
#include "feq/constants.hpp"
#include "feq/error.hpp"
#include "feq/operators.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

namespace feq {

double Spectrum::total() const {
  double s = 0.0;
  for (double p : probabilities)
    s += p;
  return s;
}

Spectrum eels_spectrum(const LadderState &state) {
  Spectrum s;
  s.l_min = state.l_min();
  s.probabilities.reserve(state.size());
  for (const auto &a : state.amplitudes())
    s.probabilities.push_back(std::norm(a));
  return s;
}

Spectrogram spectrogram(const LadderState &state, double probe_magnitude, int n_phases,
                        const TruncationPolicy &policy) {
  if (!(probe_magnitude > 0.0))
    fail(ErrorKind::Argument, "probe magnitude must be positive");
  if (n_phases < 8)
    fail(ErrorKind::Argument, "a spectrogram needs at least 8 scan phases");
  Spectrogram sg;
  sg.probe_magnitude = probe_magnitude;
  for (int j = 0; j < n_phases; ++j) {
    const double chi = 2.0 * constants::pi * j / n_phases;
    sg.scan_phases.push_back(chi);
    const auto probe = PinemPulse::single(std::polar(probe_magnitude, chi));
    sg.spectra.push_back(eels_spectrum(apply_pinem(state, probe, policy)));
  }
  return sg;
}

Spectrogram with_shot_noise(const Spectrogram &sg, double counts_per_column,
                            std::uint64_t seed) {
  if (!(counts_per_column > 0.0))
    fail(ErrorKind::Argument, "counts per column must be positive");
  std::mt19937_64 rng(seed);
  Spectrogram out = sg;
  for (auto &column : out.spectra) {
    double total = 0.0;
    for (auto &p : column.probabilities) {
      const double mean = counts_per_column * p;
      p = mean > 0.0 ? static_cast<double>(std::poisson_distribution<long long>(mean)(rng))
                     : 0.0;
      total += p;
    }
    if (total > 0.0)
      for (auto &p : column.probabilities)
        p /= total;
  }
  return out;
}

namespace {

// Forward model of one scan phase: amplitudes on the data window from
// amplitudes on the reconstruction window.
struct ScanModel {
  Eigen::MatrixXcd map;
  Eigen::VectorXd observed;
};

struct Fit {
  Eigen::VectorXcd psi;
  double cost = 0.0;
};

class SpectrogramFit {
public:
  SpectrogramFit(const Spectrogram &sg, int r_lo, int r_hi) : r_lo_(r_lo) {
    const int d_lo = sg.l_min();
    const int d_hi = sg.l_max();
    const int n = r_hi - r_lo + 1;
    const int d = d_hi - d_lo + 1;
    const int reach = std::max(std::abs(d_hi - r_lo), std::abs(r_hi - d_lo));
    const std::vector<double> j = bessel_j_sequence(reach, 2.0 * sg.probe_magnitude);
    for (std::size_t s = 0; s < sg.spectra.size(); ++s) {
      const double phase = sg.scan_phases[s] + constants::pi; // arg(-g)
      ScanModel m;
      m.map.resize(d, n);
      for (int row = 0; row < d; ++row) {
        for (int col = 0; col < n; ++col) {
          const int k = (d_lo + row) - (r_lo + col);
          const int ak = std::abs(k);
          double jk = j[static_cast<std::size_t>(ak)];
          if (k < 0 && (ak & 1))
            jk = -jk;
          m.map(row, col) = std::polar(jk, k * phase);
        }
      }
      const auto &p = sg.spectra[s].probabilities;
      m.observed = Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size()));
      models_.push_back(std::move(m));
    }
    rows_ = static_cast<Eigen::Index>(models_.size()) * d;
    n_ = n;
    d_ = d;
  }

  Eigen::Index rows() const { return rows_; }
  int size() const { return n_; }

  double residual(const Eigen::VectorXcd &psi, Eigen::VectorXd &r,
                  Eigen::MatrixXd *jac) const {
    r.resize(rows_);
    if (jac)
      jac->resize(rows_, 2 * n_);
    Eigen::Index offset = 0;
    for (const auto &m : models_) {
      const Eigen::VectorXcd out = m.map * psi;
      r.segment(offset, d_) = out.cwiseAbs2() - m.observed;
      if (jac) {
        const Eigen::MatrixXcd b = out.conjugate().asDiagonal() * m.map;
        jac->block(offset, 0, d_, n_) = 2.0 * b.real();
        jac->block(offset, n_, d_, n_) = -2.0 * b.imag();
      }
      offset += d_;
    }
    return r.squaredNorm();
  }

  Fit levenberg_marquardt(Eigen::VectorXcd psi, int max_iterations, double stop_cost) const {
    Eigen::VectorXd r, r_new;
    Eigen::MatrixXd jac;
    double cost = residual(psi, r, &jac);
    double lambda = 1e-3;
    for (int it = 0; it < max_iterations && cost > stop_cost; ++it) {
      const Eigen::MatrixXd jtj = jac.transpose() * jac;
      const Eigen::VectorXd grad = jac.transpose() * r;
      const double diag_floor = 1e-12 * std::max(1e-300, jtj.diagonal().maxCoeff());
      bool accepted = false;
      Eigen::VectorXcd trial;
      double trial_cost = cost;
      Eigen::VectorXd step;
      while (lambda < 1e20) {
        Eigen::MatrixXd damped = jtj;
        damped.diagonal().array() += lambda * (jtj.diagonal().array() + diag_floor);
        step = damped.ldlt().solve(-grad);
        trial = psi + (step.head(n_) + complex(0.0, 1.0) * step.tail(n_)).eval();
        trial_cost = residual(trial, r_new, nullptr);
        if (trial_cost < cost) {
          accepted = true;
          break;
        }
        lambda *= 4.0;
      }
      if (!accepted)
        break;
      const bool tiny_step = step.norm() <= 1e-13 * (psi.norm() + 1e-13);
      const bool stalled = cost - trial_cost <= 1e-15 * cost;
      psi = trial;
      cost = residual(psi, r, &jac);
      lambda = std::max(lambda / 5.0, 1e-15);
      if (tiny_step || stalled)
        break;
    }
    return {psi, cost};
  }

  int r_lo() const { return r_lo_; }

private:
  std::vector<ScanModel> models_;
  int r_lo_;
  Eigen::Index rows_ = 0;
  int n_ = 0;
  int d_ = 0;
};

LadderState fix_global_phase(int l_min, const Eigen::VectorXcd &psi) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < psi.size(); ++i)
    if (std::abs(psi[i]) > std::abs(psi[best]))
      best = i;
  const complex lead = psi[best];
  const complex rot = std::abs(lead) > 0.0 ? std::conj(lead) / std::abs(lead) : 1.0;
  std::vector<complex> amps(static_cast<std::size_t>(psi.size()));
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    amps[static_cast<std::size_t>(i)] = psi[i] * rot;
  // The leading amplitude is exactly real after the rotation.
  amps[static_cast<std::size_t>(best)] = std::abs(lead);
  return {l_min, std::move(amps)};
}

} // namespace

Reconstruction reconstruct_state(const Spectrogram &sg, const TruncationPolicy &window,
                                 const ReconstructOptions &opts) {
  if (sg.spectra.empty() || sg.spectra.size() != sg.scan_phases.size())
    fail(ErrorKind::Argument, "spectrogram needs one spectrum per scan phase");
  for (const auto &s : sg.spectra)
    if (s.l_min != sg.l_min() || s.probabilities.size() != sg.spectra.front().probabilities.size())
      fail(ErrorKind::Argument, "spectrogram columns must share one window");
  if (opts.restarts < 1)
    fail(ErrorKind::Argument, "reconstruction needs at least one restart");
  window.validate();

  int r_lo;
  int r_hi;
  if (window.mode == TruncationPolicy::Mode::Fixed) {
    r_lo = -window.fixed_half_width;
    r_hi = window.fixed_half_width;
  } else {
    const int pad = window.half_width(2.0 * sg.probe_magnitude);
    r_lo = sg.l_min() + pad;
    r_hi = sg.l_max() - pad;
  }
  if (r_hi < r_lo)
    fail(ErrorKind::Argument, "reconstruction window is empty for this spectrogram");

  const SpectrogramFit fit(sg, r_lo, r_hi);
  const auto rows = static_cast<double>(fit.rows());
  const double stop_cost = opts.stop_residual * opts.stop_residual * rows;

  Fit best;
  best.cost = std::numeric_limits<double>::infinity();
  int run = 0;
  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed),
                      static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    Eigen::VectorXcd start(fit.size());
    for (int i = 0; i < fit.size(); ++i)
      start[i] = complex(normal(rng), normal(rng));
    start /= start.norm();
    Fit candidate = fit.levenberg_marquardt(start, opts.max_iterations, stop_cost);
    ++run;
    if (candidate.cost < best.cost)
      best = std::move(candidate);
    if (best.cost <= stop_cost)
      break;
  }

  Reconstruction rec{fix_global_phase(r_lo, best.psi), std::sqrt(best.cost / rows), run,
                     opts.seed, false};
  rec.failed = !(rec.residual <= opts.residual_threshold);
  return rec;
}

QubitReadout readout_qubit(const Spectrogram &sg, const TruncationPolicy &window,
                           const ReconstructOptions &opts,
                           const ProjectionOptions &projection) {
  const Reconstruction rec = reconstruct_state(sg, window, opts);
  return {project_qubit(rec.state, projection), rec.residual, rec.failed};
}

double state_fidelity(const LadderState &a, const LadderState &b) {
  const int lo = std::min(a.l_min(), b.l_min());
  const int hi = std::max(a.l_max(), b.l_max());
  complex overlap{};
  for (int l = lo; l <= hi; ++l)
    overlap += std::conj(a[l]) * b[l];
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  if (na == 0.0 || nb == 0.0)
    return 0.0;
  return std::norm(overlap) / (na * nb);
}

std::string spectrogram_to_csv(const Spectrogram &sg) {
  std::string out = "l";
  char buf[64];
  for (double chi : sg.scan_phases) {
    std::snprintf(buf, sizeof buf, ",%.17g", chi);
    out += buf;
  }
  out += '\n';
  for (int l = sg.l_min(); l <= sg.l_max(); ++l) {
    out += std::to_string(l);
    for (const auto &column : sg.spectra) {
      std::snprintf(buf, sizeof buf, ",%.17g",
                    column.probabilities[static_cast<std::size_t>(l - column.l_min)]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  for (auto &c : cells) {
    while (!c.empty() && (c.back() == '\r' || c.back() == ' '))
      c.pop_back();
    while (!c.empty() && c.front() == ' ')
      c.erase(c.begin());
  }
  return cells;
}

double csv_number(const std::string &cell, std::size_t line_no) {
  char *end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (cell.empty() || end != cell.c_str() + cell.size())
    fail(ErrorKind::Parse, "spectrogram CSV line " + std::to_string(line_no) +
                               ": bad number '" + cell + "'");
  return v;
}

} // namespace

Spectrogram spectrogram_from_csv(std::string_view csv, double probe_magnitude) {
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  while (start < csv.size()) {
    auto end = csv.find('\n', start);
    if (end == std::string_view::npos)
      end = csv.size();
    const auto line = csv.substr(start, end - start);
    if (!line.empty() && line != "\r")
      rows.push_back(split_csv_line(line));
    start = end + 1;
  }
  if (rows.size() < 2 || rows.front().size() < 2 || rows.front().front() != "l")
    fail(ErrorKind::Parse, "spectrogram CSV needs an 'l,<phases>' header and data rows");

  Spectrogram sg;
  sg.probe_magnitude = probe_magnitude;
  const std::size_t n_phases = rows.front().size() - 1;
  for (std::size_t c = 1; c < rows.front().size(); ++c)
    sg.scan_phases.push_back(csv_number(rows.front()[c], 1));
  const int l_min = static_cast<int>(csv_number(rows[1][0], 2));
  sg.spectra.assign(n_phases, Spectrum{l_min, {}});
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != n_phases + 1)
      fail(ErrorKind::Parse, "spectrogram CSV line " + std::to_string(r + 1) +
                                 ": expected " + std::to_string(n_phases + 1) + " cells");
    const int l = static_cast<int>(csv_number(rows[r][0], r + 1));
    if (l != l_min + static_cast<int>(r) - 1)
      fail(ErrorKind::Parse, "spectrogram CSV levels must be consecutive");
    for (std::size_t c = 0; c < n_phases; ++c)
      sg.spectra[c].probabilities.push_back(csv_number(rows[r][c + 1], r + 1));
  }
  return sg;
}

} // namespace feq
