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

#include "feq/expm.hpp"

#include <array>
#include <cmath>

namespace feq {

namespace {

// Largest 1-norm for which the degree-m approximant meets unit roundoff.
constexpr std::array<double, 5> kTheta = {
    1.495585217958292e-2, 2.539398330063230e-1, 9.504178996162932e-1,
    2.097847961257068e0, 5.371920351148152e0};

constexpr std::array<double, 4> kB3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kB5 = {30240.0, 15120.0, 3360.0,
                                       420.0,   30.0,    1.0};
constexpr std::array<double, 8> kB7 = {17297280.0, 8648640.0, 1995840.0,
                                       277200.0,   25200.0,   1512.0,
                                       56.0,       1.0};
constexpr std::array<double, 10> kB9 = {
    17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
    2162160.0,     110880.0,     3960.0,       90.0,        1.0};
constexpr std::array<double, 14> kB13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

double one_norm(const Eigen::MatrixXcd &a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

template <std::size_t N>
Eigen::MatrixXcd pade_low(const Eigen::MatrixXcd &a,
                          const std::array<double, N> &b) {
  const auto n = a.rows();
  const Eigen::MatrixXcd ident = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd a2 = a * a;
  Eigen::MatrixXcd power = ident;
  Eigen::MatrixXcd odd = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd even = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t k = 0; k + 1 < N; k += 2) {
    even += b[k] * power;
    odd += b[k + 1] * power;
    power = power * a2;
  }
  const Eigen::MatrixXcd u = a * odd;
  return (even - u).partialPivLu().solve(even + u);
}

Eigen::MatrixXcd pade13(const Eigen::MatrixXcd &a) {
  const auto n = a.rows();
  const auto &b = kB13;
  const Eigen::MatrixXcd ident = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd a2 = a * a;
  const Eigen::MatrixXcd a4 = a2 * a2;
  const Eigen::MatrixXcd a6 = a4 * a2;
  const Eigen::MatrixXcd inner_u = b[13] * a6 + b[11] * a4 + b[9] * a2;
  const Eigen::MatrixXcd u =
      a * (a6 * inner_u + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  const Eigen::MatrixXcd inner_v = b[12] * a6 + b[10] * a4 + b[8] * a2;
  const Eigen::MatrixXcd v =
      a6 * inner_v + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
  return (v - u).partialPivLu().solve(v + u);
}

} // namespace

Eigen::MatrixXcd expm(const Eigen::MatrixXcd &a) {
  const double norm = one_norm(a);
  if (norm <= kTheta[0])
    return pade_low(a, kB3);
  if (norm <= kTheta[1])
    return pade_low(a, kB5);
  if (norm <= kTheta[2])
    return pade_low(a, kB7);
  if (norm <= kTheta[3])
    return pade_low(a, kB9);

  int squarings = 0;
  if (norm > kTheta[4])
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta[4])));
  Eigen::MatrixXcd r = pade13(a / std::ldexp(1.0, squarings));
  for (int i = 0; i < squarings; ++i)
    r = r * r;
  return r;
}

} // namespace feq
