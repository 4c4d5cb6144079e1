// Copyright 2026 The icoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's channel, circuit or partial-trace code.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using M = Eigen::MatrixXcd;
using C = std::complex<double>;

/// Boltzmann populations e^{-E/T}/Z for the levels {0, delta}.
inline std::pair<double, double> boltzmann(double delta, double t) {
  const double wg = 1.0, we = std::exp(-delta / t);
  return {wg / (wg + we), we / (wg + we)};
}

inline M thermal(double delta, double t) {
  const auto [pg, pe] = boltzmann(delta, t);
  M m = M::Zero(2, 2);
  m(0, 0) = pg;
  m(1, 1) = pe;
  return m;
}

/// Entry-by-entry tensor product by index arithmetic.
inline M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja)
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = a(ia, ja) * b(ib, jb);
  return out;
}

/// Two-qubit reduced states by explicit summation over the other index.
inline M trace_second(const M& rho) {
  M out = M::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j) += rho(2 * i + k, 2 * j + k);
  return out;
}
inline M trace_first(const M& rho) {
  M out = M::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j) += rho(2 * k + i, 2 * k + j);
  return out;
}

/// Replacement-channel Kraus operators sqrt(p_i)|i><j|, built from scratch.
inline std::vector<M> thermal_kraus(double delta, double t) {
  const auto [pg, pe] = boltzmann(delta, t);
  const double p[2] = {pg, pe};
  std::vector<M> k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      M e = M::Zero(2, 2);
      e(i, j) = std::sqrt(p[i]);
      k.push_back(e);
    }
  return k;
}

/// Full 16-term SWITCH sum over S_ij (rho_a (x) rho) S_ij^dagger.
inline M brute_switch(const std::vector<M>& k1, const std::vector<M>& k2, const M& rho_a, const M& rho) {
  M p0 = M::Zero(2, 2), p1 = M::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  const M in = kron(rho_a, rho);
  M out = M::Zero(in.rows(), in.cols());
  for (const auto& e2 : k2)
    for (const auto& e1 : k1) {
      const M s = kron(p0, e2 * e1) + kron(p1, e1 * e2);
      out += s * in * s.adjoint();
    }
  return out;
}

inline M ancilla(double phi) {
  Eigen::Vector2cd v(std::cos(phi / 2), std::sin(phi / 2));
  return v * v.adjoint();
}

/// <b|joint|b> for b = (|0> + sign|1>)/sqrt(2), returned unnormalized.
inline M pm_block(const M& joint, int sign) {
  const M a = joint.topLeftCorner(2, 2), b = joint.topRightCorner(2, 2);
  const M c = joint.bottomLeftCorner(2, 2), d = joint.bottomRightCorner(2, 2);
  return 0.5 * (a + d + double(sign) * (b + c));
}

inline M random_state(std::mt19937_64& gen, int dim) {
  std::normal_distribution<double> n;
  M g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = C(n(gen), n(gen));
  M r = g * g.adjoint();
  return r / r.trace().real();
}

inline M random_hermitian(std::mt19937_64& gen, int dim) {
  std::normal_distribution<double> n;
  M g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = C(n(gen), n(gen));
  return 0.5 * (g + g.adjoint());
}

inline double max_abs(const M& m) { return m.cwiseAbs().maxCoeff(); }

inline double entropy(const std::vector<double>& p) {
  double s = 0;
  for (double x : p)
    if (x > 0) s -= x * std::log(x);
  return s;
}

}  // namespace oracle
