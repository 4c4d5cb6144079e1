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

#include "icoq/channels.hpp"

#include <numbers>

namespace icoq {

namespace {

void check_shapes(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) throw std::invalid_argument("QuantumChannel: empty Kraus list");
  const Eigen::Index d = kraus.front().rows();
  if (d == 0) throw std::invalid_argument("QuantumChannel: zero-dimensional Kraus operator");
  for (const auto& k : kraus) {
    if (k.rows() != d || k.cols() != d)
      throw std::invalid_argument("QuantumChannel: Kraus operators must share one square shape");
    if (!k.allFinite()) throw ValidationError("QuantumChannel: non-finite Kraus entries");
  }
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus, const Tolerances& tol)
    : kraus_(std::move(kraus)) {
  check_shapes(kraus_);
  dim_ = kraus_.front().rows();
  if (const auto report = validate_cptp(kraus_, tol); !report.pass)
    throw ValidationError("QuantumChannel: Kraus operators violate completeness (deviation " +
                          std::to_string(report.deviation) + ")");
}

QuantumChannel QuantumChannel::identity(Eigen::Index dim) {
  if (dim <= 0) throw std::invalid_argument("QuantumChannel::identity: dimension must be positive");
  return QuantumChannel({ComplexMatrix::Identity(dim, dim)});
}

CptpReport validate_cptp(const std::vector<ComplexMatrix>& kraus, const Tolerances& tol) {
  check_shapes(kraus);
  const Eigen::Index d = kraus.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& k : kraus) sum.noalias() += k.adjoint() * k;
  const double dev = max_abs(sum - ComplexMatrix::Identity(d, d));
  return {dev, dev <= tol.validation};
}

CptpReport validate_cptp(const QuantumChannel& ch, const Tolerances& tol) {
  return validate_cptp(ch.kraus(), tol);
}

DensityMatrix apply_channel(const QuantumChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim()) throw std::invalid_argument("apply_channel: dimension mismatch");
  if (!validate_cptp(ch).pass) throw ValidationError("apply_channel: channel is not CPTP");
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const auto& k : ch.kraus()) out.noalias() += k * rho.matrix() * k.adjoint();
  return DensityMatrix(hermitian_part(out), rho.factors());
}

QuantumChannel make_thermalizing_channel(const TwoLevelHamiltonian& h, double temperature) {
  const DensityMatrix rho_t = thermal_state(h, temperature);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(2, 2);
      e(i, j) = std::sqrt(rho_t(i, i).real());
      kraus.push_back(std::move(e));
    }
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel compose(const QuantumChannel& first, const QuantumChannel& second) {
  if (first.dim() != second.dim()) throw std::invalid_argument("compose: dimension mismatch");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(first.size() * second.size());
  for (const auto& s : second.kraus())
    for (const auto& f : first.kraus()) kraus.emplace_back(s * f);
  return QuantumChannel(std::move(kraus));
}

QuantumChannel make_quantum_switch(const QuantumChannel& ch1, const QuantumChannel& ch2) {
  if (ch1.dim() != ch2.dim()) throw std::invalid_argument("make_quantum_switch: dimension mismatch");
  const Eigen::Index d = ch1.dim();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(ch1.size() * ch2.size());
  for (const auto& e2 : ch2.kraus()) {
    for (const auto& e1 : ch1.kraus()) {
      ComplexMatrix s = ComplexMatrix::Zero(2 * d, 2 * d);
      s.topLeftCorner(d, d) = e2 * e1;
      s.bottomRightCorner(d, d) = e1 * e2;
      kraus.push_back(std::move(s));
    }
  }
  return QuantumChannel(std::move(kraus));
}

AncillaState::AncillaState(double phi) : phi_(phi) {
  if (!(phi >= 0.0 && phi <= std::numbers::pi))
    throw std::invalid_argument("AncillaState: phi must lie in [0, pi]");
}

Eigen::Vector2cd AncillaState::ket() const {
  return Eigen::Vector2cd(std::cos(phi_ / 2), std::sin(phi_ / 2));
}

DensityMatrix AncillaState::density() const {
  const Eigen::Vector2cd k = ket();
  return DensityMatrix(k * k.adjoint());
}

DensityMatrix switch_closed_form(const AncillaState& a, const DensityMatrix& rho,
                                 const DensityMatrix& rho_t) {
  if (rho.dim() != 2 || rho_t.dim() != 2)
    throw std::invalid_argument("switch_closed_form: expected qubit states");
  const double c = std::cos(a.phi() / 2), s = std::sin(a.phi() / 2);
  const ComplexMatrix sandwich = rho_t.matrix() * rho.matrix() * rho_t.matrix();
  ComplexMatrix out(4, 4);
  out.topLeftCorner(2, 2) = c * c * rho_t.matrix();
  out.bottomRightCorner(2, 2) = s * s * rho_t.matrix();
  out.topRightCorner(2, 2) = c * s * sandwich;
  out.bottomLeftCorner(2, 2) = c * s * sandwich.adjoint();
  return DensityMatrix(std::move(out), {2, 2});
}

}  // namespace icoq
