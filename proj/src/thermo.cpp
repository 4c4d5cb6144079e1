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

#include "icoq/thermo.hpp"

#include <numbers>

namespace icoq {

TwoLevelHamiltonian::TwoLevelHamiltonian(double delta) : delta_(delta) {
  if (!(delta > 0) || !std::isfinite(delta))
    throw std::invalid_argument("TwoLevelHamiltonian: gap must be positive and finite");
}

ComplexMatrix TwoLevelHamiltonian::matrix() const {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(1, 1) = delta_;
  return h;
}

void check_temperature(double t, const char* what) {
  if (std::isnan(t) || !(t > 0))
    throw std::invalid_argument(std::string(what) + ": temperature must be positive");
}

double excited_population(const TwoLevelHamiltonian& h, double temperature) {
  check_temperature(temperature, "excited_population");
  if (std::isinf(temperature)) return 0.5;
  // 1 / (1 + e^{delta/T}) avoids overflow of e^{-delta/T}/Z as T -> 0.
  const double x = h.delta() / temperature;
  if (x > 700.0) return 0.0;
  return 1.0 / (1.0 + std::exp(x));
}

DensityMatrix thermal_state(const TwoLevelHamiltonian& h, double temperature) {
  const double pe = excited_population(h, temperature);
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0 - pe;
  m(1, 1) = pe;
  return DensityMatrix(std::move(m));
}

double internal_energy(const DensityMatrix& rho, const TwoLevelHamiltonian& h) {
  if (rho.dim() != 2) throw std::invalid_argument("internal_energy: expected a qubit state");
  return h.delta() * std::clamp(rho(1, 1).real(), 0.0, 1.0);
}

double effective_temperature(const DensityMatrix& rho, const TwoLevelHamiltonian& h,
                             double coherence_tol) {
  if (rho.dim() != 2) throw std::invalid_argument("effective_temperature: expected a qubit state");
  if (std::abs(rho(0, 1)) > coherence_tol)
    throw ValidationError("effective_temperature: state has coherences");
  const double pg = rho(0, 0).real();
  const double pe = rho(1, 1).real();
  if (pe <= 0.0) return 0.0;
  if (pg <= 0.0) return -0.0;
  if (pg == pe) return kInfiniteTemperature;
  return h.delta() / std::log(pg / pe);
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::kPlus: return "plus";
    case Outcome::kMinus: return "minus";
    case Outcome::kZero: return "zero";
    case Outcome::kOne: return "one";
  }
  return "?";
}

bool PostSelection::defined() const { return probability > kProbabilityFloor && block.size() > 0; }

DensityMatrix PostSelection::state() const {
  if (!defined())
    throw ValidationError(std::string("post-selected state undefined for outcome ") + to_string(outcome));
  return DensityMatrix(block);
}

PostSelection post_select(const DensityMatrix& joint, Outcome outcome) {
  if (joint.dim() < 4 || joint.dim() % 2 != 0 || joint.factors().front() != 2)
    throw std::invalid_argument("post_select: first factor must be the ancilla qubit");
  const Eigen::Index d = joint.dim() / 2;

  Eigen::Vector2cd b;
  switch (outcome) {
    case Outcome::kZero: b << 1.0, 0.0; break;
    case Outcome::kOne: b << 0.0, 1.0; break;
    case Outcome::kPlus: b << std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2; break;
    case Outcome::kMinus: b << std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2; break;
  }

  // <b| joint |b> over the ancilla, written blockwise.
  const auto& m = joint.matrix();
  ComplexMatrix blk = ComplexMatrix::Zero(d, d);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      blk += std::conj(b(r)) * b(c) * m.block(r * d, c * d, d, d);
  blk = hermitian_part(blk);

  PostSelection ps{outcome, std::clamp(blk.trace().real(), 0.0, 1.0), {}};
  if (ps.probability > kProbabilityFloor) ps.block = blk / ps.probability;
  return ps;
}

std::pair<PostSelection, PostSelection> measure_ancilla(const DensityMatrix& joint, Basis basis) {
  if (basis == Basis::kPlusMinus)
    return {post_select(joint, Outcome::kPlus), post_select(joint, Outcome::kMinus)};
  return {post_select(joint, Outcome::kZero), post_select(joint, Outcome::kOne)};
}

double ico_heat(const PostSelection& ps, const DensityMatrix& rho_t, const TwoLevelHamiltonian& h) {
  const DensityMatrix out = ps.state();
  return ps.probability * (internal_energy(out, h) - internal_energy(rho_t, h));
}

double shannon_entropy(std::span<const double> p, EntropyUnit unit) {
  if (p.empty()) throw std::invalid_argument("shannon_entropy: empty distribution");
  double total = 0.0, s = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw std::invalid_argument("shannon_entropy: probabilities must be finite and nonnegative");
    total += x;
    if (x > 0.0) s -= x * std::log(x);
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw std::invalid_argument("shannon_entropy: probabilities must sum to 1");
  return unit == EntropyUnit::kBits ? s / std::numbers::ln2 : s;
}

}  // namespace icoq
