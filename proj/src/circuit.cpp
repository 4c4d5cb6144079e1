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

#include "icoq/circuit.hpp"

#include <numbers>
#include <set>
#include <sstream>

#include "icoq/channels.hpp"

namespace icoq {

namespace {

std::size_t expected_arity(GateKind k) {
  switch (k) {
    case GateKind::kRy:
    case GateKind::kX:
    case GateKind::kCrush: return 1;
    case GateKind::kSwap: return 2;
    case GateKind::kCswap:
    case GateKind::kToffoli: return 3;
  }
  return 0;
}

void check_targets(const Gate& g, int n) {
  if (g.targets.size() != expected_arity(g.kind))
    throw std::invalid_argument("gate " + to_string(g) + ": wrong number of targets");
  std::set<int> seen;
  for (int q : g.targets) {
    if (q < 0 || q >= n) throw std::invalid_argument("gate " + to_string(g) + ": qubit out of range");
    if (!seen.insert(q).second)
      throw std::invalid_argument("gate " + to_string(g) + ": repeated qubit");
  }
  if (g.kind == GateKind::kCswap && g.control_value != 0 && g.control_value != 1)
    throw std::invalid_argument("gate " + to_string(g) + ": control value must be 0 or 1");
}

inline int bit(Eigen::Index index, int q, int n) { return static_cast<int>((index >> (n - 1 - q)) & 1); }
inline Eigen::Index flip(Eigen::Index index, int q, int n) { return index ^ (Eigen::Index(1) << (n - 1 - q)); }

// Image of a basis index under a classical reversible gate.
Eigen::Index permute(const Gate& g, Eigen::Index s, int n) {
  const auto& t = g.targets;
  switch (g.kind) {
    case GateKind::kX: return flip(s, t[0], n);
    case GateKind::kSwap:
      return bit(s, t[0], n) == bit(s, t[1], n) ? s : flip(flip(s, t[0], n), t[1], n);
    case GateKind::kCswap:
      if (bit(s, t[0], n) != g.control_value || bit(s, t[1], n) == bit(s, t[2], n)) return s;
      return flip(flip(s, t[1], n), t[2], n);
    case GateKind::kToffoli:
      return bit(s, t[0], n) && bit(s, t[1], n) ? flip(s, t[2], n) : s;
    default: break;
  }
  throw std::logic_error("permute: not a permutation gate");
}

}  // namespace

std::string to_string(const Gate& g) {
  std::ostringstream os;
  switch (g.kind) {
    case GateKind::kRy: os << "RY(" << g.angle << ")"; break;
    case GateKind::kX: os << "X"; break;
    case GateKind::kSwap: os << "SWAP"; break;
    case GateKind::kCswap: os << "CSWAP[c=" << g.control_value << "]"; break;
    case GateKind::kToffoli: os << "TOFFOLI"; break;
    case GateKind::kCrush: os << "CRUSH"; break;
  }
  os << "(";
  for (std::size_t i = 0; i < g.targets.size(); ++i) os << (i ? "," : "") << g.targets[i];
  os << ")";
  return os.str();
}

ComplexMatrix gate_unitary(const Gate& g, int n_qubits) {
  if (!g.is_unitary()) throw std::invalid_argument("gate_unitary: " + to_string(g) + " is not unitary");
  check_targets(g, n_qubits);
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  ComplexMatrix u;
  if (g.kind == GateKind::kRy) {
    const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
    ComplexMatrix ry(2, 2);
    ry << c, -s, s, c;
    const int q = g.targets[0];
    const ComplexMatrix left = ComplexMatrix::Identity(Eigen::Index(1) << q, Eigen::Index(1) << q);
    const Eigen::Index rd = Eigen::Index(1) << (n_qubits - 1 - q);
    const ComplexMatrix right = ComplexMatrix::Identity(rd, rd);
    u = kron(kron(left, ry), right);
  } else {
    u = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index s = 0; s < dim; ++s) u(permute(g, s, n_qubits), s) = 1.0;
  }
  if (max_abs(u.adjoint() * u - ComplexMatrix::Identity(dim, dim)) > kDefaultTolerances.validation)
    throw ValidationError("gate_unitary: " + to_string(g) + " failed the unitarity audit");
  return u;
}

QubitRegister::QubitRegister(DensityMatrix state, std::vector<std::string> labels)
    : state_(std::move(state)), labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("QubitRegister: no qubits");
  if (state_.dim() != (Eigen::Index(1) << labels_.size()))
    throw std::invalid_argument("QubitRegister: state dimension does not match qubit count");
  if (state_.factors() != std::vector<int>(labels_.size(), 2))
    state_ = DensityMatrix(state_.matrix(), std::vector<int>(labels_.size(), 2));
}

QubitRegister QubitRegister::ground(std::vector<std::string> labels) {
  const Eigen::Index d = Eigen::Index(1) << labels.size();
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(0, 0) = 1.0;
  std::vector<int> factors(labels.size(), 2);
  return QubitRegister(DensityMatrix(std::move(m), std::move(factors)), std::move(labels));
}

QubitRegister apply_gate(const QubitRegister& reg, const Gate& g) {
  const int n = reg.size();
  check_targets(g, n);
  const ComplexMatrix& rho = reg.state().matrix();
  ComplexMatrix out;
  if (g.kind == GateKind::kCrush) {
    out = rho;
    const int q = g.targets[0];
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j)
        if (bit(i, q, n) != bit(j, q, n)) out(i, j) = 0.0;
  } else {
    const ComplexMatrix u = gate_unitary(g, n);
    out = hermitian_part(u * rho * u.adjoint());
  }
  return QubitRegister(DensityMatrix(std::move(out), reg.state().factors()), reg.labels());
}

QubitRegister apply_gates(QubitRegister reg, const std::vector<Gate>& gates) {
  for (const auto& g : gates) reg = apply_gate(reg, g);
  return reg;
}

std::vector<Gate> cswap_as_toffolis(const Gate& cswap) {
  if (cswap.kind != GateKind::kCswap) throw std::invalid_argument("cswap_as_toffolis: not a CSWAP");
  const int c = cswap.targets.at(0), a = cswap.targets.at(1), b = cswap.targets.at(2);
  std::vector<Gate> out;
  if (cswap.control_value == 0) out.push_back(Gate::x(c));
  out.push_back(Gate::toffoli(c, a, b));
  out.push_back(Gate::toffoli(c, b, a));
  out.push_back(Gate::toffoli(c, a, b));
  if (cswap.control_value == 0) out.push_back(Gate::x(c));
  return out;
}

double thermal_prep_angle(const DensityMatrix& rho_t) {
  if (rho_t.dim() != 2) throw std::invalid_argument("thermal_prep_angle: expected a qubit state");
  if (std::abs(rho_t(0, 1)) > kDefaultTolerances.validation)
    throw ValidationError("thermal_prep_angle: state is not diagonal");
  return std::acos(std::clamp(rho_t(0, 0).real() - rho_t(1, 1).real(), -1.0, 1.0));
}

std::vector<Gate> switch_routing(bool decompose_cswap) {
  const std::vector<Gate> routing = {
      Gate::cswap(kAncilla, kSubstance, kReservoir1, 0),
      Gate::cswap(kAncilla, kSubstance, kReservoir2, 1),
      Gate::cswap(kAncilla, kSubstance, kReservoir2, 0),
      Gate::cswap(kAncilla, kSubstance, kReservoir1, 1),
  };
  if (!decompose_cswap) return routing;
  std::vector<Gate> out;
  for (const auto& g : routing) {
    auto part = cswap_as_toffolis(g);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Gate> switch_circuit_gates(const TwoLevelHamiltonian& h, double temperature, double phi,
                                       bool decompose_cswap) {
  if (!(phi >= 0.0 && phi <= std::numbers::pi))
    throw std::invalid_argument("switch_circuit_gates: phi must lie in [0, pi]");
  const double theta = thermal_prep_angle(thermal_state(h, temperature));
  std::vector<Gate> gates;
  for (int q : {kSubstance, kReservoir1, kReservoir2}) gates.push_back(Gate::ry(q, theta));
  for (int q : {kSubstance, kReservoir1, kReservoir2}) gates.push_back(Gate::crush(q));
  gates.push_back(Gate::ry(kAncilla, phi));
  auto routing = switch_routing(decompose_cswap);
  gates.insert(gates.end(), routing.begin(), routing.end());
  return gates;
}

QubitRegister build_switch_circuit(const TwoLevelHamiltonian& h, double temperature, double phi,
                                   bool decompose_cswap) {
  return apply_gates(QubitRegister::ground({"ancilla", "substance", "reservoir1", "reservoir2"}),
                     switch_circuit_gates(h, temperature, phi, decompose_cswap));
}

double verify_against_kraus(const TwoLevelHamiltonian& h, double temperature, double phi,
                            bool decompose_cswap) {
  const QubitRegister reg = build_switch_circuit(h, temperature, phi, decompose_cswap);
  const DensityMatrix marginal = partial_trace(reg.state(), {kAncilla, kSubstance});
  const DensityMatrix rho_t = thermal_state(h, temperature);
  const DensityMatrix reference = switch_closed_form(AncillaState(phi), rho_t, rho_t);
  return max_abs(marginal.matrix() - reference.matrix());
}

}  // namespace icoq
