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

#include <string>
#include <vector>

#include "icoq/qmat.hpp"
#include "icoq/thermo.hpp"

namespace icoq {

/*
 * Gate-level density-matrix simulation of the four-qubit SWITCH circuit:
 * qubit 0 is the ancilla, qubit 1 the working substance and qubits 2, 3 the
 * two reservoirs. Qubit 0 is the most significant bit of a basis index,
 * consistent with kron() and partial_trace().
 */

enum class GateKind { kRy, kX, kSwap, kCswap, kToffoli, kCrush };

/// Target layout by kind:
///   RY, X, CRUSH   {q}
///   SWAP           {a, b}
///   CSWAP          {control, a, b}  (fires when control == control_value)
///   TOFFOLI        {control1, control2, target}
struct Gate {
  GateKind kind;
  std::vector<int> targets;
  double angle = 0.0;
  int control_value = 1;

  static Gate ry(int q, double theta) { return {GateKind::kRy, {q}, theta, 1}; }
  static Gate x(int q) { return {GateKind::kX, {q}}; }
  static Gate swap(int a, int b) { return {GateKind::kSwap, {a, b}}; }
  static Gate cswap(int control, int a, int b, int control_value = 1) {
    return {GateKind::kCswap, {control, a, b}, 0.0, control_value};
  }
  static Gate toffoli(int c1, int c2, int target) { return {GateKind::kToffoli, {c1, c2, target}}; }
  /// Full dephasing of one qubit; models a gradient-field pulse.
  static Gate crush(int q) { return {GateKind::kCrush, {q}}; }

  bool is_unitary() const { return kind != GateKind::kCrush; }
};

std::string to_string(const Gate& g);

/// Full 2^n x 2^n matrix of a unitary gate. Checks U^dagger U = I within
/// 1e-10 and throws ValidationError otherwise.
ComplexMatrix gate_unitary(const Gate& g, int n_qubits);

class QubitRegister {
 public:
  QubitRegister(DensityMatrix state, std::vector<std::string> labels);

  /// |0...0> on n labelled qubits.
  static QubitRegister ground(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const DensityMatrix& state() const { return state_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  DensityMatrix state_;
  std::vector<std::string> labels_;
};

QubitRegister apply_gate(const QubitRegister& reg, const Gate& g);
QubitRegister apply_gates(QubitRegister reg, const std::vector<Gate>& gates);

/// CSWAP as three Toffolis; a control_value of 0 is handled by conjugating
/// the control with X.
std::vector<Gate> cswap_as_toffolis(const Gate& cswap);

/// theta = arccos(p_g - p_e), so that RY(theta)|0> followed by CRUSH gives
/// diag(p_g, p_e). Throws ValidationError for states with coherences.
double thermal_prep_angle(const DensityMatrix& rho_t);

inline constexpr int kAncilla = 0;
inline constexpr int kSubstance = 1;
inline constexpr int kReservoir1 = 2;
inline constexpr int kReservoir2 = 3;

/// Controlled-SWAP routing: reservoir 1 then 2 on ancilla |0>, reservoir 2
/// then 1 on ancilla |1>.
std::vector<Gate> switch_routing(bool decompose_cswap);

/// Preparation, ancilla rotation and routing, in execution order.
std::vector<Gate> switch_circuit_gates(const TwoLevelHamiltonian& h, double temperature, double phi,
                                       bool decompose_cswap);

/// Final 4-qubit state of the circuit started from |0000>.
QubitRegister build_switch_circuit(const TwoLevelHamiltonian& h, double temperature, double phi,
                                   bool decompose_cswap = false);

/// Max-entry distance between the ancilla+substance marginal of the circuit
/// and switch_closed_form() on the same inputs.
double verify_against_kraus(const TwoLevelHamiltonian& h, double temperature, double phi,
                            bool decompose_cswap = false);

}  // namespace icoq
