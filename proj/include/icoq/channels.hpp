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

#include <vector>

#include "icoq/qmat.hpp"
#include "icoq/thermo.hpp"

namespace icoq {

/// Operator-sum channel rho -> sum_k E_k rho E_k^dagger on a fixed dimension.
/// Construction checks shapes and completeness (sum E^dagger E = I).
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<ComplexMatrix> kraus,
                          const Tolerances& tol = kDefaultTolerances);

  static QuantumChannel identity(Eigen::Index dim);

  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return kraus_.size(); }

 private:
  std::vector<ComplexMatrix> kraus_;
  Eigen::Index dim_ = 0;
};

struct CptpReport {
  double deviation;  // max |sum E^dagger E - I|
  bool pass;
};

/// Completeness check on a raw Kraus list. Works on lists a QuantumChannel
/// would refuse, so it can report how far they are from trace preserving.
CptpReport validate_cptp(const std::vector<ComplexMatrix>& kraus,
                         const Tolerances& tol = kDefaultTolerances);
CptpReport validate_cptp(const QuantumChannel& ch, const Tolerances& tol = kDefaultTolerances);

DensityMatrix apply_channel(const QuantumChannel& ch, const DensityMatrix& rho);

/*
 * Replacement map onto the Gibbs state, Kraus operators
 * E_ij = sqrt(p_i) |i><j| for i, j in {g, e}.
 *
 * Every Kraus family of this channel gives the same definite-order action,
 * but the SWITCH output depends on the family. This one reproduces the
 * closed form (1/2)(|0><0| + |1><1|) (x) rho_T + (1/2)(|0><1| + |1><0|) (x)
 * rho_T rho rho_T for an |+> ancilla.
 */
QuantumChannel make_thermalizing_channel(const TwoLevelHamiltonian& h, double temperature);

/// Sequential composition: `first` acts, then `second`. Kraus set
/// {second_i first_j}, ordered with i major.
QuantumChannel compose(const QuantumChannel& first, const QuantumChannel& second);

/*
 * Quantum SWITCH of two channels of equal dimension d, acting on
 * ancilla (x) system (dimension 2d, ancilla is factor 0):
 *
 *   S_ij = |0><0| (x) E2_i E1_j + |1><1| (x) E1_j E2_i
 *
 * Ancilla |0> applies ch1 then ch2; ancilla |1> applies ch2 then ch1.
 */
QuantumChannel make_quantum_switch(const QuantumChannel& ch1, const QuantumChannel& ch2);

/// Ancilla cos(phi/2)|0> + sin(phi/2)|1>, phi in [0, pi].
class AncillaState {
 public:
  explicit AncillaState(double phi);

  double phi() const { return phi_; }
  Eigen::Vector2cd ket() const;
  DensityMatrix density() const;

 private:
  double phi_;
};

/// SWITCH of two identical thermalizing channels with Gibbs state rho_t on
/// the input a (x) rho, evaluated blockwise:
///   cos^2(phi/2) |0><0| (x) rho_t + sin^2(phi/2) |1><1| (x) rho_t
///   + (sin(phi)/2) (|0><1| + |1><0|) (x) rho_t rho rho_t
DensityMatrix switch_closed_form(const AncillaState& a, const DensityMatrix& rho,
                                 const DensityMatrix& rho_t);

}  // namespace icoq
