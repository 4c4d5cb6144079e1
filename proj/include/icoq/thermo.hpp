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

#include <limits>
#include <span>

#include "icoq/qmat.hpp"

namespace icoq {

/*
 * Two-level thermodynamics in units with k_B = 1.
 *
 * Basis convention: index 0 is the ground state |g>, index 1 the excited
 * state |e>. Temperatures are real and strictly positive; +infinity is
 * accepted as the infinite-temperature sentinel.
 */

inline constexpr double kInfiniteTemperature = std::numeric_limits<double>::infinity();

/// H = delta |e><e|.
class TwoLevelHamiltonian {
 public:
  explicit TwoLevelHamiltonian(double delta = 1.0);

  double delta() const { return delta_; }
  ComplexMatrix matrix() const;

 private:
  double delta_;
};

/// Throws std::invalid_argument unless t > 0 (or the infinite sentinel).
void check_temperature(double t, const char* what);

/// Excited-state Boltzmann population e^{-delta/T} / (1 + e^{-delta/T}).
double excited_population(const TwoLevelHamiltonian& h, double temperature);

/// Normalized Gibbs state diag(p_g, p_e).
DensityMatrix thermal_state(const TwoLevelHamiltonian& h, double temperature);

/// Tr(rho H) = delta * Re rho(1,1).
double internal_energy(const DensityMatrix& rho, const TwoLevelHamiltonian& h);

/*
 * Effective temperature delta / ln(p_g / p_e) of a diagonal qubit state.
 *
 * Sentinels instead of errors so that sweeps never abort:
 *   p_g == p_e  -> +infinity
 *   p_e == 0    -> 0
 *   p_g == 0    -> -0.0 (full inversion, limit from negative temperatures)
 * Population inversion (p_e > p_g) yields a negative temperature.
 */
double effective_temperature(const DensityMatrix& rho, const TwoLevelHamiltonian& h,
                             double coherence_tol = 1e-8);

enum class Outcome { kPlus, kMinus, kZero, kOne };

enum class Basis { kPlusMinus, kComputational };

const char* to_string(Outcome o);

/// Conditional system state after projecting the ancilla (factor 0 of a
/// 4x4 ancilla (x) system state) onto an outcome.
struct PostSelection {
  Outcome outcome;
  double probability;
  /// Renormalized system block; empty (0x0) when the outcome has
  /// probability <= kProbabilityFloor.
  ComplexMatrix block;

  bool defined() const;
  /// Throws ValidationError for undefined outcomes.
  DensityMatrix state() const;
};

inline constexpr double kProbabilityFloor = 1e-12;

PostSelection post_select(const DensityMatrix& joint, Outcome outcome);

/// Both outcomes of a two-outcome ancilla measurement in `basis`.
std::pair<PostSelection, PostSelection> measure_ancilla(const DensityMatrix& joint, Basis basis);

/// P [Tr(rho_out H) - Tr(rho_T H)]; positive means the system gained energy.
double ico_heat(const PostSelection& ps, const DensityMatrix& rho_t, const TwoLevelHamiltonian& h);

enum class EntropyUnit { kNats, kBits };

/// -sum p log p with 0 log 0 = 0. Distribution must sum to 1 within 1e-10.
double shannon_entropy(std::span<const double> p, EntropyUnit unit = EntropyUnit::kNats);

}  // namespace icoq
