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

#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "icoq/qmat.hpp"
#include "icoq/thermo.hpp"

namespace icoq {

/*
 * Four-stroke refrigerator driven by the SWITCH of two thermalizing channels.
 *
 *   (i)   SWITCH at T_C on a substance at T_C; a demon keeps the cycle only
 *         if the ancilla reads |->.
 *   (ii)  isochoric contact with the hot reservoir: the substance goes from
 *         rho_- to rho_{T_H}, releasing q_c = Tr(rho_- H) - Tr(rho_{T_H} H).
 *   (iii) isochoric contact with the cold reservoir.
 *   (iv)  ancilla reset; erasing the demon's memory costs W = T_R S(P_-).
 *
 * Efficiency eta = q_c / (W / P_-). All quantities use k_B = 1.
 */

struct CycleParams {
  double delta = 1.0;
  double t_hot = 1.0;
  double t_cold = 1.0;
  /// Resetting-reservoir temperature; defaults to delta when unset.
  std::optional<double> t_reset;
  double phi = std::numbers::pi / 2;
  EntropyUnit entropy_unit = EntropyUnit::kNats;

  double reset_temperature() const { return t_reset.value_or(delta); }
  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct CycleReport {
  double t_cold;
  double t_hot;
  double p_minus;
  DensityMatrix rho_minus;
  double energy_minus;  // Tr(rho_- H)
  double energy_hot;    // Tr(rho_{T_H} H)
  double entropy;       // demon memory, in the requested unit
  double w;
  double q_c;
  double q_ico_minus;   // P_- [Tr(rho_- H) - Tr(rho_{T_C} H)]
  double eta;
  double t_eff_minus;
};

/// Raised when the demon's success probability is below kProbabilityFloor.
class DegenerateCycleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// W = t_reset * S(p_minus, 1 - p_minus).
double work_of_erasure(double p_minus, double t_reset, EntropyUnit unit = EntropyUnit::kNats);

/// Ancilla (x) substance state after the SWITCH of two thermalizing
/// channels at `temperature`, substance initially thermal at the same
/// temperature. Evaluated through the 16 Kraus products.
DensityMatrix ico_output(const TwoLevelHamiltonian& h, double temperature, double phi);

CycleReport run_cycle(const CycleParams& p);

/// Uniform grid; steps == 1 requires t_min == t_max.
std::vector<double> temperature_grid(double t_min, double t_max, int steps);

/// One run_cycle per grid temperature T_C. With tie_hot_to_cold the hot
/// reservoir follows (T_H = T_C); otherwise the template's t_hot is kept.
std::vector<CycleReport> sweep(const CycleParams& p_template, double t_min, double t_max, int steps,
                               bool tie_hot_to_cold = true);

/// Success probabilities and conditional heats for one SWITCH evaluation.
/// For the computational basis "plus"/"minus" hold the |0>/|1> outcomes.
struct IcoPoint {
  double t;
  double phi;
  double p_plus;
  double p_minus;
  double dq_plus;
  double dq_minus;
};

IcoPoint ico_point(const TwoLevelHamiltonian& h, double temperature, double phi,
                   Basis basis = Basis::kPlusMinus);
std::vector<IcoPoint> ico_sweep(const TwoLevelHamiltonian& h, const std::vector<double>& grid,
                                double phi, Basis basis = Basis::kPlusMinus);

struct MonteCarloStats {
  std::uint64_t trials;
  std::uint64_t seed;
  std::uint64_t successes;
  double p_minus_emp;
  double p_minus_exact;
  double w_total;           // work charged on every trial
  double q_c_total;         // heat credited on successful trials only
  double mean_heat_per_trial;
  std::string rng;

  bool operator==(const MonteCarloStats&) const = default;
};

/// Identifier of the sampling scheme used by monte_carlo().
inline constexpr const char* kMonteCarloRng = "mt19937_64+splitmix64-batch65536";
inline constexpr std::uint64_t kMonteCarloBatch = 65536;

/// Seed of the generator driving trial batch `batch`.
std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t batch);

/*
 * Repeated demon cycles. Trials are split into batches of kMonteCarloBatch;
 * batch b draws from std::mt19937_64(batch_seed(seed, b)). A trial succeeds
 * when u < P_- with u = (x >> 11) * 2^-53 for the next 64-bit output x.
 */
MonteCarloStats monte_carlo(const CycleParams& p, std::uint64_t trials, std::uint64_t seed);

}  // namespace icoq
