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

#include "icoq/fridge.hpp"

#include <random>

#include "icoq/channels.hpp"

namespace icoq {

void CycleParams::validate() const {
  if (!(delta > 0) || !std::isfinite(delta)) throw std::invalid_argument("CycleParams: delta must be positive");
  for (double t : {t_hot, t_cold, reset_temperature()})
    if (!(t > 0) || !std::isfinite(t))
      throw std::invalid_argument("CycleParams: temperatures must be positive and finite");
  if (!(phi >= 0.0 && phi <= std::numbers::pi))
    throw std::invalid_argument("CycleParams: phi must lie in [0, pi]");
}

double work_of_erasure(double p_minus, double t_reset, EntropyUnit unit) {
  if (!(p_minus >= 0.0 && p_minus <= 1.0))
    throw std::invalid_argument("work_of_erasure: probability outside [0, 1]");
  if (!(t_reset > 0) || !std::isfinite(t_reset))
    throw std::invalid_argument("work_of_erasure: reset temperature must be positive");
  const double p[2] = {p_minus, 1.0 - p_minus};
  return t_reset * shannon_entropy(p, unit);
}

DensityMatrix ico_output(const TwoLevelHamiltonian& h, double temperature, double phi) {
  const QuantumChannel thermalize = make_thermalizing_channel(h, temperature);
  const QuantumChannel s = make_quantum_switch(thermalize, thermalize);
  return apply_channel(s, tensor(AncillaState(phi).density(), thermal_state(h, temperature)));
}

CycleReport run_cycle(const CycleParams& p) {
  p.validate();
  const TwoLevelHamiltonian h(p.delta);
  const DensityMatrix rho_cold = thermal_state(h, p.t_cold);
  const DensityMatrix rho_hot = thermal_state(h, p.t_hot);

  const PostSelection minus = post_select(ico_output(h, p.t_cold, p.phi), Outcome::kMinus);
  if (!minus.defined())
    throw DegenerateCycleError("run_cycle: demon success probability vanishes at T_C = " +
                               std::to_string(p.t_cold));
  const DensityMatrix rho_minus = minus.state();

  const double e_minus = internal_energy(rho_minus, h);
  const double e_hot = internal_energy(rho_hot, h);
  const double q_c = e_minus - e_hot;
  const double entropy = [&] {
    const double dist[2] = {minus.probability, 1.0 - minus.probability};
    return shannon_entropy(dist, p.entropy_unit);
  }();
  const double w = p.reset_temperature() * entropy;

  return CycleReport{
      .t_cold = p.t_cold,
      .t_hot = p.t_hot,
      .p_minus = minus.probability,
      .rho_minus = rho_minus,
      .energy_minus = e_minus,
      .energy_hot = e_hot,
      .entropy = entropy,
      .w = w,
      .q_c = q_c,
      .q_ico_minus = ico_heat(minus, rho_cold, h),
      .eta = q_c * minus.probability / w,
      .t_eff_minus = effective_temperature(rho_minus, h),
  };
}

std::vector<double> temperature_grid(double t_min, double t_max, int steps) {
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min > 0))
    throw std::invalid_argument("temperature_grid: bounds must be positive and finite");
  if (steps < 1) throw std::invalid_argument("temperature_grid: need at least one step");
  if (steps == 1) {
    if (t_min != t_max) throw std::invalid_argument("temperature_grid: one step requires t_min == t_max");
    return {t_min};
  }
  if (!(t_min < t_max)) throw std::invalid_argument("temperature_grid: t_min must be below t_max");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double dt = (t_max - t_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = t_min + i * dt;
  grid.back() = t_max;
  return grid;
}

std::vector<CycleReport> sweep(const CycleParams& p_template, double t_min, double t_max, int steps,
                               bool tie_hot_to_cold) {
  if (steps < 2 || !(t_min < t_max)) throw std::invalid_argument("sweep: need t_min < t_max and steps >= 2");
  std::vector<CycleReport> out;
  for (double t : temperature_grid(t_min, t_max, steps)) {
    CycleParams p = p_template;
    p.t_cold = t;
    if (tie_hot_to_cold) p.t_hot = t;
    out.push_back(run_cycle(p));
  }
  return out;
}

IcoPoint ico_point(const TwoLevelHamiltonian& h, double temperature, double phi, Basis basis) {
  const DensityMatrix rho_t = thermal_state(h, temperature);
  const auto [first, second] = measure_ancilla(ico_output(h, temperature, phi), basis);
  auto heat = [&](const PostSelection& ps) { return ps.defined() ? ico_heat(ps, rho_t, h) : 0.0; };
  return {temperature, phi, first.probability, second.probability, heat(first), heat(second)};
}

std::vector<IcoPoint> ico_sweep(const TwoLevelHamiltonian& h, const std::vector<double>& grid,
                                double phi, Basis basis) {
  std::vector<IcoPoint> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back(ico_point(h, t, phi, basis));
  return out;
}

std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t batch) {
  // splitmix64 finalizer over seed + (batch + 1) * golden gamma
  std::uint64_t z = seed + (batch + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

MonteCarloStats monte_carlo(const CycleParams& p, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("monte_carlo: need at least one trial");
  const CycleReport cycle = run_cycle(p);

  std::uint64_t successes = 0;
  for (std::uint64_t b = 0; b * kMonteCarloBatch < trials; ++b) {
    std::mt19937_64 gen(batch_seed(seed, b));
    const std::uint64_t n = std::min(kMonteCarloBatch, trials - b * kMonteCarloBatch);
    for (std::uint64_t k = 0; k < n; ++k) {
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      if (u < cycle.p_minus) ++successes;
    }
  }

  const double n = static_cast<double>(trials);
  const double q_total = static_cast<double>(successes) * cycle.q_c;
  return MonteCarloStats{
      .trials = trials,
      .seed = seed,
      .successes = successes,
      .p_minus_emp = static_cast<double>(successes) / n,
      .p_minus_exact = cycle.p_minus,
      .w_total = n * cycle.w,
      .q_c_total = q_total,
      .mean_heat_per_trial = q_total / n,
      .rng = kMonteCarloRng,
  };
}

}  // namespace icoq
