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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "icoq/channels.hpp"
#include "icoq/thermo.hpp"
#include "oracle.hpp"

using namespace icoq;

// Reference values at delta = 1, T = 1, phi = pi/2, computed by the
// brute-force 16-term Kraus sum and 2x2 block algebra in oracle.hpp.
namespace ref {
constexpr double kPg = 0.7310585786300049;
constexpr double kPe = 0.2689414213699951;
constexpr double kPMinus = 0.29491789986222267;
constexpr double kPPlus = 0.7050821001377771;
constexpr double kMinusPg = 0.5770195262100016;
constexpr double kMinusPe = 0.4229804737899983;
constexpr double kPlusPg = 0.7954891943378738;
constexpr double kPlusPe = 0.20451080566212626;
constexpr double kDqMinus = 0.045428873836474176;
constexpr double kTeffMinus = 3.2200924481896753;
constexpr double kTeffPlus = 0.7361946294614921;
}  // namespace ref

namespace {

DensityMatrix switch_output(double delta, double t, double phi) {
  const TwoLevelHamiltonian h(delta);
  const auto ch = make_thermalizing_channel(h, t);
  return apply_channel(make_quantum_switch(ch, ch), tensor(AncillaState(phi).density(), thermal_state(h, t)));
}

}  // namespace

TEST_SUITE("thermo") {

TEST_CASE("frozen reference values agree with the oracle") {
  const auto [pg, pe] = oracle::boltzmann(1.0, 1.0);
  CHECK(pg == doctest::Approx(ref::kPg).epsilon(1e-15));
  const auto k = oracle::thermal_kraus(1.0, 1.0);
  const auto out = oracle::brute_switch(k, k, oracle::ancilla(std::numbers::pi / 2), oracle::thermal(1.0, 1.0));
  const auto minus = oracle::pm_block(out, -1);
  CHECK(minus.trace().real() == doctest::Approx(ref::kPMinus).epsilon(1e-14));
  CHECK(minus(1, 1).real() / minus.trace().real() == doctest::Approx(ref::kMinusPe).epsilon(1e-14));
  // P_- = (1 - Tr rho_T^3) / 2
  const auto rt = oracle::thermal(1.0, 1.0);
  CHECK((1.0 - (rt * rt * rt).trace().real()) / 2 == doctest::Approx(ref::kPMinus).epsilon(1e-14));
}

TEST_CASE("TwoLevelHamiltonian") {
  const TwoLevelHamiltonian h(2.5);
  CHECK(h.matrix()(1, 1).real() == 2.5);
  CHECK(h.matrix()(0, 0).real() == 0.0);
  CHECK_THROWS_AS(TwoLevelHamiltonian(0.0), std::invalid_argument);
  CHECK_THROWS_AS(TwoLevelHamiltonian(-1.0), std::invalid_argument);
}

TEST_CASE("thermal_state") {
  const TwoLevelHamiltonian h;
  const auto inf = thermal_state(h, kInfiniteTemperature);
  CHECK(inf(0, 0).real() == 0.5);
  CHECK(inf(1, 1).real() == 0.5);
  const auto one = thermal_state(h, 1.0);
  CHECK(one(0, 0).real() == doctest::Approx(ref::kPg).epsilon(1e-14));
  CHECK(one(1, 1).real() == doctest::Approx(ref::kPe).epsilon(1e-14));
  const auto cold = thermal_state(h, 1e-6);
  CHECK(std::abs(cold(0, 0).real() - 1.0) < 1e-9);
  CHECK(std::abs(cold(1, 1).real()) < 1e-9);
  CHECK_THROWS_AS(thermal_state(h, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(thermal_state(h, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(thermal_state(h, std::nan("")), std::invalid_argument);

  for (double t : {0.05, 0.3, 2.0, 17.0}) {
    const auto [pg, pe] = oracle::boltzmann(2.0, t);
    CHECK(std::abs(thermal_state(TwoLevelHamiltonian(2.0), t)(1, 1).real() - pe) < 1e-15);
    CHECK(std::abs(thermal_state(TwoLevelHamiltonian(2.0), t)(0, 0).real() - pg) < 1e-15);
  }
}

TEST_CASE("internal_energy") {
  const TwoLevelHamiltonian h(1.0);
  CHECK(internal_energy(DensityMatrix(ComplexMatrix(Eigen::Matrix2cd{{1, 0}, {0, 0}})), h) == 0.0);
  CHECK(internal_energy(DensityMatrix(ComplexMatrix(Eigen::Matrix2cd{{0, 0}, {0, 1}})), h) == 1.0);
  CHECK(internal_energy(thermal_state(h, 1.0), h) == doctest::Approx(ref::kPe).epsilon(1e-14));
  CHECK(internal_energy(thermal_state(TwoLevelHamiltonian(3.0), 3.0), TwoLevelHamiltonian(3.0)) ==
        doctest::Approx(3.0 * ref::kPe).epsilon(1e-14));
  CHECK_THROWS_AS(internal_energy(DensityMatrix::maximally_mixed(2), h), std::invalid_argument);
}

TEST_CASE("effective_temperature") {
  const TwoLevelHamiltonian h;
  CHECK(effective_temperature(thermal_state(h, 1.0), h) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::isinf(effective_temperature(DensityMatrix::maximally_mixed(1), h)));
  CHECK(effective_temperature(DensityMatrix(ComplexMatrix(Eigen::Matrix2cd{{1, 0}, {0, 0}})), h) == 0.0);
  // Population inversion gives a negative temperature.
  CHECK(effective_temperature(DensityMatrix(ComplexMatrix(Eigen::Matrix2cd{{0.3, 0}, {0, 0.7}})), h) < 0.0);
  const auto coherent = DensityMatrix(ComplexMatrix(Eigen::Matrix2cd{{0.5, 0.1}, {0.1, 0.5}}));
  CHECK_THROWS_AS(effective_temperature(coherent, h), ValidationError);

  const auto minus = post_select(switch_output(1.0, 1.0, std::numbers::pi / 2), Outcome::kMinus);
  CHECK(effective_temperature(minus.state(), h) == doctest::Approx(ref::kTeffMinus).epsilon(1e-9));
}

TEST_CASE("effective_temperature round trip over T in [0.1, 10]") {
  const TwoLevelHamiltonian h(1.0);
  for (double t = 0.1; t <= 10.0 + 1e-12; t += 0.1)
    CHECK(std::abs(effective_temperature(thermal_state(h, t), h) - t) < 1e-9 * std::max(1.0, t));
}

TEST_CASE("post_select at delta = 1, T = 1, phi = pi/2") {
  const auto joint = switch_output(1.0, 1.0, std::numbers::pi / 2);
  const auto minus = post_select(joint, Outcome::kMinus);
  CHECK(minus.probability == doctest::Approx(ref::kPMinus).epsilon(1e-12));
  CHECK(minus.state()(0, 0).real() == doctest::Approx(ref::kMinusPg).epsilon(1e-12));
  CHECK(minus.state()(1, 1).real() == doctest::Approx(ref::kMinusPe).epsilon(1e-12));
  CHECK(std::abs(minus.state()(0, 1)) < 1e-14);
  const auto plus = post_select(joint, Outcome::kPlus);
  CHECK(plus.probability == doctest::Approx(ref::kPPlus).epsilon(1e-12));
  CHECK(plus.state()(0, 0).real() == doctest::Approx(ref::kPlusPg).epsilon(1e-12));
  CHECK(plus.state()(1, 1).real() == doctest::Approx(ref::kPlusPe).epsilon(1e-12));
  CHECK(std::abs(plus.probability + minus.probability - 1.0) < 1e-10);
  CHECK(effective_temperature(plus.state(), TwoLevelHamiltonian()) ==
        doctest::Approx(ref::kTeffPlus).epsilon(1e-9));

  const auto zero = post_select(joint, Outcome::kZero);
  const auto one = post_select(joint, Outcome::kOne);
  CHECK(std::abs(zero.probability + one.probability - 1.0) < 1e-10);
  CHECK(max_abs(zero.state().matrix() - thermal_state(TwoLevelHamiltonian(), 1.0).matrix()) < 1e-12);
}

TEST_CASE("post_select with a definite-order ancilla") {
  const auto rt = thermal_state(TwoLevelHamiltonian(), 1.0);
  for (double t : {0.2, 1.0, 3.0}) {
    const auto joint = switch_output(1.0, t, 0.0);
    const auto plus = post_select(joint, Outcome::kPlus);
    const auto minus = post_select(joint, Outcome::kMinus);
    CHECK(std::abs(plus.probability - 0.5) < 1e-12);
    CHECK(std::abs(minus.probability - 0.5) < 1e-12);
    const auto rt_t = thermal_state(TwoLevelHamiltonian(), t);
    CHECK(max_abs(plus.state().matrix() - rt_t.matrix()) < 1e-12);
    CHECK(max_abs(minus.state().matrix() - rt_t.matrix()) < 1e-12);
    // |1> is never populated.
    const auto one = post_select(joint, Outcome::kOne);
    CHECK(!one.defined());
    CHECK_THROWS_AS(one.state(), ValidationError);
    CHECK(one.probability == 0.0);
  }
  (void)rt;
}

TEST_CASE("post_select rejects joints without an ancilla factor") {
  CHECK_THROWS_AS(post_select(DensityMatrix::maximally_mixed(1), Outcome::kPlus), std::invalid_argument);
}

TEST_CASE("ico_heat") {
  const TwoLevelHamiltonian h;
  const auto rt = thermal_state(h, 1.0);
  const auto joint = switch_output(1.0, 1.0, std::numbers::pi / 2);
  const double dq_minus = ico_heat(post_select(joint, Outcome::kMinus), rt, h);
  const double dq_plus = ico_heat(post_select(joint, Outcome::kPlus), rt, h);
  CHECK(dq_minus == doctest::Approx(ref::kDqMinus).epsilon(1e-12));
  CHECK(std::abs(dq_plus + dq_minus) < 1e-10);

  const auto classical = switch_output(1.0, 1.0, 0.0);
  CHECK(std::abs(ico_heat(post_select(classical, Outcome::kMinus), rt, h)) < 1e-10);
  CHECK(std::abs(ico_heat(post_select(classical, Outcome::kPlus), rt, h)) < 1e-10);
  CHECK_THROWS_AS(ico_heat(post_select(classical, Outcome::kOne), rt, h), ValidationError);
}

TEST_CASE("heat conservation and probability law over (phi, T)") {
  const TwoLevelHamiltonian h;
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> uphi(0.0, std::numbers::pi), ut(0.1, 5.0);
  for (int trial = 0; trial < 30; ++trial) {
    const double phi = uphi(gen), t = ut(gen);
    const auto joint = switch_output(1.0, t, phi);
    const auto plus = post_select(joint, Outcome::kPlus);
    const auto minus = post_select(joint, Outcome::kMinus);
    CHECK(std::abs(plus.probability + minus.probability - 1.0) < 1e-10);
    const auto rt = oracle::thermal(1.0, t);
    const double sandwich = (rt * rt * rt).trace().real();
    CHECK(std::abs(plus.probability - 0.5 * (1 + std::sin(phi) * sandwich)) < 1e-10);
    CHECK(std::abs(minus.probability - 0.5 * (1 - std::sin(phi) * sandwich)) < 1e-10);
    const auto rho_t = thermal_state(h, t);
    CHECK(std::abs(ico_heat(plus, rho_t, h) + ico_heat(minus, rho_t, h)) < 1e-10);
  }
}

TEST_CASE("heating on minus, cooling on plus") {
  const TwoLevelHamiltonian h;
  for (double t = 0.2; t <= 10.0; t *= 1.25) {
    const auto joint = switch_output(1.0, t, std::numbers::pi / 2);
    const double t_minus = effective_temperature(post_select(joint, Outcome::kMinus).state(), h);
    const double t_plus = effective_temperature(post_select(joint, Outcome::kPlus).state(), h);
    CHECK(t_minus > t);
    CHECK(t_plus < t);
  }
}

TEST_CASE("probability asymptotes") {
  const auto hot = switch_output(1.0, 1e4, std::numbers::pi / 2);
  CHECK(std::abs(post_select(hot, Outcome::kPlus).probability - 0.625) < 1e-4);
  CHECK(std::abs(post_select(hot, Outcome::kMinus).probability - 0.375) < 1e-4);
  const auto cold = switch_output(1.0, 0.02, std::numbers::pi / 2);
  CHECK(std::abs(post_select(cold, Outcome::kPlus).probability - 1.0) < 1e-12);
}

TEST_CASE("shannon_entropy") {
  const double certain[2] = {1.0, 0.0};
  const double fair[2] = {0.5, 0.5};
  const double skewed[2] = {0.2949, 0.7051};
  CHECK(shannon_entropy(certain) == 0.0);
  CHECK(shannon_entropy(fair) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(shannon_entropy(skewed) == doctest::Approx(oracle::entropy({0.2949, 0.7051})).epsilon(1e-14));
  CHECK(shannon_entropy(skewed) == doctest::Approx(0.6064809515916623).epsilon(1e-14));
  CHECK(shannon_entropy(fair, EntropyUnit::kBits) == doctest::Approx(1.0).epsilon(1e-15));

  const double bad_sum[2] = {0.5, 0.6};
  const double negative[2] = {1.1, -0.1};
  CHECK_THROWS_AS(shannon_entropy(bad_sum), std::invalid_argument);
  CHECK_THROWS_AS(shannon_entropy(negative), std::invalid_argument);
  CHECK_THROWS_AS(shannon_entropy(std::span<const double>{}), std::invalid_argument);
}

}  // TEST_SUITE
