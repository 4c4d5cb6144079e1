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

#include "icoq/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "icoq/circuit.hpp"
#include "icoq/fridge.hpp"

namespace icoq::cli {

namespace {

struct RunConfig {
  double delta = 1.0;
  double t_min = 0.2;
  double t_max = 3.0;
  int steps = 57;
  std::optional<double> phi;
  std::string basis = "pm";
  double t_reset = 1.0;
  double temperature = 1.0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out_path;
  bool decompose_cswap = false;
  std::string entropy_base = "e";

  double phi_or_default() const { return phi.value_or(std::numbers::pi / 2); }
  EntropyUnit entropy_unit() const { return entropy_base == "2" ? EntropyUnit::kBits : EntropyUnit::kNats; }
  Basis ancilla_basis() const { return basis == "computational" ? Basis::kComputational : Basis::kPlusMinus; }
};

void add_grid_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--t-min", cfg.t_min, "Lowest temperature, units of delta/k_B");
  sub->add_option("--t-max", cfg.t_max, "Highest temperature, units of delta/k_B");
  sub->add_option("--steps", cfg.steps, "Number of grid points")->check(CLI::PositiveNumber);
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--delta", cfg.delta, "Energy gap; scales energy columns")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out_path, "Output file (default standard output)");
}

void add_phi_option(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--phi", cfg.phi, "Ancilla angle in radians, [0, pi]")
      ->check(CLI::Range(0.0, std::numbers::pi));
}

void add_fridge_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--t-reset", cfg.t_reset, "Resetting reservoir temperature, units of delta/k_B")
      ->check(CLI::PositiveNumber);
  sub->add_option("--entropy-base", cfg.entropy_base, "Logarithm base of the erasure entropy")
      ->check(CLI::IsMember({"e", "2"}));
}

// Temperatures in I/O are in units of delta/k_B; the library takes k_B T.
double physical(double t, const RunConfig& cfg) { return t * cfg.delta; }

Table probs_table(const RunConfig& cfg) {
  const TwoLevelHamiltonian h(cfg.delta);
  Table t;
  t.columns = {"t", "phi", "p_plus", "p_minus"};
  for (double temp : temperature_grid(cfg.t_min, cfg.t_max, cfg.steps)) {
    const IcoPoint pt = ico_point(h, physical(temp, cfg), cfg.phi_or_default(), cfg.ancilla_basis());
    t.rows.push_back({temp, pt.phi, pt.p_plus, pt.p_minus});
  }
  return t;
}

Table heat_table(const RunConfig& cfg) {
  const TwoLevelHamiltonian h(cfg.delta);
  Table t;
  t.columns = {"t", "dq_plus", "dq_minus"};
  for (double temp : temperature_grid(cfg.t_min, cfg.t_max, cfg.steps)) {
    const IcoPoint pt = ico_point(h, physical(temp, cfg), cfg.phi_or_default(), cfg.ancilla_basis());
    t.rows.push_back({temp, pt.dq_plus, pt.dq_minus});
  }
  return t;
}

CycleParams cycle_params(const RunConfig& cfg, double t_cold) {
  CycleParams p;
  p.delta = cfg.delta;
  p.t_cold = physical(t_cold, cfg);
  p.t_hot = p.t_cold;
  p.t_reset = physical(cfg.t_reset, cfg);
  p.phi = cfg.phi_or_default();
  p.entropy_unit = cfg.entropy_unit();
  return p;
}

Table fridge_table(const RunConfig& cfg) {
  Table t;
  t.columns = {"t_cold", "p_minus", "w", "q_c", "eta"};
  for (double temp : temperature_grid(cfg.t_min, cfg.t_max, cfg.steps)) {
    const CycleReport r = run_cycle(cycle_params(cfg, temp));
    t.rows.push_back({temp, r.p_minus, r.w, r.q_c, r.eta});
  }
  return t;
}

Table circuit_table(const RunConfig& cfg) {
  const TwoLevelHamiltonian h(cfg.delta);
  std::vector<double> phis;
  if (cfg.phi) {
    phis.push_back(*cfg.phi);
  } else {
    for (int k = 0; k < 5; ++k) phis.push_back(std::numbers::pi * k / 4);
  }
  Table t;
  t.columns = {"t", "phi", "distance"};
  for (double temp : temperature_grid(cfg.t_min, cfg.t_max, cfg.steps))
    for (double phi : phis)
      t.rows.push_back({temp, phi, verify_against_kraus(h, physical(temp, cfg), phi, cfg.decompose_cswap)});
  return t;
}

Table mc_table(const RunConfig& cfg) {
  const MonteCarloStats s = monte_carlo(cycle_params(cfg, cfg.temperature), cfg.trials, cfg.seed);
  Table t;
  t.columns = {"trials", "seed", "successes", "p_minus_emp", "p_minus_exact", "w_total", "q_c_total"};
  t.rows.push_back({s.trials, s.seed, s.successes, s.p_minus_emp, s.p_minus_exact, s.w_total, s.q_c_total});
  t.json_extras.emplace_back("rng", s.rng);
  return t;
}

bool all_finite(const Table& t) {
  for (const auto& row : t.rows)
    for (const auto& c : row)
      if (const double* d = std::get_if<double>(&c); d && !std::isfinite(*d)) return false;
  return true;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) os << format_number(v);
            else os << v;
          },
          row[i]);
    }
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) obj[t.columns[i]] = std::stod(format_number(v));
            else obj[t.columns[i]] = v;
          },
          row[i]);
    }
    for (const auto& [key, value] : t.json_extras) obj[key] = value;
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Thermodynamics of the quantum SWITCH of two thermalizing channels", "icoq"};
  app.require_subcommand(1);

  auto* probs = app.add_subcommand("probs", "Ancilla outcome probabilities over temperature");
  auto* heat = app.add_subcommand("heat", "Conditional heat exchange over temperature");
  auto* fridge = app.add_subcommand("fridge", "Refrigerator cycle sweep with T_H = T_C");
  auto* circuit = app.add_subcommand("circuit-verify", "Gate-level circuit vs. Kraus SWITCH distances");
  auto* mc = app.add_subcommand("mc", "Monte-Carlo demon cycles");

  for (auto* sub : {probs, heat}) {
    add_common_options(sub, cfg);
    add_grid_options(sub, cfg);
    add_phi_option(sub, cfg);
    sub->add_option("--basis", cfg.basis, "Ancilla measurement basis")
        ->check(CLI::IsMember({"pm", "computational"}));
  }
  add_common_options(fridge, cfg);
  add_grid_options(fridge, cfg);
  add_phi_option(fridge, cfg);
  add_fridge_options(fridge, cfg);

  add_common_options(circuit, cfg);
  add_grid_options(circuit, cfg);
  add_phi_option(circuit, cfg);
  circuit->add_flag("--decompose-cswap", cfg.decompose_cswap, "Expand each CSWAP into three Toffolis");

  add_common_options(mc, cfg);
  add_phi_option(mc, cfg);
  add_fridge_options(mc, cfg);
  mc->add_option("--temperature", cfg.temperature, "T_H = T_C, units of delta/k_B")->check(CLI::PositiveNumber);
  mc->add_option("--trials", cfg.trials, "Number of cycles")->check(CLI::PositiveNumber);
  mc->add_option("--seed", cfg.seed, "64-bit generator seed");

  std::vector<std::string> argv_store{"icoq"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "icoq: " << e.what() << '\n';
    return kExitUsage;
  }

  Table table;
  try {
    if (probs->parsed()) table = probs_table(cfg);
    else if (heat->parsed()) table = heat_table(cfg);
    else if (fridge->parsed()) table = fridge_table(cfg);
    else if (circuit->parsed()) table = circuit_table(cfg);
    else table = mc_table(cfg);
  } catch (const ValidationError& e) {
    err << "icoq: numerical validation failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "icoq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "icoq: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!all_finite(table)) {
    err << "icoq: numerical validation failure: non-finite result\n";
    return kExitNumerical;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "icoq: cannot open " << cfg.out_path << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }
  if (cfg.format == "json") write_json(table, *sink);
  else write_csv(table, *sink);
  return kExitOk;
}

}  // namespace icoq::cli
