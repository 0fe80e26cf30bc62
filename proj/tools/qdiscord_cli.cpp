// Copyright 2026 The qdiscord Authors
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

// qdiscord: command-line front end.
//
// Exit codes: 0 ok, 1 usage, 2 invalid input, 3 dimension, 4 I/O,
// 5 property violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdiscord/qdiscord.hpp"

namespace {

using namespace qdiscord;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDimension = 3;
constexpr int kExitIo = 4;
constexpr int kExitProperty = 5;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BipartiteState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file '" + path + "'");
  return read_state(in);
}

void print_report(std::ostream& out, const DiscordReport& r) {
  out << "variant " << mode_name(r.variant) << '\n'
      << "h_s " << format_fixed(r.h_s) << '\n'
      << "h_a " << format_fixed(r.h_a) << '\n'
      << "h_sa " << format_fixed(r.h_sa) << '\n'
      << "conditional_entropy " << format_fixed(r.conditional_entropy) << '\n'
      << "mutual_i " << format_fixed(r.mutual_i) << '\n'
      << "mutual_j " << format_fixed(r.mutual_j) << '\n'
      << "discord " << format_fixed(r.discord) << '\n'
      << "outcome_probs";
  for (double p : r.outcome_probs) out << ' ' << format_fixed(p);
  out << '\n';
}

ProjectiveMeasurement qubit_measurement(const BipartiteState& state, double theta, double phi) {
  if (state.dim_a() != 2) {
    std::ostringstream msg;
    msg << "--theta/--phi describe a qubit basis but the state has dim_a = " << state.dim_a();
    throw Error(ErrorKind::kDimensionMismatch, msg.str());
  }
  return qubit_basis(theta, phi);
}

struct GridOption {
  std::size_t n_theta = 64;
  std::size_t n_phi = 32;
};

bool parse_grid(const std::string& text, GridOption& grid) {
  const auto x = text.find('x');
  if (x == std::string::npos) return false;
  try {
    std::size_t used = 0;
    const unsigned long a = std::stoul(text.substr(0, x), &used);
    if (used != x) return false;
    const std::string rest = text.substr(x + 1);
    const unsigned long b = std::stoul(rest, &used);
    if (used != rest.size() || a == 0 || b == 0) return false;
    grid.n_theta = a;
    grid.n_phi = b;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum discord of bipartite density matrices"};
  app.require_subcommand(1);

  std::string state_path;
  double theta = 0.0;
  double phi = 1.0;
  std::string mode_text = "rank1";
  std::string family_text = "cnot";
  std::size_t z_steps = 11;
  std::size_t theta_steps = 64;
  std::string grid_text = "64x32";
  bool refine = false;
  std::size_t trials = 200;
  std::uint64_t seed = 7;
  std::string out_path;

  auto* compute = app.add_subcommand("compute", "Discord report for one state and qubit basis");
  compute->add_option("--state", state_path, "State JSON file")->required();
  compute->add_option("--theta", theta, "Basis polar angle (rad)");
  compute->add_option("--phi", phi, "Basis phase (rad)")->capture_default_str();
  compute->add_option("--mode", mode_text, "rank1 | traced | dephased")
      ->check(CLI::IsMember({"rank1", "traced", "dephased"}))
      ->capture_default_str();

  auto* minimize = app.add_subcommand("minimize", "Minimize discord over qubit bases on A");
  minimize->add_option("--state", state_path, "State JSON file")->required();
  minimize->add_option("--grid", grid_text, "Grid size THETAxPHI")->capture_default_str();
  minimize->add_flag("--refine", refine, "Simplex refinement from the best grid point");

  auto* sweep_cmd = app.add_subcommand("sweep", "Discord landscape CSV for a state family");
  sweep_cmd->add_option("--family", family_text, "cnot | werner")
      ->check(CLI::IsMember({"cnot", "werner"}))
      ->capture_default_str();
  sweep_cmd->add_option("--z-steps", z_steps, "Samples of z in [0, 1]")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  sweep_cmd->add_option("--theta-steps", theta_steps, "Samples of theta in [0, pi/2)")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  sweep_cmd->add_option("--phi", phi, "Basis phase (rad)")->capture_default_str();
  sweep_cmd->add_option("--out", out_path, "CSV path (default stdout)");

  auto* ppt = app.add_subcommand("ppt", "Partial-transpose separability test");
  ppt->add_option("--state", state_path, "State JSON file")->required();

  auto* check = app.add_subcommand("check", "Randomized proposition checks");
  check->add_option("--trials", trials, "Number of random (state, basis) trials")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  check->add_option("--seed", seed, "Base seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compute) {
      const BipartiteState state = load_state(state_path);
      const DiscordMode mode = *parse_mode(mode_text);
      print_report(std::cout, discord(state, qubit_measurement(state, theta, phi), mode));
    } else if (*minimize) {
      GridOption grid;
      if (!parse_grid(grid_text, grid)) {
        std::cerr << "--grid expects THETAxPHI, e.g. 64x32\n";
        return kExitUsage;
      }
      const BipartiteState state = load_state(state_path);
      const DiscordMinimum m = minimize_discord(state, {grid.n_theta, grid.n_phi}, refine);
      std::cout << "min_discord " << format_fixed(m.min_delta) << '\n'
                << "theta " << format_fixed(m.theta) << '\n'
                << "phi " << format_fixed(m.phi) << '\n'
                << "evaluations " << m.evaluations << '\n';
      print_report(std::cout, m.report);
    } else if (*sweep_cmd) {
      SweepSpec spec{*parse_family(family_text), z_steps, theta_steps, phi};
      const auto rows = sweep(spec);
      if (out_path.empty()) {
        write_sweep_csv(std::cout, rows);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw IoError("cannot write '" + out_path + "'");
        write_sweep_csv(out, rows);
        out.flush();
        if (!out) throw IoError("write to '" + out_path + "' failed");
      }
    } else if (*ppt) {
      const BipartiteState state = load_state(state_path);
      const PptVerdict v = ppt_test(state);
      std::cout << "min_eigenvalue " << format_fixed(v.min_eigenvalue) << '\n'
                << "is_ppt " << (v.is_ppt ? "true" : "false") << '\n'
                << "conclusive " << (v.conclusive ? "true" : "false") << '\n';
    } else if (*check) {
      const PropertySummary s = run_property_check(trials, seed);
      std::cout << "trials " << s.trials << '\n'
                << "max_prop1 " << s.max_prop1 << '\n'
                << "max_prop2_violation " << s.max_prop2_violation << '\n'
                << "max_prop3_forward " << s.max_prop3_forward << " (" << s.prop3_forward_cases
                << " cases)\n"
                << "max_prop3_backward " << s.max_prop3_backward << " ("
                << s.prop3_backward_cases << " cases)\n";
      if (!s.passed()) {
        const auto& v = *s.first_violation;
        std::cerr << "violation: " << v.property << " = " << v.value << " at trial " << v.trial
                  << " (state seed " << v.state_seed << (v.crafted ? ", dephased" : "")
                  << ", theta " << v.theta << ", phi " << v.phi << ")\n";
        return kExitProperty;
      }
      std::cout << "all propositions hold\n";
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.is_dimension()) return kExitDimension;
    return kExitValidation;
  }
  return 0;
}
