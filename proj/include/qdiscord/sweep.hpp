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

#pragma once

// Discord landscapes over a one-parameter state family and the qubit basis
// angle theta, at fixed phi. Written as CSV with fixed 12-decimal values so
// output is byte-identical across runs.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qdiscord/discord.hpp"
#include "qdiscord/states.hpp"

namespace qdiscord {

enum class StateFamily { kCnot, kWerner };

inline std::optional<StateFamily> parse_family(std::string_view name) {
  if (name == "cnot") return StateFamily::kCnot;
  if (name == "werner") return StateFamily::kWerner;
  return std::nullopt;
}

inline BipartiteState family_state(StateFamily family, double z) {
  return family == StateFamily::kCnot ? decohered_cnot(z) : werner(z);
}

struct SweepRow {
  double z = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double discord = 0.0;
  double mutual_i = 0.0;
  double mutual_j = 0.0;
};

struct SweepSpec {
  StateFamily family = StateFamily::kCnot;
  std::size_t z_steps = 11;
  std::size_t theta_steps = 64;
  double phi = 1.0;

  // z over the closed interval [0, 1].
  double z(std::size_t k) const {
    if (k + 1 == z_steps) return 1.0;
    return static_cast<double>(k) / static_cast<double>(z_steps - 1);
  }
  // theta over [0, pi/2): theta = pi/2 is the same projector set as theta = 0.
  double theta(std::size_t i) const {
    return static_cast<double>(i) * (std::numbers::pi / 2) / static_cast<double>(theta_steps);
  }
};

/// Rows in (z outer, theta inner) order.
inline std::vector<SweepRow> sweep(const SweepSpec& spec) {
  if (spec.z_steps < 2 || spec.theta_steps < 2)
    throw Error(ErrorKind::kOutOfRange, "sweep needs at least 2 steps per axis");
  std::vector<SweepRow> rows;
  rows.reserve(spec.z_steps * spec.theta_steps);
  for (std::size_t k = 0; k < spec.z_steps; ++k) {
    const double z = spec.z(k);
    const DiscordEvaluator evaluate(family_state(spec.family, z), DiscordMode::kRank1);
    for (std::size_t i = 0; i < spec.theta_steps; ++i) {
      const double theta = spec.theta(i);
      const DiscordReport r = evaluate.report(qubit_basis(theta, spec.phi));
      rows.push_back({z, theta, spec.phi, r.discord, r.mutual_i, r.mutual_j});
    }
  }
  return rows;
}

/// Fixed-point with 12 decimals; tiny magnitudes print as an unsigned zero.
inline std::string format_fixed(double value) {
  if (std::abs(value) < 5e-13) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  return buf;
}

inline constexpr std::string_view kSweepHeader = "z,theta,phi,discord,mutual_i,mutual_j";

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    out << format_fixed(r.z) << ',' << format_fixed(r.theta) << ',' << format_fixed(r.phi) << ','
        << format_fixed(r.discord) << ',' << format_fixed(r.mutual_i) << ','
        << format_fixed(r.mutual_j) << '\n';
  }
}

}  // namespace qdiscord
