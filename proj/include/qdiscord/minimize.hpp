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

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qdiscord/discord.hpp"
#include "qdiscord/measurement.hpp"
#include "qdiscord/nelder_mead.hpp"

namespace qdiscord {

struct BasisGrid {
  std::size_t n_theta = 64;
  std::size_t n_phi = 32;

  // theta over the closed interval [0, pi/2], phi over [0, pi).
  double theta(std::size_t i) const {
    return n_theta < 2 ? 0.0
                       : static_cast<double>(i) * (std::numbers::pi / 2) /
                             static_cast<double>(n_theta - 1);
  }
  double phi(std::size_t k) const {
    return static_cast<double>(k) * std::numbers::pi / static_cast<double>(n_phi);
  }
};

struct DiscordMinimum {
  double min_delta = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  DiscordReport report;
  std::size_t evaluations = 0;
  bool refined = false;
};

/// Minimizes rank-1 discord over qubit bases on A: a full grid scan, then
/// (optionally) a simplex descent seeded at the first grid minimizer in
/// row-major (theta-major) order.
inline DiscordMinimum minimize_discord(const BipartiteState& state, BasisGrid grid = {},
                                       bool refine = true) {
  if (state.dim_a() != 2) {
    std::ostringstream msg;
    msg << "basis search is only available for dim_a = 2, got " << state.dim_a();
    throw Error(ErrorKind::kUnsupportedDimension, msg.str());
  }
  if (grid.n_theta == 0 || grid.n_phi == 0)
    throw Error(ErrorKind::kOutOfRange, "empty basis grid");

  const DiscordEvaluator evaluate(state, DiscordMode::kRank1);
  DiscordMinimum best;
  best.min_delta = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.n_theta; ++i)
    for (std::size_t k = 0; k < grid.n_phi; ++k) {
      const double th = grid.theta(i), ph = grid.phi(k);
      const double d = evaluate(qubit_basis(th, ph));
      ++best.evaluations;
      if (d < best.min_delta) {
        best.min_delta = d;
        best.theta = th;
        best.phi = ph;
      }
    }

  if (refine) {
    const double step_theta =
        grid.n_theta < 2 ? std::numbers::pi / 8 : grid.theta(1);
    const double step_phi = grid.phi(1) > 0 ? grid.phi(1) : std::numbers::pi / 8;
    const auto result = nelder_mead<2>(
        [&](const std::array<double, 2>& x) { return evaluate(qubit_basis(x[0], x[1])); },
        {best.theta, best.phi}, {step_theta, step_phi});
    best.evaluations += static_cast<std::size_t>(result.evaluations);
    best.refined = true;
    if (result.value < best.min_delta) {
      best.min_delta = result.value;
      best.theta = result.x[0];
      best.phi = result.x[1];
    }
  }
  best.report = evaluate.report(qubit_basis(best.theta, best.phi));
  best.min_delta = best.report.discord;
  return best;
}

}  // namespace qdiscord
