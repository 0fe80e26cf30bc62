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

// Residuals of the three structural facts about discord with rank-1
// measurements:
//   1. H(S|{Pi_j}) = H(rho^D) - H(rho^D_A)
//   2. delta >= 0
//   3. delta = 0  <=>  rho = sum_j Pi_j rho Pi_j

#include <algorithm>
#include <optional>

#include "qdiscord/discord.hpp"
#include "qdiscord/measurement.hpp"
#include "qdiscord/tolerances.hpp"

namespace qdiscord {

struct PropositionResiduals {
  double prop1 = 0.0;
  double prop2_violation = 0.0;
  // delta, when the state obeys the superselection identity for the basis.
  std::optional<double> prop3_forward;
  // Superselection residual, when delta vanishes.
  std::optional<double> prop3_backward;
  double discord = 0.0;
  double superselection_residual = 0.0;
};

inline constexpr double kSuperselectionApplies = tol::kDecomposition;
inline constexpr double kZeroDiscordApplies = 1e-9;

inline PropositionResiduals proposition_residuals(const BipartiteState& state,
                                                  const ProjectiveMeasurement& meas) {
  if (!meas.is_rank_one())
    throw Error(ErrorKind::kNotRankOne, "proposition checks need rank-1 projectors");
  const DiscordReport report = discord(state, meas, DiscordMode::kRank1);
  const BipartiteState dephased = dephase(state, meas);
  const double via_dephasing =
      von_neumann_entropy(dephased.rho()) - von_neumann_entropy(dephased.marginal_a());

  PropositionResiduals r;
  r.discord = report.discord;
  r.superselection_residual = frobenius_norm(state.rho() - dephased.rho());
  r.prop1 = std::abs(report.conditional_entropy - via_dephasing);
  r.prop2_violation = std::max(0.0, -report.discord);
  if (r.superselection_residual <= kSuperselectionApplies) r.prop3_forward = std::abs(r.discord);
  if (r.discord <= kZeroDiscordApplies) r.prop3_backward = r.superselection_residual;
  return r;
}

}  // namespace qdiscord
