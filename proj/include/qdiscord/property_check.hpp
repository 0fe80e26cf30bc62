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

// Randomized verification of the proposition residuals, as run by
// `qdiscord check`.

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "qdiscord/discord.hpp"
#include "qdiscord/propositions.hpp"
#include "qdiscord/states.hpp"

namespace qdiscord {

struct PropertyTolerances {
  double prop1 = 1e-9;
  double prop2 = 1e-10;
  double prop3_forward = 1e-7;
  double prop3_backward = 1e-6;
};

struct PropertyViolation {
  std::size_t trial = 0;
  std::uint64_t state_seed = 0;
  double theta = 0.0;
  double phi = 0.0;
  bool crafted = false;  // the dephased (block-diagonal) state of the trial
  std::string property;
  double value = 0.0;
};

struct PropertySummary {
  std::size_t trials = 0;
  double max_prop1 = 0.0;
  double max_prop2_violation = 0.0;  // over rank1 and traced variants
  double max_prop3_forward = 0.0;
  double max_prop3_backward = 0.0;
  std::size_t prop3_forward_cases = 0;
  std::size_t prop3_backward_cases = 0;
  std::optional<PropertyViolation> first_violation;

  bool passed() const { return !first_violation.has_value(); }
};

struct RandomBasis {
  double theta = 0.0;
  double phi = 0.0;
};

/// Bloch-uniform qubit basis drawn from (seed, index).
inline RandomBasis random_qubit_basis(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x9e3779b9u};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // cos(2 theta) uniform in [-1, 1] gives a uniform Bloch axis.
  const double theta = 0.5 * std::acos(1.0 - 2.0 * unit(rng));
  const double phi = 2.0 * std::numbers::pi * unit(rng);
  return {theta, phi};
}

/// Each trial draws a 2x2 random state (seed + trial) and a random basis,
/// checks it, then checks the state dephased in that same basis.
inline PropertySummary run_property_check(std::size_t trials, std::uint64_t seed,
                                          const PropertyTolerances& tolerances = {}) {
  if (trials == 0) throw Error(ErrorKind::kOutOfRange, "trials must be >= 1");
  PropertySummary summary;
  summary.trials = trials;

  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t state_seed = seed + t;
    const RandomBasis basis = random_qubit_basis(seed, t);
    const ProjectiveMeasurement meas = qubit_basis(basis.theta, basis.phi);
    const BipartiteState random = random_state(2, 2, state_seed);
    const BipartiteState crafted = dephase(random, meas);

    for (const BipartiteState* state : {&random, &crafted}) {
      const bool is_crafted = state == &crafted;
      auto flag = [&](const char* property, double value) {
        if (!summary.first_violation)
          summary.first_violation =
              PropertyViolation{t, state_seed, basis.theta, basis.phi, is_crafted, property, value};
      };

      const PropositionResiduals r = proposition_residuals(*state, meas);
      const double traced = discord(*state, meas, DiscordMode::kTraced).discord;
      const double prop2 = std::max(r.prop2_violation, std::max(0.0, -traced));

      summary.max_prop1 = std::max(summary.max_prop1, r.prop1);
      summary.max_prop2_violation = std::max(summary.max_prop2_violation, prop2);
      if (!(r.prop1 < tolerances.prop1)) flag("prop1", r.prop1);
      if (!(prop2 <= tolerances.prop2)) flag("prop2", prop2);

      if (r.prop3_forward) {
        ++summary.prop3_forward_cases;
        summary.max_prop3_forward = std::max(summary.max_prop3_forward, *r.prop3_forward);
        if (!(*r.prop3_forward < tolerances.prop3_forward))
          flag("prop3_forward", *r.prop3_forward);
      } else if (is_crafted) {
        flag("prop3_forward", r.superselection_residual);
      }
      if (r.prop3_backward) {
        ++summary.prop3_backward_cases;
        summary.max_prop3_backward = std::max(summary.max_prop3_backward, *r.prop3_backward);
        if (!(*r.prop3_backward < tolerances.prop3_backward))
          flag("prop3_backward", *r.prop3_backward);
      }
    }
  }
  return summary;
}

}  // namespace qdiscord
