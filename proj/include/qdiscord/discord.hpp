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

// Quantum mutual information in its two forms and their difference, the
// discord:
//
//   I(S:A)     = H(S) + H(A) - H(S,A)
//   J(S:A)_Pi  = H(S) - H(S|{Pi_j})
//   delta      = I - J = H(A) - H(S,A) + H(S|{Pi_j})
//
// where the measurement {Pi_j} acts on A only.

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "qdiscord/entropy.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/measurement.hpp"
#include "qdiscord/states.hpp"

namespace qdiscord {

/// How H(S|{Pi_j}) is formed.
enum class DiscordMode {
  kRank1,     // entropy of Pi_j rho Pi_j / p_j; rank-1 projectors only
  kTraced,    // entropy of Tr_A(Pi_j rho) / p_j; any rank
  kDephased,  // H(rho^D) - H(rho^D_A), rho^D = sum_j Pi_j rho Pi_j; any rank
};

inline std::string_view mode_name(DiscordMode mode) {
  switch (mode) {
    case DiscordMode::kRank1: return "rank1";
    case DiscordMode::kTraced: return "traced";
    case DiscordMode::kDephased: return "dephased";
  }
  return "?";
}

inline std::optional<DiscordMode> parse_mode(std::string_view name) {
  if (name == "rank1") return DiscordMode::kRank1;
  if (name == "traced") return DiscordMode::kTraced;
  if (name == "dephased") return DiscordMode::kDephased;
  return std::nullopt;
}

struct DiscordReport {
  double h_s = 0.0;
  double h_a = 0.0;
  double h_sa = 0.0;
  double conditional_entropy = 0.0;  // H(S|{Pi_j}) as defined by the variant
  double mutual_i = 0.0;
  double mutual_j = 0.0;
  double discord = 0.0;  // exactly mutual_i - mutual_j
  std::vector<double> outcome_probs;
  DiscordMode variant = DiscordMode::kRank1;
};

struct StateEntropies {
  double h_s = 0.0;
  double h_a = 0.0;
  double h_sa = 0.0;

  static StateEntropies of(const BipartiteState& state) {
    return {von_neumann_entropy(state.marginal_s()), von_neumann_entropy(state.marginal_a()),
            von_neumann_entropy(state.rho())};
  }
};

inline double mutual_information_i(const BipartiteState& state) {
  const auto e = StateEntropies::of(state);
  return e.h_s + e.h_a - e.h_sa;
}

struct ConditionalEntropy {
  double value = 0.0;
  std::vector<double> probabilities;
};

namespace detail {

inline ConditionalEntropy conditional_entropy_impl(const BipartiteState& state,
                                                   const ProjectiveMeasurement& meas,
                                                   DiscordMode mode) {
  require_matching(state, meas);
  ConditionalEntropy out;
  if (mode == DiscordMode::kDephased) {
    const BipartiteState dephased = dephase(state, meas);
    for (const ComplexMatrix& pi : meas.projectors())
      out.probabilities.push_back(sandwich(state.rho(), pi, state.dim_s()).trace().real());
    out.value = von_neumann_entropy(dephased.rho()) - von_neumann_entropy(dephased.marginal_a());
    return out;
  }
  if (mode == DiscordMode::kRank1 && !meas.is_rank_one())
    throw Error(ErrorKind::kNotRankOne, "rank1 variant needs rank-1 projectors; use traced");

  const ConditionalEnsemble ensemble = condition(
      state, meas, mode == DiscordMode::kRank1 ? ConditionMode::kProjected : ConditionMode::kTraced);
  for (const auto& outcome : ensemble.outcomes) {
    out.probabilities.push_back(outcome.probability);
    if (outcome.state) out.value += outcome.probability * von_neumann_entropy(outcome.state->rho());
  }
  return out;
}

inline DiscordReport assemble_report(const StateEntropies& e, ConditionalEntropy cond,
                                     DiscordMode mode) {
  DiscordReport r;
  r.h_s = e.h_s;
  r.h_a = e.h_a;
  r.h_sa = e.h_sa;
  r.conditional_entropy = cond.value;
  r.mutual_i = e.h_s + e.h_a - e.h_sa;
  r.mutual_j = e.h_s - cond.value;
  r.discord = r.mutual_i - r.mutual_j;
  r.outcome_probs = std::move(cond.probabilities);
  r.variant = mode;
  return r;
}

}  // namespace detail

/// H(S|{Pi_j}) = sum_j p_j H(rho_{S|Pi_j}), or the dephasing form.
inline double conditional_entropy(const BipartiteState& state, const ProjectiveMeasurement& meas,
                                  DiscordMode mode = DiscordMode::kRank1) {
  return detail::conditional_entropy_impl(state, meas, mode).value;
}

inline double mutual_information_j(const BipartiteState& state, const ProjectiveMeasurement& meas,
                                   DiscordMode mode = DiscordMode::kRank1) {
  return von_neumann_entropy(state.marginal_s()) - conditional_entropy(state, meas, mode);
}

inline DiscordReport discord(const BipartiteState& state, const ProjectiveMeasurement& meas,
                             DiscordMode mode = DiscordMode::kRank1) {
  return detail::assemble_report(StateEntropies::of(state),
                                 detail::conditional_entropy_impl(state, meas, mode), mode);
}

/// Discord evaluations against a fixed state, reusing its marginal entropies.
class DiscordEvaluator {
 public:
  explicit DiscordEvaluator(const BipartiteState& state, DiscordMode mode = DiscordMode::kRank1)
      : state_(state), entropies_(StateEntropies::of(state)), mode_(mode) {}

  DiscordReport report(const ProjectiveMeasurement& meas) const {
    return detail::assemble_report(entropies_,
                                   detail::conditional_entropy_impl(state_, meas, mode_), mode_);
  }

  double operator()(const ProjectiveMeasurement& meas) const { return report(meas).discord; }

  const BipartiteState& state() const noexcept { return state_; }
  const StateEntropies& entropies() const noexcept { return entropies_; }

 private:
  BipartiteState state_;
  StateEntropies entropies_;
  DiscordMode mode_;
};

}  // namespace qdiscord
