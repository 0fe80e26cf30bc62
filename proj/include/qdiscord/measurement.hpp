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
#include <optional>
#include <sstream>
#include <vector>

#include "qdiscord/errors.hpp"
#include "qdiscord/linalg.hpp"
#include "qdiscord/states.hpp"
#include "qdiscord/tolerances.hpp"

namespace qdiscord {

/// Complete set of orthogonal projectors on H_A. Projectors may have any
/// rank; outcome order is the order given at construction.
class ProjectiveMeasurement {
 public:
  explicit ProjectiveMeasurement(std::vector<ComplexMatrix> projectors)
      : projectors_(std::move(projectors)) {
    if (projectors_.empty())
      throw Error(ErrorKind::kInvalidMeasurement, "measurement has no projectors");
    dim_a_ = projectors_.front().dim();
    ComplexMatrix total(dim_a_);
    for (std::size_t j = 0; j < projectors_.size(); ++j) {
      const ComplexMatrix& p = projectors_[j];
      if (p.dim() != dim_a_)
        throw Error(ErrorKind::kDimensionMismatch, "projectors act on different spaces");
      check(hermiticity_defect(p), "projector not Hermitian", j);
      check(max_abs_diff(p * p, p), "projector not idempotent", j);
      for (std::size_t k = 0; k < j; ++k)
        check(max_abs_diff(p * projectors_[k], ComplexMatrix(dim_a_)), "projectors not orthogonal", j);
      ranks_.push_back(static_cast<std::size_t>(std::lround(p.trace().real())));
      total += p;
    }
    check(max_abs_diff(total, ComplexMatrix::identity(dim_a_)), "projectors do not sum to identity",
          projectors_.size());
  }

  /// Rank-1 measurement onto an orthonormal basis.
  static ProjectiveMeasurement from_basis(const std::vector<Ket>& basis) {
    std::vector<ComplexMatrix> projectors;
    for (const Ket& v : basis) projectors.push_back(ComplexMatrix::projector(v));
    return ProjectiveMeasurement(std::move(projectors));
  }

  static ProjectiveMeasurement computational(std::size_t dim) {
    std::vector<ComplexMatrix> projectors;
    for (std::size_t i = 0; i < dim; ++i) {
      ComplexMatrix p(dim);
      p(i, i) = 1.0;
      projectors.push_back(std::move(p));
    }
    return ProjectiveMeasurement(std::move(projectors));
  }

  /// The trivial measurement {Id}: one outcome that reveals nothing.
  static ProjectiveMeasurement trivial(std::size_t dim) {
    return ProjectiveMeasurement({ComplexMatrix::identity(dim)});
  }

  std::size_t dim_a() const noexcept { return dim_a_; }
  std::size_t size() const noexcept { return projectors_.size(); }
  const std::vector<ComplexMatrix>& projectors() const noexcept { return projectors_; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }

  bool is_rank_one() const {
    for (std::size_t r : ranks_)
      if (r != 1) return false;
    return true;
  }

  /// Id_S (x) Pi_j
  ComplexMatrix lifted(std::size_t j, std::size_t dim_s) const {
    return tensor(ComplexMatrix::identity(dim_s), projectors_[j]);
  }

 private:
  static void check(double defect, const char* what, std::size_t index) {
    if (!(defect <= tol::kProjector)) {
      std::ostringstream msg;
      msg << what << " (index " << index << ", defect " << defect << ")";
      throw Error(ErrorKind::kInvalidMeasurement, msg.str());
    }
  }

  std::size_t dim_a_ = 0;
  std::vector<ComplexMatrix> projectors_;
  std::vector<std::size_t> ranks_;
};

/// Qubit basis {cos t|0> + e^{i f} sin t|1>, e^{-i f} sin t|0> - cos t|1>}.
inline ProjectiveMeasurement qubit_basis(double theta, double phi) {
  const double c = std::cos(theta), s = std::sin(theta);
  const Complex e = std::polar(1.0, phi);
  return ProjectiveMeasurement::from_basis({Ket{c, e * s}, Ket{std::conj(e) * s, -c}});
}

enum class ConditionMode {
  kProjected,  // Pi_j rho Pi_j / p_j on the joint space
  kTraced,     // Tr_A(Pi_j rho) / p_j on S alone
};

struct ConditionalOutcome {
  double probability = 0.0;
  // Empty when probability < tol::kProbabilityFloor.
  std::optional<BipartiteState> state;
};

struct ConditionalEnsemble {
  ConditionMode mode = ConditionMode::kProjected;
  std::vector<ConditionalOutcome> outcomes;
};

namespace detail {
inline void require_matching(const BipartiteState& state, const ProjectiveMeasurement& meas) {
  if (state.dim_a() != meas.dim_a()) {
    std::ostringstream msg;
    msg << "measurement acts on dim " << meas.dim_a() << " but state has dim_a "
        << state.dim_a();
    throw Error(ErrorKind::kDimensionMismatch, msg.str());
  }
}

// (Id (x) Pi) rho (Id (x) Pi), touching only the nonzero blocks.
inline ComplexMatrix sandwich(const ComplexMatrix& rho, const ComplexMatrix& pi,
                              std::size_t dim_s) {
  const std::size_t da = pi.dim();
  ComplexMatrix out(rho.dim());
  std::vector<Complex> tmp(da * da);
  for (std::size_t s = 0; s < dim_s; ++s)
    for (std::size_t t = 0; t < dim_s; ++t) {
      // tmp = block(s,t) * pi
      for (std::size_t a = 0; a < da; ++a)
        for (std::size_t b = 0; b < da; ++b) {
          Complex acc = 0.0;
          for (std::size_t k = 0; k < da; ++k) acc += rho(s * da + a, t * da + k) * pi(k, b);
          tmp[a * da + b] = acc;
        }
      for (std::size_t a = 0; a < da; ++a)
        for (std::size_t b = 0; b < da; ++b) {
          Complex acc = 0.0;
          for (std::size_t k = 0; k < da; ++k) acc += pi(a, k) * tmp[k * da + b];
          out(s * da + a, t * da + b) = acc;
        }
    }
  return out;
}
}  // namespace detail

inline ConditionalEnsemble condition(const BipartiteState& state,
                                     const ProjectiveMeasurement& meas, ConditionMode mode) {
  detail::require_matching(state, meas);
  ConditionalEnsemble ensemble{mode, {}};
  const std::size_t ds = state.dim_s(), da = state.dim_a();
  for (const ComplexMatrix& pi : meas.projectors()) {
    ComplexMatrix block = detail::sandwich(state.rho(), pi, ds);
    const double p = block.trace().real();
    ConditionalOutcome outcome{p, std::nullopt};
    if (p >= tol::kProbabilityFloor) {
      block /= p;
      if (mode == ConditionMode::kProjected) {
        outcome.state = detail::make_state_unchecked(std::move(block), ds, da);
      } else {
        outcome.state =
            detail::make_state_unchecked(partial_trace(block, ds, da, Subsystem::kS), ds, 1);
      }
    }
    ensemble.outcomes.push_back(std::move(outcome));
  }
  return ensemble;
}

/// sum_j Pi_j rho Pi_j, the unread measurement.
inline BipartiteState dephase(const BipartiteState& state, const ProjectiveMeasurement& meas) {
  detail::require_matching(state, meas);
  ComplexMatrix out(state.dim());
  for (const ComplexMatrix& pi : meas.projectors())
    out += detail::sandwich(state.rho(), pi, state.dim_s());
  return detail::make_state_unchecked(std::move(out), state.dim_s(), state.dim_a());
}

/// ||rho - dephase(rho)||_F; zero iff rho = sum_j Pi_j rho Pi_j.
inline double superselection_residual(const BipartiteState& state,
                                      const ProjectiveMeasurement& meas) {
  return frobenius_norm(state.rho() - dephase(state, meas).rho());
}

/// One pure product term pi_{j,k} (x) Pi_j of a classically accessible state.
struct ClassicalComponent {
  double weight = 0.0;
  std::size_t outcome = 0;
  Ket s;
  Ket a;

  ComplexMatrix matrix() const { return ComplexMatrix::projector(tensor(s, a)); }
};

/// Splits a state that obeys the superselection identity for a rank-1
/// measurement into weighted pure product states: for each outcome j the
/// conditional S-state is diagonalized into projectors pi_{j,k}.
inline std::vector<ClassicalComponent> classical_decomposition(const BipartiteState& state,
                                                               const ProjectiveMeasurement& meas) {
  detail::require_matching(state, meas);
  if (!meas.is_rank_one())
    throw Error(ErrorKind::kNotRankOne, "classical_decomposition needs rank-1 projectors");
  const double residual = superselection_residual(state, meas);
  if (!(residual <= tol::kDecomposition)) {
    std::ostringstream msg;
    msg << "superselection residual " << residual << " exceeds " << tol::kDecomposition;
    throw Error(ErrorKind::kNonzeroDiscord, msg.str());
  }

  const ConditionalEnsemble ensemble = condition(state, meas, ConditionMode::kTraced);
  std::vector<ClassicalComponent> out;
  for (std::size_t j = 0; j < ensemble.outcomes.size(); ++j) {
    const auto& outcome = ensemble.outcomes[j];
    if (!outcome.state) continue;
    const Ket a = hermitian_eigen(meas.projectors()[j]).eigenvectors.front();
    const EigenDecomposition eig = hermitian_eigen(outcome.state->rho());
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
      if (eig.eigenvalues[k] < tol::kPsd) continue;
      out.push_back({outcome.probability * eig.eigenvalues[k], j, eig.eigenvectors[k], a});
    }
  }
  return out;
}

}  // namespace qdiscord
