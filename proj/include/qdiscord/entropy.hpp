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

// Entropies in bits.

#include <cmath>
#include <span>
#include <sstream>
#include <vector>

#include "qdiscord/errors.hpp"
#include "qdiscord/linalg.hpp"
#include "qdiscord/states.hpp"
#include "qdiscord/tolerances.hpp"

namespace qdiscord {

/// -sum p log2 p with 0 log 0 = 0.
inline double shannon_entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

inline double binary_entropy(double p) {
  const double q[2] = {p, 1.0 - p};
  return shannon_entropy(q);
}

/// Entropy of a spectrum; |lambda| < psd tolerance counts as zero.
inline double spectral_entropy(std::span<const double> eigenvalues) {
  double h = 0.0;
  for (double x : eigenvalues) {
    if (x < -tol::kPsd) {
      std::ostringstream msg;
      msg << "eigenvalue " << x << " < -" << tol::kPsd;
      throw Error(ErrorKind::kNotPositive, msg.str());
    }
    if (x >= tol::kPsd) h -= x * std::log2(x);
  }
  return h;
}

inline double von_neumann_entropy(const ComplexMatrix& rho) {
  return spectral_entropy(hermitian_eigenvalues(rho));
}

inline double von_neumann_entropy(const BipartiteState& state) {
  return von_neumann_entropy(state.rho());
}

}  // namespace qdiscord
