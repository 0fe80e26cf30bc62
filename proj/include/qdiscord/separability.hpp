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

#include "qdiscord/linalg.hpp"
#include "qdiscord/states.hpp"
#include "qdiscord/tolerances.hpp"

namespace qdiscord {

struct PptVerdict {
  double min_eigenvalue = 0.0;
  bool is_ppt = false;
  // PPT is equivalent to separability only for 2x2 and 2x3 systems.
  bool conclusive = false;
};

/// Positive-partial-transpose test on the A factor.
inline PptVerdict ppt_test(const BipartiteState& state) {
  const ComplexMatrix pt = partial_transpose(state.rho(), state.dim_s(), state.dim_a());
  PptVerdict v;
  v.min_eigenvalue = hermitian_eigenvalues(pt).back();
  v.is_ppt = v.min_eigenvalue >= -tol::kPpt;
  v.conclusive = state.dim() <= 6;
  return v;
}

}  // namespace qdiscord
