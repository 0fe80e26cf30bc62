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

namespace qdiscord::tol {

// Numerical thresholds shared across modules.
inline constexpr double kHermitian = 1e-10;
inline constexpr double kReconstruction = 1e-9;
inline constexpr double kTrace = 1e-10;
// Eigenvalues in (-kPsd, kPsd) count as zero; below -kPsd is an error.
inline constexpr double kPsd = 1e-10;
inline constexpr double kNormalization = 1e-10;
inline constexpr double kProjector = 1e-10;
inline constexpr double kDistribution = 1e-12;
// Outcomes with probability below this carry no conditional state.
inline constexpr double kProbabilityFloor = 1e-12;
inline constexpr double kDecomposition = 1e-8;
inline constexpr double kPpt = 1e-10;

inline constexpr int kJacobiSweeps = 100;
inline constexpr double kJacobiOffDiagonal = 1e-13;

}  // namespace qdiscord::tol
