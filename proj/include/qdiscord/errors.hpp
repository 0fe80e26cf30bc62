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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdiscord {

enum class ErrorKind {
  kNotHermitian,
  kNotUnitTrace,
  kNotPositive,
  kNotNormalized,
  kOutOfRange,
  kInvalidDistribution,
  kInvalidMeasurement,
  kNotRankOne,
  kDimensionMismatch,
  kUnsupportedDimension,
  kNoConvergence,
  kNonzeroDiscord,
  kParseError,
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kNotUnitTrace: return "NotUnitTrace";
    case ErrorKind::kNotPositive: return "NotPositive";
    case ErrorKind::kNotNormalized: return "NotNormalized";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kInvalidDistribution: return "InvalidDistribution";
    case ErrorKind::kInvalidMeasurement: return "InvalidMeasurement";
    case ErrorKind::kNotRankOne: return "NotRankOne";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kNonzeroDiscord: return "NonzeroDiscord";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `what()` is prefixed with the kind
/// name, e.g. "NotPositive: minimum eigenvalue -0.1 < -1e-10".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Malformed input data, as opposed to a shape or capability problem.
  bool is_validation() const noexcept {
    switch (kind_) {
      case ErrorKind::kDimensionMismatch:
      case ErrorKind::kUnsupportedDimension:
      case ErrorKind::kNoConvergence:
      case ErrorKind::kNonzeroDiscord:
        return false;
      default:
        return true;
    }
  }

  bool is_dimension() const noexcept {
    return kind_ == ErrorKind::kDimensionMismatch ||
           kind_ == ErrorKind::kUnsupportedDimension;
  }

 private:
  ErrorKind kind_;
};

}  // namespace qdiscord
