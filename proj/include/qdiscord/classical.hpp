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

// Classical baseline: a joint distribution p(x, y), the two equivalent
// mutual-information formulas, and the diagonal quantum embedding.

#include <cmath>
#include <sstream>
#include <vector>

#include "qdiscord/entropy.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/states.hpp"
#include "qdiscord/tolerances.hpp"

namespace qdiscord {

class ClassicalJoint {
 public:
  ClassicalJoint(std::size_t rows, std::size_t cols, std::vector<double> table)
      : rows_(rows), cols_(cols), table_(std::move(table)) {
    if (rows_ == 0 || cols_ == 0 || table_.size() != rows_ * cols_)
      throw Error(ErrorKind::kDimensionMismatch, "joint table shape");
    double total = 0.0;
    for (double p : table_) {
      if (!(p >= 0.0)) {
        std::ostringstream msg;
        msg << "negative entry " << p;
        throw Error(ErrorKind::kInvalidDistribution, msg.str());
      }
      total += p;
    }
    if (!(std::abs(total - 1.0) <= tol::kDistribution)) {
      std::ostringstream msg;
      msg << "entries sum to " << total;
      throw Error(ErrorKind::kInvalidDistribution, msg.str());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t x, std::size_t y) const { return table_[x * cols_ + y]; }
  const std::vector<double>& table() const noexcept { return table_; }

  std::vector<double> marginal_x() const {
    std::vector<double> p(rows_, 0.0);
    for (std::size_t x = 0; x < rows_; ++x)
      for (std::size_t y = 0; y < cols_; ++y) p[x] += (*this)(x, y);
    return p;
  }

  std::vector<double> marginal_y() const {
    std::vector<double> p(cols_, 0.0);
    for (std::size_t x = 0; x < rows_; ++x)
      for (std::size_t y = 0; y < cols_; ++y) p[y] += (*this)(x, y);
    return p;
  }

  /// p(x | Y = y) by Bayes' rule; empty if p(y) == 0.
  std::vector<double> conditional_x(std::size_t y) const {
    const double py = marginal_y()[y];
    if (py <= 0.0) return {};
    std::vector<double> p(rows_);
    for (std::size_t x = 0; x < rows_; ++x) p[x] = (*this)(x, y) / py;
    return p;
  }

  double entropy_x() const { return shannon_entropy(marginal_x()); }
  double entropy_y() const { return shannon_entropy(marginal_y()); }
  double entropy_xy() const { return shannon_entropy(table_); }

  /// H(X|Y) = sum_y p(y) H(X | Y = y)
  double conditional_entropy_x() const {
    const auto py = marginal_y();
    double h = 0.0;
    for (std::size_t y = 0; y < cols_; ++y)
      if (py[y] > 0.0) h += py[y] * shannon_entropy(conditional_x(y));
    return h;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> table_;
};

enum class ClassicalForm {
  kJ,  // H(X) - H(X|Y)
  kI,  // H(X) + H(Y) - H(X,Y)
};

inline double classical_mutual_information(const ClassicalJoint& joint, ClassicalForm form) {
  if (form == ClassicalForm::kJ) return joint.entropy_x() - joint.conditional_entropy_x();
  return joint.entropy_x() + joint.entropy_y() - joint.entropy_xy();
}

/// sum_{x,y} p(x,y) |x><x| (x) |y><y|, X on S and Y on A.
inline BipartiteState embed_classical(const ClassicalJoint& joint) {
  std::vector<double> diag(joint.table().begin(), joint.table().end());
  return validate(ComplexMatrix::diagonal(diag), joint.rows(), joint.cols());
}

}  // namespace qdiscord
