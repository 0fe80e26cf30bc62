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

// Derivative-free simplex descent (Nelder-Mead) in N dimensions.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>

namespace qdiscord {

struct NelderMeadOptions {
  double value_tolerance = 1e-10;  // stop when f(worst) - f(best) falls below
  int max_iterations = 200;
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

template <std::size_t N>
struct NelderMeadResult {
  std::array<double, N> x{};
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Minimizes f from an axis-aligned initial simplex x0, x0 + step_i e_i.
/// Deterministic: ties in vertex ordering keep insertion order.
template <std::size_t N, typename F>
NelderMeadResult<N> nelder_mead(F&& f, const std::array<double, N>& x0,
                                const std::array<double, N>& step,
                                const NelderMeadOptions& opts = {}) {
  using Point = std::array<double, N>;
  std::array<Point, N + 1> pts;
  std::array<double, N + 1> vals;
  NelderMeadResult<N> res;

  auto eval = [&](const Point& p) {
    ++res.evaluations;
    return f(p);
  };
  auto affine = [](const Point& a, const Point& b, double t) {
    Point out;
    for (std::size_t i = 0; i < N; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };

  pts[0] = x0;
  for (std::size_t i = 0; i < N; ++i) {
    pts[i + 1] = x0;
    pts[i + 1][i] += step[i];
  }
  for (std::size_t i = 0; i <= N; ++i) vals[i] = eval(pts[i]);

  std::array<std::size_t, N + 1> order;
  auto sort_vertices = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::array<Point, N + 1> p2;
    std::array<double, N + 1> v2;
    for (std::size_t i = 0; i <= N; ++i) {
      p2[i] = pts[order[i]];
      v2[i] = vals[order[i]];
    }
    pts = p2;
    vals = v2;
  };

  sort_vertices();
  while (res.iterations < opts.max_iterations) {
    if (vals[N] - vals[0] < opts.value_tolerance) {
      res.converged = true;
      break;
    }
    ++res.iterations;

    Point centroid{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t d = 0; d < N; ++d) centroid[d] += pts[i][d] / static_cast<double>(N);

    const Point reflected = affine(centroid, pts[N], -opts.reflection);
    const double f_r = eval(reflected);
    if (f_r < vals[0]) {
      const Point expanded = affine(centroid, pts[N], -opts.reflection * opts.expansion);
      const double f_e = eval(expanded);
      if (f_e < f_r) {
        pts[N] = expanded;
        vals[N] = f_e;
      } else {
        pts[N] = reflected;
        vals[N] = f_r;
      }
    } else if (f_r < vals[N - 1]) {
      pts[N] = reflected;
      vals[N] = f_r;
    } else {
      const bool outside = f_r < vals[N];
      const Point contracted = outside
                                   ? affine(centroid, reflected, opts.contraction)
                                   : affine(centroid, pts[N], opts.contraction);
      const double f_c = eval(contracted);
      if (f_c < std::min(f_r, vals[N])) {
        pts[N] = contracted;
        vals[N] = f_c;
      } else {
        for (std::size_t i = 1; i <= N; ++i) {
          pts[i] = affine(pts[0], pts[i], opts.shrink);
          vals[i] = eval(pts[i]);
        }
      }
    }
    sort_vertices();
  }
  if (!res.converged) res.converged = vals[N] - vals[0] < opts.value_tolerance;
  res.x = pts[0];
  res.value = vals[0];
  return res;
}

}  // namespace qdiscord
