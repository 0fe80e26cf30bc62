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
#include <cstdint>
#include <random>
#include <sstream>
#include <vector>

#include "qdiscord/errors.hpp"
#include "qdiscord/linalg.hpp"
#include "qdiscord/tolerances.hpp"

namespace qdiscord {

class BipartiteState;
namespace detail {
BipartiteState make_state_unchecked(ComplexMatrix rho, std::size_t dim_s, std::size_t dim_a);
}

/// Density matrix on H_S (x) H_A. Construction validates Hermiticity, unit
/// trace and positivity; instances are immutable afterwards.
///
/// A single-system state is represented with dim_a == 1.
class BipartiteState {
 public:
  BipartiteState(ComplexMatrix rho, std::size_t dim_s, std::size_t dim_a)
      : rho_(std::move(rho)), dim_s_(dim_s), dim_a_(dim_a) {
    detail::require_bipartite_dims(rho_, dim_s_, dim_a_, "validate");
    require_hermitian(rho_);

    const Complex tr = rho_.trace();
    const double trace_err = std::abs(tr - 1.0);
    if (!(trace_err <= tol::kTrace)) {
      std::ostringstream msg;
      msg << "trace " << tr.real() << (tr.imag() < 0 ? "-" : "+") << std::abs(tr.imag())
          << "i differs from 1 by " << trace_err;
      throw Error(ErrorKind::kNotUnitTrace, msg.str());
    }

    const double min_eig = hermitian_eigenvalues(rho_).back();
    if (min_eig < -tol::kPsd) {
      std::ostringstream msg;
      msg << "minimum eigenvalue " << min_eig << " < -" << tol::kPsd;
      throw Error(ErrorKind::kNotPositive, msg.str());
    }
  }

  std::size_t dim_s() const noexcept { return dim_s_; }
  std::size_t dim_a() const noexcept { return dim_a_; }
  std::size_t dim() const noexcept { return rho_.dim(); }
  const ComplexMatrix& rho() const noexcept { return rho_; }

  ComplexMatrix marginal_s() const { return partial_trace(rho_, dim_s_, dim_a_, Subsystem::kS); }
  ComplexMatrix marginal_a() const { return partial_trace(rho_, dim_s_, dim_a_, Subsystem::kA); }

  BipartiteState reduced_s() const {
    return detail::make_state_unchecked(marginal_s(), dim_s_, 1);
  }
  BipartiteState reduced_a() const {
    return detail::make_state_unchecked(marginal_a(), dim_a_, 1);
  }

 private:
  struct Unchecked {};
  BipartiteState(Unchecked, ComplexMatrix rho, std::size_t dim_s, std::size_t dim_a)
      : rho_(std::move(rho)), dim_s_(dim_s), dim_a_(dim_a) {}
  friend BipartiteState detail::make_state_unchecked(ComplexMatrix, std::size_t, std::size_t);

  ComplexMatrix rho_;
  std::size_t dim_s_ = 0;
  std::size_t dim_a_ = 0;
};

namespace detail {
// For matrices that are density matrices by construction (marginals,
// dephased and conditional states). Symmetrizes away round-off.
inline BipartiteState make_state_unchecked(ComplexMatrix rho, std::size_t dim_s,
                                           std::size_t dim_a) {
  return BipartiteState(BipartiteState::Unchecked{}, hermitian_part(rho), dim_s, dim_a);
}
}  // namespace detail

inline BipartiteState validate(ComplexMatrix rho, std::size_t dim_s, std::size_t dim_a) {
  return BipartiteState(std::move(rho), dim_s, dim_a);
}

/// |psi> = sum_i alpha_i |i>|i> on an n x n system.
inline BipartiteState pre_measurement(std::span<const Complex> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n == 0) throw Error(ErrorKind::kNotNormalized, "no amplitudes");
  const double nrm = norm(amplitudes);
  if (!(std::abs(nrm * nrm - 1.0) <= tol::kNormalization)) {
    std::ostringstream msg;
    msg << "sum |alpha_i|^2 = " << nrm * nrm;
    throw Error(ErrorKind::kNotNormalized, msg.str());
  }
  Ket psi(n * n);
  for (std::size_t i = 0; i < n; ++i) psi[i * n + i] = amplitudes[i];
  return validate(ComplexMatrix::projector(psi), n, n);
}

inline BipartiteState pre_measurement(std::initializer_list<Complex> amplitudes) {
  return pre_measurement(std::span<const Complex>(amplitudes.begin(), amplitudes.size()));
}

namespace detail {
inline void require_unit_interval(double z, const char* family) {
  if (!(z >= 0.0 && z <= 1.0)) {
    std::ostringstream msg;
    msg << family << " parameter z = " << z << " outside [0, 1]";
    throw Error(ErrorKind::kOutOfRange, msg.str());
  }
}
}  // namespace detail

/// The c-not pre-measurement state with coherences scaled by z:
/// 1/2 (|00><00| + |11><11|) + z/2 (|00><11| + |11><00|).
inline BipartiteState decohered_cnot(double z) {
  detail::require_unit_interval(z, "decohered_cnot");
  ComplexMatrix rho(4);
  rho(0, 0) = 0.5;
  rho(3, 3) = 0.5;
  rho(0, 3) = 0.5 * z;
  rho(3, 0) = 0.5 * z;
  return validate(std::move(rho), 2, 2);
}

/// (1 - z)/4 Id + z |psi><psi| with |psi> = (|00> + |11>)/sqrt 2.
inline BipartiteState werner(double z) {
  detail::require_unit_interval(z, "werner");
  // Bell projector entries written out so that werner(1) == decohered_cnot(1) exactly.
  ComplexMatrix rho = ComplexMatrix::identity(4) * Complex((1.0 - z) / 4.0);
  for (std::size_t i : {0u, 3u})
    for (std::size_t j : {0u, 3u}) rho(i, j) += 0.5 * z;
  return validate(std::move(rho), 2, 2);
}

inline BipartiteState bell_state() { return werner(1.0); }

inline BipartiteState product_state(const BipartiteState& s, const BipartiteState& a) {
  return validate(tensor(s.rho(), a.rho()), s.dim(), a.dim());
}

struct ProductTerm {
  double weight = 0.0;
  Ket s;
  Ket a;
};

struct SeparableComponent {
  double weight = 0.0;
  std::vector<ProductTerm> terms;
};

/// rho = sum_i p_i sum_j p_j^(i) |s_j^(i)><s_j^(i)| (x) |a_j^(i)><a_j^(i)|
struct SeparableSpec {
  std::vector<SeparableComponent> components;

  void check() const {
    auto check_simplex = [](auto&& weights, const char* what) {
      double total = 0.0;
      std::size_t count = 0;
      for (double w : weights) {
        if (!(w >= 0.0)) {
          std::ostringstream msg;
          msg << what << " weight " << w << " is negative";
          throw Error(ErrorKind::kInvalidDistribution, msg.str());
        }
        total += w;
        ++count;
      }
      if (count == 0 || !(std::abs(total - 1.0) <= tol::kNormalization)) {
        std::ostringstream msg;
        msg << what << " weights sum to " << total;
        throw Error(ErrorKind::kInvalidDistribution, msg.str());
      }
    };

    std::vector<double> outer;
    std::size_t dim_s = 0, dim_a = 0;
    for (const auto& comp : components) {
      outer.push_back(comp.weight);
      std::vector<double> inner;
      for (const auto& term : comp.terms) {
        inner.push_back(term.weight);
        if (dim_s == 0) {
          dim_s = term.s.size();
          dim_a = term.a.size();
        }
        if (term.s.size() != dim_s || term.a.size() != dim_a || dim_s == 0 || dim_a == 0)
          throw Error(ErrorKind::kDimensionMismatch, "separable spec kets disagree in dimension");
        for (const Ket* ket : {&term.s, &term.a}) {
          const double n = norm(*ket);
          if (!(std::abs(n - 1.0) <= tol::kNormalization)) {
            std::ostringstream msg;
            msg << "ket norm " << n;
            throw Error(ErrorKind::kNotNormalized, msg.str());
          }
        }
      }
      check_simplex(inner, "component");
    }
    check_simplex(outer, "mixture");
  }

  std::size_t dim_s() const { return components.front().terms.front().s.size(); }
  std::size_t dim_a() const { return components.front().terms.front().a.size(); }
};

inline BipartiteState from_separable_spec(const SeparableSpec& spec) {
  spec.check();
  const std::size_t ds = spec.dim_s(), da = spec.dim_a();
  ComplexMatrix rho(ds * da);
  for (const auto& comp : spec.components)
    for (const auto& term : comp.terms)
      rho += ComplexMatrix::projector(tensor(term.s, term.a)) * Complex(comp.weight * term.weight);
  return validate(std::move(rho), ds, da);
}

/// G G^dagger / Tr(G G^dagger) for a complex Gaussian G of size
/// (dim_s dim_a) x (dim_s dim_a). Full rank with probability one.
inline BipartiteState random_state(std::size_t dim_s, std::size_t dim_a, std::uint64_t seed) {
  if (dim_s < 2 || dim_a < 2) {
    std::ostringstream msg;
    msg << "random_state needs dims >= 2, got " << dim_s << " x " << dim_a;
    throw Error(ErrorKind::kOutOfRange, msg.str());
  }
  const std::size_t n = dim_s * dim_a;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate(hermitian_part(rho), dim_s, dim_a);
}

}  // namespace qdiscord
