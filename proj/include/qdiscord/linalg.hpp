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

// Dense complex matrices for small bipartite systems.
//
// Composite index convention, used everywhere in the library: for a space
// H_S (x) H_A the basis vector |s>|a> has index s * dim_a + a, i.e. the A
// index runs fastest.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <vector>

#include "qdiscord/errors.hpp"
#include "qdiscord/tolerances.hpp"

namespace qdiscord {

using Complex = std::complex<double>;
using Ket = std::vector<Complex>;

/// Square, dense, row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
      std::ostringstream msg;
      msg << "matrix of dim " << dim_ << " needs " << dim_ * dim_
          << " entries, got " << entries_.size();
      throw Error(ErrorKind::kDimensionMismatch, msg.str());
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  static ComplexMatrix diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
  }

  /// |v><v|
  static ComplexMatrix projector(std::span<const Complex> ket) {
    ComplexMatrix m(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i)
      for (std::size_t j = 0; j < ket.size(); ++j)
        m(i, j) = ket[i] * std::conj(ket[j]);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& other) {
    require_same_dim(other);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& other) {
    require_same_dim(other);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
  }

  ComplexMatrix& operator*=(Complex scale) {
    for (auto& e : entries_) e *= scale;
    return *this;
  }

  ComplexMatrix& operator/=(Complex scale) {
    for (auto& e : entries_) e /= scale;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator/(ComplexMatrix a, Complex s) { return a /= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void require_same_dim(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) {
      std::ostringstream msg;
      msg << "operand dims " << dim_ << " and " << other.dim_;
      throw Error(ErrorKind::kDimensionMismatch, msg.str());
    }
  }

  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::kDimensionMismatch, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

inline double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const auto& e : m.entries()) sum += std::norm(e);
  return std::sqrt(sum);
}

/// max |M - M^dagger|
inline double hermiticity_defect(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

inline void require_hermitian(const ComplexMatrix& m, double tol = tol::kHermitian) {
  const double defect = hermiticity_defect(m);
  if (!(defect <= tol)) {
    std::ostringstream msg;
    msg << "max|M - M^dagger| = " << defect << " exceeds " << tol;
    throw Error(ErrorKind::kNotHermitian, msg.str());
  }
}

/// (M + M^dagger) / 2
inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return out;
}

struct EigenDecomposition {
  std::vector<double> eigenvalues;   // descending
  std::vector<Ket> eigenvectors;     // eigenvectors[k] pairs with eigenvalues[k]

  ComplexMatrix reconstruct() const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Ket& v = eigenvectors[k];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          out(i, j) += eigenvalues[k] * v[i] * std::conj(v[j]);
    }
    return out;
  }
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Applies the unitary G = D R to A <- G^dagger A G and V <- V G, where D puts
// the phase of a(p,q) on column q and R is the real Jacobi rotation that
// zeroes the (now real) a(p,q).
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = std::conj(apq) / mag;  // e^{-i alpha}

  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c, gpq = s, gqp = -s * phase, gqq = c * phase;
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
///
/// Eigenvalues come back sorted descending; ties keep the order in which the
/// sweeps left them. Each eigenvector is rephased so that its first component
/// of non-negligible magnitude is real and positive.
inline EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
  require_hermitian(m);
  const std::size_t n = m.dim();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = tol::kJacobiOffDiagonal * std::max(1.0, frobenius_norm(a));
  bool converged = detail::off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < tol::kJacobiSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
    converged = detail::off_diagonal_norm(a) <= threshold;
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "off-diagonal norm " << detail::off_diagonal_norm(a) << " after "
        << tol::kJacobiSweeps << " sweeps";
    throw Error(ErrorKind::kNoConvergence, msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    out.eigenvalues.push_back(a(k, k).real());
    Ket vec(n);
    for (std::size_t i = 0; i < n; ++i) vec[i] = v(i, k);
    for (const Complex& c : vec) {
      const double mag = std::abs(c);
      if (mag > 1e-12) {
        const Complex unphase = std::conj(c) / mag;
        for (Complex& x : vec) x *= unphase;
        break;
      }
    }
    out.eigenvectors.push_back(std::move(vec));
  }
  return out;
}

inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigen(m).eigenvalues;
}

/// Kronecker product; entry (i*db + k, j*db + l) = a(i,j) * b(k,l).
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

inline Ket tensor(std::span<const Complex> a, std::span<const Complex> b) {
  Ket out;
  out.reserve(a.size() * b.size());
  for (const Complex& x : a)
    for (const Complex& y : b) out.push_back(x * y);
  return out;
}

enum class Subsystem { kS, kA };

namespace detail {
inline void require_bipartite_dims(const ComplexMatrix& m, std::size_t dim_s, std::size_t dim_a,
                                   const char* op) {
  if (dim_s == 0 || dim_a == 0 || m.dim() != dim_s * dim_a) {
    std::ostringstream msg;
    msg << op << ": matrix dim " << m.dim() << " != " << dim_s << " x " << dim_a;
    throw Error(ErrorKind::kDimensionMismatch, msg.str());
  }
}
}  // namespace detail

/// Reduced matrix on the kept factor.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_s, std::size_t dim_a,
                                   Subsystem keep) {
  detail::require_bipartite_dims(m, dim_s, dim_a, "partial_trace");
  if (keep == Subsystem::kS) {
    ComplexMatrix out(dim_s);
    for (std::size_t s = 0; s < dim_s; ++s)
      for (std::size_t t = 0; t < dim_s; ++t)
        for (std::size_t a = 0; a < dim_a; ++a) out(s, t) += m(s * dim_a + a, t * dim_a + a);
    return out;
  }
  ComplexMatrix out(dim_a);
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t b = 0; b < dim_a; ++b)
      for (std::size_t s = 0; s < dim_s; ++s) out(a, b) += m(s * dim_a + a, s * dim_a + b);
  return out;
}

/// Transpose of the A indices only.
inline ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_s,
                                       std::size_t dim_a) {
  detail::require_bipartite_dims(m, dim_s, dim_a, "partial_transpose");
  ComplexMatrix out(m.dim());
  for (std::size_t s = 0; s < dim_s; ++s)
    for (std::size_t t = 0; t < dim_s; ++t)
      for (std::size_t a = 0; a < dim_a; ++a)
        for (std::size_t b = 0; b < dim_a; ++b)
          out(s * dim_a + a, t * dim_a + b) = m(s * dim_a + b, t * dim_a + a);
  return out;
}

inline double norm(std::span<const Complex> ket) {
  double sum = 0.0;
  for (const Complex& c : ket) sum += std::norm(c);
  return std::sqrt(sum);
}

}  // namespace qdiscord
