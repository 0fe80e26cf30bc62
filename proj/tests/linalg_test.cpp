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

#include <numbers>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "qdiscord/linalg.hpp"
#include "qdiscord/states.hpp"
#include "test_support.hpp"

namespace qdiscord {
namespace {

TEST(HermitianEigen, DiagonalIsSortedDescending) {
  const auto eig = hermitian_eigen(ComplexMatrix::diagonal({3.0, 1.0, 2.0}));
  ASSERT_EQ(eig.eigenvalues.size(), 3u);
  EXPECT_DOUBLE_EQ(eig.eigenvalues[0], 3.0);
  EXPECT_DOUBLE_EQ(eig.eigenvalues[1], 2.0);
  EXPECT_DOUBLE_EQ(eig.eigenvalues[2], 1.0);
  // standard basis vectors, permuted
  EXPECT_EQ(eig.eigenvectors[0], (Ket{1.0, 0.0, 0.0}));
  EXPECT_EQ(eig.eigenvectors[1], (Ket{0.0, 0.0, 1.0}));
  EXPECT_EQ(eig.eigenvectors[2], (Ket{0.0, 1.0, 0.0}));
}

TEST(HermitianEigen, PauliX) {
  ComplexMatrix x(2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  const auto eig = hermitian_eigen(x);
  EXPECT_NEAR(eig.eigenvalues[0], 1.0, 1e-15);
  EXPECT_NEAR(eig.eigenvalues[1], -1.0, 1e-15);
  const double r = 1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(std::abs(eig.eigenvectors[0][0] - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(eig.eigenvectors[0][1] - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(eig.eigenvectors[1][0] - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(eig.eigenvectors[1][1] + r), 0.0, 1e-15);
}

TEST(HermitianEigen, RejectsNonHermitian) {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  try {
    hermitian_eigen(m);
    FAIL() << "expected NotHermitian";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotHermitian);
  }
}

TEST(HermitianEigen, EigenvectorPhaseIsNormalized) {
  const auto eig = hermitian_eigen(testing::random_hermitian(5, 3));
  for (const Ket& v : eig.eigenvectors) {
    const auto first = std::find_if(v.begin(), v.end(), [](Complex c) { return std::abs(c) > 1e-12; });
    ASSERT_NE(first, v.end());
    EXPECT_GT(first->real(), 0.0);
    EXPECT_NEAR(first->imag(), 0.0, 1e-15);
  }
}

TEST(HermitianEigen, DegenerateSpectrumIsDeterministic) {
  const auto a = hermitian_eigen(ComplexMatrix::identity(4) * Complex(0.25));
  const auto b = hermitian_eigen(ComplexMatrix::identity(4) * Complex(0.25));
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.eigenvectors, b.eigenvectors);
}

class RandomHermitian : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RandomHermitian, ReconstructsAndIsOrthonormal) {
  const std::size_t n = GetParam();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexMatrix m = testing::random_hermitian(n, 1000 * n + seed);
    const auto eig = hermitian_eigen(m);
    EXPECT_LT(max_abs_diff(eig.reconstruct(), m), 1e-10);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Complex dot = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          dot += std::conj(eig.eigenvectors[i][k]) * eig.eigenvectors[j][k];
        EXPECT_NEAR(std::abs(dot - (i == j ? 1.0 : 0.0)), 0.0, tol::kReconstruction);
      }
    for (std::size_t k = 1; k < n; ++k) EXPECT_GE(eig.eigenvalues[k - 1], eig.eigenvalues[k]);
  }
}

TEST_P(RandomHermitian, AgreesWithEigenLibrary) {
  const std::size_t n = GetParam();
  const ComplexMatrix m = testing::random_hermitian(n, 77 + n);
  Eigen::MatrixXcd em(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) em(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em);
  const auto ours = hermitian_eigenvalues(m);
  for (std::size_t k = 0; k < n; ++k)
    EXPECT_NEAR(ours[k], solver.eigenvalues()(n - 1 - k), 1e-11);
}

INSTANTIATE_TEST_SUITE_P(Dims, RandomHermitian, ::testing::Values(1, 2, 3, 4, 8, 16));

TEST(HermitianEigen, EightByEightResidual) {
  const ComplexMatrix m = testing::random_hermitian(8, 20261017);
  EXPECT_LT(max_abs_diff(hermitian_eigen(m).reconstruct(), m), 1e-12);
}

TEST(HermitianEigen, UnitTraceSpectrumSumsToOne) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto state = random_state(2, 3, seed);
    double sum = 0.0;
    for (double x : hermitian_eigenvalues(state.rho())) sum += x;
    EXPECT_NEAR(sum, 1.0, 1e-10);
  }
}

TEST(Tensor, IdentityAndIndexOrder) {
  EXPECT_EQ(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
            ComplexMatrix::identity(4));
  EXPECT_EQ(tensor(ComplexMatrix::diagonal({1.0, 0.0}), ComplexMatrix::diagonal({0.0, 1.0})),
            ComplexMatrix::diagonal({0.0, 1.0, 0.0, 0.0}));
}

TEST(Tensor, EntryLayout) {
  const ComplexMatrix a = testing::random_hermitian(2, 1);
  const ComplexMatrix b = testing::random_hermitian(3, 2);
  const ComplexMatrix t = tensor(a, b);
  ASSERT_EQ(t.dim(), 6u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) EXPECT_EQ(t(i * 3 + k, j * 3 + l), a(i, j) * b(k, l));
}

TEST(Tensor, TraceIsMultiplicative) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexMatrix a = testing::random_hermitian(3, seed);
    const ComplexMatrix b = testing::random_hermitian(4, seed + 100);
    EXPECT_NEAR(std::abs(tensor(a, b).trace() - a.trace() * b.trace()), 0.0, 1e-12);
  }
}

TEST(Tensor, AssociativeOnIntegerFixtures) {
  ComplexMatrix a(2), b(2), c(3);
  int v = 1;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      a(i, j) = Complex(v, -v);
      b(i, j) = Complex(2 * v + 1, v);
      ++v;
    }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = Complex(static_cast<double>(i) - j, i * j);
  EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
}

TEST(PartialTrace, BellMarginalIsMaximallyMixed) {
  const auto bell = bell_state();
  const ComplexMatrix half = ComplexMatrix::identity(2) * Complex(0.5);
  EXPECT_LT(max_abs_diff(partial_trace(bell.rho(), 2, 2, Subsystem::kS), half), 1e-15);
  EXPECT_LT(max_abs_diff(partial_trace(bell.rho(), 2, 2, Subsystem::kA), half), 1e-15);
}

TEST(PartialTrace, ProductState) {
  const auto s = random_state(3, 2, 1);
  const ComplexMatrix rho_s = s.marginal_s();  // 3x3
  const auto a = random_state(2, 2, 2);
  const ComplexMatrix rho_a = a.rho();  // 4x4
  const ComplexMatrix prod = tensor(rho_s, rho_a);
  EXPECT_LT(max_abs_diff(partial_trace(prod, 3, 4, Subsystem::kA), rho_a), 1e-15);
  EXPECT_LT(max_abs_diff(partial_trace(prod, 3, 4, Subsystem::kS), rho_s), 1e-15);
}

TEST(PartialTrace, WernerMarginals) {
  const ComplexMatrix half = ComplexMatrix::identity(2) * Complex(0.5);
  const auto w = werner(0.7);
  EXPECT_LT(max_abs_diff(w.marginal_s(), half), 1e-15);
  EXPECT_LT(max_abs_diff(w.marginal_a(), half), 1e-15);
}

TEST(PartialTrace, OfTensorIsScaledFactor) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexMatrix a = testing::random_hermitian(3, seed);
    const ComplexMatrix b = testing::random_hermitian(2, seed + 50);
    EXPECT_LT(max_abs_diff(partial_trace(tensor(a, b), 3, 2, Subsystem::kS), a * b.trace()),
              1e-12);
  }
}

TEST(PartialTrace, PreservesTraceAndChecksDims) {
  const auto s = random_state(2, 3, 9);
  EXPECT_NEAR(std::abs(partial_trace(s.rho(), 2, 3, Subsystem::kA).trace() - 1.0), 0.0, 1e-14);
  try {
    partial_trace(s.rho(), 2, 2, Subsystem::kS);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

TEST(PartialTranspose, BellHasNegativeEigenvalue) {
  const auto pt = partial_transpose(bell_state().rho(), 2, 2);
  EXPECT_NEAR(hermitian_eigenvalues(pt).back(), -0.5, 1e-14);
}

TEST(PartialTranspose, ProductSpectrumUnchanged) {
  const ComplexMatrix prod = tensor(random_state(2, 2, 4).marginal_s(), random_state(2, 2, 5).marginal_a());
  const auto before = hermitian_eigenvalues(prod);
  const auto after = hermitian_eigenvalues(partial_transpose(prod, 2, 2));
  for (std::size_t k = 0; k < before.size(); ++k) EXPECT_NEAR(before[k], after[k], 1e-14);
}

TEST(PartialTranspose, IsAnInvolution) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto s = random_state(2, 3, seed);
    EXPECT_EQ(partial_transpose(partial_transpose(s.rho(), 2, 3), 2, 3), s.rho());
  }
  EXPECT_THROW(partial_transpose(ComplexMatrix(5), 2, 2), Error);
}

}  // namespace
}  // namespace qdiscord
