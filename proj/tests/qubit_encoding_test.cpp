// Copyright 2026 The ecs Authors
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

#include "ecs/qubit_encoding.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ecs/error.hpp"
#include "test_util.hpp"

namespace ecs {
namespace {

using testing::kRandomCases;
using testing::RandomComplex;
using testing::RandomDensityMatrix;

TEST(LogicalBasisTest, OverlapAngle) {
  const LogicalBasis b = MakeBasis(1.0, 1.0);
  EXPECT_NEAR(b.sin_2theta(), std::exp(-2.0), 1e-16);
  EXPECT_NEAR(b.cos_2theta() * b.cos_2theta(), b.n_theta(), 1e-15);
  EXPECT_NEAR(b.cos_theta() * b.cos_theta() - b.sin_theta() * b.sin_theta(),
              b.cos_2theta(), 1e-15);
}

TEST(LogicalBasisTest, BasisIsOrthonormal) {
  for (double alpha : {0.05, 0.3, 1.0, 2.5}) {
    for (double t : {1.0, 0.6, 0.2}) {
      const LogicalBasis b = MakeBasis(alpha, t);
      // Near-parallel components at small alpha cost a few digits.
      EXPECT_NEAR(std::abs(Inner(b.PsiPlus(), b.PsiMinus())), 0.0, 1e-10);
      EXPECT_NEAR(b.PsiPlus().NormSquared(), 1.0, 1e-12);
      EXPECT_NEAR(b.PsiMinus().NormSquared(), 1.0, 1e-12);
    }
  }
}

TEST(LogicalBasisTest, DegenerateAmplitudeIsRejected) {
  try {
    MakeBasis(0.1, 1e-6);
    FAIL() << "expected a degeneracy error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateBasis);
  }
  EXPECT_THROW(MakeBasis(0.0, 1.0), Error);
  EXPECT_THROW(MakeBasis(-1.0, 1.0), Error);
  EXPECT_THROW(MakeBasis(1.0, 0.0), Error);
  EXPECT_THROW(MakeBasis(1.0, 1.5), Error);
  // Small but resolvable amplitudes are still fine.
  EXPECT_NO_THROW(MakeBasis(0.1, 0.05));
}

TEST(BellStateTest, OrthonormalInCoherentForm) {
  const LogicalBasis b = MakeBasis(0.8, 1.0);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const Complex v = Inner(BellState(i, b), BellState(j, b));
      EXPECT_NEAR(std::abs(v - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-12)
          << i << "," << j;
    }
  }
}

TEST(BellStateTest, UnitNormInFockRepresentation) {
  const auto b2 = BellState(2, MakeBasis(0.8, 1.0));
  const FockVector v = ToFock(b2, AutoCutoff(b2));
  EXPECT_NEAR(v.NormSquared(), 1.0, 1e-12);
}

TEST(BellStateTest, SingletIsAntisymmetricCoherentPair) {
  // B4 = (|a,-a> - |-a,a>) / norm.
  const double a = 1.1;
  const LogicalBasis b = MakeBasis(a, 1.0);
  const CoherentSuperposition ref =
      CoherentSuperposition(2, {{1.0, {a, -a}}, {-1.0, {-a, a}}}).Normalized();
  EXPECT_NEAR(std::abs(Inner(ref, BellState(4, b))), 1.0, 1e-12);
}

TEST(FromAmplitudesTest, CoherentKetCoordinates) {
  const LogicalBasis b = MakeBasis(0.6, 1.0);
  const QubitVector q = FromAmplitudes(1.0, 0.0, b);
  EXPECT_NEAR(std::abs(q.plus - b.cos_theta()), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q.minus - b.sin_theta()), 0.0, 1e-15);
  // Inner products with the coherent basis reproduce the coordinates.
  const auto ket = CoherentSuperposition::Coherent(0.6);
  EXPECT_NEAR(std::abs(Inner(b.PsiPlus(), ket) - q.plus), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(Inner(b.PsiMinus(), ket) - q.minus), 0.0, 1e-12);
}

TEST(FromAmplitudesTest, SymmetricStateIsBalanced) {
  const LogicalBasis b = MakeBasis(0.6, 1.0);
  const double c = 1.0 / std::sqrt(2.0 * (1.0 + b.sin_2theta()));
  const QubitVector q = FromAmplitudes(c, c, b);
  EXPECT_NEAR(StateOverlap(q, {M_SQRT1_2, M_SQRT1_2}), 1.0, 1e-15);
  EXPECT_THROW(FromAmplitudes(0.0, 0.0, b), Error);
}

TEST(FromAmplitudesTest, RoundTripThroughCoherentForm) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < kRandomCases; ++i) {
    const LogicalBasis b = MakeBasis(0.2 + 2.0 * std::abs(RandomComplex(rng, 1).real()));
    const QubitVector q =
        QubitVector{RandomComplex(rng, 1.0), RandomComplex(rng, 1.0)}.Normalized();
    const CoherentSuperposition s = ToCoherent(q, b);
    EXPECT_NEAR(s.NormSquared(), 1.0, 1e-10);
    EXPECT_NEAR(StateOverlap(LogicalCoordinates(s, b).Normalized(), q), 1.0,
                1e-12);
  }
}

TEST(LogicalCoordinatesTest, RejectsStatesOutsideSpan) {
  const LogicalBasis b = MakeBasis(1.0);
  try {
    LogicalCoordinates(CoherentSuperposition::Coherent(0.5), b);
    FAIL() << "expected outside-span error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutsideSpan);
  }
}

TEST(LogicalCoordinatesTest, TwoModeBellCoordinates) {
  const LogicalBasis b = MakeBasis(0.9);
  for (int k = 1; k <= 4; ++k) {
    const Vector4c v = LogicalCoordinates(BellState(k, b), b, b);
    EXPECT_NEAR((v - BellVector(k)).norm(), 0.0, 1e-12) << k;
  }
}

TEST(DensityTest, PureBellProjection) {
  const LogicalBasis b = MakeBasis(1.0);
  const TwoQubitDensity rho = ProjectToDensity(DyadFromPure(BellState(4, b)), b, b);
  const Eigen::Vector4d ev = HermitianEigenvalues(rho.matrix());
  EXPECT_NEAR(ev(3), 1.0, 1e-12);
  EXPECT_NEAR(ev.head<3>().cwiseAbs().maxCoeff(), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(rho.matrix().trace() - 1.0), 0.0, 1e-12);
}

TEST(DensityTest, FromMatrixValidates) {
  Matrix4c bad = Matrix4c::Identity() / 4.0;
  bad(0, 1) = 0.1;  // not Hermitian
  EXPECT_THROW(TwoQubitDensity::FromMatrix(bad), Error);
  Matrix4c neg = Matrix4c::Zero();
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(TwoQubitDensity::FromMatrix(neg), Error);
  EXPECT_THROW(TwoQubitDensity::FromMatrix(Matrix4c::Identity()), Error);
}

TEST(PauliTest, MaximallyMixedHasNoCorrelations) {
  const PauliDecomposition p = PauliDecompose(TwoQubitDensity::MaximallyMixed());
  EXPECT_EQ(p.v.norm(), 0.0);
  EXPECT_EQ(p.s.norm(), 0.0);
  EXPECT_EQ(p.t_matrix.norm(), 0.0);
}

TEST(PauliTest, SingletCorrelationMatrix) {
  const PauliDecomposition p =
      PauliDecompose(TwoQubitDensity::FromPure(BellVector(4)));
  EXPECT_NEAR((p.t_matrix + Eigen::Matrix3d::Identity()).norm(), 0.0, 1e-15);
}

TEST(PauliTest, RoundTripOnRandomDensities) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < kRandomCases; ++i) {
    const TwoQubitDensity rho = TwoQubitDensity::FromMatrix(RandomDensityMatrix(rng));
    const Matrix4c back = PauliDecompose(rho).Reconstruct();
    EXPECT_LE((back - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ReducedTest, BellMarginalsAreMixed) {
  for (int k = 1; k <= 4; ++k) {
    const TwoQubitDensity rho = TwoQubitDensity::FromPure(BellVector(k));
    for (int which : {0, 1}) {
      EXPECT_NEAR((Reduced(rho, which) - Matrix2c::Identity() / 2.0).norm(), 0.0,
                  1e-15);
    }
  }
}

TEST(ReducedTest, ProductStateMarginals) {
  const Vector2c a(0.6, Complex(0.0, 0.8));
  const Vector2c b(M_SQRT1_2, -M_SQRT1_2);
  const TwoQubitDensity rho = TwoQubitDensity::FromPure(Kron(a, b));
  EXPECT_NEAR((Reduced(rho, 0) - a * a.adjoint()).norm(), 0.0, 1e-15);
  EXPECT_NEAR((Reduced(rho, 1) - b * b.adjoint()).norm(), 0.0, 1e-15);
}

}  // namespace
}  // namespace ecs
